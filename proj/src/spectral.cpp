#include "bog/spectral.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace bog {

namespace {

constexpr std::size_t kIterationCap = 64;
// explicit atom sets larger than this are replaced by their subgroup
constexpr std::size_t kExplicitCap = 4096;

ContinuousClass conv_continuous(ContinuousClass a, bool a_closed, ContinuousClass b,
                                bool b_closed, bool& closed) {
  closed = false;
  if (a == ContinuousClass::LebesgueAC || b == ContinuousClass::LebesgueAC) {
    return ContinuousClass::LebesgueAC;
  }
  if (a == ContinuousClass::SingularAtomless && b == ContinuousClass::SingularAtomless &&
      a_closed && b_closed) {
    closed = true;
    return ContinuousClass::SingularAtomless;
  }
  return ContinuousClass::GenericAtomless;
}

// continuous part of a sum
void join_continuous(MeasureClass& into, ContinuousClass c, bool closed) {
  if (c == ContinuousClass::None) return;
  if (into.continuous == ContinuousClass::None) {
    into.continuous = c;
    into.singular_closed = closed;
  } else if (into.continuous != c) {
    into.continuous = ContinuousClass::GenericAtomless;
    into.singular_closed = false;
  } else {
    into.singular_closed = into.singular_closed && closed;
  }
  if (into.continuous != ContinuousClass::SingularAtomless) into.singular_closed = false;
}

std::vector<CirclePoint> support_points(const MeasureClass& m) {
  return m.support == AtomSupport::Finite ? m.atoms : m.subgroup.basis();
}

MeasureClass on_subgroup(const std::vector<CirclePoint>& generators) {
  MeasureClass m;
  m.support = AtomSupport::AtomsOnSubgroup;
  m.subgroup = generate(generators);
  return m;
}

bool haar_absorbs(const MeasureClass& haar, const MeasureClass& other) {
  if (haar.support != AtomSupport::SubgroupHaar) return false;
  for (const auto& p : support_points(other)) {
    if (!haar.subgroup.contains(p)) return false;
  }
  return other.support != AtomSupport::AtomsOnSubgroup;
}

MeasureClass convolve_atoms(const MeasureClass& a, const MeasureClass& b) {
  if (!a.has_atoms() || !b.has_atoms()) return {};
  if (haar_absorbs(a, b)) return a;
  if (haar_absorbs(b, a)) return b;
  if (a.support == AtomSupport::Finite && b.support == AtomSupport::Finite &&
      a.atoms.size() * b.atoms.size() <= kExplicitCap) {
    std::set<CirclePoint> out;
    for (const auto& p : a.atoms) {
      for (const auto& q : b.atoms) out.insert(p + q);
    }
    return MeasureClass::points({out.begin(), out.end()});
  }
  std::vector<CirclePoint> gens = support_points(a);
  for (const auto& p : support_points(b)) gens.push_back(p);
  return on_subgroup(gens);
}

MeasureClass join_atoms(const MeasureClass& a, const MeasureClass& b) {
  if (!a.has_atoms()) return b;
  if (!b.has_atoms()) return a;
  if (haar_absorbs(a, b)) return a;
  if (haar_absorbs(b, a)) return b;
  if (a.support == AtomSupport::Finite && b.support == AtomSupport::Finite &&
      a.atoms.size() + b.atoms.size() <= kExplicitCap) {
    std::vector<CirclePoint> all = a.atoms;
    all.insert(all.end(), b.atoms.begin(), b.atoms.end());
    return MeasureClass::points(std::move(all));
  }
  std::vector<CirclePoint> gens = support_points(a);
  for (const auto& p : support_points(b)) gens.push_back(p);
  return on_subgroup(gens);
}

// A finite atom set that is a whole subgroup becomes SubgroupHaar.
void normalise(MeasureClass& m) {
  if (m.support != AtomSupport::Finite || m.atoms.empty()) return;
  for (const auto& p : m.atoms) {
    if (!p.is_torsion()) return;
  }
  CircleSubgroup h = generate(m.atoms);
  if (m.atoms.size() > 1 && h.order() == Count(m.atoms.size())) {
    m.support = AtomSupport::SubgroupHaar;
    m.subgroup = h;
    m.atoms.clear();
  }
}

MeasureClass step(const MeasureClass& s, const MeasureClass& m) {
  MeasureClass next = join(MeasureClass::delta(CirclePoint()), convolve(s, m));
  normalise(next);
  return next;
}

}  // namespace

const char* to_string(ContinuousClass c) {
  switch (c) {
    case ContinuousClass::None: return "none";
    case ContinuousClass::LebesgueAC: return "lebesgue_ac";
    case ContinuousClass::SingularAtomless: return "singular_atomless";
    case ContinuousClass::GenericAtomless: return "generic_atomless";
  }
  return "?";
}

const char* to_string(AtomSupport s) {
  switch (s) {
    case AtomSupport::Finite: return "finite";
    case AtomSupport::SubgroupHaar: return "subgroup_haar";
    case AtomSupport::AtomsOnSubgroup: return "atoms_on_subgroup";
  }
  return "?";
}

const char* to_string(FiberCoarse c) {
  switch (c) {
    case FiberCoarse::Atomic: return "atomic";
    case FiberCoarse::Lebesgue: return "lebesgue";
    case FiberCoarse::Singular: return "singular";
    case FiberCoarse::Undetermined: return "undetermined";
  }
  return "?";
}

MeasureClass MeasureClass::delta(const CirclePoint& p) { return points({p}); }

MeasureClass MeasureClass::points(std::vector<CirclePoint> ps) {
  std::sort(ps.begin(), ps.end());
  ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
  MeasureClass m;
  m.atoms = std::move(ps);
  return m;
}

MeasureClass MeasureClass::continuous_only(ContinuousClass c, bool closed) {
  MeasureClass m;
  m.continuous = c;
  m.singular_closed = c == ContinuousClass::SingularAtomless && closed;
  return m;
}

std::string MeasureClass::to_string() const {
  std::ostringstream os;
  switch (support) {
    case AtomSupport::Finite:
      os << "atoms {";
      for (std::size_t i = 0; i < atoms.size(); ++i) os << (i ? ", " : "") << atoms[i].to_literal();
      os << "}";
      break;
    case AtomSupport::SubgroupHaar:
      os << "haar " << subgroup.to_string();
      break;
    case AtomSupport::AtomsOnSubgroup:
      os << "atoms on " << subgroup.to_string();
      break;
  }
  if (continuous != ContinuousClass::None) {
    os << " + " << bog::to_string(continuous);
    if (singular_closed) os << " (closed)";
  }
  if (truncated) os << " [truncated]";
  return os.str();
}

MeasureClass join(const MeasureClass& a, const MeasureClass& b) {
  MeasureClass out = join_atoms(a, b);
  out.continuous = ContinuousClass::None;
  out.singular_closed = false;
  join_continuous(out, a.continuous, a.singular_closed);
  join_continuous(out, b.continuous, b.singular_closed);
  out.truncated = a.truncated || b.truncated;
  return out;
}

MeasureClass convolve(const MeasureClass& a, const MeasureClass& b) {
  MeasureClass out = convolve_atoms(a, b);
  out.continuous = ContinuousClass::None;
  out.singular_closed = false;
  if (a.continuous != ContinuousClass::None && b.continuous != ContinuousClass::None) {
    bool closed = false;
    ContinuousClass c =
        conv_continuous(a.continuous, a.singular_closed, b.continuous, b.singular_closed, closed);
    join_continuous(out, c, closed);
  }
  // translates keep their class
  if (b.has_atoms()) join_continuous(out, a.continuous, a.singular_closed);
  if (a.has_atoms()) join_continuous(out, b.continuous, b.singular_closed);
  out.truncated = a.truncated || b.truncated;
  return out;
}

Closure convolution_closure(const MeasureClass& m) {
  Closure result;
  MeasureClass driver = m;
  std::optional<MeasureClass> atoms_by_shortcut;
  if (m.has_atoms()) {
    CircleSubgroup h = generate(support_points(m));
    if (m.support != AtomSupport::Finite || !h.is_finite() || h.order() > Count(kExplicitCap)) {
      MeasureClass a;
      a.support = h.is_finite() && m.support != AtomSupport::AtomsOnSubgroup
                      ? AtomSupport::SubgroupHaar
                      : AtomSupport::AtomsOnSubgroup;
      a.subgroup = h;
      atoms_by_shortcut = a;
      // translation does not change the continuous class
      driver.support = AtomSupport::Finite;
      driver.atoms = {CirclePoint()};
    }
  }

  MeasureClass s = MeasureClass::delta(CirclePoint());
  bool stable = false;
  while (result.iterations < kIterationCap) {
    MeasureClass next = step(s, driver);
    ++result.iterations;
    if (next == s) {
      stable = true;
      break;
    }
    s = std::move(next);
  }
  if (!stable) {
    CircleSubgroup h = generate(support_points(driver));
    if (driver.support == AtomSupport::Finite && h.is_finite()) {
      // positive powers of a finite group's elements fill the generated subgroup
      MeasureClass a;
      a.support = AtomSupport::SubgroupHaar;
      a.subgroup = h;
      atoms_by_shortcut = a;
      s = step(s, driver);
    } else {
      s.truncated = true;
    }
  }
  if (atoms_by_shortcut) {
    ContinuousClass c = s.continuous;
    bool closed = s.singular_closed;
    s = *atoms_by_shortcut;
    s.continuous = c;
    s.singular_closed = closed;
    result.subgroup_shortcut = true;
  }
  result.measure = s;
  return result;
}

MeasureClass spectral_class(const Representation& rep) {
  std::vector<CirclePoint> pts;
  for (const auto& a : rep.atoms()) {
    pts.push_back(a.eigenvalue);
    pts.push_back(-a.eigenvalue);
  }
  MeasureClass m = MeasureClass::points(std::move(pts));
  for (const auto& w : rep.wm_parts()) {
    switch (w.kind) {
      case WmKind::LeftRegular:
        join_continuous(m, ContinuousClass::LebesgueAC, false);
        break;
      case WmKind::SingularClosed:
        join_continuous(m, ContinuousClass::SingularAtomless, true);
        break;
      case WmKind::AtomlessGeneric:
        join_continuous(m, ContinuousClass::GenericAtomless, false);
        break;
    }
  }
  return m;
}

BimoduleInvariant bimodule_type(const Representation& rep) {
  BimoduleInvariant b;
  Closure c = convolution_closure(spectral_class(rep));
  b.fiber = c.measure;
  b.iterations = c.iterations;
  b.multiplicity_infinite = !rep.atoms().empty();
  return b;
}

FiberCoarse coarse_class(const MeasureClass& fiber) {
  switch (fiber.continuous) {
    case ContinuousClass::None:
      return fiber.has_atoms() ? FiberCoarse::Atomic : FiberCoarse::Undetermined;
    case ContinuousClass::LebesgueAC: return FiberCoarse::Lebesgue;
    case ContinuousClass::SingularAtomless: return FiberCoarse::Singular;
    case ContinuousClass::GenericAtomless: return FiberCoarse::Undetermined;
  }
  return FiberCoarse::Undetermined;
}

std::optional<Separation> separating_invariant(const Representation& r1,
                                               const Representation& r2) {
  if (ap_dimension(r1) < Count(2) || ap_dimension(r2) < Count(2)) return std::nullopt;
  FiberCoarse a = coarse_class(bimodule_type(r1).fiber);
  FiberCoarse b = coarse_class(bimodule_type(r2).fiber);
  if (a == b) return std::nullopt;
  Separation s{"", a, b};
  if (a == FiberCoarse::Atomic || b == FiberCoarse::Atomic) {
    // the fiber of the other one has a continuous part: its bimodule is not a
    // direct sum of finite index bimodules
    s.description = std::string("fiber classes ") + to_string(a) + " vs " + to_string(b) +
                    ": only one bimodule decomposes into finite index bimodules";
    return s;
  }
  if (a == FiberCoarse::Undetermined || b == FiberCoarse::Undetermined) return std::nullopt;
  s.description = std::string("fiber classes ") + to_string(a) + " vs " + to_string(b) +
                  " are not equivalent under any Lebesgue-measure-preserving map";
  return s;
}

}  // namespace bog
