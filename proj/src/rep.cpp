#include "bog/rep.hpp"

#include <algorithm>
#include <map>

#include "bog/errors.hpp"

namespace bog {

const char* to_string(WmKind kind) {
  switch (kind) {
    case WmKind::LeftRegular: return "left_regular";
    case WmKind::SingularClosed: return "singular_closed";
    case WmKind::AtomlessGeneric: return "atomless";
  }
  return "?";
}

const char* to_string(Tri t) {
  switch (t) {
    case Tri::Yes: return "yes";
    case Tri::No: return "no";
    case Tri::Unknown: return "unknown";
  }
  return "?";
}

WmPart make_wm_part(WmKind kind, Count multiplicity, bool mixing, bool mildly_mixing,
                    bool rigid) {
  if (multiplicity == Count(0)) {
    throw Error(ErrorCode::InvalidMultiplicity, "multiplicity must be at least 1");
  }
  if (kind == WmKind::LeftRegular) {
    if (rigid) {
      throw Error(ErrorCode::ConflictingFlags, "left_regular parts are mixing, never rigid");
    }
    mixing = true;
  }
  if (mixing) mildly_mixing = true;
  if (rigid && mildly_mixing) {
    throw Error(ErrorCode::ConflictingFlags,
                "a rigid part cannot be mixing or mildly mixing");
  }
  return WmPart{kind, multiplicity, mixing, mildly_mixing, rigid};
}

Representation::Representation(std::string name, std::vector<Atom> atoms,
                               std::vector<WmPart> wm)
    : name_(std::move(name)) {
  std::map<CirclePoint, Count> merged;
  for (const Atom& a : atoms) {
    if (a.multiplicity == Count(0)) {
      throw Error(ErrorCode::InvalidMultiplicity, "multiplicity must be at least 1");
    }
    merged[pair_representative(a.eigenvalue)] += a.multiplicity;
  }
  for (auto& [e, m] : merged) atoms_.push_back(Atom{e, m});

  std::map<WmPart, Count> parts;
  for (const WmPart& p : wm) {
    if (p.multiplicity == Count(0)) {
      throw Error(ErrorCode::InvalidMultiplicity, "multiplicity must be at least 1");
    }
    WmPart key = p;
    key.multiplicity = Count(1);
    parts[key] += p.multiplicity;
  }
  for (const auto& [p, m] : parts) {
    wm_.push_back(p);
    wm_.back().multiplicity = m;
  }
}

std::vector<CirclePoint> Representation::eigenvalues() const {
  std::vector<CirclePoint> out;
  for (const Atom& a : atoms_) out.push_back(a.eigenvalue);
  return out;
}

SymbolTable Representation::symbols() const { return symbols_of(eigenvalues()); }

Representation Representation::renamed(std::string name) const {
  Representation r = *this;
  r.name_ = std::move(name);
  return r;
}

Count atom_dimension(const Atom& atom) {
  return atom.multiplicity * Count(atom.eigenvalue.is_real() ? 1 : 2);
}

Count ap_dimension(const Representation& rep) {
  Count d(0);
  for (const Atom& a : rep.atoms()) d += atom_dimension(a);
  return d;
}

Count dimension(const Representation& rep) {
  return rep.wm_parts().empty() ? ap_dimension(rep) : Count::infinity();
}

CircleSubgroup eigenvalue_subgroup(const Representation& rep) {
  return generate(rep.eigenvalues());
}

Count kernel_index(const Representation& rep) {
  if (!rep.wm_parts().empty()) return Count::infinity();
  return eigenvalue_subgroup(rep).order();
}

bool is_faithful(const Representation& rep) { return kernel_index(rep).is_infinite(); }

std::pair<Representation, Representation> decompose(const Representation& rep) {
  return {Representation(rep.name() + ".ap", rep.atoms(), {}),
          Representation(rep.name() + ".wm", {}, rep.wm_parts())};
}

RigidSubspaceTest has_rigid_2dim(const Representation& rep) {
  Count ap = ap_dimension(rep);
  if (Count(2) <= ap) {
    return {Tri::Yes, "almost periodic part of dimension " + ap.to_string() +
                          "; finitely many rotations recur simultaneously"};
  }
  for (const WmPart& p : rep.wm_parts()) {
    if (p.rigid) {
      return {Tri::Yes, std::string("weakly mixing part ") + to_string(p.kind) +
                            " is declared rigid"};
    }
  }
  bool all_mild = std::all_of(rep.wm_parts().begin(), rep.wm_parts().end(),
                              [](const WmPart& p) { return p.mildly_mixing; });
  if (all_mild) return {Tri::No, "almost periodic dimension at most one, weakly mixing part mildly mixing"};
  return {Tri::Unknown, "weakly mixing part without mixing or rigidity flags"};
}

namespace {

std::string eigenvalue_literal(const CirclePoint& e) {
  if (e.is_identity()) return "1";
  if (e == CirclePoint::turn(Rational(1, 2))) return "-1";
  return e.to_literal();
}

}  // namespace

std::string render(const Representation& rep) {
  std::string out;
  for (const auto& s : rep.symbols()) out += "symbol " + s + "\n";
  out += "rep " + (rep.name().empty() ? std::string("_") : rep.name()) + " {\n";
  for (const Atom& a : rep.atoms()) {
    out += "  atom " + eigenvalue_literal(a.eigenvalue) + " mult " +
           a.multiplicity.to_string() + "\n";
  }
  for (const WmPart& p : rep.wm_parts()) {
    out += std::string("  wm ") + to_string(p.kind) + " mult " + p.multiplicity.to_string();
    std::vector<std::string> flags;
    if (p.kind != WmKind::LeftRegular) {
      if (p.mixing) flags.push_back("mixing");
      if (p.mildly_mixing && !p.mixing) flags.push_back("mildly_mixing");
      if (p.rigid) flags.push_back("rigid");
    }
    for (std::size_t i = 0; i < flags.size(); ++i) out += (i ? "," : " flags ") + flags[i];
    out += "\n";
  }
  return out + "}\n";
}

}  // namespace bog
