#include "bog/presentation.hpp"

#include <map>
#include <sstream>

#include "bog/errors.hpp"

namespace bog {

namespace {

// above this many cosets the witness is not materialised; the rank formula is
// still exact
constexpr std::uint64_t kWitnessCap = 4096;
constexpr std::size_t kCocycleCap = 64;

void require_ap(const Representation& ap) {
  if (!ap.is_almost_periodic()) {
    throw Error(ErrorCode::NotAlmostPeriodic,
                "representation '" + ap.name() + "' has weakly mixing parts");
  }
}

std::string free_group(const Count& rank) {
  return rank.is_infinite() ? "F_∞" : "F_" + rank.to_string();
}

}  // namespace

std::vector<CirclePoint> AfpPresentation::expanded_weights(std::size_t truncate) const {
  std::vector<CirclePoint> out;
  for (const auto& w : acting_weights) {
    std::uint64_t copies = w.multiplicity.is_infinite() ? truncate : w.multiplicity.value();
    out.insert(out.end(), copies, w.weight);
  }
  return out;
}

std::vector<std::string> AfpPresentation::generator_names(std::size_t truncate) const {
  std::vector<std::string> out;
  std::size_t g = 0, h = 0;
  for (const auto& w : expanded_weights(truncate)) {
    out.push_back(w.is_real() ? "h" + std::to_string(++h) : "g" + std::to_string(++g));
  }
  return out;
}

std::string AfpPresentation::to_string() const {
  std::ostringstream os;
  os << "(L " << free_group(m) << " ⊗ L∞(S¹)) *_{1 ⊗ L∞(S¹)} (" << free_group(n)
     << " ⋉ L∞(S¹))";
  if (!acting_weights.empty()) {
    os << ", acting weights [";
    for (std::size_t i = 0; i < acting_weights.size(); ++i) {
      if (i) os << ", ";
      os << acting_weights[i].weight.to_literal();
      if (acting_weights[i].multiplicity != Count(1)) {
        os << " x" << acting_weights[i].multiplicity.to_string();
      }
    }
    os << "]";
  }
  return os.str();
}

AfpPresentation afp_presentation(const Representation& ap) {
  require_ap(ap);
  AfpPresentation p;
  std::vector<ActingWeight> half_turns;
  for (const auto& a : ap.atoms()) {
    if (a.eigenvalue.is_identity()) {
      p.m0 += a.multiplicity;
    } else if (a.eigenvalue.is_real()) {
      p.n2 += a.multiplicity;
      half_turns.push_back({a.eigenvalue, a.multiplicity});
    } else {
      p.n1 += a.multiplicity;
      p.acting_weights.push_back({a.eigenvalue, a.multiplicity});
    }
  }
  p.acting_weights.insert(p.acting_weights.end(), half_turns.begin(), half_turns.end());
  p.m = p.n1 + p.m0;
  p.n = p.n1 + p.n2;
  return p;
}

std::string RelativeCommutant::to_string() const {
  std::ostringstream os;
  os << "G = " << free_group(m) << " * ker, rank " << rank.to_string()
     << " (kernel rank " << kernel_rank.to_string() << ", image order "
     << image_order.to_string() << ")";
  return os.str();
}

RelativeCommutant relative_commutant(const Representation& ap, std::size_t truncate) {
  AfpPresentation p = afp_presentation(ap);
  RelativeCommutant rc;
  rc.m = p.m;
  std::vector<CirclePoint> distinct;
  for (const auto& w : p.acting_weights) distinct.push_back(w.weight);
  CircleSubgroup image = generate(distinct);
  Count total = p.m + p.n;

  if (p.n == Count(0)) {
    rc.kernel_rank = 0;
    rc.image_order = 1;
  } else if (image.is_finite()) {
    std::uint64_t T = image.torsion_order().convert_to<std::uint64_t>();
    rc.image_order = T;
    if (p.n.is_infinite()) {
      rc.kernel_rank = Count::infinity();
    } else {
      rc.kernel_rank = 1 + T * (p.n.value() - 1);
      if (T * p.n.value() <= kWitnessCap) {
        rc.witness = schreier_rank(p.expanded_weights(truncate));
      }
    }
  } else {
    rc.image_order = Count::infinity();
    rc.kernel_rank = p.n == Count(1) ? Count(0) : Count::infinity();
  }
  rc.rank = rc.m + rc.kernel_rank;

  // Weight-zero subgroup of F_{m+n}: the kernel of the map that also sends the
  // m commuting generators to 0.
  if (total == Count(0)) {
    rc.fixed_point_rank = 0;
  } else if (rc.image_order.is_infinite()) {
    rc.fixed_point_rank = total == Count(1) ? Count(0) : Count::infinity();
  } else if (total.is_infinite()) {
    rc.fixed_point_rank = Count::infinity();
  } else {
    rc.fixed_point_rank = 1 + rc.image_order.value() * (total.value() - 1);
  }
  return rc;
}

CocyclePresentation cocycle_presentation(const Representation& ap, std::size_t truncate) {
  require_ap(ap);
  CocyclePresentation c;
  c.K = eigenvalue_subgroup(ap);
  c.commutant_rank = relative_commutant(ap, truncate).rank;
  AfpPresentation p = afp_presentation(ap);
  Count dim = p.m + p.n;
  if (c.K.order() == Count(1)) {
    c.cocycle_trivial = Tri::Yes;
    c.shift_description = "L " + free_group(dim) + " ⊗ L∞(S¹)";
    c.identity_verified = true;
    return c;
  }
  if (c.K.is_infinite_cyclic()) {
    c.cocycle_trivial = Tri::Yes;
    c.shift_description = "Z ⋉ (L F_∞ ⊗ L∞(S¹)), the generator shifting the free basis g1^k x g1^-k of G and rotating S¹ by " +
                          c.K.lifts().front().to_literal();
    return c;
  }
  if (!c.K.is_finite()) {
    c.cocycle_trivial = Tri::Unknown;
    c.shift_description = c.K.to_string() + " ⋉_Ω (L G ⊗ L∞(S¹)), Ω not normalised";
    return c;
  }

  c.cocycle_trivial = Tri::Unknown;
  c.shift_description = c.K.to_string() + " ⋉_Ω (L G ⊗ L∞(S¹))";
  if (c.K.order() > Count(kCocycleCap)) return c;

  // BFS paths in the coset graph are the shortlex-least positive words
  std::vector<CirclePoint> weights = p.expanded_weights(truncate);
  c.generator_names = p.generator_names(truncate);
  SchreierWitness tree = schreier_rank(weights);
  c.elements = tree.vertices;
  std::size_t T = tree.order;
  for (std::size_t k = 0; k < T; ++k) c.sections.push_back(tree.tree_path(k));
  c.omega.assign(T, std::vector<Word>(T));
  for (std::size_t k = 0; k < T; ++k) {
    for (std::size_t l = 0; l < T; ++l) {
      c.omega[k][l] = c.sections[(k + l) % T] * c.sections[l].inverse() * c.sections[k].inverse();
    }
  }
  c.identity_verified = verify_cocycle(c, weights);
  return c;
}

bool verify_cocycle(const CocyclePresentation& c, const std::vector<CirclePoint>& weights) {
  std::size_t T = c.sections.size();
  if (T == 0 || c.omega.size() != T) return false;
  WeightedBasis basis;
  basis.weights = weights;
  basis.names.resize(weights.size());
  for (std::size_t k = 0; k < T; ++k) {
    if (basis.weight(c.sections[k]) != c.elements[k]) return false;
    for (std::size_t l = 0; l < T; ++l) {
      if (!basis.weight(c.omega[k][l]).is_identity()) return false;
    }
  }
  auto w = [&](std::size_t k, std::size_t l) { return c.omega[k % T][l % T].inverse(); };
  for (std::size_t k = 0; k < T; ++k) {
    for (std::size_t l = 0; l < T; ++l) {
      for (std::size_t m = 0; m < T; ++m) {
        Word lhs = w(k, l) * w(k + l, m);
        Word rhs = c.sections[k] * w(l, m) * c.sections[k].inverse() * w(k, l + m);
        if (lhs != rhs) return false;
      }
    }
  }
  return true;
}

NormalizerSummary normalizer_summary(const Representation& rep, std::size_t truncate) {
  NormalizerSummary s;
  Representation ap = decompose(rep).first;
  s.presentation = afp_presentation(ap);
  s.commutant = relative_commutant(ap, truncate);
  s.ap_empty = ap.is_empty();
  if (s.ap_empty) {
    s.statement = "normaliser = quasi-normaliser = A_π";
  } else {
    s.statement = "normaliser = quasi-normaliser = M_ap = " + s.presentation.to_string() +
                  "; A_π' ∩ M = L G ⊗ A_π with " + s.commutant.to_string();
  }
  return s;
}

}  // namespace bog
