#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bog/circle.hpp"
#include "bog/rep.hpp"
#include "bog/words.hpp"

namespace bog {

struct ActingWeight {
  CirclePoint weight;
  Count multiplicity;
};

/// M ≅ (L F_m ⊗ L∞(S¹)) *_{1 ⊗ L∞(S¹)} (F_n ⋉ L∞(S¹)) where the i-th acting
/// generator rotates S¹ by its weight.
struct AfpPresentation {
  Count n1{0}, n2{0}, m0{0};
  Count m{0}, n{0};
  std::vector<ActingWeight> acting_weights;

  /// One weight per acting generator, infinite multiplicities truncated.
  std::vector<CirclePoint> expanded_weights(std::size_t truncate) const;
  /// Names g_i for non-real weights and h_i for half turns, in the same order.
  std::vector<std::string> generator_names(std::size_t truncate) const;
  std::string to_string() const;
};

/// Throws NotAlmostPeriodic.
AfpPresentation afp_presentation(const Representation& ap);

struct RelativeCommutant {
  Count m{0};
  /// Rank of ker(F_n -> S¹).
  Count kernel_rank{0};
  /// m + kernel_rank: the rank of G = F_m * ker.
  Count rank{0};
  /// Order of the image of F_n, infinite when the image is infinite.
  Count image_order{1};
  /// Rank of the weight-zero subgroup of all of F_{m+n}.
  Count fixed_point_rank{0};
  std::optional<SchreierWitness> witness;
  std::string to_string() const;
};

/// Throws NotAlmostPeriodic.
RelativeCommutant relative_commutant(const Representation& ap, std::size_t truncate = 64);

struct CocyclePresentation {
  CircleSubgroup K;
  Count commutant_rank{0};
  Tri cocycle_trivial = Tri::Unknown;
  std::string shift_description;
  /// For finite K: the elements k/|K|, their section words and Ω(k, l).
  std::vector<CirclePoint> elements;
  std::vector<Word> sections;
  std::vector<std::vector<Word>> omega;
  std::vector<std::string> generator_names;
  bool identity_verified = false;
};

/// Throws NotAlmostPeriodic.
CocyclePresentation cocycle_presentation(const Representation& ap, std::size_t truncate = 64);

/// Checks Ω(k,l) has weight zero and ω(k,l)ω(k+l,m) = g_k ω(l,m) g_k⁻¹ ω(k,l+m)
/// for ω = Ω⁻¹ over all triples.
bool verify_cocycle(const CocyclePresentation& c, const std::vector<CirclePoint>& weights);

struct NormalizerSummary {
  AfpPresentation presentation;
  RelativeCommutant commutant;
  bool ap_empty = true;
  std::string statement;
};

NormalizerSummary normalizer_summary(const Representation& rep, std::size_t truncate = 64);

}  // namespace bog
