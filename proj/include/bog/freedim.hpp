#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bog/numbers.hpp"
#include "bog/rep.hpp"

namespace bog {

/// One summand of a finite direct sum of diffuse hyperfinite algebras,
/// interpolated free group factors and matrix algebras, with its trace weight.
struct Summand {
  enum class Kind { Diffuse, Interpolated, Matrix };
  Kind kind = Kind::Diffuse;
  ExtRational parameter;  // r for Interpolated
  std::uint64_t size = 1;  // n for Matrix
  Rational weight{1};

  std::string to_string() const;
};

struct FactorDescriptor {
  std::vector<Summand> summands;

  static FactorDescriptor diffuse();
  static FactorDescriptor interpolated(ExtRational r);
  /// C^T as T one-dimensional blocks of weight 1/T.
  static FactorDescriptor abelian(std::uint64_t t);
  /// T copies of `one` scaled by 1/T, i.e. one ⊗ C^T.
  static FactorDescriptor tensor_abelian(const FactorDescriptor& one, std::uint64_t t);

  /// Throws InvalidDescriptor unless weights are positive and sum to 1,
  /// interpolated parameters exceed 1 and matrix sizes are positive.
  void validate() const;
  std::string to_string() const;
};

/// `lfr(4/3)@1`, `mat(3)@1/2 + diffuse@1/2`, `lfr(inf)@1`. Throws ParseError
/// or InvalidDescriptor.
FactorDescriptor parse_descriptor(std::string_view text);

/// d = 1 + Σ t²(r - 1) - Σ (w/n)².
ExtRational free_dimension(const FactorDescriptor& m);

/// d1 + d2 - d. Throws IndeterminateInfinity when d is infinite.
ExtRational afp_free_dimension(const ExtRational& d1, const ExtRational& d2,
                               const ExtRational& d_amalgam);

enum class AfpShape {
  /// (L Z ⊗ C^T) *_{C^T} (L∞[0,1] ⊗ M_T)
  DiffuseCrossMatrix,
  /// (L F_n ⊗ C^T) *_{C^T} L F_{1 + 1/T}
  FreeCrossInterpolated,
  /// (L F_n ⊗ C^2) *_{C^2} (M_2 ⊗ L∞[0,1])
  FreeCrossMatrixDiffuse,
  Custom,
};

struct AfpPattern {
  AfpShape shape = AfpShape::Custom;
  std::uint64_t T = 0;
  Count n{0};
  /// A central projection of the amalgam declared central on both sides.
  bool shared_central_projection = false;

  std::string to_string() const;
};

/// Whether the triple center intersection is trivial for the pattern. Throws
/// UnsupportedPattern outside the table.
bool factoriality_gate(const AfpPattern& pattern);

/// The amalgamated free product computation of the parameter.
struct FreeDimensionRoute {
  AfpPattern pattern;
  FactorDescriptor left, right, amalgam;
  ExtRational d1, d2, d, r;
};

/// Route for the normal form with kernel index T >= 2 and dimension >= 2.
FreeDimensionRoute periodic_route(std::uint64_t T, const Count& dim);

enum class PeriodicShape {
  /// zero representation: A = M = L∞[0,1]
  Zero,
  /// trivial representation: 1 ⊗ L∞ ⊂ L F_dim ⊗ L∞
  Trivial,
  /// the one-dimensional sign representation
  OneDimNontrivial,
  /// C^T ⊗ L∞ ⊂ L F_r ⊗ L∞
  Interpolated,
};

const char* to_string(PeriodicShape shape);

struct PeriodicForm {
  Count T{1};
  Count dim{0};
  std::optional<ExtRational> r;
  PeriodicShape shape = PeriodicShape::Zero;
  std::string inclusion;
  std::optional<FreeDimensionRoute> route;
};

/// r = 1 + (dim - 1)/T, cross-checked against the free-dimension route.
/// Throws NotPeriodic for faithful representations or weakly mixing parts.
PeriodicForm periodic_invariant(const Representation& rep);

/// The same computation from the pair (T, dim).
PeriodicForm periodic_form(std::uint64_t T, const Count& dim);

}  // namespace bog
