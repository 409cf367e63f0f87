#pragma once

// Indexing follows the convention where c^{(n)} takes n arguments from A and
// sits between n+1 copies of X, so c^{(n)} is the conventional κ_{n+1}. A
// semicircular element has only c^{(1)} nonzero (only κ₂ in the usual
// convention).

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bog/numbers.hpp"
#include "bog/rep.hpp"

namespace bog {

/// block[i] is the block label of point i (0-based); labels are numbered in
/// order of first appearance.
struct NCPartition {
  std::vector<std::uint8_t> block;

  std::size_t size() const { return block.size(); }
  std::size_t block_count() const;
  std::vector<std::vector<std::size_t>> blocks() const;
  bool is_pairing() const;
  /// `{1,3}{2}`, 1-based.
  std::string to_string() const;

  friend bool operator==(const NCPartition&, const NCPartition&) = default;
  friend auto operator<=>(const NCPartition&, const NCPartition&) = default;
};

bool is_noncrossing(const std::vector<std::uint8_t>& block);

/// Throws SizeGuard for n > 16.
std::vector<NCPartition> enumerate_nc(std::size_t n);
/// Visits NC(n) in the order of enumerate_nc without storing it.
void for_each_nc(std::size_t n, const std::function<void(const NCPartition&)>& visit);
Integer catalan(std::size_t n);

/// Elements of the diagonal algebra C^k.
using Diag = std::vector<Rational>;

/// Multilinear maps A^n -> A on the diagonal algebra C^k, stored on basis
/// tuples: values[n][i_1 + k·i_2 + ...] for n = 0..order-1.
struct OVSequence {
  std::size_t k = 1;
  std::vector<std::vector<Diag>> values;

  static OVSequence zero(std::size_t k, std::size_t order);
  std::size_t order() const { return values.size(); }
  std::size_t tuples(std::size_t n) const;
  std::vector<std::size_t> tuple(std::size_t n, std::size_t flat) const;
};

/// Moments φ^{(n)}(e_{i_1}, ..., e_{i_n}) = E(X e_{i_1} X ... e_{i_n} X) from
/// cumulants c^{(n)}, both as OVSequences of the same order. Throws SizeGuard
/// when order > 16 or the tuple count is too large.
OVSequence ov_moments_from_cumulants(const OVSequence& cumulants);
OVSequence ov_cumulants_from_moments(const OVSequence& moments);

/// Scalar versions. `c[n]` is c^{(n)}; the result holds m_0..m_K with
/// m_j = φ(X^j). Missing cumulants count as zero.
std::vector<Rational> moments_from_cumulants(const std::vector<Rational>& c, std::size_t K);
/// `m` holds m_0..m_K; the result holds c^{(0)}..c^{(K-1)}.
std::vector<Rational> cumulants_from_moments(const std::vector<Rational>& m, std::size_t K);

/// m_0..m_K of a semicircular element with c^{(1)} = variance.
std::vector<Rational> semicircular_moments(std::size_t K, const Rational& variance = 1);

/// A-valued semicircular distribution on A = C^k: c^{(1)} = η, a nonnegative
/// k×k matrix acting on diagonal vectors, with a faithful trace.
struct OVDistribution {
  std::size_t k = 1;
  Diag trace;
  std::vector<std::vector<Rational>> eta;

  /// η = τ(·)1 for the given trace (uniform when empty).
  static OVDistribution trace_map(std::size_t k, Diag trace = {});
  /// Throws DimensionMismatch or InvalidDescriptor.
  void validate() const;
  Diag apply_eta(const Diag& d) const;
  Rational tau(const Diag& d) const;
  /// The cumulant sequence (only c^{(1)} nonzero) up to the given order.
  OVSequence cumulants(std::size_t order) const;
};

/// E(X a_1 X ... a_n X). Throws DimensionMismatch.
Diag ov_moment(const OVDistribution& dist, const std::vector<Diag>& args);

struct ReductionCheck {
  /// The B-valued cumulants of X vanish except c^{(1)}(b) = τ_B(b)1.
  bool holds = false;
  /// Whether E_B(X b_1 X ... b_n X) = E_A(X E_A(b_1) X ... E_A(b_n) X) holds
  /// on every tuple checked. It does for m = 1 and fails from order 4 on
  /// when m ≥ 2; the cumulant statement does not depend on it.
  bool moment_display_holds = false;
  std::size_t tuples_checked = 0;
  std::string failure;
  std::string moment_display_failure;
};

/// B-valued moments of a standard semicircular X that is free from the
/// diagonal algebra B = C^m ⊗ C^k with uniform trace, computed from scalar
/// mixed moments through the Kreweras complement.
OVSequence reduction_model_moments(std::size_t k, std::size_t m, std::size_t K);

/// A = C^k, B = C^m ⊗ C^k, X A-valued semicircular with η = τ_A(·)1 and free
/// from B over A. Checks that the B-valued cumulants computed from the model
/// moments are c_A^{(n)}(E_A(b_1), ..., E_A(b_n)), i.e. vanish except
/// c^{(1)}(b) = τ_B(b)1. Throws SizeGuard outside K ≤ 8, k·m ≤ 16 or beyond
/// the work budget.
ReductionCheck verify_cumulant_reduction(std::size_t k, std::size_t m, std::size_t K);

/// a + b√3.
struct QSqrt3 {
  Rational a{0}, b{0};
  QSqrt3 operator+(const QSqrt3& o) const { return {a + o.a, b + o.b}; }
  QSqrt3 operator*(const QSqrt3& o) const { return {a * o.a + 3 * b * o.b, a * o.b + b * o.a}; }
  friend bool operator==(const QSqrt3&, const QSqrt3&) = default;
  double approx() const;
  std::string to_string() const;
};

struct WickValue {
  bool exact = true;
  QSqrt3 value;
  /// Used when !exact; accurate to about 1e-12.
  double approx = 0;
  std::string to_string() const;
};

/// Elements of the algebraic tensor power of the ap representation space: one
/// vector per tensor factor, each of length ap_dimension(rep), coordinates in
/// atom order (two per non-real copy, one per real copy).
struct TensorVector {
  std::vector<Diag> factors;
};

/// δ_{n,m} Π ⟨ξ_i, π(g) η_i⟩. Symbolic angles need a numeric value in
/// `bindings` (UnboundSymbol otherwise). Throws DimensionMismatch.
WickValue wick_pairing(const TensorVector& left, const TensorVector& right,
                       const Representation& rep, const Integer& g,
                       const std::map<std::string, double>& bindings = {});

}  // namespace bog
