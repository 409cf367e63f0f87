#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "bog/numbers.hpp"

namespace bog {

/// Sorted, duplicate-free list of declared irrational angle symbols.
using SymbolTable = std::vector<std::string>;

/// An element of the circle written additively in turns: a rational torsion
/// part in [0, 1) plus an integer combination of opaque irrational symbols.
class CirclePoint {
 public:
  CirclePoint() = default;
  explicit CirclePoint(Rational torsion,
                       std::map<std::string, Integer> symbolic = {});

  static CirclePoint turn(Rational t) { return CirclePoint(std::move(t)); }
  static CirclePoint symbol(const std::string& name, Integer coefficient = 1);

  const Rational& torsion() const { return torsion_; }
  const std::map<std::string, Integer>& symbolic() const { return symbolic_; }

  bool is_identity() const { return torsion_ == 0 && symbolic_.empty(); }
  bool is_torsion() const { return symbolic_.empty(); }
  /// Fixed by conjugation: the identity or the half turn.
  bool is_real() const;

  CirclePoint operator+(const CirclePoint& other) const;
  CirclePoint operator-() const;
  CirclePoint operator-(const CirclePoint& other) const { return *this + (-other); }
  CirclePoint scaled(const Integer& k) const;

  friend bool operator==(const CirclePoint&, const CirclePoint&) = default;
  friend std::strong_ordering operator<=>(const CirclePoint& a,
                                          const CirclePoint& b);

  /// `0`, `1/3`, `sym:t`, `1/3+2*sym:t`, `-sym:t`.
  std::string to_literal() const;

 private:
  Rational torsion_{0};
  std::map<std::string, Integer> symbolic_;
};

CirclePoint multiply(const CirclePoint& a, const CirclePoint& b);
CirclePoint conjugate(const CirclePoint& a);
Count order(const CirclePoint& a);

/// Parses the angle literal syntax. Throws Error(ParseError) with a message
/// relative to the literal; callers add positions.
CirclePoint parse_angle(std::string_view text);

/// Canonical representative of {a, conj(a)}: torsion in [0, 1/2] for pure
/// torsion points, otherwise the one whose first symbolic coefficient is
/// positive.
CirclePoint pair_representative(const CirclePoint& a);

/// A finitely generated subgroup of the circle in canonical form.
///
/// The subgroup is H = T ⊕ F where T is the torsion subgroup of order t and F
/// is free abelian with lifts stored in echelon form on their symbolic
/// coefficients, each lift's torsion reduced into [0, 1/t).
class CircleSubgroup {
 public:
  CircleSubgroup() = default;

  const SymbolTable& symbols() const { return symbols_; }
  const Integer& torsion_order() const { return torsion_order_; }
  const std::vector<CirclePoint>& lifts() const { return lifts_; }

  /// Torsion generator 1/t (when t > 1) followed by the lifts.
  std::vector<CirclePoint> basis() const;
  std::size_t rank() const { return lifts_.size(); }
  bool is_finite() const { return lifts_.empty(); }
  bool is_infinite_cyclic() const { return rank() == 1 && torsion_order_ == 1; }
  Count order() const;

  bool contains(const CirclePoint& p) const;

  /// Elements of a finite subgroup in increasing order. Throws SizeGuard above
  /// 10^6 elements or on infinite subgroups.
  std::vector<CirclePoint> elements() const;

  friend bool operator==(const CircleSubgroup&, const CircleSubgroup&) = default;

  std::string to_string() const;

 private:
  friend CircleSubgroup generate(const std::vector<CirclePoint>& points,
                                 const SymbolTable& symbols);

  SymbolTable symbols_;
  Integer torsion_order_{1};
  std::vector<CirclePoint> lifts_;
};

/// Symbols used by the points, sorted.
SymbolTable symbols_of(const std::vector<CirclePoint>& points);

/// Throws SymbolTableMismatch when a point uses a symbol outside `symbols`.
CircleSubgroup generate(const std::vector<CirclePoint>& points,
                        const SymbolTable& symbols);
CircleSubgroup generate(const std::vector<CirclePoint>& points);

/// Throws SymbolTableMismatch when the ambient tables differ.
bool subgroup_equal(const CircleSubgroup& a, const CircleSubgroup& b);

/// Reusable solver for `express` over a fixed generator list.
class Expresser {
 public:
  explicit Expresser(std::vector<CirclePoint> generators);
  /// Throws NotInSubgroup.
  std::vector<Integer> operator()(const CirclePoint& target) const;
  const std::vector<CirclePoint>& generators() const { return generators_; }

 private:
  std::vector<CirclePoint> generators_;
  SymbolTable symbols_;
  Integer denominator_;
  std::vector<std::vector<Integer>> echelon_;
  std::vector<std::size_t> pivots_;
  std::vector<std::vector<Integer>> combos_;
  std::vector<std::vector<Integer>> kernel_;
};

/// Integer coefficients c with Σ c_j·generators_j = target, minimal in
/// lexicographic-by-absolute-value order. Throws NotInSubgroup.
std::vector<Integer> express(const CirclePoint& target,
                             const std::vector<CirclePoint>& generators);

/// Σ c_j·points_j.
CirclePoint combine(const std::vector<Integer>& coefficients,
                    const std::vector<CirclePoint>& points);

}  // namespace bog
