#pragma once

#include <cstddef>
#include <vector>

#include "bog/numbers.hpp"

namespace bog::lattice {

/// A row of an integer matrix together with the unimodular combination of the
/// original rows that produced it.
struct Row {
  std::vector<Integer> values;
  std::vector<Integer> combo;
};

struct HermiteForm {
  /// Nonzero rows in echelon form: pivots strictly increasing, positive, and
  /// entries above each pivot reduced into [0, pivot).
  std::vector<Row> rows;
  std::vector<std::size_t> pivots;
  /// Rows whose values vanished; their combos span the relation lattice.
  std::vector<Row> relations;
};

/// Row-style Hermite normal form over Z. Every row must have `columns` values
/// and an arbitrary-length combo.
HermiteForm hermite(std::vector<Row> rows, std::size_t columns);

/// Convenience: rows with unit combos.
std::vector<Row> with_unit_combos(const std::vector<std::vector<Integer>>& rows);

/// Echelon basis of the lattice spanned by `vectors`.
std::vector<std::vector<Integer>> echelon_basis(
    const std::vector<std::vector<Integer>>& vectors);

/// Deterministic representative of the coset `base + span(basis)` that is
/// minimal in lexicographic-by-absolute-value order, with signed
/// lexicographic order as the final tie-break. `basis` must be in echelon form.
std::vector<Integer> lex_min_abs(const std::vector<Integer>& base,
                                 const std::vector<std::vector<Integer>>& basis);

}  // namespace bog::lattice
