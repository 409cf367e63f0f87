#include "bog/lattice.hpp"

#include <algorithm>
#include <optional>
#include <utility>

namespace bog::lattice {

namespace {

void axpy(Row& target, const Integer& factor, const Row& source) {
  for (std::size_t i = 0; i < target.values.size(); ++i) {
    target.values[i] -= factor * source.values[i];
  }
  for (std::size_t i = 0; i < target.combo.size(); ++i) {
    target.combo[i] -= factor * source.combo[i];
  }
}

void negate(Row& row) {
  for (auto& v : row.values) v = -v;
  for (auto& v : row.combo) v = -v;
}

}  // namespace

HermiteForm hermite(std::vector<Row> rows, std::size_t columns) {
  HermiteForm form;
  std::size_t r = 0;
  for (std::size_t c = 0; c < columns && r < rows.size(); ++c) {
    bool has_pivot = false;
    while (true) {
      std::optional<std::size_t> best;
      for (std::size_t i = r; i < rows.size(); ++i) {
        if (rows[i].values[c] == 0) continue;
        if (!best || abs(rows[i].values[c]) < abs(rows[*best].values[c])) {
          best = i;
        }
      }
      if (!best) break;
      has_pivot = true;
      std::swap(rows[r], rows[*best]);
      bool cleared = true;
      for (std::size_t i = r + 1; i < rows.size(); ++i) {
        if (rows[i].values[c] == 0) continue;
        Integer q = floor_div(rows[i].values[c], rows[r].values[c]);
        axpy(rows[i], q, rows[r]);
        if (rows[i].values[c] != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (!has_pivot) continue;
    if (rows[r].values[c] < 0) negate(rows[r]);
    for (std::size_t i = 0; i < r; ++i) {
      Integer q = floor_div(rows[i].values[c], rows[r].values[c]);
      if (q != 0) axpy(rows[i], q, rows[r]);
    }
    form.pivots.push_back(c);
    ++r;
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i < r) {
      form.rows.push_back(std::move(rows[i]));
    } else {
      form.relations.push_back(std::move(rows[i]));
    }
  }
  return form;
}

std::vector<Row> with_unit_combos(const std::vector<std::vector<Integer>>& rows) {
  std::vector<Row> out;
  out.reserve(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    Row row{rows[i], std::vector<Integer>(rows.size(), 0)};
    row.combo[i] = 1;
    out.push_back(std::move(row));
  }
  return out;
}

std::vector<std::vector<Integer>> echelon_basis(
    const std::vector<std::vector<Integer>>& vectors) {
  if (vectors.empty()) return {};
  std::size_t columns = vectors.front().size();
  std::vector<Row> rows;
  for (const auto& v : vectors) rows.push_back(Row{v, {}});
  HermiteForm form = hermite(std::move(rows), columns);
  std::vector<std::vector<Integer>> out;
  for (auto& row : form.rows) out.push_back(std::move(row.values));
  return out;
}

namespace {

bool lex_abs_less(const std::vector<Integer>& a, const std::vector<Integer>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    Integer aa = abs(a[i]), bb = abs(b[i]);
    if (aa != bb) return aa < bb;
  }
  return a < b;
}

struct LexSearch {
  const std::vector<std::vector<Integer>>& basis;
  std::vector<std::size_t> pivots;
  std::optional<std::vector<Integer>> best;

  // True when the absolute values on [0, end) already exceed the best found.
  bool worse_prefix(const std::vector<Integer>& current, std::size_t end) const {
    if (!best) return false;
    for (std::size_t i = 0; i < end; ++i) {
      Integer a = abs(current[i]), b = abs((*best)[i]);
      if (a != b) return a > b;
    }
    return false;
  }

  void run(std::size_t j, const std::vector<Integer>& current) {
    if (worse_prefix(current, j == basis.size() ? current.size() : pivots[j])) return;
    if (j == basis.size()) {
      if (!best || lex_abs_less(current, *best)) best = current;
      return;
    }
    std::size_t col = pivots[j];
    const Integer& p = basis[j][col];
    // shift so that current[col] + t*p lands in [0, p)
    Integer t0 = -floor_div(current[col], p);
    Integer rem = current[col] + t0 * p;
    std::vector<Integer> options;
    if (rem == 0 || 2 * rem < p) {
      options.push_back(t0);
    } else if (2 * rem > p) {
      options.push_back(t0 - 1);
    } else {
      options.push_back(t0);
      options.push_back(t0 - 1);
    }
    for (const Integer& t : options) {
      std::vector<Integer> next = current;
      for (std::size_t i = 0; i < next.size(); ++i) next[i] += t * basis[j][i];
      run(j + 1, next);
    }
  }
};

}  // namespace

std::vector<Integer> lex_min_abs(const std::vector<Integer>& base,
                                 const std::vector<std::vector<Integer>>& basis) {
  LexSearch search{basis, {}, std::nullopt};
  for (const auto& row : basis) {
    std::size_t c = 0;
    while (c < row.size() && row[c] == 0) ++c;
    search.pivots.push_back(c);
  }
  search.run(0, base);
  return *search.best;
}

}  // namespace bog::lattice
