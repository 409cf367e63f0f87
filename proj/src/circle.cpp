#include "bog/circle.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "bog/errors.hpp"
#include "bog/lattice.hpp"

namespace bog {

CirclePoint::CirclePoint(Rational torsion, std::map<std::string, Integer> symbolic)
    : torsion_(frac(torsion)), symbolic_(std::move(symbolic)) {
  std::erase_if(symbolic_, [](const auto& kv) { return kv.second == 0; });
}

CirclePoint CirclePoint::symbol(const std::string& name, Integer coefficient) {
  return CirclePoint(Rational(0), {{name, std::move(coefficient)}});
}

bool CirclePoint::is_real() const {
  return symbolic_.empty() && (torsion_ == 0 || torsion_ == Rational(1, 2));
}

CirclePoint CirclePoint::operator+(const CirclePoint& other) const {
  std::map<std::string, Integer> sum = symbolic_;
  for (const auto& [name, coefficient] : other.symbolic_) sum[name] += coefficient;
  return CirclePoint(torsion_ + other.torsion_, std::move(sum));
}

CirclePoint CirclePoint::operator-() const {
  std::map<std::string, Integer> neg;
  for (const auto& [name, coefficient] : symbolic_) neg[name] = -coefficient;
  return CirclePoint(-torsion_, std::move(neg));
}

CirclePoint CirclePoint::scaled(const Integer& k) const {
  std::map<std::string, Integer> out;
  for (const auto& [name, coefficient] : symbolic_) out[name] = coefficient * k;
  return CirclePoint(torsion_ * Rational(k), std::move(out));
}

std::strong_ordering operator<=>(const CirclePoint& a, const CirclePoint& b) {
  if (a.torsion_ != b.torsion_) {
    return a.torsion_ < b.torsion_ ? std::strong_ordering::less
                                   : std::strong_ordering::greater;
  }
  auto ia = a.symbolic_.begin();
  auto ib = b.symbolic_.begin();
  for (; ia != a.symbolic_.end() && ib != b.symbolic_.end(); ++ia, ++ib) {
    if (ia->first != ib->first) return ia->first <=> ib->first;
    if (ia->second != ib->second) {
      return ia->second < ib->second ? std::strong_ordering::less
                                     : std::strong_ordering::greater;
    }
  }
  if (ia == a.symbolic_.end() && ib == b.symbolic_.end()) {
    return std::strong_ordering::equal;
  }
  return ia == a.symbolic_.end() ? std::strong_ordering::less
                                 : std::strong_ordering::greater;
}

std::string CirclePoint::to_literal() const {
  std::string out;
  if (torsion_ != 0) out = bog::to_string(torsion_);
  for (const auto& [name, coefficient] : symbolic_) {
    Integer magnitude = abs(coefficient);
    if (coefficient < 0) {
      out += '-';
    } else if (!out.empty()) {
      out += '+';
    }
    if (magnitude != 1) out += bog::to_string(magnitude) + "*";
    out += "sym:" + name;
  }
  return out.empty() ? "0" : out;
}

CirclePoint multiply(const CirclePoint& a, const CirclePoint& b) { return a + b; }

CirclePoint conjugate(const CirclePoint& a) { return -a; }

Count order(const CirclePoint& a) {
  if (!a.is_torsion()) return Count::infinity();
  return Count(denominator(a.torsion()).convert_to<std::uint64_t>());
}

namespace {

[[noreturn]] void bad_angle(const std::string& message) {
  throw Error(ErrorCode::ParseError, message);
}

bool is_identifier(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) {
    return false;
  }
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

bool is_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c));
  });
}

}  // namespace

CirclePoint parse_angle(std::string_view text) {
  if (text.empty()) bad_angle("empty angle literal");
  CirclePoint result;
  bool saw_torsion = false;
  std::size_t pos = 0;
  while (pos < text.size()) {
    bool negative = false;
    if (text[pos] == '+' || text[pos] == '-') {
      negative = text[pos] == '-';
      ++pos;
    } else if (pos != 0) {
      bad_angle("expected '+' or '-' in angle literal");
    }
    std::size_t end = text.find_first_of("+-", pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view term = text.substr(pos, end - pos);
    if (term.empty()) bad_angle("empty term in angle literal");
    pos = end;

    std::size_t sym = term.find("sym:");
    if (sym == std::string_view::npos) {
      if (saw_torsion) bad_angle("more than one rational term in angle literal");
      saw_torsion = true;
      std::size_t slash = term.find('/');
      bool ok = slash == std::string_view::npos
                    ? is_digits(term)
                    : is_digits(term.substr(0, slash)) && is_digits(term.substr(slash + 1));
      auto q = ok ? parse_rational(term) : std::nullopt;
      if (!q) bad_angle("malformed rational '" + std::string(term) + "'");
      if (negative) *q = -*q;
      if (*q < 0 || *q >= 1) {
        bad_angle("angle " + std::string(negative ? "-" : "") + std::string(term) +
                  " is outside [0,1)");
      }
      result = result + CirclePoint::turn(*q);
      continue;
    }
    Integer coefficient = 1;
    if (sym != 0) {
      std::string_view multiplier = term.substr(0, sym);
      if (multiplier.back() != '*' || !is_digits(multiplier.substr(0, sym - 1))) {
        bad_angle("malformed multiplier '" + std::string(multiplier) + "'");
      }
      coefficient = Integer(std::string(multiplier.substr(0, sym - 1)));
    }
    std::string_view name = term.substr(sym + 4);
    if (!is_identifier(name)) bad_angle("malformed symbol name '" + std::string(name) + "'");
    if (negative) coefficient = -coefficient;
    result = result + CirclePoint::symbol(std::string(name), coefficient);
  }
  return result;
}

CirclePoint pair_representative(const CirclePoint& a) {
  if (a.is_torsion()) return a.torsion() <= Rational(1, 2) ? a : -a;
  return a.symbolic().begin()->second > 0 ? a : -a;
}

// ---------------------------------------------------------------------------

std::vector<CirclePoint> CircleSubgroup::basis() const {
  std::vector<CirclePoint> out;
  if (torsion_order_ > 1) out.push_back(CirclePoint::turn(Rational(Integer(1), torsion_order_)));
  out.insert(out.end(), lifts_.begin(), lifts_.end());
  return out;
}

Count CircleSubgroup::order() const {
  if (!is_finite()) return Count::infinity();
  return Count(torsion_order_.convert_to<std::uint64_t>());
}

bool CircleSubgroup::contains(const CirclePoint& p) const {
  for (const auto& [name, coefficient] : p.symbolic()) {
    if (!std::binary_search(symbols_.begin(), symbols_.end(), name)) return false;
  }
  CirclePoint residual = p;
  for (const CirclePoint& lift : lifts_) {
    // lifts are echelon on symbols: the first symbol of each lift is its pivot
    const auto& [pivot, value] = *lift.symbolic().begin();
    auto it = residual.symbolic().find(pivot);
    if (it == residual.symbolic().end()) continue;
    if (it->second % value != 0) return false;
    residual = residual - lift.scaled(it->second / value);
  }
  if (!residual.is_torsion()) return false;
  return denominator(residual.torsion() * Rational(torsion_order_)) == 1;
}

std::vector<CirclePoint> CircleSubgroup::elements() const {
  if (!is_finite() || torsion_order_ > 1000000) {
    throw Error(ErrorCode::SizeGuard, "subgroup too large to enumerate");
  }
  std::vector<CirclePoint> out;
  auto t = torsion_order_.convert_to<long>();
  for (long k = 0; k < t; ++k) out.push_back(CirclePoint::turn(Rational(k, t)));
  return out;
}

std::string CircleSubgroup::to_string() const {
  auto b = basis();
  if (b.empty()) return "<0>";
  std::string out = "<";
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (i) out += ", ";
    out += b[i].to_literal();
  }
  return out + ">";
}

SymbolTable symbols_of(const std::vector<CirclePoint>& points) {
  std::set<std::string> names;
  for (const auto& p : points) {
    for (const auto& kv : p.symbolic()) names.insert(kv.first);
  }
  return {names.begin(), names.end()};
}

namespace {

void check_symbols(const std::vector<CirclePoint>& points, const SymbolTable& symbols) {
  for (const auto& p : points) {
    for (const auto& kv : p.symbolic()) {
      if (!std::binary_search(symbols.begin(), symbols.end(), kv.first)) {
        throw Error(ErrorCode::SymbolTableMismatch,
                    "symbol '" + kv.first + "' is not registered");
      }
    }
  }
}

Integer common_denominator(const std::vector<CirclePoint>& points) {
  Integer d = 1;
  for (const auto& p : points) d = lcm(d, denominator(p.torsion()));
  return d;
}

std::vector<Integer> coordinates(const CirclePoint& p, const SymbolTable& symbols,
                                 const Integer& d) {
  std::vector<Integer> v;
  v.reserve(symbols.size() + 1);
  for (const auto& name : symbols) {
    auto it = p.symbolic().find(name);
    v.push_back(it == p.symbolic().end() ? Integer(0) : it->second);
  }
  v.push_back(numerator(p.torsion() * Rational(d)));
  return v;
}

// Rows: one per point plus the modulus row (0, ..., 0, d).
lattice::HermiteForm augmented_form(const std::vector<CirclePoint>& points,
                                    const SymbolTable& symbols, const Integer& d) {
  std::vector<std::vector<Integer>> rows;
  for (const auto& p : points) rows.push_back(coordinates(p, symbols, d));
  std::vector<Integer> modulus(symbols.size() + 1, 0);
  modulus.back() = d;
  rows.push_back(std::move(modulus));
  return lattice::hermite(lattice::with_unit_combos(rows), symbols.size() + 1);
}

}  // namespace

CircleSubgroup generate(const std::vector<CirclePoint>& points,
                        const SymbolTable& symbols) {
  check_symbols(points, symbols);
  CircleSubgroup g;
  g.symbols_ = symbols;
  Integer d = common_denominator(points);
  auto form = augmented_form(points, symbols, d);
  for (std::size_t r = 0; r < form.rows.size(); ++r) {
    const auto& values = form.rows[r].values;
    if (form.pivots[r] == symbols.size()) {
      g.torsion_order_ = d / values.back();
      continue;
    }
    std::map<std::string, Integer> symbolic;
    for (std::size_t c = 0; c < symbols.size(); ++c) symbolic[symbols[c]] = values[c];
    g.lifts_.emplace_back(Rational(values.back(), d), std::move(symbolic));
  }
  return g;
}

CircleSubgroup generate(const std::vector<CirclePoint>& points) {
  return generate(points, symbols_of(points));
}

bool subgroup_equal(const CircleSubgroup& a, const CircleSubgroup& b) {
  if (a.symbols() != b.symbols()) {
    throw Error(ErrorCode::SymbolTableMismatch, "subgroups use different symbol tables");
  }
  return a == b;
}

Expresser::Expresser(std::vector<CirclePoint> generators)
    : generators_(std::move(generators)),
      symbols_(symbols_of(generators_)),
      denominator_(common_denominator(generators_)) {
  auto form = augmented_form(generators_, symbols_, denominator_);
  const std::size_t k = generators_.size();
  for (auto& row : form.rows) {
    echelon_.push_back(std::move(row.values));
    combos_.emplace_back(row.combo.begin(), row.combo.begin() + k);
  }
  pivots_ = form.pivots;
  std::vector<std::vector<Integer>> kernel;
  for (const auto& rel : form.relations) {
    std::vector<Integer> v(rel.combo.begin(), rel.combo.begin() + k);
    if (std::any_of(v.begin(), v.end(), [](const Integer& x) { return x != 0; })) {
      kernel.push_back(std::move(v));
    }
  }
  kernel_ = lattice::echelon_basis(kernel);
}

std::vector<Integer> Expresser::operator()(const CirclePoint& target) const {
  auto missing = [&] {
    return Error(ErrorCode::NotInSubgroup,
                 target.to_literal() + " is not in the generated subgroup");
  };
  for (const auto& kv : target.symbolic()) {
    if (!std::binary_search(symbols_.begin(), symbols_.end(), kv.first)) throw missing();
  }
  if (denominator_ % denominator(target.torsion()) != 0) throw missing();
  std::vector<Integer> rest = coordinates(target, symbols_, denominator_);
  std::vector<Integer> combo(generators_.size(), 0);
  for (std::size_t r = 0; r < echelon_.size(); ++r) {
    std::size_t c = pivots_[r];
    if (rest[c] == 0) continue;
    if (rest[c] % echelon_[r][c] != 0) throw missing();
    Integer x = rest[c] / echelon_[r][c];
    for (std::size_t i = 0; i < rest.size(); ++i) rest[i] -= x * echelon_[r][i];
    for (std::size_t i = 0; i < combo.size(); ++i) combo[i] += x * combos_[r][i];
  }
  if (std::any_of(rest.begin(), rest.end(), [](const Integer& x) { return x != 0; })) {
    throw missing();
  }
  return lattice::lex_min_abs(combo, kernel_);
}

std::vector<Integer> express(const CirclePoint& target,
                             const std::vector<CirclePoint>& generators) {
  return Expresser(generators)(target);
}

CirclePoint combine(const std::vector<Integer>& coefficients,
                    const std::vector<CirclePoint>& points) {
  CirclePoint sum;
  for (std::size_t i = 0; i < coefficients.size() && i < points.size(); ++i) {
    sum = sum + points[i].scaled(coefficients[i]);
  }
  return sum;
}

}  // namespace bog
