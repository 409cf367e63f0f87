#include "bog/freeprob.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "bog/errors.hpp"

namespace bog {

namespace {

constexpr std::size_t kMaxOrder = 16;
// total number of basis tuples an operator-valued table may hold
constexpr std::size_t kTupleBudget = 100000;

Diag ones(std::size_t k) { return Diag(k, Rational(1)); }

void nc_rec(std::size_t n, std::size_t pos, std::vector<std::uint8_t>& labels,
            std::vector<std::uint8_t>& open, std::uint8_t next,
            const std::function<void(const NCPartition&)>& visit) {
  if (pos == n) {
    visit(NCPartition{labels});
    return;
  }
  // joining an open block closes every block opened after it
  for (std::size_t d = 0; d < open.size(); ++d) {
    std::vector<std::uint8_t> saved(open.begin() + static_cast<long>(d) + 1, open.end());
    labels[pos] = open[d];
    open.resize(d + 1);
    nc_rec(n, pos + 1, labels, open, next, visit);
    open.insert(open.end(), saved.begin(), saved.end());
  }
  labels[pos] = next;
  open.push_back(next);
  nc_rec(n, pos + 1, labels, open, static_cast<std::uint8_t>(next + 1), visit);
  open.pop_back();
}

void check_table(std::size_t k, std::size_t order) {
  if (order > kMaxOrder) throw Error(ErrorCode::SizeGuard, "order above 16");
  std::size_t total = 0, layer = 1;
  for (std::size_t n = 0; n < order; ++n) {
    total += layer;
    if (total > kTupleBudget) {
      throw Error(ErrorCode::SizeGuard, "operator-valued table exceeds the work budget");
    }
    layer *= k;
  }
}

// Sums c^{(π)}(e_{i_1}, ..., e_{i_n}) over NC(n+1), peeling off the block of
// the first X and recursing into the intervals it leaves.
class MomentEvaluator {
 public:
  MomentEvaluator(const OVSequence& c, const std::vector<std::size_t>& idx)
      : c_(c), idx_(idx), n_(idx.size()), memo_((n_ + 1) * (n_ + 1)) {}

  Diag run() { return W(0, n_); }

 private:
  // a_j sits between X_{j-1} and X_j
  std::size_t a(std::size_t j) const { return idx_[j - 1]; }

  const Diag& W(std::size_t p, std::size_t q) {
    auto& slot = memo_[p * (n_ + 1) + q];
    if (slot) return *slot;
    Diag total(c_.k, Rational(0));
    std::vector<std::size_t> args;
    chain(p, q, p, Rational(1), args, total);
    slot = std::move(total);
    return *slot;
  }

  void chain(std::size_t p, std::size_t q, std::size_t cur, const Rational& scale,
             std::vector<std::size_t>& args, Diag& total) {
    // close the block at cur
    {
      std::size_t s = args.size();
      std::size_t flat = 0, stride = 1;
      for (std::size_t t = 0; t < s; ++t) {
        flat += args[t] * stride;
        stride *= c_.k;
      }
      const Diag& kappa = c_.values[s][flat];
      if (cur == q) {
        for (std::size_t i = 0; i < c_.k; ++i) total[i] += scale * kappa[i];
      } else {
        std::size_t i = a(cur + 1);
        const Diag& tail = W(cur + 1, q);
        total[i] += scale * kappa[i] * tail[i];
      }
    }
    if (args.size() + 1 >= c_.order()) return;
    for (std::size_t l = cur + 1; l <= q; ++l) {
      std::size_t i = a(cur + 1);
      Rational factor(1);
      if (l > cur + 1) {
        if (a(l) != i) continue;
        factor = W(cur + 1, l - 1)[i];
        if (factor == 0) continue;
      }
      args.push_back(i);
      chain(p, q, l, scale * factor, args, total);
      args.pop_back();
    }
  }

  const OVSequence& c_;
  const std::vector<std::size_t>& idx_;
  std::size_t n_;
  std::vector<std::optional<Diag>> memo_;
};

}  // namespace

std::size_t NCPartition::block_count() const {
  std::size_t m = 0;
  for (auto b : block) m = std::max<std::size_t>(m, b + 1u);
  return m;
}

std::vector<std::vector<std::size_t>> NCPartition::blocks() const {
  std::vector<std::vector<std::size_t>> out(block_count());
  for (std::size_t i = 0; i < block.size(); ++i) out[block[i]].push_back(i);
  return out;
}

bool NCPartition::is_pairing() const {
  for (const auto& b : blocks()) {
    if (b.size() != 2) return false;
  }
  return true;
}

std::string NCPartition::to_string() const {
  std::ostringstream os;
  for (const auto& b : blocks()) {
    os << "{";
    for (std::size_t i = 0; i < b.size(); ++i) os << (i ? "," : "") << b[i] + 1;
    os << "}";
  }
  return os.str();
}

bool is_noncrossing(const std::vector<std::uint8_t>& block) {
  std::size_t n = block.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (block[b] == block[a]) continue;
      for (std::size_t c = b + 1; c < n; ++c) {
        if (block[c] != block[a]) continue;
        for (std::size_t d = c + 1; d < n; ++d) {
          if (block[d] == block[b]) return false;
        }
      }
    }
  }
  return true;
}

void for_each_nc(std::size_t n, const std::function<void(const NCPartition&)>& visit) {
  if (n > kMaxOrder) throw Error(ErrorCode::SizeGuard, "NC enumeration is limited to n <= 16");
  std::vector<std::uint8_t> labels(n), open;
  nc_rec(n, 0, labels, open, 0, visit);
}

std::vector<NCPartition> enumerate_nc(std::size_t n) {
  std::vector<NCPartition> out;
  for_each_nc(n, [&](const NCPartition& p) { out.push_back(p); });
  return out;
}

Integer catalan(std::size_t n) {
  Integer c = 1;
  for (std::size_t i = 0; i < n; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

OVSequence OVSequence::zero(std::size_t k, std::size_t order) {
  check_table(k, order);
  OVSequence s;
  s.k = k;
  std::size_t layer = 1;
  for (std::size_t n = 0; n < order; ++n) {
    s.values.emplace_back(layer, Diag(k, Rational(0)));
    layer *= k;
  }
  return s;
}

std::size_t OVSequence::tuples(std::size_t n) const { return values.at(n).size(); }

std::vector<std::size_t> OVSequence::tuple(std::size_t n, std::size_t flat) const {
  std::vector<std::size_t> out(n);
  for (std::size_t t = 0; t < n; ++t) {
    out[t] = flat % k;
    flat /= k;
  }
  return out;
}

OVSequence ov_moments_from_cumulants(const OVSequence& cumulants) {
  OVSequence m = OVSequence::zero(cumulants.k, cumulants.order());
  for (std::size_t n = 0; n < m.order(); ++n) {
    for (std::size_t t = 0; t < m.tuples(n); ++t) {
      auto idx = m.tuple(n, t);
      m.values[n][t] = MomentEvaluator(cumulants, idx).run();
    }
  }
  return m;
}

OVSequence ov_cumulants_from_moments(const OVSequence& moments) {
  OVSequence c = OVSequence::zero(moments.k, moments.order());
  for (std::size_t n = 0; n < c.order(); ++n) {
    for (std::size_t t = 0; t < c.tuples(n); ++t) {
      auto idx = c.tuple(n, t);
      // c^{(n)}(idx) is still zero, so this is the sum over all other partitions
      Diag rest = MomentEvaluator(c, idx).run();
      for (std::size_t i = 0; i < c.k; ++i) c.values[n][t][i] = moments.values[n][t][i] - rest[i];
    }
  }
  return c;
}

std::vector<Rational> moments_from_cumulants(const std::vector<Rational>& c, std::size_t K) {
  OVSequence cs = OVSequence::zero(1, K);
  for (std::size_t n = 0; n < K && n < c.size(); ++n) cs.values[n][0] = {c[n]};
  OVSequence ms = ov_moments_from_cumulants(cs);
  std::vector<Rational> out{Rational(1)};
  for (std::size_t n = 0; n < K; ++n) out.push_back(ms.values[n][0][0]);
  return out;
}

std::vector<Rational> cumulants_from_moments(const std::vector<Rational>& m, std::size_t K) {
  if (m.size() < K + 1) throw Error(ErrorCode::DimensionMismatch, "need moments m_0..m_K");
  OVSequence ms = OVSequence::zero(1, K);
  for (std::size_t n = 0; n < K; ++n) ms.values[n][0] = {m[n + 1]};
  OVSequence cs = ov_cumulants_from_moments(ms);
  std::vector<Rational> out;
  for (std::size_t n = 0; n < K; ++n) out.push_back(cs.values[n][0][0]);
  return out;
}

std::vector<Rational> semicircular_moments(std::size_t K, const Rational& variance) {
  return moments_from_cumulants({Rational(0), variance}, K);
}

OVDistribution OVDistribution::trace_map(std::size_t k, Diag trace) {
  OVDistribution d;
  d.k = k;
  d.trace = trace.empty() ? Diag(k, Rational(1, static_cast<long>(k))) : std::move(trace);
  d.eta.assign(k, d.trace);
  d.validate();
  return d;
}

void OVDistribution::validate() const {
  if (k == 0 || trace.size() != k || eta.size() != k) {
    throw Error(ErrorCode::DimensionMismatch, "distribution sizes do not match k");
  }
  Rational sum = 0;
  for (const auto& t : trace) {
    if (t <= 0) throw Error(ErrorCode::InvalidDescriptor, "trace weights must be positive");
    sum += t;
  }
  if (sum != 1) throw Error(ErrorCode::InvalidDescriptor, "trace weights must sum to 1");
  for (const auto& row : eta) {
    if (row.size() != k) throw Error(ErrorCode::DimensionMismatch, "eta must be k x k");
    for (const auto& x : row) {
      if (x < 0) throw Error(ErrorCode::InvalidDescriptor, "eta entries must be nonnegative");
    }
  }
}

Diag OVDistribution::apply_eta(const Diag& d) const {
  Diag out(k, Rational(0));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) out[i] += eta[i][j] * d[j];
  }
  return out;
}

Rational OVDistribution::tau(const Diag& d) const {
  Rational s = 0;
  for (std::size_t i = 0; i < k; ++i) s += trace[i] * d[i];
  return s;
}

OVSequence OVDistribution::cumulants(std::size_t order) const {
  OVSequence c = OVSequence::zero(k, order);
  if (order > 1) {
    for (std::size_t j = 0; j < k; ++j) {
      Diag e(k, Rational(0));
      e[j] = 1;
      c.values[1][j] = apply_eta(e);
    }
  }
  return c;
}

Diag ov_moment(const OVDistribution& dist, const std::vector<Diag>& args) {
  dist.validate();
  for (const auto& a : args) {
    if (a.size() != dist.k) throw Error(ErrorCode::DimensionMismatch, "argument length differs from k");
  }
  std::size_t n = args.size();
  std::vector<std::optional<Diag>> memo((n + 1) * (n + 1));
  auto mul = [](Diag x, const Diag& y) {
    for (std::size_t i = 0; i < x.size(); ++i) x[i] *= y[i];
    return x;
  };
  // W(p, q): E(X_p a_{p+1} ... a_q X_q); X_p is paired with some X_l
  std::function<Diag(std::size_t, std::size_t)> W = [&](std::size_t p, std::size_t q) -> Diag {
    if (p > q) return ones(dist.k);
    auto& slot = memo[p * (n + 1) + q];
    if (slot) return *slot;
    Diag total(dist.k, Rational(0));
    if ((q - p) % 2 == 1) {
      for (std::size_t l = p + 1; l <= q; l += 2) {
        Diag inner = l == p + 1 ? args[p] : mul(mul(args[p], W(p + 1, l - 1)), args[l - 1]);
        Diag term = dist.apply_eta(inner);
        if (l < q) term = mul(mul(term, args[l]), W(l + 1, q));
        for (std::size_t i = 0; i < dist.k; ++i) total[i] += term[i];
      }
    }
    slot = total;
    return total;
  };
  return W(0, n);
}

OVSequence reduction_model_moments(std::size_t k, std::size_t m, std::size_t K) {
  if (K > 8 || k * m > 16 || k == 0 || m == 0) {
    throw Error(ErrorCode::SizeGuard, "verification limited to K <= 8 and k*m <= 16");
  }
  std::size_t kb = k * m;
  OVSequence moments = OVSequence::zero(kb, K);
  Rational tau_b(1, static_cast<long>(kb));
  for (std::size_t n = 0; n < K; ++n) {
    std::size_t N = n + 1;
    std::vector<NCPartition> pairings;
    for_each_nc(N, [&](const NCPartition& p) {
      if (p.is_pairing()) pairings.push_back(p);
    });
    for (std::size_t t = 0; t < moments.tuples(n); ++t) {
      auto idx = moments.tuple(n, t);
      // E_B(w)[j] = τ(w e_j) / τ_B(e_j), and τ(X b_1 X ... X b_N) with b_N = e_j
      // is Σ over pairings π of Π_{V ∈ K(π)} τ_B(Π_{i ∈ V} b_i).
      for (std::size_t j = 0; j < kb; ++j) {
        std::vector<std::size_t> b = idx;
        b.push_back(j);
        Rational total = 0;
        for (const auto& p : pairings) {
          std::vector<std::size_t> partner(N);
          for (const auto& blk : p.blocks()) {
            partner[blk[0]] = blk[1];
            partner[blk[1]] = blk[0];
          }
          // K(π) = π⁻¹γ; on a pairing π⁻¹ = π
          std::vector<bool> seen(N, false);
          Rational term = 1;
          for (std::size_t s = 0; s < N && term != 0; ++s) {
            if (seen[s]) continue;
            std::size_t cur = s;
            bool same = true;
            do {
              seen[cur] = true;
              if (b[cur] != b[s]) same = false;
              cur = partner[(cur + 1) % N];
            } while (cur != s);
            term *= same ? tau_b : Rational(0);
          }
          total += term;
        }
        moments.values[n][t][j] = total / tau_b;
      }
    }
  }
  return moments;
}

ReductionCheck verify_cumulant_reduction(std::size_t k, std::size_t m, std::size_t K) {
  OVSequence moments = reduction_model_moments(k, m, K);
  std::size_t kb = k * m;
  OVDistribution A = OVDistribution::trace_map(k);
  ReductionCheck check;
  check.moment_display_holds = true;
  // basis element (j, i) of B = C^m ⊗ C^k has flat index j*k + i
  Rational slice(1, static_cast<long>(m));
  for (std::size_t n = 0; n < K && check.moment_display_holds; ++n) {
    for (std::size_t t = 0; t < moments.tuples(n); ++t) {
      std::vector<Diag> args;
      for (auto b : moments.tuple(n, t)) {
        Diag e(k, Rational(0));
        e[b % k] = slice;
        args.push_back(e);
      }
      Diag a = ov_moment(A, args);
      bool equal = true;
      for (std::size_t b = 0; b < kb; ++b) equal = equal && moments.values[n][t][b] == a[b % k];
      if (!equal) {
        check.moment_display_holds = false;
        check.moment_display_failure =
            "order " + std::to_string(n + 1) + " tuple " + std::to_string(t);
        break;
      }
    }
  }

  OVSequence c = ov_cumulants_from_moments(moments);
  Rational tau_b(1, static_cast<long>(kb));
  for (std::size_t n = 0; n < K; ++n) {
    for (std::size_t t = 0; t < c.tuples(n); ++t) {
      ++check.tuples_checked;
      Rational expected = n == 1 ? tau_b : Rational(0);
      for (std::size_t b = 0; b < kb; ++b) {
        if (c.values[n][t][b] != expected) {
          std::ostringstream os;
          os << "c^(" << n << ") at tuple " << t << " entry " << b << " is "
             << bog::to_string(c.values[n][t][b]) << ", expected " << bog::to_string(expected);
          check.failure = os.str();
          return check;
        }
      }
    }
  }
  check.holds = true;
  return check;
}

double QSqrt3::approx() const {
  return a.convert_to<double>() + b.convert_to<double>() * std::sqrt(3.0);
}

std::string QSqrt3::to_string() const {
  if (b == 0) return bog::to_string(a);
  std::string s;
  if (a != 0) s = bog::to_string(a) + (b > 0 ? " + " : " - ");
  else if (b < 0) s = "-";
  Rational mag = b < 0 ? Rational(-b) : b;
  if (mag != 1) s += bog::to_string(mag) + "*";
  return s + "sqrt(3)";
}

std::string WickValue::to_string() const {
  if (exact) return value.to_string();
  std::ostringstream os;
  os.precision(15);
  os << approx << " (floating, tolerance 1e-12)";
  return os.str();
}

namespace {

struct Rotation {
  bool exact = true;
  QSqrt3 cos, sin;
  double dcos = 0, dsin = 0;
};

// exact values for multiples of 1/4 and 1/6 turns
std::optional<std::pair<QSqrt3, QSqrt3>> special_angle(const Rational& t) {
  Rational twelve = t * 12;
  if (denominator(twelve) != 1) return std::nullopt;
  long k = numerator(twelve).convert_to<long>() % 12;
  if (k % 3 != 0 && k % 2 != 0) return std::nullopt;
  const Rational h(1, 2);
  switch (k) {
    case 0: return std::pair{QSqrt3{1, 0}, QSqrt3{0, 0}};
    case 2: return std::pair{QSqrt3{h, 0}, QSqrt3{0, h}};
    case 3: return std::pair{QSqrt3{0, 0}, QSqrt3{1, 0}};
    case 4: return std::pair{QSqrt3{-h, 0}, QSqrt3{0, h}};
    case 6: return std::pair{QSqrt3{-1, 0}, QSqrt3{0, 0}};
    case 8: return std::pair{QSqrt3{-h, 0}, QSqrt3{0, -h}};
    case 9: return std::pair{QSqrt3{0, 0}, QSqrt3{-1, 0}};
    case 10: return std::pair{QSqrt3{h, 0}, QSqrt3{0, -h}};
  }
  return std::nullopt;
}

Rotation rotation(const CirclePoint& angle, const std::map<std::string, double>& bindings) {
  Rotation r;
  if (angle.is_torsion()) {
    if (auto s = special_angle(angle.torsion())) {
      r.cos = s->first;
      r.sin = s->second;
      r.dcos = r.cos.approx();
      r.dsin = r.sin.approx();
      return r;
    }
  }
  r.exact = false;
  double turns = angle.torsion().convert_to<double>();
  for (const auto& [name, coefficient] : angle.symbolic()) {
    auto it = bindings.find(name);
    if (it == bindings.end()) {
      throw Error(ErrorCode::UnboundSymbol, "symbol '" + name + "' has no numeric binding");
    }
    turns += coefficient.convert_to<double>() * it->second;
  }
  double phase = 2 * std::numbers::pi * (turns - std::floor(turns));
  r.dcos = std::cos(phase);
  r.dsin = std::sin(phase);
  return r;
}

}  // namespace

WickValue wick_pairing(const TensorVector& left, const TensorVector& right,
                       const Representation& rep, const Integer& g,
                       const std::map<std::string, double>& bindings) {
  WickValue out;
  if (left.factors.size() != right.factors.size()) return out;
  Count dim = ap_dimension(rep);
  if (dim.is_infinite()) throw Error(ErrorCode::DimensionMismatch, "ap part is infinite-dimensional");
  std::vector<Rotation> rotations;
  for (const auto& a : rep.atoms()) rotations.push_back(rotation(a.eigenvalue.scaled(g), bindings));

  QSqrt3 product{1, 0};
  double dproduct = 1;
  for (std::size_t f = 0; f < left.factors.size(); ++f) {
    const Diag& x = left.factors[f];
    const Diag& y = right.factors[f];
    if (x.size() != dim.value() || y.size() != dim.value()) {
      throw Error(ErrorCode::DimensionMismatch, "tensor factor length differs from the ap dimension");
    }
    QSqrt3 inner;
    double dinner = 0;
    std::size_t pos = 0;
    for (std::size_t j = 0; j < rep.atoms().size(); ++j) {
      const Atom& a = rep.atoms()[j];
      const Rotation& r = rotations[j];
      for (std::uint64_t copy = 0; copy < a.multiplicity.value(); ++copy) {
        if (a.eigenvalue.is_real()) {
          // r.cos is ±1 here
          QSqrt3 v{x[pos] * y[pos], 0};
          inner = inner + r.cos * v;
          dinner += r.dcos * v.a.convert_to<double>();
          pos += 1;
        } else {
          QSqrt3 c{x[pos] * y[pos] + x[pos + 1] * y[pos + 1], 0};
          QSqrt3 s{x[pos + 1] * y[pos] - x[pos] * y[pos + 1], 0};
          inner = inner + r.cos * c + r.sin * s;
          dinner += r.dcos * c.a.convert_to<double>() + r.dsin * s.a.convert_to<double>();
          pos += 2;
        }
        if (!r.exact) out.exact = false;
      }
    }
    product = product * inner;
    dproduct *= dinner;
  }
  if (out.exact) {
    out.value = product;
    out.approx = product.approx();
  } else {
    out.approx = dproduct;
  }
  return out;
}

}  // namespace bog
