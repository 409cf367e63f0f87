#include "bog/words.hpp"

#include <algorithm>
#include <deque>
#include <optional>

#include "bog/errors.hpp"

namespace bog {

Word reduce(const std::vector<Letter>& letters) { return Word(letters); }

Word::Word(const std::vector<Letter>& letters) {
  for (const Letter& l : letters) {
    if (!letters_.empty() && letters_.back().generator == l.generator &&
        letters_.back().inverse != l.inverse) {
      letters_.pop_back();
    } else {
      letters_.push_back(l);
    }
  }
}

Word Word::generator(std::uint32_t i, int exponent) {
  Word w;
  for (int k = 0; k < std::abs(exponent); ++k) w.letters_.push_back({i, exponent < 0});
  return w;
}

Word Word::inverse() const {
  Word w;
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
    w.letters_.push_back({it->generator, !it->inverse});
  }
  return w;
}

Word Word::power(long k) const {
  Word base = k < 0 ? inverse() : *this;
  Word out;
  for (long i = 0; i < std::abs(k); ++i) out = out * base;
  return out;
}

Word Word::operator*(const Word& other) const {
  std::vector<Letter> all = letters_;
  all.insert(all.end(), other.letters_.begin(), other.letters_.end());
  return Word(all);
}

std::string Word::to_string(const std::vector<std::string>& names) const {
  if (letters_.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) out += ' ';
    const Letter& l = letters_[i];
    out += l.generator < names.size() ? names[l.generator] : "g" + std::to_string(l.generator);
    if (l.inverse) out += "^-1";
  }
  return out;
}

Word substitute(const Word& w, const std::vector<Word>& images) {
  std::vector<Letter> out;
  for (const Letter& l : w.letters()) {
    const Word& image = images.at(l.generator);
    Word piece = l.inverse ? image.inverse() : image;
    for (const Letter& x : piece.letters()) {
      if (!out.empty() && out.back().generator == x.generator && out.back().inverse != x.inverse) {
        out.pop_back();
      } else {
        out.push_back(x);
      }
    }
  }
  return Word(out);
}

CirclePoint WeightedBasis::weight(const Word& w) const {
  CirclePoint sum;
  for (const Letter& l : w.letters()) {
    const CirclePoint& x = weights.at(l.generator);
    sum = l.inverse ? sum - x : sum + x;
  }
  return sum;
}

std::vector<std::string> WeightedBasis::weight_literals() const {
  std::vector<std::string> out;
  for (const auto& w : weights) out.push_back(w.to_literal());
  return out;
}

Automorphism Automorphism::identity(std::size_t n) {
  Automorphism a;
  for (std::size_t i = 0; i < n; ++i) {
    a.forward.push_back(Word::generator(static_cast<std::uint32_t>(i)));
  }
  a.backward = a.forward;
  return a;
}

bool Automorphism::verify() const {
  if (forward.size() != backward.size()) return false;
  for (std::size_t i = 0; i < forward.size(); ++i) {
    Word g = Word::generator(static_cast<std::uint32_t>(i));
    if (substitute(forward[i], backward) != g) return false;
    if (substitute(backward[i], forward) != g) return false;
  }
  return true;
}

Automorphism compose(const Automorphism& a, const Automorphism& b) {
  Automorphism out;
  for (const Word& w : b.forward) out.forward.push_back(substitute(w, a.forward));
  for (const Word& w : a.backward) out.backward.push_back(substitute(w, b.backward));
  return out;
}

Automorphism substitute_tails(const WeightedBasis& basis,
                                const std::map<std::size_t, Word>& tails) {
  Automorphism a = Automorphism::identity(basis.size());
  for (const auto& [s, tail] : tails) {
    if (s >= basis.size()) throw Error(ErrorCode::SizeMismatch, "generator index out of range");
    for (const Letter& l : tail.letters()) {
      if (tails.count(l.generator)) {
        throw Error(ErrorCode::TailUsesSubstitutedLetter,
                    "tail of " + basis.names[s] + " uses substituted letter " +
                        basis.names.at(l.generator));
      }
    }
    Word g = Word::generator(static_cast<std::uint32_t>(s));
    a.forward[s] = g * tail;
    a.backward[s] = g * tail.inverse();
  }
  return a;
}

WeightedBasis apply_weights(const WeightedBasis& source, const Automorphism& a,
                            std::vector<std::string> names) {
  WeightedBasis out{std::move(names), {}};
  for (const Word& w : a.forward) out.weights.push_back(source.weight(w));
  return out;
}

WeightedBasis standard_basis(const Representation& rep, std::size_t truncate) {
  auto copies = [&](const Count& c) -> std::size_t {
    return c.is_infinite() ? truncate : static_cast<std::size_t>(std::min<std::uint64_t>(c.value(), truncate));
  };
  std::vector<CirclePoint> x, z;
  std::size_t w = 0;
  for (const Atom& a : rep.atoms()) {
    std::size_t n = copies(a.multiplicity);
    if (a.eigenvalue.is_identity()) {
      w += n;
    } else if (a.eigenvalue.is_real()) {
      z.insert(z.end(), n, a.eigenvalue);
    } else {
      x.insert(x.end(), n, a.eigenvalue);
    }
  }
  WeightedBasis b;
  for (std::size_t i = 0; i < x.size(); ++i) {
    b.names.push_back("x" + std::to_string(i));
    b.weights.push_back(x[i]);
  }
  for (std::size_t i = 0; i < x.size(); ++i) {
    b.names.push_back("y" + std::to_string(i));
    b.weights.emplace_back();
  }
  for (std::size_t i = 0; i < z.size(); ++i) {
    b.names.push_back("z" + std::to_string(i));
    b.weights.push_back(z[i]);
  }
  for (std::size_t i = 0; i < w; ++i) {
    b.names.push_back("w" + std::to_string(i));
    b.weights.emplace_back();
  }
  return b;
}

// ---------------------------------------------------------------------------
// rebase

namespace {

const CirclePoint kHalf = CirclePoint::turn(Rational(1, 2));

struct Shape {
  std::vector<std::size_t> nonreal, zero, half;
};

Shape shape_of(const std::vector<CirclePoint>& weights) {
  Shape s;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i].is_identity()) {
      s.zero.push_back(i);
    } else if (weights[i] == kHalf) {
      s.half.push_back(i);
    } else {
      s.nonreal.push_back(i);
    }
  }
  return s;
}

Word product(const std::vector<Integer>& coefficients, const std::vector<std::size_t>& positions) {
  Word w;
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    if (coefficients[i] != 0) {
      w = w * Word::generator(static_cast<std::uint32_t>(positions[i]))
                  .power(coefficients[i].convert_to<long>());
    }
  }
  return w;
}

std::vector<Integer> express_or_fail(const Expresser& e, const CirclePoint& target) {
  try {
    return e(target);
  } catch (const Error&) {
    throw Error(ErrorCode::ExpressFailure, "cannot express " + target.to_literal());
  }
}

Word gen(std::size_t i) { return Word::generator(static_cast<std::uint32_t>(i)); }

struct Builder {
  WeightedBasis basis;
  Automorphism total;
  std::vector<RebaseMove> moves;

  explicit Builder(const WeightedBasis& source)
      : basis(source), total(Automorphism::identity(source.size())) {}

  void apply(const std::string& label, const std::map<std::size_t, Word>& tails) {
    if (tails.empty()) return;
    total = compose(total, substitute_tails(basis, tails));
    std::vector<CirclePoint> next = basis.weights;
    for (const auto& [s, tail] : tails) next[s] = basis.weights[s] + basis.weight(tail);
    basis.weights = std::move(next);
    moves.push_back({label, tails});
  }
};

// Permutation sending new position k to old position order[k].
Automorphism permutation(const std::vector<std::size_t>& order) {
  Automorphism p;
  p.forward.resize(order.size());
  p.backward.resize(order.size());
  for (std::size_t k = 0; k < order.size(); ++k) {
    p.forward[k] = gen(order[k]);
    p.backward[order[k]] = gen(k);
  }
  return p;
}

// Positions of the new generators in target order: the j-th non-real target
// entry, the j-th trivial one, the j-th half turn.
std::vector<std::string> target_names(const std::vector<CirclePoint>& target) {
  std::vector<std::string> names;
  std::size_t r = 0, s = 0, t = 0;
  for (const auto& w : target) {
    if (w.is_identity()) {
      names.push_back("s" + std::to_string(s++));
    } else if (w == kHalf) {
      names.push_back("t" + std::to_string(t++));
    } else {
      names.push_back("r" + std::to_string(r++));
    }
  }
  return names;
}

// The construction for a source with at least as many non-real weights as the
// target. Returns the automorphism onto a basis in target order.
RebaseResult rebase_forward(const WeightedBasis& source, const std::vector<CirclePoint>& target) {
  Shape src = shape_of(source.weights);
  Shape tgt = shape_of(target);
  const std::size_t n1 = src.nonreal.size();
  const std::size_t l1 = tgt.nonreal.size();
  const std::size_t l2 = tgt.half.size();
  const std::vector<std::size_t>& x = src.nonreal;
  std::vector<std::size_t> y(src.zero.begin(), src.zero.begin() + n1);
  std::vector<std::size_t> w(src.zero.begin() + n1, src.zero.end());
  const std::vector<std::size_t>& z = src.half;

  Builder b(source);

  // ỹ_i = y_i x_i carries the weight of x_i
  std::map<std::size_t, Word> tails;
  for (std::size_t i = 0; i < n1; ++i) tails[y[i]] = gen(x[i]);
  b.apply("tilde_y", tails);

  std::vector<CirclePoint> lambda;
  for (std::size_t i : x) lambda.push_back(source.weights[i]);
  std::vector<CirclePoint> with_half = lambda;
  std::vector<std::size_t> with_half_pos = y;
  if (!z.empty()) {
    with_half.push_back(kHalf);
    with_half_pos.push_back(z[0]);
  }
  Expresser by_lambda_half(with_half);

  // r_i = x_i ỹ_i^-1 Π ỹ^a z_0^a0
  tails.clear();
  for (std::size_t i = 0; i < l1; ++i) {
    auto c = express_or_fail(by_lambda_half, target[tgt.nonreal[i]]);
    tails[x[i]] = gen(y[i]).inverse() * product(c, with_half_pos);
  }
  b.apply("r", tails);

  std::optional<std::size_t> t;
  if (l2 > 0) {
    if (l1 < n1) {
      t = x[l1];
      auto c = express_or_fail(by_lambda_half, kHalf);
      b.apply("t", {{*t, gen(y[l1]).inverse() * product(c, with_half_pos)}});
    } else if (!z.empty()) {
      t = z[0];
    } else {
      if (w.empty()) throw Error(ErrorCode::SizeMismatch, "no trivial generator left for -1");
      t = w[0];
      auto c = express_or_fail(Expresser(lambda), kHalf);
      b.apply("t", {{*t, product(c, y)}});
    }
  } else {
    tails.clear();
    for (std::size_t i = l1; i < n1; ++i) tails[x[i]] = gen(y[i]).inverse();
    b.apply("trivialize", tails);
  }

  // clear every other weight with words in the r's and t
  std::vector<CirclePoint> clear_weights;
  std::vector<std::size_t> clear_pos;
  for (std::size_t i = 0; i < l1; ++i) {
    clear_weights.push_back(target[tgt.nonreal[i]]);
    clear_pos.push_back(x[i]);
  }
  if (t) {
    clear_weights.push_back(kHalf);
    clear_pos.push_back(*t);
  }
  Expresser clearer(clear_weights);
  std::vector<std::size_t> others;
  for (std::size_t p = 0; p < source.size(); ++p) {
    if (std::find(clear_pos.begin(), clear_pos.end(), p) == clear_pos.end()) others.push_back(p);
  }
  tails.clear();
  for (std::size_t p : others) {
    if (b.basis.weights[p].is_identity()) continue;
    tails[p] = product(express_or_fail(clearer, -b.basis.weights[p]), clear_pos);
  }
  b.apply("clear", tails);

  // extra half turns: s·t, taking former half-turn generators first, then
  // the highest remaining positions
  std::vector<std::size_t> t_positions;
  if (t) {
    t_positions.push_back(*t);
    std::vector<std::size_t> candidates;
    for (std::size_t p : z) {
      if (p != *t) candidates.push_back(p);
    }
    for (auto it = others.rbegin(); it != others.rend(); ++it) {
      if (std::find(z.begin(), z.end(), *it) == z.end()) candidates.push_back(*it);
    }
    tails.clear();
    for (std::size_t k = 0; k + 1 < l2; ++k) {
      tails[candidates.at(k)] = gen(*t);
      t_positions.push_back(candidates[k]);
    }
    b.apply("t_copies", tails);
  }
  std::vector<std::size_t> s_positions;
  for (std::size_t p : others) {
    if (std::find(t_positions.begin(), t_positions.end(), p) == t_positions.end()) {
      s_positions.push_back(p);
    }
  }
  std::sort(t_positions.begin() + (t_positions.empty() ? 0 : 1), t_positions.end());

  // arrange in target order
  std::vector<std::size_t> order(target.size());
  for (std::size_t i = 0; i < l1; ++i) order[tgt.nonreal[i]] = x[i];
  for (std::size_t i = 0; i < tgt.zero.size(); ++i) order[tgt.zero[i]] = s_positions.at(i);
  for (std::size_t i = 0; i < l2; ++i) order[tgt.half[i]] = t_positions.at(i);

  RebaseResult result;
  result.automorphism = compose(b.total, permutation(order));
  result.basis = WeightedBasis{target_names(target), target};
  result.moves = std::move(b.moves);
  return result;
}

}  // namespace

RebaseResult rebase(const WeightedBasis& source, const std::vector<CirclePoint>& target) {
  if (source.size() != target.size()) {
    throw Error(ErrorCode::SizeMismatch, "source has " + std::to_string(source.size()) +
                                             " generators, target has " +
                                             std::to_string(target.size()));
  }
  std::vector<CirclePoint> both = source.weights;
  both.insert(both.end(), target.begin(), target.end());
  SymbolTable table = symbols_of(both);
  if (generate(source.weights, table) != generate(target, table)) {
    throw Error(ErrorCode::SubgroupMismatch, "weights generate different subgroups");
  }
  Shape src = shape_of(source.weights);
  Shape tgt = shape_of(target);
  if (src.zero.size() < src.nonreal.size() || tgt.zero.size() < tgt.nonreal.size()) {
    throw Error(ErrorCode::SizeMismatch,
                "each non-real weight needs a trivial partner generator");
  }
  if (src.nonreal.size() >= tgt.nonreal.size()) return rebase_forward(source, target);

  // Run the construction from the target side and invert it.
  WeightedBasis from_target{target_names(target), target};
  RebaseResult back = rebase_forward(from_target, source.weights);
  RebaseResult result;
  result.automorphism = back.automorphism.inverse();
  result.basis = from_target;
  result.moves = std::move(back.moves);
  result.swapped = true;
  return result;
}

bool verify_rebase(const WeightedBasis& source, const std::vector<CirclePoint>& target,
                   const RebaseResult& result) {
  const Automorphism& a = result.automorphism;
  if (a.size() != source.size() || result.basis.weights != target) return false;
  if (!a.verify()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (source.weight(a.forward[i]) != target[i]) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

Word SchreierWitness::tree_path(std::size_t vertex) const {
  std::vector<Word> steps;
  while (vertex != 0) {
    steps.push_back(Word::generator(static_cast<std::uint32_t>(parent_generator[vertex])));
    vertex = parent[vertex];
  }
  Word w;
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) w = w * *it;
  return w;
}

Word SchreierWitness::kernel_generator(const SchreierEdge& e) const {
  return tree_path(e.vertex) * Word::generator(static_cast<std::uint32_t>(e.generator)) *
         tree_path(e.target).inverse();
}

SchreierWitness schreier_rank(const std::vector<CirclePoint>& weights) {
  CircleSubgroup image = generate(weights);
  if (!image.is_finite()) throw Error(ErrorCode::InfiniteImage, "weights generate an infinite subgroup");
  SchreierWitness s;
  s.vertices = image.elements();
  s.order = s.vertices.size();
  s.generators = weights.size();
  // vertex k is the element k/T
  auto index_of = [&](const CirclePoint& p) {
    return numerator(p.torsion() * Rational(s.order)).convert_to<std::size_t>();
  };
  const std::size_t none = s.order;
  s.parent.assign(s.order, none);
  s.parent_generator.assign(s.order, 0);
  std::vector<bool> seen(s.order, false);
  seen[0] = true;
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    std::size_t v = queue.front();
    queue.pop_front();
    for (std::size_t g = 0; g < weights.size(); ++g) {
      std::size_t u = index_of(s.vertices[v] + weights[g]);
      if (!seen[u]) {
        seen[u] = true;
        s.parent[u] = v;
        s.parent_generator[u] = g;
        queue.push_back(u);
      }
    }
  }
  for (std::size_t v = 0; v < s.order; ++v) {
    for (std::size_t g = 0; g < weights.size(); ++g) {
      std::size_t u = index_of(s.vertices[v] + weights[g]);
      SchreierEdge e{v, g, u};
      if (u != 0 && s.parent[u] == v && s.parent_generator[u] == g) {
        s.tree_edges.push_back(e);
      } else {
        s.non_tree_edges.push_back(e);
      }
    }
  }
  s.rank = s.non_tree_edges.size();
  return s;
}

}  // namespace bog
