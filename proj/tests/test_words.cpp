#include "doctest.h"

#include <algorithm>
#include <set>

#include "bog/errors.hpp"
#include "bog/words.hpp"
#include "generators.hpp"

using namespace bog;

namespace {

Word g(std::uint32_t i, int e = 1) { return Word::generator(i, e); }
CirclePoint q(long p, long d) { return CirclePoint::turn(Rational(p, d)); }

std::multiset<CirclePoint> as_multiset(const std::vector<CirclePoint>& v) {
  return {v.begin(), v.end()};
}

// Oracle: rank of a finite-index subgroup from the covering graph, using
// plain integer residues mod T.
long covering_graph_rank(const std::vector<long>& residues, long modulus) {
  std::set<long> vertices{0};
  std::vector<long> frontier{0};
  while (!frontier.empty()) {
    std::vector<long> next;
    for (long v : frontier) {
      for (long r : residues) {
        long u = (v + r) % modulus;
        if (vertices.insert(u).second) next.push_back(u);
      }
    }
    frontier = next;
  }
  long edges = static_cast<long>(vertices.size() * residues.size());
  return edges - static_cast<long>(vertices.size()) + 1;
}

}  // namespace

TEST_CASE("reduce") {
  CHECK(reduce({{0, false}, {1, false}, {1, true}}) == g(0));
  CHECK(reduce({{0, false}, {0, true}}).empty());
  auto w = reduce({{0, false}, {1, false}, {0, true}});
  CHECK(w.length() == 3);
  CHECK(reduce(w.letters()) == w);
  CHECK(w.to_string({"x", "y"}) == "x y x^-1");
  CHECK(Word().to_string({}) == "1");
  CHECK((g(0) * g(1)).inverse() == g(1, -1) * g(0, -1));
  CHECK(g(2).power(-2) == g(2, -2));
}

TEST_CASE("substitute_tails") {
  WeightedBasis b{{"x", "y"}, {q(1, 5), q(0, 1)}};
  auto a = substitute_tails(b, {{0, g(1)}});
  CHECK(a.forward[0] == g(0) * g(1));
  CHECK(a.backward[0] == g(0) * g(1, -1));
  CHECK(a.verify());
  CHECK(apply_weights(b, a, b.names).weights[0] == q(1, 5));

  auto id = substitute_tails(b, {});
  CHECK(id.forward == Automorphism::identity(2).forward);
  CHECK_THROWS_AS(substitute_tails(b, {{0, g(0)}}), Error);
  try {
    substitute_tails(b, {{0, g(0)}});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::TailUsesSubstitutedLetter);
  }
}

TEST_CASE("rebase: fifth roots") {
  WeightedBasis source{{"x", "y"}, {q(1, 5), q(0, 1)}};
  std::vector<CirclePoint> target{q(2, 5), q(0, 1)};
  auto r = rebase(source, target);
  CHECK(r.automorphism.forward[0].to_string(source.names) == "x y x");
  CHECK(r.automorphism.forward[1].to_string(source.names) == "y x x y x x y x");
  CHECK(r.basis.names == std::vector<std::string>{"r0", "s0"});
  CHECK(verify_rebase(source, target, r));
  // weights by hand: 1/5+0+1/5 = 2/5 and 1/5+1/5+4/5 = 0
  CHECK(source.weight(r.automorphism.forward[0]) == q(2, 5));
  CHECK(source.weight(r.automorphism.forward[1]) == q(0, 1));
}

TEST_CASE("rebase: identity and mismatches") {
  WeightedBasis source{{"x0", "y0", "z0", "z1", "w0"},
                       {q(1, 3), q(0, 1), q(1, 2), q(1, 2), q(0, 1)}};
  auto r = rebase(source, source.weights);
  CHECK(r.automorphism.forward == Automorphism::identity(5).forward);
  CHECK(verify_rebase(source, source.weights, r));

  WeightedBasis theta{{"x", "y"}, {CirclePoint::symbol("t"), q(0, 1)}};
  try {
    rebase(theta, {CirclePoint::symbol("t", 2), q(0, 1)});
    FAIL("expected SubgroupMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SubgroupMismatch);
  }
  try {
    rebase(theta, {CirclePoint::symbol("t")});
    FAIL("expected SizeMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SizeMismatch);
  }
}

TEST_CASE("rebase: the three half-turn cases and the swap") {
  // l1 < n1: a spare x becomes the half turn
  WeightedBasis a{{"x0", "x1", "y0", "y1"}, {q(1, 4), q(1, 4), q(0, 1), q(0, 1)}};
  std::vector<CirclePoint> ta{q(1, 4), q(0, 1), q(1, 2), q(0, 1)};
  CHECK(verify_rebase(a, ta, rebase(a, ta)));
  // l1 = n1 and z present
  WeightedBasis b{{"x0", "y0", "z0"}, {q(1, 6), q(0, 1), q(1, 2)}};
  std::vector<CirclePoint> tb{q(1, 3), q(0, 1), q(1, 2)};
  CHECK(verify_rebase(b, tb, rebase(b, tb)));
  // l1 = n1, no z: w_0 absorbs the half turn
  WeightedBasis c{{"x0", "y0", "w0"}, {q(1, 4), q(0, 1), q(0, 1)}};
  std::vector<CirclePoint> tc{q(1, 4), q(1, 2), q(0, 1)};
  CHECK(verify_rebase(c, tc, rebase(c, tc)));
  // fewer non-real weights in the source: the roles swap
  WeightedBasis d{{"z0", "w0"}, {q(1, 2), q(0, 1)}};
  std::vector<CirclePoint> td{q(0, 1), q(1, 2)};
  CHECK(verify_rebase(d, td, rebase(d, td)));
  WeightedBasis e{{"x0", "y0", "z0"}, {q(1, 3), q(0, 1), q(1, 2)}};
  std::vector<CirclePoint> te{q(1, 6), q(1, 3), q(0, 1), q(0, 1)};
  CHECK_THROWS_AS(rebase(e, te), Error);
  WeightedBasis f{{"z0", "z1", "w0", "w1"}, {q(1, 2), q(1, 2), q(0, 1), q(0, 1)}};
  std::vector<CirclePoint> tf{q(0, 1), q(1, 2), q(0, 1), q(1, 2)};
  auto rf = rebase(f, tf);
  CHECK(verify_rebase(f, tf, rf));
  WeightedBasis h2{{"x0", "y0", "z0"}, {q(1, 6), q(0, 1), q(1, 2)}};
  std::vector<CirclePoint> th{q(1, 3), q(0, 1), q(1, 2)};
  CHECK(verify_rebase(h2, th, rebase(h2, th)));
  WeightedBasis sw{{"z0", "w0", "w1", "w2"}, {q(1, 2), q(0, 1), q(0, 1), q(0, 1)}};
  std::vector<CirclePoint> tsw{q(1, 2), q(0, 1), q(1, 2), q(0, 1)};
  CHECK(verify_rebase(sw, tsw, rebase(sw, tsw)));
}

TEST_CASE("rebase: symbolic weights") {
  auto t = CirclePoint::symbol("t");
  auto u = CirclePoint::symbol("u");
  WeightedBasis s{{"x0", "x1", "y0", "y1"}, {t, u, q(0, 1), q(0, 1)}};
  std::vector<CirclePoint> target{t + u, q(0, 1), t - u, q(0, 1)};
  // <t+u, t-u> is index 2 in <t, u>
  CHECK_THROWS_AS(rebase(s, target), Error);
  std::vector<CirclePoint> target2{t + u, q(0, 1), t.scaled(2) + u, q(0, 1)};
  CHECK(verify_rebase(s, target2, rebase(s, target2)));
}

TEST_CASE("standard basis") {
  Representation rep("r",
                     {Atom{q(1, 3), 2}, Atom{q(1, 2), 1}, Atom{q(0, 1), Count::infinity()}}, {});
  auto b = standard_basis(rep, 3);
  CHECK(b.names == std::vector<std::string>{"x0", "x1", "y0", "y1", "z0", "w0", "w1", "w2"});
  CHECK(b.weights[0] == q(1, 3));
  CHECK(b.weights[4] == q(1, 2));
}

TEST_CASE("schreier_rank") {
  CHECK(schreier_rank({q(1, 3)}).rank == 1);
  CHECK(schreier_rank({q(1, 2), q(1, 2)}).rank == 3);
  CHECK(covering_graph_rank({1, 1}, 2) == 3);
  auto w = schreier_rank({q(1, 6), q(1, 3), q(1, 2)});
  CHECK(w.rank == 13);
  CHECK(covering_graph_rank({1, 2, 3}, 6) == 13);
  CHECK(w.tree_edges.size() == 5);
  CHECK(schreier_rank({}).rank == 0);
  CHECK_THROWS_AS(schreier_rank({CirclePoint::symbol("t")}), Error);
}

TEST_CASE("property: schreier witnesses") {
  testgen::Gen gen(31);
  for (int i = 0; i < 200; ++i) {
    long n = gen.integer(1, 4);
    long modulus = gen.integer(1, 12);
    std::vector<CirclePoint> weights;
    std::vector<long> residues;
    for (long j = 0; j < n; ++j) {
      long r = gen.integer(0, modulus - 1);
      residues.push_back(r);
      weights.push_back(q(r, modulus));
    }
    auto w = schreier_rank(weights);
    CHECK(static_cast<long>(w.rank) == covering_graph_rank(residues, modulus));
    CHECK(w.rank == 1 + w.order * (n - 1));
    WeightedBasis b{{}, weights};
    for (const auto& e : w.non_tree_edges) {
      Word k = w.kernel_generator(e);
      CHECK(b.weight(k).is_identity());
    }
    for (std::size_t v = 0; v < w.order; ++v) CHECK(b.weight(w.tree_path(v)) == w.vertices[v]);
  }
}

namespace {

// Random rebase instance over Z/modulus: every non-real weight comes with a
// trivial partner, sizes are padded with trivial weights.
bool random_instance(testgen::Gen& gen, WeightedBasis& source, std::vector<CirclePoint>& target) {
  long modulus = gen.integer(2, 12);
  auto element = [&] { return q(gen.integer(1, modulus - 1), modulus); };
  auto shape = [&](long nonreal_hint) {
    std::vector<CirclePoint> w;
    for (long i = 0; i < nonreal_hint; ++i) {
      CirclePoint e = element();
      w.push_back(e);
      w.push_back(CirclePoint());
    }
    for (long i = gen.integer(0, 2); i > 0; --i) {
      w.push_back(modulus % 2 == 0 ? q(1, 2) : CirclePoint());
    }
    return w;
  };
  source.weights = shape(gen.integer(0, 3));
  target = shape(gen.integer(0, 3));
  while (target.size() < source.weights.size()) target.push_back(CirclePoint());
  while (source.weights.size() < target.size()) source.weights.push_back(CirclePoint());
  std::shuffle(source.weights.begin(), source.weights.end(), gen.engine());
  std::shuffle(target.begin(), target.end(), gen.engine());
  source.names.clear();
  for (std::size_t i = 0; i < source.weights.size(); ++i) source.names.push_back("g" + std::to_string(i));
  return generate(source.weights) == generate(target);
}

}  // namespace

TEST_CASE("property: 100 random rebase instances verify") {
  testgen::Gen gen(41);
  int verified = 0;
  while (verified < 100) {
    WeightedBasis source;
    std::vector<CirclePoint> target;
    if (!random_instance(gen, source, target)) continue;
    auto r = rebase(source, target);
    REQUIRE(verify_rebase(source, target, r));
    CHECK(as_multiset(r.basis.weights) == as_multiset(target));
    ++verified;
  }
  CHECK(verified == 100);
}
