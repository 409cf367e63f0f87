#include "doctest.h"

#include "bog/errors.hpp"
#include "bog/presentation.hpp"
#include "bog/specfile.hpp"
#include "generators.hpp"

using namespace bog;

namespace {

Representation R(const char* body) { return parse_rep(body); }

}  // namespace

TEST_CASE("afp_presentation examples") {
  auto p = afp_presentation(R("atom sym:t mult 1\natom 0 mult 1"));
  CHECK(p.m == Count(2));
  CHECK(p.n == Count(1));
  REQUIRE(p.acting_weights.size() == 1);
  CHECK(p.acting_weights[0].weight == CirclePoint::symbol("t"));

  p = afp_presentation(R("atom 1/2 mult 2"));
  CHECK(p.m == Count(0));
  CHECK(p.n == Count(2));
  CHECK(p.expanded_weights(64) ==
        std::vector<CirclePoint>{CirclePoint::turn(Rational(1, 2)), CirclePoint::turn(Rational(1, 2))});
  CHECK(p.generator_names(64) == std::vector<std::string>{"h1", "h2"});

  p = afp_presentation(R(""));
  CHECK(p.m == Count(0));
  CHECK(p.n == Count(0));

  CHECK_THROWS_AS(afp_presentation(R("wm left_regular")), Error);
}

TEST_CASE("relative_commutant examples") {
  auto rc = relative_commutant(R("atom 1/3 mult 1"));
  CHECK(rc.rank == Count(2));
  CHECK(rc.kernel_rank == Count(1));
  REQUIRE(rc.witness);
  REQUIRE(rc.witness->non_tree_edges.size() == 1);
  // the kernel of F_1 -> Z/3 is generated by x^3
  CHECK(rc.witness->kernel_generator(rc.witness->non_tree_edges[0]) == Word::generator(0, 3));

  rc = relative_commutant(R("atom sym:t mult 1"));
  CHECK(rc.rank == Count(1));
  CHECK(rc.image_order.is_infinite());

  rc = relative_commutant(R("atom sym:t mult 2"));
  CHECK(rc.rank.is_infinite());

  rc = relative_commutant(R("atom 0 mult 3"));
  CHECK(rc.rank == Count(3));
  CHECK(rc.fixed_point_rank == Count(3));

  // weight-zero subgroup of F_2 = <a, x> with a of weight 0, x of weight 1/3:
  // index 3, rank 1 + 3
  CHECK(relative_commutant(R("atom 1/3 mult 1")).fixed_point_rank == Count(4));
  CHECK(relative_commutant(R("atom sym:t mult 1")).fixed_point_rank.is_infinite());
}

TEST_CASE("cocycle_presentation examples") {
  auto c = cocycle_presentation(R("atom sym:t mult 1"));
  CHECK(c.K.is_infinite_cyclic());
  CHECK(c.cocycle_trivial == Tri::Yes);
  CHECK(c.shift_description.rfind("Z ⋉ (L F_∞ ⊗ L∞(S¹))", 0) == 0);

  c = cocycle_presentation(R("atom 1/3 mult 1"));
  CHECK(c.K.order() == Count(3));
  REQUIRE(c.sections.size() == 3);
  CHECK(c.sections[0].empty());
  CHECK(c.sections[1] == Word::generator(0));
  CHECK(c.sections[2] == Word::generator(0, 2));
  // Ω(1,2) = g_0 g_2^-1 g_1^-1 = x^-3
  CHECK(c.omega[1][2] == Word::generator(0, -3));
  CHECK(c.omega[1][1].empty());
  CHECK(c.identity_verified);

  c = cocycle_presentation(R("atom 0 mult 3"));
  CHECK(c.K.order() == Count(1));
  CHECK(c.cocycle_trivial == Tri::Yes);
  CHECK(c.shift_description == "L F_3 ⊗ L∞(S¹)");

  c = cocycle_presentation(R("atom sym:a mult 1\natom sym:b mult 1"));
  CHECK(c.cocycle_trivial == Tri::Unknown);
}

TEST_CASE("normalizer_summary") {
  auto s = normalizer_summary(R("wm left_regular\natom sym:t mult 1"));
  CHECK_FALSE(s.ap_empty);
  CHECK(s.presentation.n == Count(1));
  CHECK(s.presentation.m == Count(1));
  s = normalizer_summary(R("wm atomless"));
  CHECK(s.ap_empty);
  CHECK(s.statement == "normaliser = quasi-normaliser = A_π");
  auto whole = afp_presentation(R("atom 1/4 mult 2\natom 0 mult 1"));
  s = normalizer_summary(R("atom 1/4 mult 2\natom 0 mult 1"));
  CHECK(s.presentation.to_string() == whole.to_string());
}

TEST_CASE("random ap representations: rank identities and cocycle") {
  testgen::Gen gen(7);
  for (int trial = 0; trial < 150; ++trial) {
    std::vector<Atom> atoms;
    std::size_t count = gen.index(4);
    for (std::size_t i = 0; i < count; ++i) {
      atoms.push_back({gen.torsion_point(8), Count(static_cast<std::uint64_t>(gen.integer(1, 3)))});
    }
    Representation rep("r", atoms, {});
    auto p = afp_presentation(rep);
    Count two_n1 = p.n1 + p.n1;
    CHECK(two_n1 + p.n2 + p.m0 == dimension(rep));

    auto rc = relative_commutant(rep);
    if (p.n.value() >= 1) {
      auto T = rc.image_order.value();
      CHECK(rc.rank == p.m + Count(1 + T * (p.n.value() - 1)));
      REQUIRE(rc.witness);
      // Euler characteristic of the coset graph
      CHECK(rc.witness->non_tree_edges.size() == rc.kernel_rank.value());
      CHECK(rc.witness->tree_edges.size() + 1 == rc.witness->order);
    }

    auto c = cocycle_presentation(rep);
    if (c.K.order() != Count(1) && c.K.order() <= Count(64)) {
      CHECK(c.identity_verified);
      WeightedBasis basis{p.generator_names(64), p.expanded_weights(64)};
      for (std::size_t k = 0; k < c.sections.size(); ++k) {
        CHECK(basis.weight(c.sections[k]) == c.elements[k]);
        // positive words only
        for (const auto& letter : c.sections[k].letters()) CHECK_FALSE(letter.inverse);
      }
      // a corrupted section breaks the weight check
      auto broken = c;
      broken.sections.back() = broken.sections.back() * Word::generator(0);
      CHECK_FALSE(verify_cocycle(broken, p.expanded_weights(64)));
    }
  }
}
