#include "doctest.h"

#include "bog/errors.hpp"
#include "bog/freedim.hpp"
#include "bog/specfile.hpp"

using namespace bog;

namespace {

ExtRational fd(const char* text) { return free_dimension(parse_descriptor(text)); }
Rational Q(long p, long q = 1) { return Rational(p, q); }

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Io;
}

}  // namespace

TEST_CASE("free_dimension examples") {
  CHECK(free_dimension(FactorDescriptor::abelian(3)) == ExtRational(Q(2, 3)));
  CHECK(fd("mat(1)@1/3 + mat(1)@1/3 + mat(1)@1/3") == ExtRational(Q(2, 3)));
  CHECK(fd("lfr(5)@1") == ExtRational(5));
  CHECK(fd("diffuse@1") == ExtRational(1));
  // one M_3 block: 1 - (1/3)^2
  CHECK(fd("mat(3)@1") == ExtRational(Q(8, 9)));
  CHECK(fd("mat(3)@1/2 + diffuse@1/2") == ExtRational(Q(35, 36)));
  CHECK(fd("lfr(inf)@1/2 + diffuse@1/2").is_infinite());
  // by hand: 1 + (1/2)^2 (4/3 - 1) - (1/4)^2 = 1 + 1/12 - 1/16
  CHECK(fd("lfr(4/3)@1/2 + mat(2)@1/2") == ExtRational(Q(1) + Q(1, 12) - Q(1, 16)));
}

TEST_CASE("descriptor validation") {
  CHECK(code_of([] { parse_descriptor("lfr(1)@1"); }) == ErrorCode::InvalidDescriptor);
  CHECK(code_of([] { parse_descriptor("diffuse@1/2"); }) == ErrorCode::InvalidDescriptor);
  CHECK(code_of([] { parse_descriptor("mat(0)@1"); }) == ErrorCode::InvalidDescriptor);
  CHECK(code_of([] { parse_descriptor("diffuse@0 + diffuse@1"); }) == ErrorCode::InvalidDescriptor);
  CHECK(code_of([] { parse_descriptor("blob@1"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_descriptor("lfr(x)@1"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_descriptor("diffuse"); }) == ErrorCode::ParseError);
  auto d = parse_descriptor("mat(3)@1/2 + diffuse@1/2");
  CHECK(d.to_string() == "mat(3)@1/2 + diffuse@1/2");
  CHECK(parse_descriptor(d.to_string()).to_string() == d.to_string());
}

TEST_CASE("afp_free_dimension") {
  CHECK(afp_free_dimension(1, 1, Q(1, 2)) == ExtRational(Q(3, 2)));
  CHECK(afp_free_dimension(Q(7, 3), 1, 1) == ExtRational(Q(7, 3)));
  CHECK(afp_free_dimension(ExtRational::infinity(), 1, Q(1, 2)).is_infinite());
  CHECK(code_of([] { afp_free_dimension(ExtRational::infinity(), 1, ExtRational::infinity()); }) ==
        ErrorCode::IndeterminateInfinity);
  for (long a = 1; a < 6; ++a) {
    for (long b = 1; b < 6; ++b) {
      CHECK(afp_free_dimension(Q(a, 3), Q(b, 2), Q(1, 5)) ==
            afp_free_dimension(Q(b, 2), Q(a, 3), Q(1, 5)));
    }
  }
}

TEST_CASE("factoriality gate") {
  CHECK(factoriality_gate({AfpShape::DiffuseCrossMatrix, 3, 0, false}));
  CHECK(factoriality_gate({AfpShape::FreeCrossInterpolated, 4, 2, false}));
  CHECK(factoriality_gate({AfpShape::FreeCrossMatrixDiffuse, 2, 1, false}));
  CHECK_FALSE(factoriality_gate({AfpShape::DiffuseCrossMatrix, 3, 0, true}));
  CHECK(code_of([] { factoriality_gate({AfpShape::DiffuseCrossMatrix, 1, 0, false}); }) ==
        ErrorCode::UnsupportedPattern);
  CHECK(code_of([] { factoriality_gate({AfpShape::Custom, 3, 0, false}); }) ==
        ErrorCode::UnsupportedPattern);
}

TEST_CASE("periodic invariant examples") {
  auto a = periodic_invariant(parse_rep("atom 1/3 mult 1"));
  CHECK(a.T == Count(3));
  CHECK(*a.r == ExtRational(Q(4, 3)));
  CHECK(a.shape == PeriodicShape::Interpolated);
  auto b = periodic_invariant(parse_rep("atom -1 mult 1; atom 1 mult 2"));
  CHECK(b.T == Count(2));
  CHECK(*b.r == ExtRational(2));
  auto c = periodic_invariant(parse_rep("atom 1/5 mult inf"));
  CHECK(c.T == Count(5));
  CHECK(c.r->is_infinite());
  CHECK(periodic_invariant(parse_rep("atom -1 mult 1")).shape == PeriodicShape::OneDimNontrivial);
  auto triv = periodic_invariant(parse_rep("atom 1 mult 3"));
  CHECK(triv.shape == PeriodicShape::Trivial);
  CHECK(*triv.r == ExtRational(3));
  CHECK(periodic_invariant(Representation()).shape == PeriodicShape::Zero);
  CHECK(code_of([] { periodic_invariant(parse_rep("symbol t\nrep a { atom sym:t mult 1 }")); }) ==
        ErrorCode::NotPeriodic);
  CHECK(code_of([] { periodic_invariant(parse_rep("wm left_regular")); }) == ErrorCode::NotPeriodic);
}

TEST_CASE("periodic parameter table") {
  struct Row {
    std::uint64_t T, dim;
    Rational r;
  };
  for (const Row& row : {Row{2, 2, Q(3, 2)}, Row{3, 2, Q(4, 3)}, Row{5, 2, Q(6, 5)},
                         Row{2, 3, Q(2)}, Row{6, 4, Q(3, 2)}}) {
    auto f = periodic_form(row.T, row.dim);
    CHECK(*f.r == ExtRational(row.r));
    REQUIRE(f.route);
    CHECK(f.route->r == ExtRational(row.r));
  }
}

TEST_CASE("property: route agrees with the formula and r grows with dim") {
  for (std::uint64_t T = 2; T <= 12; ++T) {
    ExtRational previous(1);
    for (std::uint64_t dim = 2; dim <= 30; ++dim) {
      auto f = periodic_form(T, dim);
      // by hand: 1 + (dim - 1)/T
      CHECK(*f.r == ExtRational(Q(1) + Q(static_cast<long>(dim) - 1, static_cast<long>(T))));
      CHECK(f.route->r == *f.r);
      CHECK(previous < *f.r);
      previous = *f.r;
    }
  }
  for (long n = 2; n < 40; ++n) {
    CHECK(free_dimension(FactorDescriptor::interpolated(Q(n))) == ExtRational(Q(n)));
  }
}
