#include <doctest.h>

#include "asmorph/error.hpp"
#include "asmorph/morphism.hpp"

using namespace asmorph;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::InternalInconsistency;
}

}  // namespace

TEST_CASE("divisibility of p^l + 1 into p^k + 1") {
  const auto w313 = divides_pk1(3, 1, 3);
  CHECK(w313.divides);
  CHECK(w313.l_divides_k);
  CHECK(w313.quotient_odd);
  const auto w312 = divides_pk1(3, 1, 2);
  CHECK_FALSE(w312.divides);
  CHECK_FALSE(w312.quotient_odd);
  CHECK(divides_pk1(7, 5, 5).divides);
  for (std::uint64_t p : {3, 5, 7})
    for (unsigned l = 1; l <= 12; ++l)
      for (unsigned k = l; k <= 24; ++k) CHECK(divides_pk1(p, l, k).divides == ((pk1(p, k) % pk1(p, l)) == 0));
}

TEST_CASE("gcd of p^a + 1 and p^b + 1") {
  CHECK(gcd_pk1(3, 2, 4) == 2);
  CHECK(gcd_pk1(3, 3, 9) == 28);
  CHECK(gcd_pk1(3, 2, 6) == 10);
  for (std::uint64_t p : {3, 5, 7})
    for (unsigned a = 1; a <= 15; ++a)
      for (unsigned b = 1; b <= 15; ++b) CHECK(gcd_pk1(p, a, b) == gcd(pk1(p, a), pk1(p, b)));
}

TEST_CASE("degree bound") {
  const DegreeBound b331 = degree_bound(3, 3, 1);
  CHECK(b331.numerator == 52);
  CHECK(b331.denominator == 4);
  CHECK(b331.floor == 13);
  CHECK(degree_bound(3, 2, 1).floor == 4);
  const DegreeBound b = degree_bound(3, 5, 2);
  CHECK(b.denominators_positive);
  CHECK(b.pole_ratio_exceeds);
  CHECK(b.twice_degree_exceeds);
  CHECK_THROWS_AS(degree_bound(3, 2, 2), Error);
}

TEST_CASE("build_rho") {
  CHECK(build_rho(3, 3, 1).t == 7);
  CHECK(build_rho(3, 3, 1).degree == 7);
  CHECK(build_rho(5, 3, 1).t == 21);
  CHECK(kind_of([] { build_rho(3, 2, 1); }) == ErrorKind::NotDivisible);
}

TEST_CASE("rho maps points of B_3 onto B_1") {
  const MorphismSpec spec = build_rho(3, 3, 1);
  const CurveBk source = make_curve(3, 3, -1);
  const CurveBk target = make_curve(3, 1, -1);
  for (unsigned n = 1; n <= 4; ++n) {
    const FieldCtx& f = make_field(3, n);
    for (const CurvePoint& pt : enumerate_points(source, f)) {
      const CurvePoint img = apply_rho(spec, pt, f);
      CHECK(is_on_curve(target, img, f));
      if (const auto* a = std::get_if<AffinePoint>(&pt)) {
        const auto& b = std::get<AffinePoint>(img);
        CHECK(b.x == pow(a->x, std::uint64_t{7}));
        CHECK(b.y == a->y);
      } else {
        CHECK(is_infinity(img));
      }
    }
    const FiberCensus census = fiber_census(spec, f);
    CHECK(census.source_points == count_points(source, n));
    CHECK(census.infinity_fiber == 1);
    CHECK(census.max_fiber <= 7);
  }
  const FieldCtx& f3 = make_field(3, 1);
  CHECK(kind_of([&] { apply_rho(spec, AffinePoint{FieldElem::from_int(f3, 1), FieldElem(f3)}, f3); }) ==
        ErrorKind::NotOnSource);
}

TEST_CASE("totally ramified gate") {
  CHECK(kind_of([] { decide_totally_ramified(3, 3, 1, 7); }) == ErrorKind::PreconditionViolated);
  CHECK(kind_of([] { decide_totally_ramified(3, 6, 2, 9); }) == ErrorKind::PreconditionViolated);
  CHECK(decide_totally_ramified(3, 6, 2, 73).consistent);
  CHECK_FALSE(decide_totally_ramified(3, 6, 2, 74).consistent);
  for (long d = 1; d < 200; ++d)
    if (d % 3 != 0) CHECK_FALSE(decide_totally_ramified(3, 4, 2, d).consistent);
}

TEST_CASE("apdp") {
  CHECK(apdp_check(2, 9, 2));
  CHECK_FALSE(apdp_check(2, 9, 1));
  CHECK_THROWS_AS(apdp_check(10, 9, 1), Error);
  for (long P = 1; P <= 60; ++P)
    for (long A = 1; A <= P; ++A) {
      CHECK(apdp_check(A, P, A));
      for (long D = 1; D <= 60; ++D)
        if (apdp_check(A, P, D)) CHECK(D == A);
    }
}
