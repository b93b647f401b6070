#include <doctest.h>

#include "asmorph/error.hpp"
#include "asmorph/zeta.hpp"

using namespace asmorph;

namespace {

std::vector<BigInt> ints(std::initializer_list<long long> v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("frozen L-polynomials over F_3") {
  const LPolynomial b1m = lpolynomial(make_curve(3, 1, -1));
  const LPolynomial b1p = lpolynomial(make_curve(3, 1, 1));
  CHECK(b1m.coeffs == ints({1, 0, -3, 0, -9, 0, 27}));
  CHECK(b1p.coeffs == ints({1, 0, 9, 0, 27, 0, 27}));
  CHECK(b1m != b1p);
  const LPolynomial b2m = lpolynomial(make_curve(3, 2, -1));
  CHECK(b2m.coeffs == ints({1, 0, 3, 0, 0, 0, 0, 0, -162, 0, -486, 0, 0, 0, 0, 0, 6561, 0, 19683}));
  CHECK(divides(b1m, b2m));
  CHECK(divides(b1p, b2m));
  CHECK(lpolynomial(make_curve(3, 2, 1)) == b2m);
  CHECK_FALSE(divides(LPolynomial{BigInt(3), 1, ints({1, 1, 3})}, b2m));
  CHECK_FALSE(divides(b2m, b1m));
}

TEST_CASE("L-polynomial predicts counts beyond the ones it was built from") {
  for (std::int64_t c : {-1, 1}) {
    const CurveBk b = make_curve(3, 1, c);
    const LPolynomial L = lpolynomial(b);
    const auto predicted = predicted_counts(L, 8);
    for (unsigned n = 1; n <= 8; ++n) CHECK(predicted[n - 1] == count_points(b, n));
  }
  // Built from N_1..N_9; N_10..N_12 are genuine predictions.
  const CurveBk b2 = make_curve(3, 2, -1);
  const auto predicted = predicted_counts(lpolynomial(b2), 12);
  for (unsigned n = 1; n <= 12; ++n) CHECK(predicted[n - 1] == count_points(b2, n));
}

TEST_CASE("Newton recursion round trip and validation") {
  const LPolynomial L = lpolynomial(make_curve(3, 1, -1));
  const auto counts = predicted_counts(L, 3);
  CHECK(lpolynomial_from_counts(L.q, 3, counts) == L);
  CHECK(satisfies_functional_equation(L));
  CHECK(max_root_modulus_deviation(L) < 1e-9);

  LPolynomial broken = L;
  broken.coeffs[2] += 1;
  CHECK_FALSE(satisfies_functional_equation(broken));
  CHECK_THROWS_AS(validate(broken), Error);

  // Symmetric but with roots off the circle |z| = sqrt(3).
  LPolynomial off{BigInt(3), 1, ints({1, 5, 3})};
  CHECK(satisfies_functional_equation(off));
  CHECK(max_root_modulus_deviation(off) > 0.1);
  CHECK_THROWS_AS(validate(off), Error);

  // Counts that do not come from a curve make a Newton division inexact.
  CHECK_THROWS_AS(lpolynomial_from_counts(BigInt(3), 2, ints({4, 9})), Error);
}

TEST_CASE("Weil bound") {
  CHECK(weil_bound_holds(BigInt(28), BigInt(3), 2, BigInt(3)));
  CHECK(weil_bound_holds(BigInt(1 + 9 + 18), BigInt(3), 2, BigInt(3)));
  CHECK_FALSE(weil_bound_holds(BigInt(1 + 9 + 19), BigInt(3), 2, BigInt(3)));
}

TEST_CASE("divisibility and obstruction") {
  const LPolynomial a{BigInt(3), 1, ints({1, 0, 3})};
  const LPolynomial b{BigInt(5), 1, ints({1, 0, 5})};
  CHECK_THROWS_AS(divides(a, b), Error);
  CHECK(divides(a, a));
  CHECK(kleiman_serre_obstruction(3, 2, 1, -1) == Obstruction::NoObstruction);
  CHECK(kleiman_serre_obstruction(3, 2, 2, -1) == Obstruction::NoObstruction);
  CHECK(kleiman_serre_obstruction(3, 2, 1, 1) == Obstruction::NoObstruction);
  CHECK(kleiman_serre_obstruction(3, 1, 2, -1) == Obstruction::Obstructed);
}

TEST_CASE("lpolynomial respects the guard") {
  Config tight;
  tight.max_field_log2 = 10;
  CHECK_THROWS_AS(lpolynomial(make_curve(3, 2, -1), tight), Error);
}
