#include <doctest.h>

#include <set>

#include "asmorph/error.hpp"
#include "asmorph/infinity.hpp"

using namespace asmorph;

namespace {

std::set<std::uint64_t> naive_semigroup(std::uint64_t a, std::uint64_t b, std::uint64_t limit) {
  std::set<std::uint64_t> out;
  for (std::uint64_t i = 0; i * a <= limit; ++i)
    for (std::uint64_t j = 0; i * a + j * b <= limit; ++j) out.insert(i * a + j * b);
  return out;
}

}  // namespace

TEST_CASE("pole numbers") {
  const auto sg = weierstrass_semigroup(3, 1);
  CHECK(sg.b() == 4);
  CHECK(sg.frobenius_number() == 5);
  CHECK(is_pole_number(sg, 0));
  CHECK_FALSE(is_pole_number(sg, 1));
  CHECK(is_pole_number(sg, 7));
  CHECK(gaps(sg) == std::vector<std::uint64_t>{1, 2, 5});
  CHECK_THROWS_AS(weierstrass_semigroup(4, 1), Error);
  CHECK_THROWS_AS(weierstrass_semigroup(3, 0), Error);
}

TEST_CASE("gaps agree with naive enumeration and count the genus") {
  for (std::uint64_t p : {3, 5, 7}) {
    for (unsigned k = 1; k <= 3; ++k) {
      const auto sg = weierstrass_semigroup(p, k);
      const std::uint64_t limit = sg.frobenius_number() + p + 2;
      const auto pole = naive_semigroup(sg.a(), sg.b(), limit);
      std::vector<std::uint64_t> expected;
      for (std::uint64_t n = 0; n <= limit; ++n) {
        CHECK(is_pole_number(sg, n) == (pole.count(n) == 1));
        if (pole.count(n) == 0) expected.push_back(n);
      }
      CHECK(gaps(sg) == expected);
      CHECK(gaps(sg).size() == genus(p, k));
      CHECK(expected.back() == sg.frobenius_number());
    }
  }
}

TEST_CASE("Riemann-Roch bases") {
  const CurveBk b1 = make_curve(3, 1, -1);
  CHECK(rr_basis(b1, 0) == std::vector<RRMonomial>{{0, 0, 0}});
  CHECK(rr_basis(b1, 4) == std::vector<RRMonomial>{{0, 0, 0}, {1, 0, 3}, {0, 1, 4}});
  CHECK(rr_basis(b1, 5).size() == 3);
  CHECK(rr_dim(b1, 10) == 8);
  for (auto [p, k] : std::vector<std::pair<std::uint64_t, unsigned>>{{3, 1}, {3, 2}, {5, 1}, {5, 2}}) {
    const CurveBk b = make_curve(p, k, 1);
    const std::uint64_t g = genus(p, k).convert_to<std::uint64_t>();
    const auto sg = weierstrass_semigroup(p, k);
    std::uint64_t poles_so_far = 0;
    for (std::uint64_t n = 0; n <= 2 * g + 20; ++n) {
      if (is_pole_number(sg, n)) ++poles_so_far;
      const auto basis = rr_basis(b, n);
      CHECK(basis.size() == poles_so_far);
      CHECK(rr_dim(b, n) == poles_so_far);
      if (n >= 2 * g - 1) CHECK(rr_dim(b, n) == n - g + 1);
      for (std::size_t i = 0; i < basis.size(); ++i) {
        CHECK(basis[i].j < p);
        CHECK(basis[i].pole_order == basis[i].i * p + basis[i].j * sg.b());
        if (i > 0) CHECK(basis[i - 1].pole_order < basis[i].pole_order);
      }
    }
  }
}

TEST_CASE("uniformizer at infinity") {
  CHECK(uniformizer_valuation(3, 1) == 1);
  CHECK(uniformizer_valuation(3, 3) == 1);
  CHECK(uniformizer_valuation(7, 2) == 1);
}
