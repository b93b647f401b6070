#include <doctest.h>

#include "asmorph/error.hpp"
#include "asmorph/quotient.hpp"

using namespace asmorph;

TEST_CASE("different components") {
  const auto a = different_components(3, 3, {7, 1, 0});
  CHECK(a.delta1 == 18);
  CHECK(a.dPk == 6);
  const auto b = different_components(3, 3, {8, 2, 0});
  CHECK(b.delta1 == 13);
  CHECK(b.dPk == 7);
  CHECK_THROWS_AS(different_components(3, 3, {7, 2, 0}), Error);
  CHECK_THROWS_AS(different_components(5, 1, {3, 3, 0}), Error);
}

TEST_CASE("quotient genus") {
  for (unsigned k = 1; k <= 6; ++k) {
    CHECK(quotient_genus(3, k, {1, 1, 0}).value == Rational(genus(3, k)));
    const QuotientGenus full = quotient_genus(3, k, {pk1(3, k) * 2, 2, 0});
    CHECK(full.value == 0);
    CHECK(full.integral);
  }
  const QuotientGenus g = quotient_genus(3, 3, {7, 1, 0});
  CHECK(g.value == 3);
  CHECK(g.value == Rational(genus(3, 1)));
}

TEST_CASE("Riemann-Hurwitz identity") {
  CHECK(rh_consistency(3, 1, {1, 1, 0}));
  for (std::uint64_t p : {3, 5})
    for (unsigned k = 1; k <= 4; ++k) {
      const std::uint64_t N = to_u64(pk1(p, k) * (p - 1));
      for (std::uint64_t m : divisors(N))
        for (std::uint64_t t : divisors(p - 1)) {
          if (m % t != 0) continue;
          for (unsigned r = 0; r <= 2 * k; ++r) {
            const GroupShape g{m, t, r};
            CHECK(rh_consistency(p, k, g));
            // Recompute 2g - 2 = |G| (2 g_Q - 2) + deg Diff by hand.
            const auto diff = different_components(p, k, g);
            const Rational order = Rational(ipow(p, r) * m);
            const Rational lhs = 2 * Rational(genus(p, k)) - 2;
            CHECK(lhs == order * (2 * quotient_genus(p, k, g).value - 2) + Rational(diff.delta1 + diff.dPk));
            DifferentComponents off = diff;
            off.dPk += 1;
            CHECK_FALSE(rh_consistency(p, k, g, off));
          }
        }
    }
}

TEST_CASE("genera of the cyclic subgroups for k = 1 are integral") {
  for (std::uint64_t s : divisors(8)) {
    const GroupShape g = shape_of(subgroup_params(3, 1, s, 0));
    const QuotientGenusReport rep = quotient_report(3, 1, g);
    CHECK(rep.genus.integral);
    CHECK(rep.rh_consistent);
    CHECK(rep.group_order == g.m);
  }
}

TEST_CASE("orbit structure") {
  const AutContext a31 = make_aut_context(3, 1, 4);
  const OrbitReport s1 = verify_orbit_structure(a31, 1);
  CHECK(s1.t == 2);
  CHECK(s1.origin_fixed);
  CHECK(s1.axis_orbits == std::vector<std::uint64_t>{2});
  CHECK(s1.off_axis_short == 0);
  CHECK(s1.translates_in_axis == 0);
  const OrbitReport s2 = verify_orbit_structure(a31, 2);
  CHECK(s2.t == 1);
  CHECK(s2.axis_orbits == std::vector<std::uint64_t>{1, 1});

  const AutContext a33 = make_aut_context(3, 3, 6);
  const OrbitReport s7 = verify_orbit_structure(a33, 7, 25);
  CHECK(s7.m == 8);
  CHECK(s7.t == 2);
  CHECK(s7.axis_orbits == std::vector<std::uint64_t>{2});
  CHECK(s7.off_axis_short == 0);
  CHECK_THROWS_AS(verify_orbit_structure(a31, 3), Error);
}
