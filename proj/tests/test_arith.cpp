#include <doctest.h>

#include <numeric>

#include "asmorph/arith.hpp"
#include "asmorph/error.hpp"

using namespace asmorph;

namespace {

bool naive_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

TEST_CASE("ipow and pk1") {
  CHECK(ipow(3, 0) == 1);
  CHECK(ipow(3, 4) == 81);
  CHECK(pk1(3, 3) == 28);
  CHECK(pk1(5, 3) == 126);
  CHECK(to_string(ipow(3, 40)) == "12157665459056928801");
}

TEST_CASE("is_prime agrees with trial division below 20000") {
  for (std::uint64_t n = 0; n < 20000; ++n) CHECK_MESSAGE(is_prime(n) == naive_prime(n), n);
  CHECK(is_prime(18446744073709551557ULL));   // largest 64-bit prime
  CHECK_FALSE(is_prime(3215031751ULL));        // strong pseudoprime to bases 2, 3, 5, 7
}

TEST_CASE("factor and divisors") {
  for (std::uint64_t n = 1; n < 3000; ++n) {
    std::uint64_t prod = 1;
    for (auto [q, e] : factor(n)) {
      CHECK(is_prime(q));
      for (unsigned i = 0; i < e; ++i) prod *= q;
    }
    CHECK(prod == n);
    std::vector<std::uint64_t> naive;
    for (std::uint64_t d = 1; d <= n; ++d)
      if (n % d == 0) naive.push_back(d);
    CHECK(divisors(n) == naive);
  }
  const std::uint64_t big = 4294967291ULL * 4294967279ULL;
  const auto f = factor(big);
  REQUIRE(f.size() == 2);
  CHECK(f[0].first == 4294967279ULL);
  CHECK(f[1].first == 4294967291ULL);
}

TEST_CASE("gcd, valuations and divisibility") {
  for (std::uint64_t a = 0; a < 60; ++a)
    for (std::uint64_t b = 0; b < 60; ++b) CHECK(gcd_u64(a, b) == std::gcd(a, b));
  CHECK(gcd(BigInt(28), BigInt(19684)) == 28);
  CHECK(nu2(BigInt(96)) == 5);
  CHECK(odd_part(BigInt(96)) == 3);
  CHECK(divides(BigInt(4), BigInt(28)));
  CHECK_FALSE(divides(BigInt(4), BigInt(10)));
}

TEST_CASE("u64 conversion guard") {
  CHECK(fits_u64(ipow(2, 64) - 1));
  CHECK_FALSE(fits_u64(ipow(2, 64)));
  CHECK_THROWS_AS(to_u64(ipow(2, 64)), Error);
  CHECK(to_u64(BigInt(42)) == 42);
  CHECK(to_string(Rational(3, 6)) == "1/2");
}
