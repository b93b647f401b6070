#pragma once

// Integer plumbing shared by every module: arbitrary-precision integers and
// rationals, factorisation of machine words, and a few valuations.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace asmorph {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt ipow(const BigInt& base, std::uint64_t exp);
inline BigInt ipow(std::uint64_t base, std::uint64_t exp) { return ipow(BigInt(base), exp); }

/// p^e + 1, the exponent of the curve B_e.
inline BigInt pk1(std::uint64_t p, std::uint64_t e) { return ipow(p, e) + 1; }

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);
BigInt gcd(const BigInt& a, const BigInt& b);

/// Deterministic Miller-Rabin for the full 64-bit range.
bool is_prime(std::uint64_t n);

/// Prime factorisation (trial division + Pollard rho), sorted by prime.
std::vector<std::pair<std::uint64_t, unsigned>> factor(std::uint64_t n);

/// All positive divisors, ascending.
std::vector<std::uint64_t> divisors(std::uint64_t n);

/// Throws InvalidParameters when the value does not fit.
std::uint64_t to_u64(const BigInt& v, const char* what = "value");
bool fits_u64(const BigInt& v);

/// 2-adic valuation; v must be nonzero.
unsigned nu2(const BigInt& v);
BigInt odd_part(const BigInt& v);

bool divides(const BigInt& d, const BigInt& n);

std::string to_string(const BigInt& v);
std::string to_string(const Rational& v);

}  // namespace asmorph
