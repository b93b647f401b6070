#include "asmorph/arith.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "asmorph/error.hpp"

namespace asmorph {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::NotOdd: return "NotOdd";
    case ErrorKind::InvalidParameters: return "InvalidParameters";
    case ErrorKind::CtxMismatch: return "CtxMismatch";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::ZeroElement: return "ZeroElement";
    case ErrorKind::OrderNotAvailable: return "OrderNotAvailable";
    case ErrorKind::NotCoprime: return "NotCoprime";
    case ErrorKind::ZeroCoefficient: return "ZeroCoefficient";
    case ErrorKind::GuardExceeded: return "GuardExceeded";
    case ErrorKind::BaseFieldMismatch: return "BaseFieldMismatch";
    case ErrorKind::NotDivisible: return "NotDivisible";
    case ErrorKind::NotOnSource: return "NotOnSource";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::InvalidS: return "InvalidS";
    case ErrorKind::InvalidR: return "InvalidR";
    case ErrorKind::InternalInconsistency: return "InternalInconsistency";
    case ErrorKind::NormalFormNotFound: return "NormalFormNotFound";
    case ErrorKind::StructureMismatch: return "StructureMismatch";
  }
  return "Unknown";
}

BigInt ipow(const BigInt& base, std::uint64_t exp) {
  BigInt result = 1;
  BigInt b = base;
  while (exp != 0) {
    if (exp & 1U) result *= b;
    exp >>= 1U;
    if (exp != 0) b *= b;
  }
  return result;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

BigInt gcd(const BigInt& a, const BigInt& b) { return boost::multiprecision::gcd(a, b); }

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e != 0) {
    if (e & 1U) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1U;
  }
  return r;
}

std::uint64_t pollard_rho(std::uint64_t n) {
  if (n % 2 == 0) return 2;
  for (std::uint64_t c = 1;; ++c) {
    std::uint64_t x = 2;
    std::uint64_t y = 2;
    std::uint64_t d = 1;
    auto f = [&](std::uint64_t v) { return (mulmod(v, v, n) + c) % n; };
    while (d == 1) {
      x = f(x);
      y = f(f(y));
      d = std::gcd(x > y ? x - y : y - x, n);
    }
    if (d != n) return d;
  }
}

void factor_into(std::uint64_t n, std::vector<std::uint64_t>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  std::uint64_t d = pollard_rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t sp : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % sp == 0) return n == sp;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<std::pair<std::uint64_t, unsigned>> factor(std::uint64_t n) {
  ensure(n != 0, ErrorKind::InvalidParameters, "factor(0)");
  std::vector<std::uint64_t> primes;
  for (std::uint64_t q = 2; q < 1000 && q * q <= n; ++q) {
    while (n % q == 0) {
      primes.push_back(q);
      n /= q;
    }
  }
  factor_into(n, primes);
  std::sort(primes.begin(), primes.end());
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t q : primes) {
    if (!out.empty() && out.back().first == q) {
      ++out.back().second;
    } else {
      out.emplace_back(q, 1);
    }
  }
  return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out{1};
  for (auto [q, e] : factor(n)) {
    const std::size_t base = out.size();
    std::uint64_t qp = 1;
    for (unsigned i = 0; i < e; ++i) {
      qp *= q;
      for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * qp);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool fits_u64(const BigInt& v) { return v >= 0 && v <= BigInt(std::numeric_limits<std::uint64_t>::max()); }

std::uint64_t to_u64(const BigInt& v, const char* what) {
  ensure(fits_u64(v), ErrorKind::InvalidParameters, std::string(what) + " does not fit in 64 bits");
  return v.convert_to<std::uint64_t>();
}

unsigned nu2(const BigInt& v) {
  ensure(v != 0, ErrorKind::InvalidParameters, "nu2(0)");
  return static_cast<unsigned>(boost::multiprecision::lsb(boost::multiprecision::abs(v)));
}

BigInt odd_part(const BigInt& v) { return v >> nu2(v); }

bool divides(const BigInt& d, const BigInt& n) {
  if (d == 0) return n == 0;
  return n % d == 0;
}

std::string to_string(const BigInt& v) { return v.str(); }

std::string to_string(const Rational& v) {
  if (boost::multiprecision::denominator(v) == 1) return boost::multiprecision::numerator(v).str();
  return boost::multiprecision::numerator(v).str() + "/" + boost::multiprecision::denominator(v).str();
}

}  // namespace asmorph
