#pragma once

// Pole numbers at the point at infinity P_k of B_k and one-point
// Riemann-Roch spaces L(n P_k), handled purely through exponents.

#include <cstdint>
#include <vector>

#include "asmorph/arith.hpp"
#include "asmorph/curve.hpp"

namespace asmorph {

/// The numerical semigroup <p, p^k + 1>.
struct WeierstrassSemigroup {
  std::uint64_t p = 3;
  unsigned k = 1;

  std::uint64_t a() const noexcept { return p; }
  std::uint64_t b() const;
  /// a*b - a - b; every larger integer is a pole number.
  std::uint64_t frobenius_number() const;
};

/// Errors: InvalidParameters when p is not an odd prime, k = 0, or p^k + 1
/// does not fit the 64-bit sieve.
WeierstrassSemigroup weierstrass_semigroup(std::uint64_t p, unsigned k);

bool is_pole_number(const WeierstrassSemigroup& sg, std::uint64_t n);

/// Sorted gap sequence. Its length is the genus.
std::vector<std::uint64_t> gaps(const WeierstrassSemigroup& sg);

/// x^i y^j with pole order i*p + j*(p^k+1) at infinity.
struct RRMonomial {
  std::uint64_t i = 0;
  std::uint64_t j = 0;
  std::uint64_t pole_order = 0;

  friend bool operator==(const RRMonomial&, const RRMonomial&) = default;
};

/// Basis of L(n P_k) ordered by pole order.
std::vector<RRMonomial> rr_basis(const CurveBk& curve, std::uint64_t n);
std::uint64_t rr_dim(const CurveBk& curve, std::uint64_t n);

/// Valuation of x^(p^(k-1)) / y at P_k given v(x) = -p and v(y) = -(p^k+1).
/// Throws InternalInconsistency if the result is not 1.
BigInt uniformizer_valuation(std::uint64_t p, unsigned k);

}  // namespace asmorph
