#include "asmorph/infinity.hpp"

#include <algorithm>

#include "asmorph/error.hpp"

namespace asmorph {

std::uint64_t WeierstrassSemigroup::b() const { return to_u64(pk1(p, k), "p^k+1"); }

std::uint64_t WeierstrassSemigroup::frobenius_number() const {
  const std::uint64_t bb = b();
  return a() * bb - a() - bb;
}

WeierstrassSemigroup weierstrass_semigroup(std::uint64_t p, unsigned k) {
  ensure(p > 2 && is_prime(p), ErrorKind::InvalidParameters, "p must be an odd prime");
  ensure(k >= 1, ErrorKind::InvalidParameters, "k must be >= 1");
  const BigInt b = pk1(p, k);
  // Keep a*b inside 64 bits so the Frobenius number is representable.
  ensure(b * p < BigInt(1) << 62, ErrorKind::InvalidParameters, "semigroup too large to sieve");
  return {p, k};
}

bool is_pole_number(const WeierstrassSemigroup& sg, std::uint64_t n) {
  const std::uint64_t b = sg.b();
  // Representations with j < p are unique, so it is enough to try j = 0..p-1.
  for (std::uint64_t j = 0; j < sg.p; ++j) {
    if (j * b > n) break;
    if ((n - j * b) % sg.p == 0) return true;
  }
  return false;
}

std::vector<std::uint64_t> gaps(const WeierstrassSemigroup& sg) {
  const std::uint64_t bound = sg.frobenius_number();
  std::vector<char> reachable(bound + 1, 0);
  reachable[0] = 1;
  const std::uint64_t b = sg.b();
  for (std::uint64_t n = 1; n <= bound; ++n) {
    if ((n >= sg.p && reachable[n - sg.p]) || (n >= b && reachable[n - b])) reachable[n] = 1;
  }
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = 1; n <= bound; ++n) {
    if (!reachable[n]) out.push_back(n);
  }
  return out;
}

std::vector<RRMonomial> rr_basis(const CurveBk& curve, std::uint64_t n) {
  const WeierstrassSemigroup sg = weierstrass_semigroup(curve.p, curve.k);
  const std::uint64_t b = sg.b();
  std::vector<RRMonomial> out;
  for (std::uint64_t j = 0; j < curve.p && j * b <= n; ++j) {
    for (std::uint64_t i = 0; i * curve.p + j * b <= n; ++i) {
      out.push_back({i, j, i * curve.p + j * b});
    }
  }
  std::ranges::sort(out, {}, &RRMonomial::pole_order);
  return out;
}

std::uint64_t rr_dim(const CurveBk& curve, std::uint64_t n) {
  const WeierstrassSemigroup sg = weierstrass_semigroup(curve.p, curve.k);
  const std::uint64_t b = sg.b();
  std::uint64_t dim = 0;
  for (std::uint64_t j = 0; j < curve.p && j * b <= n; ++j) dim += (n - j * b) / curve.p + 1;
  return dim;
}

BigInt uniformizer_valuation(std::uint64_t p, unsigned k) {
  ensure(p > 2 && is_prime(p) && k >= 1, ErrorKind::InvalidParameters, "need an odd prime p and k >= 1");
  const BigInt vx = -BigInt(p);
  const BigInt vy = -pk1(p, k);
  const BigInt v = ipow(BigInt(p), k - 1) * vx - vy;
  ensure(v == 1, ErrorKind::InternalInconsistency, "x^(p^(k-1))/y is not a uniformizer");
  return v;
}

}  // namespace asmorph
