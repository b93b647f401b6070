#pragma once

// The covers B_k -> B_l: divisibility of p^l + 1 into p^k + 1, the explicit
// map (x, y) -> (x^t, y), and gates on claimed degrees.

#include <cstdint>
#include <map>
#include <string>

#include "asmorph/arith.hpp"
#include "asmorph/config.hpp"
#include "asmorph/curve.hpp"
#include "asmorph/error.hpp"

namespace asmorph {

struct DivisibilityWitness {
  bool divides = false;       // (p^l + 1) | (p^k + 1), by big-integer division
  bool l_divides_k = false;
  bool quotient_odd = false;  // k / l odd (only meaningful when l | k)
};

/// Both sides computed independently. Errors: InternalInconsistency if they disagree.
DivisibilityWitness divides_pk1(std::uint64_t p, std::uint64_t l, std::uint64_t k);

/// gcd(p^a + 1, p^b + 1) by the closed form, checked against Euclid.
BigInt gcd_pk1(std::uint64_t p, std::uint64_t a, std::uint64_t b);

/// floor((p^(k+1) - p^k - 2) / (p^(l+1) - p^l - 2)) together with the two
/// comparisons used to rule out totally ramified covers. Both comparisons hold
/// whenever l >= 2; for l = 1 they can fail and are reported as computed.
struct DegreeBound {
  BigInt numerator;
  BigInt denominator;
  BigInt floor;
  bool denominators_positive = false;
  bool pole_ratio_exceeds = false;   // (p^k + 1) / p > bound
  bool twice_degree_exceeds = false; // 2 (p^k + 1) / (p^l + 1) > bound
};

/// Errors: InvalidParameters unless 1 <= l < k.
DegreeBound degree_bound(std::uint64_t p, std::uint64_t k, std::uint64_t l);

struct MorphismSpec {
  std::uint64_t p = 3;
  unsigned k = 0;
  unsigned l = 0;
  std::uint64_t c = 1;  // shared coefficient of source and target
  BigInt t;             // (p^k + 1) / (p^l + 1), also the degree
  BigInt degree;
};

/// Errors: NotDivisible when p^l + 1 does not divide p^k + 1.
MorphismSpec build_rho(std::uint64_t p, unsigned k, unsigned l, std::int64_t c = -1);

/// (x, y) -> (x^t, y), infinity -> infinity.
/// Errors: NotOnSource, InternalInconsistency if the image misses the target.
CurvePoint apply_rho(const MorphismSpec& spec, const CurvePoint& pt, const FieldCtx& ctx);

struct FiberCensus {
  std::map<CurvePoint, std::uint64_t> fibers;  // target point -> preimage count
  std::uint64_t source_points = 0;
  std::uint64_t target_points = 0;             // rational points of the target
  std::uint64_t max_fiber = 0;
  std::uint64_t infinity_fiber = 0;
};

/// Pushes every rational point of the source through rho. Throws
/// InternalInconsistency if the fiber over infinity is not a single point or a
/// fiber exceeds the degree. Errors: GuardExceeded.
FiberCensus fiber_census(const MorphismSpec& spec, const FieldCtx& ctx, const Config& cfg = {});

struct RamificationVerdict {
  bool consistent = false;
  std::string reason;
};

/// Gate for a totally ramified cover B_k -> B_l of claimed degree d prime to p.
/// Errors: PreconditionViolated when l <= 1, l >= k or gcd(d, p) != 1.
RamificationVerdict decide_totally_ramified(std::uint64_t p, unsigned k, unsigned l, const BigInt& d);

/// Whether (A P + 1) / (D P + 1) is an integer. Requires 1 <= A <= P and D > 0.
template <class Int>
bool apdp_check(const Int& A, const Int& P, const Int& D) {
  ensure(Int(1) <= A && A <= P && D > Int(0), ErrorKind::InvalidParameters, "apdp needs 1 <= A <= P and D > 0");
  return (A * P + 1) % (D * P + 1) == 0;
}

}  // namespace asmorph
