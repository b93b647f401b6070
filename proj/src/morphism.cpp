#include "asmorph/morphism.hpp"

#include <numeric>

namespace asmorph {

DivisibilityWitness divides_pk1(std::uint64_t p, std::uint64_t l, std::uint64_t k) {
  ensure(l >= 1 && k >= 1, ErrorKind::InvalidParameters, "exponents must be >= 1");
  DivisibilityWitness w;
  w.divides = pk1(p, k) % pk1(p, l) == 0;
  w.l_divides_k = k % l == 0;
  w.quotient_odd = w.l_divides_k && (k / l) % 2 == 1;
  ensure(w.divides == (w.l_divides_k && w.quotient_odd), ErrorKind::InternalInconsistency,
         "divisibility of p^l+1 into p^k+1 disagrees with the parity of k/l");
  return w;
}

BigInt gcd_pk1(std::uint64_t p, std::uint64_t a, std::uint64_t b) {
  ensure(a >= 1 && b >= 1, ErrorKind::InvalidParameters, "exponents must be >= 1");
  const std::uint64_t g = std::gcd(a, b);
  const BigInt closed = ((a / g) % 2 == 1 && (b / g) % 2 == 1) ? pk1(p, g) : BigInt(2);
  ensure(closed == gcd(pk1(p, a), pk1(p, b)), ErrorKind::InternalInconsistency,
         "closed form for gcd(p^a+1, p^b+1) disagrees with Euclid");
  return closed;
}

DegreeBound degree_bound(std::uint64_t p, std::uint64_t k, std::uint64_t l) {
  ensure(1 <= l && l < k, ErrorKind::InvalidParameters, "need 1 <= l < k");
  const BigInt pk = ipow(p, k);
  const BigInt pl = ipow(p, l);
  DegreeBound b;
  b.numerator = pk * p - pk - 2;
  b.denominator = pl * p - pl - 2;
  b.denominators_positive = b.denominator > 0;
  b.floor = b.numerator / b.denominator;
  // Compare fractions by cross-multiplying positive denominators.
  b.pole_ratio_exceeds = (pk + 1) * b.denominator > b.numerator * p;
  b.twice_degree_exceeds = 2 * (pk + 1) * b.denominator > b.numerator * (pl + 1);
  return b;
}

MorphismSpec build_rho(std::uint64_t p, unsigned k, unsigned l, std::int64_t c) {
  const CurveBk source = make_curve(p, k, c);
  ensure(l >= 1, ErrorKind::InvalidParameters, "l must be >= 1");
  if (!divides_pk1(p, l, k).divides) {
    fail(ErrorKind::NotDivisible, "p^l+1 does not divide p^k+1");
  }
  MorphismSpec spec{p, k, l, source.c, pk1(p, k) / pk1(p, l), 0};
  spec.degree = spec.t;

  // t is also the alternating sum of powers of p^l, which is what makes
  // x^t carry x^(p^k+1) to (x^t)^(p^l+1).
  BigInt alt = 0;
  const BigInt pl = ipow(p, l);
  BigInt term = 1;
  for (unsigned i = 0; i < k / l; ++i) {
    alt += (i % 2 == 0) ? term : BigInt(-term);
    term *= pl;
  }
  ensure(alt == spec.t && spec.t * pk1(p, l) == pk1(p, k), ErrorKind::InternalInconsistency,
         "degree of rho is not the alternating sum");
  return spec;
}

CurvePoint apply_rho(const MorphismSpec& spec, const CurvePoint& pt, const FieldCtx& ctx) {
  const CurveBk source{spec.p, spec.k, spec.c};
  const CurveBk target{spec.p, spec.l, spec.c};
  if (!is_on_curve(source, pt, ctx)) fail(ErrorKind::NotOnSource, "point is not on B_k");
  if (is_infinity(pt)) return pt;
  const auto& a = std::get<AffinePoint>(pt);
  CurvePoint image = AffinePoint{pow(a.x, spec.t), a.y};
  ensure(is_on_curve(target, image, ctx), ErrorKind::InternalInconsistency, "image of rho is not on B_l");
  return image;
}

FiberCensus fiber_census(const MorphismSpec& spec, const FieldCtx& ctx, const Config& cfg) {
  const CurveBk source{spec.p, spec.k, spec.c};
  const CurveBk target{spec.p, spec.l, spec.c};
  FiberCensus census;
  for (const CurvePoint& pt : enumerate_points(source, ctx, cfg)) {
    ++census.fibers[apply_rho(spec, pt, ctx)];
    ++census.source_points;
  }
  census.target_points = enumerate_points(target, ctx, cfg).size();
  for (const auto& [pt, n] : census.fibers) census.max_fiber = std::max(census.max_fiber, n);
  census.infinity_fiber = census.fibers[CurvePoint{PointAtInfinity{}}];
  ensure(census.infinity_fiber == 1, ErrorKind::InternalInconsistency, "rho is not totally ramified at infinity");
  ensure(BigInt(census.max_fiber) <= spec.degree, ErrorKind::InternalInconsistency, "fiber larger than the degree");
  return census;
}

RamificationVerdict decide_totally_ramified(std::uint64_t p, unsigned k, unsigned l, const BigInt& d) {
  ensure(p > 2 && is_prime(p), ErrorKind::InvalidParameters, "p must be an odd prime");
  ensure(1 < l && l < k, ErrorKind::PreconditionViolated, "the gate covers 1 < l < k only");
  ensure(d > 0 && gcd(d, BigInt(p)) == 1, ErrorKind::PreconditionViolated, "degree must be positive and prime to p");
  const DivisibilityWitness w = divides_pk1(p, l, k);
  if (!w.divides) {
    return {false, "p^l+1 does not divide p^k+1 (" +
                       std::string(w.l_divides_k ? "k/l is even" : "l does not divide k") + ")"};
  }
  const BigInt forced = pk1(p, k) / pk1(p, l);
  if (d != forced) return {false, "degree must equal (p^k+1)/(p^l+1) = " + to_string(forced)};
  return {true, "degree equals (p^k+1)/(p^l+1)"};
}

}  // namespace asmorph
