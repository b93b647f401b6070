#include "asmorph/curve.hpp"

#include <algorithm>
#include <future>

#include "asmorph/error.hpp"

namespace asmorph {

BigInt genus(std::uint64_t p, unsigned k) {
  ensure(p > 2 && is_prime(p), ErrorKind::InvalidParameters, "p must be an odd prime");
  ensure(k >= 1, ErrorKind::InvalidParameters, "k must be >= 1");
  return ipow(p, k) * (p - 1) / 2;
}

BigInt CurveBk::genus() const { return asmorph::genus(p, k); }

int CurveBk::sign() const noexcept {
  if (c == 1) return 1;
  if (c == p - 1) return -1;
  return 0;
}

CurveBk make_curve(std::uint64_t p, unsigned k, std::int64_t c) {
  ensure(p != 2, ErrorKind::NotOdd, "p = 2");
  ensure(is_prime(p), ErrorKind::NotPrime, std::to_string(p));
  ensure(k >= 1, ErrorKind::InvalidParameters, "k must be >= 1");
  const auto sp = static_cast<std::int64_t>(p);
  std::int64_t r = c % sp;
  if (r < 0) r += sp;
  ensure(r != 0, ErrorKind::ZeroCoefficient, "c = 0 mod p");
  // gcd(p^k + 1, p) = 1 always; the normalisation relies on it.
  ensure(gcd(pk1(p, k), BigInt(p)) == 1, ErrorKind::InternalInconsistency, "gcd(p^k+1, p) != 1");
  return CurveBk{p, k, static_cast<std::uint64_t>(r)};
}

bool satisfies_equation(const FieldElem& c, std::uint64_t p, unsigned k, const FieldElem& x, const FieldElem& y) {
  ensure(&x.ctx() == &c.ctx() && &y.ctx() == &c.ctx(), ErrorKind::CtxMismatch, "coordinates in a different field");
  return pow(y, p) + c * y == pow(x, pk1(p, k));
}

bool is_on_curve(const CurveBk& curve, const CurvePoint& pt, const FieldCtx& ctx) {
  ensure(ctx.p() == curve.p, ErrorKind::CtxMismatch, "field characteristic differs from the curve's");
  if (is_infinity(pt)) return true;
  const auto& a = std::get<AffinePoint>(pt);
  ensure(&a.x.ctx() == &ctx && &a.y.ctx() == &ctx, ErrorKind::CtxMismatch, "point not in the given field");
  return satisfies_equation(FieldElem::from_int(ctx, static_cast<std::int64_t>(curve.c)), curve.p, curve.k, a.x, a.y);
}

BigInt count_points(const FieldElem& c, unsigned k, const Config& cfg) {
  const FieldCtx& ctx = c.ctx();
  ctx.require_enumerable(cfg);
  const auto solver = additive_solver(c);
  const std::uint64_t q = ctx.size_u64();
  // x^(p^k+1) with the exponent reduced mod q-1; 0 maps to 0 either way.
  const std::uint64_t e = to_u64(pk1(ctx.p(), k) % ctx.unit_order());
  const std::uint64_t fiber = solver->fiber_size();
  auto count_range = [&](std::uint64_t lo, std::uint64_t hi) {
    std::uint64_t acc = 0;
    for (std::uint64_t i = lo; i < hi; ++i) {
      FieldElem x = FieldElem::from_index(ctx, i);
      FieldElem u = x.is_zero() ? x : pow(x, e == 0 ? ctx.size_u64() - 1 : e);
      if (solver->in_image(u)) acc += fiber;
    }
    return acc;
  };

  const std::uint64_t workers = std::max<std::uint64_t>(1, std::min<std::uint64_t>(cfg.worker_count(), q / 4096 + 1));
  std::uint64_t affine = 0;
  if (workers == 1) {
    affine = count_range(0, q);
  } else {
    std::vector<std::future<std::uint64_t>> parts;
    const std::uint64_t chunk = (q + workers - 1) / workers;
    for (std::uint64_t w = 0; w < workers; ++w) {
      const std::uint64_t lo = w * chunk;
      const std::uint64_t hi = std::min(q, lo + chunk);
      parts.push_back(std::async(std::launch::async, count_range, lo, hi));
    }
    for (auto& f : parts) affine += f.get();
  }
  return BigInt(affine) + 1;
}

BigInt count_points(const CurveBk& curve, unsigned n, const Config& cfg) {
  const FieldCtx& ctx = make_field(curve.p, n);
  return count_points(FieldElem::from_int(ctx, static_cast<std::int64_t>(curve.c)), curve.k, cfg);
}

std::vector<CurvePoint> enumerate_points(const CurveBk& curve, const FieldCtx& ctx, const Config& cfg) {
  ensure(ctx.p() == curve.p, ErrorKind::CtxMismatch, "field characteristic differs from the curve's");
  const auto solver = additive_solver(FieldElem::from_int(ctx, static_cast<std::int64_t>(curve.c)));
  const BigInt m = curve.exponent();
  std::vector<CurvePoint> out;
  for_each_element(ctx, cfg, [&](const FieldElem& x) {
    for (FieldElem& y : solver->solve(pow(x, m))) out.emplace_back(AffinePoint{x, std::move(y)});
  });
  out.emplace_back(PointAtInfinity{});
  return out;
}

void check_iso(const IsoSpec& iso) {
  const FieldElem minus_one = FieldElem::from_int(*iso.ctx, -1);
  ensure(pow(iso.a, iso.p - 1) == minus_one, ErrorKind::InternalInconsistency, "a^(p-1) != -1");
  ensure(pow(iso.b, pk1(iso.p, iso.k)) == pow(iso.a, iso.p), ErrorKind::InternalInconsistency,
         "b^(p^k+1) != a^p");
}

IsoSpec sign_flip_iso(std::uint64_t p, unsigned k, const Config& cfg) {
  make_curve(p, k, 1);
  const BigInt m = pk1(p, k);
  for (unsigned n = 1; n <= kMaxDegree; ++n) {
    const FieldCtx& ctx = make_field(p, n);
    // a needs an element of order dividing 2(p-1) but not p-1.
    if (!divides(BigInt(2 * (p - 1)), ctx.unit_order())) continue;
    ctx.require_enumerable(cfg);
    const FieldElem minus_one = FieldElem::from_int(ctx, -1);
    const BigInt& order = ctx.unit_order();
    const BigInt power_test = order / gcd(m, order);
    std::optional<FieldElem> a;
    for_each_element(ctx, cfg, [&](const FieldElem& cand) {
      if (a || cand.is_zero() || pow(cand, p - 1) != minus_one) return;
      // a^p must be an (p^k+1)-th power in the cyclic group of order q-1.
      if (pow(pow(cand, p), power_test).is_one()) a = cand;
    });
    if (!a) continue;
    const FieldElem target = pow(*a, p);
    std::optional<FieldElem> b;
    for_each_element(ctx, cfg, [&](const FieldElem& cand) {
      if (!b && pow(cand, m) == target) b = cand;
    });
    ensure(b.has_value(), ErrorKind::InternalInconsistency, "a^p is a power but no root was found");
    IsoSpec iso{p, k, &ctx, *a, *b};
    check_iso(iso);
    return iso;
  }
  fail(ErrorKind::GuardExceeded, "no extension of degree <= 32 hosts the isomorphism");
}

CurvePoint apply_sign_flip(const IsoSpec& iso, const CurvePoint& pt) {
  if (is_infinity(pt)) return pt;
  const auto& a = std::get<AffinePoint>(pt);
  return AffinePoint{a.x / iso.b, a.y / iso.a};
}

CurvePoint apply_sign_flip_inverse(const IsoSpec& iso, const CurvePoint& pt) {
  if (is_infinity(pt)) return pt;
  const auto& a = std::get<AffinePoint>(pt);
  return AffinePoint{a.x * iso.b, a.y * iso.a};
}

}  // namespace asmorph
