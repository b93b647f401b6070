#include "asmorph/autgroup.hpp"

#include <algorithm>

#include "asmorph/error.hpp"

namespace asmorph {

namespace {

BigInt group_n(std::uint64_t p, unsigned k) { return pk1(p, k) * (p - 1); }

// Order-theoretic part of the hosting conditions for F_{p^n}.
bool orders_available(std::uint64_t p, unsigned k, unsigned n) {
  const BigInt units = ipow(p, n) - 1;
  if (units % group_n(p, k) != 0) return false;
  if (units % (2 * (p - 1)) != 0) return false;
  if (k % 2 == 1) return n % (2 * k) == 0;
  return units % (2 * (ipow(p, 2 * k) - 1)) == 0;
}

bool d_constraint(std::uint64_t p, unsigned k, const FieldElem& d) {
  const FieldElem lhs = pow(d, ipow(p, 2 * k));
  return (k % 2 == 0 ? lhs + d : lhs - d).is_zero();
}

std::vector<FieldElem> d_values(std::uint64_t p, unsigned k, const FieldCtx& ctx, const Config& cfg) {
  std::vector<FieldElem> out;
  for_each_element(ctx, cfg, [&](const FieldElem& d) {
    if (d_constraint(p, k, d)) out.push_back(d);
  });
  return out;
}

FieldElem raw_linearized(std::uint64_t p, unsigned k, const FieldElem& d, const FieldElem& x) {
  FieldElem acc(x.ctx());
  FieldElem dpow = pow(d, ipow(p, k));
  FieldElem xpow = x;
  for (unsigned i = 0; i < k; ++i) {
    const FieldElem term = dpow * xpow;
    acc = (i % 2 == 0) ? acc + term : acc - term;
    dpow = pow(dpow, p);
    xpow = pow(xpow, p);
  }
  return acc;
}

// beta_{d,e} o alpha^s with its scalars precomputed.
class Action {
 public:
  Action(const AutContext& actx, const Automorphism& g) : p_(actx.p), d_(g.d), e_(g.e) {
    lambda_ = pow(actx.gamma, g.s % actx.N);
    mu_ = pow(lambda_, pk1(actx.p, actx.k));
    FieldElem dpow = pow(g.d, ipow(actx.p, actx.k));
    for (unsigned i = 0; i < actx.k; ++i) {
      coeffs_.push_back(i % 2 == 0 ? dpow : -dpow);
      dpow = pow(dpow, actx.p);
    }
  }

  CurvePoint operator()(const CurvePoint& pt) const {
    if (is_infinity(pt)) return pt;
    const auto& a = std::get<AffinePoint>(pt);
    const FieldElem x = lambda_ * a.x;
    FieldElem y = mu_ * a.y + e_;
    FieldElem xpow = x;
    for (const FieldElem& c : coeffs_) {
      y += c * xpow;
      xpow = pow(xpow, p_);
    }
    return AffinePoint{x + d_, y};
  }

 private:
  std::uint64_t p_;
  FieldElem d_, e_, lambda_, mu_;
  std::vector<FieldElem> coeffs_;
};

CurvePoint raw_apply(const AutContext& actx, const Automorphism& g, const CurvePoint& pt) {
  return Action(actx, g)(pt);
}

void require_on_curve(const AutContext& actx, const CurvePoint& pt) {
  if (!is_on_curve(actx.curve(), pt, *actx.ctx)) fail(ErrorKind::NotOnSource, "point is not on B_{k,+1}");
}

}  // namespace

unsigned field_of_definition_aut(std::uint64_t p, unsigned k, const Config& cfg) {
  make_curve(p, k, 1);
  for (unsigned n = 1; n <= kMaxDegree; ++n) {
    if (!orders_available(p, k, n)) continue;
    const FieldCtx& ctx = make_field(p, n);
    ctx.require_enumerable(cfg);
    const auto solver = additive_solver(FieldElem::from_int(ctx, 1));
    if (solver->fiber_size() != p) continue;
    const std::vector<FieldElem> ds = d_values(p, k, ctx, cfg);
    if (BigInt(ds.size()) != ipow(p, 2 * k)) continue;
    const bool all_e = std::ranges::all_of(ds, [&](const FieldElem& d) { return solver->in_image(pow(d, pk1(p, k))); });
    if (all_e) return n;
  }
  fail(ErrorKind::GuardExceeded, "no extension of degree <= 32 hosts the automorphisms");
}

unsigned verification_degree(std::uint64_t p, unsigned k, const Config& cfg) {
  const unsigned base = field_of_definition_aut(p, k, cfg);
  const BigInt needed = 2 * pk1(p, k) * ipow(p, k);
  unsigned n = base;
  while (ipow(p, n) <= needed) n += base;
  ensure(n <= kMaxDegree, ErrorKind::GuardExceeded, "verification field beyond supported degrees");
  return n;
}

AutContext make_aut_context(std::uint64_t p, unsigned k, unsigned n, const Config& cfg) {
  const CurveBk curve = make_curve(p, k, 1);
  ensure(orders_available(p, k, n), ErrorKind::InvalidParameters,
         "F_" + std::to_string(p) + "^" + std::to_string(n) + " does not host the automorphism group");
  const FieldCtx& ctx = make_field(p, n);
  ctx.require_enumerable(cfg);
  AutContext actx;
  actx.p = p;
  actx.k = k;
  actx.ctx = &ctx;
  actx.N = to_u64(group_n(p, k), "N");
  actx.gamma = root_of_unity(ctx, actx.N);
  ensure(mult_order(actx.gamma) == actx.N, ErrorKind::InternalInconsistency, "gamma has the wrong order");
  actx.points = enumerate_points(curve, ctx, cfg);
  std::ranges::sort(actx.points);
  return actx;
}

AutContext make_aut_context(std::uint64_t p, unsigned k, const Config& cfg) {
  return make_aut_context(p, k, verification_degree(p, k, cfg), cfg);
}

Automorphism identity(const AutContext& actx) {
  return Automorphism{FieldElem(*actx.ctx), FieldElem(*actx.ctx), 0};
}

bool valid_pair(const AutContext& actx, const FieldElem& d, const FieldElem& e) {
  ensure(&d.ctx() == actx.ctx && &e.ctx() == actx.ctx, ErrorKind::CtxMismatch, "(d, e) outside the context field");
  return d_constraint(actx.p, actx.k, d) && pow(e, actx.p) + e == pow(d, pk1(actx.p, actx.k));
}

FieldElem linearized_part(const AutContext& actx, const FieldElem& d, const FieldElem& x) {
  ensure(&d.ctx() == actx.ctx && &x.ctx() == actx.ctx, ErrorKind::CtxMismatch, "arguments outside the context field");
  return raw_linearized(actx.p, actx.k, d, x);
}

CurvePoint apply_alpha(const AutContext& actx, std::uint64_t s, const CurvePoint& pt) {
  require_on_curve(actx, pt);
  return raw_apply(actx, Automorphism{FieldElem(*actx.ctx), FieldElem(*actx.ctx), s % actx.N}, pt);
}

CurvePoint apply_beta(const AutContext& actx, const FieldElem& d, const FieldElem& e, const CurvePoint& pt) {
  ensure(valid_pair(actx, d, e), ErrorKind::InvalidParameters, "(d, e) violates the defining constraints");
  require_on_curve(actx, pt);
  return raw_apply(actx, Automorphism{d, e, 0}, pt);
}

CurvePoint apply(const AutContext& actx, const Automorphism& g, const CurvePoint& pt) {
  ensure(valid_pair(actx, g.d, g.e), ErrorKind::InvalidParameters, "(d, e) violates the defining constraints");
  require_on_curve(actx, pt);
  return raw_apply(actx, g, pt);
}

std::vector<std::pair<FieldElem, FieldElem>> enumerate_p_part(const AutContext& actx, const Config& cfg) {
  const FieldElem one = FieldElem::from_int(*actx.ctx, 1);
  std::vector<std::pair<FieldElem, FieldElem>> out;
  for (const FieldElem& d : d_values(actx.p, actx.k, *actx.ctx, cfg)) {
    for (FieldElem& e : solve_additive(one, pow(d, pk1(actx.p, actx.k)))) out.emplace_back(d, std::move(e));
  }
  ensure(BigInt(out.size()) == ipow(actx.p, 2 * actx.k + 1), ErrorKind::InternalInconsistency,
         "p-part does not have order p^(2k+1)");
  return out;
}

std::vector<Automorphism> translations_subgroup(const AutContext& actx) {
  const FieldElem zero(*actx.ctx);
  std::vector<Automorphism> out;
  for (FieldElem& e : solve_additive(FieldElem::from_int(*actx.ctx, 1), zero)) out.push_back({zero, std::move(e), 0});
  ensure(out.size() == actx.p, ErrorKind::InternalInconsistency, "translation subgroup does not have order p");
  return out;
}

Automorphism compose(const AutContext& actx, const Automorphism& a1, const Automorphism& a2) {
  const Action first(actx, a2);
  const Action second(actx, a1);
  auto h = [&](const CurvePoint& pt) { return second(first(pt)); };
  const FieldElem zero(*actx.ctx);
  const CurvePoint origin = h(AffinePoint{zero, zero});
  if (is_infinity(origin)) fail(ErrorKind::NormalFormNotFound, "composite moves (0,0) to infinity");
  Automorphism g{std::get<AffinePoint>(origin).x, std::get<AffinePoint>(origin).y, 0};

  const auto probe = std::ranges::find_if(actx.points, [](const CurvePoint& pt) {
    return !is_infinity(pt) && !std::get<AffinePoint>(pt).x.is_zero();
  });
  ensure(probe != actx.points.end(), ErrorKind::NormalFormNotFound, "no point with x != 0 to probe");
  const auto& ap = std::get<AffinePoint>(*probe);
  const FieldElem scale = (std::get<AffinePoint>(h(*probe)).x - g.d) / ap.x;
  FieldElem power = FieldElem::from_int(*actx.ctx, 1);
  bool found = false;
  for (std::uint64_t s = 0; s < actx.N; ++s, power *= actx.gamma) {
    if (power == scale) {
      g.s = s;
      found = true;
      break;
    }
  }
  if (!found || !valid_pair(actx, g.d, g.e)) fail(ErrorKind::NormalFormNotFound, "no normal form matches the composite");
  const Action normal(actx, g);
  for (const CurvePoint& pt : actx.points) {
    if (h(pt) != normal(pt)) fail(ErrorKind::NormalFormNotFound, "normal form disagrees on a point");
  }
  return g;
}

bool preserves_points(const AutContext& actx, const Automorphism& g) {
  std::vector<CurvePoint> images;
  images.reserve(actx.points.size());
  const Action act(actx, g);
  for (const CurvePoint& pt : actx.points) {
    CurvePoint img = act(pt);
    if (is_infinity(pt) != is_infinity(img)) return false;
    if (!std::ranges::binary_search(actx.points, img)) return false;
    images.push_back(std::move(img));
  }
  std::ranges::sort(images);
  return std::ranges::adjacent_find(images) == images.end();
}

GroupCheck verify_group(const AutContext& actx, std::uint64_t stride, const Config& cfg) {
  ensure(stride >= 1, ErrorKind::InvalidParameters, "stride must be >= 1");
  const auto pairs = enumerate_p_part(actx, cfg);
  GroupCheck out;
  out.p_part = pairs.size();
  out.group_order = BigInt(out.p_part) * actx.N;
  std::uint64_t index = 0;
  for (const auto& [d, e] : pairs) {
    for (std::uint64_t s = 0; s < actx.N; ++s, ++index) {
      if (index % stride != 0) continue;
      ++out.checked;
      if (!preserves_points(actx, Automorphism{d, e, s})) ++out.failures;
    }
  }
  return out;
}

SubgroupParams subgroup_params(std::uint64_t p, unsigned k, const BigInt& s, unsigned r) {
  make_curve(p, k, 1);
  const BigInt N = group_n(p, k);
  ensure(s > 0 && N % s == 0, ErrorKind::InvalidS, "s must be a positive divisor of N = " + to_string(N));
  ensure(r <= 2 * k, ErrorKind::InvalidR, "r must lie in [0, 2k]");
  const std::uint64_t s_mod = to_u64(s % (p - 1));
  const std::uint64_t t = (p - 1) / gcd_u64(s_mod == 0 ? p - 1 : s_mod, p - 1);
  return SubgroupParams{N, s, N / s, t, r};
}

}  // namespace asmorph
