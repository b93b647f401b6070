#include "asmorph/quotient.hpp"

#include <algorithm>

#include "asmorph/error.hpp"

namespace asmorph {

namespace {

void check_shape(std::uint64_t p, unsigned k, const GroupShape& g) {
  make_curve(p, k, 1);
  ensure(g.t >= 1 && (p - 1) % g.t == 0, ErrorKind::InvalidParameters, "t must divide p-1");
  ensure(g.m >= 1 && g.m % g.t == 0, ErrorKind::InvalidParameters, "t must divide m");
}

}  // namespace

GroupShape shape_of(const SubgroupParams& params) { return {params.m, params.t, params.r}; }

DifferentComponents different_components(std::uint64_t p, unsigned k, const GroupShape& g) {
  check_shape(p, k, g);
  const BigInt pr = ipow(p, g.r);
  const BigInt mp = g.m * pr;
  return {BigInt((p - 1) / g.t) * (mp - pr * g.t) + mp - pr, mp - 1 + pr - 1};
}

QuotientGenus quotient_genus(std::uint64_t p, unsigned k, const GroupShape& g) {
  check_shape(p, k, g);
  const BigInt pr = ipow(p, g.r);
  const BigInt num = BigInt(p - 1) * (BigInt(g.t) * (pr + ipow(p, k)) - pr * g.m);
  const BigInt den = 2 * pr * g.m * g.t;
  QuotientGenus out{Rational(num, den), false};
  out.integral = denominator(out.value) == 1 && out.value >= 0;
  return out;
}

bool rh_consistency(std::uint64_t p, unsigned k, const GroupShape& g, const DifferentComponents& diff) {
  const Rational gq = quotient_genus(p, k, g).value;
  const Rational lhs = 2 * Rational(genus(p, k)) - 2;
  const Rational rhs = Rational(g.m * ipow(p, g.r)) * (2 * gq - 2) + Rational(diff.delta1 + diff.dPk);
  return lhs == rhs;
}

bool rh_consistency(std::uint64_t p, unsigned k, const GroupShape& g) {
  return rh_consistency(p, k, g, different_components(p, k, g));
}

QuotientGenusReport quotient_report(std::uint64_t p, unsigned k, const GroupShape& g) {
  QuotientGenusReport rep;
  rep.shape = g;
  rep.diff = different_components(p, k, g);
  rep.group_order = g.m * ipow(p, g.r);
  rep.genus = quotient_genus(p, k, g);
  rep.rh_consistent = rh_consistency(p, k, g, rep.diff);
  return rep;
}

OrbitReport verify_orbit_structure(const AutContext& actx, std::uint64_t s, std::uint64_t translate_stride,
                                   const Config& cfg) {
  const SubgroupParams params = subgroup_params(actx.p, actx.k, BigInt(s), 0);
  OrbitReport rep;
  rep.s = s;
  rep.m = to_u64(params.m);
  rep.t = params.t;

  const Automorphism gen{FieldElem(*actx.ctx), FieldElem(*actx.ctx), s % actx.N};
  auto orbit_length = [&](const CurvePoint& start) {
    std::uint64_t len = 1;
    for (CurvePoint cur = apply(actx, gen, start); cur != start; cur = apply(actx, gen, cur)) {
      ensure(++len <= rep.m, ErrorKind::StructureMismatch, "orbit longer than |C|");
    }
    return len;
  };

  std::vector<CurvePoint> axis;
  for (const CurvePoint& pt : actx.points) {
    if (is_infinity(pt)) continue;
    const auto& a = std::get<AffinePoint>(pt);
    if (a.x.is_zero()) {
      axis.push_back(pt);
    } else {
      ++rep.off_axis_points;
      if (orbit_length(pt) < rep.m) ++rep.off_axis_short;
    }
  }
  rep.axis_points = axis.size();

  const FieldElem zero(*actx.ctx);
  const CurvePoint origin = AffinePoint{zero, zero};
  rep.origin_fixed = apply(actx, gen, origin) == origin;
  std::vector<CurvePoint> seen;
  for (const CurvePoint& pt : axis) {
    if (pt == origin || std::ranges::find(seen, pt) != seen.end()) continue;
    CurvePoint cur = pt;
    std::uint64_t len = 0;
    do {
      seen.push_back(cur);
      cur = apply(actx, gen, cur);
      ++len;
    } while (cur != pt);
    rep.axis_orbits.push_back(len);
  }
  std::ranges::sort(rep.axis_orbits);

  std::uint64_t index = 0;
  for (const auto& [d, e] : enumerate_p_part(actx, cfg)) {
    if (d.is_zero() || index++ % translate_stride != 0) continue;
    for (const CurvePoint& pt : axis) {
      ++rep.translates_checked;
      if (std::ranges::find(axis, apply(actx, Automorphism{d, e, 0}, pt)) != axis.end()) ++rep.translates_in_axis;
    }
  }

  const std::uint64_t expected_orbits = (actx.p - 1) / rep.t;
  ensure(rep.axis_points == actx.p, ErrorKind::StructureMismatch, "axis does not have exactly p points");
  ensure(rep.origin_fixed, ErrorKind::StructureMismatch, "(0,0) is moved by C");
  ensure(rep.axis_orbits.size() == expected_orbits &&
             std::ranges::all_of(rep.axis_orbits, [&](std::uint64_t n) { return n == rep.t; }),
         ErrorKind::StructureMismatch, "axis orbits do not have the predicted sizes");
  ensure(rep.off_axis_short == 0, ErrorKind::StructureMismatch, "short orbit off the axis");
  ensure(rep.translates_in_axis == 0, ErrorKind::StructureMismatch, "a translate of the axis meets the axis");
  return rep;
}

}  // namespace asmorph
