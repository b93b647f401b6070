#include "asmorph/report.hpp"

#include <sstream>

namespace asmorph {

Json big(const BigInt& v) { return to_string(v); }
Json big(const Rational& v) { return to_string(v); }

Json to_json(const FieldElem& a) {
  Json out = Json::array();
  for (std::uint32_t c : a.coeffs()) out.push_back(c);
  return out;
}

Json to_json(const CurvePoint& pt) {
  if (is_infinity(pt)) return "inf";
  const auto& a = std::get<AffinePoint>(pt);
  return Json{{"x", to_json(a.x)}, {"y", to_json(a.y)}};
}

Json to_json(const LPolynomial& L) {
  Json coeffs = Json::array();
  for (const BigInt& c : L.coeffs) coeffs.push_back(big(c));
  return Json{{"q", big(L.q)}, {"genus", L.g}, {"coeffs", coeffs}};
}

Json to_json(const RRMonomial& mono) { return Json::array({mono.i, mono.j, mono.pole_order}); }

Json to_json(const DivisibilityWitness& w) {
  return Json{{"divides", w.divides}, {"l_divides_k", w.l_divides_k}, {"quotient_odd", w.quotient_odd}};
}

Json to_json(const DegreeBound& b) {
  return Json{{"numerator", big(b.numerator)},
              {"denominator", big(b.denominator)},
              {"bound", big(b.floor)},
              {"denominators_positive", b.denominators_positive},
              {"pole_ratio_exceeds", b.pole_ratio_exceeds},
              {"twice_degree_exceeds", b.twice_degree_exceeds}};
}

Json to_json(const MorphismSpec& spec) {
  return Json{{"p", spec.p}, {"k", spec.k}, {"l", spec.l}, {"c", spec.c}, {"t", big(spec.t)}, {"degree", big(spec.degree)}};
}

Json to_json(const FiberCensus& census) {
  Json sizes = Json::object();
  std::map<std::uint64_t, std::uint64_t> histogram;
  for (const auto& [pt, n] : census.fibers) ++histogram[n];
  for (const auto& [n, count] : histogram) sizes[std::to_string(n)] = count;
  return Json{{"source_points", census.source_points},
              {"target_points", census.target_points},
              {"image_points", census.fibers.size()},
              {"infinity_fiber", census.infinity_fiber},
              {"max_fiber", census.max_fiber},
              {"fiber_size_histogram", sizes}};
}

Json to_json(const RamificationVerdict& v) {
  return Json{{"verdict", v.consistent ? "Consistent" : "Impossible"}, {"reason", v.reason}};
}

Json to_json(const Automorphism& g) { return Json{{"d", to_json(g.d)}, {"e", to_json(g.e)}, {"s", g.s}}; }

Json to_json(const SubgroupParams& params) {
  return Json{{"N", big(params.N)}, {"s", big(params.s)}, {"m", big(params.m)}, {"t", params.t}, {"r", params.r}};
}

Json to_json(const QuotientGenusReport& rep) {
  return Json{{"m", big(rep.shape.m)},
              {"t", rep.shape.t},
              {"r", rep.shape.r},
              {"delta1", big(rep.diff.delta1)},
              {"dPk", big(rep.diff.dPk)},
              {"group_order", big(rep.group_order)},
              {"genus_quotient", big(rep.genus.value)},
              {"integral", rep.genus.integral},
              {"rh_consistent", rep.rh_consistent}};
}

Json to_json(const OrbitReport& rep) {
  return Json{{"s", rep.s},
              {"m", rep.m},
              {"t", rep.t},
              {"axis_points", rep.axis_points},
              {"origin_fixed", rep.origin_fixed},
              {"axis_orbit_sizes", rep.axis_orbits},
              {"off_axis_points", rep.off_axis_points},
              {"off_axis_short_orbits", rep.off_axis_short},
              {"translates_checked", rep.translates_checked},
              {"translates_in_axis", rep.translates_in_axis}};
}

Json to_json(const Eq61Solution& s) {
  Json out{{"r", s.r}, {"t", s.t}, {"m", big(s.m)}};
  out["u"] = s.u ? big(*s.u) : Json(nullptr);
  if (s.u) {
    out["u0"] = big(s.u0);
    out["e"] = s.e;
  }
  out["annotations"] = s.annotations;
  out["ruled_out"] = s.ruled_out;
  return out;
}

Json to_json(const GeneralDivReport& rep) {
  Json out{{"status", to_string(rep.status)}, {"unmet", rep.unmet}};
  if (rep.status == LemmaStatus::Applied) {
    out["u"] = big(rep.u);
    out["u0"] = big(rep.u0);
    out["e"] = rep.e;
    out["clauses"] = rep.clauses;
  }
  return out;
}

Json to_json(const NoSolutionReport& rep) {
  Json out{{"status", to_string(rep.status)}, {"unmet", rep.unmet}, {"gcd", big(rep.gcd)},
           {"brute_force_solutions", rep.brute_force}};
  if (!rep.note.empty()) out["note"] = rep.note;
  return out;
}

Json to_json(const ChainReport& rep) {
  Json steps = Json::array();
  for (const ChainStep& s : rep.steps) {
    steps.push_back(Json{{"i", s.i}, {"lhs", big(s.lhs)}, {"rhs", big(s.rhs)}, {"holds", s.holds}});
  }
  return Json{{"status", to_string(rep.status)},
              {"M", big(rep.M)},
              {"Q", rep.Q},
              {"R", rep.R},
              {"steps", steps},
              {"terminal_difference", big(rep.terminal_difference)},
              {"bound_applies", rep.bound_applies},
              {"terminal_equal", rep.terminal_equal},
              {"conclusion", rep.conclusion}};
}

Json to_json(const Thm42Verdict& v) {
  Json out{{"verdict", v.impossible ? "Impossible" : "NotExcluded"}, {"reason", v.reason}};
  if (v.delta_bound) out["delta_bound"] = big(*v.delta_bound);
  return out;
}

Json to_json(const GaloisVerdict& v) {
  Json out{{"outcome", to_string(v.outcome)}};
  out["group_order"] = v.group_order ? big(*v.group_order) : Json(nullptr);
  out["reasons"] = v.reasons;
  out["also_applicable"] = v.also_applicable;
  Json sols = Json::array();
  for (const Eq61Solution& s : v.solutions) sols.push_back(to_json(s));
  out["solutions"] = sols;
  out["n_survivors"] = v.survivors.size();
  return out;
}

Json envelope(const std::string& command, Json params, Json result) {
  return Json{{"tool_version", kToolVersion}, {"command", command}, {"params", std::move(params)},
              {"result", std::move(result)}};
}

namespace {

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

}  // namespace

std::string render_text(const Json& result) {
  std::ostringstream os;
  if (result.is_object()) {
    for (const auto& [key, value] : result.items()) os << key << ": " << scalar_text(value) << '\n';
  } else if (result.is_array()) {
    for (const auto& value : result) os << scalar_text(value) << '\n';
  } else {
    os << scalar_text(result) << '\n';
  }
  return os.str();
}

}  // namespace asmorph
