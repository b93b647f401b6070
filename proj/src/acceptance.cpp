#include "asmorph/acceptance.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <ostream>
#include <set>
#include <sstream>

#include "asmorph/error.hpp"

namespace asmorph {

namespace {

class Check {
 public:
  void expect(bool cond, const std::string& what) {
    if (cond) return;
    if (failures_++ < 5) msg_ << what << "; ";
  }
  bool ok() const { return failures_ == 0; }
  std::string failures() const { return msg_.str() + std::to_string(failures_) + " failed check(s)"; }

 private:
  int failures_ = 0;
  std::ostringstream msg_;
};

struct CheckResult {
  bool ok = false;
  std::string detail;
};

CheckResult finish(const Check& c, const std::string& summary) { return {c.ok(), c.ok() ? summary : c.failures()}; }

std::vector<BigInt> golden_coeffs(const Json& arr) {
  std::vector<BigInt> out;
  for (const auto& v : arr) out.emplace_back(v.is_string() ? BigInt(v.get<std::string>()) : BigInt(v.get<std::int64_t>()));
  return out;
}

// --- 1 ------------------------------------------------------------------

CheckResult gap_duality(const Config&, const Json&) {
  Check c;
  int cases = 0;
  for (std::uint64_t p : {3, 5, 7}) {
    for (unsigned k = 1; k <= 4; ++k, ++cases) {
      const auto g = gaps(weierstrass_semigroup(p, k));
      c.expect(BigInt(g.size()) == genus(p, k),
               "p=" + std::to_string(p) + " k=" + std::to_string(k) + ": " + std::to_string(g.size()) + " gaps");
    }
  }
  return finish(c, std::to_string(cases) + " semigroups, gap count = genus in each");
}

// --- 2 ------------------------------------------------------------------

CheckResult riemann_roch(const Config&, const Json&) {
  Check c;
  std::uint64_t checked = 0;
  for (unsigned k = 1; k <= 3; ++k) {
    const CurveBk curve = make_curve(3, k, -1);
    const auto sg = weierstrass_semigroup(3, k);
    const std::uint64_t g = to_u64(curve.genus());
    const auto gap_list = gaps(sg);
    for (std::uint64_t n = 0; n <= 2 * g + 50; ++n, ++checked) {
      const auto below = std::ranges::count_if(gap_list, [&](std::uint64_t x) { return x <= n; });
      const std::uint64_t predicted = n + 1 - static_cast<std::uint64_t>(below);
      const std::uint64_t dim = rr_dim(curve, n);
      const std::string at = "k=" + std::to_string(k) + " n=" + std::to_string(n);
      c.expect(dim == predicted, at + ": dim " + std::to_string(dim) + " != " + std::to_string(predicted));
      const auto basis = rr_basis(curve, n);
      c.expect(basis.size() == dim, at + ": basis size differs from dim");
      std::set<std::uint64_t> orders;
      for (const RRMonomial& mono : basis) {
        orders.insert(mono.pole_order);
        c.expect(is_pole_number(sg, mono.pole_order), at + ": pole order is a gap");
      }
      c.expect(orders.size() == basis.size(), at + ": repeated pole order");
      if (n + 1 >= 2 * g) c.expect(dim == n - g + 1, at + ": dim != n - g + 1");
    }
  }
  return finish(c, std::to_string(checked) + " (k, n) pairs agree with the gap sieve and Riemann-Roch");
}

// --- 3 ------------------------------------------------------------------

CheckResult point_counts(const Config& cfg, const Json& golden) {
  Check c;
  const FieldCtx& f9 = make_field(3, 2);
  f9.require_enumerable(cfg);
  std::uint64_t oracle = 1;
  for (std::uint64_t i = 0; i < 9; ++i) {
    for (std::uint64_t j = 0; j < 9; ++j) {
      const FieldElem x = FieldElem::from_index(f9, i);
      const FieldElem y = FieldElem::from_index(f9, j);
      if (y * y * y + y == x * x * x * x) ++oracle;
    }
  }
  const auto expected = golden.at("count_b1_plus_f9").get<std::uint64_t>();
  const BigInt counted = count_points(make_curve(3, 1, 1), 2, cfg);
  c.expect(oracle == expected, "brute force gives " + std::to_string(oracle));
  c.expect(counted == expected, "count_points gives " + to_string(counted));

  int weil = 0;
  for (std::int64_t sign : {1, -1}) {
    for (unsigned k = 1; k <= 2; ++k) {
      const CurveBk curve = make_curve(3, k, sign);
      for (unsigned n = 1; n <= 6; ++n, ++weil) {
        c.expect(weil_bound_holds(count_points(curve, n, cfg), 3, n, curve.genus()), "Weil bound fails");
      }
    }
  }
  return finish(c, "#B_{1,+1}(F_9) = " + std::to_string(oracle) + "; " + std::to_string(weil) + " counts within the Weil bound");
}

// --- 4 ------------------------------------------------------------------

CheckResult lpolynomials(const Config& cfg, const Json& golden) {
  Check c;
  const CurveBk b1m = make_curve(3, 1, -1);
  const CurveBk b2m = make_curve(3, 2, -1);
  const CurveBk b1p = make_curve(3, 1, 1);
  double worst = 0.0;
  auto check_one = [&](const CurveBk& curve, const char* key) {
    const LPolynomial L = lpolynomial(curve, cfg);
    c.expect(L.coeffs == golden_coeffs(golden.at(key)), std::string(key) + " differs from the frozen coefficients");
    c.expect(L.coeffs.size() == 2 * L.g + 1, std::string(key) + " has the wrong degree");
    c.expect(satisfies_functional_equation(L), std::string(key) + " fails the functional equation");
    const double dev = max_root_modulus_deviation(L);
    worst = std::max(worst, dev);
    c.expect(dev <= 1e-6, std::string(key) + " root modulus off by " + std::to_string(dev));
    const auto measured = count_series(curve, L.g, cfg).counts;
    c.expect(predicted_counts(L, L.g) == measured, std::string(key) + " does not reproduce its counts");
    const auto far = predicted_counts(L, 2 * L.g);
    c.expect(weil_bound_holds(far.back(), L.q, 2 * L.g, curve.genus()), std::string(key) + " extrapolation breaks Weil");
    return L;
  };
  const LPolynomial l1m = check_one(b1m, "lpoly_b1_minus");
  const LPolynomial l2m = check_one(b2m, "lpoly_b2_minus");
  const LPolynomial l1p = check_one(b1p, "lpoly_b1_plus");
  c.expect(l1m.coeffs.size() == 7 && l2m.coeffs.size() == 19, "degrees are not 6 and 18");
  c.expect(divides(l1m, l2m), "L(B_1) does not divide L(B_2)");
  c.expect(!(l1p == l1m), "c = +1 and c = -1 give the same L-polynomial over F_3");
  std::ostringstream os;
  os << "degrees 6 and 18, L(B_1) | L(B_2), max root deviation " << worst;
  return finish(c, os.str());
}

// --- 5 ------------------------------------------------------------------

CheckResult explicit_morphism(const Config& cfg, const Json& golden) {
  Check c;
  const MorphismSpec rho = build_rho(3, 3, 1, -1);
  const DegreeBound bound = degree_bound(3, 3, 1);
  c.expect(rho.t == golden.at("rho_331_t").get<std::int64_t>(), "t(3,3,1) = " + to_string(rho.t));
  c.expect(bound.floor == golden.at("degree_bound_331").get<std::int64_t>(), "bound(3,3,1) = " + to_string(bound.floor));
  c.expect(rho.t <= bound.floor, "degree exceeds the bound");
  std::uint64_t points = 0;
  for (unsigned n = 1; n <= 4; ++n) {
    const FiberCensus census = fiber_census(rho, make_field(3, n), cfg);
    points += census.source_points;
    c.expect(census.infinity_fiber == 1 && BigInt(census.max_fiber) <= rho.degree, "bad fibers over F_3^" + std::to_string(n));
  }
  const MorphismSpec rho5 = build_rho(5, 3, 1, -1);
  c.expect(rho5.t == golden.at("rho_531_t").get<std::int64_t>(), "t(5,3,1) = " + to_string(rho5.t));
  c.expect(rho5.t <= degree_bound(5, 3, 1).floor, "degree exceeds the bound for p = 5");
  const FiberCensus census5 = fiber_census(rho5, make_field(5, 2), cfg);
  points += census5.source_points;
  c.expect(census5.infinity_fiber == 1 && BigInt(census5.max_fiber) <= rho5.degree, "bad fibers over F_25");
  return finish(c, "t = 7 <= 13 and t = 21; " + std::to_string(points) + " points mapped, fiber over infinity is 1");
}

// --- 6 ------------------------------------------------------------------

CheckResult automorphisms(const Config& cfg, const Json& golden) {
  Check c;
  c.expect(field_of_definition_aut(3, 1, cfg) == 2, "field of definition for (3,1) is not F_9");
  const AutContext a31 = make_aut_context(3, 1, 4, cfg);
  const GroupCheck g31 = verify_group(a31, 1, cfg);
  c.expect(g31.p_part == golden.at("p_part_31").get<std::uint64_t>(), "p-part of (3,1) has " + std::to_string(g31.p_part));
  c.expect(g31.group_order == golden.at("group_31").get<std::uint64_t>(), "group (3,1) has order " + to_string(g31.group_order));
  c.expect(g31.failures == 0 && g31.checked == 216, "an automorphism of B_{1,+1} fails on F_81 points");
  c.expect(translations_subgroup(a31).size() == 3, "E does not have order 3");

  c.expect(field_of_definition_aut(3, 2, cfg) == 8, "field of definition for (3,2) is not F_3^8");
  const AutContext a32 = make_aut_context(3, 2, 8, cfg);
  const GroupCheck g32 = verify_group(a32, 97, cfg);
  c.expect(g32.p_part == golden.at("p_part_32").get<std::uint64_t>(), "p-part of (3,2) has " + std::to_string(g32.p_part));
  c.expect(g32.failures == 0, "a sampled automorphism of B_{2,+1} fails");
  return finish(c, "(3,1): 27 pairs, 216 elements verified on " + std::to_string(a31.points.size()) +
                       " points; (3,2): 243 pairs, " + std::to_string(g32.checked) + " sampled elements verified");
}

// --- 7 ------------------------------------------------------------------

CheckResult quotient_genera(const Config&, const Json& golden) {
  Check c;
  for (std::uint64_t p : {3, 5}) {
    for (unsigned k = 1; k <= 6; ++k) {
      c.expect(quotient_genus(p, k, {1, 1, 0}).value == Rational(genus(p, k)), "identity quotient genus");
      c.expect(quotient_genus(p, k, {pk1(p, k) * (p - 1), p - 1, 0}).value == 0, "full H quotient is not rational");
    }
  }
  std::uint64_t tuples = 0;
  for (std::uint64_t p : {3, 5, 7}) {
    for (unsigned k = 1; k <= 10; ++k) {
      const std::uint64_t N = to_u64(pk1(p, k) * (p - 1));
      for (std::uint64_t m : divisors(N)) {
        for (std::uint64_t t : divisors(p - 1)) {
          if (m % t != 0) continue;
          for (unsigned r = 0; r <= 2 * k; ++r, ++tuples) {
            c.expect(rh_consistency(p, k, {m, t, r}), "Riemann-Hurwitz fails");
          }
        }
      }
    }
  }
  c.expect(tuples >= 10000, "grid has only " + std::to_string(tuples) + " tuples");
  const QuotientGenus g = quotient_genus(3, 3, {7, 1, 0});
  c.expect(g.value == golden.at("quotient_genus_33_710").get<std::int64_t>() && g.integral, "g(B_3 / C_7) = " + to_string(g.value));
  return finish(c, std::to_string(tuples) + " tuples satisfy Riemann-Hurwitz; g(B_3/C_7) = 3");
}

// --- 8 ------------------------------------------------------------------

CheckResult orbit_structure(const Config& cfg, const Json&) {
  Check c;
  int runs = 0;
  const AutContext a31 = make_aut_context(3, 1, 4, cfg);
  for (std::uint64_t s : divisors(8)) {
    const OrbitReport rep = verify_orbit_structure(a31, s, 1, cfg);
    c.expect(rep.axis_orbits.size() == 2 / rep.t, "(3,1) s=" + std::to_string(s) + " orbit count");
    ++runs;
  }
  const AutContext a33 = make_aut_context(3, 3, 6, cfg);
  for (std::uint64_t s : {7, 8}) {
    const OrbitReport rep = verify_orbit_structure(a33, s, 25, cfg);
    c.expect(rep.t == (s == 7 ? 2U : 1U), "(3,3) s=" + std::to_string(s) + " has t = " + std::to_string(rep.t));
    ++runs;
  }
  return finish(c, std::to_string(runs) + " cyclic subgroups match the predicted orbits");
}

// --- 9 ------------------------------------------------------------------

bool has_annotation(const Eq61Solution& s, const std::string& a) {
  return std::ranges::find(s.annotations, a) != s.annotations.end();
}

CheckResult galois_soundness(const Config&, const Json& golden) {
  Check c;
  int exists = 0, excluded = 0, undecided = 0, cor72 = 0, lemma_runs = 0;
  for (std::uint64_t p : {3, 5}) {
    for (unsigned k = 3; k <= 12; ++k) {
      for (unsigned l = 2; l < k; ++l) {
        const GaloisVerdict v = decide_galois(p, k, l);
        const bool div = divides_pk1(p, l, k).divides;
        c.expect((v.outcome == Outcome::Exists) == div, "Exists disagrees with divisibility");
        if (v.outcome == Outcome::Exists) {
          ++exists;
          c.expect(*v.group_order == build_rho(p, k, l, -1).degree, "group order differs from deg rho");
        } else if (v.outcome == Outcome::NoGaloisMorphism) {
          ++excluded;
          c.expect(v.survivors.empty(), "exclusion with surviving solutions");
        } else {
          ++undecided;
        }
        if (!div && k < l * l) {
          const bool named = std::ranges::find(v.reasons, "Cor7.2") != v.reasons.end() ||
                             std::ranges::find(v.also_applicable, "Cor7.2") != v.also_applicable.end();
          c.expect(named, "k < l^2 case without the k < l^2 rule");
          ++cor72;
        }
        for (unsigned r = 1; r < k; ++r, lemma_runs += 2) {
          lemma_no_solutions_gcd2(p, k, l, r);
          lemma_no_solutions_short(p, k, l, r);
        }
      }
    }
  }

  const GaloisVerdict v331 = decide_galois(3, 3, 1);
  c.expect(v331.outcome == Outcome::Exists && *v331.group_order == golden.at("galois_331_order").get<std::int64_t>(),
           "(3,3,1) is not Exists(7)");
  const bool m8 = std::ranges::any_of(v331.solutions, [](const Eq61Solution& s) {
    return s.r == 0 && s.t == 2 && s.m == 8 && has_annotation(s, "RuledOutBy(Thm4.2(1))");
  });
  c.expect(m8, "(r=0, t=2, m=8) is not annotated as excluded");
  const GaloisVerdict v342 = decide_galois(3, 4, 2);
  c.expect(v342.outcome == Outcome::NoGaloisMorphism && v342.reasons == std::vector<std::string>{"Cor7.1"}, "(3,4,2) verdict");
  const GaloisVerdict v363 = decide_galois(3, 6, 3);
  c.expect(v363.outcome == Outcome::NoGaloisMorphism && v363.reasons == std::vector<std::string>{"Cor7.3"}, "(3,6,3) verdict");

  c.expect(theorem42_gate(3, 3, 1, SubgroupKind::InsideH, 8).impossible, "InsideH(8) not excluded");
  c.expect(!theorem42_gate(3, 3, 1, SubgroupKind::InsideH, 7).impossible, "InsideH(7) excluded");
  const Thm42Verdict p1 = theorem42_gate(3, 4, 2, SubgroupKind::InsideP1, 0, 2);
  c.expect(p1.impossible && p1.delta_bound && *p1.delta_bound < 0, "InsideP1 certificate");

  int chains = 0;
  for (std::uint64_t p : {3, 5}) {
    for (std::uint64_t t : divisors(p - 1)) {
      for (unsigned l = 1; l <= 4; ++l) {
        for (unsigned kr = 1; kr <= 16; ++kr) {
          if (lemma_euclid_chain(p, l, t, kr).status == LemmaStatus::Applied) ++chains;
        }
      }
    }
  }
  const ChainReport worked = lemma_euclid_chain(3, 1, 2, 3);
  std::vector<std::int64_t> residues;
  for (const ChainStep& s : worked.steps) residues.push_back(static_cast<std::int64_t>(s.lhs));
  c.expect(worked.M == 7 && residues == golden.at("euclid_worked_residues").get<std::vector<std::int64_t>>(),
           "worked chain 2, 4, 1 mod 7");
  c.expect(std::ranges::all_of(worked.steps, [](const ChainStep& s) { return s.holds; }), "worked chain fails");

  std::ostringstream os;
  os << exists << " Exists, " << excluded << " excluded, " << undecided << " undecided; " << cor72
     << " k<l^2 cases; " << lemma_runs << " lemma gates and " << chains << " chains consistent";
  return finish(c, os.str());
}

// --- 10 -----------------------------------------------------------------

CheckResult arithmetic_sweeps(const Config&, const Json&) {
  Check c;
  int pairs = 0;
  for (std::uint64_t p : {3, 5, 7}) {
    for (std::uint64_t a = 1; a <= 30; ++a) {
      BigInt pa = 1;
      for (std::uint64_t i = 0; i < a; ++i) pa *= p;
      for (std::uint64_t b = 1; b <= 30; ++b, ++pairs) {
        BigInt pb = 1;
        for (std::uint64_t i = 0; i < b; ++i) pb *= p;
        const DivisibilityWitness w = divides_pk1(p, a, b);
        c.expect(w.divides == ((pb + 1) % (pa + 1) == 0), "divides_pk1 disagrees with big-integer division");
        c.expect(gcd_pk1(p, a, b) == boost::multiprecision::gcd(pa + 1, pb + 1), "gcd_pk1 disagrees with Euclid");
      }
    }
  }
  std::uint64_t integral = 0;
  for (std::uint64_t P = 1; P <= 200; ++P) {
    for (std::uint64_t A = 1; A <= P; ++A) {
      for (std::uint64_t D = 1; D <= 200; ++D) {
        if (apdp_check(A, P, D)) {
          ++integral;
          c.expect(D == A, "apdp: integral ratio with D != A");
        }
      }
    }
  }
  return finish(c, std::to_string(pairs) + " exponent pairs; " + std::to_string(integral) + " integral apdp ratios, all with D = A");
}

struct Criterion {
  int id;
  const char* name;
  double limit;
  std::function<CheckResult(const Config&, const Json&)> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all = {
      {1, "genus/gap duality", 1, gap_duality},
      {2, "Riemann-Roch dimensions", 1, riemann_roch},
      {3, "point counts", 1, point_counts},
      {4, "L-polynomials", 60, lpolynomials},
      {5, "explicit morphism", 30, explicit_morphism},
      {6, "automorphisms", 60, automorphisms},
      {7, "quotient genus", 5, quotient_genera},
      {8, "orbit structure", 5, orbit_structure},
      {9, "Galois gate soundness", 120, galois_soundness},
      {10, "arithmetic lemma sweeps", 10, arithmetic_sweeps},
  };
  return all;
}

}  // namespace

std::string_view to_string(CriterionStatus s) {
  switch (s) {
    case CriterionStatus::Pass: return "PASS";
    case CriterionStatus::Fail: return "FAIL";
    case CriterionStatus::Skipped: return "SKIP";
  }
  return "?";
}

bool AcceptanceSummary::passed() const {
  return std::ranges::none_of(results, [](const CriterionResult& r) { return r.status == CriterionStatus::Fail; });
}

bool AcceptanceSummary::inconsistent() const {
  return std::ranges::any_of(results, [](const CriterionResult& r) { return r.inconsistency; });
}

Json default_golden() {
  return Json{
      {"count_b1_plus_f9", 28},
      {"lpoly_b1_minus", {1, 0, -3, 0, -9, 0, 27}},
      {"lpoly_b1_plus", {1, 0, 9, 0, 27, 0, 27}},
      {"lpoly_b2_minus", {1, 0, 3, 0, 0, 0, 0, 0, -162, 0, -486, 0, 0, 0, 0, 0, 6561, 0, 19683}},
      {"rho_331_t", 7},
      {"degree_bound_331", 13},
      {"rho_531_t", 21},
      {"p_part_31", 27},
      {"group_31", 216},
      {"p_part_32", 243},
      {"quotient_genus_33_710", 3},
      {"galois_331_order", 7},
      {"euclid_worked_residues", {2, 4, 1}},
  };
}

Json load_golden(const std::string& path) {
  std::ifstream in(path);
  ensure(in.good(), ErrorKind::InvalidParameters, "cannot read golden file " + path);
  Json overrides;
  try {
    overrides = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::InvalidParameters, "golden file " + path + ": " + e.what());
  }
  ensure(overrides.is_object(), ErrorKind::InvalidParameters, "golden file must hold a JSON object");
  Json golden = default_golden();
  golden.update(overrides);
  return golden;
}

AcceptanceSummary run_acceptance(const Config& cfg, const Json& golden, std::ostream* log, int only) {
  AcceptanceSummary summary;
  for (const Criterion& crit : criteria()) {
    if (only != 0 && crit.id != only) continue;
    CriterionResult res{crit.id, crit.name, CriterionStatus::Fail, "", 0.0, crit.limit, false};
    const auto start = std::chrono::steady_clock::now();
    try {
      const CheckResult out = crit.run(cfg, golden);
      res.status = out.ok ? CriterionStatus::Pass : CriterionStatus::Fail;
      res.detail = out.detail;
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::GuardExceeded) {
        res.status = CriterionStatus::Skipped;
        res.detail = std::string("skipped: ") + e.what();
      } else {
        res.detail = e.what();
        res.inconsistency = e.is_inconsistency();
      }
    } catch (const std::exception& e) {
      res.detail = std::string("unexpected error: ") + e.what();
    }
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (res.status == CriterionStatus::Pass && res.seconds > res.limit_seconds) {
      res.status = CriterionStatus::Fail;
      res.detail += " (took " + std::to_string(res.seconds) + " s, limit " + std::to_string(res.limit_seconds) + " s)";
    }
    if (log) {
      *log << "[" << to_string(res.status) << "] " << res.id << ". " << res.name << " (" << std::fixed
           << std::setprecision(2) << res.seconds << " s / " << res.limit_seconds << " s): " << res.detail << '\n';
    }
    summary.results.push_back(std::move(res));
  }
  return summary;
}

Json to_json(const CriterionResult& r) {
  return Json{{"id", r.id},       {"name", r.name},       {"status", to_string(r.status)}, {"detail", r.detail},
              {"seconds", r.seconds}, {"limit_seconds", r.limit_seconds}, {"inconsistency", r.inconsistency}};
}

}  // namespace asmorph
