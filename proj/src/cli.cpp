#include "asmorph/cli.hpp"

#include <functional>
#include <ostream>

#include <CLI11.hpp>

#include "asmorph/acceptance.hpp"
#include "asmorph/error.hpp"
#include "asmorph/report.hpp"

namespace asmorph::cli {

namespace {

struct Args {
  std::uint64_t p = 3;
  unsigned k = 1;
  unsigned l = 1;
  unsigned n = 1;
  std::int64_t c = -1;
  std::string m = "1";
  std::uint64_t t = 1;
  unsigned r = 0;
  std::string s = "1";
  std::string d;
  unsigned kmax = 12;
  unsigned lmin = 1;
  std::uint64_t stride = 1;
  bool verify = false;
  bool csv = false;
  std::string golden;
  int criterion = 0;
};

// Everything a handler needs to produce output.
struct Context {
  Args a;
  Config cfg;
  std::string output = "text";
  Json params = Json::object();
};

using Handler = std::function<int(Context&, std::ostream&)>;

int emit(const Context& ctx, const std::string& command, const Json& result, std::ostream& out) {
  if (ctx.output == "json") {
    out << envelope(command, ctx.params, result).dump(2) << '\n';
  } else if (ctx.output == "csv") {
    fail(ErrorKind::InvalidParameters, "csv output is only available for `galois scan`");
  } else {
    out << render_text(result);
  }
  return kExitOk;
}

CLI::App* command(CLI::App& parent, const std::string& name, const std::string& help) {
  CLI::App* sub = parent.add_subcommand(name, help);
  sub->fallthrough();
  return sub;
}

void opt_pk(CLI::App* sub, Args& a) {
  sub->add_option("--p", a.p, "odd prime")->required();
  sub->add_option("--k", a.k, "exponent of the source curve")->required();
}

Json curve_params(const Args& a) { return Json{{"p", a.p}, {"k", a.k}, {"c", a.c}}; }

Json scan_rows(std::uint64_t p, unsigned kmax, unsigned lmin) {
  Json rows = Json::array();
  for (unsigned k = 2; k <= kmax; ++k) {
    for (unsigned l = std::max(1U, lmin); l < k; ++l) {
      const GaloisVerdict v = decide_galois(p, k, l);
      const auto ruled = std::ranges::count_if(v.solutions, [](const Eq61Solution& s) { return s.ruled_out; });
      rows.push_back(Json{{"p", p},
                          {"k", k},
                          {"l", l},
                          {"verdict", to_string(v.outcome)},
                          {"rule", v.reasons.empty() ? "" : v.reasons.front()},
                          {"n_solutions", v.solutions.size()},
                          {"n_ruled_out", ruled}});
    }
  }
  return rows;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Context ctx;
  Args& a = ctx.a;
  CLI::App app{"Morphisms, automorphisms and zeta functions of the curves y^p + c y = x^(p^k+1)", "asmorph"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);
  app.add_option("--output", ctx.output, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--max-field-log2", ctx.cfg.max_field_log2, "largest field to enumerate, as log2 of its size")
      ->check(CLI::Range(1U, 40U));
  app.add_option("--workers", ctx.cfg.workers, "worker threads (0 = hardware concurrency)");

  std::string chosen;
  Handler handler;
  auto bind = [&](CLI::App* sub, std::string name, Handler h) {
    sub->callback([&chosen, &handler, name = std::move(name), h = std::move(h)] {
      chosen = name;
      handler = h;
    });
  };

  // genus
  CLI::App* genus_cmd = command(app, "genus", "genus p^k (p-1) / 2");
  opt_pk(genus_cmd, a);
  bind(genus_cmd, "genus", [](Context& c, std::ostream& os) {
    c.params = Json{{"p", c.a.p}, {"k", c.a.k}};
    return emit(c, "genus", big(genus(c.a.p, c.a.k)), os);
  });

  // count
  CLI::App* count_cmd = command(app, "count", "number of F_{p^n}-rational points");
  opt_pk(count_cmd, a);
  count_cmd->add_option("--c", a.c, "coefficient c (default -1)");
  count_cmd->add_option("--n", a.n, "extension degree")->required();
  bind(count_cmd, "count", [](Context& c, std::ostream& os) {
    c.params = curve_params(c.a);
    c.params["n"] = c.a.n;
    const CurveBk curve = make_curve(c.a.p, c.a.k, c.a.c);
    return emit(c, "count", Json{{"count", big(count_points(curve, c.a.n, c.cfg))}}, os);
  });

  // points
  CLI::App* points_cmd = command(app, "points", "list rational points");
  opt_pk(points_cmd, a);
  points_cmd->add_option("--c", a.c, "coefficient c (default -1)");
  points_cmd->add_option("--n", a.n, "extension degree")->required();
  bind(points_cmd, "points", [](Context& c, std::ostream& os) {
    c.params = curve_params(c.a);
    c.params["n"] = c.a.n;
    const CurveBk curve = make_curve(c.a.p, c.a.k, c.a.c);
    Json pts = Json::array();
    for (const CurvePoint& pt : enumerate_points(curve, make_field(c.a.p, c.a.n), c.cfg)) pts.push_back(to_json(pt));
    return emit(c, "points", pts, os);
  });

  // lpoly
  CLI::App* lpoly_cmd = command(app, "lpoly", "L-polynomial over F_p");
  opt_pk(lpoly_cmd, a);
  lpoly_cmd->add_option("--c", a.c, "coefficient c (default -1)");
  bind(lpoly_cmd, "lpoly", [](Context& c, std::ostream& os) {
    c.params = curve_params(c.a);
    return emit(c, "lpoly", to_json(lpolynomial(make_curve(c.a.p, c.a.k, c.a.c), c.cfg)), os);
  });

  // lpoly-divides
  CLI::App* ldiv_cmd = command(app, "lpoly-divides", "does L(B_l) divide L(B_k)?");
  opt_pk(ldiv_cmd, a);
  ldiv_cmd->add_option("--l", a.l, "exponent of the target curve")->required();
  ldiv_cmd->add_option("--c", a.c, "coefficient c (default -1)");
  bind(ldiv_cmd, "lpoly-divides", [](Context& c, std::ostream& os) {
    c.params = curve_params(c.a);
    c.params["l"] = c.a.l;
    const Obstruction o = kleiman_serre_obstruction(c.a.p, c.a.k, c.a.l, c.a.c, c.cfg);
    return emit(c, "lpoly-divides",
                Json{{"divides", o == Obstruction::NoObstruction},
                     {"obstruction", o == Obstruction::Obstructed ? "Obstructed" : "NoObstruction"}},
                os);
  });

  // gaps
  CLI::App* gaps_cmd = command(app, "gaps", "gap sequence of <p, p^k+1>");
  opt_pk(gaps_cmd, a);
  bind(gaps_cmd, "gaps", [](Context& c, std::ostream& os) {
    c.params = Json{{"p", c.a.p}, {"k", c.a.k}};
    const auto g = gaps(weierstrass_semigroup(c.a.p, c.a.k));
    return emit(c, "gaps", Json{{"count", g.size()}, {"gaps", g}}, os);
  });

  // rr
  CLI::App* rr_cmd = command(app, "rr", "monomial basis of L(n P)");
  opt_pk(rr_cmd, a);
  rr_cmd->add_option("--n", a.n, "pole order bound")->required();
  bind(rr_cmd, "rr", [](Context& c, std::ostream& os) {
    c.params = Json{{"p", c.a.p}, {"k", c.a.k}, {"n", c.a.n}};
    const CurveBk curve = make_curve(c.a.p, c.a.k, 1);
    Json basis = Json::array();
    for (const RRMonomial& mono : rr_basis(curve, c.a.n)) basis.push_back(to_json(mono));
    return emit(c, "rr", Json{{"dim", basis.size()}, {"basis", basis}}, os);
  });

  // morphism check | verify
  CLI::App* morphism_cmd = command(app, "morphism", "covers B_k -> B_l");
  morphism_cmd->require_subcommand(1);
  CLI::App* mcheck = command(*morphism_cmd, "check", "arithmetic criteria for a cover");
  opt_pk(mcheck, a);
  mcheck->add_option("--l", a.l, "exponent of the target curve")->required();
  mcheck->add_option("--d", a.d, "claimed degree of a totally ramified cover");
  bind(mcheck, "morphism check", [](Context& c, std::ostream& os) {
    c.params = Json{{"p", c.a.p}, {"k", c.a.k}, {"l", c.a.l}};
    Json res;
    const DivisibilityWitness w = divides_pk1(c.a.p, c.a.l, c.a.k);
    res["divisibility"] = to_json(w);
    if (c.a.l < c.a.k) res["degree_bound"] = to_json(degree_bound(c.a.p, c.a.k, c.a.l));
    if (w.divides) res["rho"] = to_json(build_rho(c.a.p, c.a.k, c.a.l));
    if (!c.a.d.empty()) {
      c.params["d"] = c.a.d;
      res["gate"] = to_json(decide_totally_ramified(c.a.p, c.a.k, c.a.l, BigInt(c.a.d)));
    }
    return emit(c, "morphism check", res, os);
  });
  CLI::App* mverify = command(*morphism_cmd, "verify", "push all rational points through rho");
  opt_pk(mverify, a);
  mverify->add_option("--l", a.l, "exponent of the target curve")->required();
  mverify->add_option("--c", a.c, "coefficient c (default -1)");
  mverify->add_option("--n", a.n, "extension degree")->required();
  bind(mverify, "morphism verify", [](Context& c, std::ostream& os) {
    c.params = curve_params(c.a);
    c.params["l"] = c.a.l;
    c.params["n"] = c.a.n;
    const MorphismSpec spec = build_rho(c.a.p, c.a.k, c.a.l, c.a.c);
    const FiberCensus census = fiber_census(spec, make_field(c.a.p, c.a.n), c.cfg);
    return emit(c, "morphism verify", Json{{"rho", to_json(spec)}, {"census", to_json(census)}}, os);
  });

  // aut enumerate | verify
  CLI::App* aut_cmd = command(app, "aut", "automorphisms of B_{k,+1}");
  aut_cmd->require_subcommand(1);
  CLI::App* aenum = command(*aut_cmd, "enumerate", "list the p-part as (d, e) pairs");
  opt_pk(aenum, a);
  aenum->add_option("--n", a.n, "extension degree (default: field of definition)");
  aenum->add_flag("--verify", a.verify, "also check the action on rational points");
  aenum->add_option("--stride", a.stride, "verify every stride-th element")->check(CLI::PositiveNumber);
  CLI::App* averify = command(*aut_cmd, "verify", "check the action on rational points");
  opt_pk(averify, a);
  averify->add_option("--n", a.n, "extension degree (default: verification degree)");
  averify->add_option("--stride", a.stride, "verify every stride-th element")->check(CLI::PositiveNumber);
  auto aut_handler = [aenum, averify](bool listing) {
    return [=](Context& c, std::ostream& os) {
      const unsigned base = field_of_definition_aut(c.a.p, c.a.k, c.cfg);
      CLI::App* sub = listing ? aenum : averify;
      const bool given = sub->count("--n") > 0;
      const unsigned n = given ? c.a.n : (listing ? base : verification_degree(c.a.p, c.a.k, c.cfg));
      c.params = Json{{"p", c.a.p}, {"k", c.a.k}, {"n", n}, {"stride", c.a.stride}};
      const AutContext actx = make_aut_context(c.a.p, c.a.k, n, c.cfg);
      Json res{{"field_of_definition", base}, {"n", n}, {"N", actx.N}, {"gamma", to_json(actx.gamma)}};
      if (listing) {
        Json pairs = Json::array();
        for (const auto& [d, e] : enumerate_p_part(actx, c.cfg)) pairs.push_back(Json{{"d", to_json(d)}, {"e", to_json(e)}});
        res["p_part"] = pairs.size();
        res["group_order"] = big(BigInt(pairs.size()) * actx.N);
        res["pairs"] = pairs;
      }
      if (!listing || c.a.verify) {
        const GroupCheck g = verify_group(actx, c.a.stride, c.cfg);
        res["verification"] = Json{{"points", actx.points.size()}, {"checked", g.checked}, {"failures", g.failures},
                                   {"group_order", big(g.group_order)}};
        ensure(g.failures == 0, ErrorKind::InternalInconsistency, "an automorphism fails to permute the points");
      }
      return emit(c, listing ? "aut enumerate" : "aut verify", res, os);
    };
  };
  bind(aenum, "aut enumerate", aut_handler(true));
  bind(averify, "aut verify", aut_handler(false));

  // quotient-genus
  CLI::App* qg_cmd = command(app, "quotient-genus", "genus of B_k / G from (m, t, r)");
  opt_pk(qg_cmd, a);
  qg_cmd->add_option("--m", a.m, "order of the cyclic part")->required();
  qg_cmd->add_option("--t", a.t, "order of the y-scalar")->required();
  qg_cmd->add_option("--r", a.r, "log_p of the p-part order")->required();
  bind(qg_cmd, "quotient-genus", [](Context& c, std::ostream& os) {
    c.params = Json{{"p", c.a.p}, {"k", c.a.k}, {"m", c.a.m}, {"t", c.a.t}, {"r", c.a.r}};
    return emit(c, "quotient-genus", to_json(quotient_report(c.a.p, c.a.k, {BigInt(c.a.m), c.a.t, c.a.r})), os);
  });

  // orbits
  CLI::App* orb_cmd = command(app, "orbits", "orbits of <alpha^s> on rational points");
  opt_pk(orb_cmd, a);
  orb_cmd->add_option("--s", a.s, "divisor s of N")->required();
  orb_cmd->add_option("--n", a.n, "extension degree (default: field of definition)");
  orb_cmd->add_option("--stride", a.stride, "check every stride-th translate")->check(CLI::PositiveNumber);
  bind(orb_cmd, "orbits", [orb_cmd](Context& c, std::ostream& os) {
    const unsigned n = orb_cmd->count("--n") > 0 ? c.a.n : field_of_definition_aut(c.a.p, c.a.k, c.cfg);
    c.params = Json{{"p", c.a.p}, {"k", c.a.k}, {"s", c.a.s}, {"n", n}};
    const AutContext actx = make_aut_context(c.a.p, c.a.k, n, c.cfg);
    const BigInt s(c.a.s);
    subgroup_params(c.a.p, c.a.k, s, 0);
    return emit(c, "orbits", to_json(verify_orbit_structure(actx, to_u64(s), c.a.stride, c.cfg)), os);
  });

  // galois decide | scan
  CLI::App* galois_cmd = command(app, "galois", "Galois covers B_k -> B_l");
  galois_cmd->require_subcommand(1);
  CLI::App* gdecide = command(*galois_cmd, "decide", "verdict for one (p, k, l)");
  opt_pk(gdecide, a);
  gdecide->add_option("--l", a.l, "exponent of the target curve")->required();
  bind(gdecide, "galois decide", [](Context& c, std::ostream& os) {
    c.params = Json{{"p", c.a.p}, {"k", c.a.k}, {"l", c.a.l}};
    return emit(c, "galois decide", to_json(decide_galois(c.a.p, c.a.k, c.a.l)), os);
  });
  CLI::App* gscan = command(*galois_cmd, "scan", "verdicts for all l < k <= kmax");
  gscan->add_option("--p", a.p, "odd prime")->required();
  gscan->add_option("--kmax", a.kmax, "largest k")->required()->check(CLI::Range(2U, 64U));
  gscan->add_option("--lmin", a.lmin, "smallest l (default 1)");
  gscan->add_flag("--csv", a.csv, "emit CSV regardless of --output");
  bind(gscan, "galois scan", [](Context& c, std::ostream& os) {
    c.params = Json{{"p", c.a.p}, {"kmax", c.a.kmax}, {"lmin", c.a.lmin}};
    const Json rows = scan_rows(c.a.p, c.a.kmax, c.a.lmin);
    if (c.output == "json" && !c.a.csv) return emit(c, "galois scan", rows, os);
    os << "p,k,l,verdict,rule,n_solutions,n_ruled_out\n";
    for (const Json& row : rows) {
      os << row["p"].get<std::uint64_t>() << ',' << row["k"].get<unsigned>() << ',' << row["l"].get<unsigned>() << ','
         << row["verdict"].get<std::string>() << ',' << row["rule"].get<std::string>() << ','
         << row["n_solutions"].get<std::size_t>() << ',' << row["n_ruled_out"].get<std::size_t>() << '\n';
    }
    return kExitOk;
  });

  // selftest
  CLI::App* self_cmd = command(app, "selftest", "run the acceptance suite");
  self_cmd->add_option("--golden", a.golden, "JSON file overriding frozen reference values");
  self_cmd->add_option("--criterion", a.criterion, "run a single criterion (1-10)")->check(CLI::Range(1, 10));
  bind(self_cmd, "selftest", [](Context& c, std::ostream& os) {
    const Json golden = c.a.golden.empty() ? default_golden() : load_golden(c.a.golden);
    c.params = Json{{"golden", c.a.golden}, {"max_field_log2", c.cfg.max_field_log2}, {"criterion", c.a.criterion}};
    const AcceptanceSummary summary = run_acceptance(c.cfg, golden, c.output == "json" ? nullptr : &os, c.a.criterion);
    if (c.output == "json") {
      Json results = Json::array();
      for (const CriterionResult& r : summary.results) results.push_back(to_json(r));
      os << envelope("selftest", c.params, Json{{"passed", summary.passed()}, {"criteria", results}}).dump(2) << '\n';
    }
    if (summary.inconsistent()) return kExitInconsistency;
    return summary.passed() ? kExitOk : kExitUsage;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    return handler(ctx, out);
  } catch (const Error& e) {
    err << "asmorph " << chosen << ": " << e.what() << '\n';
    if (e.kind() == ErrorKind::GuardExceeded) return kExitGuard;
    return e.is_inconsistency() ? kExitInconsistency : kExitUsage;
  } catch (const std::exception& e) {
    err << "asmorph " << chosen << ": " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace asmorph::cli
