#include "asmorph/galois.hpp"

#include <algorithm>

#include "asmorph/error.hpp"
#include "asmorph/morphism.hpp"

namespace asmorph {

namespace {

BigInt group_n(std::uint64_t p, unsigned k) { return pk1(p, k) * (p - 1); }

bool is_power_of_two(unsigned k) { return k != 0 && (k & (k - 1)) == 0; }

// m solving the equation for given (r, t), if it is a positive integer.
std::optional<BigInt> m_for(std::uint64_t p, unsigned k, unsigned l, unsigned r, std::uint64_t t) {
  const BigInt den = ipow(p, l) * t + 1;
  BigInt num;
  BigInt scale = 1;
  if (r <= k) {
    num = BigInt(t) * (ipow(p, k - r) + 1);
  } else {
    // Multiply through by p^(r-k) to stay in the integers.
    scale = ipow(p, r - k);
    num = BigInt(t) * (1 + scale);
  }
  if (num % (den * scale) != 0) return std::nullopt;
  return num / (den * scale);
}

// Raw solutions at a fixed r, without annotations.
std::vector<std::pair<std::uint64_t, BigInt>> solutions_at(std::uint64_t p, unsigned k, unsigned l, unsigned r) {
  const BigInt N = group_n(p, k);
  std::vector<std::pair<std::uint64_t, BigInt>> out;
  for (std::uint64_t t : divisors(p - 1)) {
    const auto m = m_for(p, k, l, r, t);
    if (m && *m >= 1 && N % *m == 0) out.emplace_back(t, *m);
  }
  return out;
}

std::optional<BigInt> exceptional_order(std::uint64_t p, unsigned k, unsigned l) {
  if (!divides_pk1(p, l, k).divides) return std::nullopt;
  return pk1(p, k) / pk1(p, l);
}

// Hypotheses shared by the three exclusion lemmas.
void common_hypotheses(std::uint64_t p, unsigned k, unsigned l, unsigned r, std::vector<std::string>& unmet) {
  (void)p;
  if (!(1 < l && l < k)) unmet.emplace_back("1<l<k");
  if (!(0 < r && r < k)) unmet.emplace_back("0<r<k");
  if (!(k % l == 0 && (k / l) % 2 == 0)) unmet.emplace_back("l|k with k/l even");
}

NoSolutionReport exclusion(std::uint64_t p, unsigned k, unsigned l, unsigned r, std::vector<std::string> unmet,
                           const char* name) {
  NoSolutionReport rep;
  rep.unmet = std::move(unmet);
  if (r <= k) rep.gcd = gcd(pk1(p, k - r), pk1(p, k));
  for (const auto& [t, m] : solutions_at(p, k, l, r)) {
    if (m > 1) ++rep.brute_force;
  }
  if (!rep.unmet.empty()) return rep;
  rep.status = LemmaStatus::NoSolutions;
  ensure(rep.brute_force == 0, ErrorKind::InternalInconsistency,
         std::string(name) + " excludes solutions that the exhaustive search found at r = " + std::to_string(r));
  return rep;
}

void annotate(std::uint64_t p, unsigned k, unsigned l, Eq61Solution& s) {
  if (s.m % s.t == 0) {
    s.u = s.m / s.t;
    s.u0 = odd_part(*s.u);
    s.e = nu2(*s.u);
  }
  if (s.r == 0) {
    const auto exc = exceptional_order(p, k, l);
    if (!exc || s.m != *exc) s.annotations.emplace_back("RuledOutBy(Thm4.2(1))");
  }
  if (s.r > 0 && s.m == 1) s.annotations.emplace_back("RuledOutBy(Thm4.2(2))");
  if (s.r > 0 && s.r <= k && l <= k - s.r && k - s.r <= 2 * l) {
    const BigInt A = ipow(p, k - s.r - l);
    const BigInt P = ipow(p, l);
    ensure(apdp_check(A, P, BigInt(s.t)), ErrorKind::InternalInconsistency, "solution fails the apdp integrality");
    ensure(BigInt(s.t) == A, ErrorKind::InternalInconsistency, "apdp forces t = p^(k-r-l)");
    s.annotations.emplace_back("Forced(apdp): t = p^(k-r-l)");
  }
  const GeneralDivReport gd = lemma_general_div(p, k, l, s.r, s.t, s.m);
  if (gd.status == LemmaStatus::Applied) s.annotations.emplace_back("general_div: all clauses hold");
  if (s.r > 0 && s.r < k) {
    lemma_no_solutions_gcd2(p, k, l, s.r);
    lemma_no_solutions_short(p, k, l, s.r);
  }
  s.ruled_out = std::ranges::any_of(s.annotations, [](const std::string& a) { return a.starts_with("RuledOutBy"); });
}

}  // namespace

bool satisfies_eq61(std::uint64_t p, unsigned k, unsigned l, unsigned r, std::uint64_t t, const BigInt& m) {
  const BigInt lhs = m * (ipow(p, l) * t + 1);
  if (r <= k) return lhs == BigInt(t) * (ipow(p, k - r) + 1);
  const BigInt scale = ipow(p, r - k);
  return lhs * scale == BigInt(t) * (1 + scale);
}

std::vector<Eq61Solution> solve_eq61(std::uint64_t p, unsigned k, unsigned l) {
  ensure(p > 2 && is_prime(p), ErrorKind::InvalidParameters, "p must be an odd prime");
  ensure(1 <= l && l < k, ErrorKind::InvalidParameters, "need 1 <= l < k");
  std::vector<Eq61Solution> out;
  for (unsigned r = 0; r <= 2 * k; ++r) {
    for (auto& [t, m] : solutions_at(p, k, l, r)) {
      Eq61Solution s;
      s.r = r;
      s.t = t;
      s.m = std::move(m);
      annotate(p, k, l, s);
      out.push_back(std::move(s));
    }
  }
  return out;
}

std::string_view to_string(LemmaStatus s) {
  switch (s) {
    case LemmaStatus::Applied: return "Applied";
    case LemmaStatus::NoSolutions: return "NoSolutions";
    case LemmaStatus::HypothesisNotMet: return "HypothesisNotMet";
    case LemmaStatus::PreconditionNotMet: return "PreconditionNotMet";
  }
  return "?";
}

GeneralDivReport lemma_general_div(std::uint64_t p, unsigned k, unsigned l, unsigned r, std::uint64_t t,
                                   const BigInt& m) {
  GeneralDivReport rep;
  common_hypotheses(p, k, l, r, rep.unmet);
  if (!(r < k && 2 * l < k - r)) rep.unmet.emplace_back("l<(k-r)/2");
  if (t == 0 || (p - 1) % t != 0) rep.unmet.emplace_back("t|p-1");
  if (!(m > 1 && group_n(p, k) % m == 0)) rep.unmet.emplace_back("m|N with m>1");
  if (t == 0 || !satisfies_eq61(p, k, l, r, t, m)) rep.unmet.emplace_back("equation");
  if (!rep.unmet.empty()) return rep;

  rep.status = LemmaStatus::Applied;
  const bool integral = m % t == 0;
  if (integral) {
    rep.u = m / t;
    rep.u0 = odd_part(rep.u);
    rep.e = nu2(rep.u);
  }
  rep.clauses[0] = integral && rep.u >= 5;
  rep.clauses[1] = integral && divides(rep.u0, gcd(pk1(p, k - r), pk1(p, k)));
  rep.clauses[2] = integral && divides(rep.u0, ipow(p, r) - 1);
  rep.clauses[3] = integral && gcd(rep.u0, BigInt(t)) == 1;
  rep.clauses[4] = integral && rep.u * rep.u >= ipow(p, k - r);
  for (std::size_t i = 0; i < rep.clauses.size(); ++i) {
    ensure(rep.clauses[i], ErrorKind::InternalInconsistency,
           "general_div clause " + std::to_string(i + 1) + " fails with all hypotheses met");
  }
  return rep;
}

NoSolutionReport lemma_no_solutions_gcd2(std::uint64_t p, unsigned k, unsigned l, unsigned r) {
  std::vector<std::string> unmet;
  common_hypotheses(p, k, l, r, unmet);
  if (!(r < k && 2 * l < k - r)) unmet.emplace_back("l<(k-r)/2");
  if (!(r < k && gcd(pk1(p, k - r), pk1(p, k)) == 2)) unmet.emplace_back("gcd(p^(k-r)+1,p^k+1)=2");
  return exclusion(p, k, l, r, std::move(unmet), "gcd2");
}

NoSolutionReport lemma_no_solutions_short(std::uint64_t p, unsigned k, unsigned l, unsigned r) {
  std::vector<std::string> unmet;
  common_hypotheses(p, k, l, r, unmet);
  if (!(r < k && 2 * l < k - r && k - r <= l * l)) unmet.emplace_back("2l<k-r<=l^2");
  NoSolutionReport rep = exclusion(p, k, l, r, std::move(unmet), "short-range");
  if (rep.status == LemmaStatus::NoSolutions) {
    rep.note = "external 2-adic step; confirmed by exhaustive search";
  }
  return rep;
}

ChainReport lemma_euclid_chain(std::uint64_t p, unsigned l, std::uint64_t t, unsigned kr) {
  ensure(p > 2 && is_prime(p) && l >= 1 && t >= 1, ErrorKind::InvalidParameters, "need odd prime p, l >= 1, t >= 1");
  ChainReport rep;
  rep.M = ipow(p, l) * t + 1;
  if ((ipow(p, kr) + 1) % rep.M != 0) return rep;
  rep.status = LemmaStatus::Applied;
  rep.Q = kr / l;
  rep.R = kr % l;
  const auto mod = [&](const BigInt& v) {
    BigInt r = v % rep.M;
    return r < 0 ? BigInt(r + rep.M) : r;
  };
  BigInt tp = 1;
  for (unsigned i = 1; i <= rep.Q; ++i) {
    tp *= t;
    ChainStep step;
    step.i = i;
    step.lhs = mod(tp);
    const BigInt pw = ipow(p, kr - i * l);
    step.rhs = mod(i % 2 == 1 ? pw : BigInt(-pw));
    step.holds = step.lhs == step.rhs;
    ensure(step.holds, ErrorKind::InternalInconsistency, "chain congruence fails at i = " + std::to_string(i));
    rep.steps.push_back(std::move(step));
  }
  const BigInt pR = ipow(p, rep.R);
  rep.terminal_difference = ipow(BigInt(t), rep.Q) - (rep.Q % 2 == 1 ? pR : BigInt(-pR));
  ensure(rep.Q == 0 || rep.terminal_difference % rep.M == 0, ErrorKind::InternalInconsistency,
         "terminal difference is not divisible by M");
  rep.bound_applies = rep.Q <= l && t < p;
  rep.terminal_equal = rep.terminal_difference == 0;
  rep.conclusion = t == 1 && rep.R == 0 && rep.Q % 2 == 1;
  if (rep.bound_applies) {
    ensure(abs(rep.terminal_difference) < rep.M, ErrorKind::InternalInconsistency, "terminal bound fails");
    ensure(rep.terminal_equal && rep.conclusion, ErrorKind::InternalInconsistency,
           "bounded chain does not end in t = 1, R = 0, Q odd");
  }
  return rep;
}

Thm42Verdict theorem42_gate(std::uint64_t p, unsigned k, unsigned l, SubgroupKind kind, const BigInt& order,
                            unsigned r) {
  ensure(p > 2 && is_prime(p), ErrorKind::InvalidParameters, "p must be an odd prime");
  ensure(1 <= l && l < k, ErrorKind::InvalidParameters, "need 1 <= l < k");
  Thm42Verdict v;
  switch (kind) {
    case SubgroupKind::InsideH: {
      ensure(order >= 1, ErrorKind::InvalidParameters, "subgroup order must be positive");
      const auto exc = exceptional_order(p, k, l);
      v.impossible = !exc || order != *exc;
      v.reason = v.impossible
                     ? (exc ? "order " + to_string(order) + " differs from (p^k+1)/(p^l+1) = " + to_string(*exc)
                            : std::string("p^l+1 does not divide p^k+1"))
                     : std::string("order equals (p^k+1)/(p^l+1)");
      break;
    }
    case SubgroupKind::InsideP1: {
      ensure(r >= 1 && r <= 2 * k + 1, ErrorKind::InvalidParameters, "r must lie in [1, 2k+1]");
      const BigInt a = ipow(p, k - l);
      v.delta_bound = (a - 1) * (2 * (a + 1) - BigInt(p - 1) * ipow(p, k));
      ensure(*v.delta_bound < 0, ErrorKind::InternalInconsistency, "different bound is not negative");
      v.impossible = true;
      v.reason = "different would be at most " + to_string(*v.delta_bound) + " < 0";
      break;
    }
    case SubgroupKind::ContainsP1:
      v.impossible = true;
      v.reason = "G contains the translations, so the quotient is rational";
      break;
  }
  return v;
}

std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::Exists: return "Exists";
    case Outcome::NoGaloisMorphism: return "NoGaloisMorphism";
    case Outcome::Undecided: return "Undecided";
  }
  return "?";
}

GaloisVerdict decide_galois(std::uint64_t p, unsigned k, unsigned l) {
  GaloisVerdict v;
  v.solutions = solve_eq61(p, k, l);
  for (const Eq61Solution& s : v.solutions) {
    if (!s.ruled_out) v.survivors.push_back(s);
  }

  if (const auto exc = exceptional_order(p, k, l)) {
    v.outcome = Outcome::Exists;
    v.group_order = *exc;
    v.reasons = {"Thm3.5(a)"};
    const bool realized = std::ranges::any_of(v.solutions, [&](const Eq61Solution& s) {
      return s.r == 0 && s.t == 1 && s.m == *exc && !s.ruled_out;
    });
    ensure(realized, ErrorKind::InternalInconsistency, "the cyclic cover is missing from the solution list");
    return v;
  }

  std::vector<std::string> rules;
  if (is_power_of_two(k)) rules.emplace_back("Cor7.1");
  if (k == 2 * l && l > 2) rules.emplace_back("Cor7.3");
  if (k < l * l) rules.emplace_back("Cor7.2");
  if (rules.empty()) {
    v.outcome = Outcome::Undecided;
    return v;
  }
  v.outcome = Outcome::NoGaloisMorphism;
  v.reasons = {rules.front()};
  v.also_applicable.assign(rules.begin() + 1, rules.end());
  ensure(v.survivors.empty(), ErrorKind::InternalInconsistency,
         v.reasons.front() + " excludes a cover but an unexplained solution survives");
  return v;
}

std::string_view rule_description(std::string_view rule) {
  if (rule == "Thm3.5(a)") return "p^l+1 divides p^k+1; (x,y) -> (x^t, y) is a cyclic cover";
  if (rule == "Cor7.1") return "k is a power of 2";
  if (rule == "Cor7.2") return "k < l^2 and p^l+1 does not divide p^k+1";
  if (rule == "Cor7.3") return "k = 2l with l > 2";
  if (rule == "Thm4.2(1)") return "G inside the cyclic part needs |G| = (p^k+1)/(p^l+1)";
  if (rule == "Thm4.2(2)") return "G inside the p-part forces a negative different";
  if (rule == "Thm4.2(3)") return "G containing the p-part has a rational quotient";
  return "unknown rule";
}

}  // namespace asmorph
