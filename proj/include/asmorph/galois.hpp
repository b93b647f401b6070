#pragma once

// Galois covers B_k -> B_l = B_k / G. A subgroup with |U| = p^r, |C| = m and
// y-scalar order t yields a quotient of genus g(B_l) exactly when
//
//     m (p^l t + 1) = t (p^(k-r) + 1).
//
// This module solves that equation exhaustively, runs the number-theoretic
// exclusion lemmas against the brute-force solutions, and combines them
// into a verdict. Rule identifiers in verdicts ("Cor7.1", "Thm4.2(1)", ...)
// are stable tokens, listed in rule_description().

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "asmorph/arith.hpp"

namespace asmorph {

struct Eq61Solution {
  unsigned r = 0;
  std::uint64_t t = 1;
  BigInt m;
  std::optional<BigInt> u;  // m / t when integral
  BigInt u0;                // odd part of u (0 when u is absent)
  unsigned e = 0;           // 2-adic valuation of u
  std::vector<std::string> annotations;
  bool ruled_out = false;
};

/// All (r, t, m) with t | p-1, m | (p^k+1)(p-1), 0 <= r <= 2k, sorted by
/// (r, t, m). Errors: InvalidParameters unless 1 <= l < k.
std::vector<Eq61Solution> solve_eq61(std::uint64_t p, unsigned k, unsigned l);

/// Exact test of the equation; r may exceed k.
bool satisfies_eq61(std::uint64_t p, unsigned k, unsigned l, unsigned r, std::uint64_t t, const BigInt& m);

enum class LemmaStatus { Applied, NoSolutions, HypothesisNotMet, PreconditionNotMet };
std::string_view to_string(LemmaStatus s);

struct GeneralDivReport {
  LemmaStatus status = LemmaStatus::HypothesisNotMet;
  std::vector<std::string> unmet;
  BigInt u;
  BigInt u0;
  unsigned e = 0;
  std::array<bool, 5> clauses{};  // only filled when Applied
};

/// Throws InternalInconsistency if a clause fails while every hypothesis holds.
GeneralDivReport lemma_general_div(std::uint64_t p, unsigned k, unsigned l, unsigned r, std::uint64_t t,
                                   const BigInt& m);

struct NoSolutionReport {
  LemmaStatus status = LemmaStatus::HypothesisNotMet;
  std::vector<std::string> unmet;
  BigInt gcd;                   // gcd(p^(k-r)+1, p^k+1) when r <= k
  std::uint64_t brute_force = 0;  // solutions found at this r
  std::string note;
};

/// The gcd = 2 exclusion. When its hypotheses hold it reports NoSolutions and
/// throws InternalInconsistency if the exhaustive search disagrees.
NoSolutionReport lemma_no_solutions_gcd2(std::uint64_t p, unsigned k, unsigned l, unsigned r);

/// The 2l < k-r <= l^2 exclusion, same contract. Its last step rests on a
/// 2-adic argument that is not derived here, so every positive answer is
/// backed by the exhaustive search and carries a note saying so.
NoSolutionReport lemma_no_solutions_short(std::uint64_t p, unsigned k, unsigned l, unsigned r);

struct ChainStep {
  unsigned i = 0;
  BigInt lhs;  // t^i mod M
  BigInt rhs;  // (-1)^(i-1) p^(kr - i l) mod M
  bool holds = false;
};

struct ChainReport {
  LemmaStatus status = LemmaStatus::PreconditionNotMet;
  BigInt M;
  unsigned Q = 0;
  unsigned R = 0;
  std::vector<ChainStep> steps;
  BigInt terminal_difference;  // t^Q - (-1)^(Q-1) p^R
  bool bound_applies = false;  // Q <= l and t < p, so |difference| < M
  bool terminal_equal = false;
  bool conclusion = false;     // t = 1, R = 0, Q odd
};

/// Congruences t^i = (-1)^(i-1) p^(kr - i l) mod M = t p^l + 1, i = 1..Q.
/// PreconditionNotMet when M does not divide p^kr + 1. Throws
/// InternalInconsistency when a congruence or the bounded conclusion fails.
ChainReport lemma_euclid_chain(std::uint64_t p, unsigned l, std::uint64_t t, unsigned kr);

enum class SubgroupKind { InsideH, InsideP1, ContainsP1 };

struct Thm42Verdict {
  bool impossible = false;
  std::string reason;
  std::optional<BigInt> delta_bound;  // upper bound on the different, InsideP1 only
};

/// `order` is the subgroup order for InsideH; `r` is log_p |G| for InsideP1.
Thm42Verdict theorem42_gate(std::uint64_t p, unsigned k, unsigned l, SubgroupKind kind, const BigInt& order = 0,
                            unsigned r = 0);

enum class Outcome { Exists, NoGaloisMorphism, Undecided };
std::string_view to_string(Outcome o);

struct GaloisVerdict {
  Outcome outcome = Outcome::Undecided;
  std::optional<BigInt> group_order;
  std::vector<std::string> reasons;          // the deciding rule
  std::vector<std::string> also_applicable;  // other rules that would decide too
  std::vector<Eq61Solution> solutions;
  std::vector<Eq61Solution> survivors;       // solutions not ruled out
};

/// Layered decision: divisibility first, then the k = 2^a, k = 2l (l > 2) and
/// k < l^2 exclusions, otherwise Undecided. Verdicts apply to c = +1 and
/// c = -1 alike. Throws InternalInconsistency if an exclusion leaves an
/// unexplained solution. Errors: InvalidParameters unless 1 <= l < k.
GaloisVerdict decide_galois(std::uint64_t p, unsigned k, unsigned l);

std::string_view rule_description(std::string_view rule);

}  // namespace asmorph
