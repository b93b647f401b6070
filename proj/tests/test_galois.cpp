#include <doctest.h>

#include <algorithm>

#include "asmorph/error.hpp"
#include "asmorph/galois.hpp"

using namespace asmorph;

namespace {

struct Triple {
  unsigned r;
  std::uint64_t t;
  BigInt m;
  friend bool operator==(const Triple&, const Triple&) = default;
};

// m (p^l t + 1) p^r = t (p^k + p^r), which is the equation with p^r cleared
// and holds for every r in [0, 2k].
std::vector<Triple> brute_eq61(std::uint64_t p, unsigned k, unsigned l) {
  std::vector<Triple> out;
  const std::uint64_t N = to_u64(pk1(p, k) * (p - 1));
  for (unsigned r = 0; r <= 2 * k; ++r)
    for (std::uint64_t t : divisors(p - 1))
      for (std::uint64_t m : divisors(N))
        if (BigInt(m) * (ipow(p, l) * t + 1) * ipow(p, r) == BigInt(t) * (ipow(p, k) + ipow(p, r)))
          out.push_back({r, t, BigInt(m)});
  return out;
}

bool has(const std::vector<std::string>& v, const std::string& s) { return std::find(v.begin(), v.end(), s) != v.end(); }

}  // namespace

TEST_CASE("genus-matching equation solver agrees with brute force") {
  for (std::uint64_t p : {3, 5, 7})
    for (unsigned k = 2; k <= 9; ++k)
      for (unsigned l = 1; l < k; ++l) {
        std::vector<Triple> got;
        for (const auto& s : solve_eq61(p, k, l)) {
          got.push_back({s.r, s.t, s.m});
          CHECK(satisfies_eq61(p, k, l, s.r, s.t, s.m));
        }
        CHECK(got == brute_eq61(p, k, l));
      }
  CHECK_THROWS_AS(solve_eq61(3, 2, 2), Error);
}

TEST_CASE("genus-matching equation worked instances") {
  const auto s331 = solve_eq61(3, 3, 1);
  auto find = [&](std::uint64_t t, long m) {
    return std::find_if(s331.begin(), s331.end(), [&](const Eq61Solution& s) { return s.r == 0 && s.t == t && s.m == m; });
  };
  REQUIRE(find(1, 7) != s331.end());
  REQUIRE(find(2, 8) != s331.end());
  CHECK_FALSE(find(1, 7)->ruled_out);
  CHECK(find(2, 8)->ruled_out);
  CHECK(has(find(2, 8)->annotations, "RuledOutBy(Thm4.2(1))"));
  for (const auto& s : solve_eq61(3, 2, 1)) {
    CHECK(s.r > 0);
    CHECK(s.ruled_out);
  }
  for (const auto& s : solve_eq61(3, 8, 2)) CHECK(s.r != 1);
}

TEST_CASE("general_div lemma") {
  const auto rep = lemma_general_div(3, 3, 1, 0, 1, 7);
  CHECK(rep.status == LemmaStatus::HypothesisNotMet);
  CHECK_FALSE(rep.unmet.empty());
  for (std::uint64_t p : {3, 5})
    for (unsigned k = 2; k <= 12; ++k)
      for (unsigned l = 2; l < k; ++l)
        for (const auto& s : solve_eq61(p, k, l)) {
          const auto r = lemma_general_div(p, k, l, s.r, s.t, s.m);
          if (r.status == LemmaStatus::Applied)
            for (bool c : r.clauses) CHECK(c);
        }
}

TEST_CASE("no-solution lemmas") {
  const auto a = lemma_no_solutions_gcd2(3, 8, 2, 1);
  CHECK(a.status == LemmaStatus::NoSolutions);
  CHECK(a.gcd == 2);
  CHECK(a.brute_force == 0);
  CHECK(lemma_no_solutions_gcd2(3, 6, 3, 1).status == LemmaStatus::HypothesisNotMet);
  for (std::uint64_t p : {3, 5})
    for (unsigned k = 3; k <= 12; ++k)
      for (unsigned l = 2; l < k; ++l)
        for (unsigned r = 0; r <= k; ++r) {
          const auto s = lemma_no_solutions_short(p, k, l, r);
          if (s.status == LemmaStatus::NoSolutions) {
            CHECK(s.brute_force == 0);
            CHECK_FALSE(s.note.empty());
          }
        }
}

TEST_CASE("Euclid chain") {
  const ChainReport a = lemma_euclid_chain(3, 1, 2, 3);
  CHECK(a.status == LemmaStatus::Applied);
  CHECK(a.M == 7);
  REQUIRE(a.steps.size() == 3);
  CHECK(a.steps[0].lhs == 2);
  CHECK(a.steps[1].lhs == 4);
  CHECK(a.steps[2].lhs == 1);
  for (const auto& s : a.steps) CHECK(s.holds);

  const ChainReport b = lemma_euclid_chain(3, 1, 1, 3);
  CHECK(b.M == 4);
  CHECK(b.Q == 3);
  CHECK(b.R == 0);
  CHECK(b.terminal_equal);
  CHECK(b.conclusion);

  CHECK(lemma_euclid_chain(3, 2, 1, 4).status == LemmaStatus::PreconditionNotMet);
  for (std::uint64_t p : {3, 5, 7})
    for (unsigned l = 1; l <= 4; ++l)
      for (std::uint64_t t : divisors(p - 1))
        for (unsigned kr = 1; kr <= 16; ++kr) CHECK_NOTHROW(lemma_euclid_chain(p, l, t, kr));
}

TEST_CASE("subgroup gate") {
  CHECK(theorem42_gate(3, 3, 1, SubgroupKind::InsideH, 8).impossible);
  CHECK_FALSE(theorem42_gate(3, 3, 1, SubgroupKind::InsideH, 7).impossible);
  const Thm42Verdict v = theorem42_gate(3, 4, 2, SubgroupKind::InsideP1, 0, 2);
  CHECK(v.impossible);
  REQUIRE(v.delta_bound.has_value());
  CHECK(*v.delta_bound < 0);
  CHECK(theorem42_gate(3, 4, 2, SubgroupKind::ContainsP1).impossible);
}

TEST_CASE("verdicts") {
  const GaloisVerdict e = decide_galois(3, 3, 1);
  CHECK(e.outcome == Outcome::Exists);
  CHECK(e.group_order == BigInt(7));

  const GaloisVerdict c71 = decide_galois(3, 4, 2);
  CHECK(c71.outcome == Outcome::NoGaloisMorphism);
  CHECK(c71.reasons == std::vector<std::string>{"Cor7.1"});

  const GaloisVerdict c73 = decide_galois(3, 6, 3);
  CHECK(c73.outcome == Outcome::NoGaloisMorphism);
  CHECK(c73.reasons == std::vector<std::string>{"Cor7.3"});

  CHECK(decide_galois(3, 5, 3).reasons == std::vector<std::string>{"Cor7.2"});
  CHECK(decide_galois(3, 5, 2).outcome == Outcome::Undecided);

  for (std::uint64_t p : {3, 5})
    for (unsigned k = 2; k <= 12; ++k)
      for (unsigned l = 1; l < k; ++l) {
        const GaloisVerdict v = decide_galois(p, k, l);
        CHECK((v.outcome == Outcome::Exists) == (pk1(p, k) % pk1(p, l) == 0));
        if (v.outcome == Outcome::NoGaloisMorphism) CHECK(v.survivors.empty());
        for (const auto& r : v.reasons) CHECK_FALSE(rule_description(r).empty());
      }
}
