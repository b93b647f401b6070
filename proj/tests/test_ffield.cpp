#include <doctest.h>

#include <algorithm>

#include "asmorph/error.hpp"
#include "asmorph/ffield.hpp"

using namespace asmorph;

namespace {

using Poly = std::vector<std::uint32_t>;  // low degree first, trimmed

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo the monic polynomial b over F_p.
Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
  trim(a);
  while (a.size() >= b.size()) {
    const std::uint32_t lead = a.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = (a[shift + i] + (p - lead) * b[i]) % p;
    trim(a);
  }
  return a;
}

Poly monic_from_index(std::uint64_t idx, unsigned deg, std::uint32_t p) {
  Poly f(deg + 1, 0);
  for (unsigned i = 0; i < deg; ++i) {
    f[i] = static_cast<std::uint32_t>(idx % p);
    idx /= p;
  }
  f[deg] = 1;
  return f;
}

// Trial division by every monic polynomial of degree 1..deg/2.
bool naive_irreducible(const Poly& f, std::uint32_t p) {
  const unsigned deg = static_cast<unsigned>(f.size() - 1);
  for (unsigned d = 1; 2 * d <= deg; ++d) {
    std::uint64_t count = 1;
    for (unsigned i = 0; i < d; ++i) count *= p;
    for (std::uint64_t j = 0; j < count; ++j)
      if (poly_mod(f, monic_from_index(j, d, p), p).empty()) return false;
  }
  return true;
}

// First irreducible monic polynomial when coefficients are compared from the
// constant term upward.
Poly naive_canonical(std::uint32_t p, unsigned deg) {
  std::vector<Poly> candidates;
  std::uint64_t count = 1;
  for (unsigned i = 0; i < deg; ++i) count *= p;
  for (std::uint64_t j = 0; j < count; ++j) candidates.push_back(monic_from_index(j, deg, p));
  std::sort(candidates.begin(), candidates.end());
  for (const Poly& f : candidates)
    if (naive_irreducible(f, p)) return f;
  return {};
}

Poly modulus_of(const FieldCtx& ctx) { return Poly(ctx.modulus().begin(), ctx.modulus().end()); }

}  // namespace

TEST_CASE("canonical moduli") {
  CHECK(modulus_of(make_field(3, 1)) == Poly{0, 1});
  CHECK(modulus_of(make_field(3, 2)) == Poly{1, 0, 1});
  CHECK(modulus_of(make_field(3, 4)) == Poly{1, 0, 1, 1, 1});
  CHECK(modulus_of(make_field(3, 8)) == Poly{1, 0, 0, 0, 0, 1, 1, 0, 1});
  CHECK(modulus_of(make_field(5, 2)) == Poly{1, 1, 1});
  for (auto [p, n] : std::vector<std::pair<std::uint32_t, unsigned>>{{3, 2}, {3, 3}, {3, 4}, {3, 5}, {5, 2}, {5, 3}, {7, 2}, {7, 3}}) {
    CAPTURE(p);
    CAPTURE(n);
    CHECK(modulus_of(make_field(p, n)) == naive_canonical(p, n));
  }
}

TEST_CASE("Ben-Or agrees with trial division") {
  for (unsigned deg = 1; deg <= 5; ++deg) {
    std::uint64_t count = 1;
    for (unsigned i = 0; i < deg; ++i) count *= 3;
    for (std::uint64_t j = 0; j < count; ++j) {
      const Poly f = monic_from_index(j, deg, 3);
      CHECK(is_irreducible(f, 3) == naive_irreducible(f, 3));
    }
  }
}

TEST_CASE("field construction errors and interning") {
  CHECK(&make_field(3, 2) == &make_field(3, 2));
  auto kind_of = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::InternalInconsistency;
  };
  CHECK(kind_of([] { make_field(2, 1); }) == ErrorKind::NotOdd);
  CHECK(kind_of([] { make_field(9, 1); }) == ErrorKind::NotPrime);
  CHECK(kind_of([] { make_field(3, 0); }) == ErrorKind::InvalidParameters);
  CHECK(kind_of([] { make_field(3, kMaxDegree + 1); }) == ErrorKind::InvalidParameters);
  Config tight;
  tight.max_field_log2 = 10;
  CHECK(kind_of([&] { make_field(3, 9).require_enumerable(tight); }) == ErrorKind::GuardExceeded);
  CHECK(kind_of([] { FieldElem::from_int(make_field(3, 1), 1) + FieldElem::from_int(make_field(3, 2), 1); }) ==
        ErrorKind::CtxMismatch);
  CHECK(kind_of([] { FieldElem(make_field(3, 2)).inverse(); }) == ErrorKind::DivisionByZero);
}

TEST_CASE("indexing puts the constant coefficient first") {
  const FieldCtx& f81 = make_field(3, 4);
  CHECK(FieldElem::from_int(f81, 1).index() == 27);
  CHECK(FieldElem::from_int(f81, 2).index() == 54);
  const std::int64_t x[] = {0, 1};
  CHECK(FieldElem::from_coeffs(f81, x).index() == 9);
  for (std::uint64_t i = 0; i < 81; ++i) CHECK(FieldElem::from_index(f81, i).index() == i);
}

TEST_CASE("field axioms exhaustively on F_25 and Frobenius on F_81") {
  const FieldCtx& f = make_field(5, 2);
  std::vector<FieldElem> all;
  for_each_element(f, Config{}, [&](const FieldElem& e) { all.push_back(e); });
  REQUIRE(all.size() == 25);
  const FieldElem zero(f);
  const FieldElem one = FieldElem::from_int(f, 1);
  for (const auto& a : all) {
    CHECK(a + zero == a);
    CHECK(a * one == a);
    CHECK(a - a == zero);
    CHECK(a + (-a) == zero);
    if (!a.is_zero()) CHECK(a * a.inverse() == one);
    for (const auto& b : all) {
      CHECK(a * b == b * a);
      for (const auto& c : {all[3], all[17]}) CHECK(a * (b + c) == a * b + a * c);
    }
  }
  const FieldCtx& g = make_field(3, 4);
  for_each_element(g, Config{}, [&](const FieldElem& a) {
    CHECK(pow(a, std::uint64_t{81}) == a);
    const FieldElem b = FieldElem::from_index(g, (a.index() * 7 + 5) % 81);
    CHECK(pow(a + b, std::uint64_t{3}) == pow(a, std::uint64_t{3}) + pow(b, std::uint64_t{3}));
  });
}

TEST_CASE("orders and roots of unity") {
  const FieldCtx& f9 = make_field(3, 2);
  const FieldCtx& f81 = make_field(3, 4);
  CHECK(mult_order(f9.primitive_element()) == 8);
  CHECK(mult_order(f81.primitive_element()) == 80);
  CHECK(mult_order(root_of_unity(f9, 8)) == 8);
  CHECK(mult_order(root_of_unity(f81, 20)) == 20);
  CHECK_THROWS_AS(root_of_unity(f9, 20), Error);
  CHECK_THROWS_AS(mult_order(FieldElem(f9)), Error);
  CHECK(min_extension_with_order(3, 8) == 2);
  CHECK(min_extension_with_order(3, 20) == 4);
  CHECK(min_extension_with_order(3, 160) == 8);
  CHECK_THROWS_AS(min_extension_with_order(3, 6), Error);
}

TEST_CASE("additive solver matches exhaustive search") {
  const FieldCtx& f3 = make_field(3, 1);
  const FieldElem m1 = FieldElem::from_int(f3, -1);
  CHECK(solve_additive(m1, FieldElem(f3)).size() == 3);
  CHECK(solve_additive(m1, FieldElem::from_int(f3, 1)).empty());

  const FieldCtx& f9 = make_field(3, 2);
  CHECK(solve_additive(FieldElem::from_int(f9, 1), FieldElem(f9)).size() == 3);

  for (const FieldCtx* ctx : {&make_field(3, 4), &make_field(5, 2), &make_field(7, 2)}) {
    for (std::int64_t cv : {1, -1, 2}) {
      const FieldElem c = FieldElem::from_int(*ctx, cv);
      const auto solver = additive_solver(c);
      const std::uint64_t q = ctx->size_u64();
      std::vector<std::vector<FieldElem>> fibers(q);
      for (std::uint64_t i = 0; i < q; ++i) {
        const FieldElem y = FieldElem::from_index(*ctx, i);
        fibers[(pow(y, ctx->p()) + c * y).index()].push_back(y);
      }
      for (std::uint64_t i = 0; i < q; ++i) {
        const FieldElem u = FieldElem::from_index(*ctx, i);
        CHECK(solver->solve(u) == fibers[i]);
        CHECK(solver->in_image(u) == !fibers[i].empty());
        if (!fibers[i].empty()) CHECK(fibers[i].size() == solver->fiber_size());
      }
    }
  }
  CHECK_THROWS_AS(solve_additive(FieldElem(f9), FieldElem(f9)), Error);
}
