#pragma once

// L-polynomials of B_{k,c} over F_p, reconstructed from point counts.

#include <cstdint>
#include <vector>

#include "asmorph/arith.hpp"
#include "asmorph/config.hpp"
#include "asmorph/curve.hpp"

namespace asmorph {

/// Numerator of the zeta function: coeffs[i] is the coefficient of t^i,
/// i = 0..2g.
struct LPolynomial {
  BigInt q;
  unsigned g = 0;
  std::vector<BigInt> coeffs;

  friend bool operator==(const LPolynomial&, const LPolynomial&) = default;
};

/// N_1..N_g of a curve over F_{p^1}..F_{p^g}.
struct CountSeries {
  CurveBk curve;
  std::vector<BigInt> counts;
};

CountSeries count_series(const CurveBk& curve, unsigned upto, const Config& cfg = {});

/// |N - (q^n + 1)| <= 2 g q^(n/2), evaluated exactly.
bool weil_bound_holds(const BigInt& count, const BigInt& q, unsigned n, const BigInt& genus);

/// Newton recursion on s_r = 1 + q^r - N_r, then the functional equation.
/// Errors: InternalInconsistency if a division is inexact.
LPolynomial lpolynomial_from_counts(const BigInt& q, unsigned g, const std::vector<BigInt>& counts);

/// Errors: GuardExceeded (needs F_{p^g}), InternalInconsistency on failed validation.
LPolynomial lpolynomial(const CurveBk& curve, const Config& cfg = {});

bool satisfies_functional_equation(const LPolynomial& L);

/// max | |alpha| - sqrt(q) | over the reciprocal roots alpha. Computed on the
/// squarefree part so that repeated roots do not degrade the estimate.
double max_root_modulus_deviation(const LPolynomial& L);

/// Throws InternalInconsistency unless L(0) = 1, the functional equation holds
/// exactly and every reciprocal root has modulus sqrt(q) within `tol`.
void validate(const LPolynomial& L, double tol = 1e-6);

/// N_1..N_upto as implied by L (inverse Newton recursion).
std::vector<BigInt> predicted_counts(const LPolynomial& L, unsigned upto);

/// Exact division in Z[t]. Errors: BaseFieldMismatch.
bool divides(const LPolynomial& small, const LPolynomial& big);

enum class Obstruction { Obstructed, NoObstruction };

/// Obstructed certifies that no morphism B_k -> B_l exists (Kleiman-Serre);
/// NoObstruction decides nothing.
Obstruction kleiman_serre_obstruction(std::uint64_t p, unsigned k, unsigned l, std::int64_t c, const Config& cfg = {});

}  // namespace asmorph
