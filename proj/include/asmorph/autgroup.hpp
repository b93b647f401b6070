#pragma once

// The automorphism group of B_{k,+1} fixing infinity: the cyclic part
// generated by alpha(x, y) = (g x, g^(p^k+1) y) with g of order
// N = (p^k+1)(p-1), and the p-part of maps beta_{d,e}. Elements are kept in
// the normal form beta_{d,e} o alpha^s and checked by their action on points.
//
// For k = 1 the true automorphism group is larger; only this subgroup is
// modelled.

#include <cstdint>
#include <utility>
#include <vector>

#include "asmorph/arith.hpp"
#include "asmorph/config.hpp"
#include "asmorph/curve.hpp"
#include "asmorph/ffield.hpp"

namespace asmorph {

/// Smallest n such that F_{p^n} contains an element of order N, every d with
/// d^(p^(2k)) + (-1)^k d = 0 and, for each such d, all p solutions of
/// e^p + e = d^(p^k+1). Errors: GuardExceeded.
unsigned field_of_definition_aut(std::uint64_t p, unsigned k, const Config& cfg = {});

/// Smallest multiple of the field of definition with p^n > 2 (p^k+1) p^k, so
/// that agreement on all rational points pins down the maps involved.
unsigned verification_degree(std::uint64_t p, unsigned k, const Config& cfg = {});

struct AutContext {
  std::uint64_t p = 0;
  unsigned k = 0;
  const FieldCtx* ctx = nullptr;
  FieldElem gamma;               // generator of the cyclic part's scalars
  std::uint64_t N = 0;           // (p^k+1)(p-1)
  std::vector<CurvePoint> points;  // rational points of B_{k,+1} over ctx, sorted

  CurveBk curve() const { return CurveBk{p, k, 1}; }
};

/// Errors: InvalidParameters when F_{p^n} does not host the group, GuardExceeded.
AutContext make_aut_context(std::uint64_t p, unsigned k, unsigned n, const Config& cfg = {});
/// Uses verification_degree(p, k).
AutContext make_aut_context(std::uint64_t p, unsigned k, const Config& cfg = {});

struct Automorphism {
  FieldElem d;
  FieldElem e;
  std::uint64_t s = 0;  // exponent of alpha, mod N

  friend bool operator==(const Automorphism&, const Automorphism&) = default;
};

Automorphism identity(const AutContext& actx);

/// d^(p^(2k)) + (-1)^k d == 0 and e^p + e == d^(p^k+1).
bool valid_pair(const AutContext& actx, const FieldElem& d, const FieldElem& e);

/// sum_{i<k} (-1)^i d^(p^(k+i)) x^(p^i)
FieldElem linearized_part(const AutContext& actx, const FieldElem& d, const FieldElem& x);

/// Errors: CtxMismatch, NotOnSource.
CurvePoint apply_alpha(const AutContext& actx, std::uint64_t s, const CurvePoint& pt);
/// Errors: InvalidParameters for an invalid (d, e), CtxMismatch, NotOnSource.
CurvePoint apply_beta(const AutContext& actx, const FieldElem& d, const FieldElem& e, const CurvePoint& pt);
/// beta_{d,e}(alpha^s(pt))
CurvePoint apply(const AutContext& actx, const Automorphism& g, const CurvePoint& pt);

/// All valid (d, e), ordered by index of d then e. Throws InternalInconsistency
/// unless there are exactly p^(2k+1). Errors: GuardExceeded.
std::vector<std::pair<FieldElem, FieldElem>> enumerate_p_part(const AutContext& actx, const Config& cfg = {});

/// beta_{0,e} with e^p + e = 0: the p Artin-Schreier translations.
std::vector<Automorphism> translations_subgroup(const AutContext& actx);

/// Normal form of a1 o a2 (a2 acts first), recovered from its action and
/// checked on every point of actx. Errors: NormalFormNotFound.
Automorphism compose(const AutContext& actx, const Automorphism& a1, const Automorphism& a2);

/// Whether g permutes actx.points and fixes infinity.
bool preserves_points(const AutContext& actx, const Automorphism& g);

struct GroupCheck {
  std::uint64_t p_part = 0;
  BigInt group_order;         // p_part * N
  std::uint64_t checked = 0;  // elements whose action was verified
  std::uint64_t failures = 0;
};

/// Enumerates the p-part and verifies every stride-th element of the group in
/// (d, e, s) order; stride 1 means exhaustive.
GroupCheck verify_group(const AutContext& actx, std::uint64_t stride = 1, const Config& cfg = {});

struct SubgroupParams {
  BigInt N;
  BigInt s;
  BigInt m;         // |<alpha^s>| = N / s
  std::uint64_t t;  // order of g^(s(p^k+1)) = (p-1) / gcd(s, p-1)
  unsigned r = 0;   // |U| = p^r
};

/// Errors: InvalidS unless s | N, InvalidR unless r <= 2k.
SubgroupParams subgroup_params(std::uint64_t p, unsigned k, const BigInt& s, unsigned r);

}  // namespace asmorph
