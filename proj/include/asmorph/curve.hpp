#pragma once

// The curves B_{k,c} : y^p + c*y = x^(p^k+1) and their rational points.

#include <cstdint>
#include <variant>
#include <vector>

#include "asmorph/arith.hpp"
#include "asmorph/config.hpp"
#include "asmorph/ffield.hpp"

namespace asmorph {

/// B_{k,c} with c a nonzero residue mod p (normalised to [1, p-1]).
struct CurveBk {
  std::uint64_t p = 3;
  unsigned k = 1;
  std::uint64_t c = 1;

  /// p^k + 1
  BigInt exponent() const { return pk1(p, k); }
  BigInt genus() const;
  /// +1 or -1 when c is one of those residues, 0 otherwise.
  int sign() const noexcept;

  friend bool operator==(const CurveBk&, const CurveBk&) = default;
};

/// Validates p (odd prime), k >= 1 and c != 0 mod p.
CurveBk make_curve(std::uint64_t p, unsigned k, std::int64_t c);

/// p^k (p-1) / 2
BigInt genus(std::uint64_t p, unsigned k);

struct AffinePoint {
  FieldElem x;
  FieldElem y;
  auto operator<=>(const AffinePoint&) const = default;
};

struct PointAtInfinity {
  auto operator<=>(const PointAtInfinity&) const = default;
};

/// Affine points sort before the point at infinity.
using CurvePoint = std::variant<AffinePoint, PointAtInfinity>;

inline bool is_infinity(const CurvePoint& pt) { return std::holds_alternative<PointAtInfinity>(pt); }

/// Errors: CtxMismatch when the coordinates do not live in ctx.
bool is_on_curve(const CurveBk& curve, const CurvePoint& pt, const FieldCtx& ctx);

/// Same test for an arbitrary nonzero c in the coordinates' field.
bool satisfies_equation(const FieldElem& c, std::uint64_t p, unsigned k, const FieldElem& x, const FieldElem& y);

/// #B(F_{p^n}) = 1 + sum_x |{y : y^p + c y = x^(p^k+1)}|. Errors: GuardExceeded.
BigInt count_points(const CurveBk& curve, unsigned n, const Config& cfg = {});
/// Same, for any nonzero c of a given field.
BigInt count_points(const FieldElem& c, unsigned k, const Config& cfg = {});

/// All rational points, affine ones ordered by (x, y) index, infinity last.
std::vector<CurvePoint> enumerate_points(const CurveBk& curve, const FieldCtx& ctx, const Config& cfg = {});

/// Change of variables y = aY, x = bX taking B_{k,-1} to B_{k,+1}.
struct IsoSpec {
  std::uint64_t p = 0;
  unsigned k = 0;
  const FieldCtx* ctx = nullptr;
  FieldElem a;  // a^(p-1) = -1
  FieldElem b;  // b^(p^k+1) = a^p
};

/// Smallest extension hosting (a, b); first a and b in index order there.
IsoSpec sign_flip_iso(std::uint64_t p, unsigned k, const Config& cfg = {});
/// Throws InternalInconsistency when the defining relations fail.
void check_iso(const IsoSpec& iso);

/// (x, y) -> (x/b, y/a): B_{k,-1} -> B_{k,+1}.
CurvePoint apply_sign_flip(const IsoSpec& iso, const CurvePoint& pt);
/// (X, Y) -> (bX, aY): B_{k,+1} -> B_{k,-1}.
CurvePoint apply_sign_flip_inverse(const IsoSpec& iso, const CurvePoint& pt);

}  // namespace asmorph
