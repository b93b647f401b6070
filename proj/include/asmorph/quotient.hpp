#pragma once

// Genus of B_k / G for G = U x| C with |U| = p^r, |C| = m, and the order t
// of the scalar by which a generator of C multiplies y.

#include <cstdint>
#include <vector>

#include "asmorph/arith.hpp"
#include "asmorph/autgroup.hpp"

namespace asmorph {

struct GroupShape {
  BigInt m = 1;
  std::uint64_t t = 1;
  unsigned r = 0;
};

GroupShape shape_of(const SubgroupParams& params);

struct DifferentComponents {
  BigInt delta1;  // contribution of the affine short orbits
  BigInt dPk;     // contribution of the point at infinity
};

/// Errors: InvalidParameters unless t | p-1 and t | m.
DifferentComponents different_components(std::uint64_t p, unsigned k, const GroupShape& g);

struct QuotientGenus {
  Rational value;
  bool integral = false;  // a nonnegative integer
};

QuotientGenus quotient_genus(std::uint64_t p, unsigned k, const GroupShape& g);

/// 2 g(B_k) - 2 == |G| (2 g_Q - 2) + delta1 + dPk, exactly.
bool rh_consistency(std::uint64_t p, unsigned k, const GroupShape& g);
/// Same identity with caller-supplied different components.
bool rh_consistency(std::uint64_t p, unsigned k, const GroupShape& g, const DifferentComponents& diff);

struct QuotientGenusReport {
  GroupShape shape;
  DifferentComponents diff;
  BigInt group_order;
  QuotientGenus genus;
  bool rh_consistent = false;
};

QuotientGenusReport quotient_report(std::uint64_t p, unsigned k, const GroupShape& g);

struct OrbitReport {
  std::uint64_t s = 0;
  std::uint64_t m = 0;
  std::uint64_t t = 0;
  std::uint64_t axis_points = 0;             // |{(0, y)}|
  bool origin_fixed = false;
  std::vector<std::uint64_t> axis_orbits;    // sizes of orbits on the axis minus (0,0)
  std::uint64_t off_axis_points = 0;
  std::uint64_t off_axis_short = 0;          // orbits shorter than m off the axis
  std::uint64_t translates_checked = 0;
  std::uint64_t translates_in_axis = 0;      // u(P) in the axis set for u != id
};

/// Orbits of <alpha^s> on the rational points of actx, plus images of the
/// axis under sampled beta_{d,e} with d != 0.
/// Errors: InvalidS, GuardExceeded, StructureMismatch when the observed
/// orbits differ from the predicted ones.
OrbitReport verify_orbit_structure(const AutContext& actx, std::uint64_t s, std::uint64_t translate_stride = 1,
                                   const Config& cfg = {});

}  // namespace asmorph
