#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "cy3/group.hpp"

namespace cy3 {

// A 4-torsion coordinate on one elliptic factor, packed as x + 4*tau with
// x, tau in quarter units mod 4 (value k means k/4, resp. k tau/4).
using QuarterPoint = std::uint8_t;  // 0..15

inline QuarterPoint quarter_point(int x, int tau) {
  return QuarterPoint(((x & 3) | ((tau & 3) << 2)));
}
inline int quarter_x(QuarterPoint q) { return q & 3; }
inline int quarter_tau(QuarterPoint q) { return q >> 2; }

// z -> sign*z + (shift pair as half period) on one factor, exactly.
QuarterPoint quarter_apply(QuarterPoint q, int sign, std::uint8_t shift_pair);

// One of the sixteen elliptic-curve components of the fixed locus of a twist
// element: the untwisted factor is free, the two twisted factors sit at
// 4-torsion points solving 2z = shift.
struct FixedComponent {
  GroupElement element;
  int free_factor = 0;                      // 0..2
  std::array<QuarterPoint, 2> coords = {0, 0};  // twisted factors, ascending index

  friend bool operator==(const FixedComponent&, const FixedComponent&) = default;
};

enum class FixedLocusKind { AllOfY, Empty, Components };

struct FixedLocus {
  FixedLocusKind kind = FixedLocusKind::Empty;
  std::vector<FixedComponent> components;
};

FixedLocus fixed_locus(const GroupElement& g);

struct CurveClass {
  int direction = 0;  // free factor of the orbit's components
  std::vector<FixedComponent> orbit;
  std::vector<GroupElement> stabilizer;  // setwise
  int genus = 0;
};

// All G-orbits of fixed curves, with setwise stabilizers and genus: genus 0
// iff some stabilizer element reflects the free coordinate, genus 1 iff the
// stabilizer acts on it by translations only.
std::vector<CurveClass> curve_classes(const GGroup& g);

struct HodgeNumbers {
  int h11 = 0;
  int h21 = 0;
  friend bool operator==(const HodgeNumbers&, const HodgeNumbers&) = default;
};

// h11 = bulk + #curve classes, h21 = bulk + sum of genera; the bulk terms are
// the G-invariant (1,1)- and (2,1)-monomial counts and are asserted to be 3.
HodgeNumbers hodge_numbers(const GGroup& g);

struct TridentCount {
  int tridents = 0;
  std::string resolution_choices;  // 4^tridents as a decimal string
};

// G-orbits of points whose stabilizer covers all three twist patterns; each
// is a meeting point of three curve branches.  The count of local resolution
// choices is an upper bound on global crepant resolutions.
TridentCount trident_and_resolution_count(const GGroup& g);

std::string pow4_decimal(int exponent);

// Fundamental group of a crepant resolution, by the flat-quotient recipe:
// quotient the deck group by the normal closure of elements with fixed
// points, detecting the translation lattice of that closure exactly.
Pi1 classify_pi1(const GGroup& g);

struct GeometryResult {
  Label label;
  bool free_action = false;
  std::vector<CurveClass> classes;
  HodgeNumbers hodge;
  TridentCount tridents;
  Pi1 pi1 = Pi1::Zero;
  bool matches_catalog = false;
};

GeometryResult run_geometry(const CatalogEntry& e);

}  // namespace cy3
