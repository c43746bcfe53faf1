#pragma once

#include <array>
#include <bitset>
#include <cstdint>
#include <string>
#include <vector>

#include "cy3/catalog.hpp"
#include "cy3/common.hpp"

namespace cy3 {

// ---------------------------------------------------------------------------
// F2 shift vectors.
//
// A half-period translation of Y = E1 x E2 x E3 is six bits, one (x, tau)
// pair per factor: bit 2i = translation by 1/2 on factor i, bit 2i+1 =
// translation by tau_i/2.

using HalfShift = std::uint8_t;  // 6 bits used

inline std::uint8_t shift_pair(HalfShift s, int factor) {
  return (s >> (2 * factor)) & 3u;
}
inline HalfShift with_pair(HalfShift s, int factor, std::uint8_t pair) {
  return HalfShift((s & ~(3u << (2 * factor))) | ((pair & 3u) << (2 * factor)));
}

// ---------------------------------------------------------------------------
// Elements of the orbifold group G: a twist sign pattern (bit i set = factor i
// gets z -> -z) and a half-period shift.  Valid twists have an even number of
// set bits, so every element is an involution.

struct GroupElement {
  std::uint8_t twist = 0;  // 3 bits, even weight
  HalfShift shift = 0;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
  std::uint16_t key() const { return std::uint16_t(twist << 6 | shift); }
};

// Composition: twists multiply (xor), shifts add over F2.  Signs never touch
// the shifts because half-periods have order 2.
inline GroupElement g_compose(const GroupElement& a, const GroupElement& b) {
  return GroupElement{std::uint8_t(a.twist ^ b.twist),
                      HalfShift(a.shift ^ b.shift)};
}

GroupElement twist_gen_element(const SymbolTriple& t);
GroupElement shift_gen_element(const SymbolTriple& t);

// Canonical rendering in the catalog symbol grammar.
std::string render_element(const GroupElement& g);

struct GGroup {
  std::vector<GroupElement> generators;
  std::vector<GroupElement> elements;  // sorted by key
  int rank = 0;                        // r with |G| = 2^(r+2)
  bool valid_catalog_group = true;     // both twist patterns present etc.
  std::bitset<512> member;

  bool contains(const GroupElement& g) const { return member[g.key()]; }
  // Shifts paired with a given twist pattern.
  std::vector<HalfShift> shifts_for(std::uint8_t twist) const;
};

// Closure of the generated set; validates order is a power of two and at most
// 2^8.  rank = log2(order) - 2 when the four twist patterns are present.
GGroup generate_group(const std::vector<GroupElement>& gens);

GGroup group_from_entry(const CatalogEntry& e);

// ---------------------------------------------------------------------------
// S = SL(2, F2), order 6, acting on the nonzero vectors {1/2, tau/2,
// (1+tau)/2} of one factor's 2-torsion.  Elements are indexed 0..5 in the
// fixed order [1, s, t, r, st, ts].

struct SBarTables {
  std::array<std::array<std::uint8_t, 2>, 6> col;  // col[m] = matrix columns as bit pairs
  std::array<std::array<std::uint8_t, 6>, 6> mul;
  std::array<std::uint8_t, 6> inv;
  std::array<std::array<std::uint8_t, 4>, 6> act;  // act[m][v] on F2^2 (column action)
  std::array<const char*, 6> name;  // "1","s","t","r","st","ts"
  // Canonical integer matrix lifts to SL(2, Z), row-major (a,b,c,d).
  std::array<std::array<long long, 4>, 6> lift;
};
const SBarTables& sbar();

constexpr std::uint8_t kSBarId = 0, kSBarS = 1, kSBarT = 2, kSBarR = 3,
                       kSBarST = 4, kSBarTS = 5;

// Borel subgroup generators: B1 = <t>, B2 = <r>, B3 = <s> (stabilizers of
// 1/2, tau/2, (1+tau)/2 respectively).
std::uint8_t borel_generator(int i);  // i in 1..3

// ---------------------------------------------------------------------------
// S3 permutations of the three factors, indexed 0..5 in the fixed order
// [id, (1 2), (1 3), (2 3), (1 2 3), (1 3 2)] where (1 2 3) maps 1->2->3->1.

struct PermTables {
  std::array<std::array<std::uint8_t, 3>, 6> img;  // img[p][i] = p(i), 0-based
  std::array<std::array<std::uint8_t, 6>, 6> mul;  // (p*q)(i) = p(q(i))
  std::array<std::uint8_t, 6> inv;
  std::array<const char*, 6> name;
};
const PermTables& perms();

// ---------------------------------------------------------------------------
// L_max = (Z/2)^6 x| S^3 x| S3, the ambient class group of order 82944.

struct LmaxElement {
  std::uint8_t eps = 0;                      // 6 bits, pairs as in HalfShift
  std::array<std::uint8_t, 3> sb = {0, 0, 0};  // SBar indices
  std::uint8_t perm = 0;                     // S3 index

  friend bool operator==(const LmaxElement&, const LmaxElement&) = default;
};

constexpr int kLmaxOrder = 82944;  // 2^6 * 6^3 * 6

// Enumeration order is lexicographic in (eps, sbar block, perm).
int lmax_index(const LmaxElement& l);
LmaxElement lmax_from_index(int idx);

LmaxElement lmax_compose(const LmaxElement& a, const LmaxElement& b);
LmaxElement lmax_inverse(const LmaxElement& a);
LmaxElement lmax_identity();

// Conjugation action on G, descended from the ambient group: the twist
// pattern is permuted; each shift pair is permuted, matrix-acted, and picks
// up the eps pair as a half-period exactly on twisted factors.
GroupElement conjugate_by_lmax(const LmaxElement& l, const GroupElement& g);

// ---------------------------------------------------------------------------
// Exact ambient elements (quarter translations, integer SL2(Z) matrices, a
// factor permutation).  Used as the independence oracle for the descended
// conjugation: composition and inversion are carried out on honest affine
// data, with translations in quarter units mod 4.

struct Mat2 {
  // row-major (a, b; c, d)
  std::array<long long, 4> m = {1, 0, 0, 1};
  friend Mat2 operator*(const Mat2& x, const Mat2& y) {
    return Mat2{{x.m[0] * y.m[0] + x.m[1] * y.m[2],
                 x.m[0] * y.m[1] + x.m[1] * y.m[3],
                 x.m[2] * y.m[0] + x.m[3] * y.m[2],
                 x.m[2] * y.m[1] + x.m[3] * y.m[3]}};
  }
  Mat2 inv_unimodular() const {  // valid for det = 1
    return Mat2{{m[3], -m[1], -m[2], m[0]}};
  }
  long long det() const { return m[0] * m[3] - m[1] * m[2]; }
  friend bool operator==(const Mat2&, const Mat2&) = default;
};

struct HmaxElement {
  std::array<std::uint8_t, 6> eps = {0, 0, 0, 0, 0, 0};  // quarter units mod 4
  std::array<Mat2, 3> gamma;
  std::uint8_t perm = 0;

  friend bool operator==(const HmaxElement&, const HmaxElement&) = default;
};

HmaxElement hmax_compose(const HmaxElement& a, const HmaxElement& b);
HmaxElement hmax_inverse(const HmaxElement& a);

// Canonical lift (eps bit -> 1/4, SBar -> fixed SL2(Z) matrices).
HmaxElement hmax_lift(const LmaxElement& l);
LmaxElement hmax_project(const HmaxElement& h);

// G embeds via half-period translations and gamma = +-I.
HmaxElement hmax_embed(const GroupElement& g);
// Inverse of the embedding; throws if h is not of that shape.
GroupElement hmax_to_group_element(const HmaxElement& h);

}  // namespace cy3
