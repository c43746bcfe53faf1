#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cy3/group.hpp"

namespace cy3 {

// L = image in L_max of the normalizer of G, stored as sorted enumeration
// indices plus a membership bitmap.
struct LGroup {
  std::vector<std::uint32_t> indices;  // ascending
  std::vector<std::uint64_t> bits;     // kLmaxOrder bits

  bool contains_index(int idx) const {
    return (bits[(size_t)idx >> 6] >> (idx & 63)) & 1u;
  }
  bool contains(const LmaxElement& l) const {
    return contains_index(lmax_index(l));
  }
  size_t order() const { return indices.size(); }
};

// {l in L_max : conjugation by l maps every generator of G into G}.
// Verifies closure under composition and inversion (exhaustively for small L,
// by deterministic probing for degenerate large L).
LGroup compute_L(const GGroup& g);

// One element of S^3 x| S3 packed as sbar-block-index * 6 + perm (0..1295).
using L0Element = std::uint16_t;

L0Element l0_pack(const std::array<std::uint8_t, 3>& sb, std::uint8_t perm);
std::array<std::uint8_t, 3> l0_sbar(L0Element e);
std::uint8_t l0_perm(L0Element e);
L0Element l0_compose(L0Element a, L0Element b);
std::string l0_render(L0Element e);  // e.g. "(t,s,r)|(1 2 3)"

enum class L0Tag {
  Full,        // all of S^3 x| S3
  BorelCube,   // B_i^3 x| S3
  BorelTilde,  // {b in B_i^3 : b1 b2 b3 = 1} x| S3
  Diagonal,    // diagonal S x| S3
  MixedPair,   // slotwise Borel/trivial product x| <transposition>
  Case41,      // the non-split extension of S3 by <(t,s,r),(s,r,t),(r,t,s)>
  Raw,
};

struct L0Descriptor {
  std::vector<L0Element> elements;  // sorted
  L0Tag tag = L0Tag::Raw;
  std::string tag_text;                 // human-readable, e.g. "B2^3 x| S3"
  int borel_index = 0;                  // for BorelCube / BorelTilde
  std::vector<L0Element> generators;    // small generating set
  std::vector<std::uint8_t> translation_kernel;  // eps values with pure class in L

  size_t order() const { return elements.size(); }
};

// Projects out the translation part and matches the result against the named
// reference subgroups; unmatched groups are reported raw.
L0Descriptor describe_L0(const LGroup& l);

// Reference subgroup constructions (by set).
std::vector<L0Element> l0_full();
std::vector<L0Element> l0_borel_cube(int i);
std::vector<L0Element> l0_borel_tilde(int i);
std::vector<L0Element> l0_diagonal();
// Slot subgroup codes: 0 = trivial, 1..3 = B_i, 4 = all of S.
std::vector<L0Element> l0_slot_product(std::array<int, 3> slots,
                                       std::uint8_t transposition);
std::vector<L0Element> l0_case41_N();  // <(t,s,r),(s,r,t),(r,t,s)> x {id}

// Structural checks for case (4-1): L0 meets S^3 in exactly N, every
// projection N -> S is a bijection, N is not the diagonal, L0 surjects onto
// S3, and the extension does not split.
struct Case41Checks {
  bool n_matches = false;
  bool projections_bijective = false;
  bool not_diagonal = false;
  bool surjects_onto_s3 = false;
  bool non_split = false;
  bool all() const {
    return n_matches && projections_bijective && not_diagonal &&
           surjects_onto_s3 && non_split;
  }
};
Case41Checks check_case41(const L0Descriptor& d);

// Exact-arithmetic cross-check of the descended conjugation: random ambient
// classes (plus supplied must-include elements) are lifted canonically,
// conjugated as affine maps, and compared with the descended test.
struct OracleReport {
  int samples = 0;
  int agreements = 0;
  bool ok() const { return samples == agreements; }
};
OracleReport brute_force_normalizer_check(
    const GGroup& g, int sample_size, std::uint64_t seed = 2026,
    const std::vector<LmaxElement>& must_include = {});

// JSON-fragment data for one case.
struct NormalizerResult {
  Label label;
  size_t l_order = 0;
  L0Descriptor l0;
};
NormalizerResult run_normalizer(const CatalogEntry& e);

}  // namespace cy3
