#pragma once

#include <array>
#include <string>
#include <vector>

#include "cy3/fields.hpp"
#include "cy3/linalg.hpp"
#include "cy3/normalizer.hpp"

namespace cy3 {

// Basis index of the 12-dimensional space H^2(F2^3, K): a Kunneth summand
// (degree pattern 110 / 101 / 011) and a pair (i, j) in {1,2}^2 indexing
// f1^ (x) f2^ duals in the two degree-one slots.
struct RepBasisIndex {
  int summand = 0;  // 0 = (1,1,0), 1 = (1,0,1), 2 = (0,1,1)
  int i = 1;
  int j = 1;
};

constexpr int kRepDim = 12;

int rep_index(const RepBasisIndex& b);
RepBasisIndex rep_basis(int idx);
std::string rep_basis_name(int idx);  // e.g. "f1*f2*1"

// The 2x2 integer action on H^1(F2, K) in the dual basis (f1^, f2^):
//   s -> [[0,-1],[-1,0]], t -> [[1,1],[0,-1]], r -> [[-1,0],[1,1]]
// (columns are images of basis vectors).  Well-definedness over SBar words is
// asserted at table construction.
std::array<int, 4> rep_on_h1(std::uint8_t sbar_index);

// 12x12 integer matrix of one (SBar-triple, permutation): blockwise tensor
// action on the degree-one slots, unsigned permutation of summands and slots.
std::array<std::array<int, kRepDim>, kRepDim> rep_on_h2(L0Element e);

struct InvariantSpace {
  int dimension = 0;
  // Basis vectors over Q in RREF-normalized form (only for the rational run).
  std::vector<std::array<Rat, kRepDim>> basis;
};

// Dimension (and basis over Q) of the joint fixed space of a subgroup of
// S^3 x| S3 acting on H^2(F2^3, K).  Solves ker(rho(g) - 1) over the
// subgroup's generators by exact elimination and cross-checks against the
// averaging projector (1/|L0|) sum rho(g) whenever the field allows it.
// Rejects fields whose characteristic divides the group order.
InvariantSpace invariant_dimension(const std::vector<L0Element>& l0,
                                   FieldKind field);

struct PicardResult {
  Label label;
  int rank_q = 0;
  int dim_f5 = 0;
  int dim_f7 = 0;
  std::vector<std::array<Rat, kRepDim>> basis_q;
  // Pic = Z^rank x (finite abelian 2,3-group); the torsion part is not
  // computed here.
  std::string conclusion;
};

// Picard rank of the moduli stack for an h21 = 3 case, computed from the
// normalizer's L0 (not from any stored table).  Asserts the dimensions over
// F5 and F7 agree with the rational rank.
PicardResult picard_rank(const CatalogEntry& e, const L0Descriptor& l0);

}  // namespace cy3
