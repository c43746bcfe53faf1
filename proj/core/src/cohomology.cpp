#include "cy3/cohomology.hpp"

#include <algorithm>
#include <set>

namespace cy3 {

namespace {

// Degree patterns of the three Kunneth summands and their degree-one slots.
constexpr int kSummandSlots[3][2] = {{0, 1}, {0, 2}, {1, 2}};

// Canonical 2x2 integer matrices of [1, s, t, r, st, ts] on the dual basis
// (f1^, f2^); columns are images.
struct H1Tables {
  std::array<std::array<int, 4>, 6> mat;  // row-major (a,b;c,d)
};

std::array<int, 4> mul2(const std::array<int, 4>& x, const std::array<int, 4>& y) {
  return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3],
          x[2] * y[0] + x[3] * y[2], x[2] * y[1] + x[3] * y[3]};
}

const H1Tables& h1_tables() {
  static const H1Tables t = [] {
    H1Tables t;
    const std::array<int, 4> id = {1, 0, 0, 1};
    const std::array<int, 4> ms = {0, -1, -1, 0};
    const std::array<int, 4> mt = {1, 1, 0, -1};
    const std::array<int, 4> mr = {-1, 0, 1, 1};
    t.mat = {id, ms, mt, mr, mul2(ms, mt), mul2(mt, ms)};
    // Well-definedness: the assignment must respect the multiplication table
    // of SL(2,F2); in particular alternative factorizations agree.
    const auto& S = sbar();
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j)
        if (mul2(t.mat[i], t.mat[j]) != t.mat[S.mul[i][j]])
          throw Error("inconsistent word factorization in the H^1 action");
    if (mul2(mul2(ms, mt), ms) != mr)
      throw Error("inconsistent word factorization: r != sts");
    return t;
  }();
  return t;
}

}  // namespace

int rep_index(const RepBasisIndex& b) {
  return b.summand * 4 + (b.i - 1) * 2 + (b.j - 1);
}

RepBasisIndex rep_basis(int idx) {
  RepBasisIndex b;
  b.summand = idx / 4;
  b.i = (idx % 4) / 2 + 1;
  b.j = idx % 2 + 1;
  return b;
}

std::string rep_basis_name(int idx) {
  RepBasisIndex b = rep_basis(idx);
  std::array<std::string, 3> slot = {"1", "1", "1"};
  slot[kSummandSlots[b.summand][0]] = "f" + std::to_string(b.i);
  slot[kSummandSlots[b.summand][1]] = "f" + std::to_string(b.j);
  return slot[0] + "*" + slot[1] + "*" + slot[2];
}

std::array<int, 4> rep_on_h1(std::uint8_t sbar_index) {
  if (sbar_index >= 6) throw Error("SBar index out of range");
  return h1_tables().mat[sbar_index];
}

std::array<std::array<int, kRepDim>, kRepDim> rep_on_h2(L0Element e) {
  const auto& P = perms();
  auto sb3 = l0_sbar(e);
  std::uint8_t perm = l0_perm(e);
  std::array<std::array<int, kRepDim>, kRepDim> m{};

  // Image of each source basis vector: move slot contents by the permutation
  // (no sign), then act slotwise on the degree-one slots.
  for (int src = 0; src < kRepDim; ++src) {
    RepBasisIndex b = rep_basis(src);
    int p = kSummandSlots[b.summand][0];
    int q = kSummandSlots[b.summand][1];
    // slot -> (dual-basis vector or 0 marker)
    std::array<int, 3> content = {0, 0, 0};  // 0 = degree zero, 1/2 = f_i
    content[p] = b.i;
    content[q] = b.j;
    std::array<int, 3> moved;
    const auto& img = P.img[perm];
    for (int k = 0; k < 3; ++k) moved[img[k]] = content[k];
    // target summand
    int tp = -1, tq = -1;
    for (int k = 0; k < 3; ++k)
      if (moved[k] != 0) (tp < 0 ? tp : tq) = k;
    int tsum = -1;
    for (int ssum = 0; ssum < 3; ++ssum)
      if (kSummandSlots[ssum][0] == tp && kSummandSlots[ssum][1] == tq) tsum = ssum;
    if (tsum < 0) throw Error("summand bookkeeping failure");
    // slotwise matrices
    const auto mp = rep_on_h1(sb3[tp]);
    const auto mq = rep_on_h1(sb3[tq]);
    // moved[tp] = f_a in slot tp; its image is column a-1 of mp, etc.
    int a = moved[tp], bb = moved[tq];
    for (int ia = 1; ia <= 2; ++ia)
      for (int jb = 1; jb <= 2; ++jb) {
        int coeff = mp[(ia - 1) * 2 + (a - 1)] * mq[(jb - 1) * 2 + (bb - 1)];
        if (coeff == 0) continue;
        RepBasisIndex tgt;
        tgt.summand = tsum;
        tgt.i = ia;
        tgt.j = jb;
        m[rep_index(tgt)][src] += coeff;
      }
  }
  return m;
}

namespace {

template <class F>
Mat<F> rep_matrix(L0Element e) {
  auto m = rep_on_h2(e);
  Mat<F> out(kRepDim, kRepDim);
  for (int i = 0; i < kRepDim; ++i)
    for (int j = 0; j < kRepDim; ++j) out(i, j) = F(m[i][j]);
  return out;
}

std::vector<L0Element> subgroup_generators(const std::vector<L0Element>& l0) {
  std::set<L0Element> have = {l0_pack({0, 0, 0}, 0)};
  std::vector<L0Element> gens;
  for (auto e : l0) {
    if (have.count(e)) continue;
    gens.push_back(e);
    bool grew = true;
    have.insert(e);
    while (grew) {
      grew = false;
      std::vector<L0Element> cur(have.begin(), have.end());
      for (auto a : cur)
        for (auto b : gens)
          if (have.insert(l0_compose(a, b)).second) grew = true;
    }
    if (have.size() == l0.size()) break;
  }
  return gens;
}

template <class F>
struct SolveResult {
  int dimension = 0;
  std::vector<std::vector<F>> basis;
};

template <class F>
SolveResult<F> invariants_over(const std::vector<L0Element>& l0) {
  auto gens = subgroup_generators(l0);
  if (gens.empty()) gens.push_back(l0_pack({0, 0, 0}, 0));

  Mat<F> stacked((int)gens.size() * kRepDim, kRepDim);
  for (size_t k = 0; k < gens.size(); ++k) {
    Mat<F> r = rep_matrix<F>(gens[k]);
    for (int i = 0; i < kRepDim; ++i)
      for (int j = 0; j < kRepDim; ++j)
        stacked((int)k * kRepDim + i, j) = r(i, j) - (i == j ? F(1) : F(0));
  }
  SolveResult<F> res;
  res.basis = nullspace(stacked);
  res.dimension = (int)res.basis.size();

  // Cross-check with the averaging projector; callers guarantee |L0| is
  // invertible in F.
  {
    Mat<F> sum(kRepDim, kRepDim);
    for (auto e : l0) {
      Mat<F> r = rep_matrix<F>(e);
      for (int i = 0; i < kRepDim; ++i)
        for (int j = 0; j < kRepDim; ++j) sum(i, j) += r(i, j);
    }
    F inv_order = F(1) / F((long long)l0.size());
    for (int i = 0; i < kRepDim; ++i)
      for (int j = 0; j < kRepDim; ++j) sum(i, j) *= inv_order;
    Mat<F> sq = sum * sum;
    if (!(sq == sum)) throw Error("averaging projector is not idempotent");
    if (rank_of(sum) != res.dimension)
      throw Error("projector rank disagrees with the solved fixed space");
  }
  return res;
}

}  // namespace

InvariantSpace invariant_dimension(const std::vector<L0Element>& l0,
                                   FieldKind field) {
  if (l0.empty()) throw Error("empty subgroup");
  InvariantSpace out;
  switch (field) {
    case FieldKind::Rational: {
      auto r = invariants_over<Rat>(l0);
      out.dimension = r.dimension;
      for (const auto& v : r.basis) {
        std::array<Rat, kRepDim> b;
        for (int i = 0; i < kRepDim; ++i) b[i] = v[i];
        out.basis.push_back(b);
      }
      break;
    }
    case FieldKind::F5Field: {
      if (l0.size() % 5 == 0)
        throw Error("field characteristic divides the group order");
      out.dimension = invariants_over<F5>(l0).dimension;
      break;
    }
    case FieldKind::F7Field: {
      if (l0.size() % 7 == 0)
        throw Error("field characteristic divides the group order");
      out.dimension = invariants_over<F7>(l0).dimension;
      break;
    }
  }
  return out;
}

PicardResult picard_rank(const CatalogEntry& e, const L0Descriptor& l0) {
  if (e.expected_h21 != 3)
    throw Error("picard rank requested for case " + e.label.str() +
                " with h21 != 3");
  PicardResult r;
  r.label = e.label;
  auto q = invariant_dimension(l0.elements, FieldKind::Rational);
  r.rank_q = q.dimension;
  r.basis_q = q.basis;
  r.dim_f5 = invariant_dimension(l0.elements, FieldKind::F5Field).dimension;
  r.dim_f7 = invariant_dimension(l0.elements, FieldKind::F7Field).dimension;
  if (r.dim_f5 != r.rank_q || r.dim_f7 != r.rank_q)
    throw Error("invariant dimension varies with the field for case " +
                e.label.str());
  r.conclusion = "Pic = Z^" + std::to_string(r.rank_q) +
                 " x (finite abelian group of order 2^n 3^m)";
  return r;
}

}  // namespace cy3
