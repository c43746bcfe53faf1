#include "cy3/group.hpp"

#include <algorithm>
#include <bit>

namespace cy3 {

namespace {

std::uint8_t mat2_bits(std::uint8_t a, std::uint8_t b, std::uint8_t c,
                       std::uint8_t d) {
  // pack an F2 matrix [[a,b],[c,d]] into 4 bits
  return std::uint8_t(a | b << 1 | c << 2 | d << 3);
}

std::uint8_t mat2_mul_bits(std::uint8_t x, std::uint8_t y) {
  std::uint8_t xa = x & 1, xb = (x >> 1) & 1, xc = (x >> 2) & 1, xd = (x >> 3) & 1;
  std::uint8_t ya = y & 1, yb = (y >> 1) & 1, yc = (y >> 2) & 1, yd = (y >> 3) & 1;
  return mat2_bits((xa & ya) ^ (xb & yc), (xa & yb) ^ (xb & yd),
                   (xc & ya) ^ (xd & yc), (xc & yb) ^ (xd & yd));
}

SBarTables build_sbar() {
  SBarTables t;
  // Fixed order [1, s, t, r, st, ts]; F2 matrices.
  const std::uint8_t mats[6] = {
      mat2_bits(1, 0, 0, 1),  // 1
      mat2_bits(0, 1, 1, 0),  // s
      mat2_bits(1, 1, 0, 1),  // t
      mat2_bits(1, 0, 1, 1),  // r
      mat2_bits(0, 1, 1, 1),  // st
      mat2_bits(1, 1, 1, 0),  // ts
  };
  t.name = {"1", "s", "t", "r", "st", "ts"};
  t.lift = {{{1, 0, 0, 1},
             {0, 1, -1, 0},
             {1, 1, 0, 1},
             {1, 0, 1, 1},
             {0, 1, -1, -1},
             {-1, 1, -1, 0}}};
  auto index_of = [&](std::uint8_t bits) {
    for (int i = 0; i < 6; ++i)
      if (mats[i] == bits) return std::uint8_t(i);
    throw Error("matrix not in SL(2,F2) table");
  };
  for (int i = 0; i < 6; ++i) {
    t.col[i] = {std::uint8_t((mats[i] & 1) | ((mats[i] >> 2) & 1) << 1),
                std::uint8_t(((mats[i] >> 1) & 1) | ((mats[i] >> 3) & 1) << 1)};
    for (int j = 0; j < 6; ++j) t.mul[i][j] = index_of(mat2_mul_bits(mats[i], mats[j]));
    for (std::uint8_t v = 0; v < 4; ++v) {
      // column action on (e0, e1): e0*(col 0) + e1*(col 1)
      std::uint8_t img = 0;
      if (v & 1) img ^= t.col[i][0];
      if (v & 2) img ^= t.col[i][1];
      t.act[i][v] = img;
    }
  }
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j)
      if (t.mul[i][j] == 0) t.inv[i] = std::uint8_t(j);
  return t;
}

PermTables build_perms() {
  PermTables t;
  t.img = {{{0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}}};
  t.name = {"id", "(1 2)", "(1 3)", "(2 3)", "(1 2 3)", "(1 3 2)"};
  auto index_of = [&](const std::array<std::uint8_t, 3>& a) {
    for (int i = 0; i < 6; ++i)
      if (t.img[i] == a) return std::uint8_t(i);
    throw Error("not a permutation");
  };
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      std::array<std::uint8_t, 3> comp;
      for (int k = 0; k < 3; ++k) comp[k] = t.img[i][t.img[j][k]];
      t.mul[i][j] = index_of(comp);
    }
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j)
      if (t.mul[i][j] == 0) t.inv[i] = std::uint8_t(j);
  return t;
}

std::uint8_t base_pair(const FactorSymbol& s) { return s.base; }

}  // namespace

const SBarTables& sbar() {
  static const SBarTables t = build_sbar();
  return t;
}

const PermTables& perms() {
  static const PermTables t = build_perms();
  return t;
}

std::uint8_t borel_generator(int i) {
  // B1 = <t> fixes 1/2, B2 = <r> fixes tau/2, B3 = <s> fixes (1+tau)/2.
  switch (i) {
    case 1: return kSBarT;
    case 2: return kSBarR;
    case 3: return kSBarS;
  }
  throw Error("Borel index out of range");
}

GroupElement twist_gen_element(const SymbolTriple& t) {
  GroupElement g;
  for (int i = 0; i < 3; ++i) {
    if (t[i].sign < 0) g.twist |= std::uint8_t(1u << i);
    g.shift = with_pair(g.shift, i, base_pair(t[i]));
  }
  return g;
}

GroupElement shift_gen_element(const SymbolTriple& t) {
  GroupElement g;
  for (int i = 0; i < 3; ++i) g.shift = with_pair(g.shift, i, base_pair(t[i]));
  return g;
}

std::string render_element(const GroupElement& g) {
  static const char* bases[4] = {"0", "1", "t", "1t"};
  std::string out = "(";
  for (int i = 0; i < 3; ++i) {
    if (i) out += ",";
    out += bases[shift_pair(g.shift, i)];
    if (g.twist != 0) out += (g.twist >> i) & 1 ? "-" : "+";
  }
  out += ")";
  return out;
}

std::vector<HalfShift> GGroup::shifts_for(std::uint8_t twist) const {
  std::vector<HalfShift> out;
  for (const auto& g : elements)
    if (g.twist == twist) out.push_back(g.shift);
  return out;
}

GGroup generate_group(const std::vector<GroupElement>& gens) {
  if (gens.empty()) throw Error("no generators given");
  GGroup g;
  g.generators = gens;
  std::vector<GroupElement> frontier = {GroupElement{}};
  g.member[GroupElement{}.key()] = true;
  g.elements.push_back(GroupElement{});
  while (!frontier.empty()) {
    std::vector<GroupElement> next;
    for (const auto& e : frontier)
      for (const auto& h : gens) {
        GroupElement p = g_compose(e, h);
        if (!g.member[p.key()]) {
          g.member[p.key()] = true;
          g.elements.push_back(p);
          next.push_back(p);
          if (g.elements.size() > 256)
            throw Error("group closure exceeds 2^8 elements; corrupted data");
        }
      }
    frontier = std::move(next);
  }
  std::sort(g.elements.begin(), g.elements.end());

  size_t order = g.elements.size();
  if ((order & (order - 1)) != 0)
    throw Error("generated order is not a power of two");
  int log2 = std::countr_zero(order);

  std::vector<std::uint8_t> patterns;
  for (const auto& e : g.elements)
    if (std::find(patterns.begin(), patterns.end(), e.twist) == patterns.end())
      patterns.push_back(e.twist);
  size_t shift_only = g.shifts_for(0).size();

  g.valid_catalog_group = (patterns.size() == 4) && (log2 >= 2);
  g.rank = g.valid_catalog_group ? log2 - 2 : 0;
  if (g.valid_catalog_group && shift_only != (size_t(1) << g.rank))
    throw Error("shift subgroup order mismatch");
  return g;
}

GGroup group_from_entry(const CatalogEntry& e) {
  std::vector<GroupElement> gens;
  gens.push_back(twist_gen_element(e.twist_gens[0]));
  gens.push_back(twist_gen_element(e.twist_gens[1]));
  for (const auto& s : e.shift_gens) gens.push_back(shift_gen_element(s));
  GGroup g = generate_group(gens);
  if (!g.valid_catalog_group || g.rank != e.label.r)
    throw Error("case " + e.label.str() + ": generated group is not (Z/2)^" +
                std::to_string(e.label.r + 2));
  return g;
}

// ---------------------------------------------------------------------------
// L_max

int lmax_index(const LmaxElement& l) {
  int sblock = (l.sb[0] * 6 + l.sb[1]) * 6 + l.sb[2];
  return (l.eps * 216 + sblock) * 6 + l.perm;
}

LmaxElement lmax_from_index(int idx) {
  LmaxElement l;
  l.perm = std::uint8_t(idx % 6);
  idx /= 6;
  int sblock = idx % 216;
  l.eps = std::uint8_t(idx / 216);
  l.sb[2] = std::uint8_t(sblock % 6);
  l.sb[1] = std::uint8_t((sblock / 6) % 6);
  l.sb[0] = std::uint8_t(sblock / 36);
  return l;
}

LmaxElement lmax_identity() { return LmaxElement{}; }

LmaxElement lmax_compose(const LmaxElement& a, const LmaxElement& b) {
  const auto& S = sbar();
  const auto& P = perms();
  LmaxElement c;
  c.perm = P.mul[a.perm][b.perm];
  std::uint8_t ainv = P.inv[a.perm];
  for (int i = 0; i < 3; ++i) {
    int src = P.img[ainv][i];
    c.sb[i] = S.mul[a.sb[i]][b.sb[src]];
    std::uint8_t pair = S.act[a.sb[i]][shift_pair(b.eps, src)];
    c.eps = with_pair(c.eps, i, std::uint8_t(shift_pair(a.eps, i) ^ pair));
  }
  return c;
}

LmaxElement lmax_inverse(const LmaxElement& a) {
  const auto& S = sbar();
  const auto& P = perms();
  LmaxElement r;
  r.perm = P.inv[a.perm];
  for (int i = 0; i < 3; ++i) {
    int src = P.img[a.perm][i];
    r.sb[i] = S.inv[a.sb[src]];
    r.eps = with_pair(r.eps, i, S.act[r.sb[i]][shift_pair(a.eps, src)]);
  }
  return r;
}

GroupElement conjugate_by_lmax(const LmaxElement& l, const GroupElement& g) {
  const auto& S = sbar();
  const auto& P = perms();
  GroupElement out;
  std::uint8_t linv = P.inv[l.perm];
  for (int i = 0; i < 3; ++i) {
    int src = P.img[linv][i];
    bool twisted = (g.twist >> src) & 1;
    if (twisted) out.twist |= std::uint8_t(1u << i);
    std::uint8_t pair = S.act[l.sb[i]][shift_pair(g.shift, src)];
    if (twisted) pair ^= shift_pair(l.eps, i);
    out.shift = with_pair(out.shift, i, pair);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Exact ambient oracle.

namespace {

// Translation conjugation under gamma: eps' = (a e0 - b e1, -c e0 + d e1),
// in quarter units mod 4.
std::array<long long, 2> gamma_twist_action(const Mat2& m, long long e0,
                                            long long e1) {
  return {m.m[0] * e0 - m.m[1] * e1, -m.m[2] * e0 + m.m[3] * e1};
}

std::uint8_t mod4(long long x) { return std::uint8_t(((x % 4) + 4) % 4); }

}  // namespace

HmaxElement hmax_compose(const HmaxElement& a, const HmaxElement& b) {
  const auto& P = perms();
  HmaxElement c;
  c.perm = P.mul[a.perm][b.perm];
  std::uint8_t ainv = P.inv[a.perm];
  for (int i = 0; i < 3; ++i) {
    int src = P.img[ainv][i];
    c.gamma[i] = a.gamma[i] * b.gamma[src];
    auto tw = gamma_twist_action(a.gamma[i], b.eps[2 * src], b.eps[2 * src + 1]);
    c.eps[2 * i] = mod4(a.eps[2 * i] + tw[0]);
    c.eps[2 * i + 1] = mod4(a.eps[2 * i + 1] + tw[1]);
  }
  return c;
}

HmaxElement hmax_inverse(const HmaxElement& a) {
  const auto& P = perms();
  HmaxElement r;
  r.perm = P.inv[a.perm];
  for (int i = 0; i < 3; ++i) {
    int src = P.img[a.perm][i];
    r.gamma[i] = a.gamma[src].inv_unimodular();
    auto tw = gamma_twist_action(r.gamma[i], a.eps[2 * src], a.eps[2 * src + 1]);
    r.eps[2 * i] = mod4(-tw[0]);
    r.eps[2 * i + 1] = mod4(-tw[1]);
  }
  return r;
}

HmaxElement hmax_lift(const LmaxElement& l) {
  const auto& S = sbar();
  HmaxElement h;
  h.perm = l.perm;
  for (int i = 0; i < 3; ++i) {
    h.gamma[i] = Mat2{S.lift[l.sb[i]]};
    std::uint8_t pair = shift_pair(l.eps, i);
    h.eps[2 * i] = (pair & 1) ? 1 : 0;
    h.eps[2 * i + 1] = (pair & 2) ? 1 : 0;
  }
  return h;
}

LmaxElement hmax_project(const HmaxElement& h) {
  const auto& S = sbar();
  LmaxElement l;
  l.perm = h.perm;
  for (int i = 0; i < 3; ++i) {
    std::uint8_t pair = std::uint8_t((h.eps[2 * i] & 1) | (h.eps[2 * i + 1] & 1) << 1);
    l.eps = with_pair(l.eps, i, pair);
    // reduce the integer matrix mod 2 and look it up
    std::uint8_t a = h.gamma[i].m[0] & 1, b = h.gamma[i].m[1] & 1;
    std::uint8_t c = h.gamma[i].m[2] & 1, d = h.gamma[i].m[3] & 1;
    bool found = false;
    for (std::uint8_t k = 0; k < 6; ++k) {
      if (S.col[k][0] == std::uint8_t(a | c << 1) &&
          S.col[k][1] == std::uint8_t(b | d << 1)) {
        l.sb[i] = k;
        found = true;
        break;
      }
    }
    if (!found) throw Error("matrix does not reduce into SL(2,F2)");
  }
  return l;
}

HmaxElement hmax_embed(const GroupElement& g) {
  HmaxElement h;
  for (int i = 0; i < 3; ++i) {
    bool minus = (g.twist >> i) & 1;
    h.gamma[i] = minus ? Mat2{{-1, 0, 0, -1}} : Mat2{};
    std::uint8_t pair = shift_pair(g.shift, i);
    h.eps[2 * i] = (pair & 1) ? 2 : 0;  // half period = 2 quarter units
    h.eps[2 * i + 1] = (pair & 2) ? 2 : 0;
  }
  return h;
}

GroupElement hmax_to_group_element(const HmaxElement& h) {
  if (h.perm != 0) throw Error("not a twist-translation element: permutation part");
  GroupElement g;
  for (int i = 0; i < 3; ++i) {
    const auto& m = h.gamma[i].m;
    if (m[1] != 0 || m[2] != 0 || m[0] != m[3] || (m[0] != 1 && m[0] != -1))
      throw Error("not a twist-translation element: matrix part");
    if (m[0] == -1) g.twist |= std::uint8_t(1u << i);
    if (h.eps[2 * i] % 2 != 0 || h.eps[2 * i + 1] % 2 != 0)
      throw Error("not a twist-translation element: quarter translation");
    std::uint8_t pair = std::uint8_t((h.eps[2 * i] / 2) | (h.eps[2 * i + 1] / 2) << 1);
    g.shift = with_pair(g.shift, i, pair);
  }
  return g;
}

}  // namespace cy3
