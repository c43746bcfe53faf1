#include "cy3/normalizer.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <set>

namespace cy3 {

namespace {

bool normalizes(const LmaxElement& l, const GGroup& g) {
  for (const auto& gen : g.generators)
    if (!g.contains(conjugate_by_lmax(l, gen))) return false;
  return true;
}

}  // namespace

LGroup compute_L(const GGroup& g) {
  LGroup out;
  out.bits.assign((kLmaxOrder + 63) / 64, 0);
  for (int idx = 0; idx < kLmaxOrder; ++idx) {
    LmaxElement l = lmax_from_index(idx);
    if (normalizes(l, g)) {
      out.indices.push_back((std::uint32_t)idx);
      out.bits[(size_t)idx >> 6] |= 1ull << (idx & 63);
    }
  }
  if (out.indices.empty()) throw Error("normalizer image is empty");

  // Subgroup sanity: closure under composition and inversion.  Exhaustive up
  // to 4096 elements; deterministic probing beyond that.
  auto check_pair = [&](std::uint32_t i, std::uint32_t j) {
    LmaxElement p = lmax_compose(lmax_from_index((int)i), lmax_from_index((int)j));
    if (!out.contains(p)) throw Error("normalizer image not closed under composition");
  };
  for (std::uint32_t i : out.indices)
    if (!out.contains(lmax_inverse(lmax_from_index((int)i))))
      throw Error("normalizer image not closed under inversion");
  if (out.order() <= 4096) {
    for (std::uint32_t i : out.indices)
      for (std::uint32_t j : out.indices) check_pair(i, j);
  } else {
    size_t step = out.order() / 64 + 1;
    for (std::uint32_t i : out.indices)
      for (size_t k = 0; k < out.order(); k += step) check_pair(i, out.indices[k]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// S^3 x| S3 machinery.

L0Element l0_pack(const std::array<std::uint8_t, 3>& sb, std::uint8_t perm) {
  return L0Element(((sb[0] * 6 + sb[1]) * 6 + sb[2]) * 6 + perm);
}

std::array<std::uint8_t, 3> l0_sbar(L0Element e) {
  std::uint8_t p2 = std::uint8_t((e / 6) % 6);
  std::uint8_t p1 = std::uint8_t((e / 36) % 6);
  std::uint8_t p0 = std::uint8_t(e / 216);
  return {p0, p1, p2};
}

std::uint8_t l0_perm(L0Element e) { return std::uint8_t(e % 6); }

L0Element l0_compose(L0Element a, L0Element b) {
  const auto& S = sbar();
  const auto& P = perms();
  auto sa = l0_sbar(a), sbv = l0_sbar(b);
  std::uint8_t pa = l0_perm(a), pb = l0_perm(b);
  std::array<std::uint8_t, 3> sc;
  std::uint8_t painv = P.inv[pa];
  for (int i = 0; i < 3; ++i) sc[i] = S.mul[sa[i]][sbv[P.img[painv][i]]];
  return l0_pack(sc, P.mul[pa][pb]);
}

std::string l0_render(L0Element e) {
  const auto& S = sbar();
  const auto& P = perms();
  auto sb3 = l0_sbar(e);
  std::string out = "(";
  for (int i = 0; i < 3; ++i) {
    if (i) out += ",";
    out += S.name[sb3[i]];
  }
  out += ")|";
  out += P.name[l0_perm(e)];
  return out;
}

std::vector<L0Element> l0_full() {
  std::vector<L0Element> v(1296);
  for (int i = 0; i < 1296; ++i) v[i] = (L0Element)i;
  return v;
}

std::vector<L0Element> l0_borel_cube(int i) {
  std::uint8_t b = borel_generator(i);
  std::vector<L0Element> v;
  for (std::uint8_t x0 : {std::uint8_t(0), b})
    for (std::uint8_t x1 : {std::uint8_t(0), b})
      for (std::uint8_t x2 : {std::uint8_t(0), b})
        for (std::uint8_t p = 0; p < 6; ++p)
          v.push_back(l0_pack({x0, x1, x2}, p));
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<L0Element> l0_borel_tilde(int i) {
  // {(b1,b2,b3) in B_i^3 : b1 b2 b3 = 1} x| S3; B_i has order 2, so the
  // condition is an even number of nonidentity entries.
  std::uint8_t b = borel_generator(i);
  std::vector<L0Element> v;
  for (int m = 0; m < 8; ++m) {
    if ((std::popcount(unsigned(m)) % 2) != 0) continue;
    std::array<std::uint8_t, 3> sb3 = {std::uint8_t(m & 1 ? b : 0),
                                       std::uint8_t(m & 2 ? b : 0),
                                       std::uint8_t(m & 4 ? b : 0)};
    for (std::uint8_t p = 0; p < 6; ++p) v.push_back(l0_pack(sb3, p));
  }
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<L0Element> l0_diagonal() {
  std::vector<L0Element> v;
  for (std::uint8_t m = 0; m < 6; ++m)
    for (std::uint8_t p = 0; p < 6; ++p) v.push_back(l0_pack({m, m, m}, p));
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<L0Element> l0_slot_product(std::array<int, 3> slots,
                                       std::uint8_t transposition) {
  auto slot_elems = [](int code) -> std::vector<std::uint8_t> {
    if (code == 0) return {0};
    if (code >= 1 && code <= 3) return {0, borel_generator(code)};
    std::vector<std::uint8_t> all(6);
    for (std::uint8_t i = 0; i < 6; ++i) all[i] = i;
    return all;
  };
  std::vector<L0Element> v;
  for (auto x0 : slot_elems(slots[0]))
    for (auto x1 : slot_elems(slots[1]))
      for (auto x2 : slot_elems(slots[2]))
        for (std::uint8_t p : {std::uint8_t(0), transposition})
          v.push_back(l0_pack({x0, x1, x2}, p));
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::vector<L0Element> l0_case41_N() {
  std::vector<L0Element> gens = {
      l0_pack({kSBarT, kSBarS, kSBarR}, 0),
      l0_pack({kSBarS, kSBarR, kSBarT}, 0),
      l0_pack({kSBarR, kSBarT, kSBarS}, 0),
  };
  std::set<L0Element> closure = {l0_pack({0, 0, 0}, 0)};
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<L0Element> cur(closure.begin(), closure.end());
    for (auto a : cur)
      for (auto g : gens)
        if (closure.insert(l0_compose(a, g)).second) grew = true;
  }
  return std::vector<L0Element>(closure.begin(), closure.end());
}

namespace {

std::vector<L0Element> greedy_generators(const std::vector<L0Element>& elems) {
  std::set<L0Element> target(elems.begin(), elems.end());
  std::vector<L0Element> gens;
  std::set<L0Element> have = {l0_pack({0, 0, 0}, 0)};
  for (auto e : elems) {
    if (have.count(e)) continue;
    gens.push_back(e);
    // close
    bool grew = true;
    have.insert(e);
    while (grew) {
      grew = false;
      std::vector<L0Element> cur(have.begin(), have.end());
      for (auto a : cur)
        for (auto b : gens)
          if (have.insert(l0_compose(a, b)).second) grew = true;
    }
    if (have.size() == target.size()) break;
  }
  return gens;
}

std::string borel_name(int i) { return "B" + std::to_string(i); }

}  // namespace

L0Descriptor describe_L0(const LGroup& l) {
  L0Descriptor d;
  std::set<L0Element> proj;
  for (auto idx : l.indices) {
    LmaxElement e = lmax_from_index((int)idx);
    proj.insert(l0_pack(e.sb, e.perm));
    if (e.sb == std::array<std::uint8_t, 3>{0, 0, 0} && e.perm == 0)
      d.translation_kernel.push_back(e.eps);
  }
  d.elements.assign(proj.begin(), proj.end());
  d.generators = greedy_generators(d.elements);

  auto matches = [&](const std::vector<L0Element>& ref) {
    return ref.size() == d.elements.size() &&
           std::equal(ref.begin(), ref.end(), d.elements.begin());
  };

  if (matches(l0_full())) {
    d.tag = L0Tag::Full;
    d.tag_text = "S^3 x| S3";
    return d;
  }
  for (int i = 1; i <= 3; ++i) {
    if (matches(l0_borel_cube(i))) {
      d.tag = L0Tag::BorelCube;
      d.borel_index = i;
      d.tag_text = borel_name(i) + "^3 x| S3";
      return d;
    }
    if (matches(l0_borel_tilde(i))) {
      d.tag = L0Tag::BorelTilde;
      d.borel_index = i;
      d.tag_text = borel_name(i) + "~ x| S3";
      return d;
    }
  }
  if (matches(l0_diagonal())) {
    d.tag = L0Tag::Diagonal;
    d.tag_text = "S x| S3 (diagonal)";
    return d;
  }
  // Slotwise Borel products with one transposition.
  const std::array<std::uint8_t, 3> transpositions = {1, 2, 3};  // (1 2),(1 3),(2 3)
  for (std::uint8_t tr : transpositions) {
    for (int s0 = 0; s0 <= 3; ++s0)
      for (int s1 = 0; s1 <= 3; ++s1)
        for (int s2 = 0; s2 <= 3; ++s2) {
          std::array<int, 3> slots = {s0, s1, s2};
          // stability under the transposition
          const auto& img = perms().img[tr];
          if (slots[img[0]] != slots[0] || slots[img[1]] != slots[1] ||
              slots[img[2]] != slots[2])
            continue;
          if (matches(l0_slot_product(slots, tr))) {
            d.tag = L0Tag::MixedPair;
            std::string names[3];
            for (int k = 0; k < 3; ++k)
              names[k] = slots[k] == 0 ? "1" : borel_name(slots[k]);
            d.tag_text = "(" + names[0] + " x " + names[1] + " x " + names[2] +
                         ") x| <" + std::string(perms().name[tr]) + ">";
            return d;
          }
        }
  }
  // Case (4-1) shape.
  {
    L0Descriptor probe = d;
    probe.tag = L0Tag::Case41;
    if (check_case41(probe).all()) {
      d.tag = L0Tag::Case41;
      d.tag_text = "non-split extension of S3 by <(t,s,r),(s,r,t),(r,t,s)>";
      return d;
    }
  }
  d.tag = L0Tag::Raw;
  d.tag_text = "raw (order " + std::to_string(d.elements.size()) + ")";
  return d;
}

Case41Checks check_case41(const L0Descriptor& d) {
  Case41Checks c;
  std::vector<L0Element> n_part;
  std::set<std::uint8_t> perms_seen;
  for (auto e : d.elements) {
    if (l0_perm(e) == 0) n_part.push_back(e);
    perms_seen.insert(l0_perm(e));
  }
  auto ref = l0_case41_N();
  c.n_matches = (n_part == ref);
  // Each projection N -> S must hit all six elements exactly once.
  c.projections_bijective = true;
  for (int slot = 0; slot < 3; ++slot) {
    std::set<std::uint8_t> seen;
    for (auto e : n_part) seen.insert(l0_sbar(e)[slot]);
    if (seen.size() != n_part.size() || seen.size() != 6)
      c.projections_bijective = false;
  }
  {
    std::vector<L0Element> diag;
    for (std::uint8_t m = 0; m < 6; ++m) diag.push_back(l0_pack({m, m, m}, 0));
    std::sort(diag.begin(), diag.end());
    c.not_diagonal = !(n_part == diag);
  }
  c.surjects_onto_s3 = (perms_seen.size() == 6);

  // Non-splitness: no order-6 subgroup meets N trivially and surjects onto S3.
  // Subgroups of order 6 are generated by pairs; |L0| is small enough to try
  // them all.
  c.non_split = true;
  if (d.elements.size() == 36 && c.n_matches) {
    std::set<L0Element> nset(n_part.begin(), n_part.end());
    auto closure = [&](L0Element a, L0Element b) {
      std::set<L0Element> s = {l0_pack({0, 0, 0}, 0)};
      bool grew = true;
      while (grew && s.size() <= 36) {
        grew = false;
        std::vector<L0Element> cur(s.begin(), s.end());
        for (auto x : cur) {
          if (s.insert(l0_compose(x, a)).second) grew = true;
          if (s.insert(l0_compose(x, b)).second) grew = true;
        }
      }
      return s;
    };
    for (auto a : d.elements)
      for (auto b : d.elements) {
        auto s = closure(a, b);
        if (s.size() != 6) continue;
        bool trivial_meet = true;
        std::set<std::uint8_t> ps;
        for (auto e : s) {
          if (l0_perm(e) == 0 && e != l0_pack({0, 0, 0}, 0) && nset.count(e))
            trivial_meet = false;
          ps.insert(l0_perm(e));
        }
        if (trivial_meet && ps.size() == 6) {
          c.non_split = false;  // found a complement
          return c;
        }
      }
  }
  return c;
}

OracleReport brute_force_normalizer_check(
    const GGroup& g, int sample_size, std::uint64_t seed,
    const std::vector<LmaxElement>& must_include) {
  if (sample_size < 1) throw Error("sample size must be at least 1");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, kLmaxOrder - 1);

  std::vector<LmaxElement> samples = must_include;
  for (int i = 0; i < sample_size; ++i)
    samples.push_back(lmax_from_index(pick(rng)));

  OracleReport rep;
  for (const auto& l : samples) {
    ++rep.samples;
    HmaxElement hl = hmax_lift(l);
    HmaxElement hli = hmax_inverse(hl);
    bool agree = true;
    for (const auto& gen : g.generators) {
      GroupElement descended = conjugate_by_lmax(l, gen);
      HmaxElement exact = hmax_compose(hmax_compose(hl, hmax_embed(gen)), hli);
      GroupElement exact_g = hmax_to_group_element(exact);
      if (exact_g != descended) { agree = false; break; }
      if (g.contains(descended) != g.contains(exact_g)) { agree = false; break; }
    }
    if (agree) ++rep.agreements;
  }
  if (!rep.ok())
    throw Error("descended conjugation disagrees with the exact ambient oracle");
  return rep;
}

NormalizerResult run_normalizer(const CatalogEntry& e) {
  NormalizerResult r;
  r.label = e.label;
  GGroup g = group_from_entry(e);
  LGroup l = compute_L(g);
  r.l_order = l.order();
  r.l0 = describe_L0(l);
  return r;
}

}  // namespace cy3
