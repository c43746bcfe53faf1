#include "cy3/geometry.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "cy3/linalg.hpp"

namespace cy3 {

QuarterPoint quarter_apply(QuarterPoint q, int sign, std::uint8_t shift_pair) {
  int x = quarter_x(q), tau = quarter_tau(q);
  if (sign < 0) { x = (4 - x) & 3; tau = (4 - tau) & 3; }
  if (shift_pair & 1) x = (x + 2) & 3;
  if (shift_pair & 2) tau = (tau + 2) & 3;
  return quarter_point(x, tau);
}

FixedLocus fixed_locus(const GroupElement& g) {
  FixedLocus out;
  if (g.twist == 0) {
    out.kind = (g.shift == 0) ? FixedLocusKind::AllOfY : FixedLocusKind::Empty;
    return out;
  }
  int free_factor = -1;
  for (int i = 0; i < 3; ++i)
    if (!((g.twist >> i) & 1)) free_factor = i;
  if (shift_pair(g.shift, free_factor) != 0) {
    out.kind = FixedLocusKind::Empty;  // translation on the free factor
    return out;
  }
  out.kind = FixedLocusKind::Components;
  std::array<int, 2> twisted;
  int k = 0;
  for (int i = 0; i < 3; ++i)
    if (i != free_factor) twisted[k++] = i;
  // Solutions of 2z = shift on each twisted factor: shift/2 plus 2-torsion.
  std::array<std::array<QuarterPoint, 4>, 2> sols;
  for (int t = 0; t < 2; ++t) {
    std::uint8_t pair = shift_pair(g.shift, twisted[t]);
    int bx = (pair & 1) ? 1 : 0, btau = (pair & 2) ? 1 : 0;
    int n = 0;
    for (int hx = 0; hx < 2; ++hx)
      for (int ht = 0; ht < 2; ++ht)
        sols[t][n++] = quarter_point(bx + 2 * hx, btau + 2 * ht);
  }
  for (int u = 0; u < 4; ++u)
    for (int v = 0; v < 4; ++v)
      out.components.push_back(
          FixedComponent{g, free_factor, {sols[0][u], sols[1][v]}});
  return out;
}

namespace {

FixedComponent apply_to_component(const GroupElement& h, const FixedComponent& c) {
  FixedComponent out = c;
  std::array<int, 2> twisted;
  int k = 0;
  for (int i = 0; i < 3; ++i)
    if (i != c.free_factor) twisted[k++] = i;
  for (int t = 0; t < 2; ++t) {
    int sign = ((h.twist >> twisted[t]) & 1) ? -1 : +1;
    out.coords[t] = quarter_apply(c.coords[t], sign, shift_pair(h.shift, twisted[t]));
  }
  return out;
}

std::uint32_t component_key(const FixedComponent& c) {
  return std::uint32_t(c.free_factor) << 16 | std::uint32_t(c.coords[0]) << 8 |
         c.coords[1];
}

}  // namespace

std::vector<CurveClass> curve_classes(const GGroup& g) {
  std::vector<FixedComponent> all;
  std::map<std::uint32_t, GroupElement> owner;
  for (const auto& e : g.elements) {
    if (e == GroupElement{}) continue;
    FixedLocus f = fixed_locus(e);
    if (f.kind != FixedLocusKind::Components) continue;
    for (const auto& c : f.components) {
      auto [it, fresh] = owner.emplace(component_key(c), e);
      if (!fresh)
        throw Error("two distinct elements claim one fixed component");
      all.push_back(c);
    }
  }

  std::set<std::uint32_t> seen;
  std::vector<CurveClass> classes;
  for (const auto& c : all) {
    if (seen.count(component_key(c))) continue;
    CurveClass cls;
    cls.direction = c.free_factor;
    // orbit under G
    std::map<std::uint32_t, FixedComponent> orbit;
    orbit.emplace(component_key(c), c);
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<FixedComponent> cur;
      for (auto& [k, v] : orbit) cur.push_back(v);
      for (const auto& x : cur)
        for (const auto& h : g.elements) {
          FixedComponent y = apply_to_component(h, x);
          if (orbit.emplace(component_key(y), y).second) grew = true;
        }
    }
    for (auto& [k, v] : orbit) {
      cls.orbit.push_back(v);
      seen.insert(k);
    }
    // setwise stabilizer of the base component
    for (const auto& h : g.elements)
      if (component_key(apply_to_component(h, c)) == component_key(c))
        cls.stabilizer.push_back(h);
    bool reflected = false;
    for (const auto& h : cls.stabilizer)
      if ((h.twist >> c.free_factor) & 1) reflected = true;
    cls.genus = reflected ? 0 : 1;
    classes.push_back(std::move(cls));
  }
  std::sort(classes.begin(), classes.end(),
            [](const CurveClass& a, const CurveClass& b) {
              if (a.direction != b.direction) return a.direction < b.direction;
              return component_key(a.orbit.front()) < component_key(b.orbit.front());
            });
  return classes;
}

namespace {

// G-invariant (1,1)- and (2,1)-monomial counts on Y; shifts act trivially,
// a twist contributes its sign product.
int bulk_h11(const GGroup& g) {
  int count = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      bool inv = true;
      for (const auto& e : g.elements) {
        int s = 1;
        if ((e.twist >> i) & 1) s = -s;
        if ((e.twist >> j) & 1) s = -s;
        if (s < 0) { inv = false; break; }
      }
      if (inv) ++count;
    }
  return count;
}

int bulk_h21(const GGroup& g) {
  int count = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        bool inv = true;
        for (const auto& e : g.elements) {
          int s = 1;
          if ((e.twist >> i) & 1) s = -s;
          if ((e.twist >> j) & 1) s = -s;
          if ((e.twist >> k) & 1) s = -s;
          if (s < 0) { inv = false; break; }
        }
        if (inv) ++count;
      }
  return count;
}

}  // namespace

HodgeNumbers hodge_numbers(const GGroup& g) {
  int b11 = bulk_h11(g), b21 = bulk_h21(g);
  if (b11 != 3 || b21 != 3)
    throw Error("bulk cohomology is not (3,3); unexpected twist set");
  auto classes = curve_classes(g);
  HodgeNumbers h;
  h.h11 = b11 + (int)classes.size();
  h.h21 = b21;
  for (const auto& c : classes) h.h21 += c.genus;
  return h;
}

std::string pow4_decimal(int exponent) {
  std::string digits = "1";  // little-endian
  auto double_once = [&] {
    int carry = 0;
    for (auto& ch : digits) {
      int d = (ch - '0') * 2 + carry;
      ch = char('0' + d % 10);
      carry = d / 10;
    }
    if (carry) digits.push_back(char('0' + carry));
  };
  for (int i = 0; i < 2 * exponent; ++i) double_once();
  std::reverse(digits.begin(), digits.end());
  return digits;
}

TridentCount trident_and_resolution_count(const GGroup& g) {
  // Candidate points are 4-torsion triples; a trident's stabilizer covers all
  // three nontrivial twist patterns.
  auto fixes = [](const GroupElement& e, const std::array<QuarterPoint, 3>& p) {
    for (int i = 0; i < 3; ++i) {
      int sign = ((e.twist >> i) & 1) ? -1 : +1;
      if (quarter_apply(p[i], sign, shift_pair(e.shift, i)) != p[i]) return false;
    }
    return true;
  };
  std::set<int> trident_pts;
  for (int a = 0; a < 16; ++a)
    for (int b = 0; b < 16; ++b)
      for (int c = 0; c < 16; ++c) {
        std::array<QuarterPoint, 3> p = {QuarterPoint(a), QuarterPoint(b),
                                         QuarterPoint(c)};
        std::set<std::uint8_t> patterns;
        for (const auto& e : g.elements)
          if (e.twist != 0 && fixes(e, p)) patterns.insert(e.twist);
        if (patterns.size() == 3) trident_pts.insert(a << 8 | b << 4 | c);
      }
  // Count G-orbits.
  std::set<int> seen;
  int orbits = 0;
  for (int key : trident_pts) {
    if (seen.count(key)) continue;
    ++orbits;
    std::array<QuarterPoint, 3> p = {QuarterPoint(key >> 8 & 15),
                                     QuarterPoint(key >> 4 & 15),
                                     QuarterPoint(key & 15)};
    for (const auto& e : g.elements) {
      std::array<QuarterPoint, 3> q;
      for (int i = 0; i < 3; ++i) {
        int sign = ((e.twist >> i) & 1) ? -1 : +1;
        q[i] = quarter_apply(p[i], sign, shift_pair(e.shift, i));
      }
      seen.insert(q[0] << 8 | q[1] << 4 | q[2]);
    }
  }
  TridentCount out;
  out.tridents = orbits;
  out.resolution_choices = pow4_decimal(orbits);
  return out;
}

// ---------------------------------------------------------------------------
// Fundamental group.
//
// The deck group consists of affine maps z -> iota z + u/2 with u integral in
// the scaled coordinates (1 and tau_i half-periods are unit vectors) and
// (iota, u mod 2) in G.  The normal closure N of the elements with exact
// fixed points meets the translations in a lattice L_N generated by
// within-pattern lift differences, commutator translations, triple products,
// and twist images; the quotient by N classifies pi_1 of the resolution.

namespace {

struct Pi1Context {
  std::vector<std::uint8_t> patterns;            // nontrivial twist patterns
  std::vector<std::uint8_t> fp_patterns;         // with exact fixed points
  std::map<std::uint8_t, std::vector<HalfShift>> shifts;    // per pattern
  std::map<std::uint8_t, std::vector<HalfShift>> shifts0;   // fixed-point ones
  std::vector<HalfShift> sg;                     // shift subgroup (incl. 0)
};

std::vector<long long> lift6(HalfShift s) {
  std::vector<long long> v(6, 0);
  for (int b = 0; b < 6; ++b) v[b] = (s >> b) & 1;
  return v;
}

std::vector<long long> twist_apply6(std::uint8_t twist, std::vector<long long> v) {
  for (int i = 0; i < 3; ++i)
    if ((twist >> i) & 1) { v[2 * i] = -v[2 * i]; v[2 * i + 1] = -v[2 * i + 1]; }
  return v;
}

// (1 - iota) v: doubles twisted coordinates, kills untwisted ones.
std::vector<long long> one_minus_twist6(std::uint8_t twist,
                                        const std::vector<long long>& v) {
  std::vector<long long> out(6, 0);
  for (int i = 0; i < 3; ++i)
    if ((twist >> i) & 1) { out[2 * i] = 2 * v[2 * i]; out[2 * i + 1] = 2 * v[2 * i + 1]; }
  return out;
}

bool has_fixed_point(std::uint8_t twist, HalfShift s) {
  for (int i = 0; i < 3; ++i)
    if (!((twist >> i) & 1) && shift_pair(s, i) != 0) return false;
  return twist != 0;
}

Pi1Context build_context(const GGroup& g) {
  Pi1Context ctx;
  ctx.sg = g.shifts_for(0);
  for (const auto& e : g.elements) {
    if (e.twist == 0) continue;
    if (std::find(ctx.patterns.begin(), ctx.patterns.end(), e.twist) ==
        ctx.patterns.end())
      ctx.patterns.push_back(e.twist);
  }
  std::sort(ctx.patterns.begin(), ctx.patterns.end());
  for (auto t : ctx.patterns) {
    ctx.shifts[t] = g.shifts_for(t);
    std::vector<HalfShift> fp;
    for (auto s : ctx.shifts[t])
      if (has_fixed_point(t, s)) fp.push_back(s);
    if (!fp.empty()) {
      ctx.shifts0[t] = fp;
      ctx.fp_patterns.push_back(t);
    }
  }
  return ctx;
}

IntRows deck_translation_lattice(const Pi1Context& ctx) {
  // Lambda_pi = 2 Z^6 + lifts of the shift subgroup.
  IntRows gens;
  gens.cols = 6;
  for (int c = 0; c < 6; ++c) {
    std::vector<long long> v(6, 0);
    v[c] = 2;
    gens.rows.push_back(v);
  }
  for (auto s : ctx.sg) gens.rows.push_back(lift6(s));
  return lattice_basis(gens);
}

IntRows fixed_point_translation_lattice(const Pi1Context& ctx) {
  IntRows gens;
  gens.cols = 6;
  std::vector<std::vector<long long>> raw;
  for (auto t : ctx.fp_patterns) {
    // 2 e_c on twisted coordinates
    for (int i = 0; i < 3; ++i) {
      if (!((t >> i) & 1)) continue;
      for (int b = 0; b < 2; ++b) {
        std::vector<long long> v(6, 0);
        v[2 * i + b] = 2;
        raw.push_back(v);
      }
    }
    // within-pattern differences of fixed-point lifts
    const auto& fp = ctx.shifts0.at(t);
    for (size_t a = 1; a < fp.size(); ++a) {
      auto v = lift6(fp[a]);
      auto w = lift6(fp[0]);
      for (int c = 0; c < 6; ++c) v[c] -= w[c];
      raw.push_back(v);
    }
  }
  // pairwise commutators (1 - iota') u - (1 - iota) u'
  for (size_t x = 0; x < ctx.fp_patterns.size(); ++x)
    for (size_t y = x + 1; y < ctx.fp_patterns.size(); ++y) {
      auto tx = ctx.fp_patterns[x], ty = ctx.fp_patterns[y];
      for (auto sx : ctx.shifts0.at(tx))
        for (auto sy : ctx.shifts0.at(ty)) {
          auto a = one_minus_twist6(ty, lift6(sx));
          auto b = one_minus_twist6(tx, lift6(sy));
          for (int c = 0; c < 6; ++c) a[c] -= b[c];
          raw.push_back(a);
        }
    }
  // triple products u_3 - u_1 - iota_1 u_2 over base lifts, all orderings
  if (ctx.fp_patterns.size() == 3) {
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        if (i == j) continue;
        int k = 3 - i - j;
        auto ti = ctx.fp_patterns[i], tj = ctx.fp_patterns[j],
             tk = ctx.fp_patterns[k];
        for (auto si : ctx.shifts0.at(ti))
          for (auto sj : ctx.shifts0.at(tj))
            for (auto sk : ctx.shifts0.at(tk)) {
              auto v = lift6(sk);
              auto a = lift6(si);
              auto b = twist_apply6(ti, lift6(sj));
              for (int c = 0; c < 6; ++c) v[c] -= a[c] + b[c];
              raw.push_back(v);
            }
      }
  }
  // closure under the twist action of all patterns
  size_t base = raw.size();
  for (size_t i = 0; i < base; ++i)
    for (auto t : ctx.patterns) raw.push_back(twist_apply6(t, raw[i]));
  gens.rows = std::move(raw);
  return lattice_basis(gens);
}

// One extra saturation round: random products of fixed-point elements with
// trivial total twist must land in L_N.
void saturation_check(const Pi1Context& ctx, const IntRows& ln,
                      std::uint64_t seed) {
  if (ctx.fp_patterns.empty()) return;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> len_pick(2, 6);
  std::uniform_int_distribution<int> off(-2, 2);
  for (int trial = 0; trial < 200; ++trial) {
    int len = len_pick(rng);
    std::vector<std::pair<std::uint8_t, std::vector<long long>>> word;
    std::uint8_t total = 0;
    for (int i = 0; i < len; ++i) {
      auto t = ctx.fp_patterns[rng() % ctx.fp_patterns.size()];
      const auto& fps = ctx.shifts0.at(t);
      auto s = fps[rng() % fps.size()];
      auto u = lift6(s);
      for (int c = 0; c < 6; ++c) {
        // random even offsets on twisted coordinates keep the lift valid
        if ((t >> (c / 2)) & 1) u[c] += 2 * off(rng);
      }
      word.push_back({t, u});
      total ^= t;
    }
    if (total != 0) continue;
    // compose right-to-left: (iota, u)(iota', u') = (iota iota', u + iota u')
    std::uint8_t tw = 0;
    std::vector<long long> tr(6, 0);
    for (const auto& [t, u] : word) {
      // (tw, tr) * (t, u)
      auto moved = twist_apply6(tw, u);
      for (int c = 0; c < 6; ++c) tr[c] += moved[c];
      tw ^= t;
    }
    if (!lattice_contains(ln, tr))
      throw Error("fixed-point lattice saturation failure");
  }
}

}  // namespace

Pi1 classify_pi1(const GGroup& g) {
  Pi1Context ctx = build_context(g);
  if (ctx.fp_patterns.empty()) return Pi1::B;  // free action

  IntRows ln = fixed_point_translation_lattice(ctx);
  saturation_check(ctx, ln, 0x5eed);
  int rank = lattice_rank(ln);

  if ((int)ctx.fp_patterns.size() == 1) {
    if (rank != 4) throw Error("unexpected fixed-point lattice rank " +
                               std::to_string(rank));
    // Quotient of the deck translations must be Z^2, with one coset of
    // twists surviving on top.
    IntRows lam = deck_translation_lattice(ctx);
    std::vector<std::vector<long long>> coords;
    for (const auto& row : ln.rows)
      coords.push_back(lattice_coordinates(lam, row));
    auto inv = smith_invariants(coords);
    if ((int)inv.size() != 4 ||
        !std::all_of(inv.begin(), inv.end(), [](long long d) { return d == 1; }))
      throw Error("rank-4 quotient has torsion; unclassifiable");
    // top quotient: twists modulo the fixed-point pattern
    // (Z/2)^2 / <pattern> = Z/2
    return Pi1::A;
  }

  if (rank != 6)
    throw Error("unexpected fixed-point lattice rank " + std::to_string(rank));

  // Finite quotient: everything reduces mod 2.  W = L_N mod 2 inside the
  // shift subgroup; the quotient group is elementary abelian.
  std::vector<std::uint8_t> wbasis;
  auto reduce = [&](std::uint8_t v) {
    for (auto w : wbasis) {
      std::uint8_t piv = std::uint8_t(w & -w);
      if (v & piv) v ^= w;
    }
    return v;
  };
  auto add_to_w = [&](std::uint8_t v) {
    v = reduce(v);
    if (v) {
      wbasis.push_back(v);
      std::sort(wbasis.begin(), wbasis.end(), std::greater<>());
      // re-reduce for a canonical basis
      for (size_t i = 0; i < wbasis.size(); ++i) {
        std::uint8_t x = wbasis[i];
        for (size_t j = 0; j < wbasis.size(); ++j) {
          if (i == j) continue;
          std::uint8_t piv = std::uint8_t(wbasis[j] & -wbasis[j]);
          if (x & piv) x ^= wbasis[j];
        }
        wbasis[i] = x;
      }
    }
  };
  for (const auto& row : ln.rows) {
    std::uint8_t v = 0;
    for (int c = 0; c < 6; ++c)
      if (((row[c] % 2) + 2) % 2) v |= std::uint8_t(1u << c);
    add_to_w(v);
  }
  // sanity: W lies in the shift subgroup
  {
    std::set<std::uint8_t> sgset(ctx.sg.begin(), ctx.sg.end());
    for (auto w : wbasis)
      if (!sgset.count(w))
        throw Error("fixed-point lattice leaves the deck translations");
  }

  // Elements (twist, shift class mod W); pi/L_N has order 4 |S_G| / |W|.
  auto canon = [&](std::uint8_t twist, std::uint8_t v) {
    return std::uint16_t(twist << 8 | reduce(v));
  };
  size_t w_order = size_t(1) << wbasis.size();
  size_t total = 4 * ctx.sg.size() / w_order;

  // subgroup generated by the fixed-point classes (the group is abelian)
  std::set<std::uint16_t> closure = {canon(0, 0)};
  std::vector<std::uint16_t> gens;
  for (auto t : ctx.fp_patterns)
    gens.push_back(canon(t, ctx.shifts0.at(t).front()));
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::uint16_t> cur(closure.begin(), closure.end());
    for (auto x : cur)
      for (auto gg : gens) {
        std::uint8_t tw = std::uint8_t((x >> 8) ^ (gg >> 8));
        std::uint8_t v = std::uint8_t((x & 0xff) ^ (gg & 0xff));
        if (closure.insert(canon(tw, v)).second) grew = true;
      }
  }
  if (total % closure.size() != 0)
    throw Error("fixed-point closure does not divide the deck quotient");
  size_t q = total / closure.size();
  if (q == 1) return Pi1::Zero;
  if (q == 2) return Pi1::C;
  if (q == 4) return Pi1::D;
  throw Error("finite quotient of order " + std::to_string(q) +
              " outside {1, Z/2, (Z/2)^2}");
}

GeometryResult run_geometry(const CatalogEntry& e) {
  GeometryResult r;
  r.label = e.label;
  GGroup g = group_from_entry(e);
  r.classes = curve_classes(g);
  r.free_action = r.classes.empty();
  r.hodge = hodge_numbers(g);
  r.tridents = trident_and_resolution_count(g);
  r.pi1 = classify_pi1(g);
  r.matches_catalog = (r.hodge.h11 == e.expected_h11) &&
                      (r.hodge.h21 == e.expected_h21) &&
                      (r.pi1 == e.expected_pi1);
  return r;
}

}  // namespace cy3
