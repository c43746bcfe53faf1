#include <doctest.h>

#include <random>

#include "cy3/catalog.hpp"
#include "cy3/group.hpp"

using namespace cy3;

namespace {

std::vector<CatalogEntry> shipped() {
  return load_catalog_file(std::string(CY3LAB_TEST_DATA_DIR) + "/catalog.txt");
}

GGroup group_of(const std::string& label) {
  auto cat = shipped();
  return group_from_entry(*find_case(cat, label));
}

GroupElement twist(std::uint8_t bits, HalfShift s = 0) {
  return GroupElement{bits, s};
}

}  // namespace

TEST_CASE("composition in G") {
  GroupElement id;
  GroupElement g1 = twist(0b110);  // (+,-,-)
  GroupElement g2 = twist(0b101);  // (-,+,-)
  CHECK(g_compose(id, g1) == g1);
  // g3 = g1 g2 has the third pattern
  CHECK(g_compose(g1, g2) == twist(0b011));
  // F2 addition of shifts, signs immaterial
  GroupElement a{0, 0b001010};  // (t,t,0)
  GroupElement b{0, 0b101010};  // (t,t,t)
  CHECK(g_compose(a, b) == GroupElement{0, 0b100000});  // (0,0,t)
  // every element is an involution
  CHECK(g_compose(g1, g1) == id);
}

TEST_CASE("generate_group on catalog cases") {
  auto g01 = group_of("0-1");
  CHECK(g01.elements.size() == 4);
  CHECK(g01.rank == 0);
  auto g25 = group_of("2-5");
  CHECK(g25.elements.size() == 16);
  CHECK(g25.rank == 2);
  // twist patterns present
  std::set<std::uint8_t> pats;
  for (const auto& e : g25.elements) pats.insert(e.twist);
  CHECK(pats == std::set<std::uint8_t>{0b000, 0b011, 0b101, 0b110});
  CHECK(g25.shifts_for(0).size() == 4);

  auto trivial = generate_group({GroupElement{}});
  CHECK(trivial.elements.size() == 1);
  CHECK_FALSE(trivial.valid_catalog_group);
}

TEST_CASE("conjugation by the identity and by pure translations") {
  GroupElement g1 = twist(0b110);
  CHECK(conjugate_by_lmax(lmax_identity(), g1) == g1);

  // eps on factor 2 = (1,0): twisted factors gain the half period
  LmaxElement l;
  l.eps = with_pair(0, 1, 1);
  GroupElement c = conjugate_by_lmax(l, g1);
  CHECK(c.twist == g1.twist);
  CHECK(shift_pair(c.shift, 1) == 1);
  CHECK(shift_pair(c.shift, 0) == 0);
  CHECK(shift_pair(c.shift, 2) == 0);
}

TEST_CASE("sbar action moves half periods: \"1-\" to \"t-\" under s") {
  // l = (0, (s,1,1), id); g has factor-1 shift (1/2,0) and twist (-,+,-)
  LmaxElement l;
  l.sb = {kSBarS, 0, 0};
  GroupElement g = twist(0b101, with_pair(0, 0, 1));
  GroupElement c = conjugate_by_lmax(l, g);
  CHECK(c.twist == g.twist);
  CHECK(shift_pair(c.shift, 0) == 2);  // tau/2
  // cross-check against the exact ambient oracle
  HmaxElement hl = hmax_lift(l);
  HmaxElement exact =
      hmax_compose(hmax_compose(hl, hmax_embed(g)), hmax_inverse(hl));
  CHECK(hmax_to_group_element(exact) == c);
}

TEST_CASE("lmax group laws on random elements") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 1000; ++i) {
    LmaxElement a = lmax_from_index(int(rng() % kLmaxOrder));
    CHECK(lmax_compose(a, lmax_inverse(a)) == lmax_identity());
  }
  for (int i = 0; i < 400; ++i) {
    LmaxElement a = lmax_from_index(int(rng() % kLmaxOrder));
    LmaxElement b = lmax_from_index(int(rng() % kLmaxOrder));
    LmaxElement c = lmax_from_index(int(rng() % kLmaxOrder));
    CHECK(lmax_compose(lmax_compose(a, b), c) ==
          lmax_compose(a, lmax_compose(b, c)));
  }
}

TEST_CASE("index round trip follows the fixed enumeration order") {
  for (int idx : {0, 1, 5, 6, 215, 216, 1295, 1296, 82943}) {
    CHECK(lmax_index(lmax_from_index(idx)) == idx);
  }
  // lexicographic: eps major, then sbar block, then perm
  CHECK(lmax_from_index(0).eps == 0);
  CHECK(lmax_from_index(1296).eps == 1);
  CHECK(lmax_from_index(6).sb == std::array<std::uint8_t, 3>{0, 0, 1});
}

TEST_CASE("permutation and sbar composite agrees with the oracle") {
  // pure permutation (1 2) composed with pure sbar (s,1,1)
  LmaxElement p;
  p.perm = 1;  // (1 2)
  LmaxElement m;
  m.sb = {kSBarS, 0, 0};
  LmaxElement lhs = lmax_compose(p, m);
  HmaxElement rhs = hmax_compose(hmax_lift(p), hmax_lift(m));
  CHECK(hmax_project(rhs) == lhs);

  // two pure translations add
  LmaxElement t1, t2;
  t1.eps = 0b000011;
  t2.eps = 0b000110;
  CHECK(lmax_compose(t1, t2).eps == 0b000101);
}

TEST_CASE("projection is a homomorphism and descent matches exact conjugation") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    LmaxElement a = lmax_from_index(int(rng() % kLmaxOrder));
    LmaxElement b = lmax_from_index(int(rng() % kLmaxOrder));
    CHECK(hmax_project(hmax_compose(hmax_lift(a), hmax_lift(b))) ==
          lmax_compose(a, b));
  }
  auto cat = shipped();
  for (const auto& label : {"0-1", "1-6", "2-12", "4-1"}) {
    GGroup g = group_from_entry(*find_case(cat, label));
    for (int i = 0; i < 500; ++i) {
      LmaxElement l = lmax_from_index(int(rng() % kLmaxOrder));
      HmaxElement hl = hmax_lift(l);
      HmaxElement hli = hmax_inverse(hl);
      for (const auto& gen : g.generators) {
        HmaxElement exact =
            hmax_compose(hmax_compose(hl, hmax_embed(gen)), hli);
        CHECK(hmax_to_group_element(exact) == conjugate_by_lmax(l, gen));
      }
    }
  }
}

TEST_CASE("conjugation is a homomorphism in the group argument") {
  std::mt19937_64 rng(13);
  auto g = group_of("2-9");
  for (int i = 0; i < 500; ++i) {
    LmaxElement l = lmax_from_index(int(rng() % kLmaxOrder));
    const auto& a = g.elements[rng() % g.elements.size()];
    const auto& b = g.elements[rng() % g.elements.size()];
    CHECK(conjugate_by_lmax(l, g_compose(a, b)) ==
          g_compose(conjugate_by_lmax(l, a), conjugate_by_lmax(l, b)));
    CHECK(conjugate_by_lmax(lmax_compose(l, l), a) ==
          conjugate_by_lmax(l, conjugate_by_lmax(l, a)));
  }
}

TEST_CASE("element rendering reuses the catalog grammar") {
  CHECK(render_element(twist(0b110)) == "(0+,0-,0-)");
  CHECK(render_element(GroupElement{0, 0b001010}) == "(t,t,0)");
  CHECK(render_element(twist(0b101, with_pair(0, 2, 1))) == "(0-,0+,1-)");
}
