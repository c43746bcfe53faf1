#include <doctest.h>

#include <set>

#include "cy3/normalizer.hpp"

using namespace cy3;

namespace {

std::vector<CatalogEntry> shipped() {
  return load_catalog_file(std::string(CY3LAB_TEST_DATA_DIR) + "/catalog.txt");
}

GGroup group_of(const std::string& label) {
  auto cat = shipped();
  return group_from_entry(*find_case(cat, label));
}

}  // namespace

TEST_CASE("case (0-1): L is all of S^3 x| S3 with trivial translation classes") {
  LGroup l = compute_L(group_of("0-1"));
  CHECK(l.order() == 1296);
  L0Descriptor d = describe_L0(l);
  CHECK(d.tag == L0Tag::Full);
  CHECK(d.order() == 1296);
  CHECK(d.translation_kernel.size() == 1);  // only the zero class
}

TEST_CASE("trivial group is normalized by everything") {
  GGroup trivial = generate_group({GroupElement{}});
  LGroup l = compute_L(trivial);
  CHECK(l.order() == (size_t)kLmaxOrder);
}

TEST_CASE("case (1-1): L0 = B2^3 x| S3 of order 48") {
  NormalizerResult r = run_normalizer(*find_case(shipped(), "1-1"));
  CHECK(r.l0.tag == L0Tag::BorelCube);
  CHECK(r.l0.borel_index == 2);
  CHECK(r.l0.order() == 48);
  CHECK(r.l0.elements == l0_borel_cube(2));
  CHECK(r.l0.translation_kernel.size() == 1);
}

TEST_CASE("case (1-11): mixed pair (B2 x B2 x B1) x| <(1 2)>") {
  NormalizerResult r = run_normalizer(*find_case(shipped(), "1-11"));
  CHECK(r.l0.tag == L0Tag::MixedPair);
  CHECK(r.l0.elements == l0_slot_product({2, 2, 1}, 1));
}

TEST_CASE("case (2-9): L0 = B1^3 x| S3; quarter-translation classes present") {
  NormalizerResult r = run_normalizer(*find_case(shipped(), "2-9"));
  CHECK(r.l0.tag == L0Tag::BorelCube);
  CHECK(r.l0.borel_index == 1);
  // The translation kernel is the x-diagonal quarter class together with 0;
  // this is what the exact enumeration yields for this action.
  CHECK(r.l0.translation_kernel.size() == 2);
  std::set<std::uint8_t> tk(r.l0.translation_kernel.begin(),
                            r.l0.translation_kernel.end());
  CHECK(tk == std::set<std::uint8_t>{0, 0b010101});
  CHECK(r.l_order == r.l0.order() * r.l0.translation_kernel.size());
}

TEST_CASE("case (4-1): non-split extension checks") {
  NormalizerResult r = run_normalizer(*find_case(shipped(), "4-1"));
  CHECK(r.l0.tag == L0Tag::Case41);
  CHECK(r.l0.order() == 36);
  Case41Checks c = check_case41(r.l0);
  CHECK(c.n_matches);
  CHECK(c.projections_bijective);
  CHECK(c.not_diagonal);
  CHECK(c.surjects_onto_s3);
  CHECK(c.non_split);
}

TEST_CASE("Table 1 reproduction for the ten h21=3 cases") {
  auto cat = shipped();
  struct Row {
    const char* label;
    std::vector<L0Element> want;
  };
  const std::vector<Row> rows = {
      {"0-1", l0_full()},
      {"0-4", l0_borel_cube(1)},
      {"1-1", l0_borel_cube(2)},
      {"1-5", l0_borel_tilde(2)},
      {"1-11", l0_slot_product({2, 2, 1}, 1)},
      {"2-1", l0_diagonal()},
      {"2-9", l0_borel_cube(1)},
      {"2-12", l0_slot_product({0, 1, 1}, 3)},
      {"3-5", l0_borel_tilde(1)},
  };
  for (const auto& row : rows) {
    NormalizerResult r = run_normalizer(*find_case(cat, row.label));
    CHECK_MESSAGE(r.l0.elements == row.want, "case ", row.label);
  }
}

TEST_CASE("membership on generators implies membership for the whole group") {
  // conjugation is a homomorphism, so testing generators suffices; verify by
  // testing every element on three cases
  auto cat = shipped();
  for (const char* label : {"0-2", "1-6", "2-14"}) {
    GGroup g = group_from_entry(*find_case(cat, label));
    LGroup l = compute_L(g);
    for (std::uint32_t idx : l.indices) {
      LmaxElement le = lmax_from_index((int)idx);
      for (const auto& e : g.elements)
        CHECK(g.contains(conjugate_by_lmax(le, e)));
    }
  }
}

TEST_CASE("translation kernels across the ten cases") {
  auto cat = shipped();
  // computed by the exact enumeration; (2-9) and (3-5) carry one extra
  // quarter-translation class, the x-diagonal
  const std::vector<std::pair<const char*, size_t>> want = {
      {"0-1", 1}, {"1-1", 1}, {"2-9", 2}, {"3-5", 2}};
  for (const auto& [label, n] : want) {
    NormalizerResult r = run_normalizer(*find_case(cat, label));
    CHECK_MESSAGE(r.l0.translation_kernel.size() == n, "case ", label);
  }
}

TEST_CASE("oracle agreement on sampled ambient classes") {
  for (const char* label : {"0-1", "2-5"}) {
    GGroup g = group_of(label);
    OracleReport r = brute_force_normalizer_check(g, 500, 99);
    CHECK(r.samples >= 500);
    CHECK(r.ok());
  }
}

TEST_CASE("L is closed under composition for every catalog case") {
  auto cat = shipped();
  for (const auto& e : cat) {
    GGroup g = group_from_entry(e);
    CHECK_NOTHROW(compute_L(g));  // compute_L verifies closure internally
  }
}
