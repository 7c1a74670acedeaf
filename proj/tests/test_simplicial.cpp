#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "derlab/corpus.hpp"
#include "derlab/simplicial.hpp"

using namespace derlab;

namespace {

size_t nondegenerate_count(const TruncSSet& x, int d) {
  size_t n = 0;
  for (size_t s = 0; s < x.count(d); ++s)
    if (!x.is_degenerate(d, int(s))) ++n;
  return n;
}

}  // namespace

TEST_CASE("nerves validate and have the expected nondegenerate counts") {
  auto point = nerve(terminal_category(), 2);
  CHECK(validate_sset(point.sset).empty());
  CHECK(point.sset.count(0) == 1);
  CHECK(nondegenerate_count(point.sset, 1) == 0);

  auto two = nerve(walking_arrow(), 2);
  CHECK(validate_sset(two.sset).empty());
  CHECK(nondegenerate_count(two.sset, 0) == 2);
  CHECK(nondegenerate_count(two.sset, 1) == 1);
  CHECK(nondegenerate_count(two.sset, 2) == 0);

  auto iso = nerve(walking_iso(), 2);
  CHECK(validate_sset(iso.sset).empty());
  CHECK(nondegenerate_count(iso.sset, 0) == 2);
  CHECK(nondegenerate_count(iso.sset, 1) == 2);
  CHECK(nondegenerate_count(iso.sset, 2) == 2);

  auto iso3 = nerve(walking_iso(), 3);
  CHECK(validate_sset(iso3.sset).empty());
}

TEST_CASE("validation flags a corrupted face") {
  auto two = nerve(walking_arrow(), 2);
  TruncSSet broken = two.sset;
  // find a nondegenerate edge and corrupt one face entry
  for (size_t e = 0; e < broken.count(1); ++e)
    if (!broken.is_degenerate(1, int(e))) {
      broken.face[1][e][0] = broken.face[1][e][1];
      break;
    }
  CHECK_FALSE(validate_sset(broken).empty());
}

TEST_CASE("fundamental category of small nerves") {
  auto h1 = fundamental_category(nerve(walking_arrow(), 2).sset, 8);
  REQUIRE(h1.determined);
  CHECK(isomorphic(h1.category, walking_arrow()));

  auto h2 = fundamental_category(nerve(walking_iso(), 2).sset, 8);
  REQUIRE(h2.determined);
  CHECK(isomorphic(h2.category, walking_iso()));

  Rng rng(99);
  for (int trial = 0; trial < 10; ++trial) {
    CatPtr c = random_category(rng, 5, 12);
    auto h = fundamental_category(nerve(c, 2).sset, 8);
    REQUIRE(h.determined);
    CHECK(isomorphic(h.category, c));
  }
}

TEST_CASE("fundamental category of the inner horn is the free chain") {
  TruncSSet horn = horn_two_one();
  CHECK(validate_sset(horn).empty());
  auto h = fundamental_category(horn, 8);
  REQUIRE(h.determined);
  CHECK(isomorphic(h.category, chain(3)));
}

TEST_CASE("the circle never stabilizes") {
  TruncSSet circle = circle_sset(2);
  CHECK(validate_sset(circle).empty());
  auto h = fundamental_category(circle, 4);
  CHECK_FALSE(h.determined);
  CHECK_FALSE(h.unresolved.empty());
}

TEST_CASE("inner horns in nerves have unique fillers") {
  auto c3 = chain(3);
  auto n = nerve(c3, 3);
  // the inner horn built from the two generating edges
  int e01 = -1, e12 = -1;
  for (size_t s = 0; s < n.chains[1].size(); ++s) {
    int m = n.chains[1][s][0];
    const Mor& mor = c3->morphisms[m];
    if (c3->is_identity(m)) continue;
    if (mor.src == 0 && mor.dst == 1) e01 = int(s);
    if (mor.src == 1 && mor.dst == 2) e12 = int(s);
  }
  REQUIRE(e01 >= 0);
  REQUIRE(e12 >= 0);
  std::vector<int> horn = {e12, -1, e01};  // faces d0, (d1 free), d2
  auto fillers = horn_fillers(n.sset, 2, 1, horn);
  CHECK(fillers.size() == 1);
  CHECK_THROWS_AS(horn_fillers(n.sset, 9, 1, horn), Error);
}

TEST_CASE("quasi-category and Kan dichotomy on nerves") {
  auto two = nerve(walking_arrow(), 3);
  CHECK(is_quasicategory_up_to(two.sset).pass);
  CHECK_FALSE(is_kan_up_to(two.sset).pass);

  auto iso = nerve(walking_iso(), 3);
  CHECK(is_quasicategory_up_to(iso.sset).pass);
  CHECK(is_kan_up_to(iso.sset).pass);

  Rng rng(7);
  for (int trial = 0; trial < 8; ++trial) {
    CatPtr c = random_category(rng, 4, 9);
    auto n = nerve(c, 3);
    CHECK(is_quasicategory_up_to(n.sset).pass);
    CHECK(is_kan_up_to(n.sset).pass == is_groupoid(*c));
  }
}

TEST_CASE("isofibration checks on nerves of functors") {
  auto two = walking_arrow();
  auto iso = walking_iso();
  // identity is an isofibration
  SimplicialMap idm = nerve_map(identity_functor(two), 3);
  CHECK(validate_simplicial_map(idm).empty());
  CHECK(is_isofibration(idm).verdict == "pass");

  // the projection to the point is an isofibration
  SimplicialMap bang = nerve_map(bang_functor(iso), 3);
  CHECK(is_isofibration(bang).verdict == "pass");

  // the endpoint inclusion 1 → I is not: the isomorphism has no lift
  SimplicialMap incl = nerve_map(object_as_functor(iso, 0), 3);
  auto rep = is_isofibration(incl);
  CHECK(rep.verdict == "fail");
  REQUIRE_FALSE(rep.witnesses.empty());
  CHECK(rep.witnesses[0].code == "EquivalenceLiftFailure");
}

TEST_CASE("isofibration agrees with the categorical oracle") {
  Rng rng(31);
  int budget = 25;
  auto corpus = std::vector<CatPtr>{terminal_category(), walking_arrow(),
                                    walking_iso(), discrete(2)};
  for (CatPtr a : corpus)
    for (CatPtr b : corpus) {
      for (const Functor& f : all_functors(a, b)) {
        if (budget-- <= 0) return;
        auto verdict = is_isofibration(nerve_map(f, 3));
        REQUIRE(verdict.verdict != "undetermined");
        CHECK((verdict.verdict == "pass") == iso_lifting_oracle(f));
      }
    }
  (void)rng;
}

TEST_CASE("nerve-enriched categories validate and quotient to 2-categories") {
  std::vector<CatPtr> cats = {terminal_category(), walking_arrow()};
  SSetCategory m = nerve_enriched_category(cats, 2);
  CHECK(validate_sset_category(m).empty());
  auto h2 = homotopy_2category(m, 8);
  REQUIRE(h2.determined);
  CHECK(validate_2category(*h2.two_category).empty());
  // Same cell counts as the strict fragment of Cat on the same objects.
  auto frag = cat_fragment_2category(cats);
  CHECK(h2.two_category->num_objects() == frag.two_category->num_objects());
  CHECK(h2.two_category->num_one_cells() == frag.two_category->num_one_cells());
  CHECK(h2.two_category->num_two_cells() == frag.two_category->num_two_cells());
}

TEST_CASE("one-object trivial enriched category") {
  std::vector<CatPtr> cats = {terminal_category()};
  SSetCategory m = nerve_enriched_category(cats, 2);
  auto h2 = homotopy_2category(m, 8);
  REQUIRE(h2.determined);
  CHECK(h2.two_category->num_objects() == 1);
  CHECK(h2.two_category->num_one_cells() == 1);
  CHECK(h2.two_category->num_two_cells() == 1);
}

TEST_CASE("hN adjunction checks") {
  CHECK(check_hn_adjunction(terminal_category(), nerve(terminal_category(), 2).sset, 8)
            .empty());
  CHECK(check_hn_adjunction(walking_iso(), horn_two_one(), 8).empty());
  Rng rng(12);
  for (int trial = 0; trial < 8; ++trial) {
    CatPtr c = random_category(rng, 5, 12);
    CHECK(check_hn_adjunction(c, nerve(c, 2).sset, 8).empty());
  }
}
