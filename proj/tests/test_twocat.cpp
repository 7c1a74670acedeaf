#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "derlab/corpus.hpp"
#include "derlab/twocat.hpp"

using namespace derlab;

TEST_CASE("small 2-categories validate") {
  CHECK(validate_2category(*two_category_from_category(terminal_category())).empty());
  CHECK(validate_2category(*two_category_from_category(parallel_pair())).empty());
  auto frag = cat_fragment_2category({terminal_category(), walking_iso()});
  CHECK(validate_2category(*frag.two_category).empty());
}

TEST_CASE("counterexample fixture validates") {
  auto fx = counterexample_fixture();
  CHECK(validate_2category(*fx.walking_pair).empty());
  CHECK(validate_2functor(fx.f).empty());
  CHECK(validate_2functor(fx.g).empty());
  CHECK(validate_pseudonatural(fx.alpha).empty());
  CHECK(is_two_natural(fx.alpha));
  // Both components are equivalences (0 : 1 → I and the constant at 0).
  const Fin2Category& amb = *fx.fragment.two_category;
  for (int c : fx.alpha.component) CHECK(is_equivalence_1cell(amb, c).has_value());
}

TEST_CASE("pseudonatural validation flags corrupted naturality cells") {
  auto fx = counterexample_fixture();
  const Fin2Category& amb = *fx.fragment.two_category;
  Pseudonatural broken = fx.alpha;
  broken.naturality[2] = (broken.naturality[2] + 1) % int(amb.num_two_cells());
  CHECK_FALSE(validate_pseudonatural(broken).empty());
}

TEST_CASE("equivalence search on 1-cells") {
  auto frag = cat_fragment_2category({terminal_category(), walking_arrow()});
  const Fin2Category& amb = *frag.two_category;
  for (size_t o = 0; o < amb.num_objects(); ++o)
    CHECK(is_equivalence_1cell(amb, amb.one_identity[o]).has_value());
  // the inclusion 1 → 2 at 0 is not an equivalence
  Functor incl = object_as_functor(walking_arrow(), 0);
  int idx = -1;
  for (size_t i = 0; i < frag.one_cells.size(); ++i)
    if (functor_equal(frag.one_cells[i], incl)) idx = int(i);
  REQUIRE(idx >= 0);
  CHECK_FALSE(is_equivalence_1cell(amb, idx).has_value());
}

TEST_CASE("the counterexample has no 2-natural quasi-inverse") {
  auto fx = counterexample_fixture();
  CHECK_FALSE(exhaustive_2natural_inverse_search(fx.alpha).has_value());
}

TEST_CASE("identity pseudonaturals invert strictly") {
  auto fx = counterexample_fixture();
  Pseudonatural id_f = identity_pseudonatural(fx.f);
  auto found = exhaustive_2natural_inverse_search(id_f);
  REQUIRE(found.has_value());
  CHECK(is_two_natural(*found));
}

TEST_CASE("pointwise quasi-inverse of the counterexample validates") {
  auto fx = counterexample_fixture();
  QuasiInverseResult q = pointwise_quasi_inverse(fx.alpha);
  CHECK(validate_pseudonatural(q.inverse).empty());
  CHECK(validate_modification(q.counit_mod).empty());
  CHECK(validate_modification(q.unit_mod).empty());
  const Fin2Category& amb = *fx.fragment.two_category;
  for (int t : q.counit_mod.component) CHECK(amb.two_is_iso(t));
  for (int t : q.unit_mod.component) CHECK(amb.two_is_iso(t));
  // The quasi-inverse is genuinely pseudo: some naturality cell is not an
  // identity.
  bool non_identity = false;
  for (int t : q.inverse.naturality)
    if (!amb.is_two_identity(t)) non_identity = true;
  CHECK(non_identity);
}

TEST_CASE("pointwise quasi-inverse rejects non-equivalences") {
  auto frag = cat_fragment_2category({terminal_category(), walking_arrow()});
  TwoCatPtr dom = two_category_from_category(terminal_category());
  const Fin2Category& amb = *frag.two_category;
  Functor incl = object_as_functor(walking_arrow(), 0);
  int idx = -1;
  for (size_t i = 0; i < frag.one_cells.size(); ++i)
    if (functor_equal(frag.one_cells[i], incl)) idx = int(i);
  TwoFunctor pick_one;
  pick_one.dom = dom;
  pick_one.cod = frag.two_category;
  pick_one.obj_map = {0};
  pick_one.one_map = {amb.one_identity[0]};
  pick_one.two_map = {amb.two_identity[amb.one_identity[0]]};
  TwoFunctor pick_two = pick_one;
  pick_two.obj_map = {1};
  pick_two.one_map = {amb.one_identity[1]};
  pick_two.two_map = {amb.two_identity[amb.one_identity[1]]};
  Pseudonatural alpha;
  alpha.source = pick_one;
  alpha.target = pick_two;
  alpha.component = {idx};
  alpha.naturality = {amb.two_identity[idx]};
  REQUIRE(validate_pseudonatural(alpha).empty());
  CHECK_THROWS_AS(pointwise_quasi_inverse(alpha), Error);
}

TEST_CASE("quotient T collapses invertible 2-cells") {
  auto one = two_category_from_category(terminal_category());
  auto t1 = quotient_T(*one);
  CHECK(validate_category(*t1.category).empty());
  CHECK(isomorphic(t1.category, terminal_category()));

  // discrete 2-category on a category: T gives the category back
  auto pp = two_category_from_category(parallel_pair());
  auto t2 = quotient_T(*pp);
  CHECK(isomorphic(t2.category, parallel_pair()));

  // in the fragment of 1 and I the two endpoint inclusions are isomorphic
  auto frag = cat_fragment_2category({terminal_category(), walking_iso()});
  auto t3 = quotient_T(*frag.two_category);
  CHECK(validate_category(*t3.category).empty());
  Functor i0 = object_as_functor(walking_iso(), 0);
  Functor i1 = object_as_functor(walking_iso(), 1);
  int a = -1, b = -1;
  for (size_t i = 0; i < frag.one_cells.size(); ++i) {
    if (functor_equal(frag.one_cells[i], i0)) a = int(i);
    if (functor_equal(frag.one_cells[i], i1)) b = int(i);
  }
  CHECK(t3.class_of_one_cell[a] == t3.class_of_one_cell[b]);
}

TEST_CASE("smothering 2-functors") {
  auto frag = cat_fragment_2category({terminal_category(), walking_iso()});
  auto rec = is_smothering_2functor(identity_2functor(frag.two_category));
  CHECK(rec.smothering);
}

TEST_CASE("strict adjunctions and mates in the fragment of 1 and I") {
  auto frag = cat_fragment_2category({terminal_category(), walking_iso()});
  const Fin2Category& amb = *frag.two_category;
  auto cell = [&](const Functor& f) {
    for (size_t i = 0; i < frag.one_cells.size(); ++i)
      if (functor_equal(frag.one_cells[i], f)) return int(i);
    return -1;
  };
  int incl0 = cell(object_as_functor(walking_iso(), 0));
  int bang = cell(bang_functor(walking_iso()));
  REQUIRE(incl0 >= 0);
  REQUIRE(bang >= 0);

  auto two_cell_between = [&](int f, int g) {
    auto ts = amb.two_hom(f, g);
    REQUIRE(ts.size() == 1);
    return ts[0];
  };
  AdjunctionWitness2 bang_adj{bang, incl0,
                              two_cell_between(amb.one_identity[1],
                                               amb.compose_one(incl0, bang)),
                              two_cell_between(amb.compose_one(bang, incl0),
                                               amb.one_identity[0])};
  CHECK(validate_adjunction2(amb, bang_adj).empty());

  AdjunctionWitness2 incl_adj{incl0, bang,
                              two_cell_between(amb.one_identity[0],
                                               amb.compose_one(bang, incl0)),
                              two_cell_between(amb.compose_one(incl0, bang),
                                               amb.one_identity[1])};
  CHECK(validate_adjunction2(amb, incl_adj).empty());

  // Mate of the trivial square is the identity on the left adjoint.
  TwoSquare trivial{bang, amb.one_identity[1], amb.one_identity[0], bang,
                    amb.two_identity[bang]};
  CHECK(mate_strict(amb, trivial, incl_adj, incl_adj) == amb.two_identity[incl0]);

  // Vertical pasting: the mate of a stacked square equals the pasting of the
  // mates.
  int sigma = -1;
  {
    Functor swap;
    swap.dom = walking_iso();
    swap.cod = walking_iso();
    swap.obj_map = {1, 0};
    swap.mor_map.resize(walking_iso()->num_morphisms());
    for (size_t m = 0; m < walking_iso()->num_morphisms(); ++m) {
      const Mor& mor = walking_iso()->morphisms[m];
      swap.mor_map[m] = walking_iso()->hom(1 - mor.src, 1 - mor.dst)[0];
    }
    sigma = cell(swap);
  }
  REQUIRE(sigma >= 0);
  TwoSquare sq1{bang, sigma, amb.one_identity[0], bang, amb.two_identity[bang]};
  TwoSquare sq2{bang, amb.one_identity[1], amb.one_identity[0], bang,
                amb.two_identity[bang]};
  TwoSquare total{bang, sigma, amb.one_identity[0], bang, amb.two_identity[bang]};
  int m1 = mate_strict(amb, sq1, incl_adj, incl_adj);
  int m2 = mate_strict(amb, sq2, incl_adj, incl_adj);
  int m_total = mate_strict(amb, total, incl_adj, incl_adj);
  int pasted = amb.vcompose(amb.whisker_post(sq2.left, m1),
                            amb.whisker_pre(m2, sq1.right));
  CHECK(m_total == pasted);
}

TEST_CASE("comma smothering comparison for identities is an isomorphism") {
  auto one = terminal_category();
  auto idf = identity_functor(one);
  for (CatPtr y : {terminal_category(), walking_arrow(), empty_category()}) {
    auto res = comma_smothering_check(y, idf, idf);
    CHECK(res.properties.smothering);
    CHECK(validate_functor(res.comparison).empty());
  }
}

TEST_CASE("comma smothering for the endpoint cospan of the walking arrow") {
  auto two = walking_arrow();
  Functor f = object_as_functor(two, 0);
  Functor g = object_as_functor(two, 1);
  auto res = comma_smothering_check(two, f, g);
  CHECK(validate_functor(res.comparison).empty());
  CHECK(res.properties.smothering);
}
