#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "derlab/collage.hpp"
#include "derlab/corpus.hpp"
#include "derlab/derivator.hpp"

using namespace derlab;

namespace {

FinSet canonical_set(int n) {
  FinSet s;
  for (int i = 0; i < n; ++i) s.elems.push_back("x" + std::to_string(i));
  return s;
}

FinSetDiagram point_weight(int n) {
  FinSetDiagram d;
  d.shape = terminal_category();
  d.value = {canonical_set(n)};
  d.action = {SetFunction::identity(d.value[0])};
  return d;
}

// The representable weight A(a0, -) as a set diagram.
FinSetDiagram representable_weight(CatPtr a, int a0) {
  FinSetDiagram d;
  d.shape = a;
  for (size_t o = 0; o < a->num_objects(); ++o) {
    FinSet s;
    for (int m : a->hom(a0, int(o))) s.elems.push_back(a->morphisms[m].id);
    d.value.push_back(std::move(s));
  }
  for (size_t m = 0; m < a->num_morphisms(); ++m) {
    const Mor& mor = a->morphisms[m];
    SetFunction act{d.value[mor.src], d.value[mor.dst], {}};
    for (const auto& name : d.value[mor.src].elems) {
      int h = a->morphism_index(name);
      act.map.push_back(
          d.value[mor.dst].index_of(a->morphisms[a->compose(int(m), h)].id));
    }
    d.action.push_back(std::move(act));
  }
  return d;
}

}  // namespace

TEST_CASE("collage of a singleton weight on the point is the walking arrow") {
  auto coll = collage_weight(point_weight(1));
  CHECK(validate_category(*coll.category).empty());
  CHECK(isomorphic(coll.category, walking_arrow()));
  CHECK(coll.category->objects.back() == "●");

  auto empty_w = collage_weight(point_weight(0));
  CHECK(isomorphic(empty_w.category, discrete(2)));
}

TEST_CASE("collage of the representable weight on the walking arrow") {
  auto two = walking_arrow();
  auto w = representable_weight(two, 0);
  REQUIRE(validate_diagram(w).empty());
  auto coll = collage_weight(w);
  CHECK(validate_category(*coll.category).empty());
  CHECK(coll.category->num_objects() == 3);
  // chain ● → 0 → 1 with the composite forced by the weight action
  CHECK(isomorphic(coll.category, chain(3)));
}

TEST_CASE("collage of the identity cospan is the walking arrow") {
  auto one = terminal_category();
  auto idf = identity_functor(one);
  auto coll = collage_cospan(idf, idf);
  CHECK(validate_category(*coll.category).empty());
  CHECK(isomorphic(coll.category, walking_arrow()));
  Functor pi = pi_functor(idf, idf, coll);
  CHECK(validate_functor(pi).empty());
  CHECK(pi.cod->num_objects() == 1);
}

TEST_CASE("representable profunctor collage matches the cospan collage") {
  auto two = walking_arrow();
  for (int fa : {0, 1})
    for (int gb : {0, 1}) {
      Functor f = object_as_functor(two, fa);
      Functor g = object_as_functor(two, gb);
      auto p = representable_profunctor(f, g);
      CHECK(validate_profunctor(p).empty());
      auto via_prof = collage_profunctor(p);
      auto via_cospan = collage_cospan(f, g);
      CHECK(*via_prof.category == *via_cospan.category);
    }
}

TEST_CASE("pi functor validates on small cospans") {
  auto corpus = two_object_corpus();
  int budget = 40;
  for (CatPtr c : corpus)
    for (CatPtr a : corpus)
      for (CatPtr b : corpus) {
        if (budget <= 0) break;
        auto fs = all_functors(a, c);
        auto gs = all_functors(b, c);
        if (fs.empty() || gs.empty()) continue;
        --budget;
        auto coll = collage_cospan(fs[0], gs.back());
        CHECK(validate_category(*coll.category).empty());
        CHECK(validate_functor(pi_functor(fs[0], gs.back(), coll)).empty());
        CHECK(validate_functor(coll.include_left).empty());
        CHECK(validate_functor(coll.include_right).empty());
      }
}

TEST_CASE("collage idempotence") {
  auto one = terminal_category();
  auto two = walking_arrow();
  CHECK(idempotence_check(identity_functor(one), identity_functor(one)).empty());
  CHECK(idempotence_check(object_as_functor(two, 0), object_as_functor(two, 1))
            .empty());
  Rng rng(23);
  for (int trial = 0; trial < 12; ++trial) {
    CatPtr c = random_category(rng, 3, 8);
    CatPtr a = random_category(rng, 2, 5);
    CatPtr b = random_category(rng, 2, 5);
    auto fs = all_functors(a, c);
    auto gs = all_functors(b, c);
    if (fs.empty() || gs.empty()) continue;
    const Functor& f = fs[rng.below(uint32_t(fs.size()))];
    const Functor& g = gs[rng.below(uint32_t(gs.size()))];
    CHECK(idempotence_check(f, g).empty());
  }
}

TEST_CASE("weighted limit direct: Yoneda and products") {
  auto two = walking_arrow();
  // representable at 0: lim^W F ≅ F(0)
  auto w = representable_weight(two, 0);
  FinSetDiagram f;
  f.shape = two;
  f.value = {canonical_set(2), canonical_set(2)};
  f.action.resize(two->num_morphisms());
  for (size_t m = 0; m < two->num_morphisms(); ++m)
    f.action[m] = two->is_identity(int(m))
                      ? SetFunction::identity(f.value[two->morphisms[m].src])
                      : SetFunction{f.value[0], f.value[1], {1, 0}};
  REQUIRE(validate_diagram(f).empty());
  CHECK(weighted_limit_direct(w, f).set.size() == f.value[0].size());

  // constant singleton weight on the discrete pair: the product
  auto d2 = discrete(2);
  FinSetDiagram w2, f2;
  w2.shape = d2;
  w2.value = {canonical_set(1), canonical_set(1)};
  w2.action = {SetFunction::identity(w2.value[0]),
               SetFunction::identity(w2.value[1])};
  f2.shape = d2;
  f2.value = {canonical_set(2), canonical_set(3)};
  f2.action = {SetFunction::identity(f2.value[0]),
               SetFunction::identity(f2.value[1])};
  CHECK(weighted_limit_direct(w2, f2).set.size() == 6);

  // two-element weight on the point: the square
  auto w3 = point_weight(2);
  auto f3 = point_weight(3);
  CHECK(weighted_limit_direct(w3, f3).set.size() == 9);
}

TEST_CASE("weighted limit dual path agrees on small corpora") {
  InstancePtr rep = represented_finset_instance();
  CorpusPolicy policy;
  for (CatPtr shape : {terminal_category(), walking_arrow(), discrete(2)}) {
    auto ws = rep->fiber_corpus(shape, policy);
    for (const auto& w : ws.objects)
      for (const auto& f : ws.objects)
        CHECK(weighted_limit_dual_path_check(w, f).empty());
  }
}

TEST_CASE("weight morphism maps: identity, projection, empty weight") {
  auto f = point_weight(2);

  // alpha = id induces the identity
  auto w = point_weight(1);
  DiagramMorphism id_alpha = identity_morphism(w);
  SetFunction direct = weight_morphism_direct_map(id_alpha, f);
  for (size_t i = 0; i < direct.map.size(); ++i) CHECK(direct.map[i] == int(i));
  CHECK(weight_morphism_check(id_alpha, f).empty());

  // alpha : {*} → {*,*'} picking the first coordinate: the induced map
  // lim^{W'}F = F(*)^2 → F(*) = lim^W F is a projection.
  auto w2 = point_weight(2);
  DiagramMorphism pick;
  pick.dom = w;
  pick.cod = w2;
  pick.component = {SetFunction{w.value[0], w2.value[0], {0}}};
  REQUIRE(validate_diagram_morphism(pick).empty());
  SetFunction proj = weight_morphism_direct_map(pick, f);
  CHECK(proj.dom.size() == 4);
  CHECK(proj.cod.size() == 2);
  CHECK(weight_morphism_check(pick, f).empty());

  // alpha from the empty weight: the unique map to the singleton limit
  auto w0 = point_weight(0);
  DiagramMorphism from_empty;
  from_empty.dom = w0;
  from_empty.cod = w2;
  from_empty.component = {SetFunction{w0.value[0], w2.value[0], {}}};
  SetFunction bang = weight_morphism_direct_map(from_empty, f);
  CHECK(bang.cod.size() == 1);
  CHECK(weight_morphism_check(from_empty, f).empty());
}

TEST_CASE("weight morphism maps compose contravariantly") {
  auto f = point_weight(2);
  auto w1 = point_weight(1);
  auto w2 = point_weight(2);
  DiagramMorphism alpha;  // w1 → w2
  alpha.dom = w1;
  alpha.cod = w2;
  alpha.component = {SetFunction{w1.value[0], w2.value[0], {1}}};
  DiagramMorphism beta = identity_morphism(w2);
  beta.component[0].map = {1, 0};  // swap automorphism of the weight
  REQUIRE(validate_diagram_morphism(beta).empty());
  SetFunction via_composite = weight_morphism_direct_map(compose(beta, alpha), f);
  SetFunction step1 = weight_morphism_direct_map(beta, f);
  SetFunction step2 = weight_morphism_direct_map(alpha, f);
  CHECK(compose(step2, step1).map == via_composite.map);
}

TEST_CASE("exactness for identities and endpoint inclusions") {
  auto two = walking_arrow();
  auto idf = identity_functor(two);
  InstancePtr rep = represented_finset_instance();
  CorpusPolicy policy;
  auto corpus = rep->fiber_corpus(two, policy);
  for (const auto& x : corpus.objects)
    for (size_t b = 0; b < two->num_objects(); ++b) {
      CHECK(exactness_check(idf, int(b), x, true).verdict == "pass");
      CHECK(exactness_check(idf, int(b), x, false).verdict == "pass");
    }
  Functor at0 = object_as_functor(two, 0);
  auto points = rep->fiber_corpus(terminal_category(), policy);
  for (const auto& x : points.objects) {
    CHECK(exactness_check(at0, 1, x, true).verdict == "pass");
    CHECK(exactness_check(at0, 1, x, false).verdict == "pass");
    CHECK(exactness_cospan_check(at0, object_as_functor(two, 1), x).verdict ==
          "pass");
  }
}

TEST_CASE("category-valued weights: validation, collage, limits") {
  auto two = walking_arrow();
  CatDiagram w;
  w.shape = two;
  w.value = {discrete(1), discrete(1)};
  w.action.resize(two->num_morphisms());
  for (size_t m = 0; m < two->num_morphisms(); ++m) {
    const Mor& mor = two->morphisms[m];
    Functor a;
    a.dom = w.value[mor.src];
    a.cod = w.value[mor.dst];
    a.obj_map = {0};
    a.mor_map = {0};
    w.action[m] = a;
  }
  CHECK(validate_cat_diagram(w).empty());

  auto coll2 = collage_cat_weight(w);
  CHECK(validate_2category(*coll2).empty());

  CatDiagram f;
  f.shape = two;
  f.value = {walking_iso(), walking_arrow()};
  f.action.resize(two->num_morphisms());
  for (size_t m = 0; m < two->num_morphisms(); ++m) {
    const Mor& mor = two->morphisms[m];
    if (two->is_identity(int(m)))
      f.action[m] = identity_functor(f.value[mor.src]);
    else
      f.action[m] = all_functors(f.value[0], f.value[1])[0];
  }
  REQUIRE(validate_cat_diagram(f).empty());
  CatPtr lim = cat_weighted_limit_direct(w, f);
  CHECK(validate_category(*lim).empty());

  // constant singleton weight on the point shape gives the value back
  CatDiagram wp, fp;
  wp.shape = terminal_category();
  wp.value = {discrete(1)};
  wp.action = {identity_functor(wp.value[0])};
  fp.shape = terminal_category();
  fp.value = {walking_iso()};
  fp.action = {identity_functor(fp.value[0])};
  CatPtr lim_p = cat_weighted_limit_direct(wp, fp);
  CHECK(isomorphic(lim_p, walking_iso()));
}
