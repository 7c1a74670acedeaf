#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "derlab/corpus.hpp"
#include "derlab/fincat.hpp"

using namespace derlab;

namespace {

bool has_code(const ValidationReport& r, const std::string& code) {
  for (const auto& v : r)
    if (v.code == code) return true;
  return false;
}

CatPtr broken_assoc_category() {
  // Three-object chain with one associativity-breaking entry: the composite
  // of the long arrow with an identity is redirected to a parallel spare
  // arrow.
  auto c = std::make_shared<FinCategory>();
  c->objects = {"x", "y", "z"};
  c->morphisms = {{"idx", 0, 0}, {"idy", 1, 1}, {"idz", 2, 2},
                  {"f", 0, 1},   {"g", 1, 2},   {"gf", 0, 2},
                  {"gf2", 0, 2}};
  c->identity = {0, 1, 2};
  c->init_tables();
  auto cc = [&](const char* g, const char* f, const char* gf) {
    c->set_compose(c->morphism_index(g), c->morphism_index(f),
                   c->morphism_index(gf));
  };
  cc("idx", "idx", "idx");
  cc("idy", "idy", "idy");
  cc("idz", "idz", "idz");
  cc("f", "idx", "f");
  cc("idy", "f", "f");
  cc("g", "idy", "g");
  cc("idz", "g", "g");
  cc("gf", "idx", "gf");
  cc("idz", "gf", "gf");
  cc("gf2", "idx", "gf2");
  cc("idz", "gf2", "gf");  // breaks the identity/associativity laws
  cc("g", "f", "gf");
  return c;
}

}  // namespace

TEST_CASE("validate_category accepts the terminal category") {
  CHECK(validate_category(*terminal_category()).empty());
  CHECK(validate_category(*empty_category()).empty());
  for (CatPtr c : poset_corpus3()) CHECK(validate_category(*c).empty());
  CHECK(validate_category(*walking_iso()).empty());
  CHECK(validate_category(*parallel_pair()).empty());
}

TEST_CASE("validate_category reports a deleted composite") {
  auto two = std::make_shared<FinCategory>(*walking_arrow());
  int id1 = two->identity[1];
  int f = -1;
  for (size_t m = 0; m < two->num_morphisms(); ++m)
    if (!two->is_identity(int(m))) f = int(m);
  two->set_compose(id1, f, -1);
  auto report = validate_category(*two);
  REQUIRE_FALSE(report.empty());
  CHECK(has_code(report, "MissingComposite"));
}

TEST_CASE("validate_category reports broken laws with witnesses") {
  auto report = validate_category(*broken_assoc_category());
  REQUIRE_FALSE(report.empty());
  CHECK((has_code(report, "AssociativityViolation") ||
         has_code(report, "IdentityViolation")));
}

TEST_CASE("opposite is an involution and preserves validity") {
  CHECK(*terminal_category() == opposite(*terminal_category()));
  auto two = walking_arrow();
  auto op = opposite(*two);
  CHECK(validate_category(op).empty());
  CHECK(op.morphisms[op.morphism_index("le(0,1)")].src == 1);
  Rng rng(7);
  for (int i = 0; i < 20; ++i) {
    CatPtr c = random_category(rng, 5, 12);
    REQUIRE(validate_category(*c).empty());
    CHECK(opposite(opposite(*c)) == *c);
    CHECK(validate_category(opposite(*c)).empty());
  }
}

TEST_CASE("product and coproduct") {
  auto two = walking_arrow();
  auto prod = product(two, terminal_category());
  CHECK(validate_category(*prod.category).empty());
  CHECK(isomorphic(prod.category, two));
  CHECK(validate_functor(prod.proj_left).empty());
  CHECK(validate_functor(prod.proj_right).empty());

  auto cop = coproduct(terminal_category(), terminal_category());
  CHECK(validate_category(*cop.category).empty());
  CHECK(isomorphic(cop.category, discrete(2)));

  auto sq = product(two, two);
  CHECK(sq.category->num_morphisms() == 9);
  CHECK(validate_category(*sq.category).empty());
}

TEST_CASE("pullback of identities and of disjoint images") {
  auto two = walking_arrow();
  auto idf = identity_functor(two);
  auto pb = pullback_cat(idf, idf);
  CHECK(validate_category(*pb.category).empty());
  CHECK(isomorphic(pb.category, two));

  auto d2 = discrete(2);
  Functor at0 = object_as_functor(d2, 0);
  Functor at1 = object_as_functor(d2, 1);
  auto empty = pullback_cat(at0, at1);
  CHECK(empty.category->num_objects() == 0);

  Functor bad = object_as_functor(walking_iso(), 0);
  CHECK_THROWS_AS(pullback_cat(at0, bad), Error);
}

TEST_CASE("comma categories of endpoint inclusions into the walking arrow") {
  auto two = walking_arrow();
  Functor u0 = object_as_functor(two, 0);
  Functor u1 = object_as_functor(two, 1);

  auto c01 = comma(u0, u1);
  CHECK(validate_category(*c01.category).empty());
  CHECK(isomorphic(c01.category, terminal_category()));

  auto c10 = comma(u1, u0);
  CHECK(c10.category->num_objects() == 0);

  auto id1 = identity_functor(terminal_category());
  CHECK(isomorphic(comma(id1, id1).category, terminal_category()));

  CHECK(validate_nat_trans(c01.square).empty());
  CHECK(validate_functor(c01.proj_left).empty());
  CHECK(validate_functor(c01.proj_right).empty());
}

TEST_CASE("comma agrees with the slice pullback") {
  // (u/b) as the pullback of u along the slice forgetful functor.
  for (CatPtr b_cat : {walking_arrow(), chain(3), walking_iso()}) {
    for (CatPtr a_cat : {terminal_category(), walking_arrow()}) {
      for (const Functor& u : all_functors(a_cat, b_cat)) {
        for (size_t b = 0; b < b_cat->num_objects(); ++b) {
          auto via_comma = comma(u, object_as_functor(b_cat, int(b)));
          auto sl = slice(b_cat, b_cat->objects[b]);
          auto via_pullback = pullback_cat(u, sl.forgetful);
          CHECK(isomorphic(via_comma.category, via_pullback.category));
        }
      }
    }
  }
}

TEST_CASE("slice of the walking arrow") {
  auto two = walking_arrow();
  auto sl = slice(two, "p1");
  CHECK(validate_category(*sl.category).empty());
  CHECK(sl.category->num_objects() == 2);  // id at 1 and the arrow
  CHECK(validate_functor(sl.forgetful).empty());
  CHECK(isomorphic(sl.category, walking_arrow()));
}

TEST_CASE("functor_properties flags") {
  auto two = walking_arrow();
  auto props_id = functor_properties(identity_functor(two));
  CHECK(props_id.smothering);
  CHECK(props_id.weakly_smothering);
  CHECK(props_id.faithful);

  // I → 𝟙 is smothering: surjective, full, conservative. It is even
  // faithful since I is thin.
  auto bang = bang_functor(walking_iso());
  auto props_bang = functor_properties(bang);
  CHECK(props_bang.smothering);
  CHECK(props_bang.faithful);
  CHECK_FALSE(functor_properties(bang_functor(parallel_pair())).faithful);

  auto incl = object_as_functor(two, 0);
  auto props_incl = functor_properties(incl);
  CHECK_FALSE(props_incl.surjective_on_objects);
  CHECK_FALSE(props_incl.smothering);
  CHECK_FALSE(props_incl.essentially_surjective);

  // 𝟙 → I at 0 is essentially surjective but misses object 1.
  auto into_iso = object_as_functor(walking_iso(), 0);
  auto props_iso = functor_properties(into_iso);
  CHECK(props_iso.essentially_surjective);
  CHECK_FALSE(props_iso.surjective_on_objects);
  CHECK(props_iso.weakly_smothering);
}

TEST_CASE("conservative functors compose") {
  Rng rng(11);
  for (int i = 0; i < 12; ++i) {
    CatPtr a = random_category(rng, 3, 8);
    CatPtr b = random_category(rng, 3, 8);
    auto fs = all_functors(a, b);
    if (fs.empty()) continue;
    for (const Functor& f : fs) {
      auto pf = functor_properties(f);
      if (!pf.conservative) continue;
      for (const Functor& g : all_functors(b, a)) {
        if (!functor_properties(g).conservative) continue;
        CHECK(functor_properties(compose_functors(g, f)).conservative);
      }
      break;  // one conservative f per pair keeps the loop small
    }
  }
}

TEST_CASE("nat_trans operations and interchange") {
  auto two = walking_arrow();
  auto idf = identity_functor(two);
  auto ida = identity_nat_trans(idf);
  CHECK(nat_trans_equal(vcompose(ida, ida), ida));
  CHECK(nat_trans_equal(hcompose(ida, ida),
                        identity_nat_trans(compose_functors(idf, idf))));

  // Middle-four interchange over the functor category [𝟚, chain(3)].
  auto c3 = chain(3);
  auto fs = all_functors(two, c3);
  int checked = 0;
  for (const Functor& f : fs)
    for (const Functor& g : fs)
      for (const Functor& h : fs) {
        for (const NatTrans& a : all_nat_trans(f, g))
          for (const NatTrans& b : all_nat_trans(g, h))
            for (const Functor& f2 : fs)
              for (const Functor& g2 : fs)
                for (const Functor& h2 : fs) {
                  (void)h2;
                  for (const NatTrans& a2 : all_nat_trans(f2, g2))
                    for (const NatTrans& b2 : all_nat_trans(g2, h2)) {
                      if (!(*a2.source.dom == *a.source.dom)) continue;
                      // (b2·a2) * (b·a) = (b2*b) · (a2*a) -- only when the
                      // horizontal composites are defined.
                      if (!(*a.source.cod == *a2.source.dom)) continue;
                      auto lhs = hcompose(vcompose(b2, a2), vcompose(b, a));
                      auto rhs = vcompose(hcompose(b2, b), hcompose(a2, a));
                      CHECK(nat_trans_equal(lhs, rhs));
                      if (++checked > 200) return;
                    }
                }
      }
}

TEST_CASE("whiskering boundary errors") {
  auto two = walking_arrow();
  auto ida = identity_nat_trans(identity_functor(two));
  Functor into_iso = object_as_functor(walking_iso(), 0);
  CHECK_THROWS_AS(whisker_pre(ida, into_iso), Error);
}

TEST_CASE("functor category of [𝟚, 𝟚]") {
  auto two = walking_arrow();
  auto fc = functor_category(two, two);
  CHECK(validate_category(*fc.category).empty());
  CHECK(fc.category->num_objects() == 3);  // const 0, const 1, id
  for (const auto& f : fc.objects) CHECK(validate_functor(f).empty());
  for (const auto& n : fc.morphisms) CHECK(validate_nat_trans(n).empty());
}

TEST_CASE("closure constructions stay valid on the poset corpus") {
  auto corpus = poset_corpus3();
  for (CatPtr a : corpus) {
    CHECK(validate_category(opposite(*a)).empty());
    for (CatPtr b : corpus) {
      CHECK(validate_category(*product(a, b).category).empty());
      CHECK(validate_category(*coproduct(a, b).category).empty());
    }
    for (size_t o = 0; o < a->num_objects(); ++o)
      CHECK(validate_category(*slice(a, a->objects[o]).category).empty());
  }
}
