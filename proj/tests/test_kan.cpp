#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "derlab/corpus.hpp"
#include "derlab/kan.hpp"

using namespace derlab;

namespace {

FinSet canonical_set(int n) {
  FinSet s;
  for (int i = 0; i < n; ++i) s.elems.push_back("x" + std::to_string(i));
  return s;
}

FinSetDiagram point_diagram(int n) {
  FinSetDiagram d;
  d.shape = terminal_category();
  d.value = {canonical_set(n)};
  d.action = {SetFunction::identity(d.value[0])};
  return d;
}

// All diagrams over the walking arrow with value sets of size ≤ bound.
std::vector<FinSetDiagram> arrow_corpus(int bound) {
  std::vector<FinSetDiagram> out;
  auto two = walking_arrow();
  for (int a = 0; a <= bound; ++a)
    for (int b = 0; b <= bound; ++b) {
      size_t count = 1;
      for (int i = 0; i < a; ++i) count *= size_t(b);
      if (a > 0 && b == 0) count = 0;
      for (size_t code = 0; code < count; ++code) {
        FinSetDiagram d;
        d.shape = two;
        d.value = {canonical_set(a), canonical_set(b)};
        std::vector<int> f(a);
        size_t rest = code;
        for (int i = 0; i < a; ++i) {
          f[i] = int(rest % size_t(b));
          rest /= size_t(b);
        }
        d.action.resize(two->num_morphisms());
        for (size_t m = 0; m < two->num_morphisms(); ++m) {
          if (two->is_identity(int(m)))
            d.action[m] = SetFunction::identity(d.value[two->morphisms[m].src]);
          else
            d.action[m] = SetFunction{d.value[0], d.value[1], f};
        }
        out.push_back(std::move(d));
      }
      if (count == 0 && a == 0) {
        FinSetDiagram d;
        d.shape = two;
        d.value = {canonical_set(0), canonical_set(b)};
        d.action.resize(two->num_morphisms());
        for (size_t m = 0; m < two->num_morphisms(); ++m) {
          if (two->is_identity(int(m)))
            d.action[m] = SetFunction::identity(d.value[two->morphisms[m].src]);
          else
            d.action[m] = SetFunction{d.value[0], d.value[1], {}};
        }
        out.push_back(std::move(d));
      }
    }
  return out;
}

}  // namespace

TEST_CASE("lan along the identity is the identity") {
  auto two = walking_arrow();
  for (const FinSetDiagram& x : arrow_corpus(2)) {
    LanResult l = lan(identity_functor(two), x);
    CHECK(validate_diagram(l.extension).empty());
    CHECK(is_iso(l.unit));
    RanResult r = ran(identity_functor(two), x);
    CHECK(is_iso(r.counit));
  }
}

TEST_CASE("lan along the endpoint inclusions of the walking arrow") {
  auto two = walking_arrow();
  auto x = point_diagram(2);

  // u at 0: Lan X is (S → S via id).
  LanResult l0 = lan(object_as_functor(two, 0), x);
  CHECK(validate_diagram(l0.extension).empty());
  CHECK(l0.extension.value[0].size() == 2);
  CHECK(l0.extension.value[1].size() == 2);
  for (size_t m = 0; m < two->num_morphisms(); ++m)
    if (!two->is_identity(int(m)))
      CHECK(l0.extension.action[m].is_bijection());
  CHECK(is_iso(l0.unit));

  // u at 1: the value at 0 is the empty colimit.
  LanResult l1 = lan(object_as_functor(two, 1), x);
  CHECK(l1.extension.value[0].size() == 0);
  CHECK(l1.extension.value[1].size() == 2);
}

TEST_CASE("ran along the endpoint inclusions of the walking arrow") {
  auto two = walking_arrow();
  auto x = point_diagram(2);

  // u at 0: the value at 1 is the empty limit, a singleton.
  RanResult r0 = ran(object_as_functor(two, 0), x);
  CHECK(validate_diagram(r0.extension).empty());
  CHECK(r0.extension.value[0].size() == 2);
  CHECK(r0.extension.value[1].size() == 1);
  CHECK(is_iso(r0.counit));

  // u at 1: Ran X is S → S through the unique arrow.
  RanResult r1 = ran(object_as_functor(two, 1), x);
  CHECK(r1.extension.value[0].size() == 2);
  CHECK(r1.extension.value[1].size() == 2);
}

TEST_CASE("lan ⊣ restriction exhaustively over the endpoint inclusion") {
  auto two = walking_arrow();
  std::vector<FinSetDiagram> over_point = {point_diagram(0), point_diagram(1),
                                           point_diagram(2)};
  auto over_arrow = arrow_corpus(2);
  for (int at : {0, 1}) {
    Functor u = object_as_functor(two, at);
    CHECK(adjunction_check_lan(u, over_point, over_arrow).empty());
    CHECK(adjunction_check_ran(u, over_point, over_arrow).empty());
  }
}

TEST_CASE("adjunction check between small posets") {
  // u: the unique functor 𝟚 → 𝟙 exercises non-full shapes on both sides.
  auto two = walking_arrow();
  Functor u = bang_functor(two);
  std::vector<FinSetDiagram> over_point = {point_diagram(0), point_diagram(1),
                                           point_diagram(2)};
  CHECK(adjunction_check_lan(u, arrow_corpus(2), over_point).empty());
  CHECK(adjunction_check_ran(u, arrow_corpus(2), over_point).empty());
}

TEST_CASE("corrupted unit breaks the triangle check") {
  auto two = walking_arrow();
  Functor u = object_as_functor(two, 0);
  auto x = point_diagram(2);
  LanResult l = lan(u, x);
  // Corrupt: swap the unit component values.
  REQUIRE(l.unit.component[0].map.size() == 2);
  std::swap(l.unit.component[0].map[0], l.unit.component[0].map[1]);
  // Triangle 1 with the corrupted unit: counit ∘ Lan(unit') ≠ id.
  FinSetDiagram u_lan = restrict_diagram(u, l.extension);
  DiagramMorphism counit =
      lan_transpose(u, u_lan, l.extension, identity_morphism(u_lan));
  DiagramMorphism lan_unit = lan_on_morphism(u, l.unit);
  // Lan(unit') now differs from Lan(unit); the composite is a non-identity
  // automorphism.
  CHECK_FALSE(compose(counit, lan_unit) == identity_morphism(l.extension));
}

TEST_CASE("fully faithful inclusions have invertible units") {
  auto two = walking_arrow();
  Functor incl = object_as_functor(two, 0);  // fully faithful
  for (int n : {0, 1, 2}) {
    LanResult l = lan(incl, point_diagram(n));
    CHECK(is_iso(l.unit));
  }
  // The bang 𝟚 → 𝟙 is not full; its unit fails on a witness diagram.
  Functor bang = bang_functor(two);
  bool found_failure = false;
  for (const FinSetDiagram& x : arrow_corpus(2)) {
    LanResult l = lan(bang, x);
    if (!is_iso(l.unit)) found_failure = true;
  }
  CHECK(found_failure);
}

TEST_CASE("lan and ran are functorial on morphisms") {
  auto two = walking_arrow();
  Functor u = object_as_functor(two, 0);
  auto corpus_j = std::vector<FinSetDiagram>{point_diagram(1), point_diagram(2)};
  for (const auto& x : corpus_j)
    for (const auto& y : corpus_j)
      for (const auto& f : diagram_homs(x, y)) {
        DiagramMorphism lf = lan_on_morphism(u, f);
        CHECK(validate_diagram_morphism(lf).empty());
        DiagramMorphism rf = ran_on_morphism(u, f);
        CHECK(validate_diagram_morphism(rf).empty());
        // identity is preserved
        if (f == identity_morphism(x)) {
          CHECK(lf == identity_morphism(lan(u, x).extension));
          CHECK(rf == identity_morphism(ran(u, x).extension));
        }
      }
}
