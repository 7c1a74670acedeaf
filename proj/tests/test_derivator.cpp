#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "derlab/derivator.hpp"

using namespace derlab;

namespace {

CheckOptions small_options() {
  CheckOptions opt;
  opt.policy.size_bound = 2;
  opt.max_pairs = 60;
  return opt;
}

// Instance whose restriction to objects of the shape always reports a
// singleton identity: the underlying diagram functor collapses, so Der 2
// must fail.
class BrokenDer2 : public PrederivatorInstance {
 public:
  BrokenDer2() : inner_(represented_finset_instance()) {}
  std::string name() const override { return "broken-der2"; }
  CatPtr internal_shape(CatPtr shape) const override {
    return inner_->internal_shape(shape);
  }
  Functor internal_functor(const Functor& u) const override {
    return inner_->internal_functor(u);
  }
  NatTrans internal_nat_trans(const NatTrans& a) const override {
    return inner_->internal_nat_trans(a);
  }
  DiagramMorphism restrict_mor(const Functor&, const DiagramMorphism&) const override {
    FinSet one{{"*"}};
    FinSetDiagram d;
    d.shape = terminal_category();
    d.value = {one};
    d.action = {SetFunction::identity(one)};
    DiagramMorphism m;
    m.dom = d;
    m.cod = d;
    m.component = {SetFunction::identity(one)};
    return m;
  }

 private:
  InstancePtr inner_;
};

// Instance with a deliberately corrupted Lan unit.
class BrokenDer3 : public PrederivatorInstance {
 public:
  BrokenDer3() : inner_(represented_finset_instance()) {}
  std::string name() const override { return "broken-der3"; }
  CatPtr internal_shape(CatPtr shape) const override {
    return inner_->internal_shape(shape);
  }
  Functor internal_functor(const Functor& u) const override {
    return inner_->internal_functor(u);
  }
  NatTrans internal_nat_trans(const NatTrans& a) const override {
    return inner_->internal_nat_trans(a);
  }
  std::optional<LanResult> lan_witness(const Functor& u,
                                       const FinSetDiagram& x) const override {
    auto out = inner_->lan_witness(u, x);
    if (out)
      for (auto& c : out->unit.component)
        if (c.map.size() >= 2 && c.cod.size() >= 2) {
          c.map[0] = (c.map[0] + 1) % int(c.cod.size());
        }
    return out;
  }

 private:
  InstancePtr inner_;
};

}  // namespace

TEST_CASE("diagram enumeration counts on small shapes") {
  CorpusPolicy policy;
  CHECK(enumerate_diagrams(empty_category(), policy).objects.size() == 1);
  CHECK(enumerate_diagrams(terminal_category(), policy).objects.size() == 3);
  CHECK(enumerate_diagrams(walking_arrow(), policy).objects.size() == 11);
  CHECK(enumerate_diagrams(discrete(2), policy).objects.size() == 9);
  // Diagrams over the free iso are pairs of equinumerous sets with a chosen
  // bijection: 1 + 1 + 2 at bound 2.
  CHECK(enumerate_diagrams(walking_iso(), policy).objects.size() == 4);
  for (const auto& d : enumerate_diagrams(chain(3), policy).objects)
    CHECK(validate_diagram(d).empty());
}

TEST_CASE("sampled enumeration stays valid and deterministic") {
  CorpusPolicy policy;
  policy.max_exhaustive = 4;  // force sampling
  policy.sample_count = 12;
  auto shape = product(chain(3), walking_arrow()).category;
  auto a = enumerate_diagrams(shape, policy);
  CHECK_FALSE(a.exhaustive);
  CHECK(a.objects.size() >= 8);
  for (const auto& d : a.objects) CHECK(validate_diagram(d).empty());
  auto b = enumerate_diagrams(shape, policy);
  REQUIRE(a.objects.size() == b.objects.size());
  for (size_t i = 0; i < a.objects.size(); ++i) CHECK(a.objects[i] == b.objects[i]);
}

TEST_CASE("represented instance basics and shift") {
  InstancePtr rep = represented_finset_instance();
  auto two = walking_arrow();
  CHECK(*rep->internal_shape(two) == *two);

  InstancePtr sh = shift_instance(rep, two);
  // shift(D, 2).fiber(1) has the same corpus size as D.fiber(2)
  CorpusPolicy policy;
  auto base_over_two = rep->fiber_corpus(two, policy);
  auto shifted_over_one = sh->fiber_corpus(terminal_category(), policy);
  CHECK(base_over_two.objects.size() == shifted_over_one.objects.size());

  // shift by the point changes nothing up to count
  InstancePtr sh1 = shift_instance(rep, terminal_category());
  CHECK(sh1->fiber_corpus(two, policy).objects.size() ==
        base_over_two.objects.size());
}

TEST_CASE("underlying diagram of the represented instance is the identity") {
  InstancePtr rep = represented_finset_instance();
  CorpusPolicy policy;
  for (const auto& x : rep->fiber_corpus(walking_arrow(), policy).objects)
    CHECK(underlying_diagram(*rep, walking_arrow(), x) == x);
}

TEST_CASE("Der 1 passes on the represented instance") {
  InstancePtr rep = represented_finset_instance();
  auto opt = small_options();
  CHECK(check_der1(*rep, empty_category(), empty_category(), opt).passed());
  CHECK(check_der1(*rep, terminal_category(), terminal_category(), opt).passed());
  CHECK(check_der1(*rep, walking_arrow(), terminal_category(), opt).passed());
  CHECK(check_der1(*rep, walking_arrow(), discrete(2), opt).passed());
}

TEST_CASE("Der 2 passes on the represented instance and fails when broken") {
  InstancePtr rep = represented_finset_instance();
  auto opt = small_options();
  CHECK(check_der2(*rep, walking_arrow(), opt).passed());
  CHECK(check_der2(*rep, empty_category(), opt).passed());

  BrokenDer2 broken;
  auto rep2 = check_der2(broken, walking_arrow(), opt);
  CHECK(rep2.verdict == "fail");
  CHECK_FALSE(rep2.witnesses.empty());
}

TEST_CASE("Der 3 passes for endpoint inclusions and fails when corrupted") {
  InstancePtr rep = represented_finset_instance();
  auto opt = small_options();
  auto two = walking_arrow();
  for (int at : {0, 1})
    CHECK(check_der3(*rep, object_as_functor(two, at), opt).passed());
  CHECK(check_der3(*rep, bang_functor(two), opt).passed());

  BrokenDer3 broken;
  auto rep3 = check_der3(broken, object_as_functor(two, 0), opt);
  CHECK(rep3.verdict == "fail");
}

TEST_CASE("Der 4 mate is invertible and matches the colimit comparison") {
  InstancePtr rep = represented_finset_instance();
  auto opt = small_options();
  auto two = walking_arrow();
  Functor u = object_as_functor(two, 0);
  CHECK(check_der4(*rep, u, 1, opt).passed());

  // Oracle: the mate at X equals the canonical comparison
  // colim_{(u/k)} pr^*X → (Lan_u X)(k), class of ((j,h),e) ↦ LanX(h)(unit_j(e)).
  DiaSquare sq = der4_left_square(u, 1);
  CorpusPolicy policy;
  for (const auto& x : rep->fiber_corpus(terminal_category(), policy).objects) {
    LanResult l = lan(u, x);
    CommaResult cm = comma(u, object_as_functor(two, 1));
    ColimitResult col = colimit_finset(restrict_diagram(cm.proj_left, x));
    std::vector<int> expected;
    for (auto [i, e] : col.representative) {
      int j = cm.proj_left.obj_map[i];
      int h = cm.square.component[i];
      expected.push_back(l.extension.action[h].apply(l.unit.component[j].apply(e)));
    }
    DiagramMorphism mate = left_mate(*rep, sq, x);
    CHECK(mate.component[0].map == expected);
    CHECK(is_iso(mate));
  }
}

TEST_CASE("Der 5 passes on the represented instance for small shifts") {
  InstancePtr rep = represented_finset_instance();
  auto opt = small_options();
  CHECK(check_der5(rep, terminal_category(), opt).passed());
  CHECK(check_der5(rep, walking_arrow(), opt).passed());
}

TEST_CASE("Der checks survive a shift by the walking arrow") {
  InstancePtr rep = represented_finset_instance();
  InstancePtr sh = shift_instance(rep, walking_arrow());
  auto opt = small_options();
  auto two = walking_arrow();
  CHECK(check_der1(*sh, terminal_category(), terminal_category(), opt).passed());
  CHECK(check_der2(*sh, two, opt).passed());
  CHECK(check_der3(*sh, object_as_functor(two, 0), opt).passed());
  CHECK(check_der4(*sh, object_as_functor(two, 0), 1, opt).passed());
}

TEST_CASE("ShiftedView wraps non-represented instances") {
  auto broken = std::make_shared<BrokenDer2>();
  InstancePtr sh = shift_instance(broken, terminal_category());
  auto opt = small_options();
  // The corruption must survive the shift.
  auto rep2 = check_der2(*sh, walking_arrow(), opt);
  CHECK(rep2.verdict == "fail");
}
