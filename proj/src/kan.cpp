#include "derlab/kan.hpp"

#include "derlab/corpus.hpp"

namespace derlab {

namespace {

int comma_object_at(const CommaResult& cm, int j, int h, bool left_is_j) {
  const auto& obj_proj = left_is_j ? cm.proj_left : cm.proj_right;
  for (size_t i = 0; i < cm.category->num_objects(); ++i)
    if (obj_proj.obj_map[i] == j && cm.square.component[i] == h) return int(i);
  return -1;
}

int find_limit_element(const LimitResult& lim, const std::vector<int>& family) {
  for (size_t l = 0; l < lim.set.size(); ++l) {
    bool match = true;
    for (size_t o = 0; o < family.size() && match; ++o)
      if (lim.projections[o].apply(int(l)) != family[o]) match = false;
    if (match) return int(l);
  }
  return -1;
}

std::string memo_key(const FinSetDiagram& d) {
  std::string s;
  for (const auto& v : d.value) {
    for (const auto& e : v.elems) s += e + ",";
    s += "|";
  }
  s += "#";
  for (const auto& a : d.action) {
    for (int v : a.map) s += std::to_string(v) + ",";
    s += ";";
  }
  return s;
}

constexpr size_t kMemoCap = 1024;

}  // namespace

// ---- LanContext -------------------------------------------------------------

LanContext::LanContext(const Functor& u) : u_(u) {
  for (size_t k = 0; k < u.cod->num_objects(); ++k)
    commas_.push_back(comma(u, object_as_functor(u.cod, int(k))));
}

const LanContext::Computed& LanContext::computed(const FinSetDiagram& x) const {
  std::string key = memo_key(x);
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;
  if (memo_.size() > kMemoCap) memo_.clear();
  const FinCategory& k = *u_.cod;
  Computed c;
  LanResult& out = c.result;
  out.extension.shape = u_.cod;
  for (size_t ko = 0; ko < k.num_objects(); ++ko) {
    c.colimits.push_back(colimit_finset(restrict_diagram(commas_[ko].proj_left, x)));
    out.extension.value.push_back(c.colimits.back().set);
  }
  for (size_t m = 0; m < k.num_morphisms(); ++m) {
    const Mor& g = k.morphisms[m];
    SetFunction act;
    act.dom = out.extension.value[g.src];
    act.cod = out.extension.value[g.dst];
    for (const auto& [i, e] : c.colimits[g.src].representative) {
      int j = commas_[g.src].proj_left.obj_map[i];
      int h = commas_[g.src].square.component[i];
      int target = comma_object_at(commas_[g.dst], j, k.compose(int(m), h), true);
      act.map.push_back(c.colimits[g.dst].injections[target].apply(e));
    }
    out.extension.action.push_back(std::move(act));
  }
  out.unit.dom = x;
  out.unit.cod = restrict_diagram(u_, out.extension);
  for (size_t j = 0; j < u_.dom->num_objects(); ++j) {
    int uj = u_.obj_map[j];
    int i = comma_object_at(commas_[uj], int(j), k.identity[uj], true);
    out.unit.component.push_back(c.colimits[uj].injections[i]);
  }
  return memo_.emplace(std::move(key), std::move(c)).first->second;
}

const LanResult& LanContext::apply(const FinSetDiagram& x) const {
  return computed(x).result;
}

DiagramMorphism LanContext::transpose(const FinSetDiagram& x, const FinSetDiagram& y,
                                      const DiagramMorphism& phi) const {
  const Computed& c = computed(x);
  DiagramMorphism out;
  out.dom = c.result.extension;
  out.cod = y;
  for (size_t ko = 0; ko < u_.cod->num_objects(); ++ko) {
    SetFunction f;
    f.dom = c.result.extension.value[ko];
    f.cod = y.value[ko];
    for (const auto& [i, e] : c.colimits[ko].representative) {
      int j = commas_[ko].proj_left.obj_map[i];
      int h = commas_[ko].square.component[i];
      f.map.push_back(y.action[h].apply(phi.component[j].apply(e)));
    }
    out.component.push_back(std::move(f));
  }
  return out;
}

DiagramMorphism LanContext::on_morphism(const DiagramMorphism& f) const {
  LanResult target = apply(f.cod);  // copy: the memo may move under us
  return transpose(f.dom, target.extension, compose(target.unit, f));
}

// ---- RanContext -------------------------------------------------------------

RanContext::RanContext(const Functor& u) : u_(u) {
  for (size_t k = 0; k < u.cod->num_objects(); ++k)
    commas_.push_back(comma(object_as_functor(u.cod, int(k)), u));
}

const RanContext::Computed& RanContext::computed(const FinSetDiagram& x) const {
  std::string key = memo_key(x);
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;
  if (memo_.size() > kMemoCap) memo_.clear();
  const FinCategory& k = *u_.cod;
  Computed c;
  RanResult& out = c.result;
  out.extension.shape = u_.cod;
  for (size_t ko = 0; ko < k.num_objects(); ++ko) {
    c.limits.push_back(limit_finset(restrict_diagram(commas_[ko].proj_right, x)));
    out.extension.value.push_back(c.limits.back().set);
  }
  for (size_t m = 0; m < k.num_morphisms(); ++m) {
    const Mor& g = k.morphisms[m];
    SetFunction act;
    act.dom = out.extension.value[g.src];
    act.cod = out.extension.value[g.dst];
    const auto& dst_cm = commas_[g.dst];
    for (size_t e = 0; e < act.dom.size(); ++e) {
      // The image family at comma object (j, h : g.dst → u j) is the source
      // family at (j, h∘g).
      std::vector<int> family;
      for (size_t i = 0; i < dst_cm.category->num_objects(); ++i) {
        int j = dst_cm.proj_right.obj_map[i];
        int h = dst_cm.square.component[i];
        int src_obj = comma_object_at(commas_[g.src], j, k.compose(h, int(m)), false);
        family.push_back(c.limits[g.src].projections[src_obj].apply(int(e)));
      }
      act.map.push_back(find_limit_element(c.limits[g.dst], family));
    }
    out.extension.action.push_back(std::move(act));
  }
  out.counit.dom = restrict_diagram(u_, out.extension);
  out.counit.cod = x;
  for (size_t j = 0; j < u_.dom->num_objects(); ++j) {
    int uj = u_.obj_map[j];
    int i = comma_object_at(commas_[uj], int(j), k.identity[uj], false);
    out.counit.component.push_back(c.limits[uj].projections[i]);
  }
  return memo_.emplace(std::move(key), std::move(c)).first->second;
}

const RanResult& RanContext::apply(const FinSetDiagram& x) const {
  return computed(x).result;
}

DiagramMorphism RanContext::transpose(const FinSetDiagram& x, const FinSetDiagram& y,
                                      const DiagramMorphism& psi) const {
  const Computed& c = computed(x);
  DiagramMorphism out;
  out.dom = y;
  out.cod = c.result.extension;
  for (size_t ko = 0; ko < u_.cod->num_objects(); ++ko) {
    SetFunction f;
    f.dom = y.value[ko];
    f.cod = c.result.extension.value[ko];
    for (size_t e = 0; e < f.dom.size(); ++e) {
      std::vector<int> family;
      for (size_t i = 0; i < commas_[ko].category->num_objects(); ++i) {
        int j = commas_[ko].proj_right.obj_map[i];
        int h = commas_[ko].square.component[i];
        family.push_back(psi.component[j].apply(y.action[h].apply(int(e))));
      }
      f.map.push_back(find_limit_element(c.limits[ko], family));
    }
    out.component.push_back(std::move(f));
  }
  return out;
}

DiagramMorphism RanContext::on_morphism(const DiagramMorphism& f) const {
  RanResult source = apply(f.dom);  // copy: the memo may move under us
  return transpose(f.cod, source.extension, compose(f, source.counit));
}

// ---- Free-function wrappers -------------------------------------------------

LanResult lan(const Functor& u, const FinSetDiagram& x) {
  return LanContext(u).apply(x);
}

RanResult ran(const Functor& u, const FinSetDiagram& x) {
  return RanContext(u).apply(x);
}

DiagramMorphism lan_transpose(const Functor& u, const FinSetDiagram& x,
                              const FinSetDiagram& y, const DiagramMorphism& phi) {
  return LanContext(u).transpose(x, y, phi);
}

DiagramMorphism ran_transpose(const Functor& u, const FinSetDiagram& x,
                              const FinSetDiagram& y, const DiagramMorphism& psi) {
  return RanContext(u).transpose(x, y, psi);
}

DiagramMorphism lan_on_morphism(const Functor& u, const DiagramMorphism& f) {
  return LanContext(u).on_morphism(f);
}

DiagramMorphism ran_on_morphism(const Functor& u, const DiagramMorphism& f) {
  return RanContext(u).on_morphism(f);
}

// ---- Adjunction checks -------------------------------------------------------

namespace {

std::string diagram_tag(const FinSetDiagram& d) {
  std::string s;
  for (const auto& v : d.value) s += std::to_string(v.size()) + ".";
  return s;
}

}  // namespace

ValidationReport adjunction_check_lan(const Functor& u,
                                      const std::vector<FinSetDiagram>& over_j,
                                      const std::vector<FinSetDiagram>& over_k) {
  ValidationReport report;
  LanContext cx(u);
  for (const FinSetDiagram& x : over_j) {
    LanResult l = cx.apply(x);
    if (!validate_diagram(l.extension).empty() ||
        !validate_diagram_morphism(l.unit).empty()) {
      report.push_back({"TriangleFailure", "invalid lan data at X=" + diagram_tag(x)});
      continue;
    }
    // Triangle 1: counit_{Lan X} ∘ Lan(unit_X) = id.
    FinSetDiagram u_lan = restrict_diagram(u, l.extension);
    DiagramMorphism counit =
        cx.transpose(u_lan, l.extension, identity_morphism(u_lan));
    DiagramMorphism lan_unit = cx.on_morphism(l.unit);
    if (!(compose(counit, lan_unit) == identity_morphism(l.extension)))
      report.push_back({"TriangleFailure", "triangle 1 at X=" + diagram_tag(x)});
  }
  for (const FinSetDiagram& y : over_k) {
    // Triangle 2: u^*(counit_Y) ∘ unit_{u^*Y} = id.
    FinSetDiagram uy = restrict_diagram(u, y);
    LanResult l = cx.apply(uy);
    DiagramMorphism counit_y = cx.transpose(uy, y, identity_morphism(uy));
    if (!(compose(restrict_morphism(u, counit_y), l.unit) == identity_morphism(uy)))
      report.push_back({"TriangleFailure", "triangle 2 at Y=" + diagram_tag(y)});
  }
  // Hom bijection Hom_K(Lan X, Y) ≅ Hom_J(X, u^*Y) via phi ↦ u^*phi ∘ unit.
  for (const FinSetDiagram& x : over_j)
    for (const FinSetDiagram& y : over_k) {
      LanResult l = cx.apply(x);
      FinSetDiagram uy = restrict_diagram(u, y);
      auto upper = diagram_homs(l.extension, y);
      auto lower = diagram_homs(x, uy);
      if (upper.size() != lower.size()) {
        report.push_back({"HomBijectionFailure", "cardinalities at X=" +
                                                     diagram_tag(x) + " Y=" +
                                                     diagram_tag(y)});
        continue;
      }
      std::vector<bool> hit(lower.size(), false);
      for (const auto& phi : upper) {
        DiagramMorphism image = compose(restrict_morphism(u, phi), l.unit);
        int at = -1;
        for (size_t i = 0; i < lower.size(); ++i)
          if (lower[i] == image) at = int(i);
        if (at < 0 || hit[at]) {
          report.push_back({"HomBijectionFailure",
                            "transpose not bijective at X=" + diagram_tag(x) +
                                " Y=" + diagram_tag(y)});
          break;
        }
        hit[at] = true;
        // Transpose roundtrip: the inverse bijection is the Lan transpose.
        DiagramMorphism back = cx.transpose(x, y, image);
        if (!(back == phi))
          report.push_back({"NaturalityFailure", "transpose roundtrip at X=" +
                                                     diagram_tag(x) + " Y=" +
                                                     diagram_tag(y)});
      }
    }
  return report;
}

ValidationReport adjunction_check_ran(const Functor& u,
                                      const std::vector<FinSetDiagram>& over_j,
                                      const std::vector<FinSetDiagram>& over_k) {
  ValidationReport report;
  RanContext cx(u);
  for (const FinSetDiagram& x : over_j) {
    RanResult r = cx.apply(x);
    if (!validate_diagram(r.extension).empty() ||
        !validate_diagram_morphism(r.counit).empty()) {
      report.push_back({"TriangleFailure", "invalid ran data at X=" + diagram_tag(x)});
      continue;
    }
    // Triangle 1: Ran(counit_X) ∘ unit_{Ran X} = id.
    FinSetDiagram u_ran = restrict_diagram(u, r.extension);
    DiagramMorphism unit_at_ran =
        cx.transpose(u_ran, r.extension, identity_morphism(u_ran));
    DiagramMorphism ran_counit = cx.on_morphism(r.counit);
    if (!(compose(ran_counit, unit_at_ran) == identity_morphism(r.extension)))
      report.push_back({"TriangleFailure", "triangle 1 at X=" + diagram_tag(x)});
  }
  for (const FinSetDiagram& y : over_k) {
    // Triangle 2: counit_{u^*Y} ∘ u^*(unit_Y) = id.
    FinSetDiagram uy = restrict_diagram(u, y);
    RanResult r = cx.apply(uy);
    DiagramMorphism unit_y = cx.transpose(uy, y, identity_morphism(uy));
    if (!(compose(r.counit, restrict_morphism(u, unit_y)) == identity_morphism(uy)))
      report.push_back({"TriangleFailure", "triangle 2 at Y=" + diagram_tag(y)});
  }
  for (const FinSetDiagram& x : over_j)
    for (const FinSetDiagram& y : over_k) {
      RanResult r = cx.apply(x);
      FinSetDiagram uy = restrict_diagram(u, y);
      auto upper = diagram_homs(y, r.extension);
      auto lower = diagram_homs(uy, x);
      if (upper.size() != lower.size()) {
        report.push_back({"HomBijectionFailure", "cardinalities at X=" +
                                                     diagram_tag(x) + " Y=" +
                                                     diagram_tag(y)});
        continue;
      }
      std::vector<bool> hit(lower.size(), false);
      for (const auto& phi : upper) {
        DiagramMorphism image = compose(r.counit, restrict_morphism(u, phi));
        int at = -1;
        for (size_t i = 0; i < lower.size(); ++i)
          if (lower[i] == image) at = int(i);
        if (at < 0 || hit[at]) {
          report.push_back({"HomBijectionFailure",
                            "transpose not bijective at X=" + diagram_tag(x) +
                                " Y=" + diagram_tag(y)});
          break;
        }
        hit[at] = true;
        DiagramMorphism back = cx.transpose(x, y, image);
        if (!(back == phi))
          report.push_back({"NaturalityFailure", "transpose roundtrip at X=" +
                                                     diagram_tag(x) + " Y=" +
                                                     diagram_tag(y)});
      }
    }
  return report;
}

}  // namespace derlab
