#include "derlab/collage.hpp"

#include <algorithm>
#include <functional>

#include "derlab/corpus.hpp"

namespace derlab {

CollageResult collage_weight(const FinSetDiagram& w) {
  const FinCategory& a = *w.shape;
  const size_t na = a.num_objects(), ma = a.num_morphisms();
  auto cat = std::make_shared<FinCategory>();
  CollageResult out;
  cat->objects = a.objects;
  cat->objects.push_back("●");
  const int bullet = int(na);
  for (const Mor& m : a.morphisms) cat->morphisms.push_back({m.id, m.src, m.dst});
  cat->morphisms.push_back({"id:●", bullet, bullet});
  const int id_bullet = int(ma);
  out.cross_src.assign(ma + 1, -1);
  out.cross_dst.assign(ma + 1, -1);
  out.cross_datum.assign(ma + 1, -1);
  std::vector<std::vector<int>> cross(na);  // per object, per element: mor index
  for (size_t o = 0; o < na; ++o) {
    cross[o].resize(w.value[o].size());
    for (size_t e = 0; e < w.value[o].size(); ++e) {
      cross[o][e] = int(cat->morphisms.size());
      cat->morphisms.push_back(
          {"w(" + a.objects[o] + "|" + w.value[o].elems[e] + ")", bullet, int(o)});
      out.cross_src.push_back(-1);
      out.cross_dst.push_back(int(o));
      out.cross_datum.push_back(int(e));
    }
  }
  cat->identity = a.identity;
  cat->identity.push_back(id_bullet);
  cat->init_tables();
  for (size_t g = 0; g < ma; ++g)
    for (size_t f = 0; f < ma; ++f)
      if (a.compose(int(g), int(f)) >= 0)
        cat->set_compose(int(g), int(f), a.compose(int(g), int(f)));
  cat->set_compose(id_bullet, id_bullet, id_bullet);
  for (size_t o = 0; o < na; ++o)
    for (size_t e = 0; e < w.value[o].size(); ++e) {
      cat->set_compose(cross[o][e], id_bullet, cross[o][e]);
      for (size_t m = 0; m < ma; ++m) {
        const Mor& mor = a.morphisms[m];
        if (mor.src != int(o)) continue;
        cat->set_compose(int(m), cross[o][e],
                         cross[mor.dst][w.action[m].apply(int(e))]);
      }
    }
  out.category = cat;
  out.include_left.dom = w.shape;
  out.include_left.cod = cat;
  for (size_t o = 0; o < na; ++o) out.include_left.obj_map.push_back(int(o));
  for (size_t m = 0; m < ma; ++m) out.include_left.mor_map.push_back(int(m));
  out.include_right.dom = terminal_category();
  out.include_right.cod = cat;
  out.include_right.obj_map = {bullet};
  out.include_right.mor_map = {id_bullet};
  return out;
}

CollageResult collage_cospan(const Functor& f, const Functor& g) {
  if (!(*f.cod == *g.cod))
    throw Error("CodomainMismatch", "collage needs a common codomain");
  const FinCategory& a = *f.dom;
  const FinCategory& b = *g.dom;
  const FinCategory& c = *f.cod;
  const size_t na = a.num_objects(), nb = b.num_objects();
  const size_t ma = a.num_morphisms(), mb = b.num_morphisms();
  auto cat = std::make_shared<FinCategory>();
  CollageResult out;
  for (const auto& o : a.objects) cat->objects.push_back("l:" + o);
  for (const auto& o : b.objects) cat->objects.push_back("r:" + o);
  for (const Mor& m : a.morphisms) cat->morphisms.push_back({"l:" + m.id, m.src, m.dst});
  for (const Mor& m : b.morphisms)
    cat->morphisms.push_back({"r:" + m.id, m.src + int(na), m.dst + int(na)});
  out.cross_src.assign(ma + mb, -1);
  out.cross_dst.assign(ma + mb, -1);
  out.cross_datum.assign(ma + mb, -1);
  // cross arrows a → b named by the connecting C-morphism
  std::vector<std::vector<std::vector<int>>> cross(
      na, std::vector<std::vector<int>>(nb));
  for (size_t x = 0; x < na; ++x)
    for (size_t y = 0; y < nb; ++y)
      for (int m : c.hom(f.obj_map[x], g.obj_map[y])) {
        cross[x][y].push_back(int(cat->morphisms.size()));
        cat->morphisms.push_back({"x(" + a.objects[x] + "|" + b.objects[y] + "|" +
                                      c.morphisms[m].id + ")",
                                  int(x), int(y) + int(na)});
        out.cross_src.push_back(int(x));
        out.cross_dst.push_back(int(y));
        out.cross_datum.push_back(m);
      }
  for (size_t o = 0; o < na; ++o) cat->identity.push_back(a.identity[o]);
  for (size_t o = 0; o < nb; ++o) cat->identity.push_back(b.identity[o] + int(ma));
  cat->init_tables();
  for (size_t p = 0; p < ma; ++p)
    for (size_t q = 0; q < ma; ++q)
      if (a.compose(int(p), int(q)) >= 0)
        cat->set_compose(int(p), int(q), a.compose(int(p), int(q)));
  for (size_t p = 0; p < mb; ++p)
    for (size_t q = 0; q < mb; ++q)
      if (b.compose(int(p), int(q)) >= 0)
        cat->set_compose(int(p) + int(ma), int(q) + int(ma),
                         b.compose(int(p), int(q)) + int(ma));
  auto cross_at = [&](int x, int y, int cm) {
    for (int idx : cross[x][y])
      if (out.cross_datum[idx] == cm) return idx;
    return -1;
  };
  for (size_t x = 0; x < na; ++x)
    for (size_t y = 0; y < nb; ++y)
      for (int idx : cross[x][y]) {
        int cm = out.cross_datum[idx];
        // precompose with A-morphisms h : x' → x
        for (size_t h = 0; h < ma; ++h)
          if (a.morphisms[h].dst == int(x))
            cat->set_compose(idx, int(h),
                             cross_at(a.morphisms[h].src, int(y),
                                      c.compose(cm, f.mor_map[h])));
        // postcompose with B-morphisms k : y → y'
        for (size_t k = 0; k < mb; ++k)
          if (b.morphisms[k].src == int(y))
            cat->set_compose(int(k) + int(ma), idx,
                             cross_at(int(x), b.morphisms[k].dst,
                                      c.compose(g.mor_map[k], cm)));
      }
  out.category = cat;
  out.include_left.dom = f.dom;
  out.include_left.cod = cat;
  for (size_t o = 0; o < na; ++o) out.include_left.obj_map.push_back(int(o));
  for (size_t m = 0; m < ma; ++m) out.include_left.mor_map.push_back(int(m));
  out.include_right.dom = g.dom;
  out.include_right.cod = cat;
  for (size_t o = 0; o < nb; ++o)
    out.include_right.obj_map.push_back(int(o) + int(na));
  for (size_t m = 0; m < mb; ++m)
    out.include_right.mor_map.push_back(int(m) + int(ma));
  return out;
}

ValidationReport validate_profunctor(const ProfunctorData& p) {
  ValidationReport report = validate_diagram(p.data);
  auto expected = product(std::make_shared<FinCategory>(opposite(*p.from)), p.to);
  if (!(*p.data.shape == *expected.category))
    report.push_back({"ProfunctorShape", "data not over op(from) × to"});
  return report;
}

CollageResult collage_profunctor(const ProfunctorData& p) {
  const FinCategory& fc = *p.from;
  const FinCategory& tc = *p.to;
  const size_t nf = fc.num_objects(), nt = tc.num_objects();
  const size_t mf = fc.num_morphisms(), mt = tc.num_morphisms();
  auto value_at = [&](int x, int y) { return x * int(nt) + y; };
  auto act_at = [&](int mx, int my) { return mx * int(mt) + my; };

  auto cat = std::make_shared<FinCategory>();
  CollageResult out;
  for (const auto& o : fc.objects) cat->objects.push_back("l:" + o);
  for (const auto& o : tc.objects) cat->objects.push_back("r:" + o);
  for (const Mor& m : fc.morphisms) cat->morphisms.push_back({"l:" + m.id, m.src, m.dst});
  for (const Mor& m : tc.morphisms)
    cat->morphisms.push_back({"r:" + m.id, m.src + int(nf), m.dst + int(nf)});
  out.cross_src.assign(mf + mt, -1);
  out.cross_dst.assign(mf + mt, -1);
  out.cross_datum.assign(mf + mt, -1);
  std::vector<std::vector<std::vector<int>>> cross(
      nf, std::vector<std::vector<int>>(nt));
  for (size_t x = 0; x < nf; ++x)
    for (size_t y = 0; y < nt; ++y) {
      const FinSet& h = p.data.value[value_at(int(x), int(y))];
      for (size_t e = 0; e < h.size(); ++e) {
        cross[x][y].push_back(int(cat->morphisms.size()));
        cat->morphisms.push_back({"x(" + fc.objects[x] + "|" + tc.objects[y] + "|" +
                                      h.elems[e] + ")",
                                  int(x), int(y) + int(nf)});
        out.cross_src.push_back(int(x));
        out.cross_dst.push_back(int(y));
        out.cross_datum.push_back(int(e));
      }
    }
  for (size_t o = 0; o < nf; ++o) cat->identity.push_back(fc.identity[o]);
  for (size_t o = 0; o < nt; ++o) cat->identity.push_back(tc.identity[o] + int(mf));
  cat->init_tables();
  for (size_t p2 = 0; p2 < mf; ++p2)
    for (size_t q = 0; q < mf; ++q)
      if (fc.compose(int(p2), int(q)) >= 0)
        cat->set_compose(int(p2), int(q), fc.compose(int(p2), int(q)));
  for (size_t p2 = 0; p2 < mt; ++p2)
    for (size_t q = 0; q < mt; ++q)
      if (tc.compose(int(p2), int(q)) >= 0)
        cat->set_compose(int(p2) + int(mf), int(q) + int(mf),
                         tc.compose(int(p2), int(q)) + int(mf));
  for (size_t x = 0; x < nf; ++x)
    for (size_t y = 0; y < nt; ++y)
      for (size_t pos = 0; pos < cross[x][y].size(); ++pos) {
        int idx = cross[x][y][pos];
        for (size_t h = 0; h < mf; ++h)
          if (fc.morphisms[h].dst == int(x)) {
            int img = p.data.action[act_at(int(h), tc.identity[y])].apply(int(pos));
            cat->set_compose(idx, int(h), cross[fc.morphisms[h].src][y][img]);
          }
        for (size_t k = 0; k < mt; ++k)
          if (tc.morphisms[k].src == int(y)) {
            int img =
                p.data.action[act_at(fc.identity[x], int(k))].apply(int(pos));
            cat->set_compose(int(k) + int(mf), idx,
                             cross[x][tc.morphisms[k].dst][img]);
          }
      }
  out.category = cat;
  out.include_left.dom = p.from;
  out.include_left.cod = cat;
  for (size_t o = 0; o < nf; ++o) out.include_left.obj_map.push_back(int(o));
  for (size_t m = 0; m < mf; ++m) out.include_left.mor_map.push_back(int(m));
  out.include_right.dom = p.to;
  out.include_right.cod = cat;
  for (size_t o = 0; o < nt; ++o)
    out.include_right.obj_map.push_back(int(o) + int(nf));
  for (size_t m = 0; m < mt; ++m)
    out.include_right.mor_map.push_back(int(m) + int(mf));
  return out;
}

ProfunctorData representable_profunctor(const Functor& f, const Functor& g) {
  if (!(*f.cod == *g.cod))
    throw Error("CodomainMismatch", "representable profunctor");
  ProfunctorData p;
  p.from = f.dom;
  p.to = g.dom;
  auto op = std::make_shared<FinCategory>(opposite(*f.dom));
  auto prod = product(op, g.dom);
  p.data.shape = prod.category;
  const FinCategory& a = *f.dom;
  const FinCategory& b = *g.dom;
  const FinCategory& c = *f.cod;
  const size_t nb = b.num_objects(), mb = b.num_morphisms();
  for (size_t x = 0; x < a.num_objects(); ++x)
    for (size_t y = 0; y < nb; ++y) {
      FinSet h;
      for (int m : c.hom(f.obj_map[x], g.obj_map[y]))
        h.elems.push_back(c.morphisms[m].id);
      p.data.value.push_back(std::move(h));
    }
  for (size_t mh = 0; mh < a.num_morphisms(); ++mh)
    for (size_t mk = 0; mk < mb; ++mk) {
      // op morphism mh runs a → a' where the original h : a' → a
      const Mor& h = a.morphisms[mh];
      const Mor& k = b.morphisms[mk];
      const FinSet& dom_set = p.data.value[size_t(h.dst) * nb + size_t(k.src)];
      const FinSet& cod_set = p.data.value[size_t(h.src) * nb + size_t(k.dst)];
      SetFunction act{dom_set, cod_set, {}};
      for (const auto& name : dom_set.elems) {
        int m = c.morphism_index(name);
        int img = c.compose(g.mor_map[mk], c.compose(m, f.mor_map[mh]));
        act.map.push_back(cod_set.index_of(c.morphisms[img].id));
      }
      p.data.action.push_back(std::move(act));
    }
  return p;
}

Functor pi_functor(const Functor& f, const Functor& g, const CollageResult& coll) {
  Functor out;
  out.dom = coll.category;
  out.cod = f.cod;
  const size_t na = f.dom->num_objects();
  const size_t ma = f.dom->num_morphisms();
  for (size_t o = 0; o < coll.category->num_objects(); ++o)
    out.obj_map.push_back(o < na ? f.obj_map[o] : g.obj_map[o - na]);
  for (size_t m = 0; m < coll.category->num_morphisms(); ++m) {
    if (coll.cross_datum[m] >= 0)
      out.mor_map.push_back(coll.cross_datum[m]);
    else if (m < ma)
      out.mor_map.push_back(f.mor_map[m]);
    else
      out.mor_map.push_back(g.mor_map[m - ma]);
  }
  return out;
}

ValidationReport idempotence_check(const Functor& f, const Functor& g) {
  ValidationReport report;
  CollageResult c1 = collage_cospan(f, g);
  CollageResult c2 = collage_cospan(c1.include_left, c1.include_right);
  if (c2.category->num_objects() != c1.category->num_objects() ||
      c2.category->num_morphisms() != c1.category->num_morphisms()) {
    report.push_back({"IdempotenceFailure", "size mismatch"});
    return report;
  }
  // Canonical comparison: identity on objects, cross arrows decode to the
  // collage morphism they name.
  Functor cmp;
  cmp.dom = c2.category;
  cmp.cod = c1.category;
  for (size_t o = 0; o < c2.category->num_objects(); ++o) {
    if (c2.category->objects[o] != c1.category->objects[o]) {
      report.push_back({"IdempotenceFailure", "object naming at " +
                                                  c2.category->objects[o]});
      return report;
    }
    cmp.obj_map.push_back(int(o));
  }
  const size_t ma = f.dom->num_morphisms();
  const size_t mb = g.dom->num_morphisms();
  for (size_t m = 0; m < c2.category->num_morphisms(); ++m) {
    if (c2.cross_datum[m] >= 0)
      cmp.mor_map.push_back(c2.cross_datum[m]);  // a c1 morphism index
    else if (m < ma)
      cmp.mor_map.push_back(int(m));
    else
      cmp.mor_map.push_back(int(m - ma) + int(ma));
  }
  (void)mb;
  auto sub = validate_functor(cmp);
  report.insert(report.end(), sub.begin(), sub.end());
  // bijective on morphisms?
  std::vector<bool> hit(c1.category->num_morphisms(), false);
  for (int m : cmp.mor_map) {
    if (m < 0 || hit[m]) {
      report.push_back({"IdempotenceFailure", "comparison not bijective"});
      return report;
    }
    hit[m] = true;
  }
  return report;
}

// ---- Weighted limits --------------------------------------------------------

WeightedLimitResult weighted_limit_direct(const FinSetDiagram& w,
                                          const FinSetDiagram& f) {
  if (!(*w.shape == *f.shape))
    throw Error("BoundaryMismatch", "weight and diagram over different shapes");
  const FinCategory& a = *w.shape;
  const size_t n = a.num_objects();
  WeightedLimitResult out;
  std::vector<SetFunction> family(n);
  std::function<void(size_t)> assign = [&](size_t o) {
    if (o == n) {
      std::string name = "(";
      for (size_t i = 0; i < n; ++i) {
        if (i) name += ",";
        name += "[";
        for (size_t e = 0; e < family[i].map.size(); ++e) {
          if (e) name += " ";
          name += std::to_string(family[i].map[e]);
        }
        name += "]";
      }
      name += ")";
      out.set.elems.push_back(name);
      out.families.push_back(family);
      return;
    }
    size_t count = 1;
    for (size_t i = 0; i < w.value[o].size(); ++i) count *= f.value[o].size();
    if (w.value[o].size() > 0 && f.value[o].size() == 0) count = 0;
    for (size_t code = 0; code < count; ++code) {
      SetFunction phi{w.value[o], f.value[o], {}};
      size_t rest = code;
      for (size_t i = 0; i < w.value[o].size(); ++i) {
        phi.map.push_back(int(rest % f.value[o].size()));
        rest /= f.value[o].size();
      }
      family[o] = phi;
      bool natural = true;
      for (size_t m = 0; m < a.num_morphisms() && natural; ++m) {
        const Mor& mor = a.morphisms[m];
        if (size_t(mor.src) > o || size_t(mor.dst) > o) continue;
        if (size_t(mor.src) != o && size_t(mor.dst) != o) continue;
        for (size_t e = 0; e < w.value[mor.src].size(); ++e)
          if (f.action[m].map[family[mor.src].map[e]] !=
              family[mor.dst].map[w.action[m].map[e]]) {
            natural = false;
            break;
          }
      }
      if (natural) assign(o + 1);
    }
  };
  assign(0);
  return out;
}

ViaCollageResult weighted_limit_via_collage(const FinSetDiagram& w,
                                            const FinSetDiagram& f) {
  ViaCollageResult out;
  out.coll = collage_weight(w);
  out.bullet = int(w.shape->num_objects());
  FinSetDiagram f_over_a = f;
  out.ran = ran(out.coll.include_left, f_over_a);
  return out;
}

namespace {

// For each element of the collage-route limit at ●, the index of the direct
// natural family it corresponds to, or -1.
std::vector<int> via_to_direct(const FinSetDiagram& w, const FinSetDiagram& f,
                               const ViaCollageResult& via,
                               const WeightedLimitResult& direct) {
  CommaResult cm = comma(object_as_functor(via.coll.category, via.bullet),
                         via.coll.include_left);
  LimitResult lim = limit_finset(restrict_diagram(cm.proj_right, f));
  const size_t n = w.shape->num_objects();
  std::vector<int> out;
  for (size_t e = 0; e < via.ran.extension.value[via.bullet].size(); ++e) {
    std::vector<SetFunction> family(n);
    for (size_t o = 0; o < n; ++o) {
      family[o].dom = w.value[o];
      family[o].cod = f.value[o];
      family[o].map.assign(w.value[o].size(), -1);
    }
    for (size_t i = 0; i < cm.category->num_objects(); ++i) {
      int a = cm.proj_right.obj_map[i];
      int h = cm.square.component[i];
      int elem = via.coll.cross_datum[h];
      family[a].map[elem] = lim.projections[i].apply(int(e));
    }
    int at = -1;
    for (size_t d = 0; d < direct.families.size(); ++d)
      if (direct.families[d] == family) at = int(d);
    out.push_back(at);
  }
  return out;
}

}  // namespace

ValidationReport weighted_limit_dual_path_check(const FinSetDiagram& w,
                                                const FinSetDiagram& f) {
  ValidationReport report;
  WeightedLimitResult direct = weighted_limit_direct(w, f);
  ViaCollageResult via = weighted_limit_via_collage(w, f);
  const FinSet& via_set = via.ran.extension.value[via.bullet];
  if (via_set.size() != direct.set.size()) {
    report.push_back({"DualPathMismatch",
                      "cardinalities " + std::to_string(via_set.size()) + " vs " +
                          std::to_string(direct.set.size())});
    return report;
  }
  std::vector<int> to_direct = via_to_direct(w, f, via, direct);
  std::vector<bool> hit(direct.set.size(), false);
  for (size_t e = 0; e < to_direct.size(); ++e) {
    if (to_direct[e] < 0) {
      report.push_back({"DualPathMismatch",
                        "collage element " + via_set.elems[e] +
                            " induces no natural family"});
      return report;
    }
    if (hit[to_direct[e]]) {
      report.push_back({"DualPathMismatch", "cone comparison not injective"});
      return report;
    }
    hit[to_direct[e]] = true;
  }
  return report;
}

SetFunction weight_morphism_direct_map(const DiagramMorphism& alpha,
                                       const FinSetDiagram& f) {
  const FinSetDiagram& w = alpha.dom;
  const FinSetDiagram& wp = alpha.cod;
  WeightedLimitResult dl = weighted_limit_direct(w, f);
  WeightedLimitResult dlp = weighted_limit_direct(wp, f);
  SetFunction out{dlp.set, dl.set, {}};
  for (const auto& family : dlp.families) {
    std::vector<SetFunction> pre(family.size());
    for (size_t o = 0; o < family.size(); ++o)
      pre[o] = compose(family[o], alpha.component[o]);
    int at = -1;
    for (size_t d = 0; d < dl.families.size(); ++d)
      if (dl.families[d] == pre) at = int(d);
    out.map.push_back(at);
  }
  return out;
}

SetFunction weight_morphism_via_collage(const DiagramMorphism& alpha,
                                        const FinSetDiagram& f) {
  const FinSetDiagram& w = alpha.dom;
  const FinSetDiagram& wp = alpha.cod;
  ViaCollageResult via_w = weighted_limit_via_collage(w, f);
  ViaCollageResult via_wp = weighted_limit_via_collage(wp, f);

  // coll(alpha) : coll(W) → coll(W′), identity on the domain block and ●.
  Functor coll_alpha;
  coll_alpha.dom = via_w.coll.category;
  coll_alpha.cod = via_wp.coll.category;
  for (size_t o = 0; o < via_w.coll.category->num_objects(); ++o)
    coll_alpha.obj_map.push_back(int(o));
  for (size_t m = 0; m < via_w.coll.category->num_morphisms(); ++m) {
    if (via_w.coll.cross_datum[m] < 0) {
      coll_alpha.mor_map.push_back(int(m));  // block morphisms line up
      continue;
    }
    int a = via_w.coll.cross_dst[m];
    int elem = alpha.component[a].apply(via_w.coll.cross_datum[m]);
    int target = -1;
    for (size_t m2 = 0; m2 < via_wp.coll.category->num_morphisms(); ++m2)
      if (via_wp.coll.cross_dst[m2] == a && via_wp.coll.cross_datum[m2] == elem)
        target = int(m2);
    coll_alpha.mor_map.push_back(target);
  }

  // Mate: (coll alpha)^* Ran_{ι'} F → Ran_ι F via the transpose of the
  // counit, evaluated at ●.
  FinSetDiagram restricted = restrict_diagram(coll_alpha, via_wp.ran.extension);
  DiagramMorphism mate =
      ran_transpose(via_w.coll.include_left, f, restricted, via_wp.ran.counit);
  SetFunction at_bullet = mate.component[via_w.bullet];

  // Transport to direct encodings.
  WeightedLimitResult dl = weighted_limit_direct(w, f);
  WeightedLimitResult dlp = weighted_limit_direct(wp, f);
  std::vector<int> to_direct_w = via_to_direct(w, f, via_w, dl);
  std::vector<int> to_direct_wp = via_to_direct(wp, f, via_wp, dlp);
  SetFunction out{dlp.set, dl.set, {}};
  out.map.assign(dlp.set.size(), -1);
  for (size_t e = 0; e < to_direct_wp.size(); ++e) {
    if (to_direct_wp[e] < 0) continue;
    int img = at_bullet.apply(int(e));
    out.map[to_direct_wp[e]] = img >= 0 ? to_direct_w[img] : -1;
  }
  return out;
}

ValidationReport weight_morphism_check(const DiagramMorphism& alpha,
                                       const FinSetDiagram& f) {
  ValidationReport report = validate_diagram_morphism(alpha);
  if (!report.empty()) return report;
  SetFunction direct = weight_morphism_direct_map(alpha, f);
  SetFunction via = weight_morphism_via_collage(alpha, f);
  for (int v : direct.map)
    if (v < 0) {
      report.push_back({"WeightMapFailure", "precomposition left the limit"});
      return report;
    }
  if (!(direct.map == via.map))
    report.push_back({"WeightMapMismatch", "collage route disagrees with "
                                           "precomposition"});
  return report;
}

// ---- Exactness ----------------------------------------------------------------

namespace {

ExactnessReport iso_verdict(const SetFunction& cmp, const std::string& tag) {
  ExactnessReport out;
  if (cmp.is_bijection()) {
    out.verdict = "pass";
  } else {
    out.verdict = "fail";
    out.witnesses.push_back({"ExactnessFailure", tag});
  }
  return out;
}

}  // namespace

ExactnessReport exactness_check(const Functor& f, int b, const FinSetDiagram& x,
                                bool left_side) {
  CatPtr bcat = f.cod;
  Functor b_hat = object_as_functor(bcat, b);
  if (left_side) {
    CollageResult coll = collage_cospan(f, b_hat);
    Functor pi = pi_functor(f, b_hat, coll);
    LanResult lanf = lan(f, x);
    FinSetDiagram target = restrict_diagram(pi, lanf.extension);
    DiagramMorphism cmp = lan_transpose(coll.include_left, x, target, lanf.unit);
    int bullet = int(f.dom->num_objects());
    return iso_verdict(cmp.component[bullet],
                       "left at object " + bcat->objects[b]);
  }
  CollageResult coll = collage_cospan(b_hat, f);
  Functor pi = pi_functor(b_hat, f, coll);
  RanResult ranf = ran(f, x);
  FinSetDiagram target = restrict_diagram(pi, ranf.extension);
  DiagramMorphism cmp = ran_transpose(coll.include_right, x, target, ranf.counit);
  return iso_verdict(cmp.component[0], "right at object " + bcat->objects[b]);
}

ExactnessReport exactness_cospan_check(const Functor& f, const Functor& g,
                                       const FinSetDiagram& x) {
  CollageResult coll = collage_cospan(f, g);
  Functor pi = pi_functor(f, g, coll);
  LanResult lanf = lan(f, x);
  FinSetDiagram target = restrict_diagram(pi, lanf.extension);
  DiagramMorphism cmp = lan_transpose(coll.include_left, x, target, lanf.unit);
  DiagramMorphism restricted = restrict_morphism(coll.include_right, cmp);
  ExactnessReport out;
  if (is_iso(restricted)) {
    out.verdict = "pass";
  } else {
    out.verdict = "fail";
    out.witnesses.push_back({"ExactnessFailure", "cospan comparison"});
  }
  return out;
}

// ---- Category-valued weights ---------------------------------------------------

ValidationReport validate_cat_diagram(const CatDiagram& d) {
  ValidationReport report;
  const FinCategory& shape = *d.shape;
  if (d.value.size() != shape.num_objects() ||
      d.action.size() != shape.num_morphisms()) {
    report.push_back({"DiagramShape", "value/action tables have wrong size"});
    return report;
  }
  for (size_t m = 0; m < shape.num_morphisms(); ++m) {
    const Mor& mor = shape.morphisms[m];
    if (!(*d.action[m].dom == *d.value[mor.src]) ||
        !(*d.action[m].cod == *d.value[mor.dst]))
      report.push_back({"DiagramBoundary", "action of " + mor.id});
  }
  if (!report.empty()) return report;
  for (size_t o = 0; o < shape.num_objects(); ++o)
    if (!functor_equal(d.action[shape.identity[o]], identity_functor(d.value[o])))
      report.push_back({"FunctorialityViolation", "identity at " + shape.objects[o]});
  for (size_t g = 0; g < shape.num_morphisms(); ++g)
    for (size_t f = 0; f < shape.num_morphisms(); ++f) {
      int gf = shape.compose(int(g), int(f));
      if (gf < 0) continue;
      if (!functor_equal(compose_functors(d.action[g], d.action[f]), d.action[gf]))
        report.push_back({"FunctorialityViolation",
                          "(" + shape.morphisms[g].id + ", " + shape.morphisms[f].id + ")"});
    }
  return report;
}

TwoCatPtr collage_cat_weight(const CatDiagram& w) {
  const FinCategory& a = *w.shape;
  const size_t na = a.num_objects();
  auto two = std::make_shared<Fin2Category>();
  two->objects = a.objects;
  two->objects.push_back("●");
  const int bullet = int(na);
  // 1-cells: the domain block plus id_● plus objects of the weight values.
  for (const Mor& m : a.morphisms) two->one_cells.push_back({m.id, m.src, m.dst});
  two->one_cells.push_back({"id:●", bullet, bullet});
  const int id_bullet = int(a.num_morphisms());
  std::vector<std::vector<int>> cross_one(na);
  for (size_t o = 0; o < na; ++o) {
    cross_one[o].resize(w.value[o]->num_objects());
    for (size_t e = 0; e < w.value[o]->num_objects(); ++e) {
      cross_one[o][e] = int(two->one_cells.size());
      two->one_cells.push_back(
          {"w(" + a.objects[o] + "|" + w.value[o]->objects[e] + ")", bullet,
           int(o)});
    }
  }
  two->one_identity = a.identity;
  two->one_identity.push_back(id_bullet);
  // 2-cells: identities on block 1-cells, plus weight-value morphisms on
  // cross 1-cells.
  for (size_t c = 0; c < size_t(id_bullet) + 1; ++c)
    two->two_cells.push_back({"id2:" + two->one_cells[c].id, int(c), int(c)});
  std::vector<std::vector<int>> cross_two(na);
  for (size_t o = 0; o < na; ++o) {
    cross_two[o].resize(w.value[o]->num_morphisms());
    for (size_t t = 0; t < w.value[o]->num_morphisms(); ++t) {
      const Mor& mu = w.value[o]->morphisms[t];
      cross_two[o][t] = int(two->two_cells.size());
      two->two_cells.push_back({"w2(" + a.objects[o] + "|" + mu.id + ")",
                                cross_one[o][mu.src], cross_one[o][mu.dst]});
    }
  }
  two->two_identity.assign(two->one_cells.size(), -1);
  for (size_t c = 0; c <= size_t(id_bullet); ++c) two->two_identity[c] = int(c);
  for (size_t o = 0; o < na; ++o)
    for (size_t e = 0; e < w.value[o]->num_objects(); ++e)
      two->two_identity[cross_one[o][e]] =
          cross_two[o][w.value[o]->identity[e]];
  two->init_tables();
  // 1-cell composition.
  for (size_t g = 0; g < a.num_morphisms(); ++g)
    for (size_t f = 0; f < a.num_morphisms(); ++f)
      if (a.compose(int(g), int(f)) >= 0)
        two->set_compose_one(int(g), int(f), a.compose(int(g), int(f)));
  two->set_compose_one(id_bullet, id_bullet, id_bullet);
  for (size_t o = 0; o < na; ++o)
    for (size_t e = 0; e < w.value[o]->num_objects(); ++e) {
      int idx = cross_one[o][e];
      two->set_compose_one(idx, id_bullet, idx);
      for (size_t m = 0; m < a.num_morphisms(); ++m)
        if (a.morphisms[m].src == int(o))
          two->set_compose_one(int(m), idx,
                               cross_one[a.morphisms[m].dst]
                                        [w.action[m].obj_map[e]]);
    }
  // Vertical composition.
  for (size_t c = 0; c <= size_t(id_bullet); ++c)
    two->set_vcompose(int(c), int(c), int(c));
  for (size_t o = 0; o < na; ++o) {
    const FinCategory& val = *w.value[o];
    for (size_t s = 0; s < val.num_morphisms(); ++s)
      for (size_t t = 0; t < val.num_morphisms(); ++t)
        if (val.compose(int(s), int(t)) >= 0)
          two->set_vcompose(cross_two[o][s], cross_two[o][t],
                            cross_two[o][val.compose(int(s), int(t))]);
  }
  // Horizontal composition: block identities act through the weight's
  // functoriality; everything in the block is an identity 2-cell.
  for (size_t s = 0; s < two->num_two_cells(); ++s)
    for (size_t t = 0; t < two->num_two_cells(); ++t) {
      int s_src = two->two_cells[s].src_one;
      int t_src = two->two_cells[t].src_one;
      if (two->one_cells[t_src].dst != two->one_cells[s_src].src) continue;
      bool s_block = s < size_t(id_bullet) + 1;
      bool t_block = t < size_t(id_bullet) + 1;
      if (s_block && t_block) {
        two->set_hcompose(int(s), int(t),
                          int(two->compose_one(int(s_src), int(t_src))));
      } else if (!t_block && s_block) {
        // block identity (on m : o → o') after a cross 2-cell in W o
        int o = two->one_cells[t_src].dst;
        int m = int(s_src);
        if (m == id_bullet) continue;
        int local = -1;
        for (size_t k = 0; k < cross_two[o].size(); ++k)
          if (cross_two[o][k] == int(t)) local = int(k);
        int target_obj = a.morphisms[m].dst;
        two->set_hcompose(int(s), int(t),
                          cross_two[target_obj][w.action[m].mor_map[local]]);
      } else if (!s_block && t_block && t_src == id_bullet) {
        two->set_hcompose(int(s), int(t), int(s));
      }
    }
  return two;
}

CatPtr cat_weighted_limit_direct(const CatDiagram& w, const CatDiagram& f) {
  const FinCategory& shape = *w.shape;
  const size_t n = shape.num_objects();
  // Objects: natural families of functors.
  std::vector<std::vector<Functor>> choices(n);
  for (size_t o = 0; o < n; ++o) choices[o] = all_functors(w.value[o], f.value[o]);
  std::vector<std::vector<int>> objects;  // per family, per object: choice idx
  std::vector<int> current(n, -1);
  std::function<void(size_t)> assign = [&](size_t o) {
    if (o == n) {
      objects.push_back(current);
      return;
    }
    for (size_t c = 0; c < choices[o].size(); ++c) {
      current[o] = int(c);
      bool natural = true;
      for (size_t m = 0; m < shape.num_morphisms() && natural; ++m) {
        const Mor& mor = shape.morphisms[m];
        if (size_t(mor.src) > o || size_t(mor.dst) > o) continue;
        if (size_t(mor.src) != o && size_t(mor.dst) != o) continue;
        if (!functor_equal(
                compose_functors(f.action[m], choices[mor.src][current[mor.src]]),
                compose_functors(choices[mor.dst][current[mor.dst]], w.action[m])))
          natural = false;
      }
      if (natural) assign(o + 1);
    }
    current[o] = -1;
  };
  assign(0);

  auto cat = std::make_shared<FinCategory>();
  auto encode = [](const std::vector<int>& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(v[i]);
    }
    return s + ")";
  };
  for (const auto& fam : objects) cat->objects.push_back("Phi" + encode(fam));

  // Morphisms: compatible families of natural transformations.
  struct LimMor {
    int from, to;
    std::vector<NatTrans> comps;
  };
  std::vector<LimMor> mors;
  for (size_t i = 0; i < objects.size(); ++i)
    for (size_t j = 0; j < objects.size(); ++j) {
      std::vector<std::vector<NatTrans>> nat_choices(n);
      for (size_t o = 0; o < n; ++o)
        nat_choices[o] = all_nat_trans(choices[o][objects[i][o]],
                                       choices[o][objects[j][o]]);
      std::vector<int> pick(n, -1);
      std::function<void(size_t)> search = [&](size_t o) {
        if (o == n) {
          LimMor lm{int(i), int(j), {}};
          for (size_t k = 0; k < n; ++k) lm.comps.push_back(nat_choices[k][pick[k]]);
          mors.push_back(std::move(lm));
          return;
        }
        for (size_t c = 0; c < nat_choices[o].size(); ++c) {
          pick[o] = int(c);
          bool compatible = true;
          for (size_t m = 0; m < shape.num_morphisms() && compatible; ++m) {
            const Mor& mor = shape.morphisms[m];
            if (size_t(mor.src) > o || size_t(mor.dst) > o) continue;
            if (size_t(mor.src) != o && size_t(mor.dst) != o) continue;
            if (!nat_trans_equal(
                    whisker_post(f.action[m], nat_choices[mor.src][pick[mor.src]]),
                    whisker_pre(nat_choices[mor.dst][pick[mor.dst]], w.action[m])))
              compatible = false;
          }
          if (compatible) search(o + 1);
        }
        pick[o] = -1;
      };
      search(0);
    }
  for (size_t m = 0; m < mors.size(); ++m) {
    std::string name = "mu" + std::to_string(m) + ":" +
                       std::to_string(mors[m].from) + ">" +
                       std::to_string(mors[m].to);
    cat->morphisms.push_back({name, mors[m].from, mors[m].to});
  }
  auto mor_at = [&](int from, int to, const std::vector<NatTrans>& comps) {
    for (size_t m = 0; m < mors.size(); ++m) {
      if (mors[m].from != from || mors[m].to != to) continue;
      bool same = true;
      for (size_t o = 0; o < n && same; ++o)
        if (!(mors[m].comps[o].component == comps[o].component)) same = false;
      if (same) return int(m);
    }
    return -1;
  };
  for (size_t i = 0; i < objects.size(); ++i) {
    std::vector<NatTrans> ids;
    for (size_t o = 0; o < n; ++o)
      ids.push_back(identity_nat_trans(choices[o][objects[i][o]]));
    cat->identity.push_back(mor_at(int(i), int(i), ids));
  }
  cat->init_tables();
  for (size_t p = 0; p < mors.size(); ++p)
    for (size_t q = 0; q < mors.size(); ++q) {
      if (mors[q].to != mors[p].from) continue;
      std::vector<NatTrans> comps;
      for (size_t o = 0; o < n; ++o)
        comps.push_back(vcompose(mors[p].comps[o], mors[q].comps[o]));
      cat->set_compose(int(p), int(q), mor_at(mors[q].from, mors[p].to, comps));
    }
  return cat;
}

}  // namespace derlab
