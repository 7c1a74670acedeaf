#include "derlab/finset.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace derlab {

int FinSet::index_of(const std::string& name) const {
  for (size_t i = 0; i < elems.size(); ++i)
    if (elems[i] == name) return int(i);
  return -1;
}

bool SetFunction::is_bijection() const {
  if (dom.size() != cod.size()) return false;
  std::vector<bool> hit(cod.size(), false);
  for (int v : map) {
    if (v < 0 || v >= int(cod.size()) || hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

SetFunction SetFunction::identity(const FinSet& s) {
  SetFunction f;
  f.dom = s;
  f.cod = s;
  f.map.resize(s.size());
  std::iota(f.map.begin(), f.map.end(), 0);
  return f;
}

ValidationReport validate_set_function(const SetFunction& f) {
  ValidationReport report;
  if (f.map.size() != f.dom.size())
    report.push_back({"Totality", "value table has wrong size"});
  for (size_t i = 0; i < f.map.size(); ++i)
    if (f.map[i] < 0 || f.map[i] >= int(f.cod.size()))
      report.push_back({"CodomainViolation", "value of " + f.dom.elems[i]});
  return report;
}

SetFunction compose(const SetFunction& g, const SetFunction& f) {
  if (!(f.cod == g.dom))
    throw Error("BoundaryMismatch", "set function composition");
  SetFunction h;
  h.dom = f.dom;
  h.cod = g.cod;
  h.map.resize(f.map.size());
  for (size_t i = 0; i < f.map.size(); ++i) h.map[i] = g.map[f.map[i]];
  return h;
}

SetFunction inverse(const SetFunction& f) {
  if (!f.is_bijection()) throw Error("NotInvertible", "set function");
  SetFunction g;
  g.dom = f.cod;
  g.cod = f.dom;
  g.map.resize(f.map.size());
  for (size_t i = 0; i < f.map.size(); ++i) g.map[f.map[i]] = int(i);
  return g;
}

ValidationReport validate_diagram(const FinSetDiagram& d) {
  ValidationReport report;
  const FinCategory& shape = *d.shape;
  if (d.value.size() != shape.num_objects() ||
      d.action.size() != shape.num_morphisms()) {
    report.push_back({"DiagramShape", "value/action tables have wrong size"});
    return report;
  }
  for (size_t m = 0; m < shape.num_morphisms(); ++m) {
    const Mor& mor = shape.morphisms[m];
    const SetFunction& f = d.action[m];
    if (!(f.dom == d.value[mor.src]) || !(f.cod == d.value[mor.dst]))
      report.push_back({"DiagramBoundary", "action of " + mor.id});
    else {
      auto sub = validate_set_function(f);
      report.insert(report.end(), sub.begin(), sub.end());
    }
  }
  if (!report.empty()) return report;
  for (size_t o = 0; o < shape.num_objects(); ++o)
    if (!(d.action[shape.identity[o]].map ==
          SetFunction::identity(d.value[o]).map))
      report.push_back({"FunctorialityViolation", "identity at " + shape.objects[o]});
  for (size_t g = 0; g < shape.num_morphisms(); ++g)
    for (size_t f = 0; f < shape.num_morphisms(); ++f) {
      int gf = shape.compose(int(g), int(f));
      if (gf < 0) continue;
      if (!(compose(d.action[g], d.action[f]).map == d.action[gf].map))
        report.push_back({"FunctorialityViolation",
                          "(" + shape.morphisms[g].id + ", " + shape.morphisms[f].id + ")"});
    }
  return report;
}

ValidationReport validate_diagram_morphism(const DiagramMorphism& m) {
  ValidationReport report;
  if (!(*m.dom.shape == *m.cod.shape)) {
    report.push_back({"BoundaryMismatch", "diagram morphism across shapes"});
    return report;
  }
  const FinCategory& shape = *m.dom.shape;
  if (m.component.size() != shape.num_objects()) {
    report.push_back({"BoundaryMismatch", "component list has wrong size"});
    return report;
  }
  for (size_t o = 0; o < shape.num_objects(); ++o)
    if (!(m.component[o].dom == m.dom.value[o]) ||
        !(m.component[o].cod == m.cod.value[o]))
      report.push_back({"BoundaryMismatch", "component at " + shape.objects[o]});
  if (!report.empty()) return report;
  for (size_t f = 0; f < shape.num_morphisms(); ++f) {
    const Mor& mor = shape.morphisms[f];
    if (!(compose(m.cod.action[f], m.component[mor.src]).map ==
          compose(m.component[mor.dst], m.dom.action[f]).map))
      report.push_back({"NaturalityViolation", "square at " + mor.id});
  }
  return report;
}

DiagramMorphism identity_morphism(const FinSetDiagram& d) {
  DiagramMorphism m;
  m.dom = d;
  m.cod = d;
  for (const FinSet& s : d.value) m.component.push_back(SetFunction::identity(s));
  return m;
}

DiagramMorphism compose(const DiagramMorphism& g, const DiagramMorphism& f) {
  DiagramMorphism h;
  h.dom = f.dom;
  h.cod = g.cod;
  for (size_t o = 0; o < f.component.size(); ++o)
    h.component.push_back(compose(g.component[o], f.component[o]));
  return h;
}

bool is_iso(const DiagramMorphism& m) {
  for (const SetFunction& f : m.component)
    if (!f.is_bijection()) return false;
  return true;
}

DiagramMorphism inverse(const DiagramMorphism& m) {
  DiagramMorphism out;
  out.dom = m.cod;
  out.cod = m.dom;
  for (const SetFunction& f : m.component) out.component.push_back(inverse(f));
  return out;
}

std::vector<DiagramMorphism> diagram_homs(const FinSetDiagram& x,
                                          const FinSetDiagram& y) {
  std::vector<DiagramMorphism> out;
  if (!(*x.shape == *y.shape)) return out;
  const FinCategory& shape = *x.shape;
  const size_t n = shape.num_objects();
  std::vector<std::vector<int>> choice(n);  // flattened functions per object
  // A function X(o) → Y(o) is encoded as an integer in mixed radix.
  std::vector<size_t> counts(n);
  for (size_t o = 0; o < n; ++o) {
    size_t c = 1;
    for (size_t i = 0; i < x.value[o].size(); ++i) {
      c *= y.value[o].size();
      if (c > 1u << 24) return out;  // absurd size guard; not hit in practice
    }
    if (x.value[o].size() > 0 && y.value[o].size() == 0) c = 0;
    counts[o] = c;
  }
  std::vector<SetFunction> comp(n);
  std::function<void(size_t)> assign = [&](size_t o) {
    if (o == n) {
      DiagramMorphism m;
      m.dom = x;
      m.cod = y;
      m.component = comp;
      out.push_back(std::move(m));
      return;
    }
    SetFunction f;
    f.dom = x.value[o];
    f.cod = y.value[o];
    f.map.assign(x.value[o].size(), 0);
    for (size_t code = 0; code < counts[o]; ++code) {
      size_t rest = code;
      for (size_t i = 0; i < f.map.size(); ++i) {
        f.map[i] = int(rest % y.value[o].size());
        rest /= y.value[o].size();
      }
      comp[o] = f;
      bool natural = true;
      for (size_t m = 0; m < shape.num_morphisms() && natural; ++m) {
        const Mor& mor = shape.morphisms[m];
        if (size_t(mor.src) > o || size_t(mor.dst) > o) continue;
        if (size_t(mor.src) != o && size_t(mor.dst) != o) continue;
        for (size_t e = 0; e < x.value[mor.src].size(); ++e)
          if (y.action[m].map[comp[mor.src].map[e]] !=
              comp[mor.dst].map[x.action[m].map[e]]) {
            natural = false;
            break;
          }
      }
      if (natural) assign(o + 1);
    }
    if (counts[o] == 0) return;
    comp[o] = SetFunction{};
  };
  // Objects with empty X(o) and empty Y(o) still need the empty function.
  assign(0);
  return out;
}

bool exists_natural_iso(const FinSetDiagram& x, const FinSetDiagram& y) {
  if (!(*x.shape == *y.shape)) return false;
  const FinCategory& shape = *x.shape;
  const size_t n = shape.num_objects();
  for (size_t o = 0; o < n; ++o)
    if (x.value[o].size() != y.value[o].size()) return false;
  std::vector<std::vector<int>> comp(n);
  std::function<bool(size_t)> assign = [&](size_t o) -> bool {
    if (o == n) return true;
    std::vector<int> perm(x.value[o].size());
    std::iota(perm.begin(), perm.end(), 0);
    do {
      comp[o] = perm;
      bool natural = true;
      for (size_t m = 0; m < shape.num_morphisms() && natural; ++m) {
        const Mor& mor = shape.morphisms[m];
        if (size_t(mor.src) > o || size_t(mor.dst) > o) continue;
        if (size_t(mor.src) != o && size_t(mor.dst) != o) continue;
        for (size_t e = 0; e < x.value[mor.src].size(); ++e)
          if (y.action[m].map[comp[mor.src][e]] !=
              comp[mor.dst][x.action[m].map[e]]) {
            natural = false;
            break;
          }
      }
      if (natural && assign(o + 1)) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
  };
  return assign(0);
}

FinSetDiagram restrict_diagram(const Functor& u, const FinSetDiagram& x) {
  FinSetDiagram out;
  out.shape = u.dom;
  for (size_t o = 0; o < u.dom->num_objects(); ++o)
    out.value.push_back(x.value[u.obj_map[o]]);
  for (size_t m = 0; m < u.dom->num_morphisms(); ++m)
    out.action.push_back(x.action[u.mor_map[m]]);
  return out;
}

DiagramMorphism restrict_morphism(const Functor& u, const DiagramMorphism& m) {
  DiagramMorphism out;
  out.dom = restrict_diagram(u, m.dom);
  out.cod = restrict_diagram(u, m.cod);
  for (size_t o = 0; o < u.dom->num_objects(); ++o)
    out.component.push_back(m.component[u.obj_map[o]]);
  return out;
}

LimitResult limit_finset(const FinSetDiagram& d) {
  const FinCategory& shape = *d.shape;
  const size_t n = shape.num_objects();
  LimitResult out;
  std::vector<std::vector<int>> families;
  std::vector<int> current(n, -1);
  std::function<void(size_t)> assign = [&](size_t o) {
    if (o == n) {
      families.push_back(current);
      return;
    }
    for (size_t e = 0; e < d.value[o].size(); ++e) {
      current[o] = int(e);
      bool compatible = true;
      for (size_t m = 0; m < shape.num_morphisms() && compatible; ++m) {
        const Mor& mor = shape.morphisms[m];
        if (size_t(mor.src) > o || size_t(mor.dst) > o) continue;
        if (size_t(mor.src) != o && size_t(mor.dst) != o) continue;
        if (d.action[m].apply(current[mor.src]) != current[mor.dst])
          compatible = false;
      }
      if (compatible) assign(o + 1);
      current[o] = -1;
    }
  };
  assign(0);
  for (const auto& fam : families) {
    std::string name = "(";
    for (size_t o = 0; o < n; ++o) {
      if (o) name += ",";
      name += d.value[o].elems[fam[o]];
    }
    name += ")";
    out.set.elems.push_back(name);
  }
  for (size_t o = 0; o < n; ++o) {
    SetFunction pr;
    pr.dom = out.set;
    pr.cod = d.value[o];
    for (const auto& fam : families) pr.map.push_back(fam[o]);
    out.projections.push_back(std::move(pr));
  }
  return out;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

ColimitResult colimit_finset(const FinSetDiagram& d) {
  const FinCategory& shape = *d.shape;
  const size_t n = shape.num_objects();
  std::vector<int> offset(n + 1, 0);
  for (size_t o = 0; o < n; ++o) offset[o + 1] = offset[o] + int(d.value[o].size());
  UnionFind uf{size_t(offset[n])};
  for (size_t m = 0; m < shape.num_morphisms(); ++m) {
    const Mor& mor = shape.morphisms[m];
    for (size_t e = 0; e < d.value[mor.src].size(); ++e)
      uf.unite(offset[mor.src] + int(e), offset[mor.dst] + d.action[m].apply(int(e)));
  }
  ColimitResult out;
  std::vector<int> class_of(static_cast<size_t>(offset[n]), -1);
  for (int i = 0; i < offset[n]; ++i) {
    int root = uf.find(i);
    if (class_of[root] < 0) {
      class_of[root] = int(out.set.elems.size());
      int obj = 0;
      while (offset[obj + 1] <= root) ++obj;
      int elem = root - offset[obj];
      out.representative.push_back({obj, elem});
      out.set.elems.push_back("[" + shape.objects[obj] + "." +
                              d.value[obj].elems[elem] + "]");
    }
    class_of[i] = class_of[root];
  }
  for (size_t o = 0; o < n; ++o) {
    SetFunction in;
    in.dom = d.value[o];
    in.cod = out.set;
    for (size_t e = 0; e < d.value[o].size(); ++e)
      in.map.push_back(class_of[offset[o] + int(e)]);
    out.injections.push_back(std::move(in));
  }
  return out;
}

bool limit_universal_property(const FinSetDiagram& d, const LimitResult& lim,
                              const FinSet& apex,
                              const std::vector<SetFunction>& legs) {
  const FinCategory& shape = *d.shape;
  // Every apex element determines a compatible family; the mediating map must
  // send it to that family, and it must exist and be unique.
  for (size_t t = 0; t < apex.size(); ++t) {
    int found = -1;
    for (size_t l = 0; l < lim.set.size(); ++l) {
      bool matches = true;
      for (size_t o = 0; o < shape.num_objects() && matches; ++o)
        if (lim.projections[o].apply(int(l)) != legs[o].apply(int(t)))
          matches = false;
      if (matches) {
        if (found >= 0) return false;  // not unique
        found = int(l);
      }
    }
    if (found < 0) return false;  // no mediating value
  }
  return true;
}

bool colimit_universal_property(const FinSetDiagram& d, const ColimitResult& col,
                                const FinSet& nadir,
                                const std::vector<SetFunction>& legs) {
  (void)nadir;
  const FinCategory& shape = *d.shape;
  // The mediating map is forced on each class; it exists iff the legs are
  // constant on classes.
  std::vector<int> mediating(col.set.size(), -1);
  for (size_t o = 0; o < shape.num_objects(); ++o)
    for (size_t e = 0; e < d.value[o].size(); ++e) {
      int cls = col.injections[o].apply(int(e));
      int v = legs[o].apply(int(e));
      if (mediating[cls] >= 0 && mediating[cls] != v) return false;
      mediating[cls] = v;
    }
  return true;
}

}  // namespace derlab
