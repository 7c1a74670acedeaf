#include "derlab/twocat.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "derlab/corpus.hpp"

namespace derlab {

void Fin2Category::init_tables() {
  obj_lookup_.clear();
  one_lookup_.clear();
  two_lookup_.clear();
  for (size_t i = 0; i < objects.size(); ++i) obj_lookup_[objects[i]] = int(i);
  for (size_t i = 0; i < one_cells.size(); ++i) one_lookup_[one_cells[i].id] = int(i);
  for (size_t i = 0; i < two_cells.size(); ++i) two_lookup_[two_cells[i].id] = int(i);
  one_table_.assign(one_cells.size() * one_cells.size(), -1);
  v_table_.assign(two_cells.size() * two_cells.size(), -1);
  h_table_.assign(two_cells.size() * two_cells.size(), -1);
}

int Fin2Category::object_index(const std::string& name) const {
  auto it = obj_lookup_.find(name);
  return it == obj_lookup_.end() ? -1 : it->second;
}
int Fin2Category::one_cell_index(const std::string& name) const {
  auto it = one_lookup_.find(name);
  return it == one_lookup_.end() ? -1 : it->second;
}
int Fin2Category::two_cell_index(const std::string& name) const {
  auto it = two_lookup_.find(name);
  return it == two_lookup_.end() ? -1 : it->second;
}

bool Fin2Category::is_one_identity(int f) const {
  const OneCell& c = one_cells[f];
  return c.src == c.dst && one_identity[c.src] == f;
}

bool Fin2Category::is_two_identity(int t) const {
  const TwoCellData& c = two_cells[t];
  return c.src_one == c.dst_one && two_identity[c.src_one] == t;
}

std::vector<int> Fin2Category::one_hom(int a, int b) const {
  std::vector<int> out;
  for (size_t f = 0; f < one_cells.size(); ++f)
    if (one_cells[f].src == a && one_cells[f].dst == b) out.push_back(int(f));
  return out;
}

std::vector<int> Fin2Category::two_hom(int f, int g) const {
  std::vector<int> out;
  for (size_t t = 0; t < two_cells.size(); ++t)
    if (two_cells[t].src_one == f && two_cells[t].dst_one == g) out.push_back(int(t));
  return out;
}

std::optional<int> Fin2Category::two_inverse(int t) const {
  const TwoCellData& c = two_cells[t];
  for (int s : two_hom(c.dst_one, c.src_one))
    if (vcompose(s, t) == two_identity[c.src_one] &&
        vcompose(t, s) == two_identity[c.dst_one])
      return s;
  return std::nullopt;
}

std::string Fin2Category::structural_key() const {
  std::ostringstream os;
  for (const auto& o : objects) os << o << ';';
  os << '#';
  for (const auto& c : one_cells) os << c.id << ':' << c.src << '>' << c.dst << ';';
  os << '#';
  for (const auto& c : two_cells)
    os << c.id << ':' << c.src_one << '>' << c.dst_one << ';';
  os << '#';
  for (int v : one_identity) os << v << ',';
  for (int v : two_identity) os << v << ',';
  os << '#';
  for (int v : one_table_) os << v << ',';
  os << '#';
  for (int v : v_table_) os << v << ',';
  os << '#';
  for (int v : h_table_) os << v << ',';
  return os.str();
}

ValidationReport validate_2category(const Fin2Category& a) {
  ValidationReport report;
  const size_t n1 = a.num_one_cells(), n2 = a.num_two_cells();
  // 1-cell level: a category.
  for (size_t g = 0; g < n1; ++g)
    for (size_t f = 0; f < n1; ++f) {
      bool composable = a.one_cells[f].dst == a.one_cells[g].src;
      int gf = a.compose_one(int(g), int(f));
      if (composable && gf < 0)
        report.push_back({"MissingComposite", "1-cells (" + a.one_cells[g].id +
                                                  ", " + a.one_cells[f].id + ")"});
      if (!composable && gf >= 0)
        report.push_back({"SpuriousComposite", "1-cells (" + a.one_cells[g].id +
                                                   ", " + a.one_cells[f].id + ")"});
      if (composable && gf >= 0 &&
          (a.one_cells[gf].src != a.one_cells[f].src ||
           a.one_cells[gf].dst != a.one_cells[g].dst))
        report.push_back({"BoundaryViolation", "1-cell composite " + a.one_cells[gf].id});
    }
  if (!report.empty()) return report;
  for (size_t f = 0; f < n1; ++f) {
    const OneCell& c = a.one_cells[f];
    if (a.compose_one(int(f), a.one_identity[c.src]) != int(f) ||
        a.compose_one(a.one_identity[c.dst], int(f)) != int(f))
      report.push_back({"IdentityViolation", "1-cell " + c.id});
  }
  for (size_t h = 0; h < n1; ++h)
    for (size_t g = 0; g < n1; ++g)
      for (size_t f = 0; f < n1; ++f) {
        if (a.one_cells[f].dst != a.one_cells[g].src ||
            a.one_cells[g].dst != a.one_cells[h].src)
          continue;
        if (a.compose_one(int(h), a.compose_one(int(g), int(f))) !=
            a.compose_one(a.compose_one(int(h), int(g)), int(f)))
          report.push_back({"AssociativityViolation", "1-cells at " + a.one_cells[h].id});
      }

  // Hom-wise category structure for 2-cells.
  for (size_t b = 0; b < n2; ++b)
    for (size_t t = 0; t < n2; ++t) {
      bool composable = a.two_cells[t].dst_one == a.two_cells[b].src_one;
      int bt = a.vcompose(int(b), int(t));
      if (composable && bt < 0)
        report.push_back({"MissingComposite", "2-cells (" + a.two_cells[b].id +
                                                  ", " + a.two_cells[t].id + ")"});
      if (!composable && bt >= 0)
        report.push_back({"SpuriousComposite", "2-cells (" + a.two_cells[b].id +
                                                   ", " + a.two_cells[t].id + ")"});
      if (composable && bt >= 0 &&
          (a.two_cells[bt].src_one != a.two_cells[t].src_one ||
           a.two_cells[bt].dst_one != a.two_cells[b].dst_one))
        report.push_back({"BoundaryViolation", "vertical composite " + a.two_cells[bt].id});
    }
  if (!report.empty()) return report;
  for (size_t t = 0; t < n2; ++t) {
    const TwoCellData& c = a.two_cells[t];
    if (a.vcompose(int(t), a.two_identity[c.src_one]) != int(t) ||
        a.vcompose(a.two_identity[c.dst_one], int(t)) != int(t))
      report.push_back({"IdentityViolation", "2-cell " + c.id});
  }
  for (size_t c2 = 0; c2 < n2; ++c2)
    for (size_t b = 0; b < n2; ++b)
      for (size_t t = 0; t < n2; ++t) {
        if (a.two_cells[t].dst_one != a.two_cells[b].src_one ||
            a.two_cells[b].dst_one != a.two_cells[c2].src_one)
          continue;
        if (a.vcompose(int(c2), a.vcompose(int(b), int(t))) !=
            a.vcompose(a.vcompose(int(c2), int(b)), int(t)))
          report.push_back({"AssociativityViolation", "2-cells at " + a.two_cells[c2].id});
      }

  // Horizontal composition of 2-cells.
  for (size_t b = 0; b < n2; ++b)
    for (size_t t = 0; t < n2; ++t) {
      const TwoCellData& tb = a.two_cells[b];
      const TwoCellData& tt = a.two_cells[t];
      bool composable = a.one_cells[tt.src_one].dst == a.one_cells[tb.src_one].src;
      int ht = a.hcompose(int(b), int(t));
      if (composable && ht < 0)
        report.push_back({"MissingComposite", "horizontal (" + tb.id + ", " + tt.id + ")"});
      if (!composable && ht >= 0)
        report.push_back({"SpuriousComposite", "horizontal (" + tb.id + ", " + tt.id + ")"});
      if (composable && ht >= 0) {
        int want_src = a.compose_one(tb.src_one, tt.src_one);
        int want_dst = a.compose_one(tb.dst_one, tt.dst_one);
        if (a.two_cells[ht].src_one != want_src ||
            a.two_cells[ht].dst_one != want_dst)
          report.push_back(
              {"BoundaryViolation", "horizontal composite " + a.two_cells[ht].id});
      }
    }
  if (!report.empty()) return report;
  // Horizontal identities, units and associativity.
  for (size_t g = 0; g < n1; ++g)
    for (size_t f = 0; f < n1; ++f) {
      if (a.one_cells[f].dst != a.one_cells[g].src) continue;
      if (a.hcompose(a.two_identity[g], a.two_identity[f]) !=
          a.two_identity[a.compose_one(int(g), int(f))])
        report.push_back({"InterchangeViolation",
                          "identities at (" + a.one_cells[g].id + ", " +
                              a.one_cells[f].id + ")"});
    }
  for (size_t t = 0; t < n2; ++t) {
    const TwoCellData& c = a.two_cells[t];
    int left_id = a.one_identity[a.one_cells[c.src_one].dst];
    int right_id = a.one_identity[a.one_cells[c.src_one].src];
    if (a.hcompose(a.two_identity[left_id], int(t)) != int(t) ||
        a.hcompose(int(t), a.two_identity[right_id]) != int(t))
      report.push_back({"IdentityViolation", "horizontal unit at " + c.id});
  }
  for (size_t c2 = 0; c2 < n2; ++c2)
    for (size_t b = 0; b < n2; ++b)
      for (size_t t = 0; t < n2; ++t) {
        if (a.hcompose(int(b), int(t)) < 0 || a.hcompose(int(c2), int(b)) < 0)
          continue;
        if (a.hcompose(int(c2), a.hcompose(int(b), int(t))) !=
            a.hcompose(a.hcompose(int(c2), int(b)), int(t)))
          report.push_back(
              {"AssociativityViolation", "horizontal at " + a.two_cells[c2].id});
      }
  // Middle-four interchange.
  for (size_t b2 = 0; b2 < n2; ++b2)
    for (size_t b1 = 0; b1 < n2; ++b1) {
      if (a.vcompose(int(b2), int(b1)) < 0) continue;
      for (size_t a2 = 0; a2 < n2; ++a2) {
        if (a.hcompose(int(b1), int(a2)) < 0) continue;
        for (size_t a1 = 0; a1 < n2; ++a1) {
          if (a.vcompose(int(a2), int(a1)) < 0) continue;
          if (a.hcompose(int(b1), int(a1)) < 0) continue;
          int lhs = a.hcompose(a.vcompose(int(b2), int(b1)),
                               a.vcompose(int(a2), int(a1)));
          int rhs = a.vcompose(a.hcompose(int(b2), int(a2)),
                               a.hcompose(int(b1), int(a1)));
          if (lhs != rhs)
            report.push_back({"InterchangeViolation",
                              "(" + a.two_cells[b2].id + "," + a.two_cells[b1].id +
                                  "," + a.two_cells[a2].id + "," +
                                  a.two_cells[a1].id + ")"});
        }
      }
    }
  return report;
}

TwoCatPtr two_category_from_category(CatPtr c) {
  auto out = std::make_shared<Fin2Category>();
  out->objects = c->objects;
  for (const Mor& m : c->morphisms) out->one_cells.push_back({m.id, m.src, m.dst});
  out->one_identity = c->identity;
  for (size_t m = 0; m < c->num_morphisms(); ++m)
    out->two_cells.push_back({"id2:" + c->morphisms[m].id, int(m), int(m)});
  out->two_identity.resize(c->num_morphisms());
  for (size_t m = 0; m < c->num_morphisms(); ++m) out->two_identity[m] = int(m);
  out->init_tables();
  for (size_t g = 0; g < c->num_morphisms(); ++g)
    for (size_t f = 0; f < c->num_morphisms(); ++f) {
      int gf = c->compose(int(g), int(f));
      if (gf >= 0) {
        out->set_compose_one(int(g), int(f), gf);
        out->set_hcompose(int(g), int(f), gf);
      }
    }
  for (size_t t = 0; t < c->num_morphisms(); ++t)
    out->set_vcompose(int(t), int(t), int(t));
  return out;
}

CatFragmentResult cat_fragment_2category(const std::vector<CatPtr>& cats) {
  CatFragmentResult out;
  out.objects = cats;
  auto two = std::make_shared<Fin2Category>();
  std::vector<std::pair<int, int>> one_ends;
  std::vector<std::pair<int, int>> two_ends;  // (src 1-cell, dst 1-cell)
  for (size_t i = 0; i < cats.size(); ++i)
    two->objects.push_back("C" + std::to_string(i));
  for (size_t i = 0; i < cats.size(); ++i)
    for (size_t j = 0; j < cats.size(); ++j)
      for (Functor& f : all_functors(cats[i], cats[j])) {
        one_ends.push_back({int(i), int(j)});
        two->one_cells.push_back(
            {"F" + std::to_string(two->one_cells.size()), int(i), int(j)});
        out.one_cells.push_back(std::move(f));
      }
  auto one_at = [&](const Functor& f) {
    for (size_t i = 0; i < out.one_cells.size(); ++i)
      if (functor_equal(out.one_cells[i], f)) return int(i);
    return -1;
  };
  two->one_identity.resize(cats.size());
  for (size_t i = 0; i < cats.size(); ++i)
    two->one_identity[i] = one_at(identity_functor(cats[i]));
  for (size_t p = 0; p < out.one_cells.size(); ++p)
    for (size_t q = 0; q < out.one_cells.size(); ++q) {
      if (one_ends[p] != one_ends[q]) continue;
      for (NatTrans& t : all_nat_trans(out.one_cells[p], out.one_cells[q])) {
        two_ends.push_back({int(p), int(q)});
        two->two_cells.push_back(
            {"t" + std::to_string(two->two_cells.size()), int(p), int(q)});
        out.two_cells.push_back(std::move(t));
      }
    }
  auto two_at = [&](int src, int dst, const std::vector<int>& comp) {
    for (size_t i = 0; i < out.two_cells.size(); ++i)
      if (two_ends[i].first == src && two_ends[i].second == dst &&
          out.two_cells[i].component == comp)
        return int(i);
    return -1;
  };
  two->two_identity.resize(out.one_cells.size());
  for (size_t p = 0; p < out.one_cells.size(); ++p)
    two->two_identity[p] =
        two_at(int(p), int(p), identity_nat_trans(out.one_cells[p]).component);
  two->init_tables();
  for (size_t g = 0; g < out.one_cells.size(); ++g)
    for (size_t f = 0; f < out.one_cells.size(); ++f) {
      if (one_ends[f].second != one_ends[g].first) continue;
      two->set_compose_one(
          int(g), int(f),
          one_at(compose_functors(out.one_cells[g], out.one_cells[f])));
    }
  for (size_t b = 0; b < out.two_cells.size(); ++b)
    for (size_t t = 0; t < out.two_cells.size(); ++t) {
      if (two_ends[t].second == two_ends[b].first)
        two->set_vcompose(int(b), int(t),
                          two_at(two_ends[t].first, two_ends[b].second,
                                 vcompose(out.two_cells[b], out.two_cells[t])
                                     .component));
      if (one_ends[two_ends[t].first].second ==
          one_ends[two_ends[b].first].first) {
        NatTrans h = hcompose(out.two_cells[b], out.two_cells[t]);
        two->set_hcompose(
            int(b), int(t),
            two_at(two->compose_one(two_ends[b].first, two_ends[t].first),
                   two->compose_one(two_ends[b].second, two_ends[t].second),
                   h.component));
      }
    }
  out.two_category = two;
  return out;
}

ValidationReport validate_2functor(const TwoFunctor& f) {
  ValidationReport report;
  const Fin2Category& a = *f.dom;
  const Fin2Category& b = *f.cod;
  if (f.obj_map.size() != a.num_objects() ||
      f.one_map.size() != a.num_one_cells() ||
      f.two_map.size() != a.num_two_cells()) {
    report.push_back({"FunctorShape", "map sizes"});
    return report;
  }
  for (size_t c = 0; c < a.num_one_cells(); ++c) {
    const OneCell& oc = a.one_cells[c];
    const OneCell& img = b.one_cells[f.one_map[c]];
    if (img.src != f.obj_map[oc.src] || img.dst != f.obj_map[oc.dst])
      report.push_back({"FunctorBoundary", "1-cell " + oc.id});
  }
  for (size_t t = 0; t < a.num_two_cells(); ++t) {
    const TwoCellData& tc = a.two_cells[t];
    const TwoCellData& img = b.two_cells[f.two_map[t]];
    if (img.src_one != f.one_map[tc.src_one] ||
        img.dst_one != f.one_map[tc.dst_one])
      report.push_back({"FunctorBoundary", "2-cell " + tc.id});
  }
  if (!report.empty()) return report;
  for (size_t o = 0; o < a.num_objects(); ++o)
    if (f.one_map[a.one_identity[o]] != b.one_identity[f.obj_map[o]])
      report.push_back({"FunctorIdentity", "object " + a.objects[o]});
  for (size_t c = 0; c < a.num_one_cells(); ++c)
    if (f.two_map[a.two_identity[c]] != b.two_identity[f.one_map[c]])
      report.push_back({"FunctorIdentity", "1-cell " + a.one_cells[c].id});
  for (size_t g = 0; g < a.num_one_cells(); ++g)
    for (size_t h = 0; h < a.num_one_cells(); ++h) {
      int gh = a.compose_one(int(g), int(h));
      if (gh < 0) continue;
      if (f.one_map[gh] != b.compose_one(f.one_map[g], f.one_map[h]))
        report.push_back({"FunctorComposition", "1-cells at " + a.one_cells[g].id});
    }
  for (size_t s = 0; s < a.num_two_cells(); ++s)
    for (size_t t = 0; t < a.num_two_cells(); ++t) {
      int vc = a.vcompose(int(s), int(t));
      if (vc >= 0 && f.two_map[vc] != b.vcompose(f.two_map[s], f.two_map[t]))
        report.push_back({"FunctorComposition", "vertical at " + a.two_cells[s].id});
      int hc = a.hcompose(int(s), int(t));
      if (hc >= 0 && f.two_map[hc] != b.hcompose(f.two_map[s], f.two_map[t]))
        report.push_back({"FunctorComposition", "horizontal at " + a.two_cells[s].id});
    }
  return report;
}

TwoFunctor identity_2functor(TwoCatPtr c) {
  TwoFunctor f;
  f.dom = c;
  f.cod = c;
  f.obj_map.resize(c->num_objects());
  f.one_map.resize(c->num_one_cells());
  f.two_map.resize(c->num_two_cells());
  for (size_t i = 0; i < f.obj_map.size(); ++i) f.obj_map[i] = int(i);
  for (size_t i = 0; i < f.one_map.size(); ++i) f.one_map[i] = int(i);
  for (size_t i = 0; i < f.two_map.size(); ++i) f.two_map[i] = int(i);
  return f;
}

ValidationReport validate_pseudonatural(const Pseudonatural& a) {
  ValidationReport report;
  const TwoFunctor& f = a.source;
  const TwoFunctor& g = a.target;
  if (!(*f.dom == *g.dom) || !(*f.cod == *g.cod)) {
    report.push_back({"BoundaryMismatch", "source/target 2-functors not parallel"});
    return report;
  }
  const Fin2Category& dom = *f.dom;
  const Fin2Category& cod = *f.cod;
  if (a.component.size() != dom.num_objects() ||
      a.naturality.size() != dom.num_one_cells()) {
    report.push_back({"BoundaryMismatch", "component table sizes"});
    return report;
  }
  for (size_t c = 0; c < dom.num_objects(); ++c) {
    const OneCell& oc = cod.one_cells[a.component[c]];
    if (oc.src != f.obj_map[c] || oc.dst != g.obj_map[c])
      report.push_back({"BoundaryMismatch", "component at " + dom.objects[c]});
  }
  if (!report.empty()) return report;
  for (size_t w = 0; w < dom.num_one_cells(); ++w) {
    const OneCell& oc = dom.one_cells[w];
    int want_src = cod.compose_one(a.component[oc.dst], f.one_map[w]);
    int want_dst = cod.compose_one(g.one_map[w], a.component[oc.src]);
    const TwoCellData& nat = cod.two_cells[a.naturality[w]];
    if (nat.src_one != want_src || nat.dst_one != want_dst) {
      report.push_back({"BoundaryMismatch", "naturality cell at " + oc.id});
      continue;
    }
    if (!cod.two_is_iso(a.naturality[w]))
      report.push_back({"NonInvertibleNaturality2Cell", oc.id});
  }
  if (!report.empty()) return report;
  // Unit coherence: the cell at an identity 1-cell is an identity.
  for (size_t o = 0; o < dom.num_objects(); ++o)
    if (a.naturality[dom.one_identity[o]] != cod.two_identity[a.component[o]])
      report.push_back({"CoherenceViolation", "unit at " + dom.objects[o]});
  // Composition coherence.
  for (size_t w2 = 0; w2 < dom.num_one_cells(); ++w2)
    for (size_t w1 = 0; w1 < dom.num_one_cells(); ++w1) {
      int w21 = dom.compose_one(int(w2), int(w1));
      if (w21 < 0) continue;
      int lhs = a.naturality[w21];
      int rhs =
          cod.vcompose(cod.whisker_post(g.one_map[w2], a.naturality[w1]),
                       cod.whisker_pre(a.naturality[w2], f.one_map[w1]));
      if (lhs != rhs)
        report.push_back({"CoherenceViolation",
                          "composite at (" + dom.one_cells[w2].id + ", " +
                              dom.one_cells[w1].id + ")"});
    }
  // 2-cell naturality.
  for (size_t t = 0; t < dom.num_two_cells(); ++t) {
    const TwoCellData& tc = dom.two_cells[t];
    int c_src = dom.one_cells[tc.src_one].src;
    int c_dst = dom.one_cells[tc.src_one].dst;
    int lhs = cod.vcompose(
        cod.hcompose(g.two_map[t], cod.two_identity[a.component[c_src]]),
        a.naturality[tc.src_one]);
    int rhs = cod.vcompose(
        a.naturality[tc.dst_one],
        cod.hcompose(cod.two_identity[a.component[c_dst]], f.two_map[t]));
    if (lhs != rhs)
      report.push_back({"CoherenceViolation", "2-cell naturality at " + tc.id});
  }
  return report;
}

bool is_two_natural(const Pseudonatural& a) {
  const Fin2Category& cod = *a.source.cod;
  for (size_t w = 0; w < a.naturality.size(); ++w)
    if (!cod.is_two_identity(a.naturality[w])) return false;
  return true;
}

Pseudonatural identity_pseudonatural(const TwoFunctor& f) {
  Pseudonatural a;
  a.source = f;
  a.target = f;
  const Fin2Category& cod = *f.cod;
  for (size_t o = 0; o < f.dom->num_objects(); ++o)
    a.component.push_back(cod.one_identity[f.obj_map[o]]);
  for (size_t w = 0; w < f.dom->num_one_cells(); ++w)
    a.naturality.push_back(cod.two_identity[f.one_map[w]]);
  return a;
}

Pseudonatural pcompose(const Pseudonatural& b, const Pseudonatural& a) {
  const Fin2Category& cod = *a.source.cod;
  Pseudonatural out;
  out.source = a.source;
  out.target = b.target;
  for (size_t o = 0; o < a.component.size(); ++o)
    out.component.push_back(cod.compose_one(b.component[o], a.component[o]));
  for (size_t w = 0; w < a.naturality.size(); ++w) {
    const OneCell& oc = a.source.dom->one_cells[w];
    int first = cod.whisker_post(b.component[oc.dst], a.naturality[w]);
    int second = cod.whisker_pre(b.naturality[w], a.component[oc.src]);
    out.naturality.push_back(cod.vcompose(second, first));
  }
  return out;
}

ValidationReport validate_modification(const Modification& m) {
  ValidationReport report;
  const Pseudonatural& s = m.source;
  const Pseudonatural& t = m.target;
  const Fin2Category& cod = *s.source.cod;
  const Fin2Category& dom = *s.source.dom;
  if (m.component.size() != dom.num_objects()) {
    report.push_back({"BoundaryMismatch", "component table size"});
    return report;
  }
  for (size_t o = 0; o < dom.num_objects(); ++o) {
    const TwoCellData& c = cod.two_cells[m.component[o]];
    if (c.src_one != s.component[o] || c.dst_one != t.component[o])
      report.push_back({"BoundaryMismatch", "component at " + dom.objects[o]});
  }
  if (!report.empty()) return report;
  for (size_t w = 0; w < dom.num_one_cells(); ++w) {
    const OneCell& oc = dom.one_cells[w];
    int lhs = cod.vcompose(
        t.naturality[w],
        cod.whisker_pre(m.component[oc.dst], s.source.one_map[w]));
    int rhs = cod.vcompose(
        cod.whisker_post(s.target.one_map[w], m.component[oc.src]),
        s.naturality[w]);
    if (lhs != rhs)
      report.push_back({"CoherenceViolation", "modification axiom at " + oc.id});
  }
  return report;
}

std::optional<EquivalenceWitness> is_equivalence_1cell(const Fin2Category& amb,
                                                       int f) {
  const OneCell& oc = amb.one_cells[f];
  for (int g : amb.one_hom(oc.dst, oc.src)) {
    int gf = amb.compose_one(g, f);
    int fg = amb.compose_one(f, g);
    for (int unit : amb.two_hom(amb.one_identity[oc.src], gf)) {
      if (!amb.two_is_iso(unit)) continue;
      for (int counit : amb.two_hom(fg, amb.one_identity[oc.dst])) {
        if (!amb.two_is_iso(counit)) continue;
        return EquivalenceWitness{g, unit, counit};
      }
    }
  }
  return std::nullopt;
}

namespace {

// Adjoint-equivalence promotion: keep the unit, correct the counit so the
// triangle identities hold on the nose.
int promoted_counit(const Fin2Category& amb, int f, const EquivalenceWitness& w) {
  int phi =
      amb.vcompose(amb.whisker_pre(w.counit, f), amb.whisker_post(f, w.unit));
  int phi_inv = *amb.two_inverse(phi);
  return amb.vcompose(w.counit, amb.whisker_pre(phi_inv, w.inverse));
}

}  // namespace

QuasiInverseResult pointwise_quasi_inverse(const Pseudonatural& a) {
  const Fin2Category& amb = *a.source.cod;
  const Fin2Category& dom = *a.source.dom;
  const TwoFunctor& f_fun = a.source;
  const TwoFunctor& g_fun = a.target;
  std::vector<int> inv, unit, counit;
  for (size_t c = 0; c < dom.num_objects(); ++c) {
    auto w = is_equivalence_1cell(amb, a.component[c]);
    if (!w)
      throw Error("NotPointwiseEquivalence",
                  "component at " + dom.objects[c] + " is not an equivalence");
    inv.push_back(w->inverse);
    unit.push_back(w->unit);
    counit.push_back(promoted_counit(amb, a.component[c], *w));
  }
  QuasiInverseResult out;
  out.inverse.source = g_fun;
  out.inverse.target = f_fun;
  out.inverse.component = inv;
  out.inverse.naturality.resize(dom.num_one_cells());
  for (size_t w = 0; w < dom.num_one_cells(); ++w) {
    const OneCell& oc = dom.one_cells[w];
    int c = oc.src, cp = oc.dst;
    // γ_{c'} G(w) ⇒ γ_{c'} G(w) α_c γ_c ⇒ γ_{c'} α_{c'} F(w) γ_c ⇒ F(w) γ_c
    int head = amb.compose_one(inv[cp], g_fun.one_map[w]);
    int t1 = amb.hcompose(amb.two_identity[head], *amb.two_inverse(counit[c]));
    int nat_inv = *amb.two_inverse(a.naturality[w]);
    int t2 = amb.hcompose(amb.two_identity[inv[cp]],
                          amb.hcompose(nat_inv, amb.two_identity[inv[c]]));
    int tail = amb.compose_one(f_fun.one_map[w], inv[c]);
    int t3 = amb.hcompose(*amb.two_inverse(unit[cp]), amb.two_identity[tail]);
    out.inverse.naturality[w] = amb.vcompose(t3, amb.vcompose(t2, t1));
  }
  Pseudonatural ag = pcompose(a, out.inverse);  // G ⇒ G
  Pseudonatural ga = pcompose(out.inverse, a);  // F ⇒ F
  out.counit_mod.source = ag;
  out.counit_mod.target = identity_pseudonatural(g_fun);
  out.counit_mod.component = counit;
  out.unit_mod.source = ga;
  out.unit_mod.target = identity_pseudonatural(f_fun);
  for (size_t c = 0; c < dom.num_objects(); ++c)
    out.unit_mod.component.push_back(*amb.two_inverse(unit[c]));
  return out;
}

std::optional<Pseudonatural> exhaustive_2natural_inverse_search(
    const Pseudonatural& a) {
  const Fin2Category& amb = *a.source.cod;
  const Fin2Category& dom = *a.source.dom;
  const TwoFunctor& f_fun = a.source;
  const TwoFunctor& g_fun = a.target;
  const size_t n = dom.num_objects();

  std::vector<int> comp(n, -1);
  std::optional<Pseudonatural> found;

  auto strictly_natural = [&](const std::vector<int>& cand) {
    for (size_t w = 0; w < dom.num_one_cells(); ++w) {
      const OneCell& oc = dom.one_cells[w];
      if (amb.compose_one(f_fun.one_map[w], cand[oc.src]) !=
          amb.compose_one(cand[oc.dst], g_fun.one_map[w]))
        return false;
    }
    for (size_t t = 0; t < dom.num_two_cells(); ++t) {
      const TwoCellData& tc = dom.two_cells[t];
      int c_src = dom.one_cells[tc.src_one].src;
      int c_dst = dom.one_cells[tc.src_one].dst;
      if (amb.hcompose(f_fun.two_map[t], amb.two_identity[cand[c_src]]) !=
          amb.hcompose(amb.two_identity[cand[c_dst]], g_fun.two_map[t]))
        return false;
    }
    return true;
  };

  auto has_invertible_modifications = [&](const Pseudonatural& beta) {
    Pseudonatural ab = pcompose(a, beta);  // G ⇒ G
    Pseudonatural ba = pcompose(beta, a);  // F ⇒ F
    Pseudonatural idg = identity_pseudonatural(g_fun);
    Pseudonatural idf = identity_pseudonatural(f_fun);
    std::function<bool(size_t, Modification&)> search =
        [&](size_t o, Modification& m) -> bool {
      if (o == n) return validate_modification(m).empty();
      for (int t : amb.two_hom(m.source.component[o], m.target.component[o])) {
        if (!amb.two_is_iso(t)) continue;
        m.component[o] = t;
        if (search(o + 1, m)) return true;
      }
      return false;
    };
    Modification lambda;
    lambda.source = ab;
    lambda.target = idg;
    lambda.component.assign(n, -1);
    if (!search(0, lambda)) return false;
    Modification theta;
    theta.source = ba;
    theta.target = idf;
    theta.component.assign(n, -1);
    return search(0, theta);
  };

  std::function<bool(size_t)> assign = [&](size_t o) -> bool {
    if (o == n) {
      if (!strictly_natural(comp)) return false;
      Pseudonatural beta;
      beta.source = g_fun;
      beta.target = f_fun;
      beta.component = comp;
      for (size_t w = 0; w < dom.num_one_cells(); ++w) {
        const OneCell& oc = dom.one_cells[w];
        beta.naturality.push_back(
            amb.two_identity[amb.compose_one(f_fun.one_map[w], comp[oc.src])]);
      }
      if (!validate_pseudonatural(beta).empty()) return false;
      if (has_invertible_modifications(beta)) {
        found = beta;
        return true;
      }
      return false;
    }
    for (int g : amb.one_hom(g_fun.obj_map[o], f_fun.obj_map[o])) {
      comp[o] = g;
      if (assign(o + 1)) return true;
    }
    comp[o] = -1;
    return false;
  };
  assign(0);
  return found;
}

QuotientTResult quotient_T(const Fin2Category& a) {
  const size_t n1 = a.num_one_cells();
  std::vector<int> parent(n1);
  for (size_t i = 0; i < n1; ++i) parent[i] = int(i);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (size_t t = 0; t < a.num_two_cells(); ++t)
    if (a.two_is_iso(int(t))) {
      int x = find(a.two_cells[t].src_one);
      int y = find(a.two_cells[t].dst_one);
      if (x != y) parent[std::max(x, y)] = std::min(x, y);
    }
  QuotientTResult out;
  out.class_of_one_cell.assign(n1, -1);
  auto cat = std::make_shared<FinCategory>();
  cat->objects = a.objects;
  std::vector<int> rep;
  for (size_t i = 0; i < n1; ++i) {
    int r = find(int(i));
    if (out.class_of_one_cell[r] < 0) {
      out.class_of_one_cell[r] = int(rep.size());
      rep.push_back(r);
      cat->morphisms.push_back(
          {"[" + a.one_cells[r].id + "]", a.one_cells[r].src, a.one_cells[r].dst});
    }
    out.class_of_one_cell[i] = out.class_of_one_cell[r];
  }
  for (size_t o = 0; o < a.num_objects(); ++o)
    cat->identity.push_back(out.class_of_one_cell[a.one_identity[o]]);
  cat->init_tables();
  for (size_t g = 0; g < rep.size(); ++g)
    for (size_t f = 0; f < rep.size(); ++f) {
      int c = a.compose_one(rep[g], rep[f]);
      if (c >= 0) cat->set_compose(int(g), int(f), out.class_of_one_cell[c]);
    }
  out.category = cat;
  return out;
}

Smothering2Record is_smothering_2functor(const TwoFunctor& f) {
  Smothering2Record rec;
  const Fin2Category& a = *f.dom;
  const Fin2Category& b = *f.cod;
  std::vector<bool> hit(b.num_objects(), false);
  for (int o : f.obj_map) hit[o] = true;
  rec.surjective_on_objects =
      std::all_of(hit.begin(), hit.end(), [](bool v) { return v; });

  rec.hom_surjective = true;
  rec.hom_full = true;
  rec.hom_conservative = true;
  for (size_t x = 0; x < a.num_objects(); ++x)
    for (size_t y = 0; y < a.num_objects(); ++y) {
      auto dom_hom = a.one_hom(int(x), int(y));
      for (int k : b.one_hom(f.obj_map[x], f.obj_map[y])) {
        bool covered = false;
        for (int m : dom_hom)
          if (f.one_map[m] == k) covered = true;
        if (!covered) rec.hom_surjective = false;
      }
      for (int p : dom_hom)
        for (int q : dom_hom)
          for (int t : b.two_hom(f.one_map[p], f.one_map[q])) {
            bool covered = false;
            for (size_t s = 0; s < a.num_two_cells(); ++s)
              if (a.two_cells[s].src_one == p && a.two_cells[s].dst_one == q &&
                  f.two_map[s] == t)
                covered = true;
            if (!covered) rec.hom_full = false;
          }
    }
  for (size_t t = 0; t < a.num_two_cells(); ++t)
    if (b.two_is_iso(f.two_map[t]) && !a.two_is_iso(int(t)))
      rec.hom_conservative = false;
  rec.smothering = rec.surjective_on_objects && rec.hom_surjective &&
                   rec.hom_full && rec.hom_conservative;
  return rec;
}

ValidationReport validate_adjunction2(const Fin2Category& amb,
                                      const AdjunctionWitness2& w) {
  ValidationReport report;
  const OneCell& f = amb.one_cells[w.left];
  const OneCell& u = amb.one_cells[w.right];
  if (f.src != u.dst || f.dst != u.src) {
    report.push_back({"BoundaryMismatch", "adjunction legs"});
    return report;
  }
  const TwoCellData& unit = amb.two_cells[w.unit];
  const TwoCellData& counit = amb.two_cells[w.counit];
  if (unit.src_one != amb.one_identity[f.src] ||
      unit.dst_one != amb.compose_one(w.right, w.left))
    report.push_back({"BoundaryMismatch", "unit"});
  if (counit.src_one != amb.compose_one(w.left, w.right) ||
      counit.dst_one != amb.one_identity[f.dst])
    report.push_back({"BoundaryMismatch", "counit"});
  if (!report.empty()) return report;
  int tri_f = amb.vcompose(amb.whisker_pre(w.counit, w.left),
                           amb.whisker_post(w.left, w.unit));
  if (tri_f != amb.two_identity[w.left])
    report.push_back({"TriangleFailure", "left leg"});
  int tri_u = amb.vcompose(amb.whisker_post(w.right, w.counit),
                           amb.whisker_pre(w.unit, w.right));
  if (tri_u != amb.two_identity[w.right])
    report.push_back({"TriangleFailure", "right leg"});
  return report;
}

int mate_strict(const Fin2Category& amb, const TwoSquare& sq,
                const AdjunctionWitness2& top_adj,
                const AdjunctionWitness2& bottom_adj) {
  if (top_adj.right != sq.top || bottom_adj.right != sq.bottom)
    throw Error("MissingWitness", "adjunction witnesses must match the legs");
  int f_bang = top_adj.left;
  int h_bang = bottom_adj.left;
  int start = amb.compose_one(h_bang, sq.right);  // h_! ∘ k^*
  int t1 = amb.hcompose(amb.two_identity[start], top_adj.unit);
  int t2 = amb.hcompose(amb.two_identity[h_bang],
                        amb.hcompose(sq.filler, amb.two_identity[f_bang]));
  int tail = amb.compose_one(sq.left, f_bang);  // g^* ∘ f_!
  int t3 = amb.hcompose(bottom_adj.counit, amb.two_identity[tail]);
  return amb.vcompose(t3, amb.vcompose(t2, t1));
}

CommaSmotheringResult comma_smothering_check(CatPtr y, const Functor& f,
                                             const Functor& g) {
  CommaResult cm = comma(f, g);
  FunctorCategoryResult fy_comma = functor_category(y, cm.category);
  FunctorCategoryResult fy_a = functor_category(y, f.dom);
  FunctorCategoryResult fy_b = functor_category(y, g.dom);
  FunctorCategoryResult fy_c = functor_category(y, f.cod);

  auto obj_at = [](const FunctorCategoryResult& fc, const Functor& x) {
    for (size_t i = 0; i < fc.objects.size(); ++i)
      if (functor_equal(fc.objects[i], x)) return int(i);
    return -1;
  };
  auto mor_at = [](const FunctorCategoryResult& fc, const NatTrans& t) {
    for (size_t i = 0; i < fc.morphisms.size(); ++i)
      if (nat_trans_equal(fc.morphisms[i], t)) return int(i);
    return -1;
  };
  auto postcompose = [&](const FunctorCategoryResult& from,
                         const FunctorCategoryResult& to, const Functor& p) {
    Functor out;
    out.dom = from.category;
    out.cod = to.category;
    for (const auto& r : from.objects)
      out.obj_map.push_back(obj_at(to, compose_functors(p, r)));
    for (const auto& t : from.morphisms)
      out.mor_map.push_back(mor_at(to, whisker_post(p, t)));
    return out;
  };

  Functor post_f = postcompose(fy_a, fy_c, f);
  Functor post_g = postcompose(fy_b, fy_c, g);
  CommaResult big = comma(post_f, post_g);

  CommaSmotheringResult out;
  out.comparison.dom = fy_comma.category;
  out.comparison.cod = big.category;
  for (const auto& r : fy_comma.objects) {
    int i = obj_at(fy_a, compose_functors(cm.proj_left, r));
    int j = obj_at(fy_b, compose_functors(cm.proj_right, r));
    int h = mor_at(fy_c, whisker_pre(cm.square, r));
    int target = -1;
    for (size_t o = 0; o < big.category->num_objects(); ++o)
      if (big.proj_left.obj_map[o] == i && big.proj_right.obj_map[o] == j &&
          big.square.component[o] == h)
        target = int(o);
    out.comparison.obj_map.push_back(target);
  }
  for (size_t mi = 0; mi < fy_comma.morphisms.size(); ++mi) {
    const NatTrans& th = fy_comma.morphisms[mi];
    int pm = mor_at(fy_a, whisker_post(cm.proj_left, th));
    int qm = mor_at(fy_b, whisker_post(cm.proj_right, th));
    int src = out.comparison.obj_map[fy_comma.category->morphisms[mi].src];
    int dst = out.comparison.obj_map[fy_comma.category->morphisms[mi].dst];
    int target = -1;
    for (size_t m = 0; m < big.category->num_morphisms(); ++m)
      if (big.category->morphisms[m].src == src &&
          big.category->morphisms[m].dst == dst &&
          big.proj_left.mor_map[m] == pm && big.proj_right.mor_map[m] == qm)
        target = int(m);
    out.comparison.mor_map.push_back(target);
  }
  out.properties = functor_properties(out.comparison);
  return out;
}

CounterexampleFixture counterexample_fixture() {
  CounterexampleFixture out;
  out.walking_pair = two_category_from_category(parallel_pair());
  CatPtr one = terminal_category();
  CatPtr iso = walking_iso();
  out.fragment = cat_fragment_2category({one, iso});
  const Fin2Category& amb = *out.fragment.two_category;

  auto one_cell_of = [&](const Functor& f) {
    for (size_t i = 0; i < out.fragment.one_cells.size(); ++i)
      if (functor_equal(out.fragment.one_cells[i], f)) return int(i);
    throw Error("UnknownFixtureCell", "functor not in the fragment");
  };
  // Endpoint inclusions 𝟙 → I, the identity and the constant endofunctors.
  Functor incl0 = object_as_functor(iso, 0);
  Functor incl1 = object_as_functor(iso, 1);
  Functor id_iso = identity_functor(iso);
  Functor const0 = compose_functors(incl0, bang_functor(iso));

  const Fin2Category& pair2 = *out.walking_pair;
  auto build = [&](int obj_a, int obj_b, int img_u, int img_v) {
    TwoFunctor t;
    t.dom = out.walking_pair;
    t.cod = out.fragment.two_category;
    t.obj_map = {obj_a, obj_b};
    t.one_map.resize(pair2.num_one_cells());
    t.two_map.resize(pair2.num_two_cells());
    for (size_t c = 0; c < pair2.num_one_cells(); ++c) {
      if (pair2.is_one_identity(int(c)))
        t.one_map[c] = amb.one_identity[t.obj_map[pair2.one_cells[c].src]];
      else if (pair2.one_cells[c].id == "u")
        t.one_map[c] = img_u;
      else
        t.one_map[c] = img_v;
    }
    for (size_t s = 0; s < pair2.num_two_cells(); ++s)
      t.two_map[s] = amb.two_identity[t.one_map[pair2.two_cells[s].src_one]];
    return t;
  };
  out.f = build(0, 1, one_cell_of(incl0), one_cell_of(incl1));
  out.g = build(1, 1, one_cell_of(id_iso), one_cell_of(id_iso));

  out.alpha.source = out.f;
  out.alpha.target = out.g;
  out.alpha.component = {one_cell_of(incl0), one_cell_of(const0)};
  out.alpha.naturality.resize(pair2.num_one_cells());
  for (size_t c = 0; c < pair2.num_one_cells(); ++c) {
    // Strictly 2-natural: every naturality cell is an identity.
    int src_one = amb.compose_one(out.alpha.component[pair2.one_cells[c].dst],
                                  out.f.one_map[c]);
    out.alpha.naturality[c] = amb.two_identity[src_one];
  }
  return out;
}

}  // namespace derlab
