#include "derlab/fincat.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace derlab {

void FinCategory::init_tables() {
  obj_lookup_.clear();
  mor_lookup_.clear();
  for (size_t i = 0; i < objects.size(); ++i) obj_lookup_[objects[i]] = int(i);
  for (size_t i = 0; i < morphisms.size(); ++i)
    mor_lookup_[morphisms[i].id] = int(i);
  table_.assign(morphisms.size() * morphisms.size(), -1);
}

int FinCategory::object_index(const std::string& name) const {
  auto it = obj_lookup_.find(name);
  return it == obj_lookup_.end() ? -1 : it->second;
}

int FinCategory::morphism_index(const std::string& name) const {
  auto it = mor_lookup_.find(name);
  return it == mor_lookup_.end() ? -1 : it->second;
}

bool FinCategory::is_identity(int m) const {
  const Mor& mor = morphisms[m];
  return mor.src == mor.dst && identity[mor.src] == m;
}

std::vector<int> FinCategory::hom(int a, int b) const {
  std::vector<int> out;
  for (size_t m = 0; m < morphisms.size(); ++m)
    if (morphisms[m].src == a && morphisms[m].dst == b) out.push_back(int(m));
  return out;
}

std::optional<int> FinCategory::inverse(int m) const {
  const Mor& mor = morphisms[m];
  for (int n : hom(mor.dst, mor.src))
    if (compose(n, m) == identity[mor.src] && compose(m, n) == identity[mor.dst])
      return n;
  return std::nullopt;
}

std::string FinCategory::structural_key() const {
  std::ostringstream os;
  os << objects.size() << '#';
  for (const auto& o : objects) os << o << ';';
  os << '#';
  for (const auto& m : morphisms) os << m.id << ':' << m.src << '>' << m.dst << ';';
  os << '#';
  for (int i : identity) os << i << ',';
  os << '#';
  for (int v : table_) os << v << ',';
  return os.str();
}

ValidationReport validate_category(const FinCategory& c) {
  ValidationReport report;
  const size_t n = c.num_morphisms();
  {
    std::unordered_map<std::string, int> seen;
    for (size_t i = 0; i < c.objects.size(); ++i)
      if (!seen.emplace(c.objects[i], int(i)).second)
        report.push_back({"DuplicateIdentifier", "object " + c.objects[i]});
    seen.clear();
    for (size_t i = 0; i < n; ++i)
      if (!seen.emplace(c.morphisms[i].id, int(i)).second)
        report.push_back({"DuplicateIdentifier", "morphism " + c.morphisms[i].id});
  }
  for (size_t m = 0; m < n; ++m) {
    const Mor& mor = c.morphisms[m];
    if (mor.src < 0 || mor.src >= int(c.num_objects()) || mor.dst < 0 ||
        mor.dst >= int(c.num_objects()))
      report.push_back({"BoundaryViolation", "morphism " + mor.id +
                                                 " has out-of-range endpoints"});
  }
  if (!report.empty()) return report;  // later checks assume sane indices

  if (c.identity.size() != c.num_objects()) {
    report.push_back({"IdentityViolation", "identity table has wrong size"});
    return report;
  }
  for (size_t a = 0; a < c.num_objects(); ++a) {
    int id = c.identity[a];
    if (id < 0 || id >= int(n) || c.morphisms[id].src != int(a) ||
        c.morphisms[id].dst != int(a))
      report.push_back(
          {"IdentityViolation", "identity of " + c.objects[a] + " is not an endomorphism"});
  }
  if (!report.empty()) return report;

  for (size_t g = 0; g < n; ++g)
    for (size_t f = 0; f < n; ++f) {
      int gf = c.compose(int(g), int(f));
      if (c.composable(int(g), int(f))) {
        if (gf < 0) {
          report.push_back({"MissingComposite",
                            "(" + c.morphisms[g].id + ", " + c.morphisms[f].id + ")"});
        } else if (c.morphisms[gf].src != c.morphisms[f].src ||
                   c.morphisms[gf].dst != c.morphisms[g].dst) {
          report.push_back({"BoundaryViolation",
                            c.morphisms[g].id + "∘" + c.morphisms[f].id + " = " +
                                c.morphisms[gf].id + " has wrong boundary"});
        }
      } else if (gf >= 0) {
        report.push_back({"SpuriousComposite",
                          "(" + c.morphisms[g].id + ", " + c.morphisms[f].id + ")"});
      }
    }
  if (!report.empty()) return report;

  for (size_t m = 0; m < n; ++m) {
    const Mor& mor = c.morphisms[m];
    if (c.compose(int(m), c.identity[mor.src]) != int(m) ||
        c.compose(c.identity[mor.dst], int(m)) != int(m))
      report.push_back({"IdentityViolation", "identity law fails at " + mor.id});
  }

  for (size_t h = 0; h < n; ++h)
    for (size_t g = 0; g < n; ++g) {
      if (!c.composable(int(h), int(g))) continue;
      for (size_t f = 0; f < n; ++f) {
        if (!c.composable(int(g), int(f))) continue;
        int left = c.compose(int(h), c.compose(int(g), int(f)));
        int right = c.compose(c.compose(int(h), int(g)), int(f));
        if (left != right)
          report.push_back({"AssociativityViolation",
                            "(" + c.morphisms[h].id + ", " + c.morphisms[g].id + ", " +
                                c.morphisms[f].id + ")"});
      }
    }
  return report;
}

// ---- Functors and natural transformations --------------------------------

ValidationReport validate_functor(const Functor& f) {
  ValidationReport report;
  const FinCategory& a = *f.dom;
  const FinCategory& b = *f.cod;
  if (f.obj_map.size() != a.num_objects() || f.mor_map.size() != a.num_morphisms()) {
    report.push_back({"FunctorShape", "object/morphism map has wrong size"});
    return report;
  }
  for (size_t m = 0; m < a.num_morphisms(); ++m) {
    const Mor& mor = a.morphisms[m];
    const Mor& img = b.morphisms[f.mor_map[m]];
    if (img.src != f.obj_map[mor.src] || img.dst != f.obj_map[mor.dst])
      report.push_back({"FunctorBoundary", "image of " + mor.id + " has wrong boundary"});
  }
  if (!report.empty()) return report;
  for (size_t x = 0; x < a.num_objects(); ++x)
    if (f.mor_map[a.identity[x]] != b.identity[f.obj_map[x]])
      report.push_back({"FunctorIdentity", "identity of " + a.objects[x] + " not preserved"});
  for (size_t g = 0; g < a.num_morphisms(); ++g)
    for (size_t m = 0; m < a.num_morphisms(); ++m) {
      if (!a.composable(int(g), int(m))) continue;
      if (f.mor_map[a.compose(int(g), int(m))] !=
          b.compose(f.mor_map[g], f.mor_map[m]))
        report.push_back({"FunctorComposition",
                          "(" + a.morphisms[g].id + ", " + a.morphisms[m].id + ")"});
    }
  return report;
}

Functor identity_functor(CatPtr c) {
  Functor f;
  f.dom = c;
  f.cod = c;
  f.obj_map.resize(c->num_objects());
  f.mor_map.resize(c->num_morphisms());
  for (size_t i = 0; i < f.obj_map.size(); ++i) f.obj_map[i] = int(i);
  for (size_t i = 0; i < f.mor_map.size(); ++i) f.mor_map[i] = int(i);
  return f;
}

Functor compose_functors(const Functor& g, const Functor& f) {
  if (!(*f.cod == *g.dom))
    throw Error("BoundaryMismatch", "functor composition needs matching categories");
  Functor h;
  h.dom = f.dom;
  h.cod = g.cod;
  h.obj_map.resize(f.obj_map.size());
  h.mor_map.resize(f.mor_map.size());
  for (size_t i = 0; i < f.obj_map.size(); ++i) h.obj_map[i] = g.obj_map[f.obj_map[i]];
  for (size_t i = 0; i < f.mor_map.size(); ++i) h.mor_map[i] = g.mor_map[f.mor_map[i]];
  return h;
}

bool functor_equal(const Functor& f, const Functor& g) {
  return *f.dom == *g.dom && *f.cod == *g.cod && f.obj_map == g.obj_map &&
         f.mor_map == g.mor_map;
}

ValidationReport validate_nat_trans(const NatTrans& a) {
  ValidationReport report;
  const Functor& f = a.source;
  const Functor& g = a.target;
  if (!(*f.dom == *g.dom) || !(*f.cod == *g.cod)) {
    report.push_back({"BoundaryMismatch", "source/target functors not parallel"});
    return report;
  }
  const FinCategory& dom = *f.dom;
  const FinCategory& cod = *f.cod;
  if (a.component.size() != dom.num_objects()) {
    report.push_back({"BoundaryMismatch", "component list has wrong size"});
    return report;
  }
  for (size_t x = 0; x < dom.num_objects(); ++x) {
    const Mor& comp = cod.morphisms[a.component[x]];
    if (comp.src != f.obj_map[x] || comp.dst != g.obj_map[x])
      report.push_back({"BoundaryMismatch", "component at " + dom.objects[x]});
  }
  if (!report.empty()) return report;
  for (size_t m = 0; m < dom.num_morphisms(); ++m) {
    const Mor& mor = dom.morphisms[m];
    int left = cod.compose(g.mor_map[m], a.component[mor.src]);
    int right = cod.compose(a.component[mor.dst], f.mor_map[m]);
    if (left != right)
      report.push_back({"NaturalityViolation", "square at " + mor.id});
  }
  return report;
}

NatTrans identity_nat_trans(const Functor& f) {
  NatTrans a;
  a.source = f;
  a.target = f;
  a.component.resize(f.obj_map.size());
  for (size_t x = 0; x < f.obj_map.size(); ++x)
    a.component[x] = f.cod->identity[f.obj_map[x]];
  return a;
}

NatTrans vcompose(const NatTrans& b, const NatTrans& a) {
  if (!functor_equal(b.source, a.target))
    throw Error("BoundaryMismatch", "vertical composite needs matching middle functor");
  NatTrans out;
  out.source = a.source;
  out.target = b.target;
  out.component.resize(a.component.size());
  for (size_t x = 0; x < a.component.size(); ++x)
    out.component[x] = a.source.cod->compose(b.component[x], a.component[x]);
  return out;
}

NatTrans whisker_post(const Functor& f, const NatTrans& a) {
  if (!(*a.source.cod == *f.dom))
    throw Error("BoundaryMismatch", "whisker_post boundary");
  NatTrans out;
  out.source = compose_functors(f, a.source);
  out.target = compose_functors(f, a.target);
  out.component.resize(a.component.size());
  for (size_t x = 0; x < a.component.size(); ++x)
    out.component[x] = f.mor_map[a.component[x]];
  return out;
}

NatTrans whisker_pre(const NatTrans& a, const Functor& f) {
  if (!(*f.cod == *a.source.dom))
    throw Error("BoundaryMismatch", "whisker_pre boundary");
  NatTrans out;
  out.source = compose_functors(a.source, f);
  out.target = compose_functors(a.target, f);
  out.component.resize(f.obj_map.size());
  for (size_t x = 0; x < f.obj_map.size(); ++x)
    out.component[x] = a.component[f.obj_map[x]];
  return out;
}

NatTrans hcompose(const NatTrans& b, const NatTrans& a) {
  // b * a = (b ∘ target(a)) · (source-of-b ∘ a); both orders agree by naturality.
  return vcompose(whisker_pre(b, a.target), whisker_post(b.source, a));
}

bool nat_trans_equal(const NatTrans& a, const NatTrans& b) {
  return functor_equal(a.source, b.source) && functor_equal(a.target, b.target) &&
         a.component == b.component;
}

bool nat_trans_is_iso(const NatTrans& a) {
  for (int c : a.component)
    if (!a.source.cod->is_iso(c)) return false;
  return true;
}

// ---- Constructions --------------------------------------------------------

FinCategory opposite(const FinCategory& c) {
  FinCategory op;
  op.objects = c.objects;
  op.morphisms.reserve(c.num_morphisms());
  for (const Mor& m : c.morphisms) op.morphisms.push_back({m.id, m.dst, m.src});
  op.identity = c.identity;
  op.init_tables();
  for (size_t g = 0; g < c.num_morphisms(); ++g)
    for (size_t f = 0; f < c.num_morphisms(); ++f) {
      int fg = c.compose(int(f), int(g));
      if (op.composable(int(g), int(f)) && fg >= 0) op.set_compose(int(g), int(f), fg);
    }
  return op;
}

ProductResult product(CatPtr a, CatPtr b) {
  auto cat = std::make_shared<FinCategory>();
  const size_t bo = b->num_objects(), bm = b->num_morphisms();
  for (const auto& x : a->objects)
    for (const auto& y : b->objects) cat->objects.push_back("(" + x + "," + y + ")");
  for (size_t m = 0; m < a->num_morphisms(); ++m)
    for (size_t n = 0; n < bm; ++n)
      cat->morphisms.push_back({"(" + a->morphisms[m].id + "," + b->morphisms[n].id + ")",
                                int(a->morphisms[m].src * bo + b->morphisms[n].src),
                                int(a->morphisms[m].dst * bo + b->morphisms[n].dst)});
  cat->identity.resize(cat->objects.size());
  for (size_t x = 0; x < a->num_objects(); ++x)
    for (size_t y = 0; y < bo; ++y)
      cat->identity[x * bo + y] = int(a->identity[x] * bm + b->identity[y]);
  cat->init_tables();
  for (size_t g = 0; g < a->num_morphisms(); ++g)
    for (size_t h = 0; h < bm; ++h)
      for (size_t f = 0; f < a->num_morphisms(); ++f)
        for (size_t k = 0; k < bm; ++k) {
          int gf = a->compose(int(g), int(f));
          int hk = b->compose(int(h), int(k));
          if (gf >= 0 && hk >= 0)
            cat->set_compose(int(g * bm + h), int(f * bm + k), int(gf * bm + hk));
        }
  ProductResult out;
  out.category = cat;
  out.proj_left.dom = cat;
  out.proj_left.cod = a;
  out.proj_right.dom = cat;
  out.proj_right.cod = b;
  for (size_t x = 0; x < a->num_objects(); ++x)
    for (size_t y = 0; y < bo; ++y) {
      out.proj_left.obj_map.push_back(int(x));
      out.proj_right.obj_map.push_back(int(y));
    }
  for (size_t m = 0; m < a->num_morphisms(); ++m)
    for (size_t n = 0; n < bm; ++n) {
      out.proj_left.mor_map.push_back(int(m));
      out.proj_right.mor_map.push_back(int(n));
    }
  return out;
}

CoproductResult coproduct(CatPtr a, CatPtr b) {
  auto cat = std::make_shared<FinCategory>();
  for (const auto& x : a->objects) cat->objects.push_back("l:" + x);
  for (const auto& y : b->objects) cat->objects.push_back("r:" + y);
  for (const Mor& m : a->morphisms)
    cat->morphisms.push_back({"l:" + m.id, m.src, m.dst});
  const int oo = int(a->num_objects()), mo = int(a->num_morphisms());
  for (const Mor& m : b->morphisms)
    cat->morphisms.push_back({"r:" + m.id, m.src + oo, m.dst + oo});
  for (int i : a->identity) cat->identity.push_back(i);
  for (int i : b->identity) cat->identity.push_back(i + mo);
  cat->init_tables();
  for (size_t g = 0; g < a->num_morphisms(); ++g)
    for (size_t f = 0; f < a->num_morphisms(); ++f)
      if (a->compose(int(g), int(f)) >= 0)
        cat->set_compose(int(g), int(f), a->compose(int(g), int(f)));
  for (size_t g = 0; g < b->num_morphisms(); ++g)
    for (size_t f = 0; f < b->num_morphisms(); ++f)
      if (b->compose(int(g), int(f)) >= 0)
        cat->set_compose(int(g) + mo, int(f) + mo, b->compose(int(g), int(f)) + mo);
  CoproductResult out;
  out.category = cat;
  out.inj_left.dom = a;
  out.inj_left.cod = cat;
  out.inj_right.dom = b;
  out.inj_right.cod = cat;
  for (size_t x = 0; x < a->num_objects(); ++x) out.inj_left.obj_map.push_back(int(x));
  for (size_t m = 0; m < a->num_morphisms(); ++m) out.inj_left.mor_map.push_back(int(m));
  for (size_t y = 0; y < b->num_objects(); ++y) out.inj_right.obj_map.push_back(int(y) + oo);
  for (size_t n = 0; n < b->num_morphisms(); ++n) out.inj_right.mor_map.push_back(int(n) + mo);
  return out;
}

PullbackResult pullback_cat(const Functor& f, const Functor& g) {
  if (!(*f.cod == *g.cod))
    throw Error("CodomainMismatch", "pullback needs a common codomain");
  const FinCategory& a = *f.dom;
  const FinCategory& b = *g.dom;
  auto cat = std::make_shared<FinCategory>();
  std::vector<std::pair<int, int>> objs, mors;
  for (size_t x = 0; x < a.num_objects(); ++x)
    for (size_t y = 0; y < b.num_objects(); ++y)
      if (f.obj_map[x] == g.obj_map[y]) {
        objs.push_back({int(x), int(y)});
        cat->objects.push_back("(" + a.objects[x] + "," + b.objects[y] + ")");
      }
  auto obj_at = [&](int x, int y) {
    for (size_t i = 0; i < objs.size(); ++i)
      if (objs[i].first == x && objs[i].second == y) return int(i);
    return -1;
  };
  for (size_t m = 0; m < a.num_morphisms(); ++m)
    for (size_t n = 0; n < b.num_morphisms(); ++n)
      if (f.mor_map[m] == g.mor_map[n]) {
        mors.push_back({int(m), int(n)});
        cat->morphisms.push_back({"(" + a.morphisms[m].id + "," + b.morphisms[n].id + ")",
                                  obj_at(a.morphisms[m].src, b.morphisms[n].src),
                                  obj_at(a.morphisms[m].dst, b.morphisms[n].dst)});
      }
  auto mor_at = [&](int m, int n) {
    for (size_t i = 0; i < mors.size(); ++i)
      if (mors[i].first == m && mors[i].second == n) return int(i);
    return -1;
  };
  for (const auto& [x, y] : objs)
    cat->identity.push_back(mor_at(a.identity[x], b.identity[y]));
  cat->init_tables();
  for (size_t gi = 0; gi < mors.size(); ++gi)
    for (size_t fi = 0; fi < mors.size(); ++fi) {
      int gm = a.compose(mors[gi].first, mors[fi].first);
      int gn = b.compose(mors[gi].second, mors[fi].second);
      if (gm >= 0 && gn >= 0 && cat->composable(int(gi), int(fi)))
        cat->set_compose(int(gi), int(fi), mor_at(gm, gn));
    }
  PullbackResult out;
  out.category = cat;
  out.proj_left.dom = cat;
  out.proj_left.cod = f.dom;
  out.proj_right.dom = cat;
  out.proj_right.cod = g.dom;
  for (auto& [x, y] : objs) {
    out.proj_left.obj_map.push_back(x);
    out.proj_right.obj_map.push_back(y);
  }
  for (auto& [m, n] : mors) {
    out.proj_left.mor_map.push_back(m);
    out.proj_right.mor_map.push_back(n);
  }
  return out;
}

SliceResult slice(CatPtr c, const std::string& obj) {
  int target = c->object_index(obj);
  if (target < 0) throw Error("UnknownObject", obj);
  auto cat = std::make_shared<FinCategory>();
  std::vector<int> objs;  // slice object = morphism into target
  for (size_t m = 0; m < c->num_morphisms(); ++m)
    if (c->morphisms[m].dst == target) {
      objs.push_back(int(m));
      cat->objects.push_back(c->morphisms[m].id);
    }
  struct SliceMor {
    int from, to, h;
  };
  std::vector<SliceMor> mors;
  for (size_t i = 0; i < objs.size(); ++i)
    for (size_t j = 0; j < objs.size(); ++j)
      for (int h : c->hom(c->morphisms[objs[i]].src, c->morphisms[objs[j]].src))
        if (c->compose(objs[j], h) == objs[i]) {
          mors.push_back({int(i), int(j), h});
          cat->morphisms.push_back({"(" + c->morphisms[objs[i]].id + "|" +
                                        c->morphisms[objs[j]].id + "|" +
                                        c->morphisms[h].id + ")",
                                    int(i), int(j)});
        }
  auto mor_at = [&](int from, int to, int h) {
    for (size_t i = 0; i < mors.size(); ++i)
      if (mors[i].from == from && mors[i].to == to && mors[i].h == h) return int(i);
    return -1;
  };
  for (size_t i = 0; i < objs.size(); ++i)
    cat->identity.push_back(mor_at(int(i), int(i), c->identity[c->morphisms[objs[i]].src]));
  cat->init_tables();
  for (size_t gi = 0; gi < mors.size(); ++gi)
    for (size_t fi = 0; fi < mors.size(); ++fi)
      if (mors[fi].to == mors[gi].from)
        cat->set_compose(int(gi), int(fi),
                         mor_at(mors[fi].from, mors[gi].to,
                                c->compose(mors[gi].h, mors[fi].h)));
  SliceResult out;
  out.category = cat;
  out.forgetful.dom = cat;
  out.forgetful.cod = c;
  for (int m : objs) out.forgetful.obj_map.push_back(c->morphisms[m].src);
  for (const auto& sm : mors) out.forgetful.mor_map.push_back(sm.h);
  return out;
}

CommaResult comma(const Functor& f, const Functor& g) {
  if (!(*f.cod == *g.cod))
    throw Error("CodomainMismatch", "comma needs a common codomain");
  const FinCategory& a = *f.dom;
  const FinCategory& b = *g.dom;
  const FinCategory& c = *f.cod;
  auto cat = std::make_shared<FinCategory>();
  struct CObj {
    int a, b, h;
  };
  struct CMor {
    int from, to, m, n;
  };
  std::vector<CObj> objs;
  std::vector<CMor> mors;
  for (size_t x = 0; x < a.num_objects(); ++x)
    for (size_t y = 0; y < b.num_objects(); ++y)
      for (int h : c.hom(f.obj_map[x], g.obj_map[y])) {
        objs.push_back({int(x), int(y), h});
        cat->objects.push_back("(" + a.objects[x] + "|" + b.objects[y] + "|" +
                               c.morphisms[h].id + ")");
      }
  for (size_t i = 0; i < objs.size(); ++i)
    for (size_t j = 0; j < objs.size(); ++j)
      for (int m : a.hom(objs[i].a, objs[j].a))
        for (int n : b.hom(objs[i].b, objs[j].b))
          if (c.compose(objs[j].h, f.mor_map[m]) ==
              c.compose(g.mor_map[n], objs[i].h)) {
            mors.push_back({int(i), int(j), m, n});
            cat->morphisms.push_back({"(" + cat->objects[i] + ";" + a.morphisms[m].id +
                                          "|" + b.morphisms[n].id + ")",
                                      int(i), int(j)});
          }
  auto mor_at = [&](int from, int to, int m, int n) {
    for (size_t i = 0; i < mors.size(); ++i)
      if (mors[i].from == from && mors[i].to == to && mors[i].m == m && mors[i].n == n)
        return int(i);
    return -1;
  };
  for (size_t i = 0; i < objs.size(); ++i)
    cat->identity.push_back(
        mor_at(int(i), int(i), a.identity[objs[i].a], b.identity[objs[i].b]));
  cat->init_tables();
  for (size_t gi = 0; gi < mors.size(); ++gi)
    for (size_t fi = 0; fi < mors.size(); ++fi)
      if (mors[fi].to == mors[gi].from)
        cat->set_compose(int(gi), int(fi),
                         mor_at(mors[fi].from, mors[gi].to,
                                a.compose(mors[gi].m, mors[fi].m),
                                b.compose(mors[gi].n, mors[fi].n)));
  CommaResult out;
  out.category = cat;
  out.proj_left.dom = cat;
  out.proj_left.cod = f.dom;
  out.proj_right.dom = cat;
  out.proj_right.cod = g.dom;
  for (const auto& o : objs) {
    out.proj_left.obj_map.push_back(o.a);
    out.proj_right.obj_map.push_back(o.b);
  }
  for (const auto& m : mors) {
    out.proj_left.mor_map.push_back(m.m);
    out.proj_right.mor_map.push_back(m.n);
  }
  out.square.source = compose_functors(f, out.proj_left);
  out.square.target = compose_functors(g, out.proj_right);
  for (const auto& o : objs) out.square.component.push_back(o.h);
  return out;
}

FunctorProperties functor_properties(const Functor& f) {
  FunctorProperties p;
  const FinCategory& a = *f.dom;
  const FinCategory& b = *f.cod;
  std::vector<bool> hit(b.num_objects(), false);
  for (int o : f.obj_map) hit[o] = true;
  p.surjective_on_objects =
      std::all_of(hit.begin(), hit.end(), [](bool v) { return v; });

  p.essentially_surjective = true;
  for (size_t y = 0; y < b.num_objects(); ++y) {
    bool found = false;
    for (int o : f.obj_map) {
      for (int m : b.hom(o, int(y)))
        if (b.is_iso(m)) {
          found = true;
          break;
        }
      if (found) break;
    }
    if (!found) {
      p.essentially_surjective = false;
      break;
    }
  }

  p.full = true;
  p.faithful = true;
  for (size_t x = 0; x < a.num_objects(); ++x)
    for (size_t y = 0; y < a.num_objects(); ++y) {
      auto dom_hom = a.hom(int(x), int(y));
      auto cod_hom = b.hom(f.obj_map[x], f.obj_map[y]);
      for (int k : cod_hom) {
        bool covered = false;
        for (int m : dom_hom)
          if (f.mor_map[m] == k) {
            covered = true;
            break;
          }
        if (!covered) p.full = false;
      }
      for (size_t i = 0; i < dom_hom.size(); ++i)
        for (size_t j = i + 1; j < dom_hom.size(); ++j)
          if (f.mor_map[dom_hom[i]] == f.mor_map[dom_hom[j]]) p.faithful = false;
    }

  p.conservative = true;
  for (size_t m = 0; m < a.num_morphisms(); ++m)
    if (b.is_iso(f.mor_map[m]) && !a.is_iso(int(m))) p.conservative = false;

  p.smothering = p.surjective_on_objects && p.full && p.conservative;
  p.weakly_smothering = p.essentially_surjective && p.full && p.conservative;
  return p;
}

// ---- Search ----------------------------------------------------------------

namespace {

// Object signature used to prune the isomorphism search.
std::vector<int> object_signature(const FinCategory& c, int x) {
  std::vector<int> sig;
  sig.push_back(int(c.hom(x, x).size()));
  std::vector<int> outs, ins;
  for (size_t y = 0; y < c.num_objects(); ++y) {
    outs.push_back(int(c.hom(x, int(y)).size()));
    ins.push_back(int(c.hom(int(y), x).size()));
  }
  std::sort(outs.begin(), outs.end());
  std::sort(ins.begin(), ins.end());
  sig.insert(sig.end(), outs.begin(), outs.end());
  sig.insert(sig.end(), ins.begin(), ins.end());
  return sig;
}

struct IsoSearch {
  const FinCategory& a;
  const FinCategory& b;
  std::vector<int> obj_map, mor_map;
  std::vector<bool> obj_used, mor_used;

  bool morphisms_ok(int upto) {
    // Checks identities and all composites fully assigned so far.
    for (int m = 0; m <= upto; ++m) {
      const Mor& mor = a.morphisms[m];
      if (a.is_identity(m) && mor_map[m] != b.identity[obj_map[mor.src]]) return false;
    }
    for (int g = 0; g <= upto; ++g)
      for (int f = 0; f <= upto; ++f) {
        int gf = a.compose(g, f);
        if (gf < 0 || gf > upto) continue;
        if (b.compose(mor_map[g], mor_map[f]) != mor_map[gf]) return false;
      }
    return true;
  }

  bool assign_morphism(int m) {
    if (m == int(a.num_morphisms())) return true;
    const Mor& mor = a.morphisms[m];
    for (int k : b.hom(obj_map[mor.src], obj_map[mor.dst])) {
      if (mor_used[k]) continue;
      mor_map[m] = k;
      mor_used[k] = true;
      if (morphisms_ok(m) && assign_morphism(m + 1)) return true;
      mor_used[k] = false;
      mor_map[m] = -1;
    }
    return false;
  }

  bool assign_object(int x) {
    if (x == int(a.num_objects())) {
      mor_map.assign(a.num_morphisms(), -1);
      mor_used.assign(b.num_morphisms(), false);
      return assign_morphism(0);
    }
    for (size_t y = 0; y < b.num_objects(); ++y) {
      if (obj_used[y]) continue;
      if (object_signature(a, x) != object_signature(b, int(y))) continue;
      bool homs_ok = true;
      for (int z = 0; z < x && homs_ok; ++z)
        if (a.hom(x, z).size() != b.hom(int(y), obj_map[z]).size() ||
            a.hom(z, x).size() != b.hom(obj_map[z], int(y)).size() ||
            a.hom(x, x).size() != b.hom(int(y), int(y)).size())
          homs_ok = false;
      if (!homs_ok) continue;
      obj_map[x] = int(y);
      obj_used[y] = true;
      if (assign_object(x + 1)) return true;
      obj_used[y] = false;
      obj_map[x] = -1;
    }
    return false;
  }
};

}  // namespace

std::optional<Functor> find_isomorphism(CatPtr a, CatPtr b) {
  if (a->num_objects() != b->num_objects() ||
      a->num_morphisms() != b->num_morphisms())
    return std::nullopt;
  IsoSearch search{*a, *b, {}, {}, {}, {}};
  search.obj_map.assign(a->num_objects(), -1);
  search.obj_used.assign(b->num_objects(), false);
  if (!search.assign_object(0)) return std::nullopt;
  Functor f;
  f.dom = a;
  f.cod = b;
  f.obj_map = search.obj_map;
  f.mor_map = search.mor_map;
  return f;
}

bool isomorphic(CatPtr a, CatPtr b) { return find_isomorphism(a, b).has_value(); }

namespace {

struct FunctorEnum {
  const FinCategory& a;
  const FinCategory& b;
  size_t cap;
  std::vector<Functor>& out;
  CatPtr aptr, bptr;
  std::vector<int> obj_map, mor_map;

  bool composites_ok(int m) {
    for (size_t g = 0; g < a.num_morphisms(); ++g)
      for (size_t f = 0; f < a.num_morphisms(); ++f) {
        int gf = a.compose(int(g), int(f));
        if (gf < 0) continue;
        if (int(g) != m && int(f) != m && gf != m) continue;
        if (mor_map[g] < 0 || mor_map[f] < 0 || mor_map[gf] < 0) continue;
        if (b.compose(mor_map[g], mor_map[f]) != mor_map[gf]) return false;
      }
    return true;
  }

  void assign_morphism(size_t m) {
    while (m < a.num_morphisms() && a.is_identity(int(m))) ++m;  // identities preset
    if (m == a.num_morphisms()) {
      if (out.size() >= cap) throw Error("EnumerationOverflow", "too many functors");
      Functor f;
      f.dom = aptr;
      f.cod = bptr;
      f.obj_map = obj_map;
      f.mor_map = mor_map;
      out.push_back(std::move(f));
      return;
    }
    const Mor& mor = a.morphisms[m];
    for (int k : b.hom(obj_map[mor.src], obj_map[mor.dst])) {
      mor_map[m] = k;
      if (composites_ok(int(m))) assign_morphism(m + 1);
      mor_map[m] = -1;
    }
  }

  void assign_object(size_t x) {
    if (x == a.num_objects()) {
      mor_map.assign(a.num_morphisms(), -1);
      for (size_t o = 0; o < a.num_objects(); ++o)
        mor_map[a.identity[o]] = b.identity[obj_map[o]];
      assign_morphism(0);
      return;
    }
    for (size_t y = 0; y < b.num_objects(); ++y) {
      obj_map[x] = int(y);
      assign_object(x + 1);
    }
    obj_map[x] = -1;
  }
};

}  // namespace

std::vector<Functor> all_functors(CatPtr a, CatPtr b, size_t cap) {
  std::vector<Functor> out;
  if (a->num_objects() == 0) {
    Functor f;
    f.dom = a;
    f.cod = b;
    out.push_back(f);
    return out;
  }
  if (b->num_objects() == 0) return out;
  FunctorEnum e{*a, *b, cap, out, a, b, {}, {}};
  e.obj_map.assign(a->num_objects(), -1);
  e.assign_object(0);
  return out;
}

namespace {

struct NatEnum {
  const Functor& f;
  const Functor& g;
  std::vector<NatTrans>& out;
  std::vector<int> component;

  bool natural_so_far(size_t x) {
    const FinCategory& dom = *f.dom;
    const FinCategory& cod = *f.cod;
    for (size_t m = 0; m < dom.num_morphisms(); ++m) {
      const Mor& mor = dom.morphisms[m];
      if (size_t(mor.src) > x || size_t(mor.dst) > x) continue;
      if (size_t(mor.src) != x && size_t(mor.dst) != x) continue;
      if (cod.compose(g.mor_map[m], component[mor.src]) !=
          cod.compose(component[mor.dst], f.mor_map[m]))
        return false;
    }
    return true;
  }

  void assign(size_t x) {
    if (x == f.dom->num_objects()) {
      NatTrans a;
      a.source = f;
      a.target = g;
      a.component = component;
      out.push_back(std::move(a));
      return;
    }
    for (int c : f.cod->hom(f.obj_map[x], g.obj_map[x])) {
      component[x] = c;
      if (natural_so_far(x)) assign(x + 1);
      component[x] = -1;
    }
  }
};

}  // namespace

std::vector<NatTrans> all_nat_trans(const Functor& f, const Functor& g) {
  std::vector<NatTrans> out;
  if (!(*f.dom == *g.dom) || !(*f.cod == *g.cod)) return out;
  NatEnum e{f, g, out, {}};
  e.component.assign(f.dom->num_objects(), -1);
  e.assign(0);
  return out;
}

FunctorCategoryResult functor_category(CatPtr y, CatPtr x) {
  FunctorCategoryResult out;
  out.objects = all_functors(y, x);
  auto cat = std::make_shared<FinCategory>();
  auto encode = [](const std::vector<int>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(v[i]);
    }
    return s;
  };
  for (const Functor& f : out.objects)
    cat->objects.push_back("F(" + encode(f.obj_map) + ";" + encode(f.mor_map) + ")");
  struct Entry {
    int from, to;
  };
  std::vector<Entry> ends;
  for (size_t i = 0; i < out.objects.size(); ++i)
    for (size_t j = 0; j < out.objects.size(); ++j)
      for (NatTrans& a : all_nat_trans(out.objects[i], out.objects[j])) {
        ends.push_back({int(i), int(j)});
        cat->morphisms.push_back({"n(" + std::to_string(i) + ">" + std::to_string(j) +
                                      ";" + encode(a.component) + ")",
                                  int(i), int(j)});
        out.morphisms.push_back(std::move(a));
      }
  auto mor_at = [&](int from, int to, const std::vector<int>& comp) {
    for (size_t i = 0; i < out.morphisms.size(); ++i)
      if (ends[i].from == from && ends[i].to == to &&
          out.morphisms[i].component == comp)
        return int(i);
    return -1;
  };
  for (size_t i = 0; i < out.objects.size(); ++i)
    cat->identity.push_back(
        mor_at(int(i), int(i), identity_nat_trans(out.objects[i]).component));
  cat->init_tables();
  for (size_t g = 0; g < out.morphisms.size(); ++g)
    for (size_t f = 0; f < out.morphisms.size(); ++f)
      if (ends[f].to == ends[g].from)
        cat->set_compose(int(g), int(f),
                         mor_at(ends[f].from, ends[g].to,
                                vcompose(out.morphisms[g], out.morphisms[f]).component));
  out.category = cat;
  return out;
}

}  // namespace derlab
