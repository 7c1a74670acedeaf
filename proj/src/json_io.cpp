#include "derlab/json_io.hpp"

#include <fstream>

#include "derlab/corpus.hpp"

namespace derlab {

namespace {

const Json& field(const Json& j, const char* name) {
  auto it = j.find(name);
  if (it == j.end())
    throw InputError("SchemaError", std::string("missing field '") + name + "'");
  return *it;
}

int require_object(const FinCategory& c, const std::string& name) {
  int o = c.object_index(name);
  if (o < 0) throw InputError("SchemaError", "unknown object '" + name + "'");
  return o;
}

int require_morphism(const FinCategory& c, const std::string& name) {
  int m = c.morphism_index(name);
  if (m < 0) throw InputError("SchemaError", "unknown morphism '" + name + "'");
  return m;
}

void require_valid(const ValidationReport& report, const std::string& what) {
  if (!report.empty())
    throw InputError("ValidationError",
                     what + ": " + report.front().code + " (" +
                         report.front().detail + ")");
}

}  // namespace

// ---- Serializers -------------------------------------------------------------

Json to_json(const FinCategory& c) {
  Json j;
  j["kind"] = "category";
  j["objects"] = c.objects;
  Json mors = Json::array();
  for (const Mor& m : c.morphisms) {
    Json e;
    e["id"] = m.id;
    e["src"] = c.objects[m.src];
    e["dst"] = c.objects[m.dst];
    mors.push_back(e);
  }
  j["morphisms"] = mors;
  Json ids;
  for (size_t o = 0; o < c.num_objects(); ++o)
    ids[c.objects[o]] = c.morphisms[c.identity[o]].id;
  j["identity"] = ids;
  Json comp = Json::array();
  for (size_t g = 0; g < c.num_morphisms(); ++g)
    for (size_t f = 0; f < c.num_morphisms(); ++f)
      if (c.compose(int(g), int(f)) >= 0)
        comp.push_back(Json::array({c.morphisms[g].id, c.morphisms[f].id,
                                    c.morphisms[c.compose(int(g), int(f))].id}));
  j["composition"] = comp;
  return j;
}

CatPtr category_from_json(const Json& j) {
  auto c = std::make_shared<FinCategory>();
  for (const auto& o : field(j, "objects")) c->objects.push_back(o.get<std::string>());
  for (const auto& m : field(j, "morphisms")) {
    Mor mor;
    mor.id = field(m, "id").get<std::string>();
    c->morphisms.push_back(mor);
  }
  // resolve endpoints after ids are known
  c->init_tables();
  size_t at = 0;
  for (const auto& m : field(j, "morphisms")) {
    c->morphisms[at].src = require_object(*c, field(m, "src").get<std::string>());
    c->morphisms[at].dst = require_object(*c, field(m, "dst").get<std::string>());
    ++at;
  }
  c->identity.assign(c->num_objects(), -1);
  for (const auto& [obj, mor] : field(j, "identity").items())
    c->identity[require_object(*c, obj)] =
        require_morphism(*c, mor.get<std::string>());
  for (int i : c->identity)
    if (i < 0) throw InputError("SchemaError", "identity table incomplete");
  c->init_tables();
  for (const auto& entry : field(j, "composition")) {
    if (!entry.is_array() || entry.size() != 3)
      throw InputError("SchemaError", "composition entries are [g, f, gf]");
    c->set_compose(require_morphism(*c, entry[0].get<std::string>()),
                   require_morphism(*c, entry[1].get<std::string>()),
                   require_morphism(*c, entry[2].get<std::string>()));
  }
  require_valid(validate_category(*c), "category");
  return c;
}

Json to_json(const Functor& f) {
  Json j;
  j["kind"] = "functor";
  j["dom"] = to_json(*f.dom);
  j["cod"] = to_json(*f.cod);
  Json objs, mors;
  for (size_t o = 0; o < f.dom->num_objects(); ++o)
    objs[f.dom->objects[o]] = f.cod->objects[f.obj_map[o]];
  for (size_t m = 0; m < f.dom->num_morphisms(); ++m)
    mors[f.dom->morphisms[m].id] = f.cod->morphisms[f.mor_map[m]].id;
  j["objects"] = objs;
  j["morphisms"] = mors;
  return j;
}

Functor functor_from_json(const Json& j) {
  Functor f;
  f.dom = category_from_json(field(j, "dom"));
  f.cod = category_from_json(field(j, "cod"));
  f.obj_map.assign(f.dom->num_objects(), -1);
  f.mor_map.assign(f.dom->num_morphisms(), -1);
  for (const auto& [a, b] : field(j, "objects").items())
    f.obj_map[require_object(*f.dom, a)] =
        require_object(*f.cod, b.get<std::string>());
  for (const auto& [a, b] : field(j, "morphisms").items())
    f.mor_map[require_morphism(*f.dom, a)] =
        require_morphism(*f.cod, b.get<std::string>());
  for (int v : f.obj_map)
    if (v < 0) throw InputError("SchemaError", "functor object map incomplete");
  for (int v : f.mor_map)
    if (v < 0) throw InputError("SchemaError", "functor morphism map incomplete");
  require_valid(validate_functor(f), "functor");
  return f;
}

Json to_json(const NatTrans& a) {
  Json j;
  j["kind"] = "nat_trans";
  j["source"] = to_json(a.source);
  j["target"] = to_json(a.target);
  Json comp;
  for (size_t o = 0; o < a.component.size(); ++o)
    comp[a.source.dom->objects[o]] = a.source.cod->morphisms[a.component[o]].id;
  j["components"] = comp;
  return j;
}

NatTrans nat_trans_from_json(const Json& j) {
  NatTrans a;
  a.source = functor_from_json(field(j, "source"));
  a.target = functor_from_json(field(j, "target"));
  a.component.assign(a.source.dom->num_objects(), -1);
  for (const auto& [o, m] : field(j, "components").items())
    a.component[require_object(*a.source.dom, o)] =
        require_morphism(*a.source.cod, m.get<std::string>());
  require_valid(validate_nat_trans(a), "nat_trans");
  return a;
}

Json to_json(const FinSet& s) {
  Json j;
  j["kind"] = "set";
  j["elements"] = s.elems;
  return j;
}

Json to_json(const FinSetDiagram& d) {
  Json j;
  j["kind"] = "diagram";
  j["shape"] = to_json(*d.shape);
  Json values, actions;
  for (size_t o = 0; o < d.value.size(); ++o)
    values[d.shape->objects[o]] = d.value[o].elems;
  for (size_t m = 0; m < d.action.size(); ++m) {
    Json table;
    for (size_t e = 0; e < d.action[m].map.size(); ++e)
      table[d.action[m].dom.elems[e]] = d.action[m].cod.elems[d.action[m].map[e]];
    actions[d.shape->morphisms[m].id] = table;
  }
  j["values"] = values;
  j["actions"] = actions;
  return j;
}

FinSetDiagram diagram_from_json(const Json& j) {
  FinSetDiagram d;
  d.shape = category_from_json(field(j, "shape"));
  d.value.resize(d.shape->num_objects());
  for (const auto& [o, elems] : field(j, "values").items()) {
    FinSet s;
    for (const auto& e : elems) s.elems.push_back(e.get<std::string>());
    d.value[require_object(*d.shape, o)] = std::move(s);
  }
  d.action.resize(d.shape->num_morphisms());
  for (const auto& [mname, table] : field(j, "actions").items()) {
    int m = require_morphism(*d.shape, mname);
    const Mor& mor = d.shape->morphisms[m];
    SetFunction f;
    f.dom = d.value[mor.src];
    f.cod = d.value[mor.dst];
    f.map.assign(f.dom.size(), -1);
    for (const auto& [from, to] : table.items()) {
      int i = f.dom.index_of(from);
      int v = f.cod.index_of(to.get<std::string>());
      if (i < 0 || v < 0)
        throw InputError("SchemaError", "unknown element in action of " + mname);
      f.map[i] = v;
    }
    for (int v : f.map)
      if (v < 0) throw InputError("SchemaError", "partial action at " + mname);
    d.action[m] = std::move(f);
  }
  require_valid(validate_diagram(d), "diagram");
  return d;
}

Json to_json(const DiagramMorphism& m) {
  Json j;
  j["kind"] = "diagram_morphism";
  j["dom"] = to_json(m.dom);
  j["cod"] = to_json(m.cod);
  Json comps;
  for (size_t o = 0; o < m.component.size(); ++o) {
    Json table;
    for (size_t e = 0; e < m.component[o].map.size(); ++e)
      table[m.component[o].dom.elems[e]] =
          m.component[o].cod.elems[m.component[o].map[e]];
    comps[m.dom.shape->objects[o]] = table;
  }
  j["components"] = comps;
  return j;
}

DiagramMorphism diagram_morphism_from_json(const Json& j) {
  DiagramMorphism m;
  m.dom = diagram_from_json(field(j, "dom"));
  m.cod = diagram_from_json(field(j, "cod"));
  m.component.resize(m.dom.value.size());
  for (const auto& [o, table] : field(j, "components").items()) {
    int oi = require_object(*m.dom.shape, o);
    SetFunction f;
    f.dom = m.dom.value[oi];
    f.cod = m.cod.value[oi];
    f.map.assign(f.dom.size(), -1);
    for (const auto& [from, to] : table.items()) {
      int i = f.dom.index_of(from);
      int v = f.cod.index_of(to.get<std::string>());
      if (i < 0 || v < 0)
        throw InputError("SchemaError", "unknown element in component at " + o);
      f.map[i] = v;
    }
    for (int v : f.map)
      if (v < 0) throw InputError("SchemaError", "partial component at " + o);
    m.component[oi] = std::move(f);
  }
  require_valid(validate_diagram_morphism(m), "diagram_morphism");
  return m;
}

Json to_json(const Fin2Category& a) {
  Json j;
  j["kind"] = "two_category";
  j["objects"] = a.objects;
  Json ones = Json::array(), twos = Json::array();
  for (const OneCell& c : a.one_cells) {
    Json e;
    e["id"] = c.id;
    e["src"] = a.objects[c.src];
    e["dst"] = a.objects[c.dst];
    ones.push_back(e);
  }
  for (const TwoCellData& c : a.two_cells) {
    Json e;
    e["id"] = c.id;
    e["src"] = a.one_cells[c.src_one].id;
    e["dst"] = a.one_cells[c.dst_one].id;
    twos.push_back(e);
  }
  j["one_cells"] = ones;
  j["two_cells"] = twos;
  Json one_id, two_id;
  for (size_t o = 0; o < a.num_objects(); ++o)
    one_id[a.objects[o]] = a.one_cells[a.one_identity[o]].id;
  for (size_t c = 0; c < a.num_one_cells(); ++c)
    two_id[a.one_cells[c].id] = a.two_cells[a.two_identity[c]].id;
  j["one_identity"] = one_id;
  j["two_identity"] = two_id;
  Json oc = Json::array(), vc = Json::array(), hc = Json::array();
  for (size_t g = 0; g < a.num_one_cells(); ++g)
    for (size_t f = 0; f < a.num_one_cells(); ++f)
      if (a.compose_one(int(g), int(f)) >= 0)
        oc.push_back(Json::array({a.one_cells[g].id, a.one_cells[f].id,
                                  a.one_cells[a.compose_one(int(g), int(f))].id}));
  for (size_t g = 0; g < a.num_two_cells(); ++g)
    for (size_t f = 0; f < a.num_two_cells(); ++f) {
      if (a.vcompose(int(g), int(f)) >= 0)
        vc.push_back(Json::array({a.two_cells[g].id, a.two_cells[f].id,
                                  a.two_cells[a.vcompose(int(g), int(f))].id}));
      if (a.hcompose(int(g), int(f)) >= 0)
        hc.push_back(Json::array({a.two_cells[g].id, a.two_cells[f].id,
                                  a.two_cells[a.hcompose(int(g), int(f))].id}));
    }
  j["one_composition"] = oc;
  j["vertical_composition"] = vc;
  j["horizontal_composition"] = hc;
  return j;
}

TwoCatPtr two_category_from_json(const Json& j) {
  auto a = std::make_shared<Fin2Category>();
  for (const auto& o : field(j, "objects")) a->objects.push_back(o.get<std::string>());
  for (const auto& c : field(j, "one_cells"))
    a->one_cells.push_back({field(c, "id").get<std::string>(), -1, -1});
  for (const auto& c : field(j, "two_cells"))
    a->two_cells.push_back({field(c, "id").get<std::string>(), -1, -1});
  a->init_tables();
  auto obj_at = [&](const std::string& name) {
    int o = a->object_index(name);
    if (o < 0) throw InputError("SchemaError", "unknown object '" + name + "'");
    return o;
  };
  auto one_at = [&](const std::string& name) {
    int c = a->one_cell_index(name);
    if (c < 0) throw InputError("SchemaError", "unknown 1-cell '" + name + "'");
    return c;
  };
  auto two_at = [&](const std::string& name) {
    int c = a->two_cell_index(name);
    if (c < 0) throw InputError("SchemaError", "unknown 2-cell '" + name + "'");
    return c;
  };
  size_t at = 0;
  for (const auto& c : field(j, "one_cells")) {
    a->one_cells[at].src = obj_at(field(c, "src").get<std::string>());
    a->one_cells[at].dst = obj_at(field(c, "dst").get<std::string>());
    ++at;
  }
  at = 0;
  for (const auto& c : field(j, "two_cells")) {
    a->two_cells[at].src_one = one_at(field(c, "src").get<std::string>());
    a->two_cells[at].dst_one = one_at(field(c, "dst").get<std::string>());
    ++at;
  }
  a->one_identity.assign(a->num_objects(), -1);
  for (const auto& [o, c] : field(j, "one_identity").items())
    a->one_identity[obj_at(o)] = one_at(c.get<std::string>());
  a->two_identity.assign(a->num_one_cells(), -1);
  for (const auto& [o, c] : field(j, "two_identity").items())
    a->two_identity[one_at(o)] = two_at(c.get<std::string>());
  a->init_tables();
  for (const auto& e : field(j, "one_composition"))
    a->set_compose_one(one_at(e[0].get<std::string>()), one_at(e[1].get<std::string>()),
                       one_at(e[2].get<std::string>()));
  for (const auto& e : field(j, "vertical_composition"))
    a->set_vcompose(two_at(e[0].get<std::string>()), two_at(e[1].get<std::string>()),
                    two_at(e[2].get<std::string>()));
  for (const auto& e : field(j, "horizontal_composition"))
    a->set_hcompose(two_at(e[0].get<std::string>()), two_at(e[1].get<std::string>()),
                    two_at(e[2].get<std::string>()));
  require_valid(validate_2category(*a), "two_category");
  return a;
}

Json to_json(const TwoFunctor& f) {
  Json j;
  j["kind"] = "two_functor";
  j["dom"] = to_json(*f.dom);
  j["cod"] = to_json(*f.cod);
  Json objs, ones, twos;
  for (size_t o = 0; o < f.obj_map.size(); ++o)
    objs[f.dom->objects[o]] = f.cod->objects[f.obj_map[o]];
  for (size_t c = 0; c < f.one_map.size(); ++c)
    ones[f.dom->one_cells[c].id] = f.cod->one_cells[f.one_map[c]].id;
  for (size_t c = 0; c < f.two_map.size(); ++c)
    twos[f.dom->two_cells[c].id] = f.cod->two_cells[f.two_map[c]].id;
  j["objects"] = objs;
  j["one_cells"] = ones;
  j["two_cells"] = twos;
  return j;
}

TwoFunctor two_functor_from_json(const Json& j) {
  TwoFunctor f;
  f.dom = two_category_from_json(field(j, "dom"));
  f.cod = two_category_from_json(field(j, "cod"));
  f.obj_map.assign(f.dom->num_objects(), -1);
  f.one_map.assign(f.dom->num_one_cells(), -1);
  f.two_map.assign(f.dom->num_two_cells(), -1);
  for (const auto& [a, b] : field(j, "objects").items()) {
    int o = f.dom->object_index(a);
    int t = f.cod->object_index(b.get<std::string>());
    if (o < 0 || t < 0) throw InputError("SchemaError", "two_functor objects");
    f.obj_map[o] = t;
  }
  for (const auto& [a, b] : field(j, "one_cells").items()) {
    int o = f.dom->one_cell_index(a);
    int t = f.cod->one_cell_index(b.get<std::string>());
    if (o < 0 || t < 0) throw InputError("SchemaError", "two_functor one_cells");
    f.one_map[o] = t;
  }
  for (const auto& [a, b] : field(j, "two_cells").items()) {
    int o = f.dom->two_cell_index(a);
    int t = f.cod->two_cell_index(b.get<std::string>());
    if (o < 0 || t < 0) throw InputError("SchemaError", "two_functor two_cells");
    f.two_map[o] = t;
  }
  require_valid(validate_2functor(f), "two_functor");
  return f;
}

Json to_json(const Pseudonatural& a) {
  Json j;
  j["kind"] = "pseudonatural";
  j["source"] = to_json(a.source);
  j["target"] = to_json(a.target);
  Json comps, nats;
  for (size_t o = 0; o < a.component.size(); ++o)
    comps[a.source.dom->objects[o]] = a.source.cod->one_cells[a.component[o]].id;
  for (size_t w = 0; w < a.naturality.size(); ++w)
    nats[a.source.dom->one_cells[w].id] =
        a.source.cod->two_cells[a.naturality[w]].id;
  j["components"] = comps;
  j["naturality"] = nats;
  return j;
}

Pseudonatural pseudonatural_from_json(const Json& j) {
  Pseudonatural a;
  a.source = two_functor_from_json(field(j, "source"));
  a.target = two_functor_from_json(field(j, "target"));
  a.component.assign(a.source.dom->num_objects(), -1);
  a.naturality.assign(a.source.dom->num_one_cells(), -1);
  for (const auto& [o, c] : field(j, "components").items()) {
    int oi = a.source.dom->object_index(o);
    int ci = a.source.cod->one_cell_index(c.get<std::string>());
    if (oi < 0 || ci < 0) throw InputError("SchemaError", "pseudonatural components");
    a.component[oi] = ci;
  }
  for (const auto& [w, t] : field(j, "naturality").items()) {
    int wi = a.source.dom->one_cell_index(w);
    int ti = a.source.cod->two_cell_index(t.get<std::string>());
    if (wi < 0 || ti < 0) throw InputError("SchemaError", "pseudonatural naturality");
    a.naturality[wi] = ti;
  }
  require_valid(validate_pseudonatural(a), "pseudonatural");
  return a;
}

Json to_json(const TruncSSet& x) {
  Json j;
  j["kind"] = "sset";
  j["dim"] = x.dim;
  Json simp = Json::array();
  for (int d = 0; d <= x.dim; ++d) simp.push_back(x.simplices[d]);
  j["simplices"] = simp;
  Json faces = Json::array(), degens = Json::array();
  for (int d = 1; d <= x.dim; ++d)
    for (size_t s = 0; s < x.count(d); ++s)
      for (int i = 0; i <= d; ++i)
        faces.push_back(Json::array(
            {d, x.simplices[d][s], i, x.simplices[d - 1][x.face[d][s][i]]}));
  for (int d = 0; d < x.dim; ++d)
    for (size_t s = 0; s < x.count(d); ++s)
      for (int k = 0; k <= d; ++k)
        degens.push_back(Json::array(
            {d, x.simplices[d][s], k, x.simplices[d + 1][x.degen[d][s][k]]}));
  j["faces"] = faces;
  j["degeneracies"] = degens;
  return j;
}

TruncSSet sset_from_json(const Json& j) {
  TruncSSet x;
  x.dim = field(j, "dim").get<int>();
  if (x.dim < 0) throw InputError("SchemaError", "negative dimension");
  const Json& simp = field(j, "simplices");
  if (int(simp.size()) != x.dim + 1)
    throw InputError("SchemaError", "simplices must list every dimension");
  x.simplices.resize(x.dim + 1);
  for (int d = 0; d <= x.dim; ++d)
    for (const auto& id : simp[d]) x.simplices[d].push_back(id.get<std::string>());
  x.face.resize(x.dim + 1);
  for (int d = 1; d <= x.dim; ++d)
    x.face[d].assign(x.count(d), std::vector<int>(d + 1, -1));
  x.degen.resize(std::max(x.dim, 0));
  for (int d = 0; d < x.dim; ++d)
    x.degen[d].assign(x.count(d), std::vector<int>(d + 1, -1));
  for (const auto& e : field(j, "faces")) {
    int d = e[0].get<int>();
    if (d < 1 || d > x.dim) throw InputError("SchemaError", "face dimension");
    int s = x.index_of(d, e[1].get<std::string>());
    int i = e[2].get<int>();
    int t = x.index_of(d - 1, e[3].get<std::string>());
    if (s < 0 || t < 0 || i < 0 || i > d)
      throw InputError("SchemaError", "face entry");
    x.face[d][s][i] = t;
  }
  for (const auto& e : field(j, "degeneracies")) {
    int d = e[0].get<int>();
    if (d < 0 || d >= x.dim) throw InputError("SchemaError", "degeneracy dimension");
    int s = x.index_of(d, e[1].get<std::string>());
    int k = e[2].get<int>();
    int t = x.index_of(d + 1, e[3].get<std::string>());
    if (s < 0 || t < 0 || k < 0 || k > d)
      throw InputError("SchemaError", "degeneracy entry");
    x.degen[d][s][k] = t;
  }
  for (int d = 1; d <= x.dim; ++d)
    for (size_t s = 0; s < x.count(d); ++s)
      for (int i = 0; i <= d; ++i)
        if (x.face[d][s][i] < 0)
          throw InputError("SchemaError", "missing face of " + x.simplices[d][s]);
  for (int d = 0; d < x.dim; ++d)
    for (size_t s = 0; s < x.count(d); ++s)
      for (int k = 0; k <= d; ++k)
        if (x.degen[d][s][k] < 0)
          throw InputError("SchemaError",
                           "missing degeneracy of " + x.simplices[d][s]);
  require_valid(validate_sset(x), "sset");
  return x;
}

Json to_json(const SimplicialMap& f) {
  Json j;
  j["kind"] = "simplicial_map";
  j["dom"] = to_json(f.dom);
  j["cod"] = to_json(f.cod);
  Json entries = Json::array();
  for (int d = 0; d <= f.dom.dim; ++d)
    for (size_t s = 0; s < f.dom.count(d); ++s)
      entries.push_back(Json::array(
          {d, f.dom.simplices[d][s], f.cod.simplices[d][f.map[d][s]]}));
  j["map"] = entries;
  return j;
}

SimplicialMap simplicial_map_from_json(const Json& j) {
  SimplicialMap f;
  f.dom = sset_from_json(field(j, "dom"));
  f.cod = sset_from_json(field(j, "cod"));
  f.map.resize(f.dom.dim + 1);
  for (int d = 0; d <= f.dom.dim; ++d) f.map[d].assign(f.dom.count(d), -1);
  for (const auto& e : field(j, "map")) {
    int d = e[0].get<int>();
    if (d < 0 || d > f.dom.dim) throw InputError("SchemaError", "map dimension");
    int s = f.dom.index_of(d, e[1].get<std::string>());
    int t = f.cod.index_of(d, e[2].get<std::string>());
    if (s < 0 || t < 0) throw InputError("SchemaError", "map entry");
    f.map[d][s] = t;
  }
  for (int d = 0; d <= f.dom.dim; ++d)
    for (size_t s = 0; s < f.dom.count(d); ++s)
      if (f.map[d][s] < 0)
        throw InputError("SchemaError", "missing image of " + f.dom.simplices[d][s]);
  require_valid(validate_simplicial_map(f), "simplicial_map");
  return f;
}

SSetCategory sset_category_from_json(const Json& j) {
  SSetCategory m;
  for (const auto& o : field(j, "objects")) m.objects.push_back(o.get<std::string>());
  const size_t n = m.objects.size();
  auto obj_at = [&](const std::string& name) {
    for (size_t i = 0; i < n; ++i)
      if (m.objects[i] == name) return int(i);
    throw InputError("SchemaError", "unknown object '" + name + "'");
  };
  m.hom.assign(n, std::vector<TruncSSet>(n));
  for (const auto& [key, val] : field(j, "homs").items()) {
    auto bar = key.find('|');
    if (bar == std::string::npos)
      throw InputError("SchemaError", "hom keys look like 'a|b'");
    int i = obj_at(key.substr(0, bar));
    int k = obj_at(key.substr(bar + 1));
    m.hom[i][k] = sset_from_json(val);
  }
  m.identity.assign(n, -1);
  for (const auto& [o, id] : field(j, "identities").items()) {
    int i = obj_at(o);
    m.identity[i] = m.hom[i][i].index_of(0, id.get<std::string>());
    if (m.identity[i] < 0) throw InputError("SchemaError", "identity simplex");
  }
  m.composition.assign(
      n, std::vector<std::vector<std::vector<std::vector<int>>>>(
             n, std::vector<std::vector<std::vector<int>>>(n)));
  for (size_t i = 0; i < n; ++i)
    for (size_t p = 0; p < n; ++p)
      for (size_t k = 0; k < n; ++k) {
        int dim = m.hom[i][p].dim;
        m.composition[i][p][k].resize(dim + 1);
        for (int d = 0; d <= dim; ++d)
          m.composition[i][p][k][d].assign(
              m.hom[p][k].count(d) * m.hom[i][p].count(d), -1);
      }
  for (const auto& e : field(j, "composition")) {
    if (!e.is_array() || e.size() != 7)
      throw InputError("SchemaError",
                       "composition entries are [i, j, k, dim, g, f, result]");
    int i = obj_at(e[0].get<std::string>());
    int p = obj_at(e[1].get<std::string>());
    int k = obj_at(e[2].get<std::string>());
    int d = e[3].get<int>();
    int g = m.hom[p][k].index_of(d, e[4].get<std::string>());
    int f = m.hom[i][p].index_of(d, e[5].get<std::string>());
    int r = m.hom[i][k].index_of(d, e[6].get<std::string>());
    if (g < 0 || f < 0 || r < 0) throw InputError("SchemaError", "composition entry");
    m.composition[i][p][k][d][size_t(g) * m.hom[i][p].count(d) + size_t(f)] = r;
  }
  require_valid(validate_sset_category(m), "sset_category");
  return m;
}

Json to_json(const FunctorProperties& p) {
  Json j;
  j["kind"] = "functor_properties";
  j["surjective_on_objects"] = p.surjective_on_objects;
  j["essentially_surjective"] = p.essentially_surjective;
  j["full"] = p.full;
  j["faithful"] = p.faithful;
  j["conservative"] = p.conservative;
  j["smothering"] = p.smothering;
  j["weakly_smothering"] = p.weakly_smothering;
  return j;
}

Json to_json(const Smothering2Record& p) {
  Json j;
  j["kind"] = "smothering2_record";
  j["surjective_on_objects"] = p.surjective_on_objects;
  j["hom_surjective"] = p.hom_surjective;
  j["hom_full"] = p.hom_full;
  j["hom_conservative"] = p.hom_conservative;
  j["smothering"] = p.smothering;
  return j;
}

Json fixture_json(const std::string& name) {
  if (name == "empty") return to_json(*empty_category());
  if (name == "terminal" || name == "one") return to_json(*terminal_category());
  if (name == "two" || name == "walking-arrow") return to_json(*walking_arrow());
  if (name == "disc2") return to_json(*discrete(2));
  if (name == "disc3") return to_json(*discrete(3));
  if (name == "chain3") return to_json(*chain(3));
  if (name == "free-iso") return to_json(*walking_iso());
  if (name == "parallel-pair") return to_json(*parallel_pair());
  if (name == "span") return to_json(*poset_corpus3()[6]);
  if (name == "cospan") return to_json(*poset_corpus3()[7]);
  if (name == "horn-2-1") return to_json(horn_two_one());
  if (name == "circle") return to_json(circle_sset(2));
  if (name == "nerve-two") return to_json(nerve(walking_arrow(), 3).sset);
  if (name == "nerve-iso") return to_json(nerve(walking_iso(), 3).sset);
  throw InputError("SchemaError", "unknown fixture '" + name + "'");
}

Json load_input(const std::string& path_or_fixture, const std::string& expected_kind) {
  Json j;
  if (path_or_fixture.rfind("fixture:", 0) == 0) {
    j = fixture_json(path_or_fixture.substr(8));
  } else {
    std::ifstream in(path_or_fixture);
    if (!in) throw InputError("ParseError", "cannot open " + path_or_fixture);
    try {
      in >> j;
    } catch (const std::exception& e) {
      throw InputError("ParseError", e.what());
    }
  }
  if (!j.is_object() || !j.contains("kind"))
    throw InputError("SchemaError", "inputs need a 'kind' discriminator");
  if (!expected_kind.empty() && j["kind"].get<std::string>() != expected_kind)
    throw InputError("SchemaError", "expected kind '" + expected_kind + "', got '" +
                                        j["kind"].get<std::string>() + "'");
  return j;
}

}  // namespace derlab
