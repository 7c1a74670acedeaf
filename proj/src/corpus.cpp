#include "derlab/corpus.hpp"

#include <algorithm>
#include <string>

namespace derlab {

namespace {

CatPtr finish(std::shared_ptr<FinCategory> c) { return c; }

}  // namespace

CatPtr empty_category() {
  auto c = std::make_shared<FinCategory>();
  c->init_tables();
  return finish(c);
}

CatPtr terminal_category() {
  auto c = std::make_shared<FinCategory>();
  c->objects = {"*"};
  c->morphisms = {{"id:*", 0, 0}};
  c->identity = {0};
  c->init_tables();
  c->set_compose(0, 0, 0);
  return finish(c);
}

CatPtr poset_category(const std::vector<std::vector<bool>>& le) {
  auto c = std::make_shared<FinCategory>();
  const int n = int(le.size());
  for (int i = 0; i < n; ++i) c->objects.push_back("p" + std::to_string(i));
  std::vector<std::vector<int>> mor(n, std::vector<int>(n, -1));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (le[i][j]) {
        mor[i][j] = int(c->morphisms.size());
        c->morphisms.push_back(
            {"le(" + std::to_string(i) + "," + std::to_string(j) + ")", i, j});
      }
  for (int i = 0; i < n; ++i) c->identity.push_back(mor[i][i]);
  c->init_tables();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (le[i][j] && le[j][k])
          c->set_compose(mor[j][k], mor[i][j], mor[i][k]);
  return finish(c);
}

CatPtr chain(int n) {
  std::vector<std::vector<bool>> le(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) le[i][j] = true;
  return poset_category(le);
}

CatPtr walking_arrow() { return chain(2); }

CatPtr discrete(int n) {
  std::vector<std::vector<bool>> le(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) le[i][i] = true;
  return poset_category(le);
}

CatPtr chaotic(int n) {
  auto c = std::make_shared<FinCategory>();
  for (int i = 0; i < n; ++i) c->objects.push_back("c" + std::to_string(i));
  std::vector<std::vector<int>> mor(n, std::vector<int>(n, -1));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      mor[i][j] = int(c->morphisms.size());
      c->morphisms.push_back(
          {"u(" + std::to_string(i) + "," + std::to_string(j) + ")", i, j});
    }
  for (int i = 0; i < n; ++i) c->identity.push_back(mor[i][i]);
  c->init_tables();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) c->set_compose(mor[j][k], mor[i][j], mor[i][k]);
  return finish(c);
}

CatPtr walking_iso() { return chaotic(2); }

CatPtr parallel_pair() {
  auto c = std::make_shared<FinCategory>();
  c->objects = {"a", "b"};
  c->morphisms = {{"id:a", 0, 0}, {"id:b", 1, 1}, {"u", 0, 1}, {"v", 0, 1}};
  c->identity = {0, 1};
  c->init_tables();
  c->set_compose(0, 0, 0);
  c->set_compose(1, 1, 1);
  c->set_compose(2, 0, 2);
  c->set_compose(1, 2, 2);
  c->set_compose(3, 0, 3);
  c->set_compose(1, 3, 3);
  return finish(c);
}

std::vector<CatPtr> poset_corpus3() {
  std::vector<CatPtr> out;
  out.push_back(empty_category());
  out.push_back(chain(1));
  out.push_back(discrete(2));
  out.push_back(chain(2));
  out.push_back(discrete(3));
  out.push_back(chain(3));
  {
    // span: 0 ≤ 1, 0 ≤ 2
    std::vector<std::vector<bool>> le = {{true, true, true},
                                         {false, true, false},
                                         {false, false, true}};
    out.push_back(poset_category(le));
  }
  {
    // cospan: 0 ≤ 2, 1 ≤ 2
    std::vector<std::vector<bool>> le = {{true, false, true},
                                         {false, true, true},
                                         {false, false, true}};
    out.push_back(poset_category(le));
  }
  {
    // walking arrow plus a point: 0 ≤ 1, 2 alone
    std::vector<std::vector<bool>> le = {{true, true, false},
                                         {false, true, false},
                                         {false, false, true}};
    out.push_back(poset_category(le));
  }
  return out;
}

std::vector<CatPtr> two_object_corpus() {
  return {empty_category(), terminal_category(), discrete(2),
          walking_arrow(),  walking_iso(),       parallel_pair()};
}

bool is_groupoid(const FinCategory& c) {
  for (size_t m = 0; m < c.num_morphisms(); ++m)
    if (!c.is_iso(int(m))) return false;
  return true;
}

namespace {

// Free category on an acyclic multigraph; morphisms are paths.
CatPtr free_dag_category(Rng& rng, int max_objects, int max_morphisms) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    int n = 1 + int(rng.below(uint32_t(max_objects)));
    int edges = int(rng.below(uint32_t(2 * n)));
    std::vector<std::pair<int, int>> edge;
    for (int e = 0; e < edges; ++e) {
      if (n < 2) break;
      int i = int(rng.below(uint32_t(n - 1)));
      int j = i + 1 + int(rng.below(uint32_t(n - i - 1)));
      edge.push_back({i, j});
    }
    // Paths by increasing length; DAG edges only go up so this terminates.
    struct Path {
      int src, dst;
      std::vector<int> edges;
    };
    std::vector<Path> paths;
    for (int i = 0; i < n; ++i) paths.push_back({i, i, {}});
    size_t frontier_begin = 0;
    while (frontier_begin < paths.size() && paths.size() <= size_t(max_morphisms)) {
      size_t frontier_end = paths.size();
      for (size_t p = frontier_begin; p < frontier_end; ++p)
        for (size_t e = 0; e < edge.size(); ++e)
          if (edge[e].first == paths[p].dst) {
            Path q = paths[p];
            q.dst = edge[e].second;
            q.edges.push_back(int(e));
            paths.push_back(q);
            if (paths.size() > size_t(max_morphisms)) break;
          }
      if (frontier_end == paths.size()) break;
      frontier_begin = frontier_end;
    }
    if (paths.size() > size_t(max_morphisms)) continue;

    auto c = std::make_shared<FinCategory>();
    for (int i = 0; i < n; ++i) c->objects.push_back("o" + std::to_string(i));
    for (const Path& p : paths) {
      std::string id = "id:o" + std::to_string(p.src);
      if (!p.edges.empty()) {
        id = "e";
        for (int e : p.edges) id += "." + std::to_string(e);
        id += ":o" + std::to_string(p.src);
      }
      c->morphisms.push_back({id, p.src, p.dst});
    }
    for (int i = 0; i < n; ++i) c->identity.push_back(i);
    c->init_tables();
    auto path_at = [&](int src, const std::vector<int>& es) {
      for (size_t i = 0; i < paths.size(); ++i)
        if (paths[i].src == src && paths[i].edges == es) return int(i);
      return -1;
    };
    for (size_t g = 0; g < paths.size(); ++g)
      for (size_t f = 0; f < paths.size(); ++f)
        if (paths[f].dst == paths[g].src) {
          std::vector<int> es = paths[f].edges;
          es.insert(es.end(), paths[g].edges.begin(), paths[g].edges.end());
          c->set_compose(int(g), int(f), path_at(paths[f].src, es));
        }
    return finish(c);
  }
  return chain(2);
}

}  // namespace

CatPtr random_category(Rng& rng, int max_objects, int max_morphisms) {
  uint32_t kind = rng.below(100);
  if (kind < 15) {
    int k = 1 + int(rng.below(uint32_t(std::min(max_objects, 3))));
    while (k * k > max_morphisms && k > 1) --k;
    return chaotic(k);
  }
  if (kind < 30 && max_objects >= 3 && max_morphisms >= 5) {
    // A groupoid block next to a free part.
    auto iso = walking_iso();
    auto rest = free_dag_category(rng, max_objects - 2, max_morphisms - 4);
    return coproduct(iso, rest).category;
  }
  return free_dag_category(rng, max_objects, max_morphisms);
}

Functor object_as_functor(CatPtr c, int obj) {
  Functor f;
  f.dom = terminal_category();
  f.cod = c;
  f.obj_map = {obj};
  f.mor_map = {c->identity[obj]};
  return f;
}

NatTrans morphism_as_nat_trans(CatPtr c, int mor) {
  NatTrans a;
  a.source = object_as_functor(c, c->morphisms[mor].src);
  a.target = object_as_functor(c, c->morphisms[mor].dst);
  a.component = {mor};
  return a;
}

Functor bang_functor(CatPtr c) {
  Functor f;
  f.dom = c;
  f.cod = terminal_category();
  f.obj_map.assign(c->num_objects(), 0);
  f.mor_map.assign(c->num_morphisms(), 0);
  return f;
}

}  // namespace derlab
