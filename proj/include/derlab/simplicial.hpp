#pragma once

#include <optional>
#include <string>
#include <vector>

#include "derlab/fincat.hpp"
#include "derlab/twocat.hpp"

namespace derlab {

/// A simplicial set truncated at dimension `dim`: simplex id lists per
/// dimension, total face maps d_i (1..dim) and degeneracy maps s_j
/// (0..dim-1).
struct TruncSSet {
  int dim = 0;
  std::vector<std::vector<std::string>> simplices;       // per dimension
  std::vector<std::vector<std::vector<int>>> face;       // face[d][s][i], d ≥ 1
  std::vector<std::vector<std::vector<int>>> degen;      // degen[d][s][j], d < dim

  size_t count(int d) const {
    return d < 0 || d > dim ? 0 : simplices[d].size();
  }
  int index_of(int d, const std::string& id) const;
  /// Whether a simplex is in the image of some degeneracy map.
  bool is_degenerate(int d, int s) const;
  /// The edge spanning vertices (i, i+1) of a d-simplex.
  int spine_edge(int d, int s, int i) const;
  int edge_src(int e) const { return face[1][e][1]; }
  int edge_dst(int e) const { return face[1][e][0]; }
};

ValidationReport validate_sset(const TruncSSet& x);

struct SimplicialMap {
  TruncSSet dom, cod;
  std::vector<std::vector<int>> map;  // per dimension

  int apply(int d, int s) const { return map[d][s]; }
};

ValidationReport validate_simplicial_map(const SimplicialMap& f);

/// The standard simplex Δ^n truncated at `dim`, and the inner/outer horns as
/// subcomplex checks are handled by the horn search below; Δ^n itself is the
/// nerve of the chain poset.
struct NerveResult {
  TruncSSet sset;
  /// chains[d][s] lists the d composed morphisms of the simplex (empty for
  /// vertices, which enumerate the objects in order).
  std::vector<std::vector<std::vector<int>>> chains;
};
NerveResult nerve(CatPtr c, int dim);

/// Nerve of a functor as a simplicial map.
SimplicialMap nerve_map(const Functor& f, int dim);

/// The horn Λ^2_1 truncated at 2 (two composable edges, no filler).
TruncSSet horn_two_one();
/// One vertex with a single nondegenerate loop (free monoid on one
/// generator; its fundamental category never stabilizes).
TruncSSet circle_sset(int dim);

struct FundamentalCategoryResult {
  bool determined = false;
  CatPtr category;
  std::vector<int> vertex_object;  // vertex index → object index
  std::vector<int> edge_morphism;  // edge index → morphism index
  std::vector<std::string> unresolved;  // witnesses when undetermined
};

/// Generators-and-relations quotient: generators are nondegenerate edges,
/// relations come from 2-simplices; congruence closure runs over paths of
/// length ≤ path_bound and the result is Undetermined unless every maximal-
/// length path reduces to a shorter one.
FundamentalCategoryResult fundamental_category(const TruncSSet& x, int path_bound);

/// All fillers of the horn: n-simplices whose i-th faces match `horn` for
/// every i ≠ k. Throws DimensionOutOfRange.
std::vector<int> horn_fillers(const TruncSSet& x, int n, int k,
                              const std::vector<int>& horn);

struct HornVerdict {
  bool pass = true;
  int up_to_dimension = 0;
  std::string witness;
  size_t horns_checked = 0;
};
/// Fillers for all inner horns up to the truncation bound.
HornVerdict is_quasicategory_up_to(const TruncSSet& x);
/// Fillers for all horns (including outer) up to the truncation bound.
HornVerdict is_kan_up_to(const TruncSSet& x);

struct IsofibrationReport {
  std::string verdict;  // "pass" | "fail" | "undetermined"
  std::vector<Violation> witnesses;
};
/// Inner-horn lifting plus equivalence lifting with prescribed source, the
/// finite-data replacement for lifting against the free-living isomorphism.
/// Throws NotQuasiCategoryInput if either side fails the quasi-category
/// check.
IsofibrationReport is_isofibration(const SimplicialMap& f, int path_bound = 8);

/// Direct categorical oracle matched by nerve isofibrations: every
/// isomorphism of the codomain lifts along F with any prescribed source.
bool iso_lifting_oracle(const Functor& f);

/// A category enriched in truncated simplicial sets.
struct SSetCategory {
  std::vector<std::string> objects;
  std::vector<std::vector<TruncSSet>> hom;  // hom[i][j]
  std::vector<int> identity;                // identity 0-simplex in hom[i][i]
  /// composition[i][j][k][d] is the flattened table
  /// (g ∈ hom[j][k]_d, f ∈ hom[i][j]_d) ↦ hom[i][k]_d at g*|hom_ij|_d + f.
  std::vector<std::vector<std::vector<std::vector<std::vector<int>>>>> composition;

  int comp(int i, int j, int k, int d, int g, int f) const {
    return composition[i][j][k][d][size_t(g) * hom[i][j].count(d) + size_t(f)];
  }
};

ValidationReport validate_sset_category(const SSetCategory& m);

/// An SSetCategory with nerve homs built from a family of categories and a
/// strictly associative composition (used by tests and fixtures): the full
/// sub-2-category of Cat on `cats`, enriched via nerves.
SSetCategory nerve_enriched_category(const std::vector<CatPtr>& cats, int dim);

struct Homotopy2CatResult {
  bool determined = false;
  TwoCatPtr two_category;
  std::vector<std::string> unresolved;
};
/// Applies the fundamental category homwise and assembles the horizontal
/// structure through the enriched composition.
Homotopy2CatResult homotopy_2category(const SSetCategory& m, int path_bound);

/// h(N C) ≅ C (isomorphism search) and naturality of the unit X → N(h X) on
/// faces and degeneracies in range.
ValidationReport check_hn_adjunction(CatPtr c, const TruncSSet& x, int path_bound);

}  // namespace derlab
