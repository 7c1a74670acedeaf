#pragma once

#include <string>
#include <vector>

#include "derlab/fincat.hpp"

namespace derlab {

struct FinSet {
  std::vector<std::string> elems;

  size_t size() const { return elems.size(); }
  int index_of(const std::string& name) const;
  friend bool operator==(const FinSet& a, const FinSet& b) {
    return a.elems == b.elems;
  }
};

struct SetFunction {
  FinSet dom, cod;
  std::vector<int> map;  // dom element index -> cod element index

  int apply(int i) const { return map[i]; }
  bool is_bijection() const;
  static SetFunction identity(const FinSet& s);
  friend bool operator==(const SetFunction& a, const SetFunction& b) {
    return a.dom == b.dom && a.cod == b.cod && a.map == b.map;
  }
};

ValidationReport validate_set_function(const SetFunction& f);
/// g∘f, f first. Throws BoundaryMismatch if cod(f) ≠ dom(g).
SetFunction compose(const SetFunction& g, const SetFunction& f);
SetFunction inverse(const SetFunction& f);  // throws unless bijection

/// A functor shape → FinSet given by explicit value sets and action tables.
struct FinSetDiagram {
  CatPtr shape;
  std::vector<FinSet> value;        // per shape object
  std::vector<SetFunction> action;  // per shape morphism

  friend bool operator==(const FinSetDiagram& a, const FinSetDiagram& b) {
    return *a.shape == *b.shape && a.value == b.value && a.action == b.action;
  }
};

ValidationReport validate_diagram(const FinSetDiagram& d);

/// Natural transformation between diagrams over one shape.
struct DiagramMorphism {
  FinSetDiagram dom, cod;
  std::vector<SetFunction> component;  // per shape object

  friend bool operator==(const DiagramMorphism& a, const DiagramMorphism& b) {
    return a.dom == b.dom && a.cod == b.cod && a.component == b.component;
  }
};

ValidationReport validate_diagram_morphism(const DiagramMorphism& m);
DiagramMorphism identity_morphism(const FinSetDiagram& d);
DiagramMorphism compose(const DiagramMorphism& g, const DiagramMorphism& f);
bool is_iso(const DiagramMorphism& m);
DiagramMorphism inverse(const DiagramMorphism& m);

/// All natural transformations x → y, backtracking with naturality pruning.
std::vector<DiagramMorphism> diagram_homs(const FinSetDiagram& x,
                                          const FinSetDiagram& y);

/// Whether some natural isomorphism x → y exists; only pointwise bijections
/// are enumerated, so this stays cheap when hom sets are large.
bool exists_natural_iso(const FinSetDiagram& x, const FinSetDiagram& y);

/// X restricted along u : J → K (X over K, result over J).
FinSetDiagram restrict_diagram(const Functor& u, const FinSetDiagram& x);
DiagramMorphism restrict_morphism(const Functor& u, const DiagramMorphism& m);

struct LimitResult {
  FinSet set;
  std::vector<SetFunction> projections;  // per shape object
};
/// Compatible families, as a subset of the product in object order.
LimitResult limit_finset(const FinSetDiagram& d);

struct ColimitResult {
  FinSet set;
  std::vector<SetFunction> injections;  // per shape object
  /// representative (object index, element index) per class, least in
  /// lexicographic order
  std::vector<std::pair<int, int>> representative;
};
/// Quotient of the disjoint union by the zig-zag relation (union-find).
ColimitResult colimit_finset(const FinSetDiagram& d);

/// Checks the universal property of limit_finset against one test cone:
/// a unique mediating function must exist. Cone legs are indexed by shape
/// objects.
bool limit_universal_property(const FinSetDiagram& d, const LimitResult& lim,
                              const FinSet& apex,
                              const std::vector<SetFunction>& legs);
bool colimit_universal_property(const FinSetDiagram& d, const ColimitResult& col,
                                const FinSet& nadir,
                                const std::vector<SetFunction>& legs);

}  // namespace derlab
