#pragma once

#include "derlab/fincat.hpp"
#include "derlab/finset.hpp"
#include "derlab/kan.hpp"
#include "derlab/twocat.hpp"

namespace derlab {

/// Collage of a cospan or weight. For weights the extra object is named "●"
/// and sits after the domain block; for cospans the blocks are prefixed l:/r:
/// and cross morphisms run from the left block to the right one.
struct CollageResult {
  CatPtr category;
  Functor include_left;
  Functor include_right;
  // Cross-morphism decode, parallel to category->morphisms; -1 on block
  // morphisms. For cospans: (left object, right object, C-morphism). For
  // weights: (-1, target object, weight element index).
  std::vector<int> cross_src, cross_dst, cross_datum;
};

/// Collage of a set-valued weight (a diagram over its domain): objects
/// Ob A ⊔ {●}, hom(●, a) = W a.
CollageResult collage_weight(const FinSetDiagram& w);

/// Collage of a cospan f : A → C ← B : g with hom(a, b) = C(fa, gb).
CollageResult collage_cospan(const Functor& f, const Functor& g);

/// Set-valued profunctor presented as a diagram over op(from) × to; the
/// collage has cross morphisms from the `from` block to the `to` block.
struct ProfunctorData {
  CatPtr from, to;
  FinSetDiagram data;  // over product(opposite(from), to)
};
ValidationReport validate_profunctor(const ProfunctorData& p);
CollageResult collage_profunctor(const ProfunctorData& p);
/// The representable profunctor C(f−, g−); its collage coincides with the
/// cospan collage table for table.
ProfunctorData representable_profunctor(const Functor& f, const Functor& g);

/// π : coll(f, g) → C acting as f, g and the identity on cross morphisms.
Functor pi_functor(const Functor& f, const Functor& g, const CollageResult& coll);

/// Collage idempotence: the collage of the inclusion cospan into coll(f, g)
/// is canonically isomorphic to coll(f, g) over the identity on objects.
ValidationReport idempotence_check(const Functor& f, const Functor& g);

// ---- Weighted limits --------------------------------------------------------

/// lim^W F computed by the end formula: natural families of functions
/// W a → F a. Elements are listed in a deterministic order.
struct WeightedLimitResult {
  FinSet set;
  std::vector<std::vector<SetFunction>> families;  // per element, per object
};
WeightedLimitResult weighted_limit_direct(const FinSetDiagram& w,
                                          const FinSetDiagram& f);

/// lim^W F as Ran along the collage inclusion evaluated at ●.
struct ViaCollageResult {
  CollageResult coll;
  RanResult ran;   // Ran_ι F over the collage
  int bullet;      // object index of ● in the collage
};
ViaCollageResult weighted_limit_via_collage(const FinSetDiagram& w,
                                            const FinSetDiagram& f);

/// Checks that the two computations agree: equal cardinality, and the
/// canonical element-wise bijection identifies the limit cones.
ValidationReport weighted_limit_dual_path_check(const FinSetDiagram& w,
                                                const FinSetDiagram& f);

/// The contravariant action of a weight morphism alpha : W → W' on weighted
/// limits, computed on the direct encodings: lim^{W'} F → lim^{W} F.
SetFunction weight_morphism_direct_map(const DiagramMorphism& alpha,
                                       const FinSetDiagram& f);
/// The same map computed through collages and the Ran mate, transported to
/// the direct encodings.
SetFunction weight_morphism_via_collage(const DiagramMorphism& alpha,
                                        const FinSetDiagram& f);
/// Both routes plus their comparison.
ValidationReport weight_morphism_check(const DiagramMorphism& alpha,
                                       const FinSetDiagram& f);

// ---- Exactness (collage-shaped Kan extension comparison) --------------------

struct ExactnessReport {
  std::string verdict;  // "pass" | "fail"
  std::vector<Violation> witnesses;
};

/// Left case: ●^* Lan_ι X → b^* Lan_f X is a bijection, where ι is the
/// inclusion of A into coll(f, b). Right case dual, via coll(b, f) and Ran.
ExactnessReport exactness_check(const Functor& f, int b, const FinSetDiagram& x,
                                bool left_side);
/// Generalized-element version over a full cospan: i1^* Lan_{i0} X ≅ g^* Lan_f X.
ExactnessReport exactness_cospan_check(const Functor& f, const Functor& g,
                                       const FinSetDiagram& x);

// ---- Category-valued weights (strict limits only) ----------------------------

struct CatDiagram {
  CatPtr shape;
  std::vector<CatPtr> value;
  std::vector<Functor> action;
};
ValidationReport validate_cat_diagram(const CatDiagram& d);

/// Collage of a category-valued weight as a finite 2-category: cross
/// hom-categories hom(●, a) = W a.
TwoCatPtr collage_cat_weight(const CatDiagram& w);

/// Strict Cat-valued weighted limit by the end formula: objects are natural
/// families of functors W a → F a, morphisms are compatible families of
/// natural transformations.
CatPtr cat_weighted_limit_direct(const CatDiagram& w, const CatDiagram& f);

}  // namespace derlab
