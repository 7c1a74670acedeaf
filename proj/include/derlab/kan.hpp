#pragma once

#include <map>

#include "derlab/fincat.hpp"
#include "derlab/finset.hpp"

namespace derlab {

/// Left Kan extension along u : J → K, computed pointwise: the value at k is
/// the colimit of X restricted to the comma category (u/k).
struct LanResult {
  FinSetDiagram extension;  // over K
  DiagramMorphism unit;     // X → u^*(extension), over J
};

/// Right Kan extension; the value at k is the limit over (k/u).
struct RanResult {
  FinSetDiagram extension;  // over K
  DiagramMorphism counit;   // u^*(extension) → X, over J
};

/// Reusable comma data for Lan_u: building the commas (u/k) once amortizes
/// the dominant cost when many diagrams are extended along one functor.
class LanContext {
 public:
  explicit LanContext(const Functor& u);
  const Functor& along() const { return u_; }
  const LanResult& apply(const FinSetDiagram& x) const;
  /// Transpose of phi : X → u^*Y under Lan_u ⊣ u^*, as Lan_u X → Y.
  DiagramMorphism transpose(const FinSetDiagram& x, const FinSetDiagram& y,
                            const DiagramMorphism& phi) const;
  DiagramMorphism on_morphism(const DiagramMorphism& f) const;

 private:
  struct Computed {
    LanResult result;
    std::vector<ColimitResult> colimits;
  };
  const Computed& computed(const FinSetDiagram& x) const;

  Functor u_;
  std::vector<CommaResult> commas_;  // (u/k) per object k of K
  mutable std::map<std::string, Computed> memo_;
};

class RanContext {
 public:
  explicit RanContext(const Functor& u);
  const Functor& along() const { return u_; }
  const RanResult& apply(const FinSetDiagram& x) const;
  /// Transpose of psi : u^*Y → X under u^* ⊣ Ran_u, as Y → Ran_u X.
  DiagramMorphism transpose(const FinSetDiagram& x, const FinSetDiagram& y,
                            const DiagramMorphism& psi) const;
  DiagramMorphism on_morphism(const DiagramMorphism& f) const;

 private:
  struct Computed {
    RanResult result;
    std::vector<LimitResult> limits;
  };
  const Computed& computed(const FinSetDiagram& x) const;

  Functor u_;
  std::vector<CommaResult> commas_;  // (k/u) per object k of K
  mutable std::map<std::string, Computed> memo_;
};

LanResult lan(const Functor& u, const FinSetDiagram& x);
RanResult ran(const Functor& u, const FinSetDiagram& x);
DiagramMorphism lan_transpose(const Functor& u, const FinSetDiagram& x,
                              const FinSetDiagram& y, const DiagramMorphism& phi);
DiagramMorphism ran_transpose(const Functor& u, const FinSetDiagram& x,
                              const FinSetDiagram& y, const DiagramMorphism& psi);
DiagramMorphism lan_on_morphism(const Functor& u, const DiagramMorphism& f);
DiagramMorphism ran_on_morphism(const Functor& u, const DiagramMorphism& f);

/// Verifies both triangle identities and the bijectivity plus naturality of
/// the hom transpose on the given sample diagrams. Witness codes:
/// TriangleFailure, HomBijectionFailure, NaturalityFailure.
ValidationReport adjunction_check_lan(const Functor& u,
                                      const std::vector<FinSetDiagram>& over_j,
                                      const std::vector<FinSetDiagram>& over_k);
ValidationReport adjunction_check_ran(const Functor& u,
                                      const std::vector<FinSetDiagram>& over_j,
                                      const std::vector<FinSetDiagram>& over_k);

}  // namespace derlab
