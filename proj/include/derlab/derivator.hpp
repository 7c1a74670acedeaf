#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "derlab/corpus.hpp"
#include "derlab/fincat.hpp"
#include "derlab/finset.hpp"
#include "derlab/kan.hpp"

namespace derlab {

/// How fiber corpora are produced. Shapes with at most
/// exhaustive_object_limit objects are enumerated exhaustively (up to
/// max_exhaustive diagrams); larger fibers are sampled with the recorded
/// seed.
struct CorpusPolicy {
  int size_bound = 2;
  int exhaustive_object_limit = 3;
  size_t max_exhaustive = 4096;
  size_t sample_count = 64;
  uint64_t seed = 17;
};

struct FiberCorpus {
  std::vector<FinSetDiagram> objects;
  bool exhaustive = true;
  uint64_t seed = 0;
};

/// All set-valued diagrams over `shape` with value sets of size ≤ bound,
/// or a seeded sample when the exhaustive count would exceed the cap.
FiberCorpus enumerate_diagrams(CatPtr shape, const CorpusPolicy& policy);

/// A prederivator presented through computable fiber data: the fiber over a
/// shape consists of set-valued diagrams over internal_shape(shape), and all
/// structure maps are induced by the (strictly functorial) shape transformer.
/// Checkers consume only this interface, so corrupted or shifted instances
/// run through the same code paths.
class PrederivatorInstance {
 public:
  virtual ~PrederivatorInstance() = default;
  virtual std::string name() const = 0;

  virtual CatPtr internal_shape(CatPtr shape) const = 0;
  virtual Functor internal_functor(const Functor& u) const = 0;
  virtual NatTrans internal_nat_trans(const NatTrans& a) const = 0;

  virtual FiberCorpus fiber_corpus(CatPtr shape, const CorpusPolicy& policy) const;
  virtual std::vector<DiagramMorphism> fiber_homs(const FinSetDiagram& x,
                                                  const FinSetDiagram& y) const;
  /// u : J → K in Dia; takes fiber(K) data to fiber(J) data.
  virtual FinSetDiagram restrict_obj(const Functor& u, const FinSetDiagram& x) const;
  virtual DiagramMorphism restrict_mor(const Functor& u,
                                       const DiagramMorphism& f) const;
  /// a : u ⇒ v : J → K; the component u^*X → v^*X of the 2-cell action.
  virtual DiagramMorphism two_cell_action(const NatTrans& a,
                                          const FinSetDiagram& x) const;

  virtual std::optional<LanResult> lan_witness(const Functor& u,
                                               const FinSetDiagram& x) const;
  virtual std::optional<DiagramMorphism> lan_transpose_witness(
      const Functor& u, const FinSetDiagram& x, const FinSetDiagram& y,
      const DiagramMorphism& phi) const;
  virtual std::optional<RanResult> ran_witness(const Functor& u,
                                               const FinSetDiagram& x) const;
  virtual std::optional<DiagramMorphism> ran_transpose_witness(
      const Functor& u, const FinSetDiagram& x, const FinSetDiagram& y,
      const DiagramMorphism& psi) const;

  /// Canonical preimage of (x, y) under the Der 1 comparison functor, when
  /// the transformed coproduct injections partition the internal shape.
  /// Checkers re-verify the result; a nullopt falls back to corpus search.
  virtual std::optional<FinSetDiagram> coproduct_glue(const CoproductResult& cop,
                                                      const FinSetDiagram& x,
                                                      const FinSetDiagram& y) const;
  /// Canonical fiber(𝟚) preimage of an arrow of fiber(𝟙) under dia.
  virtual std::optional<FinSetDiagram> arrow_glue(const DiagramMorphism& f) const;

 protected:
  /// Kan contexts cached per internal functor; the default adjoint witnesses
  /// route through these so repeated extensions along one functor reuse the
  /// comma categories.
  const LanContext& lan_context(const Functor& internal_u) const;
  const RanContext& ran_context(const Functor& internal_u) const;

 private:
  struct CorpusEntry {
    CatPtr pin;
    FiberCorpus corpus;
  };
  mutable std::map<std::string, std::unique_ptr<LanContext>> lan_cache_;
  mutable std::map<std::string, std::unique_ptr<RanContext>> ran_cache_;
  mutable std::map<std::string, CorpusEntry> corpus_cache_;
};

using InstancePtr = std::shared_ptr<const PrederivatorInstance>;

/// The prederivator represented by FinSet, with fibers cut down to value sets
/// bounded by the corpus policy. An empty factor list is the unshifted
/// instance; shifting appends a factor.
InstancePtr represented_finset_instance();
InstancePtr shift_instance(InstancePtr base, CatPtr a);

// ---- Beck–Chevalley machinery ---------------------------------------------

/// A square in Dia together with a filler 2-cell:
///
///         top
///      D ----> J
/// left |       | right          left mate needs  filler : right∘top ⇒ bottom∘left
///      v       v                right mate needs filler : bottom∘left ⇒ right∘top
///      B ----> K
///        bottom
struct DiaSquare {
  Functor top;
  Functor left;
  Functor right;
  Functor bottom;
  NatTrans filler;
};

/// The two comma squares of Der 4 at u : J → K and an object k of K.
DiaSquare der4_left_square(const Functor& u, int k);
DiaSquare der4_right_square(const Functor& u, int k);

/// Mate component at x ∈ fiber(J): Lan_left top^*x → bottom^* Lan_right x.
/// Throws MissingWitness when the instance offers no adjoints.
DiagramMorphism left_mate(const PrederivatorInstance& inst, const DiaSquare& sq,
                          const FinSetDiagram& x);
/// Mate component at x: bottom^* Ran_right x → Ran_left top^*x.
DiagramMorphism right_mate(const PrederivatorInstance& inst, const DiaSquare& sq,
                           const FinSetDiagram& x);

// ---- Axiom checkers ---------------------------------------------------------

struct CheckOptions {
  CorpusPolicy policy;
  size_t max_pairs = 200;        // cap on sampled hom-comparison pairs
  size_t max_object_pairs = 1024;  // cap on sampled preimage searches
  size_t max_naturality = 24;    // transpose roundtrip spot checks per functor
  uint64_t seed = 17;
};

struct AxiomReport {
  std::string axiom;
  std::string instance;
  std::string corpus;
  std::string verdict;  // "pass" | "fail" | "undetermined"
  std::vector<Violation> witnesses;
  uint64_t seed = 0;
  uint64_t checks = 0;

  bool passed() const { return verdict == "pass"; }
};

AxiomReport check_der1(const PrederivatorInstance& inst, CatPtr i, CatPtr j,
                       const CheckOptions& opt);
AxiomReport check_der2(const PrederivatorInstance& inst, CatPtr i,
                       const CheckOptions& opt);
AxiomReport check_der3(const PrederivatorInstance& inst, const Functor& u,
                       const CheckOptions& opt);
AxiomReport check_der4(const PrederivatorInstance& inst, const Functor& u, int k,
                       const CheckOptions& opt);
AxiomReport check_der5(InstancePtr inst, CatPtr i, const CheckOptions& opt);

/// Runs Der 1–5 over a shape corpus: Der 1 on shape pairs, Der 2/5 per shape,
/// Der 3/4 on every functor between corpus shapes (and every object for
/// Der 4). Reports are returned in a fixed deterministic order.
std::vector<AxiomReport> check_derivator(InstancePtr inst,
                                         const std::vector<CatPtr>& shapes,
                                         const CheckOptions& opt);

/// The incoherent diagram of a coherent one: value at i is i^*X. Requires the
/// instance's fiber over 𝟙 to consist of single sets (the unshifted case).
FinSetDiagram underlying_diagram(const PrederivatorInstance& inst, CatPtr i,
                                 const FinSetDiagram& x);

}  // namespace derlab
