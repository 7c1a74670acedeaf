#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "derlab/fincat.hpp"

namespace derlab {

struct OneCell {
  std::string id;
  int src = -1;
  int dst = -1;
};

struct TwoCellData {
  std::string id;
  int src_one = -1;  // parallel 1-cells
  int dst_one = -1;
};

/// A finite strict 2-category with total composition tables: horizontal
/// composition of 1-cells, vertical composition of 2-cells within each hom,
/// and horizontal composition of 2-cells.
class Fin2Category {
 public:
  std::vector<std::string> objects;
  std::vector<OneCell> one_cells;
  std::vector<int> one_identity;  // object -> identity 1-cell
  std::vector<TwoCellData> two_cells;
  std::vector<int> two_identity;  // 1-cell -> identity 2-cell

  void init_tables();

  int object_index(const std::string& name) const;
  int one_cell_index(const std::string& name) const;
  int two_cell_index(const std::string& name) const;

  size_t num_objects() const { return objects.size(); }
  size_t num_one_cells() const { return one_cells.size(); }
  size_t num_two_cells() const { return two_cells.size(); }

  // 1-cell composition g∘f, f first; -1 when undefined.
  int compose_one(int g, int f) const {
    return one_table_[g * one_cells.size() + f];
  }
  void set_compose_one(int g, int f, int gf) {
    one_table_[g * one_cells.size() + f] = gf;
  }
  // Vertical composition b • a for a : f ⇒ g, b : g ⇒ h.
  int vcompose(int b, int a) const { return v_table_[b * two_cells.size() + a]; }
  void set_vcompose(int b, int a, int ba) {
    v_table_[b * two_cells.size() + a] = ba;
  }
  // Horizontal composition b ⋆ a for a : f ⇒ f' : A → B, b : g ⇒ g' : B → C.
  int hcompose(int b, int a) const { return h_table_[b * two_cells.size() + a]; }
  void set_hcompose(int b, int a, int ba) {
    h_table_[b * two_cells.size() + a] = ba;
  }

  bool is_one_identity(int f) const;
  bool is_two_identity(int t) const;
  std::vector<int> one_hom(int a, int b) const;
  std::vector<int> two_hom(int f, int g) const;
  std::optional<int> two_inverse(int t) const;  // vertical inverse
  bool two_is_iso(int t) const { return two_inverse(t).has_value(); }

  /// g ⋆ t for a 1-cell g composable after the boundary of t.
  int whisker_post(int g, int t) const { return hcompose(two_identity[g], t); }
  /// t ⋆ g for a 1-cell g composable before the boundary of t.
  int whisker_pre(int t, int g) const { return hcompose(t, two_identity[g]); }

  std::string structural_key() const;
  friend bool operator==(const Fin2Category& a, const Fin2Category& b) {
    return a.structural_key() == b.structural_key();
  }

 private:
  std::vector<int> one_table_, v_table_, h_table_;
  std::unordered_map<std::string, int> obj_lookup_, one_lookup_, two_lookup_;
};

using TwoCatPtr = std::shared_ptr<const Fin2Category>;

/// Hom-wise category axioms, strict horizontal unitality/associativity,
/// whisker compatibility and middle-four interchange, all by enumeration.
ValidationReport validate_2category(const Fin2Category& a);

/// A category seen as a 2-category with only identity 2-cells.
TwoCatPtr two_category_from_category(CatPtr c);

/// Full finite fragment of the 2-category of categories spanned by the given
/// objects: 1-cells are all functors, 2-cells all natural transformations.
struct CatFragmentResult {
  TwoCatPtr two_category;
  std::vector<CatPtr> objects;
  std::vector<Functor> one_cells;
  std::vector<NatTrans> two_cells;
};
CatFragmentResult cat_fragment_2category(const std::vector<CatPtr>& cats);

struct TwoFunctor {
  TwoCatPtr dom, cod;
  std::vector<int> obj_map, one_map, two_map;
};

ValidationReport validate_2functor(const TwoFunctor& f);
TwoFunctor identity_2functor(TwoCatPtr c);

/// Pseudonatural transformation between 2-functors F, G : C → D. The
/// naturality cell at a 1-cell w : c → c' runs
///   nat[w] : component[c'] ∘ F(w) ⇒ G(w) ∘ component[c]
/// and must be invertible.
struct Pseudonatural {
  TwoFunctor source, target;
  std::vector<int> component;   // object of C -> 1-cell of D
  std::vector<int> naturality;  // 1-cell of C -> 2-cell of D
};

ValidationReport validate_pseudonatural(const Pseudonatural& a);
bool is_two_natural(const Pseudonatural& a);
Pseudonatural identity_pseudonatural(const TwoFunctor& f);
/// Vertical composite b ⊙ a of pseudonaturals (a first).
Pseudonatural pcompose(const Pseudonatural& b, const Pseudonatural& a);

struct Modification {
  Pseudonatural source, target;
  std::vector<int> component;  // object -> 2-cell
};

ValidationReport validate_modification(const Modification& m);

struct EquivalenceWitness {
  int inverse;  // 1-cell g
  int unit;     // invertible 2-cell id ⇒ g∘f
  int counit;   // invertible 2-cell f∘g ⇒ id
};

/// Exhaustive search for an equivalence structure on a 1-cell.
std::optional<EquivalenceWitness> is_equivalence_1cell(const Fin2Category& amb,
                                                       int f);

struct QuasiInverseResult {
  Pseudonatural inverse;   // γ : G ⇒ F
  Modification counit_mod; // α⊙γ ⇒ id_G
  Modification unit_mod;   // γ⊙α ⇒ id_F
};

/// The constructive quasi-inverse of a pseudonatural transformation all of
/// whose components are equivalences: components are the first quasi-inverses
/// in enumeration order, promoted to adjoint equivalences, and the naturality
/// cells are the standard pasting. Throws NotPointwiseEquivalence.
QuasiInverseResult pointwise_quasi_inverse(const Pseudonatural& a);

/// Exhaustive search over strictly 2-natural candidates and invertible
/// modifications; nullopt when no 2-natural quasi-inverse exists.
std::optional<Pseudonatural> exhaustive_2natural_inverse_search(
    const Pseudonatural& a);

/// The category with the same objects and isomorphism classes of 1-cells as
/// morphisms.
struct QuotientTResult {
  CatPtr category;
  std::vector<int> class_of_one_cell;  // 1-cell -> morphism index
};
QuotientTResult quotient_T(const Fin2Category& a);

struct Smothering2Record {
  bool surjective_on_objects = false;
  bool hom_surjective = false;    // on 1-cells, per hom
  bool hom_full = false;          // on 2-cells
  bool hom_conservative = false;  // reflects invertibility of 2-cells
  bool smothering = false;
};
Smothering2Record is_smothering_2functor(const TwoFunctor& f);

struct AdjunctionWitness2 {
  int left;    // 1-cell f : X → Y
  int right;   // 1-cell u : Y → X
  int unit;    // 2-cell id_X ⇒ u∘f
  int counit;  // 2-cell f∘u ⇒ id_Y
};
/// Strict triangle identities by table evaluation.
ValidationReport validate_adjunction2(const Fin2Category& amb,
                                      const AdjunctionWitness2& w);

/// Square of 1-cells with filler : right∘top ⇒ bottom∘left.
struct TwoSquare {
  int top;     // A → B
  int left;    // A → C
  int right;   // B → D
  int bottom;  // C → D
  int filler;
};

/// Mate of the square under f_! ⊣ top and h_! ⊣ bottom:
/// the 2-cell h_! ∘ right ⇒ left ∘ f_!. Throws MissingWitness when the
/// witnesses do not match the square's legs.
int mate_strict(const Fin2Category& amb, const TwoSquare& sq,
                const AdjunctionWitness2& top_adj,
                const AdjunctionWitness2& bottom_adj);

/// HDer 6 comparison: the canonical functor [Y, f↓g] → [Y,f] ↓ [Y,g]
/// together with its smothering record.
struct CommaSmotheringResult {
  Functor comparison;
  FunctorProperties properties;
};
CommaSmotheringResult comma_smothering_check(CatPtr y, const Functor& f,
                                             const Functor& g);

/// The built-in 2-natural pointwise equivalence without a 2-natural
/// quasi-inverse: F, G : (⇉) → Cat with images 0,1 : 𝟙 ⇉ I and id, id : I ⇉ I,
/// inside the finite fragment of Cat spanned by 𝟙 and I.
struct CounterexampleFixture {
  TwoCatPtr walking_pair;  // (⇉) as a 2-category
  CatFragmentResult fragment;
  TwoFunctor f, g;
  Pseudonatural alpha;
};
CounterexampleFixture counterexample_fixture();

}  // namespace derlab
