#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace derlab {

/// A single validation failure with a machine-readable code and a witness.
struct Violation {
  std::string code;
  std::string detail;
};

using ValidationReport = std::vector<Violation>;

/// Thrown on structural misuse of an operation (wrong boundaries, missing
/// witnesses). Validation problems in *data* are reported as values instead.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(code + ": " + what), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

struct Mor {
  std::string id;
  int src = -1;
  int dst = -1;
};

/// A finite category given by total composition tables. Objects and morphisms
/// are indexed; identifiers are opaque strings chosen by the constructor.
/// Instances may be structurally invalid until checked with
/// validate_category().
class FinCategory {
 public:
  std::vector<std::string> objects;
  std::vector<Mor> morphisms;
  std::vector<int> identity;  // object index -> morphism index

  /// Rebuilds lookup maps and sizes the composition table. Call once after
  /// objects/morphisms are in place, before set_compose.
  void init_tables();

  int object_index(const std::string& name) const;
  int morphism_index(const std::string& name) const;

  size_t num_objects() const { return objects.size(); }
  size_t num_morphisms() const { return morphisms.size(); }

  bool composable(int g, int f) const {
    return morphisms[f].dst == morphisms[g].src;
  }
  /// g∘f (f acts first); -1 when the entry is missing.
  int compose(int g, int f) const { return table_[g * morphisms.size() + f]; }
  void set_compose(int g, int f, int gf) {
    table_[g * morphisms.size() + f] = gf;
  }

  bool is_identity(int m) const;
  std::vector<int> hom(int a, int b) const;
  std::optional<int> inverse(int m) const;
  bool is_iso(int m) const { return inverse(m).has_value(); }

  /// Deterministic fingerprint; equal keys iff structurally equal.
  std::string structural_key() const;

  friend bool operator==(const FinCategory& a, const FinCategory& b) {
    return a.structural_key() == b.structural_key();
  }

 private:
  std::vector<int> table_;
  std::unordered_map<std::string, int> obj_lookup_;
  std::unordered_map<std::string, int> mor_lookup_;
};

using CatPtr = std::shared_ptr<const FinCategory>;

/// Checks totality-on-composable-pairs, boundary closure, associativity and
/// identity laws by enumeration. Empty report = valid.
ValidationReport validate_category(const FinCategory& c);

struct Functor {
  CatPtr dom, cod;
  std::vector<int> obj_map;  // dom object index -> cod object index
  std::vector<int> mor_map;  // dom morphism index -> cod morphism index

  int on_object(int a) const { return obj_map[a]; }
  int on_morphism(int m) const { return mor_map[m]; }
};

ValidationReport validate_functor(const Functor& f);
Functor identity_functor(CatPtr c);
Functor compose_functors(const Functor& g, const Functor& f);
bool functor_equal(const Functor& f, const Functor& g);

struct NatTrans {
  Functor source, target;        // parallel functors
  std::vector<int> component;    // dom object index -> cod morphism index
};

ValidationReport validate_nat_trans(const NatTrans& a);
NatTrans identity_nat_trans(const Functor& f);
/// Vertical composite b · a (a first). Throws BoundaryMismatch.
NatTrans vcompose(const NatTrans& b, const NatTrans& a);
/// Horizontal composite b * a for a : F ⇒ G : A → B, b : H ⇒ K : B → C.
NatTrans hcompose(const NatTrans& b, const NatTrans& a);
/// F∘a for a : G ⇒ H : A → B, F : B → C.
NatTrans whisker_post(const Functor& f, const NatTrans& a);
/// a∘F for F : A → B, a : G ⇒ H : B → C.
NatTrans whisker_pre(const NatTrans& a, const Functor& f);
bool nat_trans_equal(const NatTrans& a, const NatTrans& b);
bool nat_trans_is_iso(const NatTrans& a);

// ---- Dia-closure constructions -------------------------------------------

FinCategory opposite(const FinCategory& c);

struct ProductResult {
  CatPtr category;
  Functor proj_left, proj_right;
};
ProductResult product(CatPtr a, CatPtr b);

struct CoproductResult {
  CatPtr category;
  Functor inj_left, inj_right;
};
CoproductResult coproduct(CatPtr a, CatPtr b);

struct PullbackResult {
  CatPtr category;
  Functor proj_left, proj_right;
};
/// Strict pullback of f : A → C, g : B → C. Throws CodomainMismatch.
PullbackResult pullback_cat(const Functor& f, const Functor& g);

struct SliceResult {
  CatPtr category;
  Functor forgetful;
};
SliceResult slice(CatPtr c, const std::string& obj);

struct CommaResult {
  CatPtr category;
  Functor proj_left;   // (f/g) → A
  Functor proj_right;  // (f/g) → B
  NatTrans square;     // f∘P ⇒ g∘Q, component at (a,b,h) it is h
};
CommaResult comma(const Functor& f, const Functor& g);

struct FunctorProperties {
  bool surjective_on_objects = false;
  bool essentially_surjective = false;
  bool full = false;
  bool faithful = false;
  bool conservative = false;
  bool smothering = false;
  bool weakly_smothering = false;
};
FunctorProperties functor_properties(const Functor& f);

// ---- Search and enumeration ----------------------------------------------

/// Backtracking isomorphism search with hom-cardinality pruning.
std::optional<Functor> find_isomorphism(CatPtr a, CatPtr b);
bool isomorphic(CatPtr a, CatPtr b);

/// All functors A → B, deterministic order. Stops past `cap` (throws then).
std::vector<Functor> all_functors(CatPtr a, CatPtr b, size_t cap = 200000);
std::vector<NatTrans> all_nat_trans(const Functor& f, const Functor& g);

struct FunctorCategoryResult {
  CatPtr category;
  std::vector<Functor> objects;     // per category object
  std::vector<NatTrans> morphisms;  // per category morphism
};
/// The category [Y, X] of functors and natural transformations.
FunctorCategoryResult functor_category(CatPtr y, CatPtr x);

}  // namespace derlab
