#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "derlab/fincat.hpp"

namespace derlab {

/// Deterministic RNG used everywhere a corpus is sampled. Draws are portable
/// (raw mt19937_64 output, no std distributions).
class Rng {
 public:
  explicit Rng(uint64_t seed) : eng_(seed) {}
  uint64_t next() { return eng_(); }
  uint32_t below(uint32_t n) { return n == 0 ? 0 : uint32_t(eng_() % n); }
  bool chance(uint32_t percent) { return below(100) < percent; }

 private:
  std::mt19937_64 eng_;
};

CatPtr empty_category();
CatPtr terminal_category();  // one object "*"
/// Chain poset 0 < 1 < ... < n-1; chain(2) is the walking arrow.
CatPtr chain(int n);
CatPtr walking_arrow();  // chain(2)
CatPtr discrete(int n);
/// The free-living isomorphism: 0 ≅ 1.
CatPtr walking_iso();
/// Two parallel arrows a ⇉ b.
CatPtr parallel_pair();
/// Chaotic (indiscrete) category: exactly one morphism between any two objects.
CatPtr chaotic(int n);

/// Poset category from a reflexive-transitive order matrix (le[i][j] = i ≤ j).
CatPtr poset_category(const std::vector<std::vector<bool>>& le);

/// Representatives of all posets with at most three elements, including ∅.
std::vector<CatPtr> poset_corpus3();

/// Small categories with at most two objects used by the comma-smothering
/// and collage corpora: ∅, 𝟙, discrete 2, walking arrow, free iso,
/// parallel pair.
std::vector<CatPtr> two_object_corpus();

bool is_groupoid(const FinCategory& c);

/// Seeded random valid category with ≤ max_objects objects and ≤ max_morphisms
/// morphisms: free categories on acyclic multigraphs mixed with chaotic
/// groupoid blocks, valid by construction.
CatPtr random_category(Rng& rng, int max_objects, int max_morphisms);

/// The functor 𝟙 → c picking obj.
Functor object_as_functor(CatPtr c, int obj);
/// The natural transformation between object functors induced by a morphism.
NatTrans morphism_as_nat_trans(CatPtr c, int mor);
/// The unique functor c → 𝟙.
Functor bang_functor(CatPtr c);

}  // namespace derlab
