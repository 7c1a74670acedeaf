#pragma once

#include <json.hpp>

#include "derlab/collage.hpp"
#include "derlab/derivator.hpp"
#include "derlab/fincat.hpp"
#include "derlab/finset.hpp"
#include "derlab/simplicial.hpp"
#include "derlab/twocat.hpp"

namespace derlab {

using Json = nlohmann::json;

/// Thrown on malformed input files; the code distinguishes ParseError
/// (unreadable JSON), SchemaError (wrong fields for the kind) and
/// ValidationError (well-formed data violating the mathematical laws).
class InputError : public Error {
 public:
  using Error::Error;
};

// Serializers. All emit a "kind" discriminator; nlohmann::json orders keys
// lexicographically so dumps are byte-stable.
Json to_json(const FinCategory& c);
Json to_json(const Functor& f);
Json to_json(const NatTrans& a);
Json to_json(const FinSet& s);
Json to_json(const FinSetDiagram& d);
Json to_json(const DiagramMorphism& m);
Json to_json(const Fin2Category& a);
Json to_json(const TwoFunctor& f);
Json to_json(const Pseudonatural& a);
Json to_json(const TruncSSet& x);
Json to_json(const SimplicialMap& f);
Json to_json(const FunctorProperties& p);
Json to_json(const Smothering2Record& p);

CatPtr category_from_json(const Json& j);
Functor functor_from_json(const Json& j);
NatTrans nat_trans_from_json(const Json& j);
FinSetDiagram diagram_from_json(const Json& j);
DiagramMorphism diagram_morphism_from_json(const Json& j);
TwoCatPtr two_category_from_json(const Json& j);
TwoFunctor two_functor_from_json(const Json& j);
Pseudonatural pseudonatural_from_json(const Json& j);
TruncSSet sset_from_json(const Json& j);
SimplicialMap simplicial_map_from_json(const Json& j);
SSetCategory sset_category_from_json(const Json& j);

/// Reads a file (or resolves a "fixture:<name>" reference) and returns the
/// parsed JSON with its kind validated against `expected_kind` when nonempty.
Json load_input(const std::string& path_or_fixture,
                const std::string& expected_kind = "");

/// Built-in fixtures by name: empty, terminal, two (walking arrow), disc2,
/// disc3, chain3, span, cospan, free-iso, parallel-pair, horn-2-1, circle,
/// nerve-two, nerve-iso.
Json fixture_json(const std::string& name);

}  // namespace derlab
