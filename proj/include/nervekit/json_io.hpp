#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "nervekit/category.hpp"
#include "nervekit/groupoid.hpp"
#include "nervekit/kan.hpp"
#include "nervekit/localization.hpp"
#include "nervekit/special.hpp"
#include "nervekit/torsor.hpp"

namespace nervekit {

using Json = nlohmann::ordered_json;

/// Parses a file; throws InvalidInput with the path on I/O or syntax errors.
/// The raw bytes are appended to `bytes` when given.
Json read_json_file(const std::string& path, std::string* bytes = nullptr);
Json parse_json(const std::string& text, const std::string& where);

/// {"objects": [x...], "arrows": [{"id", "src", "tgt"}...], "comp": [[a, b, c]...],
///  "id": {x: a}, "inv": {a: b}}; comp lists c = a then b, all entries required.
GroupoidHandle groupoid_from_json(const Json& j);
Json groupoid_to_json(const FiniteGroupoid& g);

/// {"objects": {x: y}, "arrows": {a: b}} between known groupoids.
GroupoidFunctor groupoid_functor_from_json(GroupoidHandle source, GroupoidHandle target, const Json& j);
/// {"source": groupoid, "target": groupoid, "objects": ..., "arrows": ...}
GroupoidFunctor standalone_functor_from_json(const Json& j);

/// {"objects": [...], "morphisms": [{"id", "src", "tgt"}...], "comp": [[f, g, h]...],
///  "id": {x: f}}; composites with an identity may be left out.
CategoryHandle category_from_json(const Json& j);
Json category_to_json(const FiniteCategory& c);

/// {"objects": {x: y}, "morphisms": {f: g}}; identities may be left out.
CategoryFunctor category_functor_from_json(CategoryHandle source, CategoryHandle target, const Json& j);

/// {"members": [f...], "close": bool, "pullbacks": "enumerate" | [{"f", "g", "apex", "p1", "p2"}...]}
MorphismClass class_from_json(CategoryHandle c, const Json& j);

/// {"target": groupoid, "W": [w...], "cover": {i: [w...]}, "a": {i: {w: x}},
///  "gamma": {"i,j": {w: arrow}}}
Cocycle cocycle_from_json(const Json& j);
Json cocycle_to_json(const Cocycle& c);
Json torsor_to_json(const Torsor& t);

struct KanInput {
  IndexedCategory ic;
  CategoryFunctor p;
  CategoryFunctor f;
  Lift lift;
  std::vector<Lift> tests;
};

/// base: category. fibers: {"pullback": {f: [{"op": ..., "with": [...], "n": k}...]}}.
/// along: {"D": category, "E": category, "F": functor, "p": functor}.
/// lift: {"sets": {e: [...]}, "maps": {h: [...]}, "tests": [{"sets", "maps"} over D...]}.
KanInput kan_from_json(const Json& base, const Json& fibers, const Json& along, const Json& lift);
Json finset_to_json(const FinSet& s);

/// {"shape": category, "groupoids": {d: groupoid}, "functors": {f: {"objects", "arrows"}}};
/// identities may be left out, and so may composites of listed arrows.
GroupoidDiagram groupoid_diagram_from_json(const Json& j);
/// {"source": groupoid, "objects": ..., "arrows": ...} into P(final).
GroupoidFunctor cover_from_json(const GroupoidDiagram& d, const Json& j);

}  // namespace nervekit
