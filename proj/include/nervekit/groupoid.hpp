#pragma once

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "nervekit/error.hpp"

namespace nervekit {

using ObjectId = std::size_t;
using ArrowId = std::size_t;

/// Unvalidated groupoid tables, indexed by position. Composition is
/// diagrammatic: comp[a * n + b] is "a then b" and is kNone unless
/// tgt(a) == src(b).
struct GroupoidTables {
  std::vector<std::string> object_names;
  std::vector<std::string> arrow_names;
  std::vector<ObjectId> src;
  std::vector<ObjectId> tgt;
  std::vector<ArrowId> identity;  // per object
  std::vector<ArrowId> inverse;   // per arrow
  std::vector<ArrowId> comp;      // |arrows| x |arrows|, row-major
};

/// A finite groupoid [R => X] stored as explicit tables. Instances only exist
/// after validate_groupoid() has checked every axiom.
class FiniteGroupoid {
 public:
  std::size_t num_objects() const noexcept { return t_.object_names.size(); }
  std::size_t num_arrows() const noexcept { return t_.arrow_names.size(); }

  ObjectId src(ArrowId a) const { return t_.src[a]; }
  ObjectId tgt(ArrowId a) const { return t_.tgt[a]; }
  ArrowId id(ObjectId x) const { return t_.identity[x]; }
  ArrowId inv(ArrowId a) const { return t_.inverse[a]; }

  /// "a then b"; kNone when tgt(a) != src(b).
  ArrowId comp(ArrowId a, ArrowId b) const { return t_.comp[a * num_arrows() + b]; }

  bool is_identity(ArrowId a) const { return t_.identity[t_.src[a]] == a; }

  const std::string& object_name(ObjectId x) const { return t_.object_names[x]; }
  const std::string& arrow_name(ArrowId a) const { return t_.arrow_names[a]; }

  std::optional<ObjectId> find_object(std::string_view name) const;
  std::optional<ArrowId> find_arrow(std::string_view name) const;

  /// Arrows with the given source, in increasing id order.
  const std::vector<ArrowId>& arrows_from(ObjectId x) const { return out_[x]; }
  std::vector<ArrowId> hom(ObjectId x, ObjectId y) const;

  const GroupoidTables& tables() const noexcept { return t_; }

 private:
  friend FiniteGroupoid validate_groupoid(GroupoidTables tables);
  explicit FiniteGroupoid(GroupoidTables tables);

  GroupoidTables t_;
  std::vector<std::vector<ArrowId>> out_;
  std::unordered_map<std::string, ObjectId> object_index_;
  std::unordered_map<std::string, ArrowId> arrow_index_;
};

using GroupoidHandle = std::shared_ptr<const FiniteGroupoid>;

/// Checks ids, composition domains, units, inverses and associativity.
/// Throws Error{DanglingId} or Error{AxiomViolation} with witness arrows.
FiniteGroupoid validate_groupoid(GroupoidTables tables);
GroupoidHandle make_groupoid(GroupoidTables tables);
/// Same handle, or identical tables.
bool same_groupoid(const GroupoidHandle& a, const GroupoidHandle& b);

struct GroupoidFunctor {
  GroupoidHandle source;
  GroupoidHandle target;
  std::vector<ObjectId> obj_map;
  std::vector<ArrowId> arr_map;

  ObjectId on_object(ObjectId x) const { return obj_map[x]; }
  ArrowId on_arrow(ArrowId a) const { return arr_map[a]; }
};

/// Throws Error{NotFunctorial} if the maps do not commute with src, tgt,
/// id, comp and inv.
GroupoidFunctor validate_functor(GroupoidHandle source, GroupoidHandle target,
                                 std::vector<ObjectId> obj_map, std::vector<ArrowId> arr_map);
GroupoidFunctor identity_functor(const GroupoidHandle& g);
/// first then second.
GroupoidFunctor compose(const GroupoidFunctor& first, const GroupoidFunctor& second);
bool same_functor(const GroupoidFunctor& a, const GroupoidFunctor& b);

/// The action groupoid [X x G => X] of a right action of a one-object
/// groupoid G on a finite set. act[x][g] is the point x.g.
GroupoidHandle action_groupoid(const std::vector<std::string>& points, const FiniteGroupoid& group,
                               const std::vector<std::vector<std::size_t>>& act);

/// Strict fiber product: pairs with equal images.
struct StrictFiberProduct {
  GroupoidHandle groupoid;
  GroupoidFunctor proj1;
  GroupoidFunctor proj2;
};
StrictFiberProduct fiber_product_strict(const GroupoidFunctor& f, const GroupoidFunctor& h);

/// Iso-comma model of the 2-fiber product. Objects are triples (g, h, k)
/// with k : F(g) -> H(h); a morphism (a, b) : (g,h,k) -> (g',h',k') exists
/// when k' = inv(F(a)) . k . H(b).
struct IsoComma {
  GroupoidHandle groupoid;
  GroupoidFunctor proj1;
  GroupoidFunctor proj2;
  std::vector<std::array<std::size_t, 3>> object_triples;  // (g, h, k)
  std::vector<std::array<std::size_t, 3>> arrow_data;      // (source object, a, b)
  std::map<std::array<std::size_t, 3>, ObjectId> object_index;
  std::map<std::array<std::size_t, 3>, ArrowId> arrow_index;

  /// Object id for a triple, or kNone.
  ObjectId find(std::size_t g, std::size_t h, std::size_t k) const;
  /// Arrow id for (a, b) out of the given object, or kNone.
  ArrowId find_arrow(ObjectId source, std::size_t a, std::size_t b) const;
};
IsoComma fiber_product_2(const GroupoidFunctor& f, const GroupoidFunctor& h);

/// Fully faithful and essentially surjective.
bool is_weak_equivalence(const GroupoidFunctor& f);
/// Same test, with the first failing witness.
Verdict weak_equivalence_verdict(const GroupoidFunctor& f);

struct Components {
  std::vector<std::vector<ObjectId>> classes;  // sorted, ordered by least member
  std::vector<std::size_t> component_of;
};
Components pi0(const FiniteGroupoid& g);

/// The isotropy group at x as a one-object groupoid.
GroupoidHandle vertex_group(const FiniteGroupoid& g, ObjectId x);

}  // namespace nervekit
