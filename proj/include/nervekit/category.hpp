#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "nervekit/error.hpp"

namespace nervekit {

using MorphismId = std::size_t;

/// Unvalidated category tables; comp[f * n + g] is "f then g".
struct CategoryTables {
  std::vector<std::string> object_names;
  std::vector<std::string> morphism_names;
  std::vector<std::size_t> src;
  std::vector<std::size_t> tgt;
  std::vector<MorphismId> identity;
  std::vector<MorphismId> comp;
};

class FiniteCategory {
 public:
  std::size_t num_objects() const noexcept { return t_.object_names.size(); }
  std::size_t num_morphisms() const noexcept { return t_.morphism_names.size(); }

  std::size_t src(MorphismId f) const { return t_.src[f]; }
  std::size_t tgt(MorphismId f) const { return t_.tgt[f]; }
  MorphismId id(std::size_t x) const { return t_.identity[x]; }
  /// "f then g"; kNone when tgt(f) != src(g).
  MorphismId comp(MorphismId f, MorphismId g) const { return t_.comp[f * num_morphisms() + g]; }
  bool is_identity(MorphismId f) const { return t_.identity[t_.src[f]] == f; }

  const std::string& object_name(std::size_t x) const { return t_.object_names[x]; }
  const std::string& morphism_name(MorphismId f) const { return t_.morphism_names[f]; }
  std::optional<std::size_t> find_object(std::string_view name) const;
  std::optional<MorphismId> find_morphism(std::string_view name) const;

  const std::vector<MorphismId>& hom(std::size_t x, std::size_t y) const { return hom_[x * num_objects() + y]; }
  std::vector<MorphismId> morphisms_into(std::size_t y) const;
  std::vector<MorphismId> morphisms_from(std::size_t x) const;

  const CategoryTables& tables() const noexcept { return t_; }

 private:
  friend std::shared_ptr<const FiniteCategory> make_category(CategoryTables tables);
  explicit FiniteCategory(CategoryTables tables);

  CategoryTables t_;
  std::vector<std::vector<MorphismId>> hom_;
  std::unordered_map<std::string, std::size_t> object_index_;
  std::unordered_map<std::string, MorphismId> morphism_index_;
};

using CategoryHandle = std::shared_ptr<const FiniteCategory>;

/// Checks ids, domains, units and associativity; throws DanglingId or
/// AxiomViolation.
CategoryHandle make_category(CategoryTables tables);
bool same_category(const CategoryHandle& a, const CategoryHandle& b);

/// The poset on `objects` generated by the pairs (a, b) meaning a <= b.
/// Morphisms are named "a<b" and "id_a".
CategoryHandle poset_category(const std::vector<std::string>& objects,
                              const std::vector<std::pair<std::string, std::string>>& relations);

/// Category with one morphism per object and no others.
CategoryHandle discrete_category(const std::vector<std::string>& objects);

/// A map between finite sets named by its image list, e.g. {1, 0}.
struct Generator {
  std::string name;
  std::string src;
  std::string tgt;
  std::vector<std::size_t> map;
};

/// Subcategory of finite sets generated by the given maps between sets of
/// the given sizes. Composites keep the first name found in BFS order
/// ("f;g"); identities are "id_X".
CategoryHandle concrete_category(const std::vector<std::pair<std::string, std::size_t>>& objects,
                                 const std::vector<Generator>& generators);

/// Full subcategory of finite sets on sets of the given sizes; morphisms are
/// named "X->Y:[images]".
CategoryHandle finset_category(const std::vector<std::pair<std::string, std::size_t>>& objects);

struct CategoryFunctor {
  CategoryHandle source;
  CategoryHandle target;
  std::vector<std::size_t> obj_map;
  std::vector<MorphismId> mor_map;
};

/// Throws NotFunctorial.
CategoryFunctor validate_category_functor(CategoryHandle source, CategoryHandle target, std::vector<std::size_t> obj_map,
                                          std::vector<MorphismId> mor_map);
CategoryFunctor identity_functor(const CategoryHandle& c);

}  // namespace nervekit
