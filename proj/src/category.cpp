#include "nervekit/category.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

namespace nervekit {

namespace {

[[noreturn]] void axiom(std::string what) { throw Error(ErrorKind::AxiomViolation, std::move(what)); }

std::string image_list(const std::vector<std::size_t>& map) {
  std::string s = "[";
  for (std::size_t i = 0; i < map.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(map[i]);
  }
  return s + "]";
}

using MapKey = std::tuple<std::size_t, std::size_t, std::vector<std::size_t>>;

// Builds tables from a list of concrete maps closed under composition.
CategoryHandle from_maps(const std::vector<std::pair<std::string, std::size_t>>& objects,
                         const std::vector<MapKey>& maps, const std::vector<std::string>& names) {
  CategoryTables t;
  for (const auto& [name, size] : objects) t.object_names.push_back(name);
  std::map<MapKey, MorphismId> index;
  for (MorphismId f = 0; f < maps.size(); ++f) {
    index.emplace(maps[f], f);
    t.morphism_names.push_back(names[f]);
    t.src.push_back(std::get<0>(maps[f]));
    t.tgt.push_back(std::get<1>(maps[f]));
  }
  t.identity.assign(objects.size(), kNone);
  for (std::size_t x = 0; x < objects.size(); ++x) {
    std::vector<std::size_t> id(objects[x].second);
    for (std::size_t i = 0; i < id.size(); ++i) id[i] = i;
    t.identity[x] = index.at(MapKey{x, x, id});
  }
  const std::size_t n = maps.size();
  t.comp.assign(n * n, kNone);
  for (MorphismId f = 0; f < n; ++f) {
    for (MorphismId g = 0; g < n; ++g) {
      if (t.tgt[f] != t.src[g]) continue;
      const auto& fm = std::get<2>(maps[f]);
      const auto& gm = std::get<2>(maps[g]);
      std::vector<std::size_t> h(fm.size());
      for (std::size_t i = 0; i < fm.size(); ++i) h[i] = gm[fm[i]];
      auto it = index.find(MapKey{t.src[f], t.tgt[g], h});
      if (it == index.end()) axiom("composite " + names[f] + " then " + names[g] + " not in the category");
      t.comp[f * n + g] = it->second;
    }
  }
  return make_category(std::move(t));
}

}  // namespace

FiniteCategory::FiniteCategory(CategoryTables tables) : t_(std::move(tables)) {
  hom_.resize(num_objects() * num_objects());
  for (MorphismId f = 0; f < num_morphisms(); ++f) hom_[t_.src[f] * num_objects() + t_.tgt[f]].push_back(f);
  for (std::size_t x = 0; x < num_objects(); ++x) object_index_.emplace(t_.object_names[x], x);
  for (MorphismId f = 0; f < num_morphisms(); ++f) morphism_index_.emplace(t_.morphism_names[f], f);
}

std::optional<std::size_t> FiniteCategory::find_object(std::string_view name) const {
  auto it = object_index_.find(std::string(name));
  if (it == object_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<MorphismId> FiniteCategory::find_morphism(std::string_view name) const {
  auto it = morphism_index_.find(std::string(name));
  if (it == morphism_index_.end()) return std::nullopt;
  return it->second;
}

std::vector<MorphismId> FiniteCategory::morphisms_into(std::size_t y) const {
  std::vector<MorphismId> out;
  for (MorphismId f = 0; f < num_morphisms(); ++f)
    if (t_.tgt[f] == y) out.push_back(f);
  return out;
}

std::vector<MorphismId> FiniteCategory::morphisms_from(std::size_t x) const {
  std::vector<MorphismId> out;
  for (MorphismId f = 0; f < num_morphisms(); ++f)
    if (t_.src[f] == x) out.push_back(f);
  return out;
}

CategoryHandle make_category(CategoryTables t) {
  const std::size_t n_obj = t.object_names.size();
  const std::size_t n = t.morphism_names.size();
  if (t.src.size() != n || t.tgt.size() != n || t.identity.size() != n_obj || t.comp.size() != n * n)
    throw Error(ErrorKind::InvalidInput, "category tables have inconsistent sizes");
  if (std::set<std::string>(t.object_names.begin(), t.object_names.end()).size() != n_obj)
    throw Error(ErrorKind::InvalidInput, "duplicate object id");
  if (std::set<std::string>(t.morphism_names.begin(), t.morphism_names.end()).size() != n)
    throw Error(ErrorKind::InvalidInput, "duplicate morphism id");
  for (MorphismId f = 0; f < n; ++f)
    if (t.src[f] >= n_obj || t.tgt[f] >= n_obj)
      throw Error(ErrorKind::DanglingId, "morphism " + t.morphism_names[f] + " has an undeclared endpoint");
  for (std::size_t x = 0; x < n_obj; ++x)
    if (t.identity[x] >= n) throw Error(ErrorKind::DanglingId, "identity of " + t.object_names[x]);
  for (MorphismId c : t.comp)
    if (c != kNone && c >= n) throw Error(ErrorKind::DanglingId, "composition table entry out of range");

  auto c = std::shared_ptr<FiniteCategory>(new FiniteCategory(std::move(t)));
  const auto& k = *c;
  for (std::size_t x = 0; x < n_obj; ++x)
    if (k.src(k.id(x)) != x || k.tgt(k.id(x)) != x)
      axiom("identity " + k.morphism_name(k.id(x)) + " of " + k.object_name(x) + " is not a loop at it");
  for (MorphismId f = 0; f < n; ++f) {
    for (MorphismId g = 0; g < n; ++g) {
      MorphismId h = k.comp(f, g);
      bool composable = k.tgt(f) == k.src(g);
      if (composable && h == kNone)
        axiom("composition of " + k.morphism_name(f) + " then " + k.morphism_name(g) + " missing");
      if (!composable && h != kNone)
        axiom("composition of non-composable " + k.morphism_name(f) + " then " + k.morphism_name(g));
      if (composable && (k.src(h) != k.src(f) || k.tgt(h) != k.tgt(g)))
        axiom("endpoints of " + k.morphism_name(f) + " then " + k.morphism_name(g));
    }
  }
  for (MorphismId f = 0; f < n; ++f)
    if (k.comp(k.id(k.src(f)), f) != f || k.comp(f, k.id(k.tgt(f))) != f)
      axiom("unit law fails for " + k.morphism_name(f));
  for (MorphismId f = 0; f < n; ++f)
    for (MorphismId g = 0; g < n; ++g) {
      if (k.tgt(f) != k.src(g)) continue;
      for (MorphismId h = 0; h < n; ++h)
        if (k.tgt(g) == k.src(h) && k.comp(k.comp(f, g), h) != k.comp(f, k.comp(g, h)))
          axiom("associativity fails for (" + k.morphism_name(f) + ", " + k.morphism_name(g) + ", " +
                k.morphism_name(h) + ")");
    }
  return c;
}

bool same_category(const CategoryHandle& a, const CategoryHandle& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  const auto& x = a->tables();
  const auto& y = b->tables();
  return x.object_names == y.object_names && x.morphism_names == y.morphism_names && x.src == y.src &&
         x.tgt == y.tgt && x.identity == y.identity && x.comp == y.comp;
}

CategoryHandle poset_category(const std::vector<std::string>& objects,
                              const std::vector<std::pair<std::string, std::string>>& relations) {
  const std::size_t n = objects.size();
  std::map<std::string, std::size_t> pos;
  for (std::size_t i = 0; i < n; ++i) pos.emplace(objects[i], i);
  std::vector<std::vector<char>> le(n, std::vector<char>(n, 0));
  for (std::size_t i = 0; i < n; ++i) le[i][i] = 1;
  for (const auto& [a, b] : relations) {
    auto ia = pos.find(a), ib = pos.find(b);
    if (ia == pos.end() || ib == pos.end()) throw Error(ErrorKind::UnknownObject, a + "<=" + b);
    le[ia->second][ib->second] = 1;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (le[i][k] && le[k][j]) le[i][j] = 1;

  CategoryTables t;
  t.object_names = objects;
  t.identity.assign(n, kNone);
  std::vector<std::vector<MorphismId>> arrow(n, std::vector<MorphismId>(n, kNone));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!le[i][j]) continue;
      arrow[i][j] = t.morphism_names.size();
      t.morphism_names.push_back(i == j ? "id_" + objects[i] : objects[i] + "<" + objects[j]);
      t.src.push_back(i);
      t.tgt.push_back(j);
      if (i == j) t.identity[i] = arrow[i][j];
    }
  const std::size_t m = t.morphism_names.size();
  t.comp.assign(m * m, kNone);
  for (MorphismId f = 0; f < m; ++f)
    for (MorphismId g = 0; g < m; ++g)
      if (t.tgt[f] == t.src[g]) t.comp[f * m + g] = arrow[t.src[f]][t.tgt[g]];
  return make_category(std::move(t));
}

CategoryHandle discrete_category(const std::vector<std::string>& objects) { return poset_category(objects, {}); }

CategoryHandle concrete_category(const std::vector<std::pair<std::string, std::size_t>>& objects,
                                 const std::vector<Generator>& generators) {
  std::map<std::string, std::size_t> pos;
  for (std::size_t i = 0; i < objects.size(); ++i) pos.emplace(objects[i].first, i);

  std::vector<MapKey> maps;
  std::vector<std::string> names;
  std::set<MapKey> seen;
  auto add = [&](MapKey key, std::string name) {
    if (seen.insert(key).second) {
      maps.push_back(std::move(key));
      names.push_back(std::move(name));
    }
  };
  for (std::size_t x = 0; x < objects.size(); ++x) {
    std::vector<std::size_t> id(objects[x].second);
    for (std::size_t i = 0; i < id.size(); ++i) id[i] = i;
    add(MapKey{x, x, id}, "id_" + objects[x].first);
  }
  for (const auto& gen : generators) {
    auto s = pos.find(gen.src), d = pos.find(gen.tgt);
    if (s == pos.end() || d == pos.end()) throw Error(ErrorKind::UnknownObject, "generator " + gen.name);
    if (gen.map.size() != objects[s->second].second)
      throw Error(ErrorKind::InvalidInput, "generator " + gen.name + " has the wrong domain size");
    for (std::size_t v : gen.map)
      if (v >= objects[d->second].second)
        throw Error(ErrorKind::InvalidInput, "generator " + gen.name + " leaves its codomain");
    add(MapKey{s->second, d->second, gen.map}, gen.name);
  }
  for (std::size_t f = 0; f < maps.size(); ++f) {
    for (std::size_t g = 0; g <= f; ++g) {
      for (auto [a, b] : {std::pair{f, g}, std::pair{g, f}}) {
        if (std::get<1>(maps[a]) != std::get<0>(maps[b])) continue;
        const auto& am = std::get<2>(maps[a]);
        const auto& bm = std::get<2>(maps[b]);
        std::vector<std::size_t> h(am.size());
        for (std::size_t i = 0; i < am.size(); ++i) h[i] = bm[am[i]];
        add(MapKey{std::get<0>(maps[a]), std::get<1>(maps[b]), h}, names[a] + ";" + names[b]);
      }
    }
  }
  return from_maps(objects, maps, names);
}

CategoryHandle finset_category(const std::vector<std::pair<std::string, std::size_t>>& objects) {
  std::vector<MapKey> maps;
  std::vector<std::string> names;
  for (std::size_t x = 0; x < objects.size(); ++x) {
    for (std::size_t y = 0; y < objects.size(); ++y) {
      const std::size_t m = objects[x].second, k = objects[y].second;
      if (m > 0 && k == 0) continue;
      std::vector<std::size_t> map(m, 0);
      while (true) {
        maps.emplace_back(x, y, map);
        names.push_back(objects[x].first + "->" + objects[y].first + ":" + image_list(map));
        std::size_t i = m;
        while (i > 0 && map[i - 1] + 1 == k) map[--i] = 0;
        if (i == 0) break;
        ++map[i - 1];
      }
    }
  }
  return from_maps(objects, maps, names);
}

CategoryFunctor validate_category_functor(CategoryHandle source, CategoryHandle target,
                                          std::vector<std::size_t> obj_map, std::vector<MorphismId> mor_map) {
  const auto& s = *source;
  const auto& t = *target;
  auto fail = [](std::string w) { throw Error(ErrorKind::NotFunctorial, std::move(w)); };
  if (obj_map.size() != s.num_objects() || mor_map.size() != s.num_morphisms())
    throw Error(ErrorKind::InvalidInput, "functor tables do not cover the source");
  for (std::size_t x : obj_map)
    if (x >= t.num_objects()) throw Error(ErrorKind::DanglingId, "functor object image out of range");
  for (MorphismId f : mor_map)
    if (f >= t.num_morphisms()) throw Error(ErrorKind::DanglingId, "functor morphism image out of range");
  for (MorphismId f = 0; f < s.num_morphisms(); ++f) {
    if (t.src(mor_map[f]) != obj_map[s.src(f)] || t.tgt(mor_map[f]) != obj_map[s.tgt(f)])
      fail("endpoints of " + s.morphism_name(f));
    for (MorphismId g : s.morphisms_from(s.tgt(f)))
      if (mor_map[s.comp(f, g)] != t.comp(mor_map[f], mor_map[g]))
        fail("composite " + s.morphism_name(f) + " then " + s.morphism_name(g));
  }
  for (std::size_t x = 0; x < s.num_objects(); ++x)
    if (mor_map[s.id(x)] != t.id(obj_map[x])) fail("identity of " + s.object_name(x));
  return {std::move(source), std::move(target), std::move(obj_map), std::move(mor_map)};
}

CategoryFunctor identity_functor(const CategoryHandle& c) {
  std::vector<std::size_t> obj(c->num_objects());
  std::vector<MorphismId> mor(c->num_morphisms());
  for (std::size_t i = 0; i < obj.size(); ++i) obj[i] = i;
  for (std::size_t i = 0; i < mor.size(); ++i) mor[i] = i;
  return {c, c, std::move(obj), std::move(mor)};
}

}  // namespace nervekit
