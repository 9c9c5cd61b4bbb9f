#include "nervekit/zoo.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace nervekit::zoo {

GroupoidHandle point() { return group({"id"}, {{0}}, "*"); }

GroupoidHandle group(const std::vector<std::string>& elements,
                     const std::vector<std::vector<std::size_t>>& mult, std::string object) {
  const std::size_t n = elements.size();
  GroupoidTables t;
  t.object_names = {std::move(object)};
  t.arrow_names = elements;
  t.src.assign(n, 0);
  t.tgt.assign(n, 0);
  t.comp.resize(n * n);
  std::size_t unit = kNone;
  for (std::size_t e = 0; e < n && unit == kNone; ++e) {
    bool is_unit = true;
    for (std::size_t a = 0; a < n; ++a)
      if (mult[e][a] != a || mult[a][e] != a) is_unit = false;
    if (is_unit) unit = e;
  }
  if (unit == kNone) throw Error(ErrorKind::AxiomViolation, "multiplication table has no unit");
  t.identity = {unit};
  t.inverse.assign(n, kNone);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      t.comp[a * n + b] = mult[a][b];
      if (mult[a][b] == unit) t.inverse[a] = b;
    }
    if (t.inverse[a] == kNone) throw Error(ErrorKind::AxiomViolation, "no inverse for " + elements[a]);
  }
  return make_groupoid(std::move(t));
}

GroupoidHandle cyclic_group(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t k = 0; k < n; ++k) names.push_back(k == 0 ? "e" : k == 1 ? "g" : "g" + std::to_string(k));
  std::vector<std::vector<std::size_t>> mult(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) mult[a][b] = (a + b) % n;
  return group(names, mult);
}

GroupoidHandle symmetric_group(std::size_t n) {
  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));

  std::map<std::vector<std::size_t>, std::size_t> index;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < perms.size(); ++i) {
    index.emplace(perms[i], i);
    std::string name;
    for (std::size_t v : perms[i]) name += std::to_string(v + 1);
    names.push_back(name);
  }
  std::vector<std::vector<std::size_t>> mult(perms.size(), std::vector<std::size_t>(perms.size()));
  for (std::size_t a = 0; a < perms.size(); ++a)
    for (std::size_t b = 0; b < perms.size(); ++b) {
      std::vector<std::size_t> c(n);
      for (std::size_t i = 0; i < n; ++i) c[i] = perms[b][perms[a][i]];
      mult[a][b] = index.at(c);
    }
  return group(names, mult);
}

GroupoidHandle pair_groupoid(const std::vector<std::string>& objects) {
  const std::size_t k = objects.size();
  const std::size_t n = k * k;
  GroupoidTables t;
  t.object_names = objects;
  auto arrow = [k](std::size_t x, std::size_t y) { return x * k + y; };
  t.arrow_names.resize(n);
  t.src.resize(n);
  t.tgt.resize(n);
  t.inverse.resize(n);
  t.comp.assign(n * n, kNone);
  for (std::size_t x = 0; x < k; ++x)
    for (std::size_t y = 0; y < k; ++y) {
      std::size_t a = arrow(x, y);
      t.arrow_names[a] = "(" + objects[x] + "," + objects[y] + ")";
      t.src[a] = x;
      t.tgt[a] = y;
      t.inverse[a] = arrow(y, x);
      for (std::size_t z = 0; z < k; ++z) t.comp[a * n + arrow(y, z)] = arrow(x, z);
    }
  for (std::size_t x = 0; x < k; ++x) t.identity.push_back(arrow(x, x));
  return make_groupoid(std::move(t));
}

GroupoidHandle disjoint_union(const FiniteGroupoid& a, const FiniteGroupoid& b) {
  const auto& ta = a.tables();
  const auto& tb = b.tables();
  const std::size_t na = a.num_arrows();
  const std::size_t n = na + b.num_arrows();
  const std::size_t oa = a.num_objects();
  GroupoidTables t;
  for (const auto& s : ta.object_names) t.object_names.push_back("L." + s);
  for (const auto& s : tb.object_names) t.object_names.push_back("R." + s);
  for (const auto& s : ta.arrow_names) t.arrow_names.push_back("L." + s);
  for (const auto& s : tb.arrow_names) t.arrow_names.push_back("R." + s);
  t.src = ta.src;
  t.tgt = ta.tgt;
  for (std::size_t i = 0; i < b.num_arrows(); ++i) {
    t.src.push_back(tb.src[i] + oa);
    t.tgt.push_back(tb.tgt[i] + oa);
  }
  t.identity = ta.identity;
  for (auto e : tb.identity) t.identity.push_back(e + na);
  t.inverse = ta.inverse;
  for (auto i : tb.inverse) t.inverse.push_back(i + na);
  t.comp.assign(n * n, kNone);
  for (std::size_t x = 0; x < na; ++x)
    for (std::size_t y = 0; y < na; ++y) t.comp[x * n + y] = a.comp(x, y);
  for (std::size_t x = 0; x < b.num_arrows(); ++x)
    for (std::size_t y = 0; y < b.num_arrows(); ++y) {
      ArrowId c = b.comp(x, y);
      t.comp[(x + na) * n + (y + na)] = c == kNone ? kNone : c + na;
    }
  return make_groupoid(std::move(t));
}

GroupoidHandle product(const FiniteGroupoid& a, const FiniteGroupoid& b) {
  const std::size_t nb = b.num_arrows();
  const std::size_t ob = b.num_objects();
  const std::size_t n = a.num_arrows() * nb;
  GroupoidTables t;
  for (ObjectId x = 0; x < a.num_objects(); ++x)
    for (ObjectId y = 0; y < ob; ++y) t.object_names.push_back("(" + a.object_name(x) + "," + b.object_name(y) + ")");
  t.comp.assign(n * n, kNone);
  for (ArrowId p = 0; p < a.num_arrows(); ++p)
    for (ArrowId q = 0; q < nb; ++q) {
      t.arrow_names.push_back("(" + a.arrow_name(p) + "," + b.arrow_name(q) + ")");
      t.src.push_back(a.src(p) * ob + b.src(q));
      t.tgt.push_back(a.tgt(p) * ob + b.tgt(q));
      t.inverse.push_back(a.inv(p) * nb + b.inv(q));
    }
  for (ArrowId p = 0; p < a.num_arrows(); ++p)
    for (ArrowId q = 0; q < nb; ++q)
      for (ArrowId p2 : a.arrows_from(a.tgt(p)))
        for (ArrowId q2 : b.arrows_from(b.tgt(q))) t.comp[(p * nb + q) * n + (p2 * nb + q2)] = a.comp(p, p2) * nb + b.comp(q, q2);
  for (ObjectId x = 0; x < a.num_objects(); ++x)
    for (ObjectId y = 0; y < ob; ++y) t.identity.push_back(a.id(x) * nb + b.id(y));
  return make_groupoid(std::move(t));
}

GroupoidHandle regular_action(const FiniteGroupoid& group) {
  std::vector<std::string> points(group.tables().arrow_names);
  std::vector<std::vector<std::size_t>> act(group.num_arrows(), std::vector<std::size_t>(group.num_arrows()));
  for (ArrowId x = 0; x < group.num_arrows(); ++x)
    for (ArrowId g = 0; g < group.num_arrows(); ++g) act[x][g] = group.comp(x, g);
  return action_groupoid(points, group, act);
}

GroupoidHandle permutation_action(std::size_t n) {
  auto sn = symmetric_group(n);
  std::vector<std::string> points;
  for (std::size_t i = 1; i <= n; ++i) points.push_back(std::to_string(i));
  std::vector<std::vector<std::size_t>> act(n, std::vector<std::size_t>(sn->num_arrows()));
  for (std::size_t x = 0; x < n; ++x)
    for (ArrowId s = 0; s < sn->num_arrows(); ++s) act[x][s] = static_cast<std::size_t>(sn->arrow_name(s)[x] - '1');
  return action_groupoid(points, *sn, act);
}

GroupoidFunctor object_inclusion(const GroupoidHandle& g, ObjectId x) {
  return validate_functor(point(), g, {x}, {g->id(x)});
}

GroupoidFunctor vertex_inclusion(const GroupoidHandle& g, ObjectId x) {
  auto v = vertex_group(*g, x);
  std::vector<ArrowId> arrs = g->hom(x, x);
  return validate_functor(v, g, {x}, std::move(arrs));
}

GroupoidFunctor to_point(const GroupoidHandle& g, const GroupoidHandle& pt) {
  return validate_functor(g, pt, std::vector<ObjectId>(g->num_objects(), 0),
                          std::vector<ArrowId>(g->num_arrows(), pt->id(0)));
}

GroupoidFunctor action_to_group(const GroupoidHandle& action, const GroupoidHandle& group) {
  const std::size_t ng = group->num_arrows();
  if (action->num_arrows() != action->num_objects() * ng)
    throw Error(ErrorKind::InvalidInput, "not an action groupoid of this group");
  std::vector<ArrowId> arrows(action->num_arrows());
  for (ArrowId a = 0; a < arrows.size(); ++a) arrows[a] = a % ng;
  return validate_functor(action, group, std::vector<ObjectId>(action->num_objects(), 0), std::move(arrows));
}

}  // namespace nervekit::zoo
