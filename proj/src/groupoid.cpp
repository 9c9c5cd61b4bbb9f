#include "nervekit/groupoid.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "detail/union_find.hpp"

namespace nervekit {

namespace {

std::string triple_name(const FiniteGroupoid& g, ArrowId a, ArrowId b, ArrowId c) {
  return "(" + g.arrow_name(a) + ", " + g.arrow_name(b) + ", " + g.arrow_name(c) + ")";
}

[[noreturn]] void axiom(std::string what) { throw Error(ErrorKind::AxiomViolation, std::move(what)); }

}  // namespace

FiniteGroupoid::FiniteGroupoid(GroupoidTables tables) : t_(std::move(tables)) {
  out_.resize(num_objects());
  for (ArrowId a = 0; a < num_arrows(); ++a) out_[t_.src[a]].push_back(a);
  for (ObjectId x = 0; x < num_objects(); ++x) object_index_.emplace(t_.object_names[x], x);
  for (ArrowId a = 0; a < num_arrows(); ++a) arrow_index_.emplace(t_.arrow_names[a], a);
}

std::optional<ObjectId> FiniteGroupoid::find_object(std::string_view name) const {
  auto it = object_index_.find(std::string(name));
  if (it == object_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<ArrowId> FiniteGroupoid::find_arrow(std::string_view name) const {
  auto it = arrow_index_.find(std::string(name));
  if (it == arrow_index_.end()) return std::nullopt;
  return it->second;
}

std::vector<ArrowId> FiniteGroupoid::hom(ObjectId x, ObjectId y) const {
  std::vector<ArrowId> out;
  for (ArrowId a : out_[x])
    if (t_.tgt[a] == y) out.push_back(a);
  return out;
}

FiniteGroupoid validate_groupoid(GroupoidTables t) {
  const std::size_t n_obj = t.object_names.size();
  const std::size_t n = t.arrow_names.size();
  if (t.src.size() != n || t.tgt.size() != n || t.inverse.size() != n || t.identity.size() != n_obj ||
      t.comp.size() != n * n)
    throw Error(ErrorKind::InvalidInput, "groupoid tables have inconsistent sizes");

  {
    std::set<std::string> seen(t.object_names.begin(), t.object_names.end());
    if (seen.size() != n_obj) throw Error(ErrorKind::InvalidInput, "duplicate object id");
    std::set<std::string> seen_arrows(t.arrow_names.begin(), t.arrow_names.end());
    if (seen_arrows.size() != n) throw Error(ErrorKind::InvalidInput, "duplicate arrow id");
  }
  for (ArrowId a = 0; a < n; ++a) {
    if (t.src[a] >= n_obj || t.tgt[a] >= n_obj)
      throw Error(ErrorKind::DanglingId, "arrow " + t.arrow_names[a] + " has an undeclared endpoint");
    if (t.inverse[a] >= n) throw Error(ErrorKind::DanglingId, "inverse of " + t.arrow_names[a]);
  }
  for (ObjectId x = 0; x < n_obj; ++x)
    if (t.identity[x] >= n) throw Error(ErrorKind::DanglingId, "identity of " + t.object_names[x]);
  for (ArrowId c : t.comp)
    if (c != kNone && c >= n) throw Error(ErrorKind::DanglingId, "composition table entry out of range");

  FiniteGroupoid g(std::move(t));

  for (ObjectId x = 0; x < n_obj; ++x) {
    ArrowId e = g.id(x);
    if (g.src(e) != x || g.tgt(e) != x)
      axiom("identity " + g.arrow_name(e) + " of " + g.object_name(x) + " is not a loop at it");
  }
  for (ArrowId a = 0; a < n; ++a) {
    for (ArrowId b = 0; b < n; ++b) {
      ArrowId c = g.comp(a, b);
      bool composable = g.tgt(a) == g.src(b);
      if (composable && c == kNone)
        axiom("composition of " + g.arrow_name(a) + " then " + g.arrow_name(b) + " missing");
      if (!composable && c != kNone)
        axiom("composition of non-composable " + g.arrow_name(a) + " then " + g.arrow_name(b));
      if (composable && (g.src(c) != g.src(a) || g.tgt(c) != g.tgt(b)))
        axiom("endpoints of " + g.arrow_name(a) + " then " + g.arrow_name(b));
    }
  }
  for (ArrowId a = 0; a < n; ++a) {
    if (g.comp(g.id(g.src(a)), a) != a || g.comp(a, g.id(g.tgt(a))) != a)
      axiom("unit law fails for " + g.arrow_name(a));
    ArrowId i = g.inv(a);
    if (g.src(i) != g.tgt(a) || g.tgt(i) != g.src(a)) axiom("inverse endpoints of " + g.arrow_name(a));
    if (g.comp(a, i) != g.id(g.src(a)) || g.comp(i, a) != g.id(g.tgt(a)))
      axiom("inverse law fails for " + g.arrow_name(a) + " with " + g.arrow_name(i));
  }
  for (ArrowId a = 0; a < n; ++a)
    for (ArrowId b : g.arrows_from(g.tgt(a)))
      for (ArrowId c : g.arrows_from(g.tgt(b)))
        if (g.comp(g.comp(a, b), c) != g.comp(a, g.comp(b, c)))
          axiom("associativity fails for " + triple_name(g, a, b, c));
  return g;
}

GroupoidHandle make_groupoid(GroupoidTables tables) {
  return std::make_shared<const FiniteGroupoid>(validate_groupoid(std::move(tables)));
}

bool same_groupoid(const GroupoidHandle& a, const GroupoidHandle& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  const auto& x = a->tables();
  const auto& y = b->tables();
  return x.object_names == y.object_names && x.arrow_names == y.arrow_names && x.src == y.src &&
         x.tgt == y.tgt && x.comp == y.comp;
}

GroupoidFunctor validate_functor(GroupoidHandle source, GroupoidHandle target,
                                 std::vector<ObjectId> obj_map, std::vector<ArrowId> arr_map) {
  const auto& s = *source;
  const auto& t = *target;
  auto fail = [](std::string w) { throw Error(ErrorKind::NotFunctorial, std::move(w)); };
  if (obj_map.size() != s.num_objects() || arr_map.size() != s.num_arrows())
    throw Error(ErrorKind::InvalidInput, "functor tables do not cover the source");
  for (ObjectId x : obj_map)
    if (x >= t.num_objects()) throw Error(ErrorKind::DanglingId, "functor object image out of range");
  for (ArrowId a : arr_map)
    if (a >= t.num_arrows()) throw Error(ErrorKind::DanglingId, "functor arrow image out of range");

  for (ArrowId a = 0; a < s.num_arrows(); ++a) {
    ArrowId fa = arr_map[a];
    if (t.src(fa) != obj_map[s.src(a)] || t.tgt(fa) != obj_map[s.tgt(a)])
      fail("endpoints of " + s.arrow_name(a));
    if (arr_map[s.inv(a)] != t.inv(fa)) fail("inverse of " + s.arrow_name(a));
    for (ArrowId b : s.arrows_from(s.tgt(a)))
      if (arr_map[s.comp(a, b)] != t.comp(fa, arr_map[b]))
        fail("composite " + s.arrow_name(a) + " then " + s.arrow_name(b));
  }
  for (ObjectId x = 0; x < s.num_objects(); ++x)
    if (arr_map[s.id(x)] != t.id(obj_map[x])) fail("identity of " + s.object_name(x));
  return GroupoidFunctor{std::move(source), std::move(target), std::move(obj_map), std::move(arr_map)};
}

GroupoidFunctor identity_functor(const GroupoidHandle& g) {
  std::vector<ObjectId> objs(g->num_objects());
  std::iota(objs.begin(), objs.end(), 0);
  std::vector<ArrowId> arrs(g->num_arrows());
  std::iota(arrs.begin(), arrs.end(), 0);
  return GroupoidFunctor{g, g, std::move(objs), std::move(arrs)};
}

GroupoidFunctor compose(const GroupoidFunctor& first, const GroupoidFunctor& second) {
  if (!same_groupoid(first.target, second.source))
    throw Error(ErrorKind::MismatchedTarget, "functors are not composable");
  GroupoidFunctor out{first.source, second.target, {}, {}};
  out.obj_map.reserve(first.obj_map.size());
  for (ObjectId x : first.obj_map) out.obj_map.push_back(second.obj_map[x]);
  out.arr_map.reserve(first.arr_map.size());
  for (ArrowId a : first.arr_map) out.arr_map.push_back(second.arr_map[a]);
  return out;
}

bool same_functor(const GroupoidFunctor& a, const GroupoidFunctor& b) {
  return a.obj_map == b.obj_map && a.arr_map == b.arr_map;
}

GroupoidHandle action_groupoid(const std::vector<std::string>& points, const FiniteGroupoid& group,
                               const std::vector<std::vector<std::size_t>>& act) {
  if (group.num_objects() != 1) throw Error(ErrorKind::InvalidInput, "acting groupoid must have one object");
  const std::size_t np = points.size();
  const std::size_t ng = group.num_arrows();
  if (act.size() != np) throw Error(ErrorKind::InvalidInput, "action table does not cover the points");
  for (std::size_t x = 0; x < np; ++x) {
    if (act[x].size() != ng) throw Error(ErrorKind::InvalidInput, "action table row " + points[x]);
    for (std::size_t y : act[x])
      if (y >= np) throw Error(ErrorKind::DanglingId, "action of " + points[x] + " leaves the set");
  }
  const ArrowId e = group.id(0);
  for (std::size_t x = 0; x < np; ++x) {
    if (act[x][e] != x) throw Error(ErrorKind::NotAnAction, "identity moves " + points[x]);
    for (ArrowId g = 0; g < ng; ++g)
      for (ArrowId h = 0; h < ng; ++h)
        if (act[act[x][g]][h] != act[x][group.comp(g, h)])
          throw Error(ErrorKind::NotAnAction, "(" + points[x] + "." + group.arrow_name(g) + ")." +
                                                  group.arrow_name(h) + " != " + points[x] + ".(" +
                                                  group.arrow_name(g) + group.arrow_name(h) + ")");
  }

  GroupoidTables t;
  t.object_names = points;
  const std::size_t n = np * ng;
  auto arrow = [ng](std::size_t x, ArrowId g) { return x * ng + g; };
  t.arrow_names.resize(n);
  t.src.resize(n);
  t.tgt.resize(n);
  t.inverse.resize(n);
  t.comp.assign(n * n, kNone);
  for (std::size_t x = 0; x < np; ++x) {
    for (ArrowId g = 0; g < ng; ++g) {
      ArrowId a = arrow(x, g);
      t.arrow_names[a] = "(" + points[x] + "," + group.arrow_name(g) + ")";
      t.src[a] = x;
      t.tgt[a] = act[x][g];
      t.inverse[a] = arrow(act[x][g], group.inv(g));
      for (ArrowId h = 0; h < ng; ++h) t.comp[a * n + arrow(act[x][g], h)] = arrow(x, group.comp(g, h));
    }
  }
  t.identity.resize(np);
  for (std::size_t x = 0; x < np; ++x) t.identity[x] = arrow(x, e);
  return make_groupoid(std::move(t));
}

StrictFiberProduct fiber_product_strict(const GroupoidFunctor& f, const GroupoidFunctor& h) {
  if (!same_groupoid(f.target, h.target)) throw Error(ErrorKind::MismatchedTarget, "strict fiber product legs differ in target");
  const auto& g1 = *f.source;
  const auto& g2 = *h.source;

  GroupoidTables t;
  std::map<std::pair<ObjectId, ObjectId>, ObjectId> obj_index;
  std::vector<std::pair<ObjectId, ObjectId>> objs;
  for (ObjectId x = 0; x < g1.num_objects(); ++x)
    for (ObjectId y = 0; y < g2.num_objects(); ++y)
      if (f.on_object(x) == h.on_object(y)) {
        obj_index.emplace(std::pair{x, y}, objs.size());
        objs.emplace_back(x, y);
        t.object_names.push_back("(" + g1.object_name(x) + "," + g2.object_name(y) + ")");
      }
  std::map<std::pair<ArrowId, ArrowId>, ArrowId> arr_index;
  std::vector<std::pair<ArrowId, ArrowId>> arrs;
  for (ArrowId a = 0; a < g1.num_arrows(); ++a)
    for (ArrowId b = 0; b < g2.num_arrows(); ++b)
      if (f.on_arrow(a) == h.on_arrow(b)) {
        arr_index.emplace(std::pair{a, b}, arrs.size());
        arrs.emplace_back(a, b);
        t.arrow_names.push_back("(" + g1.arrow_name(a) + "," + g2.arrow_name(b) + ")");
        t.src.push_back(obj_index.at({g1.src(a), g2.src(b)}));
        t.tgt.push_back(obj_index.at({g1.tgt(a), g2.tgt(b)}));
      }
  const std::size_t n = arrs.size();
  t.inverse.resize(n);
  t.comp.assign(n * n, kNone);
  for (ArrowId i = 0; i < n; ++i) {
    auto [a, b] = arrs[i];
    t.inverse[i] = arr_index.at({g1.inv(a), g2.inv(b)});
    for (ArrowId j = 0; j < n; ++j) {
      if (t.tgt[i] != t.src[j]) continue;
      t.comp[i * n + j] = arr_index.at({g1.comp(a, arrs[j].first), g2.comp(b, arrs[j].second)});
    }
  }
  for (auto [x, y] : objs) t.identity.push_back(arr_index.at({g1.id(x), g2.id(y)}));

  StrictFiberProduct out;
  out.groupoid = make_groupoid(std::move(t));
  std::vector<ObjectId> o1, o2;
  for (auto [x, y] : objs) {
    o1.push_back(x);
    o2.push_back(y);
  }
  std::vector<ArrowId> a1, a2;
  for (auto [a, b] : arrs) {
    a1.push_back(a);
    a2.push_back(b);
  }
  out.proj1 = validate_functor(out.groupoid, f.source, std::move(o1), std::move(a1));
  out.proj2 = validate_functor(out.groupoid, h.source, std::move(o2), std::move(a2));
  return out;
}

ObjectId IsoComma::find(std::size_t g, std::size_t h, std::size_t k) const {
  auto it = object_index.find({g, h, k});
  return it == object_index.end() ? kNone : it->second;
}

ArrowId IsoComma::find_arrow(ObjectId source, std::size_t a, std::size_t b) const {
  auto it = arrow_index.find({source, a, b});
  return it == arrow_index.end() ? kNone : it->second;
}

IsoComma fiber_product_2(const GroupoidFunctor& f, const GroupoidFunctor& h) {
  if (!same_groupoid(f.target, h.target)) throw Error(ErrorKind::MismatchedTarget, "2-fiber product legs differ in target");
  const auto& g1 = *f.source;
  const auto& g2 = *h.source;
  const auto& k = *f.target;

  IsoComma out;
  GroupoidTables t;
  for (ObjectId x = 0; x < g1.num_objects(); ++x)
    for (ObjectId y = 0; y < g2.num_objects(); ++y)
      for (ArrowId kk : k.hom(f.on_object(x), h.on_object(y))) {
        out.object_index.emplace(std::array<std::size_t, 3>{x, y, kk}, out.object_triples.size());
        out.object_triples.push_back({x, y, kk});
        t.object_names.push_back("(" + g1.object_name(x) + "," + g2.object_name(y) + "," + k.arrow_name(kk) +
                                 ")");
      }

  for (ObjectId o = 0; o < out.object_triples.size(); ++o) {
    auto [x, y, kk] = out.object_triples[o];
    for (ArrowId a : g1.arrows_from(x)) {
      for (ArrowId b : g2.arrows_from(y)) {
        ArrowId moved = k.comp(k.comp(k.inv(f.on_arrow(a)), kk), h.on_arrow(b));
        ObjectId target = out.find(g1.tgt(a), g2.tgt(b), moved);
        out.arrow_index.emplace(std::array<std::size_t, 3>{o, a, b}, out.arrow_data.size());
        out.arrow_data.push_back({o, a, b});
        t.arrow_names.push_back("(" + g1.arrow_name(a) + "," + g2.arrow_name(b) + ")@" + t.object_names[o]);
        t.src.push_back(o);
        t.tgt.push_back(target);
      }
    }
  }

  const std::size_t n = out.arrow_data.size();
  t.inverse.resize(n);
  t.comp.assign(n * n, kNone);
  std::vector<std::vector<ArrowId>> out_arrows(out.object_triples.size());
  for (ArrowId i = 0; i < n; ++i) out_arrows[t.src[i]].push_back(i);
  for (ArrowId i = 0; i < n; ++i) {
    auto [o, a, b] = out.arrow_data[i];
    t.inverse[i] = out.find_arrow(t.tgt[i], g1.inv(a), g2.inv(b));
    for (ArrowId j : out_arrows[t.tgt[i]]) {
      auto [o2, a2, b2] = out.arrow_data[j];
      t.comp[i * n + j] = out.find_arrow(o, g1.comp(a, a2), g2.comp(b, b2));
    }
  }
  for (ObjectId o = 0; o < out.object_triples.size(); ++o) {
    auto [x, y, kk] = out.object_triples[o];
    t.identity.push_back(out.find_arrow(o, g1.id(x), g2.id(y)));
  }

  out.groupoid = make_groupoid(std::move(t));
  std::vector<ObjectId> o1, o2;
  for (const auto& tr : out.object_triples) {
    o1.push_back(tr[0]);
    o2.push_back(tr[1]);
  }
  std::vector<ArrowId> a1, a2;
  for (const auto& d : out.arrow_data) {
    a1.push_back(d[1]);
    a2.push_back(d[2]);
  }
  out.proj1 = validate_functor(out.groupoid, f.source, std::move(o1), std::move(a1));
  out.proj2 = validate_functor(out.groupoid, h.source, std::move(o2), std::move(a2));
  return out;
}

Verdict weak_equivalence_verdict(const GroupoidFunctor& f) {
  const auto& s = *f.source;
  const auto& t = *f.target;
  for (ObjectId x = 0; x < s.num_objects(); ++x) {
    for (ObjectId y = 0; y < s.num_objects(); ++y) {
      auto src_hom = s.hom(x, y);
      auto tgt_hom = t.hom(f.on_object(x), f.on_object(y));
      std::set<ArrowId> images;
      for (ArrowId a : src_hom) images.insert(f.on_arrow(a));
      if (images.size() != src_hom.size())
        return Verdict::fail("weak_equivalence", "not faithful on Hom(" + s.object_name(x) + "," +
                                                     s.object_name(y) + ")");
      if (images.size() != tgt_hom.size())
        return Verdict::fail("weak_equivalence", "not full on Hom(" + s.object_name(x) + "," + s.object_name(y) +
                                                     "): " + std::to_string(src_hom.size()) + " vs " +
                                                     std::to_string(tgt_hom.size()));
    }
  }
  Components comps = pi0(t);
  std::vector<bool> hit(comps.classes.size(), false);
  for (ObjectId x = 0; x < s.num_objects(); ++x) hit[comps.component_of[f.on_object(x)]] = true;
  for (std::size_t c = 0; c < hit.size(); ++c)
    if (!hit[c])
      return Verdict::fail("weak_equivalence",
                           "not essentially surjective at " + t.object_name(comps.classes[c].front()));
  return Verdict::pass("weak_equivalence");
}

bool is_weak_equivalence(const GroupoidFunctor& f) { return weak_equivalence_verdict(f).ok; }

Components pi0(const FiniteGroupoid& g) {
  detail::UnionFind uf(g.num_objects());
  for (ArrowId a = 0; a < g.num_arrows(); ++a) uf.unite(g.src(a), g.tgt(a));
  Components out;
  out.component_of.assign(g.num_objects(), kNone);
  std::map<std::size_t, std::size_t> root_to_class;
  for (ObjectId x = 0; x < g.num_objects(); ++x) {
    auto [it, fresh] = root_to_class.emplace(uf.find(x), out.classes.size());
    if (fresh) out.classes.emplace_back();
    out.classes[it->second].push_back(x);
    out.component_of[x] = it->second;
  }
  return out;
}

GroupoidHandle vertex_group(const FiniteGroupoid& g, ObjectId x) {
  if (x >= g.num_objects()) throw Error(ErrorKind::UnknownObject, "object index " + std::to_string(x));
  std::vector<ArrowId> loops = g.hom(x, x);
  std::map<ArrowId, std::size_t> local;
  for (std::size_t i = 0; i < loops.size(); ++i) local.emplace(loops[i], i);

  GroupoidTables t;
  t.object_names = {g.object_name(x)};
  const std::size_t n = loops.size();
  t.src.assign(n, 0);
  t.tgt.assign(n, 0);
  t.comp.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    t.arrow_names.push_back(g.arrow_name(loops[i]));
    t.inverse.push_back(local.at(g.inv(loops[i])));
    for (std::size_t j = 0; j < n; ++j) t.comp[i * n + j] = local.at(g.comp(loops[i], loops[j]));
  }
  t.identity = {local.at(g.id(x))};
  return make_groupoid(std::move(t));
}

}  // namespace nervekit
