#include "support/kan_instances.hpp"

#include <stdexcept>

using namespace nervekit;

namespace support {

namespace {

CategoryFunctor functor_by_names(CategoryHandle s, CategoryHandle t, const std::map<std::string, std::string>& objects,
                                 const std::map<std::string, std::string>& morphisms) {
  std::vector<std::size_t> obj;
  for (std::size_t x = 0; x < s->num_objects(); ++x) obj.push_back(*t->find_object(objects.at(s->object_name(x))));
  std::vector<MorphismId> mor;
  for (MorphismId h = 0; h < s->num_morphisms(); ++h) {
    auto it = morphisms.find(s->morphism_name(h));
    mor.push_back(it != morphisms.end() ? *t->find_morphism(it->second) : t->id(obj[s->src(h)]));
  }
  return validate_category_functor(std::move(s), std::move(t), std::move(obj), std::move(mor));
}

CategoryHandle chain2() { return poset_category({"0", "1"}, {{"0", "1"}}); }
CategoryHandle vee() { return poset_category({"t", "a", "b"}, {{"t", "a"}, {"t", "b"}}); }

SetWord power2() { return {SetOp{SetOp::Kind::Power, {}, 2}}; }

}  // namespace

Lift make_lift(const IndexedCategory& ic, const CategoryFunctor& over,
               const std::map<std::string, std::vector<std::string>>& sets,
               const std::map<std::string, std::vector<std::size_t>>& maps) {
  const auto& e = *over.source;
  Lift p;
  p.over = over;
  for (std::size_t x = 0; x < e.num_objects(); ++x) p.sets.push_back(FinSet{sets.at(e.object_name(x))});
  for (MorphismId h = 0; h < e.num_morphisms(); ++h) {
    FinSet tgt = ic.pull(over.mor_map[h], p.sets[e.tgt(h)]);
    if (e.is_identity(h)) {
      p.maps.push_back(identity_map(p.sets[e.src(h)]));
      continue;
    }
    auto it = maps.find(e.morphism_name(h));
    if (it == maps.end()) throw std::invalid_argument("no map for " + e.morphism_name(h));
    p.maps.push_back(SetMap{p.sets[e.src(h)], tgt, it->second});
  }
  validate_lift(ic, p);
  return p;
}

KanInstance kan_identity_power() {
  auto d = chain2();
  IndexedCategory ic = make_indexed_category(d, {{}, power2(), {}});
  auto id = identity_functor(d);
  KanInstance k{"identity-power", ic, id, id, {}, {}, true};
  // P(0<1) : {u, v} -> {x, y}^2 sends u to [x,y] and v to [y,x].
  k.lift = make_lift(ic, id, {{"0", {"u", "v"}}, {"1", {"x", "y"}}}, {{"0<1", {1, 2}}});
  k.qs.push_back(make_lift(ic, id, {{"0", {"q"}}, {"1", {"q0", "q1"}}}, {{"0<1", {1}}}));
  k.qs.push_back(make_lift(ic, id, {{"0", {"q0", "q1"}}, {"1", {"r0", "r1"}}}, {{"0<1", {1, 2}}}));
  return k;
}

KanInstance kan_discrete_product() {
  auto d = vee();
  auto e = discrete_category({"a", "b"});
  IndexedCategory ic = trivial_indexed_category(d);
  auto p = identity_functor(d);
  auto f = functor_by_names(e, d, {{"a", "a"}, {"b", "b"}}, {});
  KanInstance k{"discrete-product", ic, p, f, {}, {}, true};
  k.lift = make_lift(ic, functor_by_names(e, d, {{"a", "a"}, {"b", "b"}}, {}),
                     {{"a", {"a0", "a1"}}, {"b", {"b0", "b1", "b2"}}}, {});
  k.qs.push_back(make_lift(ic, p, {{"t", {"s0", "s1"}}, {"a", {"r"}}, {"b", {"r0", "r1"}}},
                           {{"t<a", {0, 0}}, {"t<b", {0, 1}}}));
  k.qs.push_back(make_lift(ic, p, {{"t", {"s"}}, {"a", {"r0", "r1"}}, {"b", {"r"}}}, {{"t<a", {1}}, {"t<b", {0}}}));
  return k;
}

KanInstance kan_chain_inclusion() {
  auto d = chain2();
  auto e = discrete_category({"1"});
  IndexedCategory ic = make_indexed_category(d, {{}, power2(), {}});
  auto p = identity_functor(d);
  auto f = functor_by_names(e, d, {{"1", "1"}}, {});
  KanInstance k{"chain-inclusion", ic, p, f, {}, {}, true};
  k.lift = make_lift(ic, f, {{"1", {"x", "y"}}}, {});
  k.qs.push_back(make_lift(ic, p, {{"0", {"q"}}, {"1", {"q0", "q1"}}}, {{"0<1", {1}}}));
  k.qs.push_back(make_lift(ic, p, {{"0", {"q0", "q1", "q2"}}, {"1", {"r0", "r1"}}}, {{"0<1", {0, 3, 1}}}));
  return k;
}

KanInstance kan_negative_global() {
  auto base = chain2();
  auto d = vee();
  auto e = discrete_category({"a", "b"});
  SetWord twice{SetOp{SetOp::Kind::ProductWith, FinSet{{"s0", "s1"}}, 0}};
  IndexedCategory ic = make_indexed_category(base, {{}, twice, {}});
  auto p = functor_by_names(d, base, {{"t", "1"}, {"a", "1"}, {"b", "1"}}, {});
  auto f = functor_by_names(e, d, {{"a", "a"}, {"b", "b"}}, {});
  auto q = functor_by_names(e, base, {{"a", "1"}, {"b", "1"}}, {});
  KanInstance k{"negative-global", ic, p, f, {}, {}, false};
  k.lift = make_lift(ic, q, {{"a", {"a0", "a1"}}, {"b", {"b0"}}}, {});
  return k;
}

std::vector<KanInstance> kan_zoo() {
  return {kan_identity_power(), kan_discrete_product(), kan_chain_inclusion(), kan_negative_global()};
}

}  // namespace support
