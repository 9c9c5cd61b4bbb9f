#include "nervekit/kan.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace nervekit {

namespace {

std::string join(const std::vector<std::string>& parts, const char* open, const char* close) {
  std::string s = open;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ",";
    s += parts[i];
  }
  return s + close;
}

std::vector<FinSet> sample_sets() { return {FinSet{}, FinSet{{"a"}}, FinSet{{"a", "b"}}}; }

std::vector<SetMap> all_maps(const FinSet& a, const FinSet& b) {
  std::vector<SetMap> out;
  if (b.size() == 0 && a.size() > 0) return out;
  std::vector<std::size_t> m(a.size(), 0);
  while (true) {
    out.push_back({a, b, m});
    std::size_t i = m.size();
    while (i > 0 && m[i - 1] + 1 == b.size()) m[--i] = 0;
    if (i == 0) break;
    ++m[i - 1];
  }
  return out;
}

bool same_over(const CategoryFunctor& a, const CategoryFunctor& b) {
  return same_category(a.source, b.source) && same_category(a.target, b.target) && a.obj_map == b.obj_map &&
         a.mor_map == b.mor_map;
}

}  // namespace

std::size_t FinSet::index_of(const std::string& e) const {
  auto it = std::find(elements.begin(), elements.end(), e);
  return it == elements.end() ? kNone : static_cast<std::size_t>(it - elements.begin());
}

SetMap identity_map(const FinSet& s) {
  SetMap m{s, s, std::vector<std::size_t>(s.size())};
  for (std::size_t i = 0; i < s.size(); ++i) m.map[i] = i;
  return m;
}

SetMap then(const SetMap& a, const SetMap& b) {
  if (a.tgt != b.src) throw Error(ErrorKind::InvalidInput, "maps do not compose");
  SetMap out{a.src, b.tgt, std::vector<std::size_t>(a.map.size())};
  for (std::size_t i = 0; i < a.map.size(); ++i) out.map[i] = b.map[a.map[i]];
  return out;
}

FinSet SetOp::apply(const FinSet& x) const {
  FinSet out;
  switch (kind) {
    case Kind::Identity:
      return x;
    case Kind::Terminal:
      return FinSet{{"*"}};
    case Kind::ProductWith:
      for (const auto& a : x.elements)
        for (const auto& s : with.elements) out.elements.push_back("(" + a + "," + s + ")");
      return out;
    case Kind::CoproductWith:
      for (const auto& a : x.elements) out.elements.push_back("inl " + a);
      for (const auto& s : with.elements) out.elements.push_back("inr " + s);
      return out;
    case Kind::Power: {
      std::vector<std::size_t> idx(power, 0);
      if (power > 0 && x.size() == 0) return out;
      while (true) {
        std::vector<std::string> parts;
        for (std::size_t i : idx) parts.push_back(x.elements[i]);
        out.elements.push_back(join(parts, "[", "]"));
        std::size_t i = idx.size();
        while (i > 0 && idx[i - 1] + 1 == x.size()) idx[--i] = 0;
        if (i == 0) break;
        ++idx[i - 1];
      }
      return out;
    }
  }
  return out;
}

SetMap SetOp::apply(const SetMap& m) const {
  SetMap out{apply(m.src), apply(m.tgt), {}};
  const std::size_t n = m.src.size(), k = m.tgt.size();
  switch (kind) {
    case Kind::Identity:
      return m;
    case Kind::Terminal:
      out.map = {0};
      break;
    case Kind::ProductWith: {
      const std::size_t s = with.size();
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < s; ++j) out.map.push_back(m.map[i] * s + j);
      break;
    }
    case Kind::CoproductWith:
      for (std::size_t i = 0; i < n; ++i) out.map.push_back(m.map[i]);
      for (std::size_t j = 0; j < with.size(); ++j) out.map.push_back(k + j);
      break;
    case Kind::Power: {
      // Tuples are numbered in base |X| with the first coordinate most significant.
      for (std::size_t t = 0; t < out.src.size(); ++t) {
        std::size_t rest = t, image = 0, weight = 1;
        for (std::size_t c = 0; c < power; ++c) {
          image += m.map[rest % n] * weight;
          rest /= n;
          weight *= k;
        }
        out.map.push_back(image);
      }
      break;
    }
  }
  return out;
}

std::string SetOp::describe() const {
  switch (kind) {
    case Kind::Identity: return "identity";
    case Kind::Terminal: return "terminal";
    case Kind::ProductWith: return "product" + join(with.elements, "{", "}");
    case Kind::CoproductWith: return "coproduct" + join(with.elements, "{", "}");
    case Kind::Power: return "power " + std::to_string(power);
  }
  return {};
}

FinSet apply(const SetWord& w, const FinSet& x) {
  FinSet out = x;
  for (const auto& op : w) out = op.apply(out);
  return out;
}

SetMap apply(const SetWord& w, const SetMap& m) {
  SetMap out = m;
  for (const auto& op : w) out = op.apply(out);
  return out;
}

IndexedCategory make_indexed_category(CategoryHandle base, std::vector<SetWord> pullback) {
  const auto& b = *base;
  if (pullback.size() != b.num_morphisms())
    throw Error(ErrorKind::InvalidInput, "pullback functors do not cover the base");
  IndexedCategory ic{std::move(base), std::move(pullback)};
  auto fail = [&](std::string w) { throw Error(ErrorKind::NotFunctorial, std::move(w)); };
  const auto sets = sample_sets();
  std::vector<SetMap> maps;
  for (const auto& x : sets)
    for (const auto& y : sets)
      for (auto& m : all_maps(x, y)) maps.push_back(std::move(m));

  for (std::size_t x = 0; x < b.num_objects(); ++x) {
    for (const auto& s : sets)
      if (ic.pull(b.id(x), s) != s) fail("pullback along " + b.morphism_name(b.id(x)) + " is not the identity");
    for (const auto& m : maps)
      if (ic.pull(b.id(x), m) != m) fail("pullback along " + b.morphism_name(b.id(x)) + " is not the identity");
  }
  for (MorphismId f = 0; f < b.num_morphisms(); ++f)
    for (MorphismId g : b.morphisms_from(b.tgt(f))) {
      MorphismId fg = b.comp(f, g);
      std::string what = "(" + b.morphism_name(f) + " then " + b.morphism_name(g) + ")^*";
      for (const auto& s : sets)
        if (ic.pull(fg, s) != ic.pull(f, ic.pull(g, s))) fail(what);
      for (const auto& m : maps)
        if (ic.pull(fg, m) != ic.pull(f, ic.pull(g, m))) fail(what);
    }
  return ic;
}

IndexedCategory trivial_indexed_category(CategoryHandle base) {
  std::vector<SetWord> words(base->num_morphisms());
  return make_indexed_category(std::move(base), std::move(words));
}

Verdict lift_verdict(const IndexedCategory& ic, const Lift& p) {
  const auto& e = p.shape();
  const char* name = "lift";
  if (!same_category(p.over.target, ic.base)) return Verdict::fail(name, "lift is over a different base");
  if (p.sets.size() != e.num_objects() || p.maps.size() != e.num_morphisms())
    return Verdict::fail(name, "lift tables do not cover the shape");
  for (MorphismId h = 0; h < e.num_morphisms(); ++h) {
    const SetMap& m = p.maps[h];
    if (m.src != p.sets[e.src(h)] || m.tgt != ic.pull(p.over.mor_map[h], p.sets[e.tgt(h)]) ||
        m.map.size() != m.src.size())
      return Verdict::fail(name, "map over " + e.morphism_name(h) + " has the wrong endpoints");
    for (std::size_t v : m.map)
      if (v >= m.tgt.size()) return Verdict::fail(name, "map over " + e.morphism_name(h) + " leaves its target");
  }
  for (std::size_t x = 0; x < e.num_objects(); ++x)
    if (p.maps[e.id(x)] != identity_map(p.sets[x])) return Verdict::fail(name, "identity of " + e.object_name(x));
  for (MorphismId h = 0; h < e.num_morphisms(); ++h)
    for (MorphismId k : e.morphisms_from(e.tgt(h)))
      if (p.maps[e.comp(h, k)] != then(p.maps[h], ic.pull(p.over.mor_map[h], p.maps[k])))
        return Verdict::fail(name, "composite " + e.morphism_name(h) + " then " + e.morphism_name(k));
  return Verdict::pass(name);
}

void validate_lift(const IndexedCategory& ic, const Lift& p) {
  Verdict v = lift_verdict(ic, p);
  if (!v) throw Error(ErrorKind::NotFunctorial, v.witness);
}

Lift restrict_lift(const CategoryFunctor& f, const Lift& q) {
  Lift out;
  out.over.source = f.source;
  out.over.target = q.over.target;
  const auto& e = *f.source;
  for (std::size_t x = 0; x < e.num_objects(); ++x) {
    out.over.obj_map.push_back(q.over.obj_map[f.obj_map[x]]);
    out.sets.push_back(q.sets[f.obj_map[x]]);
  }
  for (MorphismId h = 0; h < e.num_morphisms(); ++h) {
    out.over.mor_map.push_back(q.over.mor_map[f.mor_map[h]]);
    out.maps.push_back(q.maps[f.mor_map[h]]);
  }
  return out;
}

CommaCategory comma(std::size_t d, const CategoryFunctor& f) {
  const auto& e = *f.source;
  const auto& dc = *f.target;
  if (d >= dc.num_objects()) throw Error(ErrorKind::UnknownObject, "object " + std::to_string(d));
  CommaCategory out;
  out.d = d;
  std::map<std::pair<std::size_t, MorphismId>, std::size_t> index;
  CategoryTables t;
  for (std::size_t x = 0; x < e.num_objects(); ++x)
    for (MorphismId a : dc.hom(d, f.obj_map[x])) {
      index[{x, a}] = out.object_e.size();
      out.object_e.push_back(x);
      out.object_alpha.push_back(a);
      t.object_names.push_back("(" + e.object_name(x) + "," + dc.morphism_name(a) + ")");
    }
  const std::size_t n = out.object_e.size();
  t.identity.assign(n, kNone);
  std::map<std::pair<std::size_t, MorphismId>, MorphismId> mor_index;  // (source object, h)
  for (std::size_t o = 0; o < n; ++o)
    for (MorphismId h : e.morphisms_from(out.object_e[o])) {
      MorphismId a2 = dc.comp(out.object_alpha[o], f.mor_map[h]);
      std::size_t o2 = index.at({e.tgt(h), a2});
      mor_index[{o, h}] = out.morphism_h.size();
      if (h == e.id(out.object_e[o])) t.identity[o] = out.morphism_h.size();
      out.morphism_h.push_back(h);
      t.morphism_names.push_back(e.morphism_name(h) + ":" + t.object_names[o] + "->" + t.object_names[o2]);
      t.src.push_back(o);
      t.tgt.push_back(o2);
    }
  const std::size_t m = out.morphism_h.size();
  t.comp.assign(m * m, kNone);
  for (MorphismId u = 0; u < m; ++u)
    for (MorphismId v = 0; v < m; ++v)
      if (t.tgt[u] == t.src[v]) t.comp[u * m + v] = mor_index.at({t.src[u], e.comp(out.morphism_h[u], out.morphism_h[v])});
  out.category = make_category(std::move(t));
  return out;
}

SetMap FinLimit::projection(const SetDiagram& d, std::size_t i) const {
  SetMap m{apex, d.sets[i], {}};
  for (const auto& c : cones) m.map.push_back(c[i]);
  return m;
}

FinLimit finset_limit(const SetDiagram& d) {
  const auto& g = *d.shape;
  const std::size_t n = g.num_objects();
  FinLimit out;
  std::vector<std::size_t> x(n, 0);
  // Morphisms whose later endpoint is i, checked once both ends are fixed.
  std::vector<std::vector<MorphismId>> closing(n);
  for (MorphismId h = 0; h < g.num_morphisms(); ++h) closing[std::max(g.src(h), g.tgt(h))].push_back(h);

  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == n) {
      out.cones.push_back(x);
      std::vector<std::string> parts;
      for (std::size_t j = 0; j < n; ++j) parts.push_back(d.sets[j].elements[x[j]]);
      out.apex.elements.push_back(join(parts, "(", ")"));
      return;
    }
    for (std::size_t v = 0; v < d.sets[i].size(); ++v) {
      x[i] = v;
      bool ok = true;
      for (MorphismId h : closing[i])
        if (d.maps[h].map[x[g.src(h)]] != x[g.tgt(h)]) {
          ok = false;
          break;
        }
      if (ok) rec(i + 1);
    }
  };
  rec(0);
  return out;
}

bool is_limit(const SetDiagram& d, const FinSet& candidate, const std::vector<SetMap>& projections) {
  const auto& g = *d.shape;
  if (projections.size() != g.num_objects()) return false;
  for (std::size_t i = 0; i < projections.size(); ++i)
    if (projections[i].src != candidate || projections[i].tgt != d.sets[i] ||
        projections[i].map.size() != candidate.size())
      return false;
  FinLimit lim = finset_limit(d);
  std::vector<std::vector<std::size_t>> tuples;
  for (std::size_t y = 0; y < candidate.size(); ++y) {
    std::vector<std::size_t> t;
    for (const auto& p : projections) t.push_back(p.map[y]);
    tuples.push_back(std::move(t));
  }
  auto sorted = tuples;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  return sorted == lim.cones;
}

Verdict is_global_limit(const IndexedCategory& ic, std::size_t b, const SetDiagram& d, const FinSet& candidate,
                        const std::vector<SetMap>& projections) {
  const auto& base = *ic.base;
  if (!is_limit(d, candidate, projections)) throw Error(ErrorKind::NotALimit, "over " + base.object_name(b));
  for (MorphismId f : base.morphisms_into(b)) {
    SetDiagram pulled{d.shape, {}, {}};
    for (const auto& s : d.sets) pulled.sets.push_back(ic.pull(f, s));
    for (const auto& m : d.maps) pulled.maps.push_back(ic.pull(f, m));
    std::vector<SetMap> proj;
    for (const auto& p : projections) proj.push_back(ic.pull(f, p));
    if (!is_limit(pulled, ic.pull(f, candidate), proj)) return Verdict::fail("global limit", base.morphism_name(f));
  }
  return Verdict::pass("global limit");
}

SetMap RightKan::counit(const CategoryFunctor& f, std::size_t e) const {
  const std::size_t d = f.obj_map[e];
  const CommaCategory& c = commas[d];
  const MorphismId id = f.target->id(d);
  for (std::size_t o = 0; o < c.object_e.size(); ++o)
    if (c.object_e[o] == e && c.object_alpha[o] == id) return limits[d].projection(psi[d], o);
  throw Error(ErrorKind::InvalidInput, "no object (e, id) in the comma category");
}

RightKan right_kan(const IndexedCategory& ic, const CategoryFunctor& p, const CategoryFunctor& f, const Lift& lift) {
  const auto& dc = *p.source;
  if (!same_category(f.target, p.source) || !same_category(lift.over.source, f.source) ||
      !same_category(p.target, ic.base))
    throw Error(ErrorKind::InvalidInput, "functors do not line up");
  for (std::size_t x = 0; x < f.source->num_objects(); ++x)
    if (lift.over.obj_map[x] != p.obj_map[f.obj_map[x]])
      throw Error(ErrorKind::InvalidInput, "lift is not over F then p");
  for (MorphismId h = 0; h < f.source->num_morphisms(); ++h)
    if (lift.over.mor_map[h] != p.mor_map[f.mor_map[h]])
      throw Error(ErrorKind::InvalidInput, "lift is not over F then p");
  validate_lift(ic, lift);

  RightKan rk;
  rk.lift.over = p;
  for (std::size_t d = 0; d < dc.num_objects(); ++d) {
    CommaCategory c = comma(d, f);
    SetDiagram psi{c.category, {}, {}};
    for (std::size_t o = 0; o < c.object_e.size(); ++o)
      psi.sets.push_back(ic.pull(p.mor_map[c.object_alpha[o]], lift.sets[c.object_e[o]]));
    for (MorphismId u = 0; u < c.morphism_h.size(); ++u) {
      SetMap m = ic.pull(p.mor_map[c.object_alpha[c.category->src(u)]], lift.maps[c.morphism_h[u]]);
      if (m.tgt != psi.sets[c.category->tgt(u)]) throw Error(ErrorKind::NotFunctorial, "indexed category is not strict");
      psi.maps.push_back(std::move(m));
    }
    FinLimit lim = finset_limit(psi);
    std::vector<SetMap> proj;
    for (std::size_t o = 0; o < c.object_e.size(); ++o) proj.push_back(lim.projection(psi, o));
    Verdict global = is_global_limit(ic, p.obj_map[d], psi, lim.apex, proj);
    if (!global) throw Error(ErrorKind::NotFComplete, dc.object_name(d) + " along " + global.witness);
    rk.lift.sets.push_back(lim.apex);
    rk.commas.push_back(std::move(c));
    rk.psi.push_back(std::move(psi));
    rk.limits.push_back(std::move(lim));
  }

  // A cone over (d | F) restricts along (e, a') |-> (e, delta then a') to a
  // cone of delta^* psi_d', which comes from a unique z in delta^* lim psi_d'.
  for (MorphismId delta = 0; delta < dc.num_morphisms(); ++delta) {
    const std::size_t d = dc.src(delta), d2 = dc.tgt(delta);
    const MorphismId base = p.mor_map[delta];
    const CommaCategory& c = rk.commas[d];
    const CommaCategory& c2 = rk.commas[d2];
    std::map<std::pair<std::size_t, MorphismId>, std::size_t> index;
    for (std::size_t o = 0; o < c.object_e.size(); ++o) index[{c.object_e[o], c.object_alpha[o]}] = o;
    std::vector<std::size_t> restrict_to(c2.object_e.size());
    std::vector<SetMap> pulled;
    for (std::size_t o2 = 0; o2 < c2.object_e.size(); ++o2) {
      restrict_to[o2] = index.at({c2.object_e[o2], dc.comp(delta, c2.object_alpha[o2])});
      pulled.push_back(ic.pull(base, rk.limits[d2].projection(rk.psi[d2], o2)));
    }
    SetMap m{rk.lift.sets[d], ic.pull(base, rk.lift.sets[d2]), {}};
    for (const auto& cone : rk.limits[d].cones) {
      std::size_t found = kNone, count = 0;
      for (std::size_t z = 0; z < m.tgt.size(); ++z) {
        bool match = true;
        for (std::size_t o2 = 0; o2 < c2.object_e.size() && match; ++o2)
          match = pulled[o2].map[z] == cone[restrict_to[o2]];
        if (match) found = z, ++count;
      }
      if (count != 1) throw Error(ErrorKind::NotFComplete, dc.object_name(d2) + " along " + dc.morphism_name(delta));
      m.map.push_back(found);
    }
    rk.lift.maps.push_back(std::move(m));
  }
  return rk;
}

std::vector<LiftMorphism> lift_morphisms(const IndexedCategory& ic, const Lift& from, const Lift& to,
                                         std::size_t budget) {
  if (!same_over(from.over, to.over)) throw Error(ErrorKind::InvalidInput, "lifts over different functors");
  const auto& e = from.shape();
  const std::size_t n = e.num_objects();
  std::vector<std::vector<MorphismId>> closing(n);
  for (MorphismId h = 0; h < e.num_morphisms(); ++h) closing[std::max(e.src(h), e.tgt(h))].push_back(h);

  std::vector<LiftMorphism> out;
  LiftMorphism tau(n);
  std::size_t nodes = 0;
  auto natural = [&](MorphismId h) {
    // from.maps[h] then h^* tau_tgt == tau_src then to.maps[h]
    SetMap pulled = ic.pull(from.over.mor_map[h], SetMap{from.sets[e.tgt(h)], to.sets[e.tgt(h)], tau[e.tgt(h)]});
    const auto& fm = from.maps[h].map;
    const auto& tm = to.maps[h].map;
    for (std::size_t x = 0; x < fm.size(); ++x)
      if (pulled.map[fm[x]] != tm[tau[e.src(h)][x]]) return false;
    return true;
  };
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (++nodes > budget) throw Error(ErrorKind::BudgetExceeded, "lift morphism search");
    if (i == n) {
      out.push_back(tau);
      return;
    }
    for (const auto& m : all_maps(from.sets[i], to.sets[i])) {
      tau[i] = m.map;
      bool ok = true;
      for (MorphismId h : closing[i])
        if (!natural(h)) {
          ok = false;
          break;
        }
      if (ok) rec(i + 1);
    }
  };
  rec(0);
  return out;
}

AdjunctionReport adjunction_check(const IndexedCategory& ic, const CategoryFunctor& f, const Lift& p, const Lift& q,
                                  const RightKan& rk) {
  AdjunctionReport rep;
  const Lift fq = restrict_lift(f, q);
  auto left = lift_morphisms(ic, fq, p);
  auto right = lift_morphisms(ic, q, rk.lift);
  rep.left_size = left.size();
  rep.right_size = right.size();
  std::map<LiftMorphism, std::size_t> left_index;
  for (std::size_t i = 0; i < left.size(); ++i) left_index.emplace(left[i], i);

  const auto& e = *f.source;
  std::vector<SetMap> counits;
  for (std::size_t x = 0; x < e.num_objects(); ++x) counits.push_back(rk.counit(f, x));
  std::vector<std::size_t> hits(left.size(), 0);
  for (std::size_t k = 0; k < right.size(); ++k) {
    LiftMorphism image(e.num_objects());
    for (std::size_t x = 0; x < e.num_objects(); ++x) {
      const auto& phi = right[k][f.obj_map[x]];
      if (counits[x].src.size() != rk.lift.sets[f.obj_map[x]].size()) {
        rep.verdict = Verdict::fail("adjunction", "BijectionFailure: counit at " + e.object_name(x) + " is not total");
        return rep;
      }
      for (std::size_t v : phi) image[x].push_back(counits[x].map[v]);
    }
    auto it = left_index.find(image);
    if (it == left_index.end()) {
      rep.verdict = Verdict::fail("adjunction", "BijectionFailure: image of morphism " + std::to_string(k) +
                                                    " is not a morphism F^*Q -> P");
      return rep;
    }
    ++hits[it->second];
  }
  for (std::size_t i = 0; i < hits.size(); ++i) {
    if (hits[i] > 1) {
      rep.verdict = Verdict::fail("adjunction", "BijectionFailure: morphism " + std::to_string(i) + " of F^*Q -> P hit " +
                                                    std::to_string(hits[i]) + " times");
      return rep;
    }
    if (hits[i] == 0) {
      rep.verdict = Verdict::fail("adjunction", "BijectionFailure: morphism " + std::to_string(i) + " of F^*Q -> P missed");
      return rep;
    }
  }
  rep.verdict = Verdict::pass("adjunction");
  return rep;
}

}  // namespace nervekit
