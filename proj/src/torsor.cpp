#include "nervekit/torsor.hpp"

#include <algorithm>
#include <set>

#include "detail/union_find.hpp"

namespace nervekit {

CoveredSpace make_cover(std::vector<std::string> points,
                        const std::vector<std::pair<std::string, std::vector<std::string>>>& sets) {
  CoveredSpace c;
  std::map<std::string, std::size_t> where;
  for (std::size_t w = 0; w < points.size(); ++w)
    if (!where.emplace(points[w], w).second) throw Error(ErrorKind::InvalidInput, "duplicate point " + points[w]);
  c.points = std::move(points);
  std::set<std::string> names;
  for (const auto& [name, members] : sets) {
    if (!names.insert(name).second) throw Error(ErrorKind::InvalidInput, "duplicate cover index " + name);
    c.index_names.push_back(name);
    std::vector<char> row(c.points.size(), 0);
    for (const auto& m : members) {
      auto it = where.find(m);
      if (it == where.end()) throw Error(ErrorKind::InvalidInput, "cover " + name + " names unknown point " + m);
      row[it->second] = 1;
    }
    c.member.push_back(std::move(row));
  }
  for (std::size_t w = 0; w < c.points.size(); ++w) {
    bool covered = false;
    for (const auto& row : c.member) covered = covered || row[w];
    if (!covered) throw Error(ErrorKind::InvalidInput, "point " + c.points[w] + " is not covered");
  }
  return c;
}

Cocycle Cocycle::blank(GroupoidHandle target, CoveredSpace cover) {
  Cocycle c;
  const std::size_t n = cover.num_sets(), w = cover.num_points();
  c.target = std::move(target);
  c.cover = std::move(cover);
  c.a.assign(n, std::vector<ObjectId>(w, kNone));
  c.gamma.assign(n, std::vector<std::vector<ArrowId>>(n, std::vector<ArrowId>(w, kNone)));
  return c;
}

namespace {

std::string at(const CoveredSpace& c, std::size_t w, std::initializer_list<std::size_t> idx) {
  std::string out = "(" + c.points[w];
  for (std::size_t i : idx) out += "," + c.index_names[i];
  return out + ")";
}

void check_cocycle(const Cocycle& c) {
  const FiniteGroupoid& g = *c.target;
  const CoveredSpace& cov = c.cover;
  const std::size_t n = cov.num_sets();
  for (std::size_t w = 0; w < cov.num_points(); ++w)
    for (std::size_t i = 0; i < n; ++i) {
      if (!cov.contains(i, w)) continue;
      if (c.a[i][w] == kNone || c.a[i][w] >= g.num_objects())
        throw Error(ErrorKind::InvalidInput, "a_" + cov.index_names[i] + " undefined at " + cov.points[w]);
      for (std::size_t j = 0; j < n; ++j) {
        if (!cov.contains(j, w)) continue;
        ArrowId x = c.gamma[i][j][w];
        if (x == kNone || x >= g.num_arrows())
          throw Error(ErrorKind::InvalidInput, "gamma undefined at " + at(cov, w, {i, j}));
      }
    }
  for (std::size_t w = 0; w < cov.num_points(); ++w)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (!cov.contains(i, w) || !cov.contains(j, w)) continue;
        ArrowId x = c.gamma[i][j][w];
        if (g.src(x) != c.a[i][w] || g.tgt(x) != c.a[j][w]) throw Error(ErrorKind::C1Violation, at(cov, w, {i, j}));
      }
  for (std::size_t w = 0; w < cov.num_points(); ++w)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          if (!cov.contains(i, w) || !cov.contains(j, w) || !cov.contains(k, w)) continue;
          if (g.comp(c.gamma[i][j][w], c.gamma[j][k][w]) != c.gamma[i][k][w])
            throw Error(ErrorKind::C2Violation, at(cov, w, {i, j, k}));
        }
}

}  // namespace

Cocycle validate_cocycle(Cocycle c) {
  if (!c.target) throw Error(ErrorKind::InvalidInput, "cocycle without target groupoid");
  check_cocycle(c);
  return c;
}

Verdict cocycle_verdict(const Cocycle& c) {
  try {
    check_cocycle(c);
  } catch (const Error& e) {
    return Verdict::fail("cocycle", std::string(kind_name(e.kind())) + " at " + e.witness());
  }
  return Verdict::pass("cocycle");
}

std::vector<std::size_t> Torsor::fiber(std::size_t w) const {
  std::vector<std::size_t> out;
  for (std::size_t u = 0; u < size(); ++u)
    if (p[u] == w) out.push_back(u);
  return out;
}

std::vector<Verdict> torsor_verdicts(const Torsor& t) {
  const FiniteGroupoid& g = *t.target;
  std::vector<Verdict> out;

  Verdict sections = Verdict::pass("local sections");
  for (std::size_t w = 0; w < t.cover.num_points() && sections.ok; ++w) {
    bool any = false;
    for (std::size_t i = 0; i < t.cover.num_sets(); ++i) {
      if (!t.cover.contains(i, w)) continue;
      std::size_t s = t.sigma[i][w];
      if (s == kNone || s >= t.size() || t.p[s] != w) {
        sections = Verdict::fail(sections.name, "p(sigma_" + t.cover.index_names[i] + "(" + t.cover.points[w] + ")) != " + t.cover.points[w]);
        break;
      }
      any = true;
    }
    if (sections.ok && !any) sections = Verdict::fail(sections.name, "no section at " + t.cover.points[w]);
  }
  out.push_back(sections);

  auto name = [&](std::size_t u) { return t.elements[u]; };
  Verdict ends = Verdict::pass("delta endpoints");
  Verdict unit = Verdict::pass("delta unit");
  Verdict comp = Verdict::pass("delta composition");
  Verdict cart = Verdict::pass("cartesian");
  for (std::size_t w = 0; w < t.cover.num_points(); ++w) {
    auto fib = t.fiber(w);
    for (std::size_t u : fib) {
      if (ends.ok)
        for (std::size_t v : fib) {
          ArrowId d = t.delta[u][v];
          if (d == kNone || g.src(d) != t.f[u] || g.tgt(d) != t.f[v]) {
            ends = Verdict::fail(ends.name, "(" + name(u) + "," + name(v) + ")");
            break;
          }
        }
      if (!ends.ok) continue;
      if (unit.ok && t.delta[u][u] != g.id(t.f[u])) unit = Verdict::fail(unit.name, name(u));
      if (comp.ok)
        for (std::size_t v : fib)
          for (std::size_t x : fib)
            if (comp.ok && g.comp(t.delta[u][v], t.delta[v][x]) != t.delta[u][x])
              comp = Verdict::fail(comp.name, "(" + name(u) + "," + name(v) + "," + name(x) + ")");
      if (cart.ok)
        for (ArrowId rho : g.arrows_from(t.f[u])) {
          std::size_t hits = 0;
          for (std::size_t v : fib) hits += t.delta[u][v] == rho ? 1 : 0;
          if (hits != 1) {
            cart = Verdict::fail(cart.name, name(u) + " has " + std::to_string(hits) + " partners along " + g.arrow_name(rho));
            break;
          }
        }
    }
  }
  for (std::size_t u = 0; u < t.size() && ends.ok; ++u)
    for (std::size_t v = 0; v < t.size(); ++v)
      if (t.p[u] != t.p[v] && t.delta[u][v] != kNone) {
        ends = Verdict::fail(ends.name, "defined across fibers at (" + name(u) + "," + name(v) + ")");
        break;
      }
  out.push_back(ends);
  out.push_back(unit);
  out.push_back(comp);
  out.push_back(cart);
  return out;
}

void validate_torsor(const Torsor& t) {
  for (const auto& v : torsor_verdicts(t))
    if (!v.ok) throw Error(ErrorKind::TorsorViolation, v.name + ": " + v.witness);
}

Torsor cocycle_to_torsor(const Cocycle& c) {
  const FiniteGroupoid& g = *c.target;
  const CoveredSpace& cov = c.cover;
  // chart points in (w, i, arrow) order
  std::vector<std::array<std::size_t, 3>> charts;
  std::map<std::array<std::size_t, 3>, std::size_t> chart_index;
  for (std::size_t w = 0; w < cov.num_points(); ++w)
    for (std::size_t i = 0; i < cov.num_sets(); ++i) {
      if (!cov.contains(i, w)) continue;
      for (ArrowId a : g.arrows_from(c.a[i][w])) {
        chart_index[{i, w, a}] = charts.size();
        charts.push_back({w, i, a});
      }
    }
  detail::UnionFind uf(charts.size());
  for (std::size_t x = 0; x < charts.size(); ++x)
    for (std::size_t y = x + 1; y < charts.size(); ++y) {
      const auto [w, i, ai] = charts[x];
      const auto [w2, j, aj] = charts[y];
      if (w == w2 && g.comp(c.gamma[i][j][w], aj) == ai) uf.unite(x, y);
    }

  Torsor t;
  t.target = c.target;
  t.cover = cov;
  std::map<std::size_t, std::size_t> root_to_element;
  std::vector<std::size_t> element_of(charts.size());
  for (std::size_t x = 0; x < charts.size(); ++x) {
    auto [it, fresh] = root_to_element.emplace(uf.find(x), t.elements.size());
    if (fresh) {
      const auto [w, i, a] = charts[x];
      t.elements.push_back("[" + cov.points[w] + "," + cov.index_names[i] + ":" + g.arrow_name(a) + "]");
      t.p.push_back(w);
      t.f.push_back(g.tgt(a));
    }
    element_of[x] = it->second;
  }
  for (const auto& [key, x] : chart_index) t.chart_points[key] = element_of[x];

  // delta inside the least chart containing the fiber's point
  t.delta.assign(t.size(), std::vector<ArrowId>(t.size(), kNone));
  for (std::size_t w = 0; w < cov.num_points(); ++w) {
    std::size_t chart = 0;
    while (!cov.contains(chart, w)) ++chart;
    std::map<std::size_t, ArrowId> in_chart;
    for (ArrowId a : g.arrows_from(c.a[chart][w])) in_chart[t.chart_points.at({chart, w, a})] = a;
    for (const auto& [u, a] : in_chart)
      for (const auto& [v, b] : in_chart) t.delta[u][v] = g.comp(g.inv(a), b);
  }
  t.sigma.assign(cov.num_sets(), std::vector<std::size_t>(cov.num_points(), kNone));
  for (std::size_t i = 0; i < cov.num_sets(); ++i)
    for (std::size_t w = 0; w < cov.num_points(); ++w)
      if (cov.contains(i, w)) t.sigma[i][w] = t.chart_points.at({i, w, g.id(c.a[i][w])});
  return t;
}

Cocycle torsor_to_cocycle(const Torsor& t) {
  Cocycle c = Cocycle::blank(t.target, t.cover);
  const CoveredSpace& cov = t.cover;
  for (std::size_t i = 0; i < cov.num_sets(); ++i)
    for (std::size_t w = 0; w < cov.num_points(); ++w) {
      if (!cov.contains(i, w)) continue;
      c.a[i][w] = t.f[t.sigma[i][w]];
      for (std::size_t j = 0; j < cov.num_sets(); ++j)
        if (cov.contains(j, w)) c.gamma[i][j][w] = t.delta[t.sigma[i][w]][t.sigma[j][w]];
    }
  return validate_cocycle(std::move(c));
}

namespace {

void require_same_base(const CoveredSpace& a, const CoveredSpace& b) {
  if (a.points != b.points) throw Error(ErrorKind::InvalidInput, "cocycles live over different bases");
}

}  // namespace

Verdict check_cocycle_morphism(const Cocycle& c, const Cocycle& c2, const CocycleMorphism& d) {
  require_same_base(c.cover, c2.cover);
  const FiniteGroupoid& g = *c.target;
  const CoveredSpace& u = c.cover;
  const CoveredSpace& v = c2.cover;
  auto where = [&](std::size_t w, std::size_t i, std::size_t k) {
    return "(" + u.points[w] + "," + u.index_names[i] + "," + v.index_names[k] + ")";
  };
  if (!same_groupoid(c.target, c2.target)) return Verdict::fail("morphism", "different target groupoids");
  if (d.delta.size() != u.num_sets()) return Verdict::fail("morphism", "wrong number of source indices");
  for (std::size_t w = 0; w < u.num_points(); ++w)
    for (std::size_t i = 0; i < u.num_sets(); ++i) {
      if (!u.contains(i, w)) continue;
      for (std::size_t k = 0; k < v.num_sets(); ++k) {
        if (!v.contains(k, w)) continue;
        ArrowId x = d.delta[i][k][w];
        if (x == kNone || x >= g.num_arrows() || g.src(x) != c.a[i][w] || g.tgt(x) != c2.a[k][w])
          return Verdict::fail("M1", where(w, i, k));
      }
    }
  for (std::size_t w = 0; w < u.num_points(); ++w)
    for (std::size_t i = 0; i < u.num_sets(); ++i) {
      if (!u.contains(i, w)) continue;
      for (std::size_t k = 0; k < v.num_sets(); ++k) {
        if (!v.contains(k, w)) continue;
        for (std::size_t l = 0; l < v.num_sets(); ++l)
          if (v.contains(l, w) && g.comp(d.delta[i][k][w], c2.gamma[k][l][w]) != d.delta[i][l][w])
            return Verdict::fail("M2", where(w, i, k) + " then " + v.index_names[l]);
        for (std::size_t j = 0; j < u.num_sets(); ++j)
          if (u.contains(j, w) && g.comp(c.gamma[j][i][w], d.delta[i][k][w]) != d.delta[j][k][w])
            return Verdict::fail("M2", u.index_names[j] + " then " + where(w, i, k));
      }
    }
  return Verdict::pass("morphism");
}

CocycleMorphism identity_morphism(const Cocycle& c) { return CocycleMorphism{c.gamma}; }

CocycleMorphism roundtrip_morphism(const Torsor& t) {
  const CoveredSpace& cov = t.cover;
  CocycleMorphism d;
  d.delta.assign(cov.num_sets(), std::vector<std::vector<ArrowId>>(cov.num_sets(), std::vector<ArrowId>(cov.num_points(), kNone)));
  for (std::size_t i = 0; i < cov.num_sets(); ++i)
    for (std::size_t k = 0; k < cov.num_sets(); ++k)
      for (std::size_t w = 0; w < cov.num_points(); ++w)
        if (cov.contains(i, w) && cov.contains(k, w)) d.delta[i][k][w] = t.delta[t.sigma[i][w]][t.sigma[k][w]];
  return d;
}

std::optional<CocycleMorphism> find_cocycle_morphism(const Cocycle& c, const Cocycle& c2, std::size_t budget) {
  require_same_base(c.cover, c2.cover);
  if (!same_groupoid(c.target, c2.target)) return std::nullopt;
  const FiniteGroupoid& g = *c.target;
  const CoveredSpace& u = c.cover;
  const CoveredSpace& v = c2.cover;
  CocycleMorphism d;
  d.delta.assign(u.num_sets(), std::vector<std::vector<ArrowId>>(v.num_sets(), std::vector<ArrowId>(u.num_points(), kNone)));
  std::size_t nodes = 0;

  for (std::size_t w = 0; w < u.num_points(); ++w) {
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t i = 0; i < u.num_sets(); ++i)
      for (std::size_t k = 0; k < v.num_sets(); ++k)
        if (u.contains(i, w) && v.contains(k, w)) slots.emplace_back(i, k);

    // consistency of the assigned prefix with M2
    auto consistent = [&](std::size_t upto) {
      for (std::size_t s = 0; s <= upto; ++s) {
        auto [i, k] = slots[s];
        for (std::size_t t = 0; t <= upto; ++t) {
          auto [i2, l] = slots[t];
          if (i2 == i && g.comp(d.delta[i][k][w], c2.gamma[k][l][w]) != d.delta[i][l][w]) return false;
          if (l == k && g.comp(c.gamma[i2][i][w], d.delta[i][k][w]) != d.delta[i2][k][w]) return false;
        }
      }
      return true;
    };
    auto search = [&](auto&& self, std::size_t s) -> bool {
      if (s == slots.size()) return true;
      auto [i, k] = slots[s];
      for (ArrowId x : g.hom(c.a[i][w], c2.a[k][w])) {
        if (++nodes > budget) throw Error(ErrorKind::BudgetExceeded, "cocycle morphism search at " + u.points[w]);
        d.delta[i][k][w] = x;
        if (consistent(s) && self(self, s + 1)) return true;
      }
      d.delta[i][k][w] = kNone;
      return false;
    };
    if (!search(search, 0)) return std::nullopt;
  }
  return d;
}

std::vector<std::size_t> torsor_map_from_morphism(const Torsor& t, const Torsor& t2, const CocycleMorphism& d) {
  const FiniteGroupoid& g = *t.target;
  std::vector<std::size_t> map(t.size(), kNone);
  for (const auto& [key, u] : t.chart_points) {
    const auto [i, w, a] = key;
    for (std::size_t k = 0; k < t2.cover.num_sets(); ++k) {
      if (!t2.cover.contains(k, w)) continue;
      ArrowId b = g.comp(g.inv(d.delta[i][k][w]), a);
      auto it = t2.chart_points.find({k, w, b});
      if (it == t2.chart_points.end()) throw Error(ErrorKind::InvalidInput, "no chart point for " + t.elements[u]);
      if (map[u] != kNone && map[u] != it->second)
        throw Error(ErrorKind::M2Violation, "two images for " + t.elements[u]);
      map[u] = it->second;
    }
  }
  return map;
}

Verdict check_torsor_isomorphism(const Torsor& t, const Torsor& t2, const std::vector<std::size_t>& map) {
  const std::string name = "torsor isomorphism";
  if (map.size() != t.size() || t.size() != t2.size()) return Verdict::fail(name, "sizes differ");
  std::vector<char> hit(t2.size(), 0);
  for (std::size_t u = 0; u < t.size(); ++u) {
    std::size_t m = map[u];
    if (m == kNone || m >= t2.size() || hit[m]) return Verdict::fail(name, "not a bijection at " + t.elements[u]);
    hit[m] = 1;
    if (t2.p[m] != t.p[u]) return Verdict::fail(name, "not over W at " + t.elements[u]);
    if (t2.f[m] != t.f[u]) return Verdict::fail(name, "f not preserved at " + t.elements[u]);
  }
  for (std::size_t u = 0; u < t.size(); ++u)
    for (std::size_t v = 0; v < t.size(); ++v)
      if (t.p[u] == t.p[v] && t2.delta[map[u]][map[v]] != t.delta[u][v])
        return Verdict::fail(name, "delta not preserved at (" + t.elements[u] + "," + t.elements[v] + ")");
  return Verdict::pass(name);
}

std::optional<std::vector<std::size_t>> find_torsor_isomorphism(const Torsor& t, const Torsor& t2, std::size_t budget) {
  if (t.cover.points != t2.cover.points) throw Error(ErrorKind::InvalidInput, "torsors over different bases");
  if (!same_groupoid(t.target, t2.target)) return std::nullopt;
  std::vector<std::size_t> map(t.size(), kNone);
  std::size_t nodes = 0;
  for (std::size_t w = 0; w < t.cover.num_points(); ++w) {
    auto a = t.fiber(w);
    auto b = t2.fiber(w);
    if (a.size() != b.size()) return std::nullopt;
    std::vector<char> used(t2.size(), 0);
    auto search = [&](auto&& self, std::size_t s) -> bool {
      if (s == a.size()) return true;
      const std::size_t u = a[s];
      for (std::size_t m : b) {
        if (used[m] || t2.f[m] != t.f[u]) continue;
        if (++nodes > budget) throw Error(ErrorKind::BudgetExceeded, "torsor isomorphism search at " + t.cover.points[w]);
        bool fits = true;
        for (std::size_t r = 0; r < s && fits; ++r)
          fits = t2.delta[m][map[a[r]]] == t.delta[u][a[r]] && t2.delta[map[a[r]]][m] == t.delta[a[r]][u];
        if (!fits || t2.delta[m][m] != t.delta[u][u]) continue;
        map[u] = m;
        used[m] = 1;
        if (self(self, s + 1)) return true;
        used[m] = 0;
        map[u] = kNone;
      }
      return false;
    };
    if (!search(search, 0)) return std::nullopt;
  }
  return map;
}

bool torsor_isomorphic(const Torsor& t, const Torsor& t2, std::size_t budget) {
  return find_torsor_isomorphism(t, t2, budget).has_value();
}

}  // namespace nervekit
