#include "nervekit/milnor.hpp"

#include <algorithm>
#include <set>

namespace nervekit {

SimplexKey milnor_key(const MilnorSimplex& s) {
  SimplexKey k;
  for (const auto& [level, arrow] : s) {
    k.push_back(level);
    k.push_back(arrow);
  }
  return k;
}

MilnorSimplex milnor_simplex(const SimplexKey& key) {
  MilnorSimplex s;
  for (std::size_t i = 0; i + 1 < key.size(); i += 2) s.emplace_back(key[i], key[i + 1]);
  return s;
}

std::string milnor_label(const FiniteGroupoid& g, const MilnorSimplex& s) {
  std::string out = "(";
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (k) out += ",";
    out += "(" + std::to_string(s[k].first) + "," + g.arrow_name(s[k].second) + ")";
  }
  return out + ")";
}

namespace {

MilnorSimplex drop(const MilnorSimplex& s, std::size_t j) {
  MilnorSimplex out = s;
  out.erase(out.begin() + static_cast<long>(j));
  return out;
}

void level_subsets(std::size_t levels, std::size_t size, std::vector<std::vector<std::size_t>>& out) {
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (cur.size() == size) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i <= levels; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
}

void reserve_degrees(TruncatedSimplicialSet& s, std::size_t dim) {
  s.keys.resize(dim + 1);
  s.labels.resize(dim + 1);
  s.faces.resize(dim + 1);
  s.degenerate.resize(dim + 1);
  s.index.resize(dim + 1);
}

}  // namespace

JoinComplex milnor_E(GroupoidHandle g, std::size_t levels) {
  JoinComplex e;
  e.groupoid = g;
  e.levels = levels;
  TruncatedSimplicialSet& s = e.complex;
  s.dim = levels;
  s.complete = true;
  reserve_degrees(s, levels);

  for (std::size_t n = 0; n <= levels; ++n) {
    std::vector<std::vector<std::size_t>> subsets;
    level_subsets(levels, n + 1, subsets);
    std::vector<SimplexKey> keys;
    for (ObjectId x = 0; x < g->num_objects(); ++x) {
      const auto& out = g->arrows_from(x);
      if (out.empty()) continue;
      for (const auto& lv : subsets) {
        std::vector<std::size_t> choice(n + 1, 0);
        for (;;) {
          MilnorSimplex simplex;
          for (std::size_t k = 0; k <= n; ++k) simplex.emplace_back(lv[k], out[choice[k]]);
          keys.push_back(milnor_key(simplex));
          std::size_t k = 0;
          while (k <= n && ++choice[k] == out.size()) choice[k++] = 0;
          if (k > n) break;
        }
      }
    }
    std::sort(keys.begin(), keys.end());
    for (auto& key : keys) {
      std::string label = milnor_label(*g, milnor_simplex(key));
      s.add(n, std::move(key), std::move(label));
    }
    if (n == 0) continue;
    for (std::size_t id = 0; id < s.count(n); ++id) {
      MilnorSimplex simplex = e.simplex(n, id);
      for (std::size_t j = 0; j <= n; ++j) s.faces[n][id].push_back(s.find(n - 1, milnor_key(drop(simplex, j))));
    }
  }
  return e;
}

MilnorSimplex milnor_act(const FiniteGroupoid& g, ArrowId gamma, const MilnorSimplex& s) {
  if (s.empty()) return s;
  if (g.tgt(gamma) != g.src(s[0].second))
    throw Error(ErrorKind::MismatchedTarget, "tgt(" + g.arrow_name(gamma) + ") is not the source of " + milnor_label(g, s));
  MilnorSimplex out = s;
  for (auto& entry : out) entry.second = g.comp(gamma, entry.second);
  return out;
}

MilnorSimplex canonical_representative(const FiniteGroupoid& g, const MilnorSimplex& s) {
  if (s.empty()) return s;
  const ObjectId x = g.src(s[0].second);
  MilnorSimplex best = s;
  for (ArrowId gamma = 0; gamma < g.num_arrows(); ++gamma) {
    if (g.tgt(gamma) != x) continue;
    MilnorSimplex t = milnor_act(g, gamma, s);
    if (t < best) best = std::move(t);
  }
  return best;
}

std::size_t MilnorBComplex::orbit_of(const MilnorSimplex& s) const {
  if (s.empty()) return kNone;
  return complex.find(s.size() - 1, milnor_key(canonical_representative(*groupoid, s)));
}

MilnorBComplex milnor_B(GroupoidHandle g, std::size_t levels) {
  JoinComplex e = milnor_E(g, levels);
  MilnorBComplex b;
  b.groupoid = g;
  b.levels = levels;
  TruncatedSimplicialSet& s = b.complex;
  s.dim = levels;
  s.complete = true;
  reserve_degrees(s, levels);

  for (std::size_t n = 0; n <= levels; ++n) {
    std::set<MilnorSimplex> reps;
    for (std::size_t id = 0; id < e.complex.count(n); ++id) {
      MilnorSimplex simplex = e.simplex(n, id);
      const ObjectId x = g->src(simplex[0].second);
      for (ArrowId gamma = 0; gamma < g->num_arrows(); ++gamma)
        if (g->tgt(gamma) == x && !g->is_identity(gamma) && milnor_act(*g, gamma, simplex) == simplex)
          throw Error(ErrorKind::NonFreeAction, g->arrow_name(gamma) + " fixes " + milnor_label(*g, simplex));
      reps.insert(canonical_representative(*g, simplex));
    }
    for (const auto& r : reps) s.add(n, milnor_key(r), milnor_label(*g, r));
    if (n == 0) continue;
    for (std::size_t id = 0; id < s.count(n); ++id) {
      MilnorSimplex rep = b.representative(n, id);
      for (std::size_t j = 0; j <= n; ++j) s.faces[n][id].push_back(b.orbit_of(drop(rep, j)));
    }
  }
  return b;
}

MilnorSimplex milnor_section(const FiniteGroupoid& g, const MilnorSimplex& s, std::size_t level) {
  for (const auto& [i, a] : s)
    if (i == level) return milnor_act(g, g.inv(a), s);
  std::string active;
  for (const auto& entry : s) active += (active.empty() ? "" : ",") + std::to_string(entry.first);
  throw Error(ErrorKind::LevelInactive, "level " + std::to_string(level) + " not in {" + active + "}");
}

ArrowId milnor_pairing(const FiniteGroupoid& g, const MilnorSimplex& e1, const MilnorSimplex& e2) {
  auto fail = [&] { return Error(ErrorKind::NotSameOrbit, milnor_label(g, e1) + " vs " + milnor_label(g, e2)); };
  if (e1.size() != e2.size() || e1.empty()) throw fail();
  for (std::size_t k = 0; k < e1.size(); ++k)
    if (e1[k].first != e2[k].first) throw fail();
  if (g.tgt(e1[0].second) != g.tgt(e2[0].second)) throw fail();
  const ArrowId gamma = g.comp(e1[0].second, g.inv(e2[0].second));
  for (std::size_t k = 0; k < e1.size(); ++k) {
    ArrowId c = g.comp(gamma, e2[k].second);
    if (c == kNone || c != e1[k].second) throw fail();
  }
  return gamma;
}

SimplexKey milnor_to_nerve(const FiniteGroupoid& g, const MilnorSimplex& s) {
  if (s.size() == 1) return {g.tgt(s[0].second)};
  SimplexKey out;
  for (std::size_t k = 0; k + 1 < s.size(); ++k) out.push_back(g.comp(g.inv(s[k].second), s[k + 1].second));
  return out;
}

Verdict check_orbit_independence(const JoinComplex& e) {
  const FiniteGroupoid& g = *e.groupoid;
  for (std::size_t n = 0; n <= e.complex.dim; ++n)
    for (std::size_t id = 0; id < e.complex.count(n); ++id) {
      MilnorSimplex s = e.simplex(n, id);
      const SimplexKey image = milnor_to_nerve(g, s);
      const ObjectId x = g.src(s[0].second);
      for (ArrowId gamma = 0; gamma < g.num_arrows(); ++gamma)
        if (g.tgt(gamma) == x && milnor_to_nerve(g, milnor_act(g, gamma, s)) != image)
          return Verdict::fail("orbit independence", g.arrow_name(gamma) + " moves the image of " + e.complex.labels[n][id]);
    }
  return Verdict::pass("orbit independence");
}

Verdict check_face_compatibility(const MilnorBComplex& b, const TruncatedSimplicialSet& nerve_set) {
  const FiniteGroupoid& g = *b.groupoid;
  for (std::size_t n = 1; n <= std::min(b.complex.dim, nerve_set.dim); ++n)
    for (std::size_t id = 0; id < b.complex.count(n); ++id) {
      MilnorSimplex rep = b.representative(n, id);
      std::size_t image = nerve_set.find(n, milnor_to_nerve(g, rep));
      if (image == kNone) return Verdict::fail("face compatibility", "no nerve simplex for " + b.complex.labels[n][id]);
      for (std::size_t j = 0; j <= n; ++j)
        if (nerve_set.find(n - 1, milnor_to_nerve(g, drop(rep, j))) != nerve_set.face(n, image, j))
          return Verdict::fail("face compatibility", "d" + std::to_string(j) + " of " + b.complex.labels[n][id]);
    }
  return Verdict::pass("face compatibility");
}

ChainMap milnor_chain_map(const MilnorBComplex& b, const TruncatedSimplicialSet& nerve_set) {
  const FiniteGroupoid& g = *b.groupoid;
  ChainMap phi;
  for (std::size_t n = 0; n <= std::min(b.complex.dim, nerve_set.dim); ++n) {
    std::vector<std::size_t> position(nerve_set.count(n), kNone);
    std::size_t next = 0;
    for (std::size_t x = 0; x < nerve_set.count(n); ++x)
      if (!nerve_set.is_degenerate(n, x)) position[x] = next++;
    SparseIntMatrix m(next, b.complex.count(n));
    for (std::size_t id = 0; id < b.complex.count(n); ++id) {
      std::size_t image = nerve_set.find(n, milnor_to_nerve(g, b.representative(n, id)));
      if (image != kNone && position[image] != kNone) m.add(position[image], id, 1);
    }
    phi.components.push_back(std::move(m));
  }
  return phi;
}

bool MilnorComparison::ok() const {
  for (const auto& v : verdicts())
    if (!v.ok) return false;
  return true;
}

std::vector<Verdict> MilnorComparison::verdicts() const {
  std::vector<Verdict> out = degrees;
  out.push_back(orbit_independence);
  out.push_back(face_compatibility);
  out.push_back(chain_map);
  out.push_back(cone);
  return out;
}

MilnorComparison compare_with_nerve(const GroupoidHandle& g, std::size_t levels) {
  MilnorComparison c;
  c.levels = levels;
  MilnorBComplex b = milnor_B(g, levels);
  TruncatedSimplicialSet n = nerve(*g, levels);
  ChainComplex cb = chain_complex(b.complex);
  ChainComplex cn = chain_complex(n);
  if (levels >= 2) {
    c.milnor = homology_range(cb, levels - 2);
    c.nerve = homology_range(cn, levels - 2);
    for (std::size_t k = 0; k + 2 <= levels; ++k) {
      std::string name = "degree " + std::to_string(k) + " agreement";
      c.degrees.push_back(c.milnor[k] == c.nerve[k]
                              ? Verdict::pass(name)
                              : Verdict::fail(name, c.milnor[k].to_string() + " vs " + c.nerve[k].to_string()));
    }
  }
  c.orbit_independence = check_orbit_independence(milnor_E(g, levels));
  c.face_compatibility = check_face_compatibility(b, n);
  ChainMap phi = milnor_chain_map(b, n);
  c.chain_map = check_chain_map(cb, cn, phi);
  c.cone = Verdict::pass("mapping cone acyclic through degree " + std::to_string(levels == 0 ? 0 : levels - 1));
  if (levels >= 1) {
    ChainComplex cone = mapping_cone(cb, cn, phi);
    for (std::size_t k = 0; k + 1 <= levels; ++k) {
      HomologyGroup h = homology(cone, k);
      if (!h.group.is_trivial()) {
        c.cone = Verdict::fail(c.cone.name, "cone " + h.to_string());
        break;
      }
    }
  }
  return c;
}

}  // namespace nervekit
