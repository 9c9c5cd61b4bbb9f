#include "nervekit/simplicial.hpp"

#include <algorithm>

namespace nervekit {

std::size_t TruncatedSimplicialSet::count_nondegenerate(std::size_t n) const {
  if (n >= degenerate.size()) return 0;
  return static_cast<std::size_t>(std::count(degenerate[n].begin(), degenerate[n].end(), 0));
}

std::size_t TruncatedSimplicialSet::find(std::size_t n, const SimplexKey& key) const {
  if (n >= index.size()) return kNone;
  auto it = index[n].find(key);
  return it == index[n].end() ? kNone : it->second;
}

std::size_t TruncatedSimplicialSet::add(std::size_t n, SimplexKey key, std::string label, bool is_degenerate) {
  if (keys.size() <= n) {
    keys.resize(n + 1);
    labels.resize(n + 1);
    faces.resize(n + 1);
    degenerate.resize(n + 1);
    index.resize(n + 1);
  }
  const std::size_t id = keys[n].size();
  if (!index[n].emplace(key, id).second) throw Error(ErrorKind::InvalidInput, "duplicate simplex " + label);
  keys[n].push_back(std::move(key));
  labels[n].push_back(std::move(label));
  faces[n].emplace_back();
  degenerate[n].push_back(is_degenerate ? 1 : 0);
  return id;
}

Verdict check_simplicial_identities(const TruncatedSimplicialSet& s) {
  const std::string name = "simplicial identities";
  auto where = [&](std::size_t n, std::size_t x) { return "degree " + std::to_string(n) + " simplex " + s.labels[n][x]; };
  for (std::size_t n = 2; n <= s.dim && n < s.keys.size(); ++n)
    for (std::size_t x = 0; x < s.count(n); ++x)
      for (std::size_t j = 1; j <= n; ++j)
        for (std::size_t i = 0; i < j; ++i)
          if (s.face(n - 1, s.face(n, x, j), i) != s.face(n - 1, s.face(n, x, i), j - 1))
            return Verdict::fail(name, "d" + std::to_string(i) + "d" + std::to_string(j) + " at " + where(n, x));
  if (!s.has_degeneracies) return Verdict::pass(name);

  for (std::size_t n = 0; n < s.dim && n < s.degeneracies.size(); ++n)
    for (std::size_t x = 0; x < s.count(n); ++x)
      for (std::size_t j = 0; j <= n; ++j) {
        const std::size_t sj = s.degeneracies[n][x][j];
        auto fail = [&](const std::string& what) { return Verdict::fail(name, what + " at " + where(n, x)); };
        if (!s.is_degenerate(n + 1, sj)) return fail("s" + std::to_string(j) + " not flagged degenerate");
        if (s.face(n + 1, sj, j) != x || s.face(n + 1, sj, j + 1) != x) return fail("d s" + std::to_string(j) + " != id");
        for (std::size_t i = 0; i < j; ++i)
          if (s.face(n + 1, sj, i) != s.degeneracies[n - 1][s.face(n, x, i)][j - 1])
            return fail("d" + std::to_string(i) + "s" + std::to_string(j));
        for (std::size_t i = j + 2; i <= n + 1; ++i)
          if (s.face(n + 1, sj, i) != s.degeneracies[n - 1][s.face(n, x, i - 1)][j])
            return fail("d" + std::to_string(i) + "s" + std::to_string(j));
        if (n + 1 < s.dim)
          for (std::size_t i = 0; i <= j; ++i) {
            const std::size_t si = s.degeneracies[n][x][i];
            if (s.degeneracies[n + 1][sj][i] != s.degeneracies[n + 1][si][j + 1])
              return fail("s" + std::to_string(i) + "s" + std::to_string(j));
          }
      }
  return Verdict::pass(name);
}

ObjectId nerve_vertex(const FiniteGroupoid& g, std::size_t n, const SimplexKey& key, std::size_t v) {
  if (n == 0) return key[0];
  return v < n ? g.src(key[v]) : g.tgt(key[n - 1]);
}

namespace {

std::string string_label(const FiniteGroupoid& g, const SimplexKey& key) {
  std::string out = "(";
  for (std::size_t k = 0; k < key.size(); ++k) {
    if (k) out += ",";
    out += g.arrow_name(key[k]);
  }
  return out + ")";
}

}  // namespace

TruncatedSimplicialSet nerve(const FiniteGroupoid& g, std::size_t dim) {
  TruncatedSimplicialSet s;
  s.dim = dim;
  s.has_degeneracies = true;
  for (ObjectId x = 0; x < g.num_objects(); ++x) s.add(0, {x}, g.object_name(x));
  s.keys.resize(dim + 1);
  s.labels.resize(dim + 1);
  s.faces.resize(dim + 1);
  s.degenerate.resize(dim + 1);
  s.index.resize(dim + 1);

  for (std::size_t n = 1; n <= dim; ++n) {
    auto extend = [&](SimplexKey key) {
      bool degen = std::any_of(key.begin(), key.end(), [&](ArrowId a) { return g.is_identity(a); });
      std::string label = string_label(g, key);
      s.add(n, std::move(key), std::move(label), degen);
    };
    if (n == 1) {
      for (ArrowId a = 0; a < g.num_arrows(); ++a) extend({a});
    } else {
      for (std::size_t p = 0; p < s.count(n - 1); ++p) {
        const SimplexKey prev = s.keys[n - 1][p];
        for (ArrowId a : g.arrows_from(g.tgt(prev.back()))) {
          SimplexKey key = prev;
          key.push_back(a);
          extend(std::move(key));
        }
      }
    }
    for (std::size_t x = 0; x < s.count(n); ++x) {
      const SimplexKey& key = s.keys[n][x];
      std::vector<std::size_t> f(n + 1);
      if (n == 1) {
        f[0] = s.find(0, {g.tgt(key[0])});
        f[1] = s.find(0, {g.src(key[0])});
      } else {
        for (std::size_t i = 0; i <= n; ++i) {
          SimplexKey face;
          if (i == 0) {
            face.assign(key.begin() + 1, key.end());
          } else if (i == n) {
            face.assign(key.begin(), key.end() - 1);
          } else {
            face.assign(key.begin(), key.begin() + static_cast<long>(i - 1));
            face.push_back(g.comp(key[i - 1], key[i]));
            face.insert(face.end(), key.begin() + static_cast<long>(i + 1), key.end());
          }
          f[i] = s.find(n - 1, face);
        }
      }
      s.faces[n][x] = std::move(f);
    }
  }

  s.degeneracies.resize(dim);
  for (std::size_t n = 0; n < dim; ++n) {
    s.degeneracies[n].resize(s.count(n));
    for (std::size_t x = 0; x < s.count(n); ++x) {
      const SimplexKey& key = s.keys[n][x];
      for (std::size_t i = 0; i <= n; ++i) {
        SimplexKey up;
        if (n > 0) up = key;
        up.insert(up.begin() + static_cast<long>(i), g.id(nerve_vertex(g, n, key, i)));
        s.degeneracies[n][x].push_back(s.find(n + 1, up));
      }
    }
  }
  return s;
}

TruncatedSimplicialSet simplicial_circle() {
  TruncatedSimplicialSet s;
  s.dim = 1;
  s.complete = true;
  s.has_degeneracies = true;
  s.add(0, {0}, "a");
  s.add(0, {1}, "b");
  s.add(1, {0, 0}, "s0(a)", true);
  s.add(1, {1, 1}, "s0(b)", true);
  s.add(1, {0, 1, 0}, "e1");
  s.add(1, {0, 1, 1}, "e2");
  s.faces[1] = {{0, 0}, {1, 1}, {1, 0}, {1, 0}};
  s.degeneracies = {{{0}, {1}}};
  return s;
}

std::string AbelianGroup::to_string() const {
  std::vector<std::string> parts;
  if (rank == 1) parts.emplace_back("Z");
  if (rank > 1) parts.push_back("Z^" + std::to_string(rank));
  for (const auto& d : torsion) parts.push_back("Z/" + d.str());
  if (parts.empty()) return "0";
  std::string out = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) out += " (+) " + parts[i];
  return out;
}

AbelianGroup cokernel(std::size_t rank, const SparseIntMatrix& relations) {
  auto divisors = elementary_divisors(relations);
  AbelianGroup out;
  out.rank = rank - divisors.size();
  for (auto& d : divisors)
    if (d > 1) out.torsion.push_back(d);
  return out;
}

std::string HomologyGroup::to_string() const { return "H_" + std::to_string(degree) + " = " + group.to_string(); }

std::size_t ChainComplex::rank(std::size_t n) const {
  if (n <= top) return basis[n].size();
  if (complete) return 0;
  throw Error(ErrorKind::InsufficientTruncation, "C_" + std::to_string(n) + " past cap " + std::to_string(top));
}

SparseIntMatrix ChainComplex::d(std::size_t n) const {
  if (n == 0) return SparseIntMatrix(0, rank(0));
  if (n <= top) return boundary[n];
  return SparseIntMatrix(rank(n - 1), rank(n));
}

ChainComplex chain_complex(const TruncatedSimplicialSet& s) {
  ChainComplex c;
  c.top = s.dim;
  c.complete = s.complete;
  c.basis.resize(s.dim + 1);
  std::vector<std::vector<std::size_t>> position(s.dim + 1);
  for (std::size_t n = 0; n <= s.dim; ++n) {
    position[n].assign(s.count(n), kNone);
    for (std::size_t x = 0; x < s.count(n); ++x)
      if (!s.is_degenerate(n, x)) {
        position[n][x] = c.basis[n].size();
        c.basis[n].push_back(s.labels[n][x]);
      }
  }
  c.boundary.resize(s.dim + 1);
  c.boundary[0] = SparseIntMatrix(0, c.basis[0].size());
  for (std::size_t n = 1; n <= s.dim; ++n) {
    SparseIntMatrix m(c.basis[n - 1].size(), c.basis[n].size());
    for (std::size_t x = 0; x < s.count(n); ++x) {
      if (position[n][x] == kNone) continue;
      for (std::size_t i = 0; i <= n; ++i) {
        std::size_t f = s.face(n, x, i);
        if (position[n - 1][f] == kNone) continue;
        m.add(position[n - 1][f], position[n][x], i % 2 == 0 ? 1 : -1);
      }
    }
    c.boundary[n] = std::move(m);
  }
  return c;
}

Verdict check_boundary_squared(const ChainComplex& c) {
  for (std::size_t n = 2; n <= c.top; ++n)
    if (!multiply(c.d(n - 1), c.d(n)).is_zero())
      return Verdict::fail("boundary squared", "d" + std::to_string(n - 1) + " d" + std::to_string(n) + " != 0");
  return Verdict::pass("boundary squared");
}

namespace {

void require_homology(const ChainComplex& c, std::size_t n) {
  if (!c.has_homology(n))
    throw Error(ErrorKind::InsufficientTruncation,
                "H_" + std::to_string(n) + " needs cap >= " + std::to_string(n + 1) + ", have " + std::to_string(c.top));
}

HomologyGroup assemble(std::size_t n, std::size_t dim, std::size_t rank_in, const std::vector<BigInt>& divisors_out) {
  HomologyGroup h;
  h.degree = n;
  h.group.rank = dim - rank_in - divisors_out.size();
  for (const auto& d : divisors_out)
    if (d > 1) h.group.torsion.push_back(d);
  return h;
}

}  // namespace

HomologyGroup homology(const ChainComplex& c, std::size_t n) {
  require_homology(c, n);
  std::size_t rank_in = n == 0 ? 0 : elementary_divisors(c.d(n)).size();
  return assemble(n, c.rank(n), rank_in, elementary_divisors(c.d(n + 1)));
}

std::vector<HomologyGroup> homology_range(const ChainComplex& c, std::size_t max_degree) {
  require_homology(c, max_degree);
  std::vector<std::vector<BigInt>> divisors(max_degree + 2);
  for (std::size_t n = 1; n <= max_degree + 1; ++n) divisors[n] = elementary_divisors(c.d(n));
  std::vector<HomologyGroup> out;
  for (std::size_t n = 0; n <= max_degree; ++n) out.push_back(assemble(n, c.rank(n), divisors[n].size(), divisors[n + 1]));
  return out;
}

namespace {

SparseIntMatrix component(const ChainComplex& a, const ChainComplex& b, const ChainMap& phi, std::size_t n) {
  if (n < phi.components.size()) return phi.components[n];
  return SparseIntMatrix(b.rank(n), a.rank(n));
}

bool same_matrix(const SparseIntMatrix& x, const SparseIntMatrix& y) {
  return x.rows == y.rows && x.cols == y.cols && x.columns == y.columns;
}

}  // namespace

Verdict check_chain_map(const ChainComplex& a, const ChainComplex& b, const ChainMap& phi) {
  const std::string name = "chain map";
  for (std::size_t n = 0; n < phi.components.size(); ++n) {
    const auto& m = phi.components[n];
    if (m.rows != b.rank(n) || m.cols != a.rank(n))
      return Verdict::fail(name, "component " + std::to_string(n) + " has wrong shape");
  }
  for (std::size_t n = 1; n < phi.components.size(); ++n) {
    if ((!a.complete && n > a.top) || (!b.complete && n > b.top)) break;
    if (!same_matrix(multiply(phi.components[n - 1], a.d(n)), multiply(b.d(n), phi.components[n])))
      return Verdict::fail(name, "square at degree " + std::to_string(n) + " does not commute");
  }
  return Verdict::pass(name);
}

ChainComplex mapping_cone(const ChainComplex& a, const ChainComplex& b, const ChainMap& phi) {
  ChainComplex c;
  c.complete = a.complete && b.complete;
  if (c.complete) {
    c.top = std::max(a.top + 1, b.top);
  } else {
    c.top = static_cast<std::size_t>(-1);
    if (!a.complete) c.top = std::min(c.top, a.top + 1);
    if (!b.complete) c.top = std::min(c.top, b.top);
  }
  if (phi.components.size() < c.top) {
    c.top = phi.components.size();
    c.complete = false;
  }
  c.basis.resize(c.top + 1);
  for (std::size_t k = 0; k <= c.top; ++k) {
    if (k >= 1)
      for (std::size_t x = 0; x < a.rank(k - 1); ++x) c.basis[k].push_back("a:" + a.basis[k - 1][x]);
    for (std::size_t x = 0; x < b.rank(k); ++x) c.basis[k].push_back("b:" + b.basis[k][x]);
  }
  c.boundary.resize(c.top + 1);
  c.boundary[0] = SparseIntMatrix(0, c.basis[0].size());
  for (std::size_t k = 1; k <= c.top; ++k) {
    const std::size_t ra = a.rank(k - 1);
    const std::size_t row_off = k >= 2 ? a.rank(k - 2) : 0;
    SparseIntMatrix m(c.basis[k - 1].size(), c.basis[k].size());
    if (k >= 2) {
      SparseIntMatrix da = a.d(k - 1);
      for (std::size_t x = 0; x < ra; ++x)
        for (const auto& [r, v] : da.columns[x]) m.add(r, x, -v);
    }
    SparseIntMatrix f = component(a, b, phi, k - 1);
    for (std::size_t x = 0; x < ra; ++x)
      for (const auto& [r, v] : f.columns[x]) m.add(row_off + r, x, v);
    SparseIntMatrix db = b.d(k);
    for (std::size_t x = 0; x < b.rank(k); ++x)
      for (const auto& [r, v] : db.columns[x]) m.add(row_off + r, ra + x, v);
    c.boundary[k] = std::move(m);
  }
  return c;
}

}  // namespace nervekit
