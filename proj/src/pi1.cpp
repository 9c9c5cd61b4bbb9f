#include "nervekit/pi1.hpp"

#include <deque>
#include <set>

namespace nervekit {

std::string GroupPresentation::to_string() const {
  auto word = [&](const Word& w) {
    std::string out;
    for (std::size_t k = 0; k < w.size(); ++k) {
      if (k) out += " ";
      int letter = w[k];
      out += generators[static_cast<std::size_t>(letter > 0 ? letter : -letter) - 1];
      if (letter < 0) out += "^-1";
    }
    return out.empty() ? std::string("1") : out;
  };
  std::string out = "<";
  for (std::size_t k = 0; k < generators.size(); ++k) out += (k ? ", " : "") + generators[k];
  out += " | ";
  for (std::size_t k = 0; k < relators.size(); ++k) out += (k ? ", " : "") + word(relators[k]);
  return out + ">";
}

Pi1Presentation pi1_presentation(const TruncatedSimplicialSet& s, std::size_t basepoint) {
  if (!s.complete && s.dim < 2)
    throw Error(ErrorKind::InsufficientTruncation, "pi1 needs cap >= 2, have " + std::to_string(s.dim));
  if (basepoint >= s.count(0)) throw Error(ErrorKind::UnknownBasepoint, std::to_string(basepoint));

  Pi1Presentation p;
  p.basepoint = basepoint;
  const std::size_t nv = s.count(0);
  std::vector<std::vector<std::size_t>> incident(nv);
  for (std::size_t e = 0; e < s.count(1); ++e) {
    if (s.is_degenerate(1, e)) continue;
    incident[s.face(1, e, 1)].push_back(e);
    if (s.face(1, e, 0) != s.face(1, e, 1)) incident[s.face(1, e, 0)].push_back(e);
  }

  std::vector<char> seen(nv, 0);
  std::vector<std::size_t> tree_edge_into(nv, kNone);
  std::deque<std::size_t> queue{basepoint};
  seen[basepoint] = 1;
  while (!queue.empty()) {
    std::size_t w = queue.front();
    queue.pop_front();
    p.vertices.push_back(w);
    for (std::size_t e : incident[w]) {
      std::size_t other = s.face(1, e, 1) == w ? s.face(1, e, 0) : s.face(1, e, 1);
      if (seen[other]) continue;
      seen[other] = 1;
      tree_edge_into[other] = e;
      queue.push_back(other);
    }
  }

  std::vector<std::size_t> generator_of(s.count(1), kNone);
  std::set<std::size_t> tree_edges;
  for (std::size_t v = 0; v < nv; ++v)
    if (tree_edge_into[v] != kNone) tree_edges.insert(tree_edge_into[v]);
  for (std::size_t e = 0; e < s.count(1); ++e) {
    if (s.is_degenerate(1, e) || !seen[s.face(1, e, 1)]) continue;
    generator_of[e] = p.group.generators.size();
    p.group.generators.push_back(s.labels[1][e]);
    p.generator_edge.push_back(e);
    p.is_tree.push_back(tree_edges.count(e) ? 1 : 0);
  }
  p.parent.assign(nv, kNone);
  for (std::size_t v = 0; v < nv; ++v)
    if (tree_edge_into[v] != kNone) p.parent[v] = generator_of[tree_edge_into[v]];

  for (std::size_t k = 0; k < p.generator_edge.size(); ++k)
    if (p.is_tree[k]) p.group.relators.push_back({static_cast<int>(k + 1)});

  for (std::size_t t = 0; t < s.count(2); ++t) {
    if (s.is_degenerate(2, t)) continue;
    const std::size_t v0 = s.face(1, s.face(2, t, 2), 1);
    if (!seen[v0]) continue;
    Word w;
    auto letter = [&](std::size_t face_index, int sign) {
      std::size_t e = s.face(2, t, face_index);
      if (s.is_degenerate(1, e)) return;
      w.push_back(sign * static_cast<int>(generator_of[e] + 1));
    };
    letter(2, 1);
    letter(0, 1);
    letter(1, -1);
    if (!w.empty()) p.group.relators.push_back(std::move(w));
  }
  return p;
}

namespace {

class CosetTable {
 public:
  CosetTable(std::size_t generators, std::size_t budget) : cols_(2 * generators), budget_(budget) { new_coset(); }

  bool exhausted() const { return exhausted_; }
  std::size_t defined() const { return defined_; }
  std::size_t size() const { return table_.size(); }
  bool live(std::size_t c) const { return parent_[c] == c; }

  std::size_t live_count() const {
    std::size_t n = 0;
    for (std::size_t c = 0; c < table_.size(); ++c) n += live(c) ? 1 : 0;
    return n;
  }

  static std::size_t column(int letter) {
    return letter > 0 ? 2 * static_cast<std::size_t>(letter - 1) : 2 * static_cast<std::size_t>(-letter - 1) + 1;
  }

  void scan_and_fill(std::size_t c, const Word& w) {
    if (w.empty()) return;
    std::size_t f = c, b = c;
    std::size_t i = 0, j = w.size();  // unscanned letters are w[i..j)
    for (;;) {
      while (i < j && table_[f][column(w[i])] != kNone) f = table_[f][column(w[i++])];
      if (i == j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j > i && table_[b][column(w[j - 1]) ^ 1] != kNone) b = table_[b][column(w[--j]) ^ 1];
      if (j == i) {
        coincidence(f, b);
        return;
      }
      if (j == i + 1) {
        table_[f][column(w[i])] = b;
        table_[b][column(w[i]) ^ 1] = f;
        return;
      }
      if (!define(f, column(w[i]))) return;
    }
  }

  bool define(std::size_t c, std::size_t x) {
    if (defined_ >= budget_) {
      exhausted_ = true;
      return false;
    }
    std::size_t d = new_coset();
    table_[c][x] = d;
    table_[d][x ^ 1] = c;
    return true;
  }

  std::size_t entry(std::size_t c, std::size_t x) const { return table_[c][x]; }
  std::size_t columns() const { return cols_; }

 private:
  std::size_t new_coset() {
    table_.emplace_back(cols_, kNone);
    parent_.push_back(table_.size() - 1);
    ++defined_;
    return table_.size() - 1;
  }

  std::size_t rep(std::size_t c) {
    std::size_t r = c;
    while (parent_[r] != r) r = parent_[r];
    while (parent_[c] != r) {
      std::size_t next = parent_[c];
      parent_[c] = r;
      c = next;
    }
    return r;
  }

  void merge(std::size_t a, std::size_t b, std::deque<std::size_t>& dead) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent_[b] = a;
    dead.push_back(b);
  }

  void coincidence(std::size_t a, std::size_t b) {
    std::deque<std::size_t> dead;
    merge(a, b, dead);
    while (!dead.empty()) {
      std::size_t e = dead.front();
      dead.pop_front();
      for (std::size_t x = 0; x < cols_; ++x) {
        std::size_t f = table_[e][x];
        if (f == kNone) continue;
        table_[f][x ^ 1] = kNone;
        std::size_t e1 = rep(e), f1 = rep(f);
        if (table_[e1][x] != kNone) {
          merge(f1, table_[e1][x], dead);
        } else if (table_[f1][x ^ 1] != kNone) {
          merge(e1, table_[f1][x ^ 1], dead);
        } else {
          table_[e1][x] = f1;
          table_[f1][x ^ 1] = e1;
        }
      }
    }
  }

  std::size_t cols_;
  std::size_t budget_;
  std::size_t defined_ = 0;
  bool exhausted_ = false;
  std::vector<std::vector<std::size_t>> table_;
  std::vector<std::size_t> parent_;
};

}  // namespace

CosetEnumeration enumerate_cosets(const GroupPresentation& p, const std::vector<Word>& subgroup, std::size_t budget) {
  CosetTable t(p.generators.size(), budget);
  for (const auto& h : subgroup) t.scan_and_fill(0, h);
  for (std::size_t c = 0; c < t.size() && !t.exhausted(); ++c) {
    for (const auto& r : p.relators) {
      if (!t.live(c) || t.exhausted()) break;
      t.scan_and_fill(c, r);
    }
    for (std::size_t x = 0; x < t.columns() && t.live(c) && !t.exhausted(); ++x)
      if (t.entry(c, x) == kNone) t.define(c, x);
  }
  CosetEnumeration out;
  out.completed = !t.exhausted();
  out.index = t.live_count();
  out.defined = t.defined();
  return out;
}

AbelianGroup abelianization(const GroupPresentation& p) {
  SparseIntMatrix m(p.generators.size(), p.relators.size());
  for (std::size_t r = 0; r < p.relators.size(); ++r)
    for (int letter : p.relators[r])
      m.add(static_cast<std::size_t>(letter > 0 ? letter : -letter) - 1, r, letter > 0 ? 1 : -1);
  return cokernel(p.generators.size(), m);
}

Pi1IsoReport pi1_iso_check(const FiniteGroupoid& g, ObjectId x, std::size_t budget) {
  if (x >= g.num_objects()) throw Error(ErrorKind::UnknownBasepoint, std::to_string(x));
  Pi1IsoReport r;
  TruncatedSimplicialSet s = nerve(g, 2);
  r.presentation = pi1_presentation(s, x);
  const Pi1Presentation& p = r.presentation;

  std::vector<ArrowId> path(g.num_objects(), kNone);
  path[x] = g.id(x);
  for (std::size_t v : p.vertices) {
    if (v == x) continue;
    std::size_t k = p.parent[v];
    ArrowId a = s.keys[1][p.generator_edge[k]][0];
    path[v] = g.tgt(a) == v ? g.comp(path[g.src(a)], a) : g.comp(path[g.tgt(a)], g.inv(a));
  }
  std::vector<ArrowId> image;
  for (std::size_t e : p.generator_edge) {
    ArrowId a = s.keys[1][e][0];
    image.push_back(g.comp(g.comp(path[g.src(a)], a), g.inv(path[g.tgt(a)])));
  }

  r.relations_hold = true;
  std::string bad_relator;
  for (const auto& w : p.group.relators) {
    ArrowId acc = g.id(x);
    for (int letter : w) {
      ArrowId a = image[static_cast<std::size_t>(letter > 0 ? letter : -letter) - 1];
      acc = g.comp(acc, letter > 0 ? a : g.inv(a));
    }
    if (acc != g.id(x)) {
      r.relations_hold = false;
      bad_relator = GroupPresentation{p.group.generators, {w}}.to_string();
      break;
    }
  }

  const std::vector<ArrowId> loops = g.hom(x, x);
  r.vertex_group_order = loops.size();
  std::set<ArrowId> reached{g.id(x)};
  std::deque<ArrowId> frontier{g.id(x)};
  while (!frontier.empty()) {
    ArrowId a = frontier.front();
    frontier.pop_front();
    for (ArrowId b : image)
      for (ArrowId c : {g.comp(a, b), g.comp(a, g.inv(b))})
        if (reached.insert(c).second) frontier.push_back(c);
  }
  r.surjective = reached.size() == loops.size();

  CosetEnumeration ce = enumerate_cosets(p.group, {}, budget);
  r.injectivity_tested = ce.completed;
  if (ce.completed) r.presentation_order = ce.index;

  const std::string name = "pi1 iso at " + g.object_name(x);
  if (!r.relations_hold) {
    r.status = "relation not preserved";
    r.verdict = Verdict::fail(name, "AxiomViolation: " + bad_relator);
  } else if (!r.surjective) {
    r.status = "not surjective";
    r.verdict = Verdict::fail(name, "image has " + std::to_string(reached.size()) + " of " +
                                        std::to_string(loops.size()) + " elements");
  } else if (!ce.completed) {
    r.status = "surjective, injectivity untested";
    r.verdict = Verdict::fail(name, std::string(kind_name(ErrorKind::BudgetExceeded)) + ": " + r.status);
  } else if (ce.index != loops.size()) {
    r.status = "not injective";
    r.verdict = Verdict::fail(name, "presentation order " + std::to_string(ce.index) + " vs " +
                                        std::to_string(loops.size()));
  } else {
    r.isomorphic = true;
    r.status = "isomorphism, order " + std::to_string(ce.index);
    r.verdict = Verdict::pass(name);
  }
  return r;
}

}  // namespace nervekit
