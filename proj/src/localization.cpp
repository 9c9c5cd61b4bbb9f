#include "nervekit/localization.hpp"

#include <algorithm>

#include "detail/union_find.hpp"

namespace nervekit {

namespace {

[[noreturn]] void invalid(std::string what) { throw Error(ErrorKind::InvalidClass, std::move(what)); }

std::string pair_name(const FiniteCategory& c, MorphismId f, MorphismId g) {
  return "(" + c.morphism_name(f) + ", " + c.morphism_name(g) + ")";
}

// Identities and composition closure only; the oracle is checked once in
// make_class.
std::optional<std::string> closure_failure(const MorphismClass& r) {
  const auto& c = *r.category;
  if (r.member.size() != c.num_morphisms()) return std::string("class does not match the category");
  for (std::size_t x = 0; x < c.num_objects(); ++x)
    if (!r.contains(c.id(x))) return "identity " + c.morphism_name(c.id(x)) + " missing";
  for (MorphismId f = 0; f < c.num_morphisms(); ++f) {
    if (!r.contains(f)) continue;
    for (MorphismId g : c.morphisms_from(c.tgt(f)))
      if (r.contains(g) && !r.contains(c.comp(f, g)))
        return "composite " + c.morphism_name(f) + " then " + c.morphism_name(g) + " missing";
  }
  return std::nullopt;
}

std::optional<std::string> oracle_failure(const MorphismClass& r) {
  if (!r.oracle) return std::nullopt;
  const auto& c = *r.category;
  for (MorphismId m : r.members())
    for (MorphismId g : c.morphisms_into(c.tgt(m)))
      if (!r.oracle->find(g, m)) return "no pullback of " + pair_name(c, g, m);
  for (const auto& [key, p] : r.oracle->table()) {
    auto [f, g] = key;
    if (f >= c.num_morphisms() || g >= c.num_morphisms() || c.tgt(f) != c.tgt(g))
      return std::string("oracle entry is not a cospan");
    if (!is_pullback(c, f, g, p)) return "oracle entry for " + pair_name(c, f, g) + " is not a pullback";
    if (r.contains(g) && !r.contains(p.p1))
      return "base extension " + c.morphism_name(p.p1) + " of " + c.morphism_name(g) + " missing";
    if (r.contains(f) && !r.contains(p.p2))
      return "base extension " + c.morphism_name(p.p2) + " of " + c.morphism_name(f) + " missing";
  }
  return std::nullopt;
}

}  // namespace

std::optional<Pullback> PullbackOracle::find(MorphismId f, MorphismId g) const {
  auto it = table_.find({f, g});
  if (it == table_.end()) return std::nullopt;
  return it->second;
}

bool is_pullback(const FiniteCategory& c, MorphismId f, MorphismId g, const Pullback& p) {
  if (p.apex >= c.num_objects() || p.p1 >= c.num_morphisms() || p.p2 >= c.num_morphisms()) return false;
  const std::size_t a = c.src(f), b = c.src(g);
  if (c.src(p.p1) != p.apex || c.src(p.p2) != p.apex || c.tgt(p.p1) != a || c.tgt(p.p2) != b) return false;
  if (c.comp(p.p1, f) != c.comp(p.p2, g)) return false;
  for (std::size_t q = 0; q < c.num_objects(); ++q) {
    for (MorphismId q1 : c.hom(q, a)) {
      for (MorphismId q2 : c.hom(q, b)) {
        if (c.comp(q1, f) != c.comp(q2, g)) continue;
        int factorizations = 0;
        for (MorphismId u : c.hom(q, p.apex))
          if (c.comp(u, p.p1) == q1 && c.comp(u, p.p2) == q2) ++factorizations;
        if (factorizations != 1) return false;
      }
    }
  }
  return true;
}

PullbackOracle PullbackOracle::by_enumeration(const FiniteCategory& c, bool greatest) {
  PullbackOracle oracle;
  for (MorphismId f = 0; f < c.num_morphisms(); ++f) {
    for (MorphismId g = 0; g < c.num_morphisms(); ++g) {
      if (c.tgt(f) != c.tgt(g)) continue;
      std::optional<Pullback> chosen;
      for (std::size_t p = 0; p < c.num_objects() && !(chosen && !greatest); ++p)
        for (MorphismId p1 : c.hom(p, c.src(f)))
          for (MorphismId p2 : c.hom(p, c.src(g))) {
            if (chosen && !greatest) break;
            Pullback cand{p, p1, p2};
            if (is_pullback(c, f, g, cand)) chosen = cand;
          }
      if (chosen) oracle.set(f, g, *chosen);
    }
  }
  return oracle;
}

std::vector<MorphismId> MorphismClass::members() const {
  std::vector<MorphismId> out;
  for (MorphismId f = 0; f < member.size(); ++f)
    if (member[f]) out.push_back(f);
  return out;
}

MorphismClass make_class(CategoryHandle c, const std::vector<MorphismId>& members,
                         std::optional<PullbackOracle> oracle) {
  MorphismClass r{c, std::vector<char>(c->num_morphisms(), 0), std::move(oracle)};
  for (MorphismId f : members) {
    if (f >= c->num_morphisms()) throw Error(ErrorKind::DanglingId, "class member out of range");
    r.member[f] = 1;
  }
  if (auto w = closure_failure(r)) invalid(*w);
  if (auto w = oracle_failure(r)) invalid(*w);
  return r;
}

Verdict class_verdict(const MorphismClass& r) {
  if (auto w = closure_failure(r)) return Verdict::fail("class", *w);
  if (auto w = oracle_failure(r)) return Verdict::fail("class", *w);
  return Verdict::pass("class");
}

std::vector<MorphismId> composition_closure(const FiniteCategory& c, const std::vector<MorphismId>& generators) {
  std::vector<char> in(c.num_morphisms(), 0);
  for (std::size_t x = 0; x < c.num_objects(); ++x) in[c.id(x)] = 1;
  for (MorphismId f : generators) in.at(f) = 1;
  bool grew = true;
  while (grew) {
    grew = false;
    for (MorphismId f = 0; f < c.num_morphisms(); ++f) {
      if (!in[f]) continue;
      for (MorphismId g : c.morphisms_from(c.tgt(f))) {
        if (!in[g]) continue;
        MorphismId h = c.comp(f, g);
        if (!in[h]) in[h] = 1, grew = true;
      }
    }
  }
  std::vector<MorphismId> out;
  for (MorphismId f = 0; f < in.size(); ++f)
    if (in[f]) out.push_back(f);
  return out;
}

MorphismClass identities_class(CategoryHandle c) {
  std::vector<MorphismId> ids;
  for (std::size_t x = 0; x < c->num_objects(); ++x) ids.push_back(c->id(x));
  return make_class(std::move(c), ids);
}

MorphismClass all_morphisms_class(CategoryHandle c, std::optional<PullbackOracle> oracle) {
  std::vector<MorphismId> all(c->num_morphisms());
  for (MorphismId f = 0; f < all.size(); ++f) all[f] = f;
  return make_class(std::move(c), all, std::move(oracle));
}

std::string span_label(const FiniteCategory& c, const Span& s) {
  return c.object_name(c.tgt(s.left)) + " <-" + c.morphism_name(s.left) + "- " + c.object_name(s.apex) + " -" +
         c.morphism_name(s.right) + "-> " + c.object_name(c.tgt(s.right));
}

std::size_t SpanClasses::class_index(const Span& s) const {
  auto it = std::lower_bound(spans.begin(), spans.end(), s);
  if (it == spans.end() || *it != s) return kNone;
  return class_of[static_cast<std::size_t>(it - spans.begin())];
}

SpanClasses span_pi0(const MorphismClass& r, std::size_t x, std::size_t y) {
  const auto& c = *r.category;
  if (x >= c.num_objects() || y >= c.num_objects()) throw Error(ErrorKind::UnknownObject, "span endpoint");
  if (auto w = closure_failure(r)) invalid(*w);

  SpanClasses out;
  out.from = x;
  out.to = y;
  for (MorphismId left : c.morphisms_into(x)) {
    if (!r.contains(left)) continue;
    for (MorphismId right : c.hom(c.src(left), y)) out.spans.push_back({c.src(left), left, right});
  }
  std::sort(out.spans.begin(), out.spans.end());

  const std::size_t n = out.spans.size();
  detail::UnionFind uf(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Span& s = out.spans[i];
      const Span& t = out.spans[j];
      for (MorphismId u : c.hom(s.apex, t.apex))
        if (c.comp(u, t.left) == s.left && c.comp(u, t.right) == s.right) {
          uf.unite(i, j);
          break;
        }
    }
  }
  std::vector<std::size_t> index_of_root(n, kNone);
  out.class_of.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t root = uf.find(i);
    if (index_of_root[root] == kNone) {
      index_of_root[root] = out.representatives.size();
      out.representatives.push_back(out.spans[root]);
    }
    out.class_of[i] = index_of_root[root];
  }
  return out;
}

Span compose_spans(const MorphismClass& r, const Span& s1, const Span& s2) {
  const auto& c = *r.category;
  if (c.tgt(s1.right) != c.tgt(s2.left))
    throw Error(ErrorKind::InvalidInput, "spans " + span_label(c, s1) + " and " + span_label(c, s2) + " do not meet");
  std::optional<Pullback> p;
  if (r.oracle) p = r.oracle->find(s1.right, s2.left);
  if (!p) throw Error(ErrorKind::OracleMissing, pair_name(c, s1.right, s2.left));
  Span out{p->apex, c.comp(p->p1, s1.left), c.comp(p->p2, s2.right)};
  if (!r.contains(out.left)) invalid("composite left leg " + c.morphism_name(out.left) + " outside the class");
  return out;
}

Span identity_span(const FiniteCategory& c, std::size_t x) { return {x, c.id(x), c.id(x)}; }

std::optional<HomotopyWitness> r_homotopy_witness(const MorphismClass& r, MorphismId f, MorphismId f2) {
  const auto& c = *r.category;
  const std::size_t x = c.src(f), y = c.tgt(f);
  if (c.src(f2) != x || c.tgt(f2) != y)
    throw Error(ErrorKind::InvalidInput, pair_name(c, f, f2) + " are not parallel");
  for (MorphismId rr : c.morphisms_into(x)) {
    if (!r.contains(rr)) continue;
    const std::size_t v = c.src(rr);
    std::vector<MorphismId> sections;
    for (MorphismId t : c.hom(x, v))
      if (c.comp(t, rr) == c.id(x)) sections.push_back(t);
    for (MorphismId t : sections)
      for (MorphismId t2 : sections)
        for (MorphismId g : c.hom(v, y))
          if (c.comp(t, g) == f && c.comp(t2, g) == f2) return HomotopyWitness{rr, t, t2, g};
  }
  return std::nullopt;
}

bool r_homotopic(const MorphismClass& r, MorphismId f, MorphismId f2) {
  return r_homotopy_witness(r, f, f2).has_value();
}

std::vector<std::vector<MorphismId>> homotopy_classes(const MorphismClass& r, std::size_t x, std::size_t y) {
  const auto& hom = r.category->hom(x, y);
  detail::UnionFind uf(hom.size());
  for (std::size_t i = 0; i < hom.size(); ++i)
    for (std::size_t j = i + 1; j < hom.size(); ++j)
      if (r_homotopic(r, hom[i], hom[j])) uf.unite(i, j);
  std::vector<std::vector<MorphismId>> out;
  std::vector<std::size_t> slot(hom.size(), kNone);
  for (std::size_t i = 0; i < hom.size(); ++i) {
    std::size_t root = uf.find(i);
    if (slot[root] == kNone) {
      slot[root] = out.size();
      out.emplace_back();
    }
    out[slot[root]].push_back(hom[i]);
  }
  return out;
}

ZigzagReport zigzag_check(const MorphismClass& r, std::size_t x, std::size_t y) {
  const auto& c = *r.category;
  for (MorphismId rr : c.morphisms_into(x)) {
    if (!r.contains(rr)) continue;
    bool has_section = false;
    for (MorphismId t : c.hom(x, c.src(rr)))
      if (c.comp(t, rr) == c.id(x)) has_section = true;
    if (!has_section) throw Error(ErrorKind::HypothesisFails, c.morphism_name(rr));
  }

  ZigzagReport rep;
  auto classes = homotopy_classes(r, x, y);
  SpanClasses spans = span_pi0(r, x, y);
  rep.hom_size = c.hom(x, y).size();
  rep.homotopy_classes = classes.size();
  rep.span_classes = spans.size();
  rep.well_defined = Verdict::pass("well-defined");
  rep.injective = Verdict::pass("injective");
  rep.surjective = Verdict::pass("surjective");

  std::vector<std::size_t> image;
  std::vector<char> hit(spans.size(), 0);
  for (const auto& cls : classes) {
    std::size_t k = spans.class_index({x, c.id(x), cls.front()});
    for (MorphismId f : cls)
      if (spans.class_index({x, c.id(x), f}) != k && rep.well_defined.ok)
        rep.well_defined = Verdict::fail("well-defined", c.morphism_name(cls.front()) + " vs " + c.morphism_name(f));
    for (std::size_t j = 0; j < image.size(); ++j)
      if (image[j] == k && rep.injective.ok)
        rep.injective =
            Verdict::fail("injective", c.morphism_name(classes[j].front()) + " vs " + c.morphism_name(cls.front()));
    image.push_back(k);
    hit[k] = 1;
  }
  for (std::size_t k = 0; k < hit.size(); ++k)
    if (!hit[k]) {
      rep.surjective = Verdict::fail("surjective", span_label(c, spans.representatives[k]));
      break;
    }
  return rep;
}

Span theta_span(const MorphismClass& r, MorphismId f, MorphismId phi_x, MorphismId phi_y) {
  const auto& c = *r.category;
  if (!r.contains(phi_x)) invalid(c.morphism_name(phi_x) + " outside the class");
  if (!r.contains(phi_y)) invalid(c.morphism_name(phi_y) + " outside the class");
  if (c.tgt(phi_x) != c.src(f) || c.tgt(phi_y) != c.tgt(f))
    throw Error(ErrorKind::InvalidInput, "covers do not match " + c.morphism_name(f));
  const MorphismId h = c.comp(phi_x, f);
  std::optional<Pullback> p;
  if (r.oracle) p = r.oracle->find(h, phi_y);
  if (!p) throw Error(ErrorKind::OracleMissing, pair_name(c, h, phi_y));
  if (!r.contains(p->p1)) invalid("base extension " + c.morphism_name(p->p1) + " outside the class");
  return {p->apex, p->p1, p->p2};
}

}  // namespace nervekit
