#include <doctest.h>

#include <algorithm>
#include <functional>
#include <set>

#include "nervekit/localization.hpp"
#include "support/categories.hpp"

using namespace nervekit;
using support::mor;
using support::obj;

namespace {

// Components of the span graph by depth-first search over explicitly listed
// spans, without the library's enumeration or union-find.
std::size_t span_components_by_dfs(const MorphismClass& r, std::size_t x, std::size_t y) {
  const auto& c = *r.category;
  std::vector<Span> spans;
  for (MorphismId f = 0; f < c.num_morphisms(); ++f) {
    if (!r.contains(f) || c.tgt(f) != x) continue;
    for (MorphismId g = 0; g < c.num_morphisms(); ++g)
      if (c.src(g) == c.src(f) && c.tgt(g) == y) spans.push_back({c.src(f), f, g});
  }
  auto linked = [&](const Span& s, const Span& t) {
    for (MorphismId u = 0; u < c.num_morphisms(); ++u)
      if (c.src(u) == s.apex && c.tgt(u) == t.apex && c.comp(u, t.left) == s.left && c.comp(u, t.right) == s.right)
        return true;
    return false;
  };
  std::vector<char> seen(spans.size(), 0);
  std::size_t components = 0;
  for (std::size_t i = 0; i < spans.size(); ++i) {
    if (seen[i]) continue;
    ++components;
    std::vector<std::size_t> stack{i};
    seen[i] = 1;
    while (!stack.empty()) {
      std::size_t a = stack.back();
      stack.pop_back();
      for (std::size_t b = 0; b < spans.size(); ++b)
        if (!seen[b] && (linked(spans[a], spans[b]) || linked(spans[b], spans[a]))) {
          seen[b] = 1;
          stack.push_back(b);
        }
    }
  }
  return components;
}

bool same_class(const MorphismClass& r, const Span& a, const Span& b) {
  const auto& c = *r.category;
  auto classes = span_pi0(r, c.tgt(a.left), c.tgt(a.right));
  return classes.class_index(a) == classes.class_index(b);
}

}  // namespace

TEST_CASE("categories: builders satisfy the axioms") {
  auto fin = finset_category({{"0", 0}, {"1", 1}, {"2", 2}});
  CHECK(fin->num_morphisms() == 11);
  CHECK(fin->hom(support::obj(*fin, "2"), support::obj(*fin, "0")).empty());
  auto z = support::zigzag3().r.category;
  CHECK(z->hom(obj(*z, "X"), obj(*z, "Y")).size() == 2);
  CHECK(z->hom(obj(*z, "V"), obj(*z, "V")).size() == 3);
  auto p = poset_category({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
  CHECK(p->find_morphism("a<c").has_value());
}

TEST_CASE("categories: broken tables are rejected") {
  auto c = poset_category({"0", "1"}, {{"0", "1"}});
  CategoryTables t = c->tables();
  t.comp[0] = 1;
  CHECK_THROWS_AS(make_category(t), Error);
  t = c->tables();
  t.identity[0] = 7;
  try {
    make_category(t);
    FAIL("expected DanglingId");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DanglingId);
  }
}

TEST_CASE("categories: functor validation") {
  auto c = poset_category({"0", "1"}, {{"0", "1"}});
  CHECK_NOTHROW(validate_category_functor(c, c, {0, 1}, {0, 1, 2}));
  try {
    validate_category_functor(c, c, {1, 0}, {0, 1, 2});
    FAIL("expected NotFunctorial");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotFunctorial);
  }
}

TEST_CASE("classes: validation") {
  auto inst = support::chain2();
  auto c = inst.r.category;
  try {
    make_class(c, {mor(*c, "0<1")});
    FAIL("expected InvalidClass");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidClass);
    CHECK(e.witness().find("identity") != std::string::npos);
  }
  auto fin = support::finset_injections().r.category;
  auto closure = composition_closure(*fin, {mor(*fin, "1->2:[0]")});
  CHECK(closure.size() == 4);
  // The class {ids, 1->2:[0]} is not stable under base extension along the swap.
  PullbackOracle o = PullbackOracle::by_enumeration(*fin);
  try {
    make_class(fin, closure, o);
    FAIL("expected InvalidClass");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidClass);
    CHECK(e.witness().find("base extension") != std::string::npos);
  }
}

TEST_CASE("pullback oracle entries satisfy the universal property") {
  for (const auto& inst : support::localization_zoo()) {
    if (!inst.r.oracle) continue;
    CAPTURE(inst.name);
    const auto& c = *inst.r.category;
    for (const auto& [key, p] : inst.r.oracle->table()) CHECK(is_pullback(c, key.first, key.second, p));
  }
  auto fin = support::finset_isos().r.category;
  // 2 x_1 2 has four points, which this category lacks.
  CHECK_FALSE(PullbackOracle::by_enumeration(*fin).find(mor(*fin, "2->1:[0,0]"), mor(*fin, "2->1:[0,0]")));
}

TEST_CASE("span_pi0: identities class recovers Hom") {
  for (const auto& inst : support::localization_zoo()) {
    CAPTURE(inst.name);
    auto ids = identities_class(inst.r.category);
    const auto& c = *ids.category;
    for (std::size_t x = 0; x < c.num_objects(); ++x)
      for (std::size_t y = 0; y < c.num_objects(); ++y) {
        auto classes = span_pi0(ids, x, y);
        REQUIRE(classes.size() == c.hom(x, y).size());
        for (std::size_t k = 0; k < classes.size(); ++k) {
          CHECK(classes.representatives[k].left == c.id(x));
          CHECK(classes.representatives[k].right == c.hom(x, y)[k]);
        }
      }
  }
}

TEST_CASE("span_pi0: inverting 0 -> 1 creates a morphism 1 -> 0") {
  auto inst = support::chain2();
  const auto& c = *inst.r.category;
  auto classes = span_pi0(inst.r, obj(c, "1"), obj(c, "0"));
  REQUIRE(classes.spans.size() == 1);
  REQUIRE(classes.size() == 1);
  CHECK(classes.representatives[0] == Span{obj(c, "0"), mor(c, "0<1"), mor(c, "id_0")});
  CHECK(c.hom(obj(c, "1"), obj(c, "0")).empty());
  // 1 -> 1: the spans (id, id) and (0<1, 0<1) are connected by 0<1.
  CHECK(span_pi0(inst.r, obj(c, "1"), obj(c, "1")).size() == 1);
}

TEST_CASE("span_pi0: no spans gives the empty set") {
  auto inst = support::cylinder5();
  const auto& c = *inst.r.category;
  CHECK(span_pi0(inst.r, obj(c, "B"), obj(c, "X")).size() == 0);
}

TEST_CASE("span_pi0 agrees with a depth-first component count") {
  for (const auto& inst : support::localization_zoo()) {
    CAPTURE(inst.name);
    const auto& c = *inst.r.category;
    for (std::size_t x = 0; x < c.num_objects(); ++x)
      for (std::size_t y = 0; y < c.num_objects(); ++y) {
        auto classes = span_pi0(inst.r, x, y);
        CHECK(classes.size() == span_components_by_dfs(inst.r, x, y));
        for (std::size_t i = 0; i < classes.spans.size(); ++i)
          CHECK(classes.representatives[classes.class_of[i]] <= classes.spans[i]);
      }
  }
}

TEST_CASE("compose_spans: identity spans are units") {
  for (const auto& inst : support::localization_zoo()) {
    if (!inst.r.oracle) continue;
    CAPTURE(inst.name);
    const auto& c = *inst.r.category;
    for (std::size_t x = 0; x < c.num_objects(); ++x)
      for (std::size_t y = 0; y < c.num_objects(); ++y)
        for (const Span& s : span_pi0(inst.r, x, y).spans) {
          CHECK(same_class(inst.r, compose_spans(inst.r, identity_span(c, x), s), s));
          CHECK(same_class(inst.r, compose_spans(inst.r, s, identity_span(c, y)), s));
        }
  }
}

TEST_CASE("compose_spans: through the terminal object gives the product span") {
  auto inst = support::subsets2();
  const auto& c = *inst.r.category;
  // Independent oracle: objects as bitmasks, meet = intersection.
  const std::vector<std::pair<std::string, unsigned>> masks{{"e", 0}, {"1", 1}, {"2", 2}, {"12", 3}};
  auto name_of = [&](unsigned m) {
    for (const auto& [n, k] : masks)
      if (k == m) return n;
    return std::string();
  };
  const std::size_t t = obj(c, "12");
  for (const auto& [xn, xm] : masks)
    for (const auto& [yn, ym] : masks) {
      const std::size_t x = obj(c, xn), y = obj(c, yn);
      auto to_t = [&](std::size_t v) { return c.hom(v, t).front(); };
      Span s1{x, c.id(x), to_t(x)};
      Span s2{y, to_t(y), c.id(y)};
      Span s = compose_spans(inst.r, s1, s2);
      CHECK(c.object_name(s.apex) == name_of(xm & ym));
      CHECK(c.tgt(s.left) == x);
      CHECK(c.tgt(s.right) == y);
    }
}

TEST_CASE("compose_spans is associative up to class on the 4-chain") {
  auto inst = support::chain4();
  const auto& r = inst.r;
  const std::size_t n = r.category->num_objects();
  std::size_t checked = 0;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = 0; d < n; ++d)
          for (const Span& s1 : span_pi0(r, a, b).spans)
            for (const Span& s2 : span_pi0(r, b, c).spans)
              for (const Span& s3 : span_pi0(r, c, d).spans) {
                Span left = compose_spans(r, compose_spans(r, s1, s2), s3);
                Span right = compose_spans(r, s1, compose_spans(r, s2, s3));
                CHECK(same_class(r, left, right));
                ++checked;
              }
  CHECK(checked > 100);
}

TEST_CASE("compose_spans descends to classes and ignores the pullback choice") {
  for (const auto& inst : support::localization_zoo()) {
    if (!inst.r.oracle) continue;
    CAPTURE(inst.name);
    const auto& r = inst.r;
    const auto& c = *r.category;
    const std::size_t n = c.num_objects();
    std::size_t composed = 0, missing = 0;
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        auto sxy = span_pi0(r, x, y);
        for (std::size_t z = 0; z < n; ++z) {
          auto syz = span_pi0(r, y, z);
          auto sxz = span_pi0(r, x, z);
          for (std::size_t i = 0; i < sxy.spans.size(); ++i)
            for (std::size_t j = 0; j < syz.spans.size(); ++j) {
              const Span& s1 = sxy.spans[i];
              const Span& s2 = syz.spans[j];
              const Span& t1 = sxy.representatives[sxy.class_of[i]];
              const Span& t2 = syz.representatives[syz.class_of[j]];
              try {
                Span a = compose_spans(r, s1, s2);
                Span b = compose_spans(r, t1, t2);
                Span alt = compose_spans(*inst.r_alt, s1, s2);
                CHECK(sxz.class_index(a) == sxz.class_index(b));
                CHECK(sxz.class_index(a) == sxz.class_index(alt));
                ++composed;
              } catch (const Error& e) {
                REQUIRE(e.kind() == ErrorKind::OracleMissing);
                ++missing;
              }
            }
        }
      }
    CHECK(composed > 0);
    CHECK(missing == 0);
  }
}

TEST_CASE("r_homotopic") {
  auto inst = support::cylinder5();
  const auto& c = *inst.r.category;
  const MorphismId f = mor(c, "i0;h"), f2 = mor(c, "i1;h"), other = mor(c, "c");
  CHECK(r_homotopic(inst.r, f, f));
  auto w = r_homotopy_witness(inst.r, f, f2);
  REQUIRE(w.has_value());
  MESSAGE("witness r=" << c.morphism_name(w->r) << " t=" << c.morphism_name(w->t) << " t2="
                       << c.morphism_name(w->t2) << " g=" << c.morphism_name(w->g));
  CHECK(c.comp(w->t, w->r) == c.id(obj(c, "X")));
  CHECK(c.comp(w->t2, w->r) == c.id(obj(c, "X")));
  CHECK(c.comp(w->t, w->g) == f);
  CHECK(c.comp(w->t2, w->g) == f2);
  CHECK_FALSE(r_homotopic(inst.r, f, other));

  auto ids = identities_class(inst.r.category);
  for (std::size_t x = 0; x < c.num_objects(); ++x)
    for (std::size_t y = 0; y < c.num_objects(); ++y)
      for (MorphismId a : c.hom(x, y))
        for (MorphismId b : c.hom(x, y)) CHECK(r_homotopic(ids, a, b) == (a == b));
}

TEST_CASE("zigzag: two sections identify the induced maps") {
  auto inst = support::zigzag3();
  const auto& c = *inst.r.category;
  auto rep = zigzag_check(inst.r, obj(c, "X"), obj(c, "Y"));
  CHECK(rep.hom_size == 2);
  CHECK(rep.homotopy_classes == 1);
  CHECK(rep.span_classes == 1);
  CHECK(rep.span_classes == span_components_by_dfs(inst.r, obj(c, "X"), obj(c, "Y")));
  CHECK(rep.ok());
}

TEST_CASE("zigzag: identities class") {
  for (const auto& inst : support::localization_zoo()) {
    auto ids = identities_class(inst.r.category);
    const auto& c = *ids.category;
    for (std::size_t x = 0; x < c.num_objects(); ++x)
      for (std::size_t y = 0; y < c.num_objects(); ++y) {
        auto rep = zigzag_check(ids, x, y);
        CHECK(rep.ok());
        CHECK(rep.homotopy_classes == c.hom(x, y).size());
      }
  }
}

TEST_CASE("zigzag: sectionless r is rejected") {
  auto inst = support::chain2();
  const auto& c = *inst.r.category;
  try {
    zigzag_check(inst.r, obj(c, "1"), obj(c, "0"));
    FAIL("expected HypothesisFails");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::HypothesisFails);
    CHECK(e.witness() == "0<1");
  }
}

TEST_CASE("property: zigzag bijection wherever the hypothesis holds") {
  std::size_t applicable = 0;
  for (const auto& inst : support::localization_zoo()) {
    CAPTURE(inst.name);
    const auto& c = *inst.r.category;
    for (std::size_t x = 0; x < c.num_objects(); ++x)
      for (std::size_t y = 0; y < c.num_objects(); ++y) {
        try {
          auto rep = zigzag_check(inst.r, x, y);
          CHECK(rep.ok());
          ++applicable;
        } catch (const Error& e) {
          CHECK(e.kind() == ErrorKind::HypothesisFails);
        }
      }
  }
  CHECK(applicable > 10);
}

TEST_CASE("theta_span") {
  auto inst = support::finset_injections();
  const auto& r = inst.r;
  const auto& c = *r.category;
  const std::size_t s0 = obj(c, "0"), s1 = obj(c, "1"), s2 = obj(c, "2");

  SUBCASE("identity") {
    for (std::size_t x : {s0, s1, s2}) {
      Span t = theta_span(r, c.id(x), c.id(x), c.id(x));
      CHECK(same_class(r, t, identity_span(c, x)));
    }
    MorphismId phi = mor(c, "1->2:[0]");
    CHECK(same_class(r, theta_span(r, c.id(s2), phi, phi), identity_span(c, s1)));
  }

  SUBCASE("cover outside the class") {
    try {
      theta_span(r, c.id(s1), mor(c, "2->1:[0,0]"), c.id(s1));
      FAIL("expected InvalidClass");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::InvalidClass);
    }
  }

  SUBCASE("functoriality up to class on every composable pair") {
    // Two choices of covers: identities, and 2 covered by a point of it.
    const std::vector<std::vector<MorphismId>> covers{
        {c.id(s0), c.id(s1), c.id(s2)},
        {c.id(s0), c.id(s1), mor(c, "1->2:[1]")},
    };
    std::size_t pairs = 0;
    for (const auto& phi : covers) {
      for (MorphismId f = 0; f < c.num_morphisms(); ++f)
        for (MorphismId g : c.morphisms_from(c.tgt(f))) {
          Span tf = theta_span(r, f, phi[c.src(f)], phi[c.tgt(f)]);
          Span tg = theta_span(r, g, phi[c.src(g)], phi[c.tgt(g)]);
          Span tfg = theta_span(r, c.comp(f, g), phi[c.src(f)], phi[c.tgt(g)]);
          CHECK(same_class(r, compose_spans(r, tf, tg), tfg));
          ++pairs;
        }
    }
    // Composable pairs through 0, 1, 2: 1*3 + 3*3 + 7*5.
    CHECK(pairs == 2 * 47);
  }
}
