#include "nervekit/special.hpp"

#include <set>
#include <tuple>

namespace nervekit {

void validate_groupoid_diagram(const GroupoidDiagram& d) {
  const auto& c = *d.shape;
  auto fail = [](std::string w) { throw Error(ErrorKind::NotFunctorial, std::move(w)); };
  if (d.objects.size() != c.num_objects() || d.arrows.size() != c.num_morphisms())
    throw Error(ErrorKind::InvalidInput, "diagram does not cover its shape");
  for (MorphismId f = 0; f < c.num_morphisms(); ++f)
    if (!same_groupoid(d.arrows[f].source, d.objects[c.src(f)]) ||
        !same_groupoid(d.arrows[f].target, d.objects[c.tgt(f)]))
      fail("endpoints of " + c.morphism_name(f));
  for (std::size_t x = 0; x < c.num_objects(); ++x)
    if (!same_functor(d.arrows[c.id(x)], identity_functor(d.objects[x]))) fail("identity of " + c.object_name(x));
  for (MorphismId f = 0; f < c.num_morphisms(); ++f)
    for (MorphismId g : c.morphisms_from(c.tgt(f)))
      if (!same_functor(compose(d.arrows[f], d.arrows[g]), d.arrows[c.comp(f, g)]))
        fail("composite " + c.morphism_name(f) + " then " + c.morphism_name(g));
}

std::size_t final_object(const FiniteCategory& c) {
  for (std::size_t t = 0; t < c.num_objects(); ++t) {
    bool final = true;
    for (std::size_t x = 0; x < c.num_objects() && final; ++x) final = c.hom(x, t).size() == 1;
    if (final) return t;
  }
  throw Error(ErrorKind::NoFinalObject, "no object receives exactly one morphism from every object");
}

const char* label_name(ArrowLabel l) {
  switch (l) {
    case ArrowLabel::InjectiveOnObjects: return "injective_on_objects";
    case ArrowLabel::Faithful: return "faithful";
    case ArrowLabel::WeakEquivalence: return "weak_equivalence";
  }
  return "";
}

bool has_label(const GroupoidFunctor& f, ArrowLabel l) {
  switch (l) {
    case ArrowLabel::InjectiveOnObjects:
      return std::set<ObjectId>(f.obj_map.begin(), f.obj_map.end()).size() == f.obj_map.size();
    case ArrowLabel::Faithful: {
      std::set<std::tuple<ObjectId, ObjectId, ArrowId>> images;
      const auto& s = *f.source;
      for (ArrowId a = 0; a < s.num_arrows(); ++a)
        if (!images.insert({s.src(a), s.tgt(a), f.arr_map[a]}).second) return false;
      return true;
    }
    case ArrowLabel::WeakEquivalence:
      return is_weak_equivalence(f);
  }
  return false;
}

bool SpecialDiagram::ok() const {
  for (const auto& v : naturality)
    if (!v) return false;
  for (const auto& v : labels)
    if (!v) return false;
  return true;
}

SpecialDiagram diagram_special(const GroupoidDiagram& p, const GroupoidFunctor& cover) {
  validate_groupoid_diagram(p);
  const auto& c = *p.shape;
  SpecialDiagram out;
  out.final = final_object(c);
  if (!same_groupoid(cover.target, p.objects[out.final]))
    throw Error(ErrorKind::InvalidInput, "cover does not land in P(" + c.object_name(out.final) + ")");

  out.diagram.shape = p.shape;
  for (std::size_t d = 0; d < c.num_objects(); ++d) {
    MorphismId to_final = c.hom(d, out.final).front();
    out.fibers.push_back(fiber_product_2(p.arrows[to_final], cover));
    out.diagram.objects.push_back(out.fibers.back().groupoid);
    out.transformation.push_back(out.fibers.back().proj1);
  }
  for (MorphismId f = 0; f < c.num_morphisms(); ++f) {
    const IsoComma& a = out.fibers[c.src(f)];
    const IsoComma& b = out.fibers[c.tgt(f)];
    const GroupoidFunctor& pf = p.arrows[f];
    std::vector<ObjectId> obj;
    for (const auto& [g, h, k] : a.object_triples) obj.push_back(b.find(pf.on_object(g), h, k));
    std::vector<ArrowId> arr;
    for (const auto& [o, x, y] : a.arrow_data) arr.push_back(b.find_arrow(obj[o], pf.on_arrow(x), y));
    out.diagram.arrows.push_back(validate_functor(a.groupoid, b.groupoid, std::move(obj), std::move(arr)));
  }
  for (MorphismId f = 0; f < c.num_morphisms(); ++f) {
    bool commutes = same_functor(compose(out.diagram.arrows[f], out.transformation[c.tgt(f)]),
                                 compose(out.transformation[c.src(f)], p.arrows[f]));
    out.naturality.push_back(commutes ? Verdict::pass("natural at " + c.morphism_name(f))
                                      : Verdict::fail("natural at " + c.morphism_name(f), c.morphism_name(f)));
    for (ArrowLabel l : {ArrowLabel::InjectiveOnObjects, ArrowLabel::Faithful, ArrowLabel::WeakEquivalence}) {
      if (!has_label(p.arrows[f], l)) continue;
      std::string name = std::string(label_name(l)) + " on " + c.morphism_name(f);
      out.labels.push_back(has_label(out.diagram.arrows[f], l) ? Verdict::pass(name)
                                                               : Verdict::fail(name, c.morphism_name(f)));
    }
  }
  validate_groupoid_diagram(out.diagram);
  return out;
}

}  // namespace nervekit
