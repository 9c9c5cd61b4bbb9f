#pragma once

#include <vector>

#include "nervekit/category.hpp"
#include "nervekit/groupoid.hpp"

namespace nervekit {

/// A strict functor from a finite category to finite groupoids.
struct GroupoidDiagram {
  CategoryHandle shape;
  std::vector<GroupoidHandle> objects;
  std::vector<GroupoidFunctor> arrows;
};

/// Throws NotFunctorial.
void validate_groupoid_diagram(const GroupoidDiagram& d);

/// The least object every object maps to uniquely; throws NoFinalObject.
std::size_t final_object(const FiniteCategory& c);

enum class ArrowLabel { InjectiveOnObjects, Faithful, WeakEquivalence };
const char* label_name(ArrowLabel l);
bool has_label(const GroupoidFunctor& f, ArrowLabel l);

struct SpecialDiagram {
  std::size_t final = kNone;
  GroupoidDiagram diagram;                       // d |-> X_d
  std::vector<GroupoidFunctor> transformation;   // X_d -> P(d)
  std::vector<IsoComma> fibers;
  std::vector<Verdict> naturality;               // one per arrow of the shape
  std::vector<Verdict> labels;                   // one per (arrow, label) held by P

  bool ok() const;
};

/// X_d is the 2-fiber product of P(d -> final) with the cover, and arrows act
/// on the first coordinate.
SpecialDiagram diagram_special(const GroupoidDiagram& p, const GroupoidFunctor& cover);

}  // namespace nervekit
