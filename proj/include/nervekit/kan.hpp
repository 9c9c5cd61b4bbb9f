#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nervekit/category.hpp"

namespace nervekit {

/// A finite set with named elements.
struct FinSet {
  std::vector<std::string> elements;

  std::size_t size() const { return elements.size(); }
  std::size_t index_of(const std::string& e) const;
  bool operator==(const FinSet&) const = default;
};

struct SetMap {
  FinSet src;
  FinSet tgt;
  std::vector<std::size_t> map;

  bool operator==(const SetMap&) const = default;
};

SetMap identity_map(const FinSet& s);
/// a then b.
SetMap then(const SetMap& a, const SetMap& b);

/// Endofunctors of finite sets used as pullback functors.
struct SetOp {
  enum class Kind { Identity, Terminal, ProductWith, CoproductWith, Power };
  Kind kind = Kind::Identity;
  FinSet with;          // ProductWith, CoproductWith
  std::size_t power = 0;  // Power: X |-> X^n

  FinSet apply(const FinSet& x) const;
  SetMap apply(const SetMap& m) const;
  std::string describe() const;
};

/// Ops applied first to last.
using SetWord = std::vector<SetOp>;
FinSet apply(const SetWord& w, const FinSet& x);
SetMap apply(const SetWord& w, const SetMap& m);

/// Strict indexed category over a finite base whose fibers are finite sets.
/// pullback[f] is f^* for f : a -> b, taking sets over b to sets over a.
struct IndexedCategory {
  CategoryHandle base;
  std::vector<SetWord> pullback;

  FinSet pull(MorphismId f, const FinSet& x) const { return apply(pullback[f], x); }
  SetMap pull(MorphismId f, const SetMap& m) const { return apply(pullback[f], m); }
};

/// Identities act as identities and (f then g)^* = f^* after g^*, tested on
/// all sets of size at most 2 and all maps between them. Throws NotFunctorial.
IndexedCategory make_indexed_category(CategoryHandle base, std::vector<SetWord> pullback);
/// Every pullback functor is the identity.
IndexedCategory trivial_indexed_category(CategoryHandle base);

/// A strict lift P of `over` : shape -> base. maps[h] : P(e) -> over(h)^* P(e')
/// for h : e -> e'.
struct Lift {
  CategoryFunctor over;
  std::vector<FinSet> sets;
  std::vector<SetMap> maps;

  const FiniteCategory& shape() const { return *over.source; }
};

Verdict lift_verdict(const IndexedCategory& ic, const Lift& p);
/// Throws NotFunctorial.
void validate_lift(const IndexedCategory& ic, const Lift& p);

/// F^* Q = Q after F, a lift over F then p.
Lift restrict_lift(const CategoryFunctor& f, const Lift& q);

/// (d | F): objects (e, a : d -> F(e)) ordered by (e, a), morphisms the
/// h : e -> e' with a then F(h) = a'.
struct CommaCategory {
  CategoryHandle category;
  std::size_t d = kNone;
  std::vector<std::size_t> object_e;
  std::vector<MorphismId> object_alpha;
  std::vector<MorphismId> morphism_h;
};

/// Throws UnknownObject.
CommaCategory comma(std::size_t d, const CategoryFunctor& f);

/// A diagram of finite sets on a finite category.
struct SetDiagram {
  CategoryHandle shape;
  std::vector<FinSet> sets;
  std::vector<SetMap> maps;
};

/// The set of compatible families, named "(x1,x2,...)"; cones[k][i] is the
/// component at object i.
struct FinLimit {
  FinSet apex;
  std::vector<std::vector<std::size_t>> cones;

  SetMap projection(const SetDiagram& d, std::size_t i) const;
};

FinLimit finset_limit(const SetDiagram& d);

/// Whether candidate with the given projections is a limit of d.
bool is_limit(const SetDiagram& d, const FinSet& candidate, const std::vector<SetMap>& projections);

/// For every f : a -> b, f^*(lim d) is the limit of f^* d through the pulled
/// back projections. Throws NotALimit if the candidate is not a limit at b.
Verdict is_global_limit(const IndexedCategory& ic, std::size_t b, const SetDiagram& d, const FinSet& candidate,
                        const std::vector<SetMap>& projections);

struct RightKan {
  Lift lift;  // over p
  std::vector<CommaCategory> commas;
  std::vector<SetDiagram> psi;
  std::vector<FinLimit> limits;

  /// Counit at e: projection of RF(P)(F e) onto (e, id).
  SetMap counit(const CategoryFunctor& f, std::size_t e) const;
};

/// Pointwise right Kan extension of a lift P over F then p along F : E -> D.
/// Throws NotFComplete naming d and the base morphism where a limit is not
/// global.
RightKan right_kan(const IndexedCategory& ic, const CategoryFunctor& p, const CategoryFunctor& f, const Lift& lift);

/// Natural transformations between lifts over the same functor.
using LiftMorphism = std::vector<std::vector<std::size_t>>;  // component maps
std::vector<LiftMorphism> lift_morphisms(const IndexedCategory& ic, const Lift& from, const Lift& to,
                                         std::size_t budget = 1000000);

struct AdjunctionReport {
  std::size_t left_size = 0;   // Hom(F^* Q, P)
  std::size_t right_size = 0;  // Hom(Q, RF(P))
  Verdict verdict;
};

/// Matches Hom(Q, RF(P)) with Hom(F^* Q, P) through phi |-> F^*(phi) then
/// counit. A failed match carries a BijectionFailure witness.
AdjunctionReport adjunction_check(const IndexedCategory& ic, const CategoryFunctor& f, const Lift& p, const Lift& q,
                                  const RightKan& rk);

}  // namespace nervekit
