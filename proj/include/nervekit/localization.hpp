#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nervekit/category.hpp"

namespace nervekit {

/// A chosen pullback of (f: a -> c, g: b -> c): p1: P -> a, p2: P -> b with
/// p1 then f = p2 then g.
struct Pullback {
  std::size_t apex = kNone;
  MorphismId p1 = kNone;
  MorphismId p2 = kNone;

  auto operator<=>(const Pullback&) const = default;
};

class PullbackOracle {
 public:
  PullbackOracle() = default;

  void set(MorphismId f, MorphismId g, Pullback p) { table_[{f, g}] = p; }
  std::optional<Pullback> find(MorphismId f, MorphismId g) const;
  const std::map<std::pair<MorphismId, MorphismId>, Pullback>& table() const { return table_; }

  /// Every cospan that has a pullback gets the least one in (apex, p1, p2)
  /// order, or the greatest when `greatest` is set.
  static PullbackOracle by_enumeration(const FiniteCategory& c, bool greatest = false);

 private:
  std::map<std::pair<MorphismId, MorphismId>, Pullback> table_;
};

/// True iff p is a pullback of (f, g), by enumerating all cones.
bool is_pullback(const FiniteCategory& c, MorphismId f, MorphismId g, const Pullback& p);

struct MorphismClass {
  CategoryHandle category;
  std::vector<char> member;
  std::optional<PullbackOracle> oracle;

  bool contains(MorphismId f) const { return member[f] != 0; }
  std::vector<MorphismId> members() const;
};

/// Checks identities, composition closure and, with an oracle, that it has
/// an entry (g, r) for every member r and every g into tgt(r), that each
/// entry is a pullback, and that base extensions of members are members.
/// Throws InvalidClass.
MorphismClass make_class(CategoryHandle c, const std::vector<MorphismId>& members,
                         std::optional<PullbackOracle> oracle = std::nullopt);
Verdict class_verdict(const MorphismClass& r);

/// Identities plus all composites of the generators.
std::vector<MorphismId> composition_closure(const FiniteCategory& c, const std::vector<MorphismId>& generators);

MorphismClass identities_class(CategoryHandle c);
MorphismClass all_morphisms_class(CategoryHandle c, std::optional<PullbackOracle> oracle = std::nullopt);

/// X <- V -> Y with left leg in R.
struct Span {
  std::size_t apex = kNone;
  MorphismId left = kNone;
  MorphismId right = kNone;

  auto operator<=>(const Span&) const = default;
};

std::string span_label(const FiniteCategory& c, const Span& s);

struct SpanClasses {
  std::size_t from = kNone;
  std::size_t to = kNone;
  std::vector<Span> spans;                // sorted
  std::vector<std::size_t> class_of;      // class index per span
  std::vector<Span> representatives;      // least member per class

  std::size_t size() const { return representatives.size(); }
  /// Class index of a span X -> Y; kNone if it is not one.
  std::size_t class_index(const Span& s) const;
};

/// pi_0 of the category of spans from X to Y. Throws InvalidClass if R
/// fails validation.
SpanClasses span_pi0(const MorphismClass& r, std::size_t x, std::size_t y);

/// (P, p1 then r1, p2 then g2) with P the oracle's pullback of (g1, r2).
/// Throws OracleMissing.
Span compose_spans(const MorphismClass& r, const Span& s1, const Span& s2);
Span identity_span(const FiniteCategory& c, std::size_t x);

/// Data V, r: V -> X in R, sections t, t2 of r and g: V -> Y with
/// t then g = f and t2 then g = f2.
struct HomotopyWitness {
  MorphismId r = kNone;
  MorphismId t = kNone;
  MorphismId t2 = kNone;
  MorphismId g = kNone;
};

/// One elementary homotopy, found by exhaustive search in sorted order.
std::optional<HomotopyWitness> r_homotopy_witness(const MorphismClass& r, MorphismId f, MorphismId f2);
bool r_homotopic(const MorphismClass& r, MorphismId f, MorphismId f2);

/// Components of Hom(X, Y) under the equivalence generated by r_homotopic.
std::vector<std::vector<MorphismId>> homotopy_classes(const MorphismClass& r, std::size_t x, std::size_t y);

struct ZigzagReport {
  std::size_t hom_size = 0;
  std::size_t homotopy_classes = 0;
  std::size_t span_classes = 0;
  Verdict well_defined;
  Verdict injective;
  Verdict surjective;

  bool ok() const { return well_defined.ok && injective.ok && surjective.ok; }
  std::vector<Verdict> verdicts() const { return {well_defined, injective, surjective}; }
};

/// Throws HypothesisFails naming an r in R into X without a section.
ZigzagReport zigzag_check(const MorphismClass& r, std::size_t x, std::size_t y);

/// The span (p1, p2) from the pullback of (phi_x then f, phi_y). Throws
/// InvalidClass if phi_x, phi_y or p1 is outside R, OracleMissing if the
/// pullback is absent.
Span theta_span(const MorphismClass& r, MorphismId f, MorphismId phi_x, MorphismId phi_y);

}  // namespace nervekit
