#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nervekit/groupoid.hpp"

namespace nervekit {

/// A finite set W with an indexed family of subsets covering it. W is
/// discrete, so every subset counts as open.
struct CoveredSpace {
  std::vector<std::string> points;
  std::vector<std::string> index_names;
  std::vector<std::vector<char>> member;  // member[i][w]

  std::size_t num_points() const { return points.size(); }
  std::size_t num_sets() const { return index_names.size(); }
  bool contains(std::size_t i, std::size_t w) const { return member[i][w] != 0; }
  std::string point_name(std::size_t w) const { return points[w]; }
};

/// Throws InvalidInput on unknown or duplicate names, or if the sets miss a point.
CoveredSpace make_cover(std::vector<std::string> points,
                        const std::vector<std::pair<std::string, std::vector<std::string>>>& sets);

/// a_i : U_i -> X and g_ij : U_i n U_j -> R. Entries outside the relevant
/// subsets are kNone.
struct Cocycle {
  GroupoidHandle target;
  CoveredSpace cover;
  std::vector<std::vector<ObjectId>> a;                 // a[i][w]
  std::vector<std::vector<std::vector<ArrowId>>> gamma;  // gamma[i][j][w]

  /// Empty data of the right shape.
  static Cocycle blank(GroupoidHandle target, CoveredSpace cover);
};

/// Source/target compatibility (C1) and g_ij g_jk = g_ik (C2), pointwise.
/// Throws C1Violation or C2Violation naming (w, i, j[, k]).
Cocycle validate_cocycle(Cocycle c);
Verdict cocycle_verdict(const Cocycle& c);

/// A torsor over W with its trivialization. delta is defined on pairs in
/// the same fiber and is kNone elsewhere.
struct Torsor {
  GroupoidHandle target;
  CoveredSpace cover;
  std::vector<std::string> elements;
  std::vector<std::size_t> p;                  // T -> W
  std::vector<ObjectId> f;                     // T -> X
  std::vector<std::vector<ArrowId>> delta;     // delta[u][v]
  std::vector<std::vector<std::size_t>> sigma;  // sigma[i][w]
  /// (chart i, point w, arrow) -> element, for torsors glued from charts.
  std::map<std::array<std::size_t, 3>, std::size_t> chart_points;

  std::size_t size() const { return elements.size(); }
  std::vector<std::size_t> fiber(std::size_t w) const;
};

/// Sections, delta endpoints, unit, composition and cartesianness.
std::vector<Verdict> torsor_verdicts(const Torsor& t);
/// Throws TorsorViolation on the first failing invariant.
void validate_torsor(const Torsor& t);

/// Glues the charts U_i x_{a_i, X, src} R along (w, a_i) ~ (w, a_j) when
/// a_i = g_ij(w) a_j; representatives are least in (w, chart, arrow) order.
Torsor cocycle_to_torsor(const Cocycle& c);

/// a_i = f(sigma_i), g_ij = delta(sigma_i, sigma_j).
Cocycle torsor_to_cocycle(const Torsor& t);

/// d_ik : U_i n U'_k -> R from a cocycle c to a cocycle c' on the same W.
struct CocycleMorphism {
  std::vector<std::vector<std::vector<ArrowId>>> delta;  // delta[i][k][w]
};

/// M1: src d_ik = a_i and tgt d_ik = a'_k. M2: d_ik g'_kl = d_il and
/// g_ij d_jk = d_ik on the triple overlaps.
Verdict check_cocycle_morphism(const Cocycle& c, const Cocycle& c2, const CocycleMorphism& d);

/// Identity morphism c -> c, d_ik = g_ik.
CocycleMorphism identity_morphism(const Cocycle& c);

/// Morphism from torsor_to_cocycle(t) to c, read off the torsor:
/// d_ik(w) = delta(sigma_i(w), sigma_k(w)), with t built from c.
CocycleMorphism roundtrip_morphism(const Torsor& t);

/// Exhaustive pointwise search; throws BudgetExceeded after `budget` nodes.
std::optional<CocycleMorphism> find_cocycle_morphism(const Cocycle& c, const Cocycle& c2, std::size_t budget = 1000000);

/// T -> T' sending [w, a] in chart i to [w, inv(d_ik(w)) a] in chart k.
std::vector<std::size_t> torsor_map_from_morphism(const Torsor& t, const Torsor& t2, const CocycleMorphism& d);

/// Over W, bijective, and preserving f and delta.
Verdict check_torsor_isomorphism(const Torsor& t, const Torsor& t2, const std::vector<std::size_t>& map);

/// Fiberwise backtracking search for an isomorphism; throws BudgetExceeded
/// after `budget` nodes.
std::optional<std::vector<std::size_t>> find_torsor_isomorphism(const Torsor& t, const Torsor& t2,
                                                                 std::size_t budget = 1000000);
bool torsor_isomorphic(const Torsor& t, const Torsor& t2, std::size_t budget = 1000000);

}  // namespace nervekit
