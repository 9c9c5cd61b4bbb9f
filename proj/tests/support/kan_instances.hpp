#pragma once

#include <map>
#include <string>
#include <vector>

#include "nervekit/kan.hpp"

namespace support {

struct KanInstance {
  std::string name;
  nervekit::IndexedCategory ic;
  nervekit::CategoryFunctor p;  // D -> base
  nervekit::CategoryFunctor f;  // E -> D
  nervekit::Lift lift;          // over f then p
  std::vector<nervekit::Lift> qs;  // test lifts over p
  bool complete = true;
};

/// Lift from element names and, per non-identity morphism, image indices.
nervekit::Lift make_lift(const nervekit::IndexedCategory& ic, const nervekit::CategoryFunctor& over,
                         const std::map<std::string, std::vector<std::string>>& sets,
                         const std::map<std::string, std::vector<std::size_t>>& maps);

/// D = E = 0 -> 1, base the same, pullback along 0<1 is X |-> X^2, F = id.
KanInstance kan_identity_power();
/// D = {t <= a, t <= b}, E = {a, b} discrete, trivial fibers.
KanInstance kan_discrete_product();
/// D = 0 -> 1 with X |-> X^2, E = {1}.
KanInstance kan_chain_inclusion();
/// As kan_discrete_product, but all of D sits over 1 in 0 -> 1 and pulling
/// back along 0<1 is X |-> X x {s0, s1}, which does not preserve products.
KanInstance kan_negative_global();

std::vector<KanInstance> kan_zoo();

}  // namespace support
