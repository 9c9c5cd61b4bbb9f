#pragma once

#include <string>
#include <vector>

#include "nervekit/localization.hpp"

namespace support {

struct LocalizationInstance {
  std::string name;
  nervekit::MorphismClass r;
  /// Same class with the other extreme choice of pullbacks, when an oracle exists.
  std::optional<nervekit::MorphismClass> r_alt;
};

/// 0 -> 1, R = everything.
LocalizationInstance chain2();
/// 0 -> 1 -> 2 -> 3, R = everything.
LocalizationInstance chain4();
/// Subsets of {1,2} under inclusion ("e", "1", "2", "12"), R = everything.
LocalizationInstance subsets2();
/// Sets of size 0, 1, 2 with all maps, R = injections.
LocalizationInstance finset_injections();
/// Sets of size 1, 2 with all maps, R = bijections.
LocalizationInstance finset_isos();
/// X = {*}, V = {0,1}, Y = {0,1}; r: V -> X with sections t, t2 and
/// g: V -> Y; R generated by r. V x_X V is missing, so there is no oracle.
LocalizationInstance zigzag3();
/// X, I, Y, A, B with r: I -> X, ends i0, i1, h: I -> Y and an extra c: X -> Y;
/// R generated by r, no oracle.
LocalizationInstance cylinder5();

std::vector<LocalizationInstance> localization_zoo();

nervekit::MorphismId mor(const nervekit::FiniteCategory& c, const std::string& name);
std::size_t obj(const nervekit::FiniteCategory& c, const std::string& name);

}  // namespace support
