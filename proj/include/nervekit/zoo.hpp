#pragma once

// Standard small groupoids and functors used by tests, examples and the CLI.

#include <string>
#include <vector>

#include "nervekit/groupoid.hpp"

namespace nervekit::zoo {

GroupoidHandle point();

/// One-object groupoid from a multiplication table; mult[a][b] is "a then b".
GroupoidHandle group(const std::vector<std::string>& elements,
                     const std::vector<std::vector<std::size_t>>& mult, std::string object = "*");

/// Z/n with elements e, g, g2, ..., g{n-1}.
GroupoidHandle cyclic_group(std::size_t n);

/// S_n on {1..n}; elements are images in one-line notation ("213"),
/// composed diagrammatically: (s then t)(i) = t(s(i)).
GroupoidHandle symmetric_group(std::size_t n);

/// Exactly one arrow between any two objects.
GroupoidHandle pair_groupoid(const std::vector<std::string>& objects);

GroupoidHandle disjoint_union(const FiniteGroupoid& a, const FiniteGroupoid& b);
GroupoidHandle product(const FiniteGroupoid& a, const FiniteGroupoid& b);

/// A group acting on itself by right multiplication.
GroupoidHandle regular_action(const FiniteGroupoid& group);

/// S_n acting on {1..n} by x.s = s(x).
GroupoidHandle permutation_action(std::size_t n);

/// pt -> G picking out x.
GroupoidFunctor object_inclusion(const GroupoidHandle& g, ObjectId x);

/// vertex_group(G, x) -> G.
GroupoidFunctor vertex_inclusion(const GroupoidHandle& g, ObjectId x);

/// The functor to the point.
GroupoidFunctor to_point(const GroupoidHandle& g, const GroupoidHandle& pt);

/// [X x G => X] -> G, (x, g) |-> g, for a groupoid made by action_groupoid.
GroupoidFunctor action_to_group(const GroupoidHandle& action, const GroupoidHandle& group);

}  // namespace nervekit::zoo
