#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nervekit/simplicial.hpp"

namespace nervekit {

/// Letters: +k is generator k-1, -k its inverse. Words read left to right.
using Word = std::vector<int>;

struct GroupPresentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;

  /// "<a, b | a a, a b a^-1 b^-1>"
  std::string to_string() const;
};

/// Edge-path group of one component. The edge e runs from d1(e) to d0(e).
struct Pi1Presentation {
  GroupPresentation group;
  std::size_t basepoint = 0;
  std::vector<std::size_t> vertices;        // component, BFS order
  std::vector<std::size_t> generator_edge;  // 1-simplex id per generator
  std::vector<char> is_tree;                // per generator
  std::vector<std::size_t> parent;          // per vertex id: generator reaching it, kNone otherwise
};

/// Generators are the nondegenerate edges of the basepoint's component; tree
/// edges of a BFS over sorted ids are killed, and each nondegenerate
/// 2-simplex gives d2 . d0 = d1 (degenerate faces read as the identity).
Pi1Presentation pi1_presentation(const TruncatedSimplicialSet& s, std::size_t basepoint);

struct CosetEnumeration {
  bool completed = false;
  std::size_t index = 0;    // live cosets at the end
  std::size_t defined = 0;  // cosets ever defined
};

/// HLT Todd-Coxeter enumeration of the cosets of <subgroup>. Stops once
/// `budget` cosets have been defined.
CosetEnumeration enumerate_cosets(const GroupPresentation& p, const std::vector<Word>& subgroup,
                                  std::size_t budget = 10000);

AbelianGroup abelianization(const GroupPresentation& p);

struct Pi1IsoReport {
  Pi1Presentation presentation;
  std::size_t vertex_group_order = 0;
  bool relations_hold = false;
  bool surjective = false;
  bool injectivity_tested = false;
  std::optional<std::size_t> presentation_order;
  bool isomorphic = false;
  std::string status;
  Verdict verdict;
};

/// Compares the edge-path group of nerve(g, 2) at x with the vertex group,
/// sending an edge a : u -> v to path(x,u) a path(x,v)^-1.
Pi1IsoReport pi1_iso_check(const FiniteGroupoid& g, ObjectId x, std::size_t budget = 10000);

}  // namespace nervekit
