#pragma once

#include <utility>
#include <vector>

#include "nervekit/groupoid.hpp"
#include "nervekit/simplicial.hpp"

namespace nervekit {

/// ((i0, a0), ..., (ik, ak)) with i0 < ... < ik and a common source.
using MilnorSimplex = std::vector<std::pair<std::size_t, ArrowId>>;

SimplexKey milnor_key(const MilnorSimplex& s);
MilnorSimplex milnor_simplex(const SimplexKey& key);
std::string milnor_label(const FiniteGroupoid& g, const MilnorSimplex& s);

/// Truncated join model of E on levels 0..N, stored semi-simplicially.
struct JoinComplex {
  GroupoidHandle groupoid;
  std::size_t levels = 0;  // N
  TruncatedSimplicialSet complex;

  MilnorSimplex simplex(std::size_t n, std::size_t id) const { return milnor_simplex(complex.keys[n][id]); }
};

JoinComplex milnor_E(GroupoidHandle g, std::size_t levels);

/// Orbits of the join model under g . (i, a) = (i, g then a), keyed by their
/// lexicographically least member.
struct MilnorBComplex {
  GroupoidHandle groupoid;
  std::size_t levels = 0;
  TruncatedSimplicialSet complex;

  MilnorSimplex representative(std::size_t n, std::size_t id) const { return milnor_simplex(complex.keys[n][id]); }
  /// Orbit id of any member.
  std::size_t orbit_of(const MilnorSimplex& s) const;
};

MilnorBComplex milnor_B(GroupoidHandle g, std::size_t levels);

/// g . s; throws MismatchedTarget unless tgt(g) is the common source.
MilnorSimplex milnor_act(const FiniteGroupoid& g, ArrowId gamma, const MilnorSimplex& s);
MilnorSimplex canonical_representative(const FiniteGroupoid& g, const MilnorSimplex& s);

/// The member of the orbit whose level-i arrow is an identity.
MilnorSimplex milnor_section(const FiniteGroupoid& g, const MilnorSimplex& s, std::size_t level);

/// The unique g with e1 = g . e2.
ArrowId milnor_pairing(const FiniteGroupoid& g, const MilnorSimplex& e1, const MilnorSimplex& e2);

/// (inv(a0) a1, ..., inv(a_{k-1}) a_k) as a nerve key of degree k; a vertex
/// goes to {tgt(a0)}.
SimplexKey milnor_to_nerve(const FiniteGroupoid& g, const MilnorSimplex& s);

/// Every translate of every simplex of E has the same image.
Verdict check_orbit_independence(const JoinComplex& e);
/// The image of a face is the face of the image.
Verdict check_face_compatibility(const MilnorBComplex& b, const TruncatedSimplicialSet& nerve_set);

/// Chain map from the orbit complex to normalized nerve chains, degrees
/// 0..min(N, cap).
ChainMap milnor_chain_map(const MilnorBComplex& b, const TruncatedSimplicialSet& nerve_set);

struct MilnorComparison {
  std::size_t levels = 0;
  std::vector<HomologyGroup> milnor;  // degrees 0..N-2
  std::vector<HomologyGroup> nerve;
  std::vector<Verdict> degrees;
  Verdict orbit_independence;
  Verdict face_compatibility;
  Verdict chain_map;
  Verdict cone;  // cone homology vanishes through degree N-1

  bool ok() const;
  std::vector<Verdict> verdicts() const;
};

/// Compares B on N levels with the nerve cut at N.
MilnorComparison compare_with_nerve(const GroupoidHandle& g, std::size_t levels);

}  // namespace nervekit
