#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "nervekit/groupoid.hpp"
#include "nervekit/smith.hpp"

namespace nervekit {

using SimplexKey = std::vector<std::size_t>;

/// Simplices in degrees 0..dim with face maps, and optionally degeneracies.
/// Each simplex carries an integer key (unique within its degree) and a label.
/// `complete` means there are no nondegenerate simplices above dim, as for
/// finite semi-simplicial complexes; a nerve cut at dim is not complete.
struct TruncatedSimplicialSet {
  std::size_t dim = 0;
  bool complete = false;
  bool has_degeneracies = false;
  std::vector<std::vector<SimplexKey>> keys;
  std::vector<std::vector<std::string>> labels;
  std::vector<std::vector<std::vector<std::size_t>>> faces;         // [n][s][i], n >= 1
  std::vector<std::vector<std::vector<std::size_t>>> degeneracies;  // [n][s][i], n < dim
  std::vector<std::vector<char>> degenerate;
  std::vector<std::map<SimplexKey, std::size_t>> index;

  std::size_t count(std::size_t n) const { return n < keys.size() ? keys[n].size() : 0; }
  std::size_t face(std::size_t n, std::size_t s, std::size_t i) const { return faces[n][s][i]; }
  bool is_degenerate(std::size_t n, std::size_t s) const { return degenerate[n][s] != 0; }
  std::size_t count_nondegenerate(std::size_t n) const;
  /// Simplex id for a key, or kNone.
  std::size_t find(std::size_t n, const SimplexKey& key) const;

  /// Appends a simplex and returns its id.
  std::size_t add(std::size_t n, SimplexKey key, std::string label, bool is_degenerate = false);
};

/// Checks d_i d_j = d_{j-1} d_i, and the mixed identities when degeneracies
/// are present, everywhere inside the cap.
Verdict check_simplicial_identities(const TruncatedSimplicialSet& s);

/// Nerve of a groupoid. Degree-0 keys are {object}; degree-n keys are the
/// arrow strings (a1..an) with tgt(a_k) == src(a_{k+1}).
TruncatedSimplicialSet nerve(const FiniteGroupoid& g, std::size_t dim);

/// Vertex v of a nerve simplex (object id).
ObjectId nerve_vertex(const FiniteGroupoid& g, std::size_t n, const SimplexKey& key, std::size_t v);

/// Two vertices and two parallel edges, no 2-simplices.
TruncatedSimplicialSet simplicial_circle();

struct AbelianGroup {
  std::size_t rank = 0;
  std::vector<BigInt> torsion;  // each > 1, d1 | d2 | ...

  bool is_trivial() const { return rank == 0 && torsion.empty(); }
  /// "0", "Z", "Z^3 (+) Z/2", "Z/2 (+) Z/4".
  std::string to_string() const;
  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

/// Z^rank modulo the column span of a (rank x k) relation matrix.
AbelianGroup cokernel(std::size_t rank, const SparseIntMatrix& relations);

struct HomologyGroup {
  std::size_t degree = 0;
  AbelianGroup group;

  std::size_t betti() const { return group.rank; }
  const std::vector<BigInt>& torsion() const { return group.torsion; }
  /// "H_n = Z^r (+) Z/d1 ..."
  std::string to_string() const;
  friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

/// Integer chain complex. boundary[n] : C_n -> C_{n-1} for 1 <= n <= top.
/// A complete complex is zero above top.
struct ChainComplex {
  std::size_t top = 0;
  bool complete = false;
  std::vector<std::vector<std::string>> basis;  // degrees 0..top
  std::vector<SparseIntMatrix> boundary;        // index 0 unused (0 x |C_0|)

  std::size_t rank(std::size_t n) const;
  /// Boundary out of degree n; zero matrices past the top of a complete complex.
  SparseIntMatrix d(std::size_t n) const;
  /// Whether H_n is determined: needs d_{n+1}.
  bool has_homology(std::size_t n) const { return complete || n + 1 <= top; }
};

/// Normalized chains: nondegenerate simplices, degenerate faces sent to 0.
ChainComplex chain_complex(const TruncatedSimplicialSet& s);

/// d_{n-1} d_n == 0 for every n in range.
Verdict check_boundary_squared(const ChainComplex& c);

/// Throws InsufficientTruncation unless has_homology(n).
HomologyGroup homology(const ChainComplex& c, std::size_t n);
/// H_0..H_max, sharing the rank computations.
std::vector<HomologyGroup> homology_range(const ChainComplex& c, std::size_t max_degree);

/// Degreewise maps A_n -> B_n for n = 0..components.size()-1.
struct ChainMap {
  std::vector<SparseIntMatrix> components;
};

/// phi_{n-1} d^A_n == d^B_n phi_n wherever both sides are defined.
Verdict check_chain_map(const ChainComplex& a, const ChainComplex& b, const ChainMap& phi);

/// Cone_k = A_{k-1} (+) B_k with d(a, b) = (-d a, phi a + d b).
/// Its homology vanishes through degree m exactly when phi_* is an
/// isomorphism below m and onto in degree m.
ChainComplex mapping_cone(const ChainComplex& a, const ChainComplex& b, const ChainMap& phi);

}  // namespace nervekit
