#pragma once

// Group homology from the normalized bar complex, built straight from a
// multiplication table. Ranks over Q and over F_p give the Betti number and
// the p-torsion count; this determines H_n(G; Z) when |G| is squarefree,
// since then every p-primary part is killed by p.

#include <cstddef>
#include <string>
#include <vector>

namespace oracle {

struct GroupTable {
  std::vector<std::vector<std::size_t>> mult;
  std::size_t unit = 0;
};

GroupTable cyclic_table(std::size_t n);
/// Permutations of {0..n-1} in lexicographic order, (a*b)(i) = a(b(i)).
GroupTable symmetric_table(std::size_t n);

struct OracleHomology {
  std::size_t rank = 0;
  std::vector<unsigned long long> torsion;  // invariant factors > 1

  std::string to_string() const;
};

OracleHomology bar_homology(const GroupTable& g, std::size_t n);

/// Exact rank over Q (fraction-free elimination).
std::size_t rank_rational(std::vector<std::vector<long long>> m);
/// Rank over F_p.
std::size_t rank_mod_p(std::vector<std::vector<long long>> m, long long p);

}  // namespace oracle
