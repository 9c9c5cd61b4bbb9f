#pragma once

// Invariant factors from determinantal divisors: D_k is the gcd of all k x k
// minors and d_k = D_k / D_{k-1}. Exponential, for small matrices only.

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

namespace oracle {

std::vector<boost::multiprecision::cpp_int> invariant_factors_by_minors(const std::vector<std::vector<long long>>& m);

}  // namespace oracle
