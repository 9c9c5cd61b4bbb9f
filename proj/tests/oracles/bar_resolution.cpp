#include "oracles/bar_resolution.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <numeric>
#include <stdexcept>

namespace oracle {

using boost::multiprecision::cpp_int;

GroupTable cyclic_table(std::size_t n) {
  GroupTable g;
  g.mult.assign(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) g.mult[a][b] = (a + b) % n;
  return g;
}

GroupTable symmetric_table(std::size_t n) {
  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  GroupTable g;
  g.mult.assign(perms.size(), std::vector<std::size_t>(perms.size()));
  for (std::size_t a = 0; a < perms.size(); ++a)
    for (std::size_t b = 0; b < perms.size(); ++b) {
      std::vector<std::size_t> c(n);
      for (std::size_t i = 0; i < n; ++i) c[i] = perms[a][perms[b][i]];
      g.mult[a][b] = static_cast<std::size_t>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  return g;
}

std::string OracleHomology::to_string() const {
  std::vector<std::string> parts;
  if (rank == 1) parts.push_back("Z");
  if (rank > 1) parts.push_back("Z^" + std::to_string(rank));
  for (auto d : torsion) parts.push_back("Z/" + std::to_string(d));
  if (parts.empty()) return "0";
  std::string out = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) out += " (+) " + parts[i];
  return out;
}

std::size_t rank_rational(std::vector<std::vector<long long>> in) {
  if (in.empty()) return 0;
  const std::size_t rows = in.size(), cols = in[0].size();
  std::vector<std::vector<cpp_int>> m(rows, std::vector<cpp_int>(cols));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m[i][j] = in[i][j];
  cpp_int prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) m[i][j] = (m[i][j] * m[r][c] - m[i][c] * m[r][j]) / prev;
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  return r;
}

std::size_t rank_mod_p(std::vector<std::vector<long long>> m, long long p) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  for (auto& row : m)
    for (auto& v : row) v = ((v % p) + p) % p;
  auto power = [p](long long b, long long e) {
    long long r = 1;
    for (; e; e >>= 1, b = b * b % p)
      if (e & 1) r = r * b % p;
    return r;
  };
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    long long inv = power(m[r][c], p - 2);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      long long f = m[i][c] * inv % p;
      for (std::size_t j = c; j < cols; ++j) m[i][j] = ((m[i][j] - f * m[r][j]) % p + p) % p;
    }
    ++r;
  }
  return r;
}

namespace {

using Cell = std::vector<std::size_t>;

std::vector<Cell> cells(const GroupTable& g, std::size_t k) {
  std::vector<Cell> out{Cell{}};
  for (std::size_t step = 0; step < k; ++step) {
    std::vector<Cell> next;
    for (const auto& c : out)
      for (std::size_t x = 0; x < g.mult.size(); ++x)
        if (x != g.unit) {
          Cell d = c;
          d.push_back(x);
          next.push_back(std::move(d));
        }
    out = std::move(next);
  }
  return out;
}

// Dense matrix of the bar differential C_k -> C_{k-1}, rows indexed by C_{k-1}.
std::vector<std::vector<long long>> bar_boundary(const GroupTable& g, std::size_t k) {
  auto lower = cells(g, k - 1);
  auto upper = cells(g, k);
  std::map<Cell, std::size_t> pos;
  for (std::size_t i = 0; i < lower.size(); ++i) pos[lower[i]] = i;
  std::vector<std::vector<long long>> m(lower.size(), std::vector<long long>(upper.size(), 0));
  for (std::size_t col = 0; col < upper.size(); ++col) {
    const Cell& c = upper[col];
    for (std::size_t i = 0; i <= k; ++i) {
      Cell face;
      if (i == 0) {
        face.assign(c.begin() + 1, c.end());
      } else if (i == k) {
        face.assign(c.begin(), c.end() - 1);
      } else {
        std::size_t prod = g.mult[c[i - 1]][c[i]];
        if (prod == g.unit) continue;
        for (std::size_t t = 0; t < k; ++t) {
          if (t == i - 1) face.push_back(prod);
          else if (t != i) face.push_back(c[t]);
        }
      }
      m[pos.at(face)][col] += (i % 2 == 0) ? 1 : -1;
    }
  }
  return m;
}

std::vector<long long> prime_factors_squarefree(std::size_t n) {
  std::vector<long long> out;
  for (std::size_t p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      out.push_back(static_cast<long long>(p));
      n /= p;
      if (n % p == 0) throw std::invalid_argument("group order is not squarefree");
    }
  if (n > 1) out.push_back(static_cast<long long>(n));
  return out;
}

}  // namespace

OracleHomology bar_homology(const GroupTable& g, std::size_t n) {
  const auto primes = prime_factors_squarefree(g.mult.size());
  const std::size_t dim = cells(g, n).size();
  std::size_t rank_in = 0;
  if (n > 0) rank_in = rank_rational(bar_boundary(g, n));
  auto out_matrix = bar_boundary(g, n + 1);
  const std::size_t rank_out = rank_rational(out_matrix);

  OracleHomology h;
  h.rank = dim - rank_in - rank_out;
  std::vector<std::pair<long long, std::size_t>> counts;
  std::size_t most = 0;
  for (long long p : primes) {
    std::size_t t = rank_out - rank_mod_p(out_matrix, p);
    counts.emplace_back(p, t);
    most = std::max(most, t);
  }
  for (std::size_t level = most; level >= 1; --level) {
    unsigned long long d = 1;
    for (auto [p, t] : counts)
      if (t >= level) d *= static_cast<unsigned long long>(p);
    h.torsion.push_back(d);
  }
  return h;
}

}  // namespace oracle
