#include "nervekit/smith.hpp"

#include "nervekit/error.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace nervekit {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    for (long long v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const BigInt& v) { return v == 0; });
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix dimensions do not agree");
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const BigInt& v = a.at(i, k);
      if (v == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c.at(i, j) += v * b.at(k, j);
    }
  return c;
}

void SparseIntMatrix::add(std::size_t row, std::size_t col, long long value) {
  auto& column = columns[col];
  auto it = std::lower_bound(column.begin(), column.end(), row,
                             [](const auto& entry, std::size_t r) { return entry.first < r; });
  if (it != column.end() && it->first == row) {
    it->second += value;
    if (it->second == 0) column.erase(it);
  } else if (value != 0) {
    column.insert(it, {row, value});
  }
}

IntMatrix SparseIntMatrix::to_dense() const {
  IntMatrix m(rows, cols);
  for (std::size_t j = 0; j < cols; ++j)
    for (const auto& [i, v] : columns[j]) m.at(i, j) = v;
  return m;
}

bool SparseIntMatrix::is_zero() const {
  return std::all_of(columns.begin(), columns.end(), [](const auto& c) { return c.empty(); });
}

SparseIntMatrix multiply(const SparseIntMatrix& a, const SparseIntMatrix& b) {
  if (a.cols != b.rows) throw std::invalid_argument("sparse dimensions do not agree");
  SparseIntMatrix c(a.rows, b.cols);
  for (std::size_t j = 0; j < b.cols; ++j) {
    std::map<std::size_t, long long> acc;
    for (const auto& [k, v] : b.columns[j])
      for (const auto& [i, w] : a.columns[k]) acc[i] += v * w;
    for (const auto& [i, v] : acc)
      if (v != 0) c.columns[j].emplace_back(i, v);
  }
  return c;
}

std::size_t SmithForm::rank() const { return invariant_factors().size(); }

std::vector<BigInt> SmithForm::invariant_factors() const {
  std::vector<BigInt> out;
  for (std::size_t i = 0; i < std::min(diagonal.rows(), diagonal.cols()); ++i)
    if (diagonal.at(i, i) != 0) out.push_back(diagonal.at(i, i));
  return out;
}

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m.at(i, a), m.at(i, b));
}

// row[target] += factor * row[source]
void add_row(IntMatrix& m, std::size_t target, std::size_t source, const BigInt& factor) {
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (m.at(source, j) != 0) m.at(target, j) += factor * m.at(source, j);
}

void add_col(IntMatrix& m, std::size_t target, std::size_t source, const BigInt& factor) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    if (m.at(i, source) != 0) m.at(i, target) += factor * m.at(i, source);
}

BigInt abs_value(const BigInt& v) { return v < 0 ? BigInt(-v) : v; }

}  // namespace

SmithForm smith_normal_form(const IntMatrix& input) {
  const std::size_t m = input.rows();
  const std::size_t n = input.cols();
  SmithForm out{IntMatrix::identity(m), input, IntMatrix::identity(n)};
  IntMatrix& s = out.diagonal;
  IntMatrix& u = out.left;
  IntMatrix& v = out.right;

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    for (;;) {
      std::size_t pi = m, pj = n;
      BigInt best;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j) {
          const BigInt& e = s.at(i, j);
          if (e == 0) continue;
          BigInt a = abs_value(e);
          if (pi == m || a < best) {
            best = a;
            pi = i;
            pj = j;
          }
        }
      if (pi == m) return out;  // remaining block is zero

      swap_rows(s, t, pi);
      swap_rows(u, t, pi);
      swap_cols(s, t, pj);
      swap_cols(v, t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (s.at(i, t) == 0) continue;
        BigInt q = s.at(i, t) / s.at(t, t);
        if (q != 0) {
          add_row(s, i, t, -q);
          add_row(u, i, t, -q);
        }
        if (s.at(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (s.at(t, j) == 0) continue;
        BigInt q = s.at(t, j) / s.at(t, t);
        if (q != 0) {
          add_col(s, j, t, -q);
          add_col(v, j, t, -q);
        }
        if (s.at(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      bool divides_all = true;
      for (std::size_t i = t + 1; i < m && divides_all; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (s.at(i, j) % s.at(t, t) != 0) {
            add_row(s, t, i, 1);
            add_row(u, t, i, 1);
            divides_all = false;
            break;
          }
      if (divides_all) break;
    }
    if (s.at(t, t) < 0) {
      add_row(s, t, t, -2);
      add_row(u, t, t, -2);
    }
  }
  return out;
}

bool is_unimodular(const IntMatrix& input) {
  if (input.rows() != input.cols()) return false;
  const std::size_t n = input.rows();
  IntMatrix a = input;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a.at(p, k) == 0) ++p;
    if (p == n) return false;
    if (p != k) {
      swap_rows(a, p, k);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
      a.at(i, k) = 0;
    }
    prev = a.at(k, k);
  }
  BigInt det = n == 0 ? BigInt(1) : BigInt(a.at(n - 1, n - 1) * sign);
  return det == 1 || det == -1;
}

std::vector<BigInt> normalize_divisors(std::vector<BigInt> d) {
  for (auto& v : d) v = abs_value(v);
  std::sort(d.begin(), d.end());
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      BigInt g = boost::multiprecision::gcd(d[i], d[j]);
      BigInt l = d[i] / g * d[j];
      d[i] = g;
      d[j] = l;
    }
  return d;
}

std::vector<BigInt> elementary_divisors(const SparseIntMatrix& input) {
  using Row = std::map<std::size_t, BigInt>;
  std::vector<Row> rows(input.rows);
  std::vector<std::set<std::size_t>> col_rows(input.cols);
  for (std::size_t j = 0; j < input.cols; ++j)
    for (const auto& [i, v] : input.columns[j]) {
      rows[i][j] = v;
      col_rows[j].insert(i);
    }

  std::vector<BigInt> diag;
  std::set<std::size_t> live_rows;
  for (std::size_t i = 0; i < input.rows; ++i)
    if (!rows[i].empty()) live_rows.insert(i);

  auto set_entry = [&](std::size_t r, std::size_t c, BigInt value) {
    if (value == 0) {
      rows[r].erase(c);
      col_rows[c].erase(r);
    } else {
      rows[r][c] = std::move(value);
      col_rows[c].insert(r);
    }
  };

  for (;;) {
    std::size_t pr = kNone, pc = kNone;
    BigInt best;
    std::size_t best_cost = 0;
    for (std::size_t r : live_rows) {
      for (const auto& [c, v] : rows[r]) {
        BigInt a = abs_value(v);
        std::size_t cost = (rows[r].size() - 1) * (col_rows[c].size() - 1);
        if (pr == kNone || a < best || (a == best && cost < best_cost)) {
          best = a;
          best_cost = cost;
          pr = r;
          pc = c;
        }
      }
    }
    if (pr == kNone) break;

    const BigInt pivot = rows[pr].at(pc);
    bool exact = true;
    std::vector<std::size_t> others(col_rows[pc].begin(), col_rows[pc].end());
    for (std::size_t r : others) {
      if (r == pr) continue;
      BigInt q = rows[r].at(pc) / pivot;
      if (q != 0) {
        for (const auto& [c, v] : rows[pr]) {
          auto it = rows[r].find(c);
          BigInt updated = (it == rows[r].end() ? BigInt(0) : it->second) - q * v;
          set_entry(r, c, std::move(updated));
        }
      }
      if (rows[r].count(pc)) exact = false;
      if (rows[r].empty()) live_rows.erase(r);
    }
    if (!exact) continue;

    std::vector<std::size_t> row_cols;
    for (const auto& [c, v] : rows[pr])
      if (c != pc) row_cols.push_back(c);
    for (std::size_t c : row_cols) {
      BigInt rem = rows[pr].at(c) % pivot;
      if (rem != 0) exact = false;
      set_entry(pr, c, std::move(rem));
    }
    if (!exact) continue;

    diag.push_back(abs_value(pivot));
    set_entry(pr, pc, 0);
    live_rows.erase(pr);
  }
  return normalize_divisors(std::move(diag));
}

}  // namespace nervekit
