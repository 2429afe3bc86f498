#include "kgraph/smith.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>

namespace kgraph {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    for (long v : row) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("matrix shapes do not conform");
  IntMatrix out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const auto& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) out(i, j) += a * other(k, j);
    }
  }
  return out;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const mpz_class& v) { return v == 0; });
}

void SparseIntMatrix::add(std::size_t r, std::size_t c, long v) {
  if (r >= rows_ || c >= columns_.size()) throw std::out_of_range("sparse matrix index");
  auto& col = columns_[c];
  const long updated = (col.count(r) ? col[r] : 0) + v;
  if (updated == 0) {
    col.erase(r);
  } else {
    col[r] = updated;
  }
}

long SparseIntMatrix::at(std::size_t r, std::size_t c) const {
  const auto& col = columns_.at(c);
  auto it = col.find(r);
  return it == col.end() ? 0 : it->second;
}

std::size_t SparseIntMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& c : columns_) n += c.size();
  return n;
}

IntMatrix SparseIntMatrix::to_dense() const {
  IntMatrix m(rows_, cols());
  for (std::size_t c = 0; c < cols(); ++c) {
    for (const auto& [r, v] : columns_[c]) m(r, c) = v;
  }
  return m;
}

SparseIntMatrix SparseIntMatrix::operator*(const SparseIntMatrix& other) const {
  if (cols() != other.rows_) throw std::invalid_argument("matrix shapes do not conform");
  SparseIntMatrix out(rows_, other.cols());
  for (std::size_t j = 0; j < other.cols(); ++j) {
    for (const auto& [k, b] : other.columns_[j]) {
      for (const auto& [i, a] : columns_[k]) out.add(i, j, a * b);
    }
  }
  return out;
}

namespace {

// Row/column operations on a working matrix, mirrored into the transforms.
class Eliminator {
 public:
  Eliminator(IntMatrix& a, IntMatrix* left, IntMatrix* right) : a_(a), left_(left), right_(right) {}

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    swap_rows_of(a_, i, j);
    if (left_) swap_rows_of(*left_, i, j);
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    swap_cols_of(a_, i, j);
    if (right_) swap_cols_of(*right_, i, j);
  }
  // row[target] += q * row[source]
  void add_row(std::size_t target, std::size_t source, const mpz_class& q) {
    add_row_of(a_, target, source, q);
    if (left_) add_row_of(*left_, target, source, q);
  }
  // col[target] += q * col[source]
  void add_col(std::size_t target, std::size_t source, const mpz_class& q) {
    add_col_of(a_, target, source, q);
    if (right_) add_col_of(*right_, target, source, q);
  }
  void negate_row(std::size_t i) {
    add_row(i, i, -2);
  }

 private:
  static void swap_rows_of(IntMatrix& m, std::size_t i, std::size_t j) {
    for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(i, c), m(j, c));
  }
  static void swap_cols_of(IntMatrix& m, std::size_t i, std::size_t j) {
    for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m(r, i), m(r, j));
  }
  static void add_row_of(IntMatrix& m, std::size_t t, std::size_t s, const mpz_class& q) {
    if (t == s) {
      for (std::size_t c = 0; c < m.cols(); ++c) m(t, c) += q * m(t, c);
      return;
    }
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (m(s, c) != 0) m(t, c) += q * m(s, c);
    }
  }
  static void add_col_of(IntMatrix& m, std::size_t t, std::size_t s, const mpz_class& q) {
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (m(r, s) != 0) m(r, t) += q * m(r, s);
    }
  }

  IntMatrix& a_;
  IntMatrix* left_;
  IntMatrix* right_;
};

}  // namespace

SnfResult smith_normal_form(const IntMatrix& m, bool with_transforms) {
  IntMatrix a = m;
  SnfResult result;
  if (with_transforms) {
    result.left = IntMatrix::identity(m.rows());
    result.right = IntMatrix::identity(m.cols());
  }
  Eliminator ops(a, result.left ? &*result.left : nullptr,
                 result.right ? &*result.right : nullptr);
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();

  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    // smallest nonzero entry of the trailing block
    std::size_t pi = rows;
    std::size_t pj = cols;
    mpz_class best;
    for (std::size_t i = t; i < rows; ++i) {
      for (std::size_t j = t; j < cols; ++j) {
        if (a(i, j) == 0) continue;
        if (pi == rows || abs(a(i, j)) < best) {
          best = abs(a(i, j));
          pi = i;
          pj = j;
        }
      }
    }
    if (pi == rows) break;
    ops.swap_rows(t, pi);
    ops.swap_cols(t, pj);

    while (true) {
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a(i, t) == 0) continue;
        mpz_class q = a(i, t) / a(t, t);
        ops.add_row(i, t, -q);
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a(t, j) == 0) continue;
        mpz_class q = a(t, j) / a(t, t);
        ops.add_col(j, t, -q);
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) {
        // a remainder smaller than the pivot survived; promote the smallest
        std::size_t bi = 0;
        std::size_t bj = 0;
        mpz_class small = abs(a(t, t));
        for (std::size_t i = t + 1; i < rows; ++i) {
          if (a(i, t) != 0 && abs(a(i, t)) < small) {
            small = abs(a(i, t));
            bi = i;
            bj = 0;
          }
        }
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (a(t, j) != 0 && abs(a(t, j)) < small) {
            small = abs(a(t, j));
            bi = 0;
            bj = j;
          }
        }
        if (bi) ops.swap_rows(t, bi);
        if (bj) ops.swap_cols(t, bj);
        continue;
      }
      std::size_t bad = 0;
      for (std::size_t i = t + 1; i < rows && !bad; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (a(i, j) % a(t, t) != 0) {
            bad = i;
            break;
          }
        }
      }
      if (!bad) break;
      ops.add_row(t, bad, 1);
    }
    if (a(t, t) < 0) ops.negate_row(t);
    result.diagonal.push_back(a(t, t));
  }
  result.rank = result.diagonal.size();
  return result;
}

SnfResult smith_normal_form(const SparseIntMatrix& m) {
  using Row = std::vector<std::pair<std::size_t, mpz_class>>;
  const std::size_t nrows = m.rows();
  std::vector<Row> rows(nrows);
  std::vector<std::set<std::size_t>> col_rows(m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c) {
    for (const auto& [r, v] : m.column(c)) {
      rows[r].emplace_back(c, mpz_class(v));
      col_rows[c].insert(r);
    }
  }
  // columns were visited in ascending order, so rows are already sorted

  std::size_t units = 0;
  while (true) {
    std::size_t pr = nrows;
    std::size_t pc = 0;
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (std::size_t r = 0; r < nrows && best > 0; ++r) {
      for (const auto& [c, v] : rows[r]) {
        if (abs(v) != 1) continue;
        const std::size_t cost = (rows[r].size() - 1) * (col_rows[c].size() - 1);
        if (cost < best) {
          best = cost;
          pr = r;
          pc = c;
          if (cost == 0) break;
        }
      }
    }
    if (pr == nrows) break;

    const Row pivot_row = rows[pr];
    mpz_class pivot_value;
    for (const auto& [c, v] : pivot_row) {
      if (c == pc) pivot_value = v;
    }
    const std::vector<std::size_t> targets(col_rows[pc].begin(), col_rows[pc].end());
    for (std::size_t r : targets) {
      if (r == pr) continue;
      Row& row = rows[r];
      mpz_class factor;
      for (const auto& [c, v] : row) {
        if (c == pc) factor = v * pivot_value;  // pivot is a unit, so v / p = v * p
      }
      Row merged;
      merged.reserve(row.size() + pivot_row.size());
      std::size_t i = 0;
      std::size_t j = 0;
      while (i < row.size() || j < pivot_row.size()) {
        if (j == pivot_row.size() || (i < row.size() && row[i].first < pivot_row[j].first)) {
          merged.push_back(std::move(row[i++]));
        } else if (i == row.size() || pivot_row[j].first < row[i].first) {
          merged.emplace_back(pivot_row[j].first, -factor * pivot_row[j].second);
          col_rows[pivot_row[j].first].insert(r);
          ++j;
        } else {
          mpz_class v = row[i].second - factor * pivot_row[j].second;
          if (v != 0) {
            merged.emplace_back(row[i].first, std::move(v));
          } else {
            col_rows[row[i].first].erase(r);
          }
          ++i;
          ++j;
        }
      }
      row = std::move(merged);
    }
    for (const auto& [c, v] : pivot_row) col_rows[c].erase(pr);
    rows[pr].clear();
    ++units;
  }

  // dense finish on what is left
  std::vector<std::size_t> live_rows;
  std::vector<std::size_t> live_cols;
  for (std::size_t r = 0; r < nrows; ++r) {
    if (!rows[r].empty()) live_rows.push_back(r);
  }
  for (std::size_t c = 0; c < col_rows.size(); ++c) {
    if (!col_rows[c].empty()) live_cols.push_back(c);
  }
  SnfResult result;
  result.diagonal.assign(units, mpz_class(1));
  if (!live_rows.empty()) {
    IntMatrix rest(live_rows.size(), live_cols.size());
    for (std::size_t i = 0; i < live_rows.size(); ++i) {
      for (const auto& [c, v] : rows[live_rows[i]]) {
        const auto j = static_cast<std::size_t>(
            std::lower_bound(live_cols.begin(), live_cols.end(), c) - live_cols.begin());
        rest(i, j) = v;
      }
    }
    auto tail = smith_normal_form(rest, false);
    result.diagonal.insert(result.diagonal.end(), tail.diagonal.begin(), tail.diagonal.end());
  }
  result.rank = result.diagonal.size();
  return result;
}

mpz_class determinant(const IntMatrix& input) {
  if (input.rows() != input.cols()) throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t n = input.rows();
  if (n == 0) return 1;
  IntMatrix a = input;
  int sign = 1;
  mpz_class previous = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap_with = k + 1;
      while (swap_with < n && a(swap_with, k) == 0) ++swap_with;
      if (swap_with == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(swap_with, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / previous;
      }
    }
    previous = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

}  // namespace kgraph
