#ifndef KGRAPH_SMITH_HPP
#define KGRAPH_SMITH_HPP

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

namespace kgraph {

/// Dense integer matrix with arbitrary-precision entries, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  mpz_class& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const mpz_class& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntMatrix operator*(const IntMatrix& other) const;
  bool is_zero() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<mpz_class> data_;
};

/// Column-oriented sparse integer matrix; used for boundary maps.
class SparseIntMatrix {
 public:
  SparseIntMatrix() = default;
  SparseIntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return columns_.size(); }

  /// Adds v to entry (r, c); entries that cancel to zero are dropped.
  void add(std::size_t r, std::size_t c, long v);
  long at(std::size_t r, std::size_t c) const;
  const std::map<std::size_t, long>& column(std::size_t c) const { return columns_.at(c); }
  std::size_t nonzeros() const;

  IntMatrix to_dense() const;
  /// this * other, both sparse.
  SparseIntMatrix operator*(const SparseIntMatrix& other) const;
  bool is_zero() const { return nonzeros() == 0; }

 private:
  std::size_t rows_ = 0;
  std::vector<std::map<std::size_t, long>> columns_;
};

struct SnfResult {
  /// Nonzero invariant factors d_1 | d_2 | ... , all positive.
  std::vector<mpz_class> diagonal;
  std::size_t rank = 0;
  /// Present when requested: left * M * right is the diagonal matrix.
  std::optional<IntMatrix> left;
  std::optional<IntMatrix> right;
};

/// Smith normal form by elimination, always pivoting on a nonzero entry of
/// smallest magnitude.
SnfResult smith_normal_form(const IntMatrix& m, bool with_transforms = false);

/// Same invariants for a sparse matrix. Unit pivots are eliminated sparsely
/// (Markowitz order); whatever remains is finished densely.
SnfResult smith_normal_form(const SparseIntMatrix& m);

/// Fraction-free (Bareiss) determinant of a square matrix.
mpz_class determinant(const IntMatrix& m);

}  // namespace kgraph

#endif  // KGRAPH_SMITH_HPP
