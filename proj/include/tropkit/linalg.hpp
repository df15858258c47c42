#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "tropkit/rational.hpp"

namespace tropkit {

// Dense matrix over Q. Row-major; rows are the natural unit for the
// elimination routines below.
class QMat {
public:
  QMat() = default;
  QMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static QMat identity(std::size_t n);
  static QMat from_rows(std::vector<QVec> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Rat& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rat& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  QVec row(std::size_t i) const;
  void append_row(const QVec& r);

  bool operator==(const QMat& other) const = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> data_;
};

QMat mul(const QMat& a, const QMat& b);
QVec mul(const QMat& a, const QVec& x);
QMat transpose(const QMat& a);
QMat add(const QMat& a, const QMat& b);
QMat scale(const QMat& a, const Rat& c);
bool is_zero(const QMat& a);
bool is_symmetric(const QMat& a);

// Reduced row echelon form in place; returns the rank and, if requested,
// the pivot columns in increasing order.
std::size_t rref_in_place(QMat& m, std::vector<std::size_t>* pivot_cols = nullptr);

std::size_t rank(QMat m);

// Rows span {x : a x^T = 0}; deterministic basis from the RREF free columns.
QMat kernel_basis(const QMat& a);

// Rows span the row space; deterministic (nonzero RREF rows).
QMat row_basis(const QMat& a);

// One solution of a x = b, if consistent.
std::optional<QVec> solve(const QMat& a, const QVec& b);

// One solution of a X = B (column-wise), if consistent.
std::optional<QMat> solve_matrix(const QMat& a, const QMat& b);

// Coordinates c with c * basis = v for each row v of `vectors`; nullopt if
// some row is outside the row space of `basis`.
std::optional<QMat> coords_in_rowspace(const QMat& basis, const QMat& vectors);

QMat inverse(const QMat& a);

// Inertia (n+, n0, n-) of a symmetric matrix by exact symmetric
// Gaussian elimination (Sylvester's law of inertia).
struct Inertia {
  std::size_t n_plus = 0;
  std::size_t n_zero = 0;
  std::size_t n_minus = 0;

  bool operator==(const Inertia&) const = default;
};

Inertia inertia(QMat symmetric);

// LDL^T pivots when the matrix is symmetric positive definite; these are
// the exact certificates (ratios of leading principal minors). nullopt if
// not symmetric or not positive definite.
std::optional<QVec> spd_pivots(const QMat& m);

} // namespace tropkit
