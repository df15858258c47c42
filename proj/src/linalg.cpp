#include "tropkit/linalg.hpp"

#include <algorithm>
#include <cassert>

#include "tropkit/error.hpp"

namespace tropkit {

namespace {

const std::string kInternal = "InternalError";

// GMP-free strings keep the hot loops simple; parsing lives in io.cpp.

} // namespace

QMat QMat::identity(std::size_t n) {
  QMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

QMat QMat::from_rows(std::vector<QVec> rows) {
  QMat m;
  if (rows.empty()) return m;
  m.rows_ = rows.size();
  m.cols_ = rows.front().size();
  m.data_.reserve(m.rows_ * m.cols_);
  for (auto& r : rows) {
    if (r.size() != m.cols_) fail(kInternal, "ragged rows in QMat::from_rows");
    for (auto& x : r) m.data_.push_back(std::move(x));
  }
  return m;
}

QVec QMat::row(std::size_t i) const {
  QVec r(cols_);
  for (std::size_t j = 0; j < cols_; ++j) r[j] = at(i, j);
  return r;
}

void QMat::append_row(const QVec& r) {
  if (rows_ == 0 && cols_ == 0) cols_ = r.size();
  if (r.size() != cols_) fail(kInternal, "ragged row appended to QMat");
  data_.insert(data_.end(), r.begin(), r.end());
  ++rows_;
}

QMat mul(const QMat& a, const QMat& b) {
  if (a.cols() != b.rows()) fail(kInternal, "QMat dimension mismatch in mul");
  QMat c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rat& aik = a.at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (b.at(k, j) == 0) continue;
        c.at(i, j) += aik * b.at(k, j);
      }
    }
  return c;
}

QVec mul(const QMat& a, const QVec& x) {
  if (a.cols() != x.size()) fail(kInternal, "QMat/QVec dimension mismatch");
  QVec y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a.at(i, j) == 0 || x[j] == 0) continue;
      y[i] += a.at(i, j) * x[j];
    }
  return y;
}

QMat transpose(const QMat& a) {
  QMat t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t.at(j, i) = a.at(i, j);
  return t;
}

QMat add(const QMat& a, const QMat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    fail(kInternal, "QMat dimension mismatch in add");
  QMat c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j) + b.at(i, j);
  return c;
}

QMat scale(const QMat& a, const Rat& c) {
  QMat s(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) s.at(i, j) = a.at(i, j) * c;
  return s;
}

bool is_zero(const QMat& a) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a.at(i, j) != 0) return false;
  return true;
}

bool is_symmetric(const QMat& a) {
  if (a.rows() != a.cols()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = i + 1; j < a.cols(); ++j)
      if (a.at(i, j) != a.at(j, i)) return false;
  return true;
}

std::size_t rref_in_place(QMat& m, std::vector<std::size_t>* pivot_cols) {
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
    std::size_t sel = pivot_row;
    while (sel < m.rows() && m.at(sel, col) == 0) ++sel;
    if (sel == m.rows()) continue;
    if (sel != pivot_row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(sel, j), m.at(pivot_row, j));
    const Rat inv = 1 / m.at(pivot_row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m.at(pivot_row, j) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == pivot_row || m.at(r, col) == 0) continue;
      const Rat f = m.at(r, col);
      for (std::size_t j = col; j < m.cols(); ++j) {
        if (m.at(pivot_row, j) == 0) continue;
        m.at(r, j) -= f * m.at(pivot_row, j);
      }
    }
    if (pivot_cols) pivot_cols->push_back(col);
    ++pivot_row;
  }
  return pivot_row;
}

std::size_t rank(QMat m) { return rref_in_place(m); }

QMat kernel_basis(const QMat& a) {
  QMat m = a;
  std::vector<std::size_t> pivots;
  const std::size_t r = rref_in_place(m, &pivots);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  QMat k;
  for (std::size_t free_col = 0; free_col < a.cols(); ++free_col) {
    if (is_pivot[free_col]) continue;
    QVec v(a.cols());
    v[free_col] = 1;
    for (std::size_t i = 0; i < r; ++i) v[pivots[i]] = -m.at(i, free_col);
    k.append_row(v);
  }
  if (k.rows() == 0) k = QMat(0, a.cols());
  return k;
}

QMat row_basis(const QMat& a) {
  QMat m = a;
  const std::size_t r = rref_in_place(m);
  QMat b(r, a.cols());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) b.at(i, j) = m.at(i, j);
  return b;
}

std::optional<QVec> solve(const QMat& a, const QVec& b) {
  QMat col(b.size(), 1);
  for (std::size_t i = 0; i < b.size(); ++i) col.at(i, 0) = b[i];
  auto x = solve_matrix(a, col);
  if (!x) return std::nullopt;
  QVec out(a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) out[j] = x->at(j, 0);
  return out;
}

std::optional<QMat> solve_matrix(const QMat& a, const QMat& b) {
  if (a.rows() != b.rows()) fail(kInternal, "solve_matrix dimension mismatch");
  QMat aug(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) aug.at(i, a.cols() + j) = b.at(i, j);
  }
  std::vector<std::size_t> pivots;
  rref_in_place(aug, &pivots);
  for (auto c : pivots)
    if (c >= a.cols()) return std::nullopt; // inconsistent column
  QMat x(a.cols(), b.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) x.at(pivots[i], j) = aug.at(i, a.cols() + j);
  return x;
}

std::optional<QMat> coords_in_rowspace(const QMat& basis, const QMat& vectors) {
  if (basis.cols() != vectors.cols()) fail(kInternal, "coords_in_rowspace dimension mismatch");
  auto x = solve_matrix(transpose(basis), transpose(vectors));
  if (!x) return std::nullopt;
  return transpose(*x);
}

QMat inverse(const QMat& a) {
  if (a.rows() != a.cols()) fail(kInternal, "inverse of non-square matrix");
  auto x = solve_matrix(a, QMat::identity(a.rows()));
  if (!x || rank(a) != a.rows()) fail(kInternal, "inverse of singular matrix");
  return *x;
}

Inertia inertia(QMat m) {
  if (!is_symmetric(m)) fail(kInternal, "inertia requires a symmetric matrix");
  const std::size_t n = m.rows();
  std::vector<std::size_t> active(n);
  for (std::size_t i = 0; i < n; ++i) active[i] = i;
  Inertia sig;
  while (!active.empty()) {
    std::size_t pivot_pos = active.size();
    for (std::size_t t = 0; t < active.size(); ++t)
      if (m.at(active[t], active[t]) != 0) { pivot_pos = t; break; }
    if (pivot_pos == active.size()) {
      // No nonzero diagonal: fold a nonzero off-diagonal pair onto it.
      bool found = false;
      for (std::size_t s = 0; s < active.size() && !found; ++s)
        for (std::size_t t = s + 1; t < active.size() && !found; ++t) {
          const std::size_t i = active[s], j = active[t];
          if (m.at(i, j) != 0) {
            for (auto c : active) m.at(i, c) += m.at(j, c);
            for (auto r : active) m.at(r, i) += m.at(r, j);
            found = true;
          }
        }
      if (!found) {
        sig.n_zero += active.size();
        break;
      }
      continue;
    }
    const std::size_t k = active[pivot_pos];
    const Rat p = m.at(k, k);
    if (p > 0) ++sig.n_plus; else ++sig.n_minus;
    active.erase(active.begin() + static_cast<std::ptrdiff_t>(pivot_pos));
    for (auto r : active) {
      if (m.at(r, k) == 0) continue;
      const Rat f = m.at(r, k) / p;
      for (auto c : active) {
        if (m.at(k, c) == 0) continue;
        m.at(r, c) -= f * m.at(k, c);
      }
    }
  }
  return sig;
}

std::optional<QVec> spd_pivots(const QMat& a) {
  if (!is_symmetric(a)) return std::nullopt;
  QMat m = a;
  const std::size_t n = m.rows();
  QVec pivots;
  pivots.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    const Rat p = m.at(k, k);
    if (p <= 0) return std::nullopt;
    pivots.push_back(p);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m.at(i, k) == 0) continue;
      const Rat f = m.at(i, k) / p;
      for (std::size_t j = k + 1; j < n; ++j) {
        if (m.at(k, j) == 0) continue;
        m.at(i, j) -= f * m.at(k, j);
      }
    }
  }
  return pivots;
}

} // namespace tropkit
