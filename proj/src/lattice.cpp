#include "tropkit/lattice.hpp"

#include <algorithm>
#include <cstdlib>

#include "tropkit/error.hpp"

namespace tropkit {

namespace {
const std::string kInternal = "InternalError";
}

ZMat ZMat::identity(std::size_t n) {
  ZMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

ZMat ZMat::from_rows(std::vector<ZVec> rows) {
  ZMat m;
  if (rows.empty()) return m;
  m.rows_ = rows.size();
  m.cols_ = rows.front().size();
  m.data_.reserve(m.rows_ * m.cols_);
  for (auto& r : rows) {
    if (r.size() != m.cols_) fail(kInternal, "ragged rows in ZMat::from_rows");
    for (auto& x : r) m.data_.push_back(std::move(x));
  }
  return m;
}

ZVec ZMat::row(std::size_t i) const {
  ZVec r(cols_);
  for (std::size_t j = 0; j < cols_; ++j) r[j] = at(i, j);
  return r;
}

void ZMat::append_row(const ZVec& r) {
  if (rows_ == 0 && cols_ == 0) cols_ = r.size();
  if (r.size() != cols_) fail(kInternal, "ragged row appended to ZMat");
  data_.insert(data_.end(), r.begin(), r.end());
  ++rows_;
}

ZMat mul(const ZMat& a, const ZMat& b) {
  if (a.cols() != b.rows()) fail(kInternal, "ZMat dimension mismatch in mul");
  ZMat c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a.at(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (b.at(k, j) == 0) continue;
        c.at(i, j) += a.at(i, k) * b.at(k, j);
      }
    }
  return c;
}

ZVec mul_vec(const ZVec& x, const ZMat& a) {
  if (x.size() != a.rows()) fail(kInternal, "ZVec/ZMat dimension mismatch");
  ZVec y(a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) y[j] += x[i] * a.at(i, j);
  }
  return y;
}

ZMat transpose(const ZMat& a) {
  ZMat t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t.at(j, i) = a.at(i, j);
  return t;
}

QMat to_qmat(const ZMat& a) {
  QMat q(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) q.at(i, j) = Rat(a.at(i, j));
  return q;
}

namespace {

struct SmithWork {
  ZMat d, u, v, vinv;

  void swap_rows(std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < d.cols(); ++j) std::swap(d.at(a, j), d.at(b, j));
    for (std::size_t j = 0; j < u.cols(); ++j) std::swap(u.at(a, j), u.at(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < d.rows(); ++i) std::swap(d.at(i, a), d.at(i, b));
    for (std::size_t i = 0; i < v.rows(); ++i) std::swap(v.at(i, a), v.at(i, b));
    for (std::size_t j = 0; j < vinv.cols(); ++j) std::swap(vinv.at(a, j), vinv.at(b, j));
  }
  // row[a] -= f * row[b]
  void row_op(std::size_t a, std::size_t b, const Int& f) {
    for (std::size_t j = 0; j < d.cols(); ++j) d.at(a, j) -= f * d.at(b, j);
    for (std::size_t j = 0; j < u.cols(); ++j) u.at(a, j) -= f * u.at(b, j);
  }
  // col[a] -= f * col[b]; inverse op on vinv rows: row[b] += f * row[a]
  void col_op(std::size_t a, std::size_t b, const Int& f) {
    for (std::size_t i = 0; i < d.rows(); ++i) d.at(i, a) -= f * d.at(i, b);
    for (std::size_t i = 0; i < v.rows(); ++i) v.at(i, a) -= f * v.at(i, b);
    for (std::size_t j = 0; j < vinv.cols(); ++j) vinv.at(b, j) += f * vinv.at(a, j);
  }
  void negate_row(std::size_t a) {
    for (std::size_t j = 0; j < d.cols(); ++j) d.at(a, j) = -d.at(a, j);
    for (std::size_t j = 0; j < u.cols(); ++j) u.at(a, j) = -u.at(a, j);
  }
};

} // namespace

SmithResult smith_normal_form(const ZMat& a) {
  const std::size_t r = a.rows(), n = a.cols();
  SmithWork w{a, ZMat::identity(r), ZMat::identity(n), ZMat::identity(n)};
  const std::size_t steps = std::min(r, n);
  std::size_t t = 0;
  for (; t < steps; ++t) {
    // Find a pivot of minimal absolute value in the trailing block.
    std::size_t pi = r, pj = n;
    Int best = 0;
    for (std::size_t i = t; i < r; ++i)
      for (std::size_t j = t; j < n; ++j) {
        const Int& x = w.d.at(i, j);
        if (x == 0) continue;
        Int ax = abs(x);
        if (best == 0 || ax < best) { best = ax; pi = i; pj = j; }
      }
    if (best == 0) break;
    w.swap_rows(t, pi);
    w.swap_cols(t, pj);
    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (std::size_t i = t + 1; i < r; ++i) {
        if (w.d.at(i, t) == 0) continue;
        Int q = w.d.at(i, t) / w.d.at(t, t); // truncated division keeps remainders small
        w.row_op(i, t, q);
        if (w.d.at(i, t) != 0) {
          w.swap_rows(t, i); // remainder is strictly smaller; Euclid terminates
          dirty = true;
        }
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (w.d.at(t, j) == 0) continue;
        Int q = w.d.at(t, j) / w.d.at(t, t);
        w.col_op(j, t, q);
        if (w.d.at(t, j) != 0) {
          w.swap_cols(t, j);
          dirty = true;
        }
      }
    }
    if (w.d.at(t, t) < 0) w.negate_row(t);
  }
  SmithResult res{std::move(w.d), std::move(w.u), std::move(w.v), std::move(w.vinv), t};
  return res;
}

ZMat kernel_rows(const ZMat& a) {
  if (a.rows() == 0) return ZMat::identity(a.cols());
  const auto s = smith_normal_form(a);
  // a * x^T = 0 with x = y * v^T  <=>  d * y^T = 0: free coordinates are the
  // zero-diagonal positions, i.e. columns rank..n-1 of v.
  ZMat k(a.cols() - s.rank, a.cols());
  for (std::size_t i = 0; i < k.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) k.at(i, j) = s.v.at(j, s.rank + i);
  return hermite_rows(std::move(k));
}

ZMat saturation_rows(const ZMat& a) {
  const auto s = smith_normal_form(a);
  ZMat b(s.rank, a.cols());
  for (std::size_t i = 0; i < s.rank; ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) b.at(i, j) = s.vinv.at(i, j);
  return hermite_rows(std::move(b));
}

ZMat hermite_rows(ZMat a) {
  const std::size_t rows = a.rows(), cols = a.cols();
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
    // Euclid on the column below pivot_row.
    while (true) {
      std::size_t nz = rows;
      Int best = 0;
      for (std::size_t i = pivot_row; i < rows; ++i) {
        if (a.at(i, col) == 0) continue;
        Int ax = abs(a.at(i, col));
        if (best == 0 || ax < best) { best = ax; nz = i; }
      }
      if (nz == rows) break;
      if (nz != pivot_row)
        for (std::size_t j = 0; j < cols; ++j) std::swap(a.at(nz, j), a.at(pivot_row, j));
      bool reduced = true;
      for (std::size_t i = pivot_row + 1; i < rows; ++i) {
        if (a.at(i, col) == 0) continue;
        Int q = a.at(i, col) / a.at(pivot_row, col);
        for (std::size_t j = 0; j < cols; ++j) a.at(i, j) -= q * a.at(pivot_row, j);
        if (a.at(i, col) != 0) reduced = false;
      }
      if (reduced) break;
    }
    if (a.at(pivot_row, col) == 0) continue;
    if (a.at(pivot_row, col) < 0)
      for (std::size_t j = 0; j < cols; ++j) a.at(pivot_row, j) = -a.at(pivot_row, j);
    for (std::size_t i = 0; i < pivot_row; ++i) {
      // floor division puts entries above the pivot into [0, pivot)
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), a.at(i, col).get_mpz_t(), a.at(pivot_row, col).get_mpz_t());
      if (q == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) a.at(i, j) -= q * a.at(pivot_row, j);
    }
    ++pivot_row;
  }
  ZMat out(pivot_row, cols);
  for (std::size_t i = 0; i < pivot_row; ++i)
    for (std::size_t j = 0; j < cols; ++j) out.at(i, j) = a.at(i, j);
  return out;
}

QuotientLattice quotient_lattice(const ZMat& saturated_basis, std::size_t n) {
  if (saturated_basis.rows() == 0) {
    return QuotientLattice{ZMat::identity(n), ZMat::identity(n)};
  }
  if (saturated_basis.cols() != n) fail(kInternal, "quotient_lattice dimension mismatch");
  const auto s = smith_normal_form(saturated_basis);
  const std::size_t k = s.rank;
  if (k != saturated_basis.rows()) fail(kInternal, "quotient_lattice: basis rows dependent");
  for (std::size_t t = 0; t < k; ++t)
    if (s.d.at(t, t) != 1) fail(kInternal, "quotient_lattice: basis not saturated");
  ZMat proj(n, n - k);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n - k; ++j) proj.at(i, j) = s.v.at(i, k + j);
  ZMat lift(n - k, n);
  for (std::size_t i = 0; i < n - k; ++i)
    for (std::size_t j = 0; j < n; ++j) lift.at(i, j) = s.vinv.at(k + i, j);
  return QuotientLattice{std::move(proj), std::move(lift)};
}

ZVec primitive(ZVec v) {
  Int g = 0;
  for (const auto& x : v) g = gcd(g, x);
  if (g == 0 || g == 1) return v;
  for (auto& x : v) x /= g;
  return v;
}

ZVec primitive_direction(const QVec& v) {
  Int lcm_den = 1;
  for (const auto& q : v) lcm_den = lcm(lcm_den, q.get_den());
  ZVec z(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    Rat scaled = v[i] * Rat(lcm_den);
    z[i] = scaled.get_num();
  }
  return primitive(std::move(z));
}

} // namespace tropkit
