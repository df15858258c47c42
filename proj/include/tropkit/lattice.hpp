#pragma once

#include <cstddef>
#include <vector>

#include "tropkit/linalg.hpp"
#include "tropkit/rational.hpp"

namespace tropkit {

// Dense matrix over Z, used for lattice computations (tangent lattices,
// saturations, quotient coordinates).
class ZMat {
public:
  ZMat() = default;
  ZMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static ZMat identity(std::size_t n);
  static ZMat from_rows(std::vector<ZVec> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Int& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  ZVec row(std::size_t i) const;
  void append_row(const ZVec& r);

  bool operator==(const ZMat& other) const = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

ZMat mul(const ZMat& a, const ZMat& b);
ZVec mul_vec(const ZVec& x, const ZMat& a); // row vector times matrix
ZMat transpose(const ZMat& a);
QMat to_qmat(const ZMat& a);

// Smith decomposition u * a * v = d with u, v unimodular; vinv = v^-1,
// so a = uinv * d * vinv and the first `rank` rows of vinv span the
// saturation of the row space of a.
struct SmithResult {
  ZMat d;
  ZMat u;
  ZMat v;
  ZMat vinv;
  std::size_t rank = 0;
};

SmithResult smith_normal_form(const ZMat& a);

// Rows form a basis of {x in Z^n : a x^T = 0}; always saturated.
ZMat kernel_rows(const ZMat& a);

// Rows form a basis of the saturation Z^n ∩ (rowspace ⊗ Q),
// canonicalized by row Hermite form.
ZMat saturation_rows(const ZMat& a);

// Unique row Hermite normal form: echelon, positive pivots, entries above
// each pivot reduced into [0, pivot); zero rows dropped.
ZMat hermite_rows(ZMat a);

// Coordinates for Z^n / L with L a saturated lattice given by basis rows.
// proj is n x (n-k) acting on row vectors as z * proj; lift is (n-k) x n
// with (z * proj) * lift ≡ z modulo L.
struct QuotientLattice {
  ZMat proj;
  ZMat lift;
};

QuotientLattice quotient_lattice(const ZMat& saturated_basis, std::size_t n);

// Divides by the gcd of the entries; the zero vector is returned unchanged.
ZVec primitive(ZVec v);

// Clears denominators and divides by the gcd; direction of a rational vector.
ZVec primitive_direction(const QVec& v);

} // namespace tropkit
