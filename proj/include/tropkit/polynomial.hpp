#pragma once

#include <string>
#include <vector>

#include "tropkit/rational.hpp"

namespace tropkit {

// Univariate polynomial with integer coefficients, stored ascending.
// The top coefficient is nonzero unless the polynomial is zero.
class IntPolynomial {
public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Int> ascending_coeffs);

  static IntPolynomial zero() { return IntPolynomial(); }
  static IntPolynomial monomial(const Int& c, std::size_t degree);

  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Int coeff(std::size_t k) const;
  const std::vector<Int>& coeffs() const { return coeffs_; }

  Int eval(const Int& x) const;
  std::string to_string(const std::string& var = "lambda") const;

  IntPolynomial operator+(const IntPolynomial& other) const;
  IntPolynomial operator-(const IntPolynomial& other) const;
  IntPolynomial operator*(const IntPolynomial& other) const;
  bool operator==(const IntPolynomial& other) const = default;

private:
  void normalize();
  std::vector<Int> coeffs_;
};

} // namespace tropkit
