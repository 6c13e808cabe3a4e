#ifndef PERMCLASS_POLY_HPP
#define PERMCLASS_POLY_HPP

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace permclass {

using Rational = mpq_class;
using BigInt = mpz_class;

/// Division by zero or a pole where a finite value was required.
class AlgebraError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Dense univariate polynomial over Q, ascending degree, no trailing zeros.
class Poly {
public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);
  Poly(std::initializer_list<long> coeffs);

  static Poly constant(const Rational& c);
  static Poly monomial(const Rational& c, std::size_t degree);
  static Poly x() { return monomial(1, 1); }

  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  /// Coefficient of x^k, zero beyond the degree.
  Rational coeff(std::size_t k) const;
  bool isZero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  const Rational& leading() const;
  /// Lowest exponent with a nonzero coefficient; throws on zero.
  std::size_t valuation() const;

  Poly monic() const;
  Poly operator-() const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Rational& c, const Poly& p);
  friend bool operator==(const Poly&, const Poly&) = default;

  /// Polynomial long division; throws AlgebraError if `divisor` is zero.
  static std::pair<Poly, Poly> divmod(const Poly& dividend, const Poly& divisor);

  /// Monic greatest common divisor; gcd(0, 0) = 0.
  static Poly gcd(Poly a, Poly b);

  /// Human-readable form such as "1 - 4*x + 2*x^2".
  std::string str(const std::string& var = "x") const;

private:
  void trim();
  std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Poly& p);

}  // namespace permclass

#endif  // PERMCLASS_POLY_HPP
