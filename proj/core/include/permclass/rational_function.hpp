#ifndef PERMCLASS_RATIONAL_FUNCTION_HPP
#define PERMCLASS_RATIONAL_FUNCTION_HPP

#include <iosfwd>
#include <string>

#include "permclass/poly.hpp"

namespace permclass {

/// Element of Q(x) in lowest terms with a monic denominator.
class RationalFunction {
public:
  RationalFunction() : den_(Poly::constant(1)) {}
  RationalFunction(const Poly& num);  // NOLINT: polynomials embed implicitly
  /// Throws AlgebraError if `den` is zero.
  RationalFunction(const Poly& num, const Poly& den);

  static RationalFunction x() { return RationalFunction(Poly::x()); }
  static RationalFunction constant(const Rational& c) {
    return RationalFunction(Poly::constant(c));
  }

  const Poly& num() const noexcept { return num_; }
  const Poly& den() const noexcept { return den_; }

  bool isZero() const noexcept { return num_.isZero(); }
  bool isPolynomial() const noexcept { return den_.degree() == 0; }

  /// x-adic valuation val(num) - val(den); throws on zero.
  long valuation() const;

  /// Value at x = 0; throws AlgebraError if there is a pole at 0.
  Rational constantTerm() const;

  /// Numerator and denominator rescaled so that den(0) = 1, which is the
  /// conventional way to write a generating function. Falls back to the
  /// monic form if den(0) = 0.
  std::pair<Poly, Poly> gfForm() const;

  /// "(x - 2*x^2)/(1 - 4*x + 2*x^2)" in gfForm.
  std::string str() const;

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& a,
                                    const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a,
                                    const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a,
                                    const RationalFunction& b);
  /// Throws AlgebraError when `b` is zero.
  friend RationalFunction operator/(const RationalFunction& a,
                                    const RationalFunction& b);

  RationalFunction& operator+=(const RationalFunction& b) { return *this = *this + b; }
  RationalFunction& operator-=(const RationalFunction& b) { return *this = *this - b; }
  RationalFunction& operator*=(const RationalFunction& b) { return *this = *this * b; }

  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

private:
  // num/den already coprime; only rescales to a monic denominator.
  static RationalFunction fromCoprime(Poly num, Poly den);

  void normalize();
  Poly num_;
  Poly den_;
};

std::ostream& operator<<(std::ostream& os, const RationalFunction& f);

}  // namespace permclass

#endif  // PERMCLASS_RATIONAL_FUNCTION_HPP
