#include "permclass/rational_function.hpp"

#include <ostream>

namespace permclass {

RationalFunction::RationalFunction(const Poly& num)
    : num_(num), den_(Poly::constant(1)) {}

RationalFunction::RationalFunction(const Poly& num, const Poly& den)
    : num_(num), den_(den) {
  if (den_.isZero()) throw AlgebraError("rational function with zero denominator");
  normalize();
}

void RationalFunction::normalize() {
  if (num_.isZero()) {
    den_ = Poly::constant(1);
    return;
  }
  if (den_.degree() > 0) {
    const Poly g = Poly::gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = Poly::divmod(num_, g).first;
      den_ = Poly::divmod(den_, g).first;
    }
  }
  const Rational lead = den_.leading();
  if (lead != 1) {
    const Rational inv = 1 / lead;
    num_ = inv * num_;
    den_ = inv * den_;
  }
}

long RationalFunction::valuation() const {
  if (isZero()) throw AlgebraError("valuation of the zero function");
  return static_cast<long>(num_.valuation()) - static_cast<long>(den_.valuation());
}

Rational RationalFunction::constantTerm() const {
  const Rational d0 = den_.coeff(0);
  if (sgn(d0) == 0) {
    if (isZero()) return 0;
    throw AlgebraError("pole at x = 0");
  }
  return num_.coeff(0) / d0;
}

std::pair<Poly, Poly> RationalFunction::gfForm() const {
  const Rational d0 = den_.coeff(0);
  if (sgn(d0) == 0) return {num_, den_};
  const Rational inv = 1 / d0;
  return {inv * num_, inv * den_};
}

std::string RationalFunction::str() const {
  const auto [n, d] = gfForm();
  if (d == Poly::constant(1)) return n.str();
  return "(" + n.str() + ")/(" + d.str() + ")";
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction out = *this;
  out.num_ = -out.num_;
  return out;
}

RationalFunction RationalFunction::fromCoprime(Poly num, Poly den) {
  RationalFunction out;
  if (num.isZero()) return out;
  const Rational lead = den.leading();
  if (lead != 1) {
    const Rational inv = 1 / lead;
    num = inv * num;
    den = inv * den;
  }
  out.num_ = std::move(num);
  out.den_ = std::move(den);
  return out;
}

namespace {

Poly quotient(const Poly& a, const Poly& b) { return Poly::divmod(a, b).first; }

}  // namespace

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.isZero()) return b;
  if (b.isZero()) return a;
  if (a.isPolynomial() && b.isPolynomial()) return RationalFunction(a.num_ + b.num_);
  const Poly g = Poly::gcd(a.den_, b.den_);
  if (g.degree() == 0)
    return RationalFunction::fromCoprime(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  const Poly ad = quotient(a.den_, g), bd = quotient(b.den_, g);
  const Poly t = a.num_ * bd + b.num_ * ad;
  if (t.isZero()) return {};
  const Poly g2 = Poly::gcd(t, g);
  if (g2.degree() == 0) return RationalFunction::fromCoprime(t, ad * b.den_);
  return RationalFunction::fromCoprime(quotient(t, g2), ad * quotient(b.den_, g2));
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  return a + (-b);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  if (a.isZero() || b.isZero()) return {};
  if (a.isPolynomial() && b.isPolynomial()) {
    RationalFunction out;
    out.num_ = a.num_ * b.num_;
    return out;
  }
  const Poly g1 = Poly::gcd(a.num_, b.den_), g2 = Poly::gcd(b.num_, a.den_);
  const auto cut = [](const Poly& p, const Poly& g) { return g.degree() > 0 ? quotient(p, g) : p; };
  return RationalFunction::fromCoprime(cut(a.num_, g1) * cut(b.num_, g2),
                                       cut(a.den_, g2) * cut(b.den_, g1));
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.isZero()) throw AlgebraError("division by the zero rational function");
  return a * RationalFunction::fromCoprime(b.den_, b.num_);
}

std::ostream& operator<<(std::ostream& os, const RationalFunction& f) {
  return os << f.str();
}

}  // namespace permclass
