#include "permclass/power_series.hpp"

#include <algorithm>

namespace permclass {

PowerSeries::PowerSeries(std::vector<Rational> coeffs, std::size_t order)
    : coeffs_(std::move(coeffs)) {
  coeffs_.resize(order + 1);
}

PowerSeries PowerSeries::x(std::size_t order) {
  PowerSeries s(order);
  if (order >= 1) s.coeffs_[1] = 1;
  return s;
}

PowerSeries PowerSeries::constant(const Rational& c, std::size_t order) {
  PowerSeries s(order);
  s.coeffs_[0] = c;
  return s;
}

PowerSeries PowerSeries::fromPoly(const Poly& p, std::size_t order) {
  PowerSeries s(order);
  for (std::size_t k = 0; k <= order; ++k) s.coeffs_[k] = p.coeff(k);
  return s;
}

std::size_t PowerSeries::agreement(const PowerSeries& a, const PowerSeries& b) {
  const std::size_t n = std::min(a.order(), b.order()) + 1;
  for (std::size_t k = 0; k < n; ++k)
    if (a.coeffs_[k] != b.coeffs_[k]) return k;
  return n;
}

PowerSeries PowerSeries::inverse() const {
  if (sgn(coeffs_[0]) == 0)
    throw AlgebraError("series with zero constant term is not invertible");
  const std::size_t n = order();
  PowerSeries out(n);
  const Rational inv0 = 1 / coeffs_[0];
  out.coeffs_[0] = inv0;
  for (std::size_t k = 1; k <= n; ++k) {
    Rational acc = 0;
    for (std::size_t i = 1; i <= k; ++i) acc += coeffs_[i] * out.coeffs_[k - i];
    out.coeffs_[k] = -acc * inv0;
  }
  return out;
}

PowerSeries PowerSeries::operator-() const {
  PowerSeries out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
  PowerSeries out(std::min(a.order(), b.order()));
  for (std::size_t k = 0; k <= out.order(); ++k)
    out.coeffs_[k] = a.coeffs_[k] + b.coeffs_[k];
  return out;
}

PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
  return a + (-b);
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
  PowerSeries out(std::min(a.order(), b.order()));
  const std::size_t n = out.order();
  for (std::size_t i = 0; i <= n; ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; i + j <= n; ++j)
      out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return out;
}

PowerSeries operator*(const Rational& c, const PowerSeries& a) {
  PowerSeries out = a;
  for (auto& x : out.coeffs_) x *= c;
  return out;
}

PowerSeries operator/(const PowerSeries& a, const PowerSeries& b) {
  return a * b.inverse();
}

PowerSeries operator+(const Rational& c, const PowerSeries& a) {
  PowerSeries out = a;
  out.coeffs_[0] += c;
  return out;
}

PowerSeries seriesExpand(const RationalFunction& f, std::size_t order) {
  const Poly& num = f.num();
  const Poly& den = f.den();
  const Rational d0 = den.coeff(0);
  if (sgn(d0) == 0) throw AlgebraError("cannot expand: pole at x = 0");
  std::vector<Rational> c(order + 1);
  const std::size_t dd = static_cast<std::size_t>(den.degree());
  for (std::size_t k = 0; k <= order; ++k) {
    Rational acc = num.coeff(k);
    for (std::size_t i = 1; i <= std::min(k, dd); ++i)
      acc -= den.coeffs()[i] * c[k - i];
    c[k] = acc / d0;
  }
  return PowerSeries(std::move(c), order);
}

PowerSeries solveFixedPointSeries(const SeriesFunctional& phi, std::size_t order) {
  PowerSeries current(order);
  std::size_t agreed = 0;
  for (std::size_t iter = 0; iter <= order + 1; ++iter) {
    PowerSeries next = phi(current);
    if (next.order() < order)
      throw AlgebraError("functional truncated the series below the requested order");
    next = PowerSeries(next.coeffs(), order);
    const std::size_t a = PowerSeries::agreement(current, next);
    if (a > order) {
      if (sgn(next[0]) != 0)
        throw AlgebraError("fixed point has a nonzero constant term");
      return next;
    }
    if (iter > 0 && a <= agreed)
      throw AlgebraError("functional is not a contraction: agreement stalled at x^" +
                         std::to_string(a));
    agreed = a;
    current = std::move(next);
  }
  throw AlgebraError("fixed-point iteration did not converge");
}

}  // namespace permclass
