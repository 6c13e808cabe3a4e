#ifndef PERMCLASS_POWER_SERIES_HPP
#define PERMCLASS_POWER_SERIES_HPP

#include <cstddef>
#include <functional>
#include <vector>

#include "permclass/poly.hpp"
#include "permclass/rational_function.hpp"

namespace permclass {

/// Truncated power series c_0 + c_1 x + ... + c_N x^N. Arithmetic on two
/// series is carried out to the smaller of their orders.
class PowerSeries {
public:
  /// The zero series of order `order`.
  explicit PowerSeries(std::size_t order) : coeffs_(order + 1) {}
  PowerSeries(std::vector<Rational> coeffs, std::size_t order);

  static PowerSeries x(std::size_t order);
  static PowerSeries constant(const Rational& c, std::size_t order);
  static PowerSeries fromPoly(const Poly& p, std::size_t order);

  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  /// Throws std::out_of_range past the truncation order.
  const Rational& operator[](std::size_t k) const { return coeffs_.at(k); }

  /// Index of the first coefficient where the series differ, or
  /// min(order) + 1 if they agree throughout.
  static std::size_t agreement(const PowerSeries& a, const PowerSeries& b);

  /// Multiplicative inverse; throws AlgebraError if c_0 = 0.
  PowerSeries inverse() const;

  PowerSeries operator-() const;
  friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator*(const Rational& c, const PowerSeries& a);
  friend PowerSeries operator/(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator+(const Rational& c, const PowerSeries& a);

  friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

private:
  std::vector<Rational> coeffs_;
};

/// Coefficients c_0..c_N of f, from the linear recurrence given by its
/// denominator. Throws AlgebraError if f has a pole at 0.
PowerSeries seriesExpand(const RationalFunction& f, std::size_t order);

using SeriesFunctional = std::function<PowerSeries(const PowerSeries&)>;

/// The series f with f(0) = 0 and f = phi(f) through x^order, found by
/// iterating phi from zero. Each iteration must extend the agreement with
/// the previous iterate by at least one coefficient; otherwise, or if the
/// limit has a nonzero constant term, AlgebraError is thrown.
PowerSeries solveFixedPointSeries(const SeriesFunctional& phi, std::size_t order);

}  // namespace permclass

#endif  // PERMCLASS_POWER_SERIES_HPP
