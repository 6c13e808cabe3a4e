#include "permclass/linear_system.hpp"

#include <stdexcept>

namespace permclass {

namespace {

void checkShape(const RatMatrix& m, const RatVector& v) {
  for (const auto& row : m)
    if (row.size() != m.size())
      throw std::invalid_argument("system matrix is not square");
  if (v.size() != m.size())
    throw std::invalid_argument("right-hand side length does not match the matrix");
}

}  // namespace

RatVector solveLinearSystem(const RatMatrix& m, const RatVector& v) {
  checkShape(m, v);
  const std::size_t n = m.size();
  RatMatrix a(n, RatVector(n));
  RatVector b = v;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      a[i][j] = (i == j ? RationalFunction::constant(1) : RationalFunction()) - m[i][j];

  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = n;
    for (std::size_t r = col; r < n; ++r) {
      if (a[r][col].isZero()) continue;
      if (pivot == n || a[r][col].valuation() < a[pivot][col].valuation()) pivot = r;
    }
    if (pivot == n)
      throw SingularSystemError(col, "I - M is singular: no pivot in column " +
                                         std::to_string(col));
    std::swap(a[col], a[pivot]);
    std::swap(b[col], b[pivot]);
    const RationalFunction inv = RationalFunction::constant(1) / a[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a[r][col].isZero()) continue;
      const RationalFunction factor = a[r][col] * inv;
      a[r][col] = RationalFunction();
      for (std::size_t c = col + 1; c < n; ++c)
        if (!a[col][c].isZero()) a[r][c] -= factor * a[col][c];
      if (!b[col].isZero()) b[r] -= factor * b[col];
    }
  }

  RatVector h(n);
  for (std::size_t i = n; i-- > 0;) {
    RationalFunction acc = b[i];
    for (std::size_t c = i + 1; c < n; ++c)
      if (!a[i][c].isZero() && !h[c].isZero()) acc -= a[i][c] * h[c];
    h[i] = acc / a[i][i];
  }
  return h;
}

RatVector systemResidual(const RatMatrix& m, const RatVector& v, const RatVector& h) {
  checkShape(m, v);
  if (h.size() != v.size())
    throw std::invalid_argument("solution length does not match the system");
  RatVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    RationalFunction acc = h[i] - v[i];
    for (std::size_t j = 0; j < v.size(); ++j)
      if (!m[i][j].isZero()) acc -= m[i][j] * h[j];
    r[i] = acc;
  }
  return r;
}

}  // namespace permclass
