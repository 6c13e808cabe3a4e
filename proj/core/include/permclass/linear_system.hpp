#ifndef PERMCLASS_LINEAR_SYSTEM_HPP
#define PERMCLASS_LINEAR_SYSTEM_HPP

#include <cstddef>
#include <vector>

#include "permclass/rational_function.hpp"

namespace permclass {

using RatVector = std::vector<RationalFunction>;
/// Row-major square matrix.
using RatMatrix = std::vector<RatVector>;

class SingularSystemError : public AlgebraError {
public:
  SingularSystemError(std::size_t column, const std::string& what)
      : AlgebraError(what), column_(column) {}
  /// Elimination column for which no nonzero pivot remained.
  std::size_t column() const noexcept { return column_; }

private:
  std::size_t column_;
};

/// Solves h = M h + v, i.e. (I - M) h = v, over Q(x) by Gaussian
/// elimination. The pivot in each column is the candidate of lowest x-adic
/// valuation; when every entry of M has zero constant term the diagonal
/// always qualifies. Throws SingularSystemError if I - M is singular and
/// std::invalid_argument on mismatched dimensions.
RatVector solveLinearSystem(const RatMatrix& m, const RatVector& v);

/// (I - M) h - v, exactly.
RatVector systemResidual(const RatMatrix& m, const RatVector& v, const RatVector& h);

}  // namespace permclass

#endif  // PERMCLASS_LINEAR_SYSTEM_HPP
