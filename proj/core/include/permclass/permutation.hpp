#ifndef PERMCLASS_PERMUTATION_HPP
#define PERMCLASS_PERMUTATION_HPP

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace permclass {

/// Raised when text or a value sequence does not describe a permutation.
class ParseError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A permutation of {1,...,n} in one-line notation. The empty permutation
/// (n = 0) is a valid value and is contained in every permutation.
class Permutation {
public:
  using value_type = int;

  Permutation() = default;
  Permutation(std::initializer_list<value_type> values);

  /// Throws ParseError unless `values` is a bijection onto {1,...,n}.
  explicit Permutation(std::vector<value_type> values);

  /// Rank-reduces any sequence of distinct integers to the permutation it
  /// is order-isomorphic to, e.g. (5, 9, 2) -> 231.
  static Permutation standardize(std::span<const value_type> values);

  static Permutation identity(std::size_t n);
  static Permutation decreasing(std::size_t n);

  std::size_t size() const noexcept { return values_.size(); }
  bool empty() const noexcept { return values_.empty(); }

  /// Zero-based index into the one-line notation.
  value_type operator[](std::size_t i) const { return values_[i]; }
  std::span<const value_type> values() const noexcept { return values_; }

  auto begin() const noexcept { return values_.begin(); }
  auto end() const noexcept { return values_.end(); }

  bool isIncreasing() const noexcept;
  bool isDecreasing() const noexcept;

  /// Canonical text: digits without separators for n <= 9, otherwise
  /// comma-separated. The empty permutation prints as "".
  std::string str() const;
  /// Always comma-separated.
  std::string commaStr() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  /// Length first, then lexicographic on one-line notation.
  friend std::strong_ordering operator<=>(const Permutation& a,
                                          const Permutation& b);

private:
  std::vector<value_type> values_;
};

/// Parses "8,9,1,6,7,3,4,2", "8 9 1 6", or the compact form "2413" (length
/// at most 9). An empty or all-whitespace string parses to the empty
/// permutation.
Permutation parsePermutation(std::string_view text);

/// Parses the same syntax as parsePermutation but accepts any sequence of
/// distinct positive integers, rank-reducing it ("89167342" -> 78156342).
/// Throws ParseError on repeated values or malformed tokens.
Permutation parseRankReduced(std::string_view text);

/// True iff `pattern` occurs in `pi` as an order-isomorphic subsequence.
bool contains(const Permutation& pi, const Permutation& pattern);

inline bool avoids(const Permutation& pi, const Permutation& pattern) {
  return !contains(pi, pattern);
}
bool avoidsAll(const Permutation& pi, std::span<const Permutation> patterns);

Permutation directSum(const Permutation& a, const Permutation& b);
Permutation skewSum(const Permutation& a, const Permutation& b);

Permutation reverse(const Permutation& pi);
Permutation complement(const Permutation& pi);
Permutation inverse(const Permutation& pi);

/// Maximal decomposition into sum-indecomposable components, left to right.
/// Throws std::invalid_argument on the empty permutation.
std::vector<Permutation> sumComponents(const Permutation& pi);
/// Maximal decomposition into skew-indecomposable components, left to right.
std::vector<Permutation> skewComponents(const Permutation& pi);

bool isSumDecomposable(const Permutation& pi);
bool isSkewDecomposable(const Permutation& pi);

/// Removes the entry at `position` and rank-reduces the rest.
Permutation deletePoint(const Permutation& pi, std::size_t position);

/// Every nonempty permutation contained in some member of `perms`.
std::set<Permutation> closure(std::span<const Permutation> perms);
std::set<Permutation> closure(const std::set<Permutation>& perms);

/// All n! permutations of length n in lexicographic order.
std::vector<Permutation> allPermutations(std::size_t n);

std::ostream& operator<<(std::ostream& os, const Permutation& pi);

}  // namespace permclass

template <>
struct std::hash<permclass::Permutation> {
  std::size_t operator()(const permclass::Permutation& pi) const noexcept;
};

#endif  // PERMCLASS_PERMUTATION_HPP
