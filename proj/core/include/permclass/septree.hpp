#ifndef PERMCLASS_SEPTREE_HPP
#define PERMCLASS_SEPTREE_HPP

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "permclass/permutation.hpp"
#include "permclass/uspec.hpp"

namespace permclass {

/// Sum/skew decomposition tree of a separable permutation.
///
/// Trees are kept in alternating canonical form: a sum node never has a sum
/// child and a skew node never has a skew child, so every separable
/// permutation has exactly one tree. Text form is "+(1, -(1, 1))" for
/// 1 (+) (1 (-) 1) = 132, with "1" for a leaf.
class SeparatingTree {
public:
  enum class Kind { Leaf, Sum, Skew };

  static SeparatingTree leaf() { return SeparatingTree(Kind::Leaf, {}); }
  /// Builds an internal node, flattening same-kind children. Throws
  /// std::invalid_argument for Kind::Leaf or fewer than two children.
  static SeparatingTree node(Kind kind, std::vector<SeparatingTree> children);

  Kind kind() const noexcept { return kind_; }
  const std::vector<SeparatingTree>& children() const noexcept {
    return children_;
  }
  /// Number of leaves, i.e. the length of the represented permutation.
  std::size_t frontierSize() const;

  std::string str() const;

  friend bool operator==(const SeparatingTree&, const SeparatingTree&) = default;

private:
  SeparatingTree(Kind kind, std::vector<SeparatingTree> children)
      : kind_(kind), children_(std::move(children)) {}

  Kind kind_;
  std::vector<SeparatingTree> children_;
};

/// Parses the bracket text form; throws ParseError on malformed input.
SeparatingTree parseTree(std::string_view text);

/// The canonical tree of `pi`, or nullopt when `pi` contains 2413 or 3142.
/// Throws std::invalid_argument on the empty permutation.
std::optional<SeparatingTree> buildTree(const Permutation& pi);

Permutation treeToPermutation(const SeparatingTree& tree);

/// Av(2413, 3142). The empty permutation is separable.
bool isSeparable(const Permutation& pi);

/// Replaces point i of `pi` with a block order-isomorphic to parts[i].
/// Throws std::invalid_argument on an arity mismatch or an empty part.
Permutation inflate(const Permutation& pi, std::span<const Permutation> parts);

/// Basis of the class X.
std::span<const Permutation> xBasis();

/// Membership in X = Av(2143, 2413, 3142, 3412).
bool isInX(const Permutation& pi);

/// Membership in the inflation X[U].
///
/// A nonempty permutation lies in X[U] iff it lies in U, or it splits as a
/// sum (or skew sum) of two nonempty parts with one part in U and the
/// other in X[U]. The empty permutation is not a member.
bool isInXInflation(const Permutation& pi, const USpec& u);

}  // namespace permclass

#endif  // PERMCLASS_SEPTREE_HPP
