#ifndef PERMCLASS_USPEC_HPP
#define PERMCLASS_USPEC_HPP

#include <set>
#include <string>

#include "permclass/permutation.hpp"

namespace permclass {

/// The class U whose members are inflated into the points of X-class
/// permutations. Only kinds whose per-profile generating functions can be
/// computed mechanically are supported.
class USpec {
public:
  enum class Kind { Trivial, FiniteSet, Increasing, Decreasing };

  /// How `finite` treats a set that is not downward closed.
  enum class Completion { Reject, Complete };

  /// The class {1}.
  static USpec trivial();
  /// Av(21).
  static USpec increasing();
  /// Av(12).
  static USpec decreasing();
  /// An explicit finite class. Throws std::invalid_argument if the set is
  /// empty, contains the empty permutation, or (with Completion::Reject) is
  /// not downward closed.
  static USpec finite(std::set<Permutation> members,
                      Completion completion = Completion::Reject);

  Kind kind() const noexcept { return kind_; }
  bool isFinite() const noexcept {
    return kind_ == Kind::Trivial || kind_ == Kind::FiniteSet;
  }

  /// Membership of a nonempty permutation; the empty permutation is never a
  /// member.
  bool containsPerm(const Permutation& pi) const;

  /// Members of a finite kind; throws std::logic_error for infinite kinds.
  const std::set<Permutation>& members() const;

  std::string name() const;

  friend bool operator==(const USpec&, const USpec&) = default;

private:
  USpec(Kind kind, std::set<Permutation> members)
      : kind_(kind), members_(std::move(members)) {}

  Kind kind_;
  std::set<Permutation> members_;
};

}  // namespace permclass

#endif  // PERMCLASS_USPEC_HPP
