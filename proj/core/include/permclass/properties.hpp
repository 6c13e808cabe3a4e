#ifndef PERMCLASS_PROPERTIES_HPP
#define PERMCLASS_PROPERTIES_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "permclass/enumerator.hpp"
#include "permclass/permutation.hpp"

namespace permclass {

/// A subset of a PropertySet, stored as a bitset over the property order.
class Profile {
public:
  Profile() = default;
  explicit Profile(std::size_t bits) : bits_(bits), words_((bits + 63) / 64) {}

  std::size_t size() const noexcept { return bits_; }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1u; }
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void reset(std::size_t i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
  bool isSubsetOf(const Profile& other) const;

  friend bool operator==(const Profile&, const Profile&) = default;
  friend auto operator<=>(const Profile&, const Profile&) = default;

private:
  std::size_t bits_ = 0;
  std::vector<std::uint64_t> words_;
};

/// The property family {sum decomposable, skew decomposable} together with
/// Av(d) for every nonempty d in the closure of a basis. Property 0 is "sum
/// decomposable", property 1 is "skew decomposable", and property 2 + i is
/// Av(patterns()[i]), with patterns sorted by length then lexicographically.
class PropertySet {
public:
  static constexpr std::size_t kSum = 0;
  static constexpr std::size_t kSkew = 1;

  /// A way of writing a pattern d as left (+) right (or left (-) right).
  /// Each side is the property index of Av(side), or -1 for the empty side.
  struct Split {
    int left;
    int right;
  };

  explicit PropertySet(const ClassSpec& basis);

  std::size_t size() const noexcept { return 2 + patterns_.size(); }
  const std::vector<Permutation>& patterns() const noexcept { return patterns_; }

  static constexpr std::size_t avoidIndex(std::size_t patternIndex) {
    return 2 + patternIndex;
  }
  /// Property index of Av(d); throws std::out_of_range if d is not in the
  /// closure.
  std::size_t avoidIndexOf(const Permutation& d) const;

  const std::vector<Split>& sumSplits(std::size_t patternIndex) const {
    return sumSplits_[patternIndex];
  }
  const std::vector<Split>& skewSplits(std::size_t patternIndex) const {
    return skewSplits_[patternIndex];
  }

  /// {Av(b) : b in the basis}: the profiles containing it are those of
  /// permutations avoiding every basis element.
  const Profile& target() const noexcept { return target_; }

  std::string propertyName(std::size_t index) const;
  /// "{+, Av(21)}" style listing.
  std::string describe(const Profile& q) const;

private:
  std::vector<Permutation> patterns_;
  std::map<Permutation, std::size_t> index_;
  std::vector<std::vector<Split>> sumSplits_;
  std::vector<std::vector<Split>> skewSplits_;
  Profile target_;
};

/// Properties satisfied by a nonempty permutation; throws
/// std::invalid_argument on the empty permutation.
Profile profileOf(const Permutation& pi, const PropertySet& props);

/// Profile of a (+) b computed from the profiles of a and b alone.
Profile combineSum(const Profile& a, const Profile& b, const PropertySet& props);
/// Profile of a (-) b computed from the profiles of a and b alone.
Profile combineSkew(const Profile& a, const Profile& b, const PropertySet& props);

}  // namespace permclass

#endif  // PERMCLASS_PROPERTIES_HPP
