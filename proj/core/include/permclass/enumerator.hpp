#ifndef PERMCLASS_ENUMERATOR_HPP
#define PERMCLASS_ENUMERATOR_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "permclass/permutation.hpp"
#include "permclass/uspec.hpp"

namespace permclass {

/// A finite basis. Stored as an antichain in sorted order: duplicates and
/// elements containing another element are dropped on construction.
class ClassSpec {
public:
  ClassSpec() = default;
  /// Throws std::invalid_argument if the empty permutation is given.
  explicit ClassSpec(std::vector<Permutation> basis);

  const std::vector<Permutation>& basis() const noexcept { return basis_; }
  bool empty() const noexcept { return basis_.empty(); }

  bool admits(const Permutation& pi) const { return avoidsAll(pi, basis_); }

  /// Semicolon-separated basis, "" when empty.
  std::string str() const;

  friend bool operator==(const ClassSpec&, const ClassSpec&) = default;

private:
  std::vector<Permutation> basis_;
};

/// Parses "2413;3142" (any permutation syntax per element). Blank input is
/// the empty basis.
ClassSpec parseBasis(std::string_view text);

/// Exact counts per length 1..maxN, optionally with the members of each
/// length in lexicographic order.
struct CountTable {
  std::vector<std::uint64_t> counts;  // counts[n - 1] for length n
  std::optional<std::vector<std::vector<Permutation>>> members;

  std::size_t maxN() const noexcept { return counts.size(); }
  std::uint64_t count(std::size_t n) const { return counts.at(n - 1); }

  friend bool operator==(const CountTable&, const CountTable&) = default;
};

/// Raised when one length level holds more members than the configured cap.
class ResourceError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct EnumerationOptions {
  std::size_t maxMembersPerLevel = 10'000'000;
  bool keepMembers = false;
  /// 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
};

/// Reads PERMCLASS_MAX_MEMBERS if set; otherwise returns `fallback`.
std::size_t memberCapFromEnvironment(std::size_t fallback = 10'000'000);

/// |Av(basis)_n| for n = 1..maxN.
CountTable enumerateAv(const ClassSpec& spec, std::size_t maxN,
                       const EnumerationOptions& options = {});

/// |X[U] ∩ Av(basis)|_n for n = 1..maxN.
CountTable enumerateXU(const USpec& u, const ClassSpec& spec, std::size_t maxN,
                       const EnumerationOptions& options = {});

}  // namespace permclass

#endif  // PERMCLASS_ENUMERATOR_HPP
