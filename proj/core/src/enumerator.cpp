#include "permclass/enumerator.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <thread>

#include "permclass/septree.hpp"

namespace permclass {

ClassSpec::ClassSpec(std::vector<Permutation> basis) {
  std::sort(basis.begin(), basis.end());
  basis.erase(std::unique(basis.begin(), basis.end()), basis.end());
  for (const auto& b : basis) {
    if (b.empty())
      throw std::invalid_argument("basis may not contain the empty permutation");
    // Sorted by length, so any element b contains was already considered.
    const bool redundant = std::any_of(
        basis_.begin(), basis_.end(),
        [&](const Permutation& kept) { return contains(b, kept); });
    if (!redundant) basis_.push_back(b);
  }
}

std::string ClassSpec::str() const {
  std::string out;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (i) out += ";";
    out += basis_[i].str();
  }
  return out;
}

ClassSpec parseBasis(std::string_view text) {
  std::vector<Permutation> basis;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t stop = text.find(';', start);
    if (stop == std::string_view::npos) stop = text.size();
    std::string_view token = text.substr(start, stop - start);
    const auto first = token.find_first_not_of(" \t");
    if (first != std::string_view::npos) {
      token = token.substr(first, token.find_last_not_of(" \t") - first + 1);
      basis.push_back(parsePermutation(token));
    }
    start = stop + 1;
  }
  return ClassSpec(std::move(basis));
}

std::size_t memberCapFromEnvironment(std::size_t fallback) {
  const char* raw = std::getenv("PERMCLASS_MAX_MEMBERS");
  if (raw == nullptr || *raw == '\0') return fallback;
  char* endp = nullptr;
  const unsigned long long v = std::strtoull(raw, &endp, 10);
  if (endp == raw || *endp != '\0' || v == 0)
    throw std::invalid_argument(
        std::string("PERMCLASS_MAX_MEMBERS must be a positive integer, got '") +
        raw + "'");
  return static_cast<std::size_t>(v);
}

namespace {

using Filter = std::function<bool(const Permutation&)>;

// Children of `parent`: the new maximum inserted at every position.
void extend(const Permutation& parent, const Filter& keep,
            std::vector<Permutation>& out) {
  const int top = static_cast<int>(parent.size()) + 1;
  std::vector<int> buf(parent.size() + 1);
  for (std::size_t pos = 0; pos <= parent.size(); ++pos) {
    std::copy(parent.begin(), parent.begin() + pos, buf.begin());
    buf[pos] = top;
    std::copy(parent.begin() + pos, parent.end(), buf.begin() + pos + 1);
    Permutation child(buf);
    if (keep(child)) out.push_back(std::move(child));
  }
}

std::vector<Permutation> nextLevel(const std::vector<Permutation>& level,
                                   const Filter& keep, unsigned threads) {
  std::vector<Permutation> next;
  const std::size_t workers =
      std::min<std::size_t>(threads, std::max<std::size_t>(1, level.size() / 256));
  if (workers <= 1) {
    for (const auto& parent : level) extend(parent, keep, next);
  } else {
    std::vector<std::vector<Permutation>> partial(workers);
    std::vector<std::thread> pool;
    const std::size_t chunk = (level.size() + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        const std::size_t lo = w * chunk;
        const std::size_t hi = std::min(level.size(), lo + chunk);
        for (std::size_t i = lo; i < hi; ++i) extend(level[i], keep, partial[w]);
      });
    }
    for (auto& t : pool) t.join();
    for (auto& part : partial)
      next.insert(next.end(), std::make_move_iterator(part.begin()),
                  std::make_move_iterator(part.end()));
  }
  std::sort(next.begin(), next.end());
  return next;
}

// Deleting the maximum of a class member yields a class member, so growing
// each level by inserting a new maximum reaches every member exactly once.
CountTable enumerate(const Filter& keep, std::size_t maxN,
                     const EnumerationOptions& options) {
  if (maxN < 1) throw std::invalid_argument("maxN must be at least 1");
  unsigned threads = options.threads;
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());

  CountTable table;
  if (options.keepMembers) table.members.emplace();
  std::vector<Permutation> level;
  if (Permutation one{1}; keep(one)) level.push_back(one);
  for (std::size_t n = 1; n <= maxN; ++n) {
    if (n > 1) level = nextLevel(level, keep, threads);
    if (level.size() > options.maxMembersPerLevel)
      throw ResourceError("length " + std::to_string(n) + " has " +
                          std::to_string(level.size()) +
                          " members, above the cap of " +
                          std::to_string(options.maxMembersPerLevel));
    table.counts.push_back(level.size());
    if (table.members) table.members->push_back(level);
  }
  return table;
}

}  // namespace

CountTable enumerateAv(const ClassSpec& spec, std::size_t maxN,
                       const EnumerationOptions& options) {
  return enumerate([&](const Permutation& p) { return spec.admits(p); }, maxN,
                   options);
}

CountTable enumerateXU(const USpec& u, const ClassSpec& spec, std::size_t maxN,
                       const EnumerationOptions& options) {
  return enumerate(
      [&](const Permutation& p) {
        return spec.admits(p) && isInXInflation(p, u);
      },
      maxN, options);
}

}  // namespace permclass
