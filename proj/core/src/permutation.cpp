#include "permclass/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <ostream>

namespace permclass {

namespace {

// For each pattern index j, the earlier index holding the largest value
// below pattern[j] and the earlier index holding the smallest value above
// it (-1 if none). Matching these two neighbours is equivalent to matching
// the relative order against every earlier entry.
struct PatternBounds {
  std::vector<int> lower;
  std::vector<int> upper;
};

PatternBounds patternBounds(const Permutation& pattern) {
  const std::size_t k = pattern.size();
  PatternBounds b{std::vector<int>(k, -1), std::vector<int>(k, -1)};
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (pattern[i] < pattern[j]) {
        if (b.lower[j] < 0 || pattern[i] > pattern[b.lower[j]])
          b.lower[j] = static_cast<int>(i);
      } else if (b.upper[j] < 0 || pattern[i] < pattern[b.upper[j]]) {
        b.upper[j] = static_cast<int>(i);
      }
    }
  }
  return b;
}

bool embed(const Permutation& pi, const Permutation& pattern,
           const PatternBounds& bounds, std::vector<std::size_t>& chosen,
           std::size_t j, std::size_t start) {
  const std::size_t k = pattern.size();
  if (j == k) return true;
  const std::size_t n = pi.size();
  const int lo = bounds.lower[j] < 0 ? 0 : pi[chosen[bounds.lower[j]]];
  const int hi = bounds.upper[j] < 0 ? static_cast<int>(n) + 1
                                     : pi[chosen[bounds.upper[j]]];
  if (hi - lo - 1 < 1) return false;
  for (std::size_t p = start; p + (k - j) <= n; ++p) {
    const int v = pi[p];
    if (v <= lo || v >= hi) continue;
    chosen[j] = p;
    if (embed(pi, pattern, bounds, chosen, j + 1, p + 1)) return true;
  }
  return false;
}

void requireNonEmpty(const Permutation& pi, const char* what) {
  if (pi.empty())
    throw std::invalid_argument(std::string(what) +
                                ": the empty permutation has no components");
}

// Positions after which the prefix is a union of components. For the sum
// decomposition the prefix of length p must hold exactly the values 1..p;
// for the skew decomposition it must hold n-p+1..n.
std::vector<Permutation> components(const Permutation& pi, bool skew) {
  const std::size_t n = pi.size();
  std::vector<Permutation> parts;
  std::size_t begin = 0;
  int extreme = skew ? static_cast<int>(n) + 1 : 0;
  for (std::size_t p = 0; p < n; ++p) {
    extreme = skew ? std::min(extreme, pi[p]) : std::max(extreme, pi[p]);
    const bool closed = skew ? extreme == static_cast<int>(n - p)
                             : extreme == static_cast<int>(p + 1);
    if (closed) {
      parts.push_back(
          Permutation::standardize(pi.values().subspan(begin, p + 1 - begin)));
      begin = p + 1;
    }
  }
  return parts;
}

}  // namespace

Permutation::Permutation(std::initializer_list<value_type> values)
    : Permutation(std::vector<value_type>(values)) {}

Permutation::Permutation(std::vector<value_type> values)
    : values_(std::move(values)) {
  const std::size_t n = values_.size();
  std::vector<bool> seen(n + 1, false);
  for (value_type v : values_) {
    if (v < 1 || static_cast<std::size_t>(v) > n || seen[v])
      throw ParseError("not a permutation of 1.." + std::to_string(n) +
                       ": entry " + std::to_string(v));
    seen[v] = true;
  }
}

Permutation Permutation::standardize(std::span<const value_type> values) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  Permutation result;
  result.values_.resize(values.size());
  for (std::size_t rank = 0; rank < order.size(); ++rank) {
    if (rank > 0 && values[order[rank]] == values[order[rank - 1]])
      throw ParseError("standardize: repeated value " +
                       std::to_string(values[order[rank]]));
    result.values_[order[rank]] = static_cast<value_type>(rank + 1);
  }
  return result;
}

Permutation Permutation::identity(std::size_t n) {
  Permutation p;
  p.values_.resize(n);
  std::iota(p.values_.begin(), p.values_.end(), 1);
  return p;
}

Permutation Permutation::decreasing(std::size_t n) {
  Permutation p;
  p.values_.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    p.values_[i] = static_cast<value_type>(n - i);
  return p;
}

bool Permutation::isIncreasing() const noexcept {
  return std::is_sorted(values_.begin(), values_.end());
}

bool Permutation::isDecreasing() const noexcept {
  return std::is_sorted(values_.begin(), values_.end(), std::greater<>{});
}

std::string Permutation::str() const {
  if (size() > 9) return commaStr();
  std::string out;
  for (value_type v : values_) out.push_back(static_cast<char>('0' + v));
  return out;
}

std::string Permutation::commaStr() const {
  std::string out;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(values_[i]);
  }
  return out;
}

std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.values_.begin(),
                                                a.values_.end(),
                                                b.values_.begin(),
                                                b.values_.end());
}

namespace {

std::vector<Permutation::value_type> parseValues(std::string_view text) {
  const bool separated =
      text.find_first_of(", \t") != std::string_view::npos;
  std::vector<Permutation::value_type> values;
  if (separated) {
    std::size_t i = 0;
    while (i < text.size()) {
      while (i < text.size() && (text[i] == ',' || std::isspace(
                                     static_cast<unsigned char>(text[i]))))
        ++i;
      if (i == text.size()) break;
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])))
        ++j;
      if (j == i)
        throw ParseError("invalid permutation token '" + std::string(text) +
                         "'");
      values.push_back(std::stoi(std::string(text.substr(i, j - i))));
      i = j;
    }
  } else {
    for (char c : text) {
      if (!std::isdigit(static_cast<unsigned char>(c)) || c == '0')
        throw ParseError("invalid permutation token '" + std::string(text) +
                         "'");
      values.push_back(c - '0');
    }
  }
  return values;
}

}  // namespace

Permutation parsePermutation(std::string_view text) {
  std::vector<Permutation::value_type> values = parseValues(text);
  try {
    return Permutation(std::move(values));
  } catch (const ParseError& e) {
    throw ParseError("invalid permutation token '" + std::string(text) +
                     "': " + e.what());
  }
}

Permutation parseRankReduced(std::string_view text) {
  const std::vector<Permutation::value_type> values = parseValues(text);
  try {
    return Permutation::standardize(values);
  } catch (const ParseError& e) {
    throw ParseError("invalid permutation token '" + std::string(text) +
                     "': " + e.what());
  }
}

bool contains(const Permutation& pi, const Permutation& pattern) {
  if (pattern.size() > pi.size()) return false;
  if (pattern.empty()) return true;
  const PatternBounds bounds = patternBounds(pattern);
  std::vector<std::size_t> chosen(pattern.size());
  return embed(pi, pattern, bounds, chosen, 0, 0);
}

bool avoidsAll(const Permutation& pi, std::span<const Permutation> patterns) {
  return std::none_of(patterns.begin(), patterns.end(),
                      [&](const Permutation& p) { return contains(pi, p); });
}

Permutation directSum(const Permutation& a, const Permutation& b) {
  std::vector<int> v(a.begin(), a.end());
  const int shift = static_cast<int>(a.size());
  for (int x : b) v.push_back(x + shift);
  return Permutation(std::move(v));
}

Permutation skewSum(const Permutation& a, const Permutation& b) {
  std::vector<int> v;
  v.reserve(a.size() + b.size());
  const int shift = static_cast<int>(b.size());
  for (int x : a) v.push_back(x + shift);
  v.insert(v.end(), b.begin(), b.end());
  return Permutation(std::move(v));
}

Permutation reverse(const Permutation& pi) {
  return Permutation(std::vector<int>(pi.values().rbegin(), pi.values().rend()));
}

Permutation complement(const Permutation& pi) {
  const int n1 = static_cast<int>(pi.size()) + 1;
  std::vector<int> v;
  v.reserve(pi.size());
  for (int x : pi) v.push_back(n1 - x);
  return Permutation(std::move(v));
}

Permutation inverse(const Permutation& pi) {
  std::vector<int> v(pi.size());
  for (std::size_t i = 0; i < pi.size(); ++i)
    v[pi[i] - 1] = static_cast<int>(i + 1);
  return Permutation(std::move(v));
}

std::vector<Permutation> sumComponents(const Permutation& pi) {
  requireNonEmpty(pi, "sumComponents");
  return components(pi, false);
}

std::vector<Permutation> skewComponents(const Permutation& pi) {
  requireNonEmpty(pi, "skewComponents");
  return components(pi, true);
}

bool isSumDecomposable(const Permutation& pi) {
  int maxSoFar = 0;
  for (std::size_t p = 0; p + 1 < pi.size(); ++p) {
    maxSoFar = std::max(maxSoFar, pi[p]);
    if (maxSoFar == static_cast<int>(p + 1)) return true;
  }
  return false;
}

bool isSkewDecomposable(const Permutation& pi) {
  const int n = static_cast<int>(pi.size());
  int minSoFar = n + 1;
  for (std::size_t p = 0; p + 1 < pi.size(); ++p) {
    minSoFar = std::min(minSoFar, pi[p]);
    if (minSoFar == n - static_cast<int>(p)) return true;
  }
  return false;
}

Permutation deletePoint(const Permutation& pi, std::size_t position) {
  std::vector<int> v;
  v.reserve(pi.size() - 1);
  const int removed = pi[position];
  for (std::size_t i = 0; i < pi.size(); ++i) {
    if (i == position) continue;
    v.push_back(pi[i] > removed ? pi[i] - 1 : pi[i]);
  }
  return Permutation(std::move(v));
}

std::set<Permutation> closure(std::span<const Permutation> perms) {
  std::set<Permutation> result;
  std::vector<Permutation> frontier;
  for (const auto& p : perms)
    if (!p.empty() && result.insert(p).second) frontier.push_back(p);
  while (!frontier.empty()) {
    Permutation p = std::move(frontier.back());
    frontier.pop_back();
    if (p.size() == 1) continue;
    for (std::size_t i = 0; i < p.size(); ++i) {
      Permutation child = deletePoint(p, i);
      if (result.insert(child).second) frontier.push_back(std::move(child));
    }
  }
  return result;
}

std::set<Permutation> closure(const std::set<Permutation>& perms) {
  std::vector<Permutation> v(perms.begin(), perms.end());
  return closure(std::span<const Permutation>(v));
}

std::vector<Permutation> allPermutations(std::size_t n) {
  std::vector<Permutation> out;
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

std::ostream& operator<<(std::ostream& os, const Permutation& pi) {
  return os << (pi.empty() ? std::string("ε") : pi.str());
}

}  // namespace permclass

std::size_t std::hash<permclass::Permutation>::operator()(
    const permclass::Permutation& pi) const noexcept {
  std::size_t h = pi.size();
  for (int v : pi) h = h * 1000003u ^ static_cast<std::size_t>(v);
  return h;
}
