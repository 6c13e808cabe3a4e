#include "permclass/septree.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace permclass {

SeparatingTree SeparatingTree::node(Kind kind,
                                    std::vector<SeparatingTree> children) {
  if (kind == Kind::Leaf)
    throw std::invalid_argument("SeparatingTree::node: leaf kind");
  std::vector<SeparatingTree> flat;
  for (auto& child : children) {
    if (child.kind_ == kind) {
      for (auto& grandchild : child.children_)
        flat.push_back(std::move(grandchild));
    } else {
      flat.push_back(std::move(child));
    }
  }
  if (flat.size() < 2)
    throw std::invalid_argument(
        "SeparatingTree::node: internal nodes need at least two children");
  return SeparatingTree(kind, std::move(flat));
}

std::size_t SeparatingTree::frontierSize() const {
  if (kind_ == Kind::Leaf) return 1;
  std::size_t total = 0;
  for (const auto& c : children_) total += c.frontierSize();
  return total;
}

std::string SeparatingTree::str() const {
  if (kind_ == Kind::Leaf) return "1";
  std::string out(kind_ == Kind::Sum ? "+(" : "-(");
  for (std::size_t i = 0; i < children_.size(); ++i) {
    if (i) out += ", ";
    out += children_[i].str();
  }
  return out + ")";
}

namespace {

class TreeParser {
public:
  explicit TreeParser(std::string_view text) : text_(text) {}

  SeparatingTree parse() {
    SeparatingTree t = parseNode();
    skipSpace();
    if (pos_ != text_.size()) fail("trailing characters");
    return t;
  }

private:
  SeparatingTree parseNode() {
    skipSpace();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '1') {
      ++pos_;
      return SeparatingTree::leaf();
    }
    if (c != '+' && c != '-') fail("expected '1', '+' or '-'");
    ++pos_;
    expect('(');
    std::vector<SeparatingTree> children;
    children.push_back(parseNode());
    skipSpace();
    while (pos_ < text_.size() && text_[pos_] == ',') {
      ++pos_;
      children.push_back(parseNode());
      skipSpace();
    }
    expect(')');
    if (children.size() < 2) fail("internal node with fewer than two children");
    return SeparatingTree::node(
        c == '+' ? SeparatingTree::Kind::Sum : SeparatingTree::Kind::Skew,
        std::move(children));
  }

  void expect(char c) {
    skipSpace();
    if (pos_ >= text_.size() || text_[pos_] != c)
      fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void skipSpace() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("invalid tree '" + std::string(text_) + "' at offset " +
                     std::to_string(pos_) + ": " + why);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::optional<SeparatingTree> build(const Permutation& pi) {
  if (pi.size() == 1) return SeparatingTree::leaf();
  auto kind = SeparatingTree::Kind::Sum;
  std::vector<Permutation> parts = sumComponents(pi);
  if (parts.size() == 1) {
    kind = SeparatingTree::Kind::Skew;
    parts = skewComponents(pi);
    if (parts.size() == 1) return std::nullopt;
  }
  std::vector<SeparatingTree> children;
  children.reserve(parts.size());
  for (const auto& part : parts) {
    auto child = build(part);
    if (!child) return std::nullopt;
    children.push_back(std::move(*child));
  }
  return SeparatingTree::node(kind, std::move(children));
}

// Membership of the window pi[begin, end) in X[U], where the window's values
// form an interval. If pi = a (+) rest with a in U and rest in X[U], then the
// first sum component of pi lies in U and the remainder lies in X[U]; the
// same holds at the last component. So only the first and last component
// boundaries need to be tried.
class InflationMembership {
public:
  InflationMembership(const Permutation& pi, const USpec& u)
      : pi_(pi), u_(u), n_(pi.size()), memo_(n_ * (n_ + 1), -1) {}

  bool decide() { return n_ > 0 && window(0, n_); }

private:
  bool inU(std::size_t begin, std::size_t end) const {
    const std::size_t len = end - begin;
    switch (u_.kind()) {
      case USpec::Kind::Trivial:
        return len == 1;
      case USpec::Kind::Increasing:
        return std::is_sorted(pi_.begin() + begin, pi_.begin() + end);
      case USpec::Kind::Decreasing:
        return std::is_sorted(pi_.begin() + begin, pi_.begin() + end,
                              std::greater<>{});
      case USpec::Kind::FiniteSet:
        return u_.containsPerm(
            Permutation::standardize(pi_.values().subspan(begin, len)));
    }
    return false;
  }

  // Cut points c in (begin, end) such that pi[begin, c) holds the lowest
  // (sum) or highest (skew) values of the window.
  std::vector<std::size_t> cuts(std::size_t begin, std::size_t end,
                                bool skew) const {
    const int lo = *std::min_element(pi_.begin() + begin, pi_.begin() + end);
    const int hi = *std::max_element(pi_.begin() + begin, pi_.begin() + end);
    std::vector<std::size_t> out;
    int extreme = skew ? hi + 1 : lo - 1;
    for (std::size_t p = begin; p + 1 < end; ++p) {
      const int count = static_cast<int>(p - begin + 1);
      if (skew) {
        extreme = std::min(extreme, pi_[p]);
        if (extreme == hi - count + 1) out.push_back(p + 1);
      } else {
        extreme = std::max(extreme, pi_[p]);
        if (extreme == lo + count - 1) out.push_back(p + 1);
      }
    }
    return out;
  }

  bool window(std::size_t begin, std::size_t end) {
    signed char& slot = memo_[begin * (n_ + 1) + end];
    if (slot >= 0) return slot != 0;
    bool result = inU(begin, end);
    for (bool skew : {false, true}) {
      if (result) break;
      const auto c = cuts(begin, end, skew);
      if (c.empty()) continue;
      result = (inU(begin, c.front()) && window(c.front(), end)) ||
               (inU(c.back(), end) && window(begin, c.back()));
    }
    slot = result ? 1 : 0;
    return result;
  }

  const Permutation& pi_;
  const USpec& u_;
  std::size_t n_;
  std::vector<signed char> memo_;
};

}  // namespace

SeparatingTree parseTree(std::string_view text) {
  return TreeParser(text).parse();
}

std::optional<SeparatingTree> buildTree(const Permutation& pi) {
  if (pi.empty())
    throw std::invalid_argument("buildTree: the empty permutation has no tree");
  return build(pi);
}

Permutation treeToPermutation(const SeparatingTree& tree) {
  if (tree.kind() == SeparatingTree::Kind::Leaf) return Permutation{1};
  Permutation acc;
  for (const auto& child : tree.children()) {
    Permutation p = treeToPermutation(child);
    acc = tree.kind() == SeparatingTree::Kind::Sum ? directSum(acc, p)
                                                   : skewSum(acc, p);
  }
  return acc;
}

bool isSeparable(const Permutation& pi) {
  return pi.empty() || buildTree(pi).has_value();
}

Permutation inflate(const Permutation& pi, std::span<const Permutation> parts) {
  if (parts.size() != pi.size())
    throw std::invalid_argument("inflate: expected " +
                                std::to_string(pi.size()) + " parts, got " +
                                std::to_string(parts.size()));
  for (const auto& part : parts)
    if (part.empty())
      throw std::invalid_argument("inflate: parts must be nonempty");
  // offset[v] = total size of the parts inflating values below v.
  std::vector<int> sizeByValue(pi.size() + 1, 0);
  for (std::size_t i = 0; i < pi.size(); ++i)
    sizeByValue[pi[i]] = static_cast<int>(parts[i].size());
  std::vector<int> offset(pi.size() + 1, 0);
  for (std::size_t v = 2; v <= pi.size(); ++v)
    offset[v] = offset[v - 1] + sizeByValue[v - 1];
  std::vector<int> values;
  for (std::size_t i = 0; i < pi.size(); ++i)
    for (int x : parts[i]) values.push_back(offset[pi[i]] + x);
  return Permutation(std::move(values));
}

std::span<const Permutation> xBasis() {
  static const std::array<Permutation, 4> basis{
      Permutation{2, 1, 4, 3}, Permutation{2, 4, 1, 3},
      Permutation{3, 1, 4, 2}, Permutation{3, 4, 1, 2}};
  return basis;
}

bool isInX(const Permutation& pi) { return avoidsAll(pi, xBasis()); }

bool isInXInflation(const Permutation& pi, const USpec& u) {
  return InflationMembership(pi, u).decide();
}

}  // namespace permclass
