#include "permclass/properties.hpp"

#include <stdexcept>

namespace permclass {

bool Profile::isSubsetOf(const Profile& other) const {
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w] & ~other.words_[w]) return false;
  return true;
}

namespace {

Permutation joinRange(const std::vector<Permutation>& parts, std::size_t lo,
                      std::size_t hi, bool skew) {
  Permutation acc;
  for (std::size_t i = lo; i < hi; ++i)
    acc = skew ? skewSum(acc, parts[i]) : directSum(acc, parts[i]);
  return acc;
}

}  // namespace

PropertySet::PropertySet(const ClassSpec& basis) {
  const auto cl = closure(std::span<const Permutation>(basis.basis()));
  patterns_.assign(cl.begin(), cl.end());
  for (std::size_t i = 0; i < patterns_.size(); ++i) index_[patterns_[i]] = i;

  auto indexOrEmpty = [&](const Permutation& p) {
    return p.empty() ? -1 : static_cast<int>(avoidIndexOf(p));
  };
  for (const auto& d : patterns_) {
    for (bool skew : {false, true}) {
      const auto parts = skew ? skewComponents(d) : sumComponents(d);
      std::vector<Split> splits;
      for (std::size_t cut = 0; cut <= parts.size(); ++cut)
        splits.push_back({indexOrEmpty(joinRange(parts, 0, cut, skew)),
                          indexOrEmpty(joinRange(parts, cut, parts.size(), skew))});
      (skew ? skewSplits_ : sumSplits_).push_back(std::move(splits));
    }
  }

  target_ = Profile(size());
  for (const auto& b : basis.basis()) target_.set(avoidIndexOf(b));
}

std::size_t PropertySet::avoidIndexOf(const Permutation& d) const {
  const auto it = index_.find(d);
  if (it == index_.end())
    throw std::out_of_range("pattern " + d.str() + " is not in the property set");
  return avoidIndex(it->second);
}

std::string PropertySet::propertyName(std::size_t index) const {
  if (index == kSum) return "+";
  if (index == kSkew) return "-";
  return "Av(" + patterns_.at(index - 2).str() + ")";
}

std::string PropertySet::describe(const Profile& q) const {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < size(); ++i) {
    if (!q.test(i)) continue;
    if (!first) out += ", ";
    out += propertyName(i);
    first = false;
  }
  return out + "}";
}

Profile profileOf(const Permutation& pi, const PropertySet& props) {
  if (pi.empty())
    throw std::invalid_argument("profileOf: the empty permutation has no profile");
  Profile q(props.size());
  if (isSumDecomposable(pi)) q.set(PropertySet::kSum);
  if (isSkewDecomposable(pi)) q.set(PropertySet::kSkew);
  const auto& patterns = props.patterns();
  for (std::size_t i = 0; i < patterns.size(); ++i)
    if (!contains(pi, patterns[i])) q.set(PropertySet::avoidIndex(i));
  return q;
}

namespace {

// a * b avoids d iff for every split d = left * right, a avoids left or b
// avoids right. An empty side is contained in everything, so it never
// helps.
Profile combine(const Profile& a, const Profile& b, const PropertySet& props,
                bool skew) {
  Profile q(props.size());
  q.set(skew ? PropertySet::kSkew : PropertySet::kSum);
  for (std::size_t i = 0; i < props.patterns().size(); ++i) {
    const auto& splits = skew ? props.skewSplits(i) : props.sumSplits(i);
    bool avoids = true;
    for (const auto& s : splits) {
      const bool leftAvoids = s.left >= 0 && a.test(static_cast<std::size_t>(s.left));
      const bool rightAvoids = s.right >= 0 && b.test(static_cast<std::size_t>(s.right));
      if (!leftAvoids && !rightAvoids) {
        avoids = false;
        break;
      }
    }
    if (avoids) q.set(PropertySet::avoidIndex(i));
  }
  return q;
}

}  // namespace

Profile combineSum(const Profile& a, const Profile& b, const PropertySet& props) {
  return combine(a, b, props, false);
}

Profile combineSkew(const Profile& a, const Profile& b, const PropertySet& props) {
  return combine(a, b, props, true);
}

}  // namespace permclass
