#include "permclass/uspec.hpp"

#include <stdexcept>

namespace permclass {

USpec USpec::trivial() { return USpec(Kind::Trivial, {Permutation{1}}); }

USpec USpec::increasing() { return USpec(Kind::Increasing, {}); }

USpec USpec::decreasing() { return USpec(Kind::Decreasing, {}); }

USpec USpec::finite(std::set<Permutation> members, Completion completion) {
  if (members.empty())
    throw std::invalid_argument("finite U must have at least one member");
  if (members.begin()->empty())
    throw std::invalid_argument("finite U may not contain the empty permutation");
  std::set<Permutation> closed = closure(members);
  if (closed != members) {
    if (completion == Completion::Reject)
      throw std::invalid_argument("finite U is not downward closed");
    members = std::move(closed);
  }
  if (members.size() == 1) return trivial();
  return USpec(Kind::FiniteSet, std::move(members));
}

bool USpec::containsPerm(const Permutation& pi) const {
  if (pi.empty()) return false;
  switch (kind_) {
    case Kind::Trivial:
      return pi.size() == 1;
    case Kind::Increasing:
      return pi.isIncreasing();
    case Kind::Decreasing:
      return pi.isDecreasing();
    case Kind::FiniteSet:
      return members_.contains(pi);
  }
  return false;
}

const std::set<Permutation>& USpec::members() const {
  if (!isFinite())
    throw std::logic_error("members() requested for infinite U " + name());
  return members_;
}

std::string USpec::name() const {
  switch (kind_) {
    case Kind::Trivial:
      return "trivial";
    case Kind::Increasing:
      return "inc";
    case Kind::Decreasing:
      return "dec";
    case Kind::FiniteSet: {
      std::string out = "finite{";
      bool first = true;
      for (const auto& p : members_) {
        if (!first) out += ";";
        out += p.str();
        first = false;
      }
      return out + "}";
    }
  }
  return "?";
}

}  // namespace permclass
