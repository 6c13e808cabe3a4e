#include "permclass/gf_engine.hpp"

#include <algorithm>
#include <set>

namespace permclass {

namespace {

RationalFunction xPow(std::size_t k) { return RationalFunction(Poly::monomial(1, k)); }

// x^k / (1 - x)
RationalFunction geometricTail(std::size_t k) {
  return RationalFunction(Poly::monomial(1, k), Poly{1, -1});
}

void requireZeroConstant(const RationalFunction& f, const char* what) {
  if (sgn(f.constantTerm()) != 0)
    throw std::invalid_argument(std::string(what) + " must have zero constant term");
}

// f_Q for U. A monotone permutation of length n >= max(2, longest pattern)
// has the same profile as every longer one, so the tail collapses into a
// single x^L / (1 - x) term.
std::map<Profile, RationalFunction> profileGFs(const USpec& u,
                                               const PropertySet& props) {
  std::map<Profile, RationalFunction> out;
  if (u.isFinite()) {
    for (const auto& member : u.members())
      out[profileOf(member, props)] += xPow(member.size());
    return out;
  }
  std::size_t longest = 0;
  for (const auto& p : props.patterns()) longest = std::max(longest, p.size());
  const std::size_t stable = std::max<std::size_t>(2, longest);
  const bool increasing = u.kind() == USpec::Kind::Increasing;
  for (std::size_t n = 1; n <= stable; ++n) {
    const Permutation rep =
        increasing ? Permutation::identity(n) : Permutation::decreasing(n);
    out[profileOf(rep, props)] += n < stable ? xPow(n) : geometricTail(n);
  }
  return out;
}

}  // namespace

IndecomposableGFs indecomposableGFs(const USpec& u) {
  const RationalFunction x = RationalFunction::x();
  switch (u.kind()) {
    case USpec::Kind::Trivial:
      return {x, x, x};
    case USpec::Kind::Increasing:
      return {x, geometricTail(1), x};
    case USpec::Kind::Decreasing:
      return {geometricTail(1), x, x};
    case USpec::Kind::FiniteSet:
      break;
  }
  IndecomposableGFs f;
  for (const auto& member : u.members()) {
    const bool sumDec = isSumDecomposable(member);
    const bool skewDec = isSkewDecomposable(member);
    const RationalFunction term = xPow(member.size());
    if (!sumDec) f.sumIndecomposable += term;
    if (!skewDec) f.skewIndecomposable += term;
    if (!sumDec && !skewDec) f.indecomposable += term;
  }
  return f;
}

RationalFunction xInflationGF(const RationalFunction& sumIndecomposable,
                              const RationalFunction& skewIndecomposable) {
  return xInflationGF(
      IndecomposableGFs{sumIndecomposable, skewIndecomposable, RationalFunction::x()});
}

RationalFunction xInflationGF(const IndecomposableGFs& f) {
  requireZeroConstant(f.sumIndecomposable, "sum-indecomposable GF");
  requireZeroConstant(f.skewIndecomposable, "skew-indecomposable GF");
  requireZeroConstant(f.indecomposable, "indecomposable GF");
  const RationalFunction one = RationalFunction::constant(1);
  const RationalFunction two = RationalFunction::constant(2);
  const auto& fs = f.sumIndecomposable;
  const auto& fk = f.skewIndecomposable;
  const RationalFunction num = f.indecomposable - fs * fs - fk * fk;
  const RationalFunction den = one - two * fs + fs * fs - two * fk + fk * fk;
  if (den.isZero()) throw AlgebraError("X-inflation denominator vanishes");
  return num / den;
}

std::size_t ProfileSystem::indexOf(const Profile& q) const {
  const auto it = std::lower_bound(profiles.begin(), profiles.end(), q);
  if (it == profiles.end() || *it != q)
    throw std::out_of_range("profile " + properties.describe(q) + " is not achievable");
  return static_cast<std::size_t>(it - profiles.begin());
}

ProfileSystem buildProfileSystem(const USpec& u, const ClassSpec& basis,
                                 const EngineOptions& options) {
  ProfileSystem sys{PropertySet(basis), {}, {}, {}, {}};
  const PropertySet& props = sys.properties;
  sys.uProfileGFs = profileGFs(u, props);

  std::vector<Profile> notSum;   // profiles of sum-indecomposable U members
  std::vector<Profile> notSkew;  // profiles of skew-indecomposable U members
  for (const auto& [q, f] : sys.uProfileGFs) {
    if (!q.test(PropertySet::kSum)) notSum.push_back(q);
    if (!q.test(PropertySet::kSkew)) notSkew.push_back(q);
  }

  // Least set of profiles containing U's and closed under attaching an
  // indecomposable U member on either side.
  std::set<Profile> achievable;
  std::vector<Profile> work;
  auto add = [&](Profile q) {
    if (achievable.insert(q).second) {
      if (achievable.size() > options.maxProfiles)
        throw ProfileExplosionError("more than " + std::to_string(options.maxProfiles) +
                                    " achievable profiles");
      work.push_back(std::move(q));
    }
  };
  for (const auto& [q, f] : sys.uProfileGFs) add(q);
  while (!work.empty()) {
    const Profile s = std::move(work.back());
    work.pop_back();
    for (const auto& r : notSum) {
      add(combineSum(r, s, props));
      add(combineSum(s, r, props));
    }
    for (const auto& r : notSkew) {
      add(combineSkew(r, s, props));
      add(combineSkew(s, r, props));
    }
  }
  sys.profiles.assign(achievable.begin(), achievable.end());

  const std::size_t n = sys.profiles.size();
  sys.m.assign(n, RatVector(n));
  sys.v.assign(n, RationalFunction());

  // A sum-decomposable member of X[U] is a (+) rest or rest (+) w with a, w
  // sum-indecomposable members of U and rest in X[U]. Members of both forms
  // are a (+) mid (+) w with mid in X[U] or empty, and are subtracted once.
  // The skew-decomposable members are handled by the mirror image.
  for (bool skew : {false, true}) {
    const auto& outer = skew ? notSkew : notSum;
    auto join = [&](const Profile& a, const Profile& b) {
      return skew ? combineSkew(a, b, props) : combineSum(a, b, props);
    };
    for (std::size_t s = 0; s < n; ++s) {
      const Profile& mid = sys.profiles[s];
      for (const auto& r : outer) {
        const RationalFunction& fr = sys.uProfileGFs.at(r);
        sys.m[sys.indexOf(join(r, mid))][s] += fr;
        sys.m[sys.indexOf(join(mid, r))][s] += fr;
        const Profile left = join(r, mid);
        for (const auto& t : outer)
          sys.m[sys.indexOf(join(left, t))][s] -= fr * sys.uProfileGFs.at(t);
      }
    }
    for (const auto& r : outer)
      for (const auto& t : outer)
        sys.v[sys.indexOf(join(r, t))] -= sys.uProfileGFs.at(r) * sys.uProfileGFs.at(t);
  }

  // Members that are neither sum nor skew decomposable lie in U itself.
  for (std::size_t i = 0; i < n; ++i) {
    const Profile& q = sys.profiles[i];
    if (q.test(PropertySet::kSum) || q.test(PropertySet::kSkew)) continue;
    sys.v[i] += sys.uProfileGFs.at(q);
  }
  return sys;
}

ProfileSolution solveProfileSystem(const ProfileSystem& system) {
  ProfileSolution sol;
  sol.h = solveLinearSystem(system.m, system.v);
  const Profile& target = system.properties.target();
  for (std::size_t i = 0; i < system.profiles.size(); ++i)
    if (target.isSubsetOf(system.profiles[i])) sol.gf += sol.h[i];
  return sol;
}

RationalFunction classGF(const USpec& u, const ClassSpec& basis,
                         const EngineOptions& options) {
  return solveProfileSystem(buildProfileSystem(u, basis, options)).gf;
}

}  // namespace permclass
