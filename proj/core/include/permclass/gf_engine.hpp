#ifndef PERMCLASS_GF_ENGINE_HPP
#define PERMCLASS_GF_ENGINE_HPP

#include <cstddef>
#include <map>
#include <stdexcept>
#include <vector>

#include "permclass/enumerator.hpp"
#include "permclass/linear_system.hpp"
#include "permclass/properties.hpp"
#include "permclass/rational_function.hpp"
#include "permclass/uspec.hpp"

namespace permclass {

/// Generating functions of the indecomposable members of U.
struct IndecomposableGFs {
  RationalFunction sumIndecomposable;
  RationalFunction skewIndecomposable;
  /// Members that are both sum and skew indecomposable. This is x for every
  /// U made of separable permutations; a finite U holding e.g. 2413 adds
  /// further terms.
  RationalFunction indecomposable;
};

IndecomposableGFs indecomposableGFs(const USpec& u);

/// Generating function of X[U] (nonempty members) from those of the sum
/// and skew indecomposable members of U:
///   g = (x - fs^2 - fk^2) / (1 - 2 fs + fs^2 - 2 fk + fk^2).
/// Both inputs must have zero constant term (std::invalid_argument).
RationalFunction xInflationGF(const RationalFunction& sumIndecomposable,
                              const RationalFunction& skewIndecomposable);

/// As above with x replaced by the GF of the doubly indecomposable members.
RationalFunction xInflationGF(const IndecomposableGFs& f);

class ProfileExplosionError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct EngineOptions {
  std::size_t maxProfiles = 4096;
};

/// The linear system h = M h + v whose unknowns h_Q count the members of
/// X[U] whose profile is exactly Q.
struct ProfileSystem {
  PropertySet properties;
  /// Achievable profiles in sorted order; profiles[i] indexes unknown i.
  std::vector<Profile> profiles;
  /// GF of the members of U with each profile.
  std::map<Profile, RationalFunction> uProfileGFs;
  RatMatrix m;
  RatVector v;

  std::size_t indexOf(const Profile& q) const;
};

/// Throws ProfileExplosionError when more than options.maxProfiles profiles
/// are achievable.
ProfileSystem buildProfileSystem(const USpec& u, const ClassSpec& basis,
                                 const EngineOptions& options = {});

struct ProfileSolution {
  RatVector h;
  /// GF of X[U] ∩ Av(basis), counting nonempty permutations.
  RationalFunction gf;
};

ProfileSolution solveProfileSystem(const ProfileSystem& system);

/// Rational GF of X[U] ∩ Av(basis), counting nonempty permutations.
RationalFunction classGF(const USpec& u, const ClassSpec& basis,
                         const EngineOptions& options = {});

}  // namespace permclass

#endif  // PERMCLASS_GF_ENGINE_HPP
