#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "profp/gaction.hpp"
#include "profp/linear.hpp"

namespace profp {

/// Sparse element of the permutation module F_p[Y]: nonzero coefficients
/// keyed by point index.
struct ModuleElement {
  std::uint32_t p = 0;
  std::map<std::uint32_t, std::uint32_t> coeffs;

  FpVec dense(std::size_t n) const {
    FpVec v(p, n);
    for (auto [i, c] : coeffs) v.v[i] = c;
    return v;
  }
  static ModuleElement from_dense(const FpVec& v) {
    ModuleElement e;
    e.p = v.p;
    for (std::uint32_t i = 0; i < v.size(); ++i)
      if (v.v[i]) e.coeffs[i] = v.v[i];
    return e;
  }
};

/// One all-ones element per orbit, in orbit order. Each is fixed by the
/// whole action.
std::vector<ModuleElement> orbit_sums(const std::vector<OrbitInfo>& os, std::uint32_t p);

enum class InvariantRoute { Auto, OrbitSums, Nullspace };

/// Basis of the fixed subspace {x : g x = x for all generators}. The orbit
/// route is linear in |Y|; the nullspace route stacks (perm(g) - I) and is
/// capped. Both return the canonical RREF basis so results can be compared
/// exactly.
std::vector<FpVec> invariant_basis(const GAction& a, std::uint32_t p,
                                   InvariantRoute route = InvariantRoute::Auto,
                                   std::size_t cap = Caps::from_env().nullspace_cols);

/// Certificate that orbit sums and the nullspace route span the same space:
/// coordinates of each orbit sum in the nullspace basis and of each
/// nullspace vector in the orbit-sum basis, both verified by exact
/// reconstruction.
struct InvariantsReport {
  std::size_t orbit_count = 0;
  std::size_t nullspace_dim = 0;
  bool pass = false;
  std::vector<std::vector<std::uint32_t>> orbit_in_nullspace;
  std::vector<std::vector<std::uint32_t>> nullspace_in_orbit;
};

InvariantsReport verify_finite_invariants(const GAction& a, std::uint32_t p,
                                          std::size_t cap = Caps::from_env().nullspace_cols);

/// Class sums: basis of the center of F_p[G].
std::vector<ModuleElement> center_group_algebra(const GroupPtr& g, std::uint32_t p,
                                                std::size_t cap = Caps::from_env().points);

/// Brute-force dimension of the linear maps F_p[G] -> F_p[G] commuting with
/// all left and right translations. Must equal the class-sum count.
std::size_t bimodule_end_dim(const GroupPtr& g, std::uint32_t p,
                             std::size_t cap = Caps::from_env().nullspace_cols);

/// Kernel of the stacked (perm - I) constraints: the fixed space of a set of
/// point permutations, canonical RREF basis.
std::vector<FpVec> fixed_space_of_perms(const std::vector<std::vector<std::uint32_t>>& perms,
                                        std::uint32_t n, std::uint32_t p, std::size_t cap);

/// Dimension of {matrices X : X[perm(i)][perm(j)] = X[i][j] for each perm}:
/// the endomorphisms commuting with every listed permutation action.
std::size_t commutant_dim_of_perms(const std::vector<std::vector<std::uint32_t>>& perms,
                                   std::uint32_t n, std::uint32_t p, std::size_t cap);

/// Same system, returning the kernel basis (each vector is a flattened n x n
/// matrix, row-major).
std::vector<FpVec> commutant_basis_of_perms(const std::vector<std::vector<std::uint32_t>>& perms,
                                            std::uint32_t n, std::uint32_t p, std::size_t cap);

}  // namespace profp
