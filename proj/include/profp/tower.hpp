#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "profp/gaction.hpp"
#include "profp/linear.hpp"
#include "profp/perm_module.hpp"

namespace profp {

/// A finite chain of group actions with equivariant surjections between
/// consecutive levels: levels[i+1] maps onto levels[i] through set_maps[i],
/// equivariantly through the surjective homomorphisms group_maps[i].
/// Orbit data per level is computed once at construction.
class TowerOfActions {
 public:
  TowerOfActions(std::vector<GAction> levels,
                 std::vector<std::vector<std::uint32_t>> set_maps,
                 std::vector<std::vector<std::uint32_t>> group_maps,
                 std::vector<int> level_labels, std::string name);

  std::size_t level_count() const { return levels_.size(); }
  const GAction& level(std::size_t i) const { return levels_[i]; }
  int level_label(std::size_t i) const { return labels_[i]; }
  const std::string& name() const { return name_; }
  const std::vector<OrbitInfo>& level_orbits(std::size_t i) const { return orbits_[i]; }
  std::uint32_t orbit_at(std::size_t i, std::uint32_t point) const { return orbit_of_[i][point]; }
  const std::vector<std::uint32_t>& step_set_map(std::size_t i) const { return set_maps_[i]; }
  const std::vector<std::uint32_t>& step_group_map(std::size_t i) const { return group_maps_[i]; }

  /// Composed point map from level n down to level m <= n.
  std::vector<std::uint32_t> point_map(std::size_t n, std::size_t m) const;

 private:
  std::vector<GAction> levels_;
  std::vector<std::vector<std::uint32_t>> set_maps_;   // [i]: level i+1 -> level i
  std::vector<std::vector<std::uint32_t>> group_maps_;
  std::vector<int> labels_;
  std::string name_;
  std::vector<std::vector<OrbitInfo>> orbits_;
  std::vector<std::vector<std::uint32_t>> orbit_of_;
};

/// The transition map on orbit coordinates: the orbit C at level n
/// contributes x(C) * |C|/|image orbit| to its image orbit's coordinate.
/// The integer factor is an index of stabilizers; it vanishes mod p exactly
/// when the orbit collapses.
struct SigmaMap {
  std::vector<std::uint32_t> target_orbit;   // per level-n orbit: level-m orbit
  std::vector<std::uint64_t> integer_factor; // |C| / |image orbit|
  std::size_t target_count = 0;
};

SigmaMap sigma_map(const TowerOfActions& t, std::size_t n, std::size_t m);

/// Orbit-coordinate pushforward over F_p.
FpVec apply_sigma(const SigmaMap& sm, const FpVec& x);

/// Same pushforward with coefficients in any characteristic-p ring value
/// that supports addition and integer scaling (e.g. AlgebraElem).
template <typename R>
std::vector<R> apply_sigma_ring(const SigmaMap& sm, const std::vector<R>& x, const R& zero,
                                std::uint32_t p) {
  std::vector<R> out(sm.target_count, zero);
  for (std::size_t c = 0; c < x.size(); ++c) {
    std::uint32_t f = static_cast<std::uint32_t>(sm.integer_factor[c] % p);
    if (f == 0) continue;
    out[sm.target_orbit[c]] = out[sm.target_orbit[c]] + x[c].scaled(f);
  }
  return out;
}

/// Point-level pushforward of a module element along the composed set map
/// (coefficients of merged points add mod p).
FpVec push_points(const TowerOfActions& t, std::size_t n, std::size_t m, const FpVec& x);

/// A per-level family of invariant vectors in orbit coordinates.
struct InvariantFamily {
  std::vector<FpVec> levels;  // index parallel to the tower's levels
};

/// The same-size-preimage criterion: for every pair n > m and every orbit D
/// at level m, the sum of x_n over orbits mapping onto D with |C| = |D|
/// equals x_m(D).
bool check_coherence(const TowerOfActions& t, const InvariantFamily& fam);

/// Direct transition-compatibility: apply_sigma(x_n) == x_m for all pairs.
/// Agrees with check_coherence on every family in characteristic p.
bool check_sigma_compatibility(const TowerOfActions& t, const InvariantFamily& fam);

template <typename R>
bool check_coherence_ring(const TowerOfActions& t, const std::vector<std::vector<R>>& fam,
                          const R& zero) {
  for (std::size_t m = 0; m + 1 < t.level_count(); ++m)
    for (std::size_t n = m + 1; n < t.level_count(); ++n) {
      const auto& on = t.level_orbits(n);
      auto pm = t.point_map(n, m);
      std::vector<R> sums(t.level_orbits(m).size(), zero);
      for (std::size_t c = 0; c < on.size(); ++c) {
        std::uint32_t d = t.orbit_at(m, pm[on[c].points.front()]);
        if (on[c].points.size() == t.level_orbits(m)[d].points.size())
          sums[d] = sums[d] + fam[n][c];
      }
      for (std::size_t d = 0; d < sums.size(); ++d)
        if (!(sums[d] == fam[m][d])) return false;
    }
  return true;
}

/// Level-m orbits admitting a size-preserving chain up to the horizon level.
std::vector<std::uint32_t> persistent_orbits(const TowerOfActions& t, std::size_t m,
                                             std::size_t horizon);

struct DensityReport {
  std::size_t coherent_image_dim = 0;    // image at level m of coherent families
  std::size_t persistent_span_dim = 0;   // span of pushed persistent orbit sums
  std::vector<std::uint32_t> persistent; // persistent level-m orbit indices
  bool equal = false;
};

/// Compares (a) the level-m image of all transition-compatible families
/// truncated at the horizon (kernel of the stacked compatibility system,
/// projected to level m) with (b) the span of pushforwards of persistent
/// orbit-coordinate unit vectors. The two must agree as subspaces.
DensityReport density_check(const TowerOfActions& t, std::uint32_t p, std::size_t m,
                            std::size_t horizon,
                            std::size_t cap = Caps::from_env().nullspace_cols);

/// The chain of translation actions of Z/p^n on the disjoint union
/// Y_n = Y_n(0) + ... + Y_n(n), |Y_n(m)| = p^m, with the top orbit of each
/// level folding onto the top orbit below and every other orbit mapped
/// isomorphically. Levels 0..depth; point encodings are {orbit index m, j}.
TowerOfActions example_tower(std::uint32_t p, std::size_t depth,
                             std::size_t cap = Caps::from_env().points);

struct DeltaWitnessReport {
  std::vector<std::uint64_t> witness_orbit_sizes;  // per level
  std::vector<Encoding> witness_points;
  struct Approximant {
    std::size_t level;
    Encoding deep_point;                 // the finite-orbit point at the deepest level
    std::uint64_t stable_orbit_size;     // its orbit size from its level onwards
    bool image_matches_witness;
    bool persistent;
  };
  std::vector<Approximant> approximants;
  bool sizes_strictly_increasing = false;
  bool pass = false;
};

/// Exhibits the point threading the top orbits (orbit sizes 1, p, p^2, ...,
/// strictly increasing, hence unbounded as the depth grows) together with,
/// for each level n, a finite-orbit point whose image at level n coincides
/// with the witness's: the witness lies in the closure of the finite-orbit
/// locus while escaping it.
DeltaWitnessReport nonclosed_delta_witness(const TowerOfActions& t, std::size_t depth);

}  // namespace profp
