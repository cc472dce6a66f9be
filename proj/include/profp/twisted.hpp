#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "profp/group_tower.hpp"
#include "profp/linear.hpp"
#include "profp/perm_module.hpp"

namespace profp {

/// U_w = U cap w U w^{-1} = {u in U : w^{-1} u w in U}, as a subgroup of U.
/// w is any invertible element of U's ambient.
Subgroup u_w_subgroup(const GroupPtr& u, const Encoding& w);

/// The twisted conjugation action of U_w on the points of U:
/// (u, x) -> (w^{-1} u w) x u^{-1}.
GAction twisted_action(const GroupPtr& u, const Encoding& w, const Subgroup& uw);
GAction twisted_action(const GroupPtr& u, const Encoding& w);

struct TwistedFixedSpace {
  std::size_t dim = 0;
  std::vector<FpVec> basis;       // RREF over the points of U
  std::size_t orbit_count = 0;
  bool cross_checked = false;     // direct linear route compared (within cap)
  bool cross_check_ok = true;
};

/// Fixed vectors of the twisted action on F_p[U]: spanned by the orbit sums
/// of the twisted action; cross-checked against the kernel of the stacked
/// direct conditions (one per U_w generator) when |U| is within `dense_cap`.
TwistedFixedSpace twisted_fixed_space(const GroupPtr& u, const Encoding& w, std::uint32_t p,
                                      std::size_t dense_cap = Caps::from_env().dense_check);

struct CentralizerCheckReport {
  std::uint64_t points_checked = 0;
  std::uint64_t failures = 0;
  bool pass = false;
};

/// For every x in U: |twisted orbit of x| must equal
/// [U_w : C(w x) cap U_w], the centralizer intersection computed by scanning
/// U_w for elements commuting with w*x in the ambient.
CentralizerCheckReport orbit_centralizer_check(const GroupPtr& u, const Encoding& w,
                                               std::size_t pair_cap = 600000000ull);

struct StabilizationReport {
  std::string tower, conjugator;
  std::uint32_t p = 0;
  int target_label = 0;
  std::vector<int> level_labels;         // n = m..N
  std::vector<std::size_t> fixed_dims;   // dim of the twisted fixed space at n
  std::vector<std::size_t> image_dims;   // dim of its pushforward inside F_p[U_m]
  std::vector<bool> meets_center;        // level shadow: U_n meets w^{-1} * (ambient scalars)
  bool chain_descending = false;
  std::optional<int> stabilized_at;      // first label n with image(n) == image(n+1)
  std::size_t stable_dim = 0;            // dimension of the last computed image
  bool conclusive = false;
  std::vector<FpVec> stable_image_basis; // RREF basis of the last image
};

/// Pushes the twisted fixed space of each level n = m..N into F_p[U_m] along
/// the quotient maps and reports the descending chain of images and where it
/// stabilizes (two consecutive equal images).
StabilizationReport twisted_stabilization(const GroupTower& t, const Conjugator& c,
                                          int target_label, int max_label, std::uint32_t p);

/// Whether U at this level contains w^{-1} * (scalar) for some unit scalar
/// of a matrix ambient (abelian ambients count as all-scalar).
bool level_meets_center(const GroupPtr& u, const Encoding& w);

}  // namespace profp
