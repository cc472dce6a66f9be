#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "profp/group_model.hpp"
#include "profp/tower.hpp"

namespace profp {

/// A chain of finite p-group quotients U_1 <- U_2 <- ... (labels are the
/// levels, label n meaning the mod-p^n quotient), each enumerated inside its
/// own ambient, with surjective homomorphisms between consecutive levels and
/// per-step ambient reduction maps (used to push conjugators down).
struct GroupTower {
  std::uint32_t p = 0;
  std::string name;
  std::vector<GroupPtr> levels;                          // [i] has label i+1
  std::vector<std::vector<std::uint32_t>> quotient_maps; // [i]: levels[i+1] -> levels[i]
  std::vector<std::function<Encoding(const Encoding&)>> ambient_reduce;  // [i]: step i+1 -> i

  std::size_t depth() const { return levels.size(); }
  int label(std::size_t i) const { return static_cast<int>(i) + 1; }
  /// Level index for a 1-based label.
  std::size_t index_of_label(int n) const;
};

/// Validated construction: checks p-group orders, quotient surjectivity and
/// the homomorphism property on all elements against generators.
GroupTower make_group_tower(std::uint32_t p, std::string name, std::vector<GroupPtr> levels,
                            std::vector<std::function<Encoding(const Encoding&)>> ambient_reduce);

/// name in {heisenberg3, unitriangular4, cyclic, units}.
GroupTower builtin_tower(const std::string& name, std::uint32_t p, std::uint32_t depth,
                         std::size_t cap = Caps::from_env().group_order);

/// Per-level ambient elements w_n compatible with the ambient reductions.
struct Conjugator {
  std::vector<Encoding> w;  // parallel to tower levels
  std::string description;
};

Conjugator identity_conjugator(const GroupTower& t);
/// Diagonal matrix conjugator for matrix-ambient towers; entries are reduced
/// mod p^n per level and must be units.
Conjugator diag_conjugator(const GroupTower& t, const std::vector<std::int64_t>& entries);
/// Conjugator from an explicit element of the deepest ambient, reduced down.
Conjugator conjugator_from_top(const GroupTower& t, Encoding top);
/// Compatibility validation (reduction of w_{n+1} equals w_n, all valid).
void validate_conjugator(const GroupTower& t, const Conjugator& c);

/// The conjugation actions of the levels on themselves, as a TowerOfActions
/// (orbit machinery, sigma maps and coherence apply directly).
TowerOfActions conjugation_tower(const GroupTower& t);

}  // namespace profp
