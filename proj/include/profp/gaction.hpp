#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "profp/group_model.hpp"

namespace profp {

/// A finite group action, stored as one point permutation per group
/// generator. Arbitrary elements act through their generator words. The
/// generator-level consistency check (identity plus cocycle on generator
/// pairs) runs at construction; full validation over all (element, generator)
/// pairs is available behind a flag.
class GAction {
 public:
  GAction(GroupPtr group, std::uint32_t num_points,
          std::vector<std::vector<std::uint32_t>> generator_tables,
          std::vector<Encoding> point_names = {}, bool validate_fully = false);

  /// Builds the tables by evaluating `act(element index, point)` on the
  /// generators, then validates as above.
  static GAction from_function(GroupPtr group, std::uint32_t num_points,
                               const std::function<std::uint32_t(std::uint32_t, std::uint32_t)>& act,
                               std::vector<Encoding> point_names = {}, bool validate_fully = false);

  const GroupModel& group() const { return *group_; }
  GroupPtr group_ptr() const { return group_; }
  std::uint32_t num_points() const { return num_points_; }
  const std::vector<Encoding>& point_names() const { return point_names_; }

  std::uint32_t act_gen(std::size_t gi, std::uint32_t y) const { return tables_[gi][y]; }
  const std::vector<std::uint32_t>& gen_table(std::size_t gi) const { return tables_[gi]; }
  /// Full point permutation of an arbitrary element (word composition).
  std::vector<std::uint32_t> element_table(std::uint32_t g) const;
  std::uint32_t act(std::uint32_t g, std::uint32_t y) const;

 private:
  GroupPtr group_;
  std::uint32_t num_points_;
  std::vector<std::vector<std::uint32_t>> tables_;
  std::vector<Encoding> point_names_;
};

struct OrbitInfo {
  std::vector<std::uint32_t> points;  // ascending
  std::uint64_t stabilizer_index;     // [group : stabilizer] = orbit size
  std::uint64_t stabilizer_order;     // |group| / orbit size (exact)
};

/// Orbit decomposition; orbits ordered by least point, points ascending.
/// Checks exact divisibility |orbit| | |group|.
std::vector<OrbitInfo> orbits(const GAction& a);

/// Orbit index of every point, numbering as in orbits().
std::vector<std::uint32_t> orbit_of_point(const std::vector<OrbitInfo>& os, std::uint32_t n);

/// |stabilizer of y| by direct scan over all group elements.
std::uint64_t stabilizer_order_by_scan(const GAction& a, std::uint32_t y);

/// A partition of {0..n-1} into disjoint nonempty blocks covering everything.
/// Canonical form: blocks sorted by least element, each block ascending.
class PartitionOfSet {
 public:
  PartitionOfSet(std::uint32_t n, std::vector<std::vector<std::uint32_t>> blocks);

  static PartitionOfSet discrete(std::uint32_t n);
  static PartitionOfSet indiscrete(std::uint32_t n);
  static PartitionOfSet from_orbits(const std::vector<OrbitInfo>& os, std::uint32_t n);

  std::uint32_t ground_size() const { return n_; }
  std::size_t block_count() const { return blocks_.size(); }
  const std::vector<std::vector<std::uint32_t>>& blocks() const { return blocks_; }
  std::uint32_t block_of(std::uint32_t x) const { return block_of_[x]; }

  /// True iff every block of *this is contained in one block of `coarser`.
  bool refines(const PartitionOfSet& coarser) const;

  friend bool operator==(const PartitionOfSet& a, const PartitionOfSet& b) {
    return a.n_ == b.n_ && a.blocks_ == b.blocks_;
  }

 private:
  std::uint32_t n_;
  std::vector<std::vector<std::uint32_t>> blocks_;
  std::vector<std::uint32_t> block_of_;
};

/// True iff every generator maps every block onto a block.
bool is_stable(const GAction& a, const PartitionOfSet& part);

/// Group-stable refinement: H is the kernel of the induced action on blocks,
/// g_1..g_k are coset representatives of H, and the output blocks are the
/// nonempty intersections g_1 P_1 cap ... cap g_k P_k. Output is validated
/// to be stable and to refine the input.
PartitionOfSet stable_refinement(const GAction& a, const PartitionOfSet& part);

// Stock actions.
GAction translation_action(const GroupPtr& g);              // left translation on itself
GAction conjugation_action(const GroupPtr& g);              // x -> g x g^-1
GAction trivial_action(const GroupPtr& g, std::uint32_t n);
/// Left multiplication on left cosets x H of the subgroup generated by
/// `subgroup_gens` (point i = i-th coset in order of least member).
GAction coset_action(const GroupPtr& g, const std::vector<std::uint32_t>& subgroup_gens);
/// For groups living in a PermAmbient: the defining action on {0..degree-1}.
GAction natural_permutation_action(const GroupPtr& g);
/// Disjoint union acting componentwise.
GAction disjoint_union(const GAction& a, const GAction& b);

}  // namespace profp
