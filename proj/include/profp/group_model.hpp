#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "profp/ambient.hpp"
#include "profp/common.hpp"

namespace profp {

/// A fully enumerated finite group inside an Ambient. Elements are indexed
/// 0..order-1 in BFS order from the identity (lex tie-break on encodings), so
/// index 0 is always the identity and the ordering is reproducible. Each
/// element carries the generator word that reached it, which is how
/// left/right multiplication tables for arbitrary elements are assembled
/// without storing the full Cayley table.
class GroupModel {
 public:
  /// BFS closure of the generators; throws CapExceeded when the closure
  /// grows past `cap`. Generators must be valid ambient elements.
  static std::shared_ptr<const GroupModel> enumerate(AmbientPtr ambient,
                                                     std::vector<Encoding> generators,
                                                     std::size_t cap, std::string name);

  std::size_t order() const { return elements_.size(); }
  static constexpr std::uint32_t kIdentity = 0;

  const Encoding& enc(std::uint32_t i) const { return elements_[i]; }
  std::optional<std::uint32_t> index_of(const Encoding& e) const;
  bool contains(const Encoding& e) const { return index_of(e).has_value(); }

  std::uint32_t mult(std::uint32_t i, std::uint32_t j) const;
  std::uint32_t inv(std::uint32_t i) const { return inverse_[i]; }

  std::size_t generator_count() const { return gen_idx_.size(); }
  std::uint32_t generator(std::size_t gi) const { return gen_idx_[gi]; }
  /// x -> g_gi * x
  const std::vector<std::uint32_t>& left_gen_table(std::size_t gi) const { return left_[gi]; }
  /// x -> x * g_gi
  const std::vector<std::uint32_t>& right_gen_table(std::size_t gi) const { return right_[gi]; }
  const std::vector<std::uint32_t>& word(std::uint32_t i) const { return words_[i]; }

  std::vector<std::uint32_t> left_mult_table(std::uint32_t g) const;
  std::vector<std::uint32_t> right_mult_table(std::uint32_t g) const;

  const Ambient& ambient() const { return *ambient_; }
  AmbientPtr ambient_ptr() const { return ambient_; }
  const std::string& name() const { return name_; }

  bool is_abelian() const;
  /// True when the order is a power of p.
  bool is_p_group(std::uint32_t p) const;

 private:
  GroupModel() = default;

  AmbientPtr ambient_;
  std::string name_;
  std::vector<Encoding> elements_;
  std::unordered_map<Encoding, std::uint32_t, EncodingHash> index_;
  std::vector<std::uint32_t> gen_idx_;
  std::vector<std::vector<std::uint32_t>> left_, right_;  // per generator
  std::vector<std::uint32_t> inverse_;
  std::vector<std::vector<std::uint32_t>> words_;
};

using GroupPtr = std::shared_ptr<const GroupModel>;

/// A subgroup enumerated as its own GroupModel plus the index embedding into
/// the parent group.
struct Subgroup {
  GroupPtr group;
  std::vector<std::uint32_t> to_parent;              // sub index -> parent index
  std::vector<std::uint32_t> parent_to_sub;          // parent index -> sub index or npos
  static constexpr std::uint32_t npos = 0xffffffffu;

  bool contains_parent_index(std::uint32_t pi) const { return parent_to_sub[pi] != npos; }
};

/// Builds the subgroup generated by the given parent element indices
/// (the closure is taken inside the parent). Deterministic: the stored
/// generating set is chosen greedily over `parent_indices` in order.
Subgroup make_subgroup(const GroupPtr& parent, const std::vector<std::uint32_t>& parent_indices,
                       std::string name);

/// Subgroup from an explicit full member list (must already be closed).
Subgroup subgroup_from_members(const GroupPtr& parent, std::vector<std::uint32_t> members,
                               std::string name);

// Builders for the stock groups used by the experiments and tests.
GroupPtr trivial_group();
GroupPtr cyclic_group(std::uint32_t n);
GroupPtr symmetric3();
GroupPtr alternating3();
GroupPtr dihedral4();
GroupPtr symmetric4();
GroupPtr alternating4();
/// 3x3 unitriangular matrices over Z/p^level ("level n" of the Heisenberg
/// tower); order p^(3*level).
GroupPtr heisenberg_level(std::uint32_t p, std::uint32_t level,
                          std::size_t cap = Caps::from_env().group_order);
/// 4x4 unitriangular matrices over Z/p^level; order p^(6*level).
GroupPtr unitriangular4_level(std::uint32_t p, std::uint32_t level,
                              std::size_t cap = Caps::from_env().group_order);
/// (Z/p^level)^x
GroupPtr units_level(std::uint32_t p, std::uint32_t level,
                     std::size_t cap = Caps::from_env().group_order);
/// Z/p^level (additive), enumerated in its cyclic ambient.
GroupPtr cyclic_level(std::uint32_t p, std::uint32_t level,
                      std::size_t cap = Caps::from_env().group_order);

/// Group from an explicit multiplication table (see TableAmbient).
GroupPtr group_from_table(std::vector<std::vector<std::uint32_t>> table,
                          std::uint32_t identity_index, std::vector<std::string> names,
                          std::string group_name);

}  // namespace profp
