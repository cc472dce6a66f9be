#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "profp/group_model.hpp"
#include "profp/perm_module.hpp"
#include "profp/twisted.hpp"

namespace profp {

/// The decomposition of G into double cosets U w U, with a canonical
/// representative list (each w is the least element of its coset in the
/// lexicographic order of encodings) and, per representative, the subgroup
/// U_w = U cap w U w^{-1} of U.
struct DoubleCosetDecomp {
  GroupPtr g;
  Subgroup u;
  std::vector<std::uint32_t> reps;                  // G indices, encoding-lex order
  std::vector<std::uint64_t> coset_sizes;           // |U w U|
  std::vector<Subgroup> u_w;                        // in U's model
};

DoubleCosetDecomp double_cosets(const GroupPtr& g, const Subgroup& u);

/// F_p[G] with G translating on the left and a subgroup translating on the
/// right; the two commuting families of point permutations.
struct BiModule {
  GroupPtr g;
  Subgroup right_sub;                               // right-acting subgroup (may be all of G)
  std::vector<std::vector<std::uint32_t>> left_perms;   // per G generator: x -> g x
  std::vector<std::vector<std::uint32_t>> right_perms;  // per U generator: x -> x u^{-1}
};

BiModule induced_bimodule(const GroupPtr& g, const Subgroup& u);

/// Extension by zero F_p[U] -> F_p[G] on basis elements.
std::vector<std::uint32_t> iota_embedding(const BiModule& bm);

enum class CommutantSide { LeftOnly, Both };

/// Brute-force dimension of the endomorphisms of F_p[G] commuting with the
/// left action (and with the right action for Both).
std::size_t commutant_dim(const BiModule& bm, CommutantSide side, std::uint32_t p,
                          std::size_t cap = Caps::from_env().nullspace_cols);

struct OmegaReport {
  std::vector<Encoding> reps;
  std::vector<std::uint64_t> coset_sizes;
  std::vector<std::size_t> per_w_dims;       // dim of the twisted fixed space k[U]_w
  std::size_t sum_w_dims = 0;
  std::size_t commutant = 0;                 // dim End_{G x U}(F_p[G])
  bool dims_equal = false;
  bool omega_spot_checked = false;           // explicit map computed and checked
  bool omega_bijective = false;              // it lands in the product and has full rank
  bool pass = false;
};

/// Verifies dim End_{G x U}(F_p[G]) = sum over double-coset reps w of
/// dim k[U]_w, both sides computed independently (commutant solve vs twisted
/// orbit counts). When the commutant system is within `spot_cap`, also
/// builds the explicit per-representative evaluation map
///   alpha |-> (u' -> (alpha . iota(f))(w u'))  at f = the identity basis
/// element, checks each component is twisted-fixed, and checks the total map
/// is a bijection onto the product.
OmegaReport omega_dimension_check(const GroupPtr& g, const Subgroup& u, std::uint32_t p,
                                  std::size_t cap = Caps::from_env().nullspace_cols,
                                  std::size_t spot_cap = 2000);

}  // namespace profp
