#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "profp/abelian_algebra.hpp"
#include "profp/group_tower.hpp"

namespace profp {

/// Z = A x Z0 with A a finitely generated discrete abelian group (free rank
/// plus finite cyclic factors) and Z0 a tower of finite abelian quotients.
/// Elements of the truncated completed group ring live at one tower level
/// and have finite support in the A direction (no completion there).
struct ZSpec {
  std::uint32_t p = 0;
  std::size_t free_rank = 0;
  std::vector<std::uint32_t> cyclic_orders;
  GroupTower z0;
  std::string name;

  bool a_is_finite() const { return free_rank == 0; }
  std::uint64_t a_order() const {
    std::uint64_t n = 1;
    for (auto c : cyclic_orders) n *= c;
    return n;
  }
};

using ZSpecPtr = std::shared_ptr<const ZSpec>;

/// A with one free generator (the uniformiser) and Z0 = the units tower:
/// the multiplicative group of a p-adic field, truncated.
ZSpecPtr qpx_spec(std::uint32_t p, std::uint32_t depth);
/// Finite A given by cyclic orders, Z0 = the additive cyclic tower.
ZSpecPtr finite_a_spec(std::uint32_t p, std::vector<std::uint32_t> a_orders, std::uint32_t depth);

/// Element key in the A direction: free exponents then cyclic residues.
using AKey = std::vector<std::int64_t>;

class ZhatElement {
 public:
  ZhatElement(ZSpecPtr spec, int level);

  static ZhatElement zero(ZSpecPtr spec, int level) { return ZhatElement(std::move(spec), level); }
  static ZhatElement one(ZSpecPtr spec, int level);
  /// coeff * (a, z) for a group point: a = A part, z = element index in the
  /// level group.
  static ZhatElement term(ZSpecPtr spec, int level, AKey a, std::uint32_t z,
                          std::uint32_t coeff = 1);

  const ZSpec& spec() const { return *spec_; }
  ZSpecPtr spec_ptr() const { return spec_; }
  int level() const { return level_; }
  const std::map<std::pair<AKey, std::uint32_t>, std::uint32_t>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  void add_term(AKey a, std::uint32_t z, std::uint32_t val);

  friend ZhatElement operator+(const ZhatElement& x, const ZhatElement& y);
  friend ZhatElement operator-(const ZhatElement& x, const ZhatElement& y);
  friend ZhatElement operator*(const ZhatElement& x, const ZhatElement& y);
  ZhatElement pow(std::uint64_t e) const;

  friend bool operator==(const ZhatElement& x, const ZhatElement& y) {
    return x.spec_ == y.spec_ && x.level_ == y.level_ && x.coeffs_ == y.coeffs_;
  }
  friend bool operator!=(const ZhatElement& x, const ZhatElement& y) { return !(x == y); }

  std::string str() const;  // Laurent-style rendering (pi^k for the free part)

 private:
  AKey normalize_akey(AKey a) const;
  void check_compatible(const ZhatElement& o) const;

  ZSpecPtr spec_;
  int level_;
  std::map<std::pair<AKey, std::uint32_t>, std::uint32_t> coeffs_;
};

/// Pushforward to a lower level along the tower's quotient maps; a unital
/// ring homomorphism.
ZhatElement zhat_reduce(const ZhatElement& x, int to_level);

struct RemarkIsoReport {
  bool windowed = false;           // infinite A checked on an exponent window
  std::uint64_t basis_products = 0;
  std::uint64_t random_products = 0;
  bool pass = false;
};

/// Compares multiplication in k[(A x Z0)/level] against multiplication in the
/// nested form (k[A])[Z0/level] under the basis bijection (a, z) <-> a*z.
/// For infinite A the basis pairs range over the exponent window
/// [-window, window] per free generator (products are exact, no truncation).
RemarkIsoReport remark_iso_check(const ZSpecPtr& spec, int level, std::int64_t window = 2,
                                 std::uint64_t random_products = 25, std::uint64_t seed = 1);

struct FaithfulnessReport {
  std::uint64_t group_order = 0;
  std::size_t annihilator_dim = 0;  // of the identity basis vector in the regular module
  std::size_t endo_dim = 0;         // of the module endomorphisms of the regular module
  bool pass = false;                // annihilator 0 and endo dim = |Z'|
};

/// Finite commutative shadow: F_p[Z'] acts faithfully on itself and its
/// module endomorphism algebra is the whole group algebra.
FaithfulnessReport faithfulness_check(const GroupPtr& zprime, std::uint32_t p,
                                      std::size_t cap = Caps::from_env().nullspace_cols);

}  // namespace profp
