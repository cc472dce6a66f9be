#include "profp/perm_module.hpp"

#include <algorithm>
#include <stdexcept>

namespace profp {

std::vector<ModuleElement> orbit_sums(const std::vector<OrbitInfo>& os, std::uint32_t p) {
  checked_prime(p);
  std::vector<ModuleElement> out;
  out.reserve(os.size());
  for (const auto& o : os) {
    ModuleElement e;
    e.p = p;
    for (auto y : o.points) e.coeffs[y] = 1;
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<FpVec> fixed_space_of_perms(const std::vector<std::vector<std::uint32_t>>& perms,
                                        std::uint32_t n, std::uint32_t p, std::size_t cap) {
  // x fixed by perm  <=>  x[perm^{-1}(y)] = x[y] for all y; as rows over x:
  // x[src] - x[y] = 0 with src = perm^{-1}(y), equivalently x[perm(y)] - x[y].
  std::vector<SparseMatrixFp::Entry> entries;
  std::uint32_t row = 0;
  for (const auto& perm : perms) {
    if (perm.size() != n) throw std::invalid_argument("fixed_space_of_perms: bad permutation");
    for (std::uint32_t y = 0; y < n; ++y) {
      std::uint32_t z = perm[y];
      if (z == y) continue;
      entries.push_back({row, z, 1});
      entries.push_back({row, y, p - 1});
      ++row;
    }
  }
  return nullspace(SparseMatrixFp(p, row, n, std::move(entries)), cap);
}

std::vector<FpVec> invariant_basis(const GAction& a, std::uint32_t p, InvariantRoute route,
                                   std::size_t cap) {
  checked_prime(p);
  const std::uint32_t n = a.num_points();
  // default route is orbit sums: exact at finite level and linear in |Y|
  if (route == InvariantRoute::Auto) route = InvariantRoute::OrbitSums;
  if (route == InvariantRoute::OrbitSums) {
    auto os = orbits(a);
    RowSpace rs(p, n);
    for (const auto& s : orbit_sums(os, p)) rs.insert(s.dense(n));
    return rs.basis_vectors();
  }
  std::vector<std::vector<std::uint32_t>> perms;
  perms.reserve(a.group().generator_count());
  for (std::size_t gi = 0; gi < a.group().generator_count(); ++gi) perms.push_back(a.gen_table(gi));
  return fixed_space_of_perms(perms, n, p, cap);
}

InvariantsReport verify_finite_invariants(const GAction& a, std::uint32_t p, std::size_t cap) {
  const std::uint32_t n = a.num_points();
  auto os = orbits(a);
  auto sums = orbit_sums(os, p);
  auto null_basis = invariant_basis(a, p, InvariantRoute::Nullspace, cap);

  InvariantsReport rep;
  rep.orbit_count = sums.size();
  rep.nullspace_dim = null_basis.size();

  RowSpace null_space = span_of(p, n, null_basis);

  // coordinates in an RREF basis read off at the pivot columns
  auto coords_in_rref = [&](const FpVec& v) {
    std::vector<std::uint32_t> c(null_space.dim());
    for (std::size_t i = 0; i < null_space.dim(); ++i) c[i] = v.v[null_space.pivots()[i]];
    return c;
  };
  bool ok = rep.orbit_count == rep.nullspace_dim;
  for (const auto& s : sums) {
    FpVec v = s.dense(n);
    auto c = coords_in_rref(v);
    FpVec rec(p, n);
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::uint32_t j = 0; j < n; ++j)
        rec.v[j] = modp::add(rec.v[j], modp::mul(c[i], null_space.basis()[i][j], p), p);
    if (!(rec == v)) ok = false;
    rep.orbit_in_nullspace.push_back(std::move(c));
  }
  // orbit sums have disjoint supports: coordinates = value at the orbit's
  // least point
  for (const auto& b : null_basis) {
    std::vector<std::uint32_t> c(sums.size());
    for (std::size_t oi = 0; oi < os.size(); ++oi) c[oi] = b.v[os[oi].points.front()];
    FpVec rec(p, n);
    for (std::size_t oi = 0; oi < os.size(); ++oi)
      if (c[oi])
        for (auto y : os[oi].points) rec.v[y] = modp::add(rec.v[y], c[oi], p);
    if (!(rec == b)) ok = false;
    rep.nullspace_in_orbit.push_back(std::move(c));
  }
  rep.pass = ok;
  return rep;
}

std::vector<ModuleElement> center_group_algebra(const GroupPtr& g, std::uint32_t p,
                                                std::size_t cap) {
  if (g->order() > cap)
    throw CapExceeded("center_group_algebra: group order " + std::to_string(g->order()) +
                      " exceeds cap");
  return orbit_sums(orbits(conjugation_action(g)), p);
}

std::size_t commutant_dim_of_perms(const std::vector<std::vector<std::uint32_t>>& perms,
                                   std::uint32_t n, std::uint32_t p, std::size_t cap) {
  return commutant_basis_of_perms(perms, n, p, cap).size();
}

std::vector<FpVec> commutant_basis_of_perms(const std::vector<std::vector<std::uint32_t>>& perms,
                                            std::uint32_t n, std::uint32_t p, std::size_t cap) {
  const std::uint64_t unknowns = static_cast<std::uint64_t>(n) * n;
  if (unknowns > cap)
    throw CapExceeded("commutant: " + std::to_string(unknowns) + " unknowns exceeds cap " +
                      std::to_string(cap));
  std::vector<SparseMatrixFp::Entry> entries;
  std::uint32_t row = 0;
  auto flat = [n](std::uint32_t i, std::uint32_t j) { return i * n + j; };
  for (const auto& perm : perms) {
    if (perm.size() != n) throw std::invalid_argument("commutant: bad permutation");
    for (std::uint32_t i = 0; i < n; ++i)
      for (std::uint32_t j = 0; j < n; ++j) {
        std::uint32_t a = flat(perm[i], perm[j]), b = flat(i, j);
        if (a == b) continue;
        entries.push_back({row, a, 1});
        entries.push_back({row, b, p - 1});
        ++row;
      }
  }
  return nullspace(SparseMatrixFp(p, row, static_cast<std::uint32_t>(unknowns), std::move(entries)),
                   cap);
}

std::size_t bimodule_end_dim(const GroupPtr& g, std::uint32_t p, std::size_t cap) {
  checked_prime(p);
  const std::uint32_t n = static_cast<std::uint32_t>(g->order());
  std::vector<std::vector<std::uint32_t>> perms;
  for (std::size_t gi = 0; gi < g->generator_count(); ++gi) {
    perms.push_back(g->left_gen_table(gi));
    // right translation x -> x g^{-1} as a left action of the right factor
    perms.push_back(g->right_mult_table(g->inv(g->generator(gi))));
  }
  return commutant_dim_of_perms(perms, n, p, cap);
}

}  // namespace profp
