#include "profp/mackey.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace profp {

DoubleCosetDecomp double_cosets(const GroupPtr& g, const Subgroup& u) {
  const std::uint32_t n = static_cast<std::uint32_t>(g->order());
  if (u.parent_to_sub.size() != n)
    throw std::invalid_argument("double_cosets: U is not a subgroup of this G");

  // scan in lexicographic encoding order so each first-unvisited element is
  // the least of its double coset
  std::vector<std::uint32_t> by_lex(n);
  std::iota(by_lex.begin(), by_lex.end(), 0);
  std::sort(by_lex.begin(), by_lex.end(),
            [&](std::uint32_t a, std::uint32_t b) { return g->enc(a) < g->enc(b); });

  std::vector<std::uint32_t> ugens;
  for (std::size_t gi = 0; gi < u.group->generator_count(); ++gi)
    ugens.push_back(u.to_parent[u.group->generator(gi)]);

  DoubleCosetDecomp dc;
  dc.g = g;
  dc.u = u;
  std::vector<bool> seen(n, false);
  std::uint64_t covered = 0;
  for (std::uint32_t start : by_lex) {
    if (seen[start]) continue;
    std::vector<std::uint32_t> stack{start};
    seen[start] = true;
    std::uint64_t size = 0;
    while (!stack.empty()) {
      std::uint32_t x = stack.back();
      stack.pop_back();
      ++size;
      for (auto ug : ugens) {
        for (std::uint32_t y : {g->mult(ug, x), g->mult(x, ug)}) {
          if (!seen[y]) {
            seen[y] = true;
            stack.push_back(y);
          }
        }
      }
    }
    dc.reps.push_back(start);
    dc.coset_sizes.push_back(size);
    covered += size;
    dc.u_w.push_back(u_w_subgroup(u.group, g->enc(start)));
  }
  if (covered != n) throw std::logic_error("double_cosets: cosets do not cover G");
  return dc;
}

BiModule induced_bimodule(const GroupPtr& g, const Subgroup& u) {
  if (u.parent_to_sub.size() != g->order())
    throw std::invalid_argument("induced_bimodule: U is not a subgroup of this G");
  BiModule bm;
  bm.g = g;
  bm.right_sub = u;
  for (std::size_t gi = 0; gi < g->generator_count(); ++gi)
    bm.left_perms.push_back(g->left_gen_table(gi));
  for (std::size_t gi = 0; gi < u.group->generator_count(); ++gi) {
    std::uint32_t ug = u.to_parent[u.group->generator(gi)];
    bm.right_perms.push_back(g->right_mult_table(g->inv(ug)));
  }
  return bm;
}

std::vector<std::uint32_t> iota_embedding(const BiModule& bm) { return bm.right_sub.to_parent; }

std::size_t commutant_dim(const BiModule& bm, CommutantSide side, std::uint32_t p,
                          std::size_t cap) {
  std::vector<std::vector<std::uint32_t>> perms = bm.left_perms;
  if (side == CommutantSide::Both)
    perms.insert(perms.end(), bm.right_perms.begin(), bm.right_perms.end());
  return commutant_dim_of_perms(perms, static_cast<std::uint32_t>(bm.g->order()), p, cap);
}

OmegaReport omega_dimension_check(const GroupPtr& g, const Subgroup& u, std::uint32_t p,
                                  std::size_t cap, std::size_t spot_cap) {
  checked_prime(p);
  if (!u.group->is_p_group(p))
    throw std::invalid_argument("omega_dimension_check: U must be a p-subgroup");
  const std::uint32_t n = static_cast<std::uint32_t>(g->order());
  const std::uint32_t un = static_cast<std::uint32_t>(u.group->order());

  auto dc = double_cosets(g, u);
  auto bm = induced_bimodule(g, u);

  OmegaReport rep;
  for (std::size_t wi = 0; wi < dc.reps.size(); ++wi) {
    rep.reps.push_back(g->enc(dc.reps[wi]));
    rep.coset_sizes.push_back(dc.coset_sizes[wi]);
    auto fs = twisted_fixed_space(u.group, g->enc(dc.reps[wi]), p);
    if (fs.cross_checked && !fs.cross_check_ok)
      throw std::logic_error("omega_dimension_check: twisted fixed-space routes disagree");
    rep.per_w_dims.push_back(fs.dim);
    rep.sum_w_dims += fs.dim;
  }

  std::vector<std::vector<std::uint32_t>> perms = bm.left_perms;
  perms.insert(perms.end(), bm.right_perms.begin(), bm.right_perms.end());
  auto basis = commutant_basis_of_perms(perms, n, p, cap);
  rep.commutant = basis.size();
  rep.dims_equal = rep.commutant == rep.sum_w_dims;
  rep.pass = rep.dims_equal;

  if (static_cast<std::uint64_t>(n) * n <= spot_cap * spot_cap && n <= spot_cap) {
    rep.omega_spot_checked = true;
    // per-orbit tables of each twisted action, for the fixedness test
    std::vector<std::vector<std::uint32_t>> orbit_tables;
    for (std::size_t wi = 0; wi < dc.reps.size(); ++wi) {
      auto act = twisted_action(u.group, g->enc(dc.reps[wi]), dc.u_w[wi]);
      orbit_tables.push_back(orbit_of_point(orbits(act), un));
    }
    RowSpace image(p, dc.reps.size() * un);
    bool all_fixed = true;
    for (const auto& alpha : basis) {
      // alpha applied to the identity basis vector: column 0 of the matrix
      FpVec lambda_all(p, dc.reps.size() * un);
      for (std::size_t wi = 0; wi < dc.reps.size(); ++wi) {
        for (std::uint32_t up = 0; up < un; ++up) {
          std::uint32_t gidx = g->mult(dc.reps[wi], u.to_parent[up]);
          lambda_all.v[wi * un + up] = alpha.v[static_cast<std::size_t>(gidx) * n + 0];
        }
        // twisted-fixed <=> constant on the twisted orbits
        const auto& ot = orbit_tables[wi];
        std::vector<std::int64_t> seen_val(un, -1);
        for (std::uint32_t up = 0; up < un; ++up) {
          std::uint32_t o = ot[up];
          std::uint32_t val = lambda_all.v[wi * un + up];
          if (seen_val[o] < 0)
            seen_val[o] = val;
          else if (seen_val[o] != val)
            all_fixed = false;
        }
      }
      image.insert(lambda_all);
    }
    rep.omega_bijective =
        all_fixed && image.dim() == rep.commutant && rep.commutant == rep.sum_w_dims;
    rep.pass = rep.pass && rep.omega_bijective;
  }
  return rep;
}

}  // namespace profp
