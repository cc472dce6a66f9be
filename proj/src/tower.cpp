#include "profp/tower.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace profp {

TowerOfActions::TowerOfActions(std::vector<GAction> levels,
                               std::vector<std::vector<std::uint32_t>> set_maps,
                               std::vector<std::vector<std::uint32_t>> group_maps,
                               std::vector<int> level_labels, std::string name)
    : levels_(std::move(levels)),
      set_maps_(std::move(set_maps)),
      group_maps_(std::move(group_maps)),
      labels_(std::move(level_labels)),
      name_(std::move(name)) {
  if (levels_.empty()) throw std::invalid_argument("TowerOfActions: no levels");
  if (set_maps_.size() + 1 != levels_.size() || group_maps_.size() + 1 != levels_.size())
    throw std::invalid_argument("TowerOfActions: map count mismatch");
  if (labels_.size() != levels_.size())
    throw std::invalid_argument("TowerOfActions: label count mismatch");

  for (std::size_t i = 0; i + 1 < levels_.size(); ++i) {
    const GAction& up = levels_[i + 1];
    const GAction& lo = levels_[i];
    const auto& pm = set_maps_[i];
    const auto& gm = group_maps_[i];
    if (pm.size() != up.num_points() || gm.size() != up.group().order())
      throw std::invalid_argument("TowerOfActions: map size mismatch");

    // set map surjective
    std::vector<bool> hit(lo.num_points(), false);
    for (auto y : pm) {
      if (y >= lo.num_points()) throw std::invalid_argument("TowerOfActions: set map out of range");
      hit[y] = true;
    }
    if (!std::all_of(hit.begin(), hit.end(), [](bool b) { return b; }))
      throw std::invalid_argument("TowerOfActions: set map not surjective");

    // group map: homomorphism (checked on all elements against generators),
    // surjective, identity to identity
    if (gm[GroupModel::kIdentity] != GroupModel::kIdentity)
      throw std::invalid_argument("TowerOfActions: group map does not fix identity");
    std::vector<bool> ghit(lo.group().order(), false);
    for (auto g : gm) {
      if (g >= lo.group().order())
        throw std::invalid_argument("TowerOfActions: group map out of range");
      ghit[g] = true;
    }
    if (!std::all_of(ghit.begin(), ghit.end(), [](bool b) { return b; }))
      throw std::invalid_argument("TowerOfActions: group map not surjective");
    for (std::uint32_t x = 0; x < up.group().order(); ++x)
      for (std::size_t gi = 0; gi < up.group().generator_count(); ++gi) {
        std::uint32_t g = up.group().generator(gi);
        if (gm[up.group().mult(x, g)] != lo.group().mult(gm[x], gm[g]))
          throw std::invalid_argument("TowerOfActions: group map is not a homomorphism");
      }

    // equivariance through the group map, on generators
    for (std::size_t gi = 0; gi < up.group().generator_count(); ++gi) {
      auto lo_table = lo.element_table(gm[up.group().generator(gi)]);
      for (std::uint32_t y = 0; y < up.num_points(); ++y)
        if (pm[up.act_gen(gi, y)] != lo_table[pm[y]])
          throw std::invalid_argument("TowerOfActions: set map is not equivariant");
    }
  }

  orbits_.reserve(levels_.size());
  orbit_of_.reserve(levels_.size());
  for (const auto& a : levels_) {
    orbits_.push_back(orbits(a));
    orbit_of_.push_back(orbit_of_point(orbits_.back(), a.num_points()));
  }
}

std::vector<std::uint32_t> TowerOfActions::point_map(std::size_t n, std::size_t m) const {
  if (m > n || n >= levels_.size()) throw std::invalid_argument("point_map: bad levels");
  std::vector<std::uint32_t> t(levels_[n].num_points());
  std::iota(t.begin(), t.end(), 0);
  for (std::size_t k = n; k > m; --k)
    for (auto& y : t) y = set_maps_[k - 1][y];
  return t;
}

SigmaMap sigma_map(const TowerOfActions& t, std::size_t n, std::size_t m) {
  const auto& on = t.level_orbits(n);
  const auto& om = t.level_orbits(m);
  auto pm = t.point_map(n, m);
  SigmaMap sm;
  sm.target_count = om.size();
  sm.target_orbit.resize(on.size());
  sm.integer_factor.resize(on.size());
  for (std::size_t c = 0; c < on.size(); ++c) {
    std::uint32_t d = t.orbit_at(m, pm[on[c].points.front()]);
    sm.target_orbit[c] = d;
    std::uint64_t cs = on[c].points.size(), ds = om[d].points.size();
    if (cs % ds != 0) throw std::logic_error("sigma_map: orbit size ratio is not an integer");
    sm.integer_factor[c] = cs / ds;
  }
  return sm;
}

FpVec apply_sigma(const SigmaMap& sm, const FpVec& x) {
  if (x.size() != sm.target_orbit.size())
    throw std::invalid_argument("apply_sigma: coordinate count mismatch");
  FpVec out(x.p, sm.target_count);
  for (std::size_t c = 0; c < x.v.size(); ++c) {
    std::uint32_t f = static_cast<std::uint32_t>(sm.integer_factor[c] % x.p);
    if (!f || !x.v[c]) continue;
    out.v[sm.target_orbit[c]] =
        modp::add(out.v[sm.target_orbit[c]], modp::mul(f, x.v[c], x.p), x.p);
  }
  return out;
}

FpVec push_points(const TowerOfActions& t, std::size_t n, std::size_t m, const FpVec& x) {
  auto pm = t.point_map(n, m);
  if (x.size() != pm.size()) throw std::invalid_argument("push_points: size mismatch");
  FpVec out(x.p, t.level(m).num_points());
  for (std::size_t y = 0; y < pm.size(); ++y)
    out.v[pm[y]] = modp::add(out.v[pm[y]], x.v[y], x.p);
  return out;
}

bool check_coherence(const TowerOfActions& t, const InvariantFamily& fam) {
  if (fam.levels.size() != t.level_count())
    throw std::invalid_argument("check_coherence: family must span all levels");
  for (std::size_t m = 0; m + 1 < t.level_count(); ++m) {
    const std::uint32_t p = fam.levels[m].p;
    for (std::size_t n = m + 1; n < t.level_count(); ++n) {
      const auto& on = t.level_orbits(n);
      const auto& om = t.level_orbits(m);
      auto pm = t.point_map(n, m);
      FpVec sums(p, om.size());
      for (std::size_t c = 0; c < on.size(); ++c) {
        std::uint32_t d = t.orbit_at(m, pm[on[c].points.front()]);
        if (on[c].points.size() == om[d].points.size())
          sums.v[d] = modp::add(sums.v[d], fam.levels[n].v[c], p);
      }
      if (!(sums == fam.levels[m])) return false;
    }
  }
  return true;
}

bool check_sigma_compatibility(const TowerOfActions& t, const InvariantFamily& fam) {
  if (fam.levels.size() != t.level_count())
    throw std::invalid_argument("check_sigma_compatibility: family must span all levels");
  for (std::size_t m = 0; m + 1 < t.level_count(); ++m)
    for (std::size_t n = m + 1; n < t.level_count(); ++n)
      if (!(apply_sigma(sigma_map(t, n, m), fam.levels[n]) == fam.levels[m])) return false;
  return true;
}

std::vector<std::uint32_t> persistent_orbits(const TowerOfActions& t, std::size_t m,
                                             std::size_t horizon) {
  if (m > horizon || horizon >= t.level_count())
    throw std::invalid_argument("persistent_orbits: bad levels");
  // a size-preserving orbit at the horizon forces nonempty size-preserving
  // fibers at every intermediate level, so checking the horizon suffices
  auto sm = sigma_map(t, horizon, m);
  std::set<std::uint32_t> out;
  for (std::size_t c = 0; c < sm.target_orbit.size(); ++c)
    if (sm.integer_factor[c] == 1) out.insert(sm.target_orbit[c]);
  return {out.begin(), out.end()};
}

DensityReport density_check(const TowerOfActions& t, std::uint32_t p, std::size_t m,
                            std::size_t horizon, std::size_t cap) {
  checked_prime(p);
  if (m > horizon || horizon >= t.level_count())
    throw std::invalid_argument("density_check: bad levels");

  // stacked compatibility system over levels m..horizon
  std::vector<std::size_t> offset;
  std::size_t vars = 0;
  for (std::size_t k = m; k <= horizon; ++k) {
    offset.push_back(vars);
    vars += t.level_orbits(k).size();
  }
  std::vector<SparseMatrixFp::Entry> entries;
  std::uint32_t row = 0;
  for (std::size_t k = m; k < horizon; ++k) {
    auto sm = sigma_map(t, k + 1, k);
    const std::size_t lo_n = t.level_orbits(k).size();
    std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> contrib(lo_n);
    for (std::size_t c = 0; c < sm.target_orbit.size(); ++c) {
      std::uint32_t f = static_cast<std::uint32_t>(sm.integer_factor[c] % p);
      if (f)
        contrib[sm.target_orbit[c]].push_back(
            {static_cast<std::uint32_t>(offset[k - m + 1] + c), f});
    }
    for (std::size_t d = 0; d < lo_n; ++d) {
      entries.push_back({row, static_cast<std::uint32_t>(offset[k - m] + d), p - 1});
      for (auto [col, f] : contrib[d]) entries.push_back({row, col, f});
      ++row;
    }
  }
  auto kernel = nullspace(
      SparseMatrixFp(p, row, static_cast<std::uint32_t>(vars), std::move(entries)), cap);

  const std::size_t m_orbits = t.level_orbits(m).size();
  RowSpace image(p, m_orbits);
  for (const auto& k : kernel) {
    FpVec proj(p, m_orbits);
    std::copy(k.v.begin(), k.v.begin() + static_cast<std::ptrdiff_t>(m_orbits), proj.v.begin());
    image.insert(proj);
  }

  auto smh = sigma_map(t, horizon, m);
  RowSpace persisted(p, m_orbits);
  for (std::size_t c = 0; c < smh.target_orbit.size(); ++c) {
    if (smh.integer_factor[c] != 1) continue;
    FpVec e(p, t.level_orbits(horizon).size());
    e.v[c] = 1;
    persisted.insert(apply_sigma(smh, e));
  }

  DensityReport rep;
  rep.coherent_image_dim = image.dim();
  rep.persistent_span_dim = persisted.dim();
  rep.persistent = persistent_orbits(t, m, horizon);
  rep.equal = image == persisted;
  return rep;
}

TowerOfActions example_tower(std::uint32_t p, std::size_t depth, std::size_t cap) {
  checked_prime(p);
  if (depth < 1) throw std::invalid_argument("example_tower: depth must be >= 1");

  auto pow_p = [&](std::size_t e) {
    std::uint64_t r = 1;
    while (e--) r *= p;
    return r;
  };
  std::uint64_t top_points = 0;
  for (std::size_t m = 0; m <= depth; ++m) top_points += pow_p(m);
  if (top_points > cap)
    throw CapExceeded("example_tower: " + std::to_string(top_points) + " points exceeds cap");

  std::vector<GAction> levels;
  std::vector<std::vector<std::uint32_t>> set_maps, group_maps;
  std::vector<int> labels;

  for (std::size_t n = 0; n <= depth; ++n) {
    std::vector<std::uint64_t> offset(n + 2, 0);
    for (std::size_t m = 0; m <= n; ++m) offset[m + 1] = offset[m] + pow_p(m);
    const std::uint32_t npts = static_cast<std::uint32_t>(offset[n + 1]);

    GroupPtr grp = n == 0 ? cyclic_group(1) : cyclic_level(p, static_cast<std::uint32_t>(n));
    std::vector<Encoding> names(npts);
    for (std::size_t m = 0; m <= n; ++m)
      for (std::uint64_t j = 0; j < pow_p(m); ++j)
        names[offset[m] + j] = Encoding{static_cast<std::int32_t>(m), static_cast<std::int32_t>(j)};

    std::vector<std::vector<std::uint32_t>> tables(grp->generator_count());
    for (std::size_t gi = 0; gi < grp->generator_count(); ++gi) {
      tables[gi].resize(npts);
      for (std::size_t m = 0; m <= n; ++m) {
        const std::uint64_t sz = pow_p(m);
        for (std::uint64_t j = 0; j < sz; ++j)
          tables[gi][offset[m] + j] = static_cast<std::uint32_t>(offset[m] + (j + 1) % sz);
      }
    }
    levels.emplace_back(grp, npts, std::move(tables), std::move(names));
    labels.push_back(static_cast<int>(n));

    if (n > 0) {
      // points: identity on the orbits shared with the level below, top
      // orbit folds p-to-1 onto the previous top orbit
      std::vector<std::uint32_t> pm(npts);
      for (std::size_t m = 0; m < n; ++m)
        for (std::uint64_t j = 0; j < pow_p(m); ++j)
          pm[offset[m] + j] = static_cast<std::uint32_t>(offset[m] + j);
      for (std::uint64_t j = 0; j < pow_p(n); ++j)
        pm[offset[n] + j] =
            static_cast<std::uint32_t>(offset[n - 1] + j % pow_p(n - 1));
      set_maps.push_back(std::move(pm));

      const GroupPtr& lo = levels[n - 1].group_ptr();
      std::vector<std::uint32_t> gm(levels[n].group().order());
      const std::uint64_t lo_order = lo->order();
      for (std::uint64_t x = 0; x < levels[n].group().order(); ++x) {
        Encoding e{static_cast<std::int32_t>(x % lo_order)};
        gm[x] = lo->index_of(e).value();
      }
      group_maps.push_back(std::move(gm));
    }
  }
  return TowerOfActions(std::move(levels), std::move(set_maps), std::move(group_maps),
                        std::move(labels), "example(p=" + std::to_string(p) + ")");
}

DeltaWitnessReport nonclosed_delta_witness(const TowerOfActions& t, std::size_t depth) {
  if (depth >= t.level_count())
    throw std::invalid_argument("nonclosed_delta_witness: depth beyond tower");
  DeltaWitnessReport rep;

  // locate the per-level base points {m, 0} of the top orbits
  auto find_point = [&](std::size_t lvl, std::int32_t m) -> std::uint32_t {
    const auto& names = t.level(lvl).point_names();
    Encoding want{m, 0};
    for (std::uint32_t y = 0; y < names.size(); ++y)
      if (names[y] == want) return y;
    throw std::invalid_argument("nonclosed_delta_witness: tower is not an example tower");
  };

  for (std::size_t n = 0; n <= depth; ++n) {
    std::uint32_t z = find_point(n, static_cast<std::int32_t>(n));
    rep.witness_points.push_back(t.level(n).point_names()[z]);
    rep.witness_orbit_sizes.push_back(t.level_orbits(n)[t.orbit_at(n, z)].points.size());
  }
  rep.sizes_strictly_increasing = true;
  for (std::size_t n = 1; n <= depth; ++n)
    if (rep.witness_orbit_sizes[n] <= rep.witness_orbit_sizes[n - 1])
      rep.sizes_strictly_increasing = false;

  bool ok = rep.sizes_strictly_increasing;
  for (std::size_t n = 0; n <= depth; ++n) {
    DeltaWitnessReport::Approximant ap;
    ap.level = n;
    std::uint32_t deep = find_point(depth, static_cast<std::int32_t>(n));
    ap.deep_point = t.level(depth).point_names()[deep];

    // image at level n must be the witness point there
    auto pm = t.point_map(depth, n);
    std::uint32_t image = pm[deep];
    ap.image_matches_witness = t.level(n).point_names()[image] == rep.witness_points[n];

    // orbit sizes from level n up to the deepest level must be constant
    ap.persistent = true;
    std::uint64_t stable = t.level_orbits(n)[t.orbit_at(n, image)].points.size();
    for (std::size_t k = n; k <= depth; ++k) {
      auto pk = t.point_map(depth, k);
      std::uint64_t sz = t.level_orbits(k)[t.orbit_at(k, pk[deep])].points.size();
      if (sz != stable) ap.persistent = false;
    }
    ap.stable_orbit_size = stable;
    ok = ok && ap.image_matches_witness && ap.persistent;
    rep.approximants.push_back(std::move(ap));
  }
  rep.pass = ok;
  return rep;
}

}  // namespace profp
