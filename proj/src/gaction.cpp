#include "profp/gaction.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace profp {

GAction::GAction(GroupPtr group, std::uint32_t num_points,
                 std::vector<std::vector<std::uint32_t>> generator_tables,
                 std::vector<Encoding> point_names, bool validate_fully)
    : group_(std::move(group)),
      num_points_(num_points),
      tables_(std::move(generator_tables)),
      point_names_(std::move(point_names)) {
  if (tables_.size() != group_->generator_count())
    throw std::invalid_argument("GAction: one table per group generator required");
  for (const auto& t : tables_) {
    if (t.size() != num_points_) throw std::invalid_argument("GAction: table size mismatch");
    std::vector<bool> seen(num_points_, false);
    for (auto y : t) {
      if (y >= num_points_ || seen[y])
        throw std::invalid_argument("GAction: generator table is not a permutation");
      seen[y] = true;
    }
  }
  if (!point_names_.empty() && point_names_.size() != num_points_)
    throw std::invalid_argument("GAction: point name count mismatch");

  // cocycle on generator pairs: act(g*h) = act(g) . act(h)
  for (std::size_t a = 0; a < tables_.size(); ++a)
    for (std::size_t b = 0; b < tables_.size(); ++b) {
      std::uint32_t gh = group_->mult(group_->generator(a), group_->generator(b));
      auto t = element_table(gh);
      for (std::uint32_t y = 0; y < num_points_; ++y)
        if (t[y] != tables_[a][tables_[b][y]])
          throw std::invalid_argument("GAction: generator tables violate the action axioms");
    }
  if (validate_fully) {
    for (std::uint32_t x = 0; x < group_->order(); ++x) {
      auto tx = element_table(x);
      for (std::size_t b = 0; b < tables_.size(); ++b) {
        auto txg = element_table(group_->mult(x, group_->generator(b)));
        for (std::uint32_t y = 0; y < num_points_; ++y)
          if (txg[y] != tx[tables_[b][y]])
            throw std::invalid_argument("GAction: full validation failed");
      }
    }
  }
}

GAction GAction::from_function(
    GroupPtr group, std::uint32_t num_points,
    const std::function<std::uint32_t(std::uint32_t, std::uint32_t)>& act,
    std::vector<Encoding> point_names, bool validate_fully) {
  std::vector<std::vector<std::uint32_t>> tables(group->generator_count());
  for (std::size_t gi = 0; gi < group->generator_count(); ++gi) {
    tables[gi].resize(num_points);
    for (std::uint32_t y = 0; y < num_points; ++y) tables[gi][y] = act(group->generator(gi), y);
  }
  return GAction(std::move(group), num_points, std::move(tables), std::move(point_names),
                 validate_fully);
}

std::vector<std::uint32_t> GAction::element_table(std::uint32_t g) const {
  std::vector<std::uint32_t> t(num_points_);
  std::iota(t.begin(), t.end(), 0);
  const auto& w = group_->word(g);
  // act(g_{w1} ... g_{wk}) = act(g_{w1}) . ... . act(g_{wk}): apply last first
  for (std::size_t i = w.size(); i-- > 0;) {
    const auto& gt = tables_[w[i]];
    for (auto& y : t) y = gt[y];
  }
  return t;
}

std::uint32_t GAction::act(std::uint32_t g, std::uint32_t y) const {
  const auto& w = group_->word(g);
  for (std::size_t i = w.size(); i-- > 0;) y = tables_[w[i]][y];
  return y;
}

std::vector<OrbitInfo> orbits(const GAction& a) {
  const std::uint32_t n = a.num_points();
  const std::uint64_t gorder = a.group().order();
  std::vector<bool> seen(n, false);
  std::vector<OrbitInfo> out;
  std::vector<std::uint32_t> stack;
  for (std::uint32_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    OrbitInfo o;
    stack.assign(1, start);
    seen[start] = true;
    while (!stack.empty()) {
      std::uint32_t y = stack.back();
      stack.pop_back();
      o.points.push_back(y);
      for (std::size_t gi = 0; gi < a.group().generator_count(); ++gi) {
        std::uint32_t z = a.act_gen(gi, y);
        if (!seen[z]) {
          seen[z] = true;
          stack.push_back(z);
        }
      }
    }
    std::sort(o.points.begin(), o.points.end());
    o.stabilizer_index = o.points.size();
    if (gorder % o.points.size() != 0)
      throw std::logic_error("orbits: orbit size does not divide group order");
    o.stabilizer_order = gorder / o.points.size();
    out.push_back(std::move(o));
  }
  return out;  // starts scan ascending, so orbits are ordered by least point
}

std::vector<std::uint32_t> orbit_of_point(const std::vector<OrbitInfo>& os, std::uint32_t n) {
  std::vector<std::uint32_t> idx(n, 0);
  for (std::uint32_t i = 0; i < os.size(); ++i)
    for (auto y : os[i].points) idx[y] = i;
  return idx;
}

std::uint64_t stabilizer_order_by_scan(const GAction& a, std::uint32_t y) {
  std::uint64_t c = 0;
  for (std::uint32_t g = 0; g < a.group().order(); ++g)
    if (a.act(g, y) == y) ++c;
  return c;
}

PartitionOfSet::PartitionOfSet(std::uint32_t n, std::vector<std::vector<std::uint32_t>> blocks)
    : n_(n), blocks_(std::move(blocks)) {
  block_of_.assign(n_, 0xffffffffu);
  for (auto& b : blocks_) {
    if (b.empty()) throw std::invalid_argument("PartitionOfSet: empty block");
    std::sort(b.begin(), b.end());
  }
  std::sort(blocks_.begin(), blocks_.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  for (std::uint32_t bi = 0; bi < blocks_.size(); ++bi)
    for (auto x : blocks_[bi]) {
      if (x >= n_) throw std::invalid_argument("PartitionOfSet: point out of range");
      if (block_of_[x] != 0xffffffffu) throw std::invalid_argument("PartitionOfSet: blocks overlap");
      block_of_[x] = bi;
    }
  for (auto b : block_of_)
    if (b == 0xffffffffu) throw std::invalid_argument("PartitionOfSet: blocks do not cover");
}

PartitionOfSet PartitionOfSet::discrete(std::uint32_t n) {
  std::vector<std::vector<std::uint32_t>> bs(n);
  for (std::uint32_t i = 0; i < n; ++i) bs[i] = {i};
  return PartitionOfSet(n, std::move(bs));
}

PartitionOfSet PartitionOfSet::indiscrete(std::uint32_t n) {
  std::vector<std::uint32_t> all(n);
  std::iota(all.begin(), all.end(), 0);
  return PartitionOfSet(n, {all});
}

PartitionOfSet PartitionOfSet::from_orbits(const std::vector<OrbitInfo>& os, std::uint32_t n) {
  std::vector<std::vector<std::uint32_t>> bs;
  bs.reserve(os.size());
  for (const auto& o : os) bs.push_back(o.points);
  return PartitionOfSet(n, std::move(bs));
}

bool PartitionOfSet::refines(const PartitionOfSet& coarser) const {
  if (coarser.n_ != n_) return false;
  for (const auto& b : blocks_) {
    std::uint32_t target = coarser.block_of(b.front());
    for (auto x : b)
      if (coarser.block_of(x) != target) return false;
  }
  return true;
}

bool is_stable(const GAction& a, const PartitionOfSet& part) {
  if (part.ground_size() != a.num_points())
    throw std::invalid_argument("is_stable: partition/action size mismatch");
  for (std::size_t gi = 0; gi < a.group().generator_count(); ++gi)
    for (const auto& b : part.blocks()) {
      std::uint32_t target = part.block_of(a.act_gen(gi, b.front()));
      if (part.blocks()[target].size() != b.size()) return false;
      for (auto x : b)
        if (part.block_of(a.act_gen(gi, x)) != target) return false;
    }
  return true;
}

PartitionOfSet stable_refinement(const GAction& a, const PartitionOfSet& part) {
  if (part.ground_size() != a.num_points())
    throw std::invalid_argument("stable_refinement: partition/action size mismatch");
  const std::uint32_t n = a.num_points();
  const std::uint32_t G = static_cast<std::uint32_t>(a.group().order());

  // H = kernel of the induced action on blocks
  std::vector<bool> in_kernel(G, false);
  std::vector<std::vector<std::uint32_t>> elem_tables(G);
  for (std::uint32_t g = 0; g < G; ++g) {
    elem_tables[g] = a.element_table(g);
    bool ker = true;
    for (std::uint32_t y = 0; y < n && ker; ++y)
      if (part.block_of(elem_tables[g][y]) != part.block_of(y)) ker = false;
    in_kernel[g] = ker;
  }

  // left coset representatives of H, least index first
  std::vector<std::uint32_t> reps;
  std::vector<bool> covered(G, false);
  for (std::uint32_t g = 0; g < G; ++g) {
    if (covered[g]) continue;
    reps.push_back(g);
    for (std::uint32_t h = 0; h < G; ++h)
      if (in_kernel[h]) covered[a.group().mult(g, h)] = true;
  }

  // signature(y) = (block of g_i^{-1} y)_i; fibers are the nonempty
  // intersections g_1 P_1 cap ... cap g_k P_k
  std::map<std::vector<std::uint32_t>, std::vector<std::uint32_t>> fibers;
  std::vector<const std::vector<std::uint32_t>*> inv_tables;
  inv_tables.reserve(reps.size());
  for (auto r : reps) inv_tables.push_back(&elem_tables[a.group().inv(r)]);
  for (std::uint32_t y = 0; y < n; ++y) {
    std::vector<std::uint32_t> sig(reps.size());
    for (std::size_t i = 0; i < reps.size(); ++i) sig[i] = part.block_of((*inv_tables[i])[y]);
    fibers[sig].push_back(y);
  }

  std::vector<std::vector<std::uint32_t>> blocks;
  blocks.reserve(fibers.size());
  for (auto& [sig, pts] : fibers) blocks.push_back(std::move(pts));
  PartitionOfSet out(n, std::move(blocks));

  if (!out.refines(part)) throw std::logic_error("stable_refinement: output does not refine input");
  if (!is_stable(a, out)) throw std::logic_error("stable_refinement: output is not stable");
  return out;
}

GAction translation_action(const GroupPtr& g) {
  std::vector<std::vector<std::uint32_t>> tables;
  std::vector<Encoding> names;
  names.reserve(g->order());
  for (std::uint32_t i = 0; i < g->order(); ++i) names.push_back(g->enc(i));
  for (std::size_t gi = 0; gi < g->generator_count(); ++gi)
    tables.push_back(g->left_gen_table(gi));
  return GAction(g, static_cast<std::uint32_t>(g->order()), std::move(tables), std::move(names));
}

GAction conjugation_action(const GroupPtr& g) {
  std::vector<std::vector<std::uint32_t>> tables;
  std::vector<Encoding> names;
  names.reserve(g->order());
  for (std::uint32_t i = 0; i < g->order(); ++i) names.push_back(g->enc(i));
  for (std::size_t gi = 0; gi < g->generator_count(); ++gi) {
    const auto& left = g->left_gen_table(gi);
    auto right_inv = g->right_mult_table(g->inv(g->generator(gi)));
    std::vector<std::uint32_t> t(g->order());
    for (std::uint32_t x = 0; x < g->order(); ++x) t[x] = left[right_inv[x]];
    tables.push_back(std::move(t));
  }
  return GAction(g, static_cast<std::uint32_t>(g->order()), std::move(tables), std::move(names));
}

GAction trivial_action(const GroupPtr& g, std::uint32_t n) {
  std::vector<std::uint32_t> id(n);
  std::iota(id.begin(), id.end(), 0);
  return GAction(g, n, std::vector<std::vector<std::uint32_t>>(g->generator_count(), id));
}

GAction coset_action(const GroupPtr& g, const std::vector<std::uint32_t>& subgroup_gens) {
  Subgroup h = make_subgroup(g, subgroup_gens, g->name() + "-subgroup");
  const std::uint32_t n = static_cast<std::uint32_t>(g->order());
  // canonical rep of x H = least member index
  std::vector<std::uint32_t> rep(n);
  for (std::uint32_t x = 0; x < n; ++x) {
    std::uint32_t least = x;
    for (std::uint32_t i = 0; i < h.group->order(); ++i)
      least = std::min(least, g->mult(x, h.to_parent[i]));
    rep[x] = least;
  }
  std::vector<std::uint32_t> reps;  // distinct reps ascending = points
  std::vector<std::uint32_t> point_of(n, 0);
  for (std::uint32_t x = 0; x < n; ++x)
    if (rep[x] == x) {
      point_of[x] = static_cast<std::uint32_t>(reps.size());
      reps.push_back(x);
    }
  std::vector<std::vector<std::uint32_t>> tables(g->generator_count());
  for (std::size_t gi = 0; gi < g->generator_count(); ++gi) {
    tables[gi].resize(reps.size());
    for (std::uint32_t pt = 0; pt < reps.size(); ++pt)
      tables[gi][pt] = point_of[rep[g->mult(g->generator(gi), reps[pt])]];
  }
  std::vector<Encoding> names;
  names.reserve(reps.size());
  for (auto r : reps) names.push_back(g->enc(r));
  return GAction(g, static_cast<std::uint32_t>(reps.size()), std::move(tables), std::move(names));
}

GAction natural_permutation_action(const GroupPtr& g) {
  auto* pa = dynamic_cast<const PermAmbient*>(&g->ambient());
  if (!pa) throw std::invalid_argument("natural_permutation_action: not a permutation group");
  std::vector<std::vector<std::uint32_t>> tables(g->generator_count());
  for (std::size_t gi = 0; gi < g->generator_count(); ++gi) {
    const Encoding& e = g->enc(g->generator(gi));
    tables[gi].assign(e.begin(), e.end());
  }
  return GAction(g, pa->degree(), std::move(tables));
}

GAction disjoint_union(const GAction& a, const GAction& b) {
  if (a.group_ptr() != b.group_ptr())
    throw std::invalid_argument("disjoint_union: actions of different groups");
  const std::uint32_t na = a.num_points(), nb = b.num_points();
  std::vector<std::vector<std::uint32_t>> tables(a.group().generator_count());
  for (std::size_t gi = 0; gi < tables.size(); ++gi) {
    tables[gi].resize(na + nb);
    for (std::uint32_t y = 0; y < na; ++y) tables[gi][y] = a.act_gen(gi, y);
    for (std::uint32_t y = 0; y < nb; ++y) tables[gi][na + y] = na + b.act_gen(gi, y);
  }
  return GAction(a.group_ptr(), na + nb, std::move(tables));
}

}  // namespace profp
