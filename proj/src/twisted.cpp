#include "profp/twisted.hpp"

#include <algorithm>
#include <stdexcept>

namespace profp {

Subgroup u_w_subgroup(const GroupPtr& u, const Encoding& w) {
  const Ambient& amb = u->ambient();
  if (!amb.is_valid(w)) throw std::invalid_argument("u_w_subgroup: w is not invertible");
  Encoding winv = amb.inv(w);
  std::vector<std::uint32_t> members;
  for (std::uint32_t x = 0; x < u->order(); ++x) {
    Encoding c = amb.mult(amb.mult(winv, u->enc(x)), w);
    if (u->contains(c)) members.push_back(x);
  }
  return subgroup_from_members(u, std::move(members), u->name() + "_w");
}

GAction twisted_action(const GroupPtr& u, const Encoding& w, const Subgroup& uw) {
  const Ambient& amb = u->ambient();
  Encoding winv = amb.inv(w);
  const std::uint32_t n = static_cast<std::uint32_t>(u->order());
  std::vector<std::vector<std::uint32_t>> tables(uw.group->generator_count());
  for (std::size_t gi = 0; gi < uw.group->generator_count(); ++gi) {
    std::uint32_t ug = uw.to_parent[uw.group->generator(gi)];
    auto a = u->index_of(amb.mult(amb.mult(winv, u->enc(ug)), w));
    if (!a) throw std::invalid_argument("twisted_action: w does not normalize into U");
    auto left = u->left_mult_table(*a);
    auto right_inv = u->right_mult_table(u->inv(ug));
    std::vector<std::uint32_t> t(n);
    for (std::uint32_t x = 0; x < n; ++x) t[x] = left[right_inv[x]];
    tables[gi] = std::move(t);
  }
  std::vector<Encoding> names;
  names.reserve(n);
  for (std::uint32_t x = 0; x < n; ++x) names.push_back(u->enc(x));
  return GAction(uw.group, n, std::move(tables), std::move(names));
}

GAction twisted_action(const GroupPtr& u, const Encoding& w) {
  return twisted_action(u, w, u_w_subgroup(u, w));
}

TwistedFixedSpace twisted_fixed_space(const GroupPtr& u, const Encoding& w, std::uint32_t p,
                                      std::size_t dense_cap) {
  checked_prime(p);
  auto uw = u_w_subgroup(u, w);
  auto act = twisted_action(u, w, uw);
  auto os = orbits(act);
  const std::uint32_t n = static_cast<std::uint32_t>(u->order());

  TwistedFixedSpace out;
  out.orbit_count = os.size();
  RowSpace rs(p, n);
  for (const auto& s : orbit_sums(os, p)) rs.insert(s.dense(n));
  out.basis = rs.basis_vectors();
  out.dim = out.basis.size();

  if (n <= dense_cap) {
    std::vector<std::vector<std::uint32_t>> perms;
    for (std::size_t gi = 0; gi < act.group().generator_count(); ++gi)
      perms.push_back(act.gen_table(gi));
    auto direct = fixed_space_of_perms(perms, n, p, dense_cap * dense_cap);
    out.cross_checked = true;
    out.cross_check_ok = same_span(p, n, out.basis, direct) && direct.size() == out.dim;
  }
  return out;
}

CentralizerCheckReport orbit_centralizer_check(const GroupPtr& u, const Encoding& w,
                                               std::size_t pair_cap) {
  const Ambient& amb = u->ambient();
  auto uw = u_w_subgroup(u, w);
  auto act = twisted_action(u, w, uw);
  auto os = orbits(act);
  auto orb_of = orbit_of_point(os, static_cast<std::uint32_t>(u->order()));

  const std::uint64_t pairs = static_cast<std::uint64_t>(u->order()) * uw.group->order();
  if (pairs > pair_cap)
    throw CapExceeded("orbit_centralizer_check: " + std::to_string(pairs) + " pairs exceeds cap");

  const std::size_t es = amb.enc_size();
  // contiguous copies of the U_w elements for the inner scan
  std::vector<std::int32_t> uw_raw(uw.group->order() * es);
  for (std::uint32_t i = 0; i < uw.group->order(); ++i)
    std::copy(uw.group->enc(i).begin(), uw.group->enc(i).end(), uw_raw.begin() + i * es);

  CentralizerCheckReport rep;
  std::vector<std::int32_t> wx(es), lhs(es), rhs(es);
  for (std::uint32_t x = 0; x < u->order(); ++x) {
    amb.mult_raw(w.data(), u->enc(x).data(), wx.data());
    std::uint64_t cent = 0;
    for (std::uint32_t i = 0; i < uw.group->order(); ++i) {
      const std::int32_t* uu = uw_raw.data() + i * es;
      amb.mult_raw(uu, wx.data(), lhs.data());
      amb.mult_raw(wx.data(), uu, rhs.data());
      if (lhs == rhs) ++cent;
    }
    std::uint64_t orbit_size = os[orb_of[x]].points.size();
    std::uint64_t index = uw.group->order() / cent;
    ++rep.points_checked;
    if (orbit_size != index || uw.group->order() % cent != 0) ++rep.failures;
  }
  rep.pass = rep.failures == 0;
  return rep;
}

bool level_meets_center(const GroupPtr& u, const Encoding& w) {
  auto* ma = dynamic_cast<const MatrixAmbient*>(&u->ambient());
  if (!ma) return true;  // abelian ambients: everything is central
  Encoding winv = u->ambient().inv(w);
  for (std::uint32_t lam = 1; lam < ma->modulus(); ++lam) {
    Encoding scalar(ma->enc_size(), 0);
    for (std::uint32_t i = 0; i < ma->dim(); ++i)
      scalar[i * ma->dim() + i] = static_cast<std::int32_t>(lam);
    if (!ma->is_valid(scalar)) continue;
    if (u->contains(u->ambient().mult(winv, scalar))) return true;
  }
  return false;
}

StabilizationReport twisted_stabilization(const GroupTower& t, const Conjugator& c,
                                          int target_label, int max_label, std::uint32_t p) {
  checked_prime(p);
  validate_conjugator(t, c);
  const std::size_t m = t.index_of_label(target_label);
  const std::size_t N = t.index_of_label(max_label);
  if (m >= N) throw std::invalid_argument("twisted_stabilization: need target < max level");

  StabilizationReport rep;
  rep.tower = t.name;
  rep.conjugator = c.description;
  rep.p = p;
  rep.target_label = target_label;

  const std::uint32_t base_points = static_cast<std::uint32_t>(t.levels[m]->order());
  std::vector<RowSpace> images;

  for (std::size_t n = m; n <= N; ++n) {
    auto uw = u_w_subgroup(t.levels[n], c.w[n]);
    auto act = twisted_action(t.levels[n], c.w[n], uw);
    auto os = orbits(act);
    rep.level_labels.push_back(t.label(n));
    rep.fixed_dims.push_back(os.size());
    rep.meets_center.push_back(level_meets_center(t.levels[n], c.w[n]));

    // composed quotient map level n -> level m
    std::vector<std::uint32_t> down(t.levels[n]->order());
    for (std::uint32_t x = 0; x < down.size(); ++x) down[x] = x;
    for (std::size_t k = n; k > m; --k)
      for (auto& x : down) x = t.quotient_maps[k - 1][x];

    RowSpace img(p, base_points);
    for (const auto& o : os) {
      FpVec v(p, base_points);
      for (auto y : o.points) v.v[down[y]] = modp::add(v.v[down[y]], 1, p);
      img.insert(v);
    }
    rep.image_dims.push_back(img.dim());
    images.push_back(std::move(img));
  }

  rep.chain_descending = true;
  for (std::size_t i = 0; i + 1 < images.size(); ++i)
    for (const auto& b : images[i + 1].basis()) {
      FpVec vb(p, b.size());
      vb.v = b;
      if (!images[i].contains(vb)) rep.chain_descending = false;
    }

  // first level from which the image stays constant through the horizon
  std::size_t stab = images.size();
  for (std::size_t i = images.size(); i-- > 1;) {
    if (images[i] == images[i - 1])
      stab = i - 1;
    else
      break;
  }
  if (stab + 1 < images.size()) rep.stabilized_at = rep.level_labels[stab];
  rep.conclusive = rep.stabilized_at.has_value();
  rep.stable_dim = images.back().dim();
  rep.stable_image_basis = images.back().basis_vectors();
  return rep;
}

}  // namespace profp
