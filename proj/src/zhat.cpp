#include "profp/zhat.hpp"

#include <algorithm>
#include <stdexcept>

#include "profp/linear.hpp"
#include "profp/perm_module.hpp"

namespace profp {

ZSpecPtr qpx_spec(std::uint32_t p, std::uint32_t depth) {
  auto s = std::make_shared<ZSpec>();
  s->p = checked_prime(p);
  s->free_rank = 1;
  s->z0 = builtin_tower("units", p, depth);
  s->name = "qpx(p=" + std::to_string(p) + ")";
  return s;
}

ZSpecPtr finite_a_spec(std::uint32_t p, std::vector<std::uint32_t> a_orders, std::uint32_t depth) {
  auto s = std::make_shared<ZSpec>();
  s->p = checked_prime(p);
  s->cyclic_orders = std::move(a_orders);
  s->z0 = builtin_tower("cyclic", p, depth);
  std::string a = "A=";
  for (std::size_t i = 0; i < s->cyclic_orders.size(); ++i)
    a += (i ? "x" : "") + ("Z/" + std::to_string(s->cyclic_orders[i]));
  s->name = a + ",Z0=cyclic(p=" + std::to_string(p) + ")";
  return s;
}

ZhatElement::ZhatElement(ZSpecPtr spec, int level) : spec_(std::move(spec)), level_(level) {
  spec_->z0.index_of_label(level_);  // validates the level
}

ZhatElement ZhatElement::one(ZSpecPtr spec, int level) {
  ZhatElement e(std::move(spec), level);
  AKey a(e.spec_->free_rank + e.spec_->cyclic_orders.size(), 0);
  e.add_term(std::move(a), GroupModel::kIdentity, 1);
  return e;
}

ZhatElement ZhatElement::term(ZSpecPtr spec, int level, AKey a, std::uint32_t z,
                              std::uint32_t coeff) {
  ZhatElement e(std::move(spec), level);
  e.add_term(std::move(a), z, coeff);
  return e;
}

AKey ZhatElement::normalize_akey(AKey a) const {
  if (a.size() != spec_->free_rank + spec_->cyclic_orders.size())
    throw std::invalid_argument("ZhatElement: A-key arity mismatch");
  for (std::size_t i = 0; i < spec_->cyclic_orders.size(); ++i) {
    std::int64_t c = spec_->cyclic_orders[i];
    std::int64_t& v = a[spec_->free_rank + i];
    v %= c;
    if (v < 0) v += c;
  }
  return a;
}

void ZhatElement::add_term(AKey a, std::uint32_t z, std::uint32_t val) {
  a = normalize_akey(std::move(a));
  const auto& grp = spec_->z0.levels[spec_->z0.index_of_label(level_)];
  if (z >= grp->order()) throw std::invalid_argument("ZhatElement: level element out of range");
  val %= spec_->p;
  auto key = std::make_pair(std::move(a), z);
  auto it = coeffs_.find(key);
  std::uint32_t cur = it == coeffs_.end() ? 0 : it->second;
  std::uint32_t s = modp::add(cur, val, spec_->p);
  if (s == 0) {
    if (it != coeffs_.end()) coeffs_.erase(it);
  } else {
    coeffs_[key] = s;
  }
}

void ZhatElement::check_compatible(const ZhatElement& o) const {
  if (spec_ != o.spec_) throw std::invalid_argument("ZhatElement: mismatched specs");
  if (level_ != o.level_) throw std::invalid_argument("ZhatElement: mismatched levels");
}

ZhatElement operator+(const ZhatElement& x, const ZhatElement& y) {
  x.check_compatible(y);
  ZhatElement r = x;
  for (const auto& [k, v] : y.coeffs_) r.add_term(k.first, k.second, v);
  return r;
}

ZhatElement operator-(const ZhatElement& x, const ZhatElement& y) {
  x.check_compatible(y);
  ZhatElement r = x;
  for (const auto& [k, v] : y.coeffs_) r.add_term(k.first, k.second, modp::neg(v, x.spec_->p));
  return r;
}

ZhatElement operator*(const ZhatElement& x, const ZhatElement& y) {
  x.check_compatible(y);
  const ZSpec& s = *x.spec_;
  const auto& grp = s.z0.levels[s.z0.index_of_label(x.level_)];
  ZhatElement r(x.spec_, x.level_);
  for (const auto& [ka, va] : x.coeffs_)
    for (const auto& [kb, vb] : y.coeffs_) {
      AKey a(ka.first.size());
      for (std::size_t i = 0; i < a.size(); ++i) a[i] = ka.first[i] + kb.first[i];
      r.add_term(std::move(a), grp->mult(ka.second, kb.second), modp::mul(va, vb, s.p));
    }
  return r;
}

ZhatElement ZhatElement::pow(std::uint64_t e) const {
  ZhatElement r = one(spec_, level_);
  ZhatElement b = *this;
  while (e) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

std::string ZhatElement::str() const {
  if (coeffs_.empty()) return "0";
  const auto& grp = spec_->z0.levels[spec_->z0.index_of_label(level_)];
  std::string out;
  for (const auto& [k, v] : coeffs_) {
    if (!out.empty()) out += " + ";
    if (v != 1) out += std::to_string(v) + "*";
    bool printed = false;
    for (std::size_t i = 0; i < spec_->free_rank; ++i) {
      if (k.first[i] == 0) continue;
      out += (spec_->free_rank == 1 ? std::string("pi") : "pi" + std::to_string(i));
      if (k.first[i] != 1) out += "^" + std::to_string(k.first[i]);
      printed = true;
    }
    for (std::size_t i = 0; i < spec_->cyclic_orders.size(); ++i) {
      if (k.first[spec_->free_rank + i] == 0) continue;
      out += "a" + std::to_string(i) + "^" + std::to_string(k.first[spec_->free_rank + i]);
      printed = true;
    }
    if (k.second != GroupModel::kIdentity) {
      out += "[";
      const Encoding& e = grp->enc(k.second);
      for (std::size_t i = 0; i < e.size(); ++i) out += (i ? "," : "") + std::to_string(e[i]);
      out += "]";
      printed = true;
    }
    if (!printed && v == 1) out += "1";
    if (!printed && v != 1) out.pop_back();  // drop the trailing '*'
  }
  return out;
}

ZhatElement zhat_reduce(const ZhatElement& x, int to_level) {
  const ZSpec& s = x.spec();
  std::size_t from = s.z0.index_of_label(x.level());
  std::size_t to = s.z0.index_of_label(to_level);
  if (to > from) throw std::invalid_argument("zhat_reduce: target level above source");
  ZhatElement r(x.spec_ptr(), to_level);
  for (const auto& [k, v] : x.coeffs()) {
    std::uint32_t z = k.second;
    for (std::size_t i = from; i > to; --i) z = s.z0.quotient_maps[i - 1][z];
    r.add_term(k.first, z, v);
  }
  return r;
}

namespace {

/// The nested form (F_p[A])[Z_level] for finite A: coefficients in the group
/// algebra of A, one per level-group element. Multiplication convolves over
/// the level group with coefficient products in F_p[A]. An independent code
/// path for the basis-bijection comparison.
struct NestedElem {
  std::uint32_t p;
  std::vector<std::uint32_t> a_orders;
  const GroupModel* grp;
  std::map<std::uint32_t, AlgebraElem> coeffs;

  void add(std::uint32_t z, const AlgebraElem& c) {
    auto it = coeffs.find(z);
    if (it == coeffs.end()) {
      if (!c.is_zero()) coeffs.emplace(z, c);
    } else {
      AlgebraElem s = it->second + c;
      if (s.is_zero())
        coeffs.erase(it);
      else
        it->second = s;
    }
  }
  friend NestedElem operator*(const NestedElem& x, const NestedElem& y) {
    NestedElem r{x.p, x.a_orders, x.grp, {}};
    for (const auto& [z1, c1] : x.coeffs)
      for (const auto& [z2, c2] : y.coeffs) r.add(x.grp->mult(z1, z2), c1 * c2);
    return r;
  }
  friend bool operator==(const NestedElem& x, const NestedElem& y) {
    return x.coeffs == y.coeffs;
  }
};

}  // namespace

RemarkIsoReport remark_iso_check(const ZSpecPtr& spec, int level, std::int64_t window,
                                 std::uint64_t random_products, std::uint64_t seed) {
  const ZSpec& s = *spec;
  const auto& grp = s.z0.levels[s.z0.index_of_label(level)];
  RemarkIsoReport rep;
  rep.windowed = !s.a_is_finite();

  // enumerate the A-keys under comparison
  std::vector<AKey> akeys;
  {
    AKey cur(s.free_rank + s.cyclic_orders.size(), 0);
    std::vector<std::int64_t> lo(cur.size()), hi(cur.size());
    for (std::size_t i = 0; i < s.free_rank; ++i) {
      lo[i] = -window;
      hi[i] = window;
    }
    for (std::size_t i = 0; i < s.cyclic_orders.size(); ++i) {
      lo[s.free_rank + i] = 0;
      hi[s.free_rank + i] = s.cyclic_orders[i] - 1;
    }
    std::size_t total = 1;
    for (std::size_t i = 0; i < cur.size(); ++i)
      total *= static_cast<std::size_t>(hi[i] - lo[i] + 1);
    for (std::size_t t = 0; t < total; ++t) {
      std::size_t rem = t;
      for (std::size_t i = 0; i < cur.size(); ++i) {
        std::size_t span = static_cast<std::size_t>(hi[i] - lo[i] + 1);
        cur[i] = lo[i] + static_cast<std::int64_t>(rem % span);
        rem /= span;
      }
      akeys.push_back(cur);
    }
    if (akeys.empty()) akeys.push_back(cur);
  }

  // A-group addition for the nested route: pack into AlgebraElem tuples. For
  // the free part we translate exponents into the window's mixed-radix box;
  // products of window elements stay within the doubled box.
  auto a_algebra_orders = [&]() {
    std::vector<std::uint32_t> orders;
    for (std::size_t i = 0; i < s.free_rank; ++i)
      orders.push_back(static_cast<std::uint32_t>(4 * window + 1));
    for (auto c : s.cyclic_orders) orders.push_back(c);
    return orders;
  }();
  auto akey_to_tuple = [&](const AKey& a) {
    std::vector<std::uint32_t> t(a.size());
    for (std::size_t i = 0; i < s.free_rank; ++i)
      t[i] = static_cast<std::uint32_t>(a[i] + 2 * window);
    for (std::size_t i = 0; i < s.cyclic_orders.size(); ++i)
      t[s.free_rank + i] = static_cast<std::uint32_t>(a[s.free_rank + i]);
    return t;
  };
  // the free exponents of a product of two window keys lie in [-2w, 2w], and
  // the shifted sum of two shifted keys lands at (a+b) + 4w: recenter by
  // comparing against the shifted LHS below. To keep the nested route
  // honestly independent we compare term sets through an explicit bijection:
  //   LHS term ((a), z) with coefficient c  <->  nested z-coefficient having
  //   c at tuple(a).
  auto lhs_matches_nested = [&](const ZhatElement& lhs, const NestedElem& rhs,
                                std::int64_t shift) {
    std::map<std::uint32_t, std::map<std::vector<std::uint32_t>, std::uint32_t>> grouped;
    for (const auto& [k, v] : lhs.coeffs()) {
      std::vector<std::uint32_t> t(k.first.size());
      for (std::size_t i = 0; i < s.free_rank; ++i) {
        std::int64_t shifted = k.first[i] + shift;
        if (shifted < 0 || shifted >= static_cast<std::int64_t>(a_algebra_orders[i])) return false;
        t[i] = static_cast<std::uint32_t>(shifted);
      }
      for (std::size_t i = 0; i < s.cyclic_orders.size(); ++i)
        t[s.free_rank + i] = static_cast<std::uint32_t>(k.first[s.free_rank + i]);
      grouped[k.second][t] = v;
    }
    std::map<std::uint32_t, std::map<std::vector<std::uint32_t>, std::uint32_t>> nested;
    for (const auto& [z, c] : rhs.coeffs)
      for (const auto& [idx, v] : c.coeffs()) {
        AlgebraElem probe(s.p, a_algebra_orders);
        nested[z][probe.unpack(idx)] = v;
      }
    return grouped == nested;
  };

  auto nested_basis = [&](const AKey& a, std::uint32_t z, std::int64_t shift) {
    NestedElem e{s.p, a_algebra_orders, grp.get(), {}};
    AKey sh = a;
    for (std::size_t i = 0; i < s.free_rank; ++i) sh[i] += shift;
    std::vector<std::uint32_t> t(sh.size());
    for (std::size_t i = 0; i < sh.size(); ++i) t[i] = static_cast<std::uint32_t>(sh[i]);
    e.add(z, AlgebraElem::basis(s.p, a_algebra_orders, akey_to_tuple(a), 1));
    return e;
  };

  bool ok = true;
  // full multiplication table over the chosen A-keys and the level group
  for (const auto& a1 : akeys)
    for (const auto& a2 : akeys)
      for (std::uint32_t z1 = 0; z1 < grp->order(); ++z1)
        for (std::uint32_t z2 = 0; z2 < grp->order(); ++z2) {
          auto lhs = ZhatElement::term(spec, level, a1, z1) * ZhatElement::term(spec, level, a2, z2);
          auto rhs = nested_basis(a1, z1, 0) * nested_basis(a2, z2, 0);
          // two shifted window keys multiply to shift 4w in the nested route
          if (!lhs_matches_nested(lhs, rhs, 4 * window * (s.free_rank ? 1 : 0))) ok = false;
          ++rep.basis_products;
        }

  // random in-window elements
  Rng rng(seed);
  auto random_elem = [&]() {
    ZhatElement e(spec, level);
    std::size_t terms = 1 + rng.below(4);
    for (std::size_t i = 0; i < terms; ++i) {
      const AKey& a = akeys[rng.below(akeys.size())];
      e.add_term(a, static_cast<std::uint32_t>(rng.below(grp->order())),
                 1 + static_cast<std::uint32_t>(rng.below(s.p - 1)));
    }
    return e;
  };
  for (std::uint64_t t = 0; t < random_products; ++t) {
    auto x = random_elem();
    auto y = random_elem();
    NestedElem nx{s.p, a_algebra_orders, grp.get(), {}}, ny = nx;
    for (const auto& [k, v] : x.coeffs())
      nx.add(k.second, AlgebraElem::basis(s.p, a_algebra_orders, akey_to_tuple(k.first), v));
    for (const auto& [k, v] : y.coeffs())
      ny.add(k.second, AlgebraElem::basis(s.p, a_algebra_orders, akey_to_tuple(k.first), v));
    if (!lhs_matches_nested(x * y, nx * ny, 4 * window * (s.free_rank ? 1 : 0))) ok = false;
    ++rep.random_products;
  }
  rep.pass = ok;
  return rep;
}

FaithfulnessReport faithfulness_check(const GroupPtr& zprime, std::uint32_t p, std::size_t cap) {
  checked_prime(p);
  FaithfulnessReport rep;
  const std::uint32_t n = static_cast<std::uint32_t>(zprime->order());
  rep.group_order = n;

  // annihilator of the identity basis vector under the regular action:
  // rows index basis points y, unknowns x_g, equation sum_g x_g [g*id = y] = 0
  std::vector<SparseMatrixFp::Entry> entries;
  for (std::uint32_t g = 0; g < n; ++g) {
    std::uint32_t y = zprime->mult(g, GroupModel::kIdentity);
    entries.push_back({y, g, 1});
  }
  rep.annihilator_dim = nullspace(SparseMatrixFp(p, n, n, std::move(entries)), cap).size();

  // endomorphisms of the regular module: maps commuting with all left
  // translations
  std::vector<std::vector<std::uint32_t>> perms;
  for (std::size_t gi = 0; gi < zprime->generator_count(); ++gi)
    perms.push_back(zprime->left_gen_table(gi));
  rep.endo_dim = commutant_dim_of_perms(perms, n, p, cap);

  rep.pass = rep.annihilator_dim == 0 && rep.endo_dim == n;
  return rep;
}

}  // namespace profp
