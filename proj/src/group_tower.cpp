#include "profp/group_tower.hpp"

#include <algorithm>
#include <stdexcept>

#include "profp/fp.hpp"

namespace profp {

std::size_t GroupTower::index_of_label(int n) const {
  if (n < 1 || static_cast<std::size_t>(n) > levels.size())
    throw std::invalid_argument("GroupTower: no level with label " + std::to_string(n));
  return static_cast<std::size_t>(n) - 1;
}

GroupTower make_group_tower(std::uint32_t p, std::string name, std::vector<GroupPtr> levels,
                            std::vector<std::function<Encoding(const Encoding&)>> ambient_reduce) {
  checked_prime(p);
  if (levels.empty()) throw std::invalid_argument("GroupTower: no levels");
  if (ambient_reduce.size() + 1 != levels.size())
    throw std::invalid_argument("GroupTower: reduction map count mismatch");

  GroupTower t;
  t.p = p;
  t.name = std::move(name);
  t.levels = std::move(levels);
  t.ambient_reduce = std::move(ambient_reduce);

  for (const auto& u : t.levels)
    if (!u->is_p_group(p))
      throw std::invalid_argument("GroupTower: level is not a p-group for p=" + std::to_string(p));

  for (std::size_t i = 0; i + 1 < t.levels.size(); ++i) {
    const GroupPtr& up = t.levels[i + 1];
    const GroupPtr& lo = t.levels[i];
    std::vector<std::uint32_t> qm(up->order());
    std::vector<bool> hit(lo->order(), false);
    for (std::uint32_t x = 0; x < up->order(); ++x) {
      auto idx = lo->index_of(t.ambient_reduce[i](up->enc(x)));
      if (!idx) throw std::invalid_argument("GroupTower: reduction leaves the lower level");
      qm[x] = *idx;
      hit[*idx] = true;
    }
    if (!std::all_of(hit.begin(), hit.end(), [](bool b) { return b; }))
      throw std::invalid_argument("GroupTower: quotient map not surjective");
    for (std::uint32_t x = 0; x < up->order(); ++x)
      for (std::size_t gi = 0; gi < up->generator_count(); ++gi) {
        std::uint32_t g = up->generator(gi);
        if (qm[up->mult(x, g)] != lo->mult(qm[x], qm[g]))
          throw std::invalid_argument("GroupTower: quotient map is not a homomorphism");
      }
    t.quotient_maps.push_back(std::move(qm));
  }
  return t;
}

namespace {

std::uint64_t ipow(std::uint64_t b, std::uint32_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

std::function<Encoding(const Encoding&)> mod_reduce(std::uint32_t modulus) {
  return [modulus](const Encoding& e) {
    Encoding out(e.size());
    for (std::size_t i = 0; i < e.size(); ++i)
      out[i] = static_cast<std::int32_t>(static_cast<std::uint32_t>(e[i]) % modulus);
    return out;
  };
}

}  // namespace

GroupTower builtin_tower(const std::string& name, std::uint32_t p, std::uint32_t depth,
                         std::size_t cap) {
  checked_prime(p);
  if (depth < 1) throw std::invalid_argument("builtin_tower: depth must be >= 1");
  std::vector<GroupPtr> levels;
  std::vector<std::function<Encoding(const Encoding&)>> reduce;
  for (std::uint32_t n = 1; n <= depth; ++n) {
    if (name == "heisenberg3")
      levels.push_back(heisenberg_level(p, n, cap));
    else if (name == "unitriangular4")
      levels.push_back(unitriangular4_level(p, n, cap));
    else if (name == "cyclic")
      levels.push_back(cyclic_level(p, n, cap));
    else if (name == "units")
      levels.push_back(units_level(p, n, cap));
    else
      throw std::invalid_argument("builtin_tower: unknown name '" + name + "'");
    if (n > 1) reduce.push_back(mod_reduce(static_cast<std::uint32_t>(ipow(p, n - 1))));
  }
  return make_group_tower(p, name + "(p=" + std::to_string(p) + ")", std::move(levels),
                          std::move(reduce));
}

Conjugator identity_conjugator(const GroupTower& t) {
  Conjugator c;
  c.description = "identity";
  for (const auto& u : t.levels) c.w.push_back(u->ambient().identity());
  validate_conjugator(t, c);
  return c;
}

Conjugator diag_conjugator(const GroupTower& t, const std::vector<std::int64_t>& entries) {
  Conjugator c;
  c.description = "diag(";
  for (std::size_t i = 0; i < entries.size(); ++i)
    c.description += (i ? "," : "") + std::to_string(entries[i]);
  c.description += ")";
  for (const auto& u : t.levels) {
    auto* ma = dynamic_cast<const MatrixAmbient*>(&u->ambient());
    if (!ma) throw std::invalid_argument("diag_conjugator: tower ambient is not a matrix group");
    if (entries.size() != ma->dim())
      throw std::invalid_argument("diag_conjugator: wrong number of diagonal entries");
    Encoding e(ma->enc_size(), 0);
    for (std::uint32_t i = 0; i < ma->dim(); ++i) {
      std::int64_t v = entries[i] % ma->modulus();
      if (v < 0) v += ma->modulus();
      e[i * ma->dim() + i] = static_cast<std::int32_t>(v);
    }
    if (!ma->is_valid(e))
      throw std::invalid_argument("diag_conjugator: diagonal is not invertible at level of " +
                                  ma->describe());
    c.w.push_back(std::move(e));
  }
  validate_conjugator(t, c);
  return c;
}

Conjugator conjugator_from_top(const GroupTower& t, Encoding top) {
  Conjugator c;
  c.description = "element";
  std::vector<Encoding> ws(t.depth());
  ws.back() = std::move(top);
  for (std::size_t i = t.depth() - 1; i > 0; --i) ws[i - 1] = t.ambient_reduce[i - 1](ws[i]);
  c.w = std::move(ws);
  validate_conjugator(t, c);
  return c;
}

void validate_conjugator(const GroupTower& t, const Conjugator& c) {
  if (c.w.size() != t.depth()) throw std::invalid_argument("Conjugator: level count mismatch");
  for (std::size_t i = 0; i < t.depth(); ++i)
    if (!t.levels[i]->ambient().is_valid(c.w[i]))
      throw std::invalid_argument("Conjugator: invalid ambient element at level " +
                                  std::to_string(t.label(i)));
  for (std::size_t i = 0; i + 1 < t.depth(); ++i)
    if (t.ambient_reduce[i](c.w[i + 1]) != c.w[i])
      throw std::invalid_argument("Conjugator: levels are not reduction-compatible");
}

TowerOfActions conjugation_tower(const GroupTower& t) {
  std::vector<GAction> levels;
  std::vector<int> labels;
  for (std::size_t i = 0; i < t.depth(); ++i) {
    levels.push_back(conjugation_action(t.levels[i]));
    labels.push_back(t.label(i));
  }
  return TowerOfActions(std::move(levels), t.quotient_maps, t.quotient_maps, std::move(labels),
                        t.name + "-conjugation");
}

}  // namespace profp
