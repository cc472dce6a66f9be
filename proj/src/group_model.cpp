#include "profp/group_model.hpp"

#include "profp/fp.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace profp {

std::optional<std::uint32_t> GroupModel::index_of(const Encoding& e) const {
  auto it = index_.find(e);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::uint32_t GroupModel::mult(std::uint32_t i, std::uint32_t j) const {
  auto k = index_of(ambient_->mult(elements_[i], elements_[j]));
  if (!k) throw std::logic_error("GroupModel::mult: product escaped the group");
  return *k;
}

std::shared_ptr<const GroupModel> GroupModel::enumerate(AmbientPtr ambient,
                                                        std::vector<Encoding> generators,
                                                        std::size_t cap, std::string name) {
  for (const auto& g : generators)
    if (!ambient->is_valid(g))
      throw std::invalid_argument("GroupModel: generator is not a valid ambient element");

  auto m = std::shared_ptr<GroupModel>(new GroupModel());
  m->ambient_ = std::move(ambient);
  m->name_ = std::move(name);

  m->elements_.push_back(m->ambient_->identity());
  m->index_[m->elements_[0]] = 0;
  m->words_.push_back({});

  // drop duplicate / identity generators but keep the caller's order
  std::vector<Encoding> gens;
  for (auto& g : generators) {
    if (g == m->elements_[0]) continue;
    if (std::find(gens.begin(), gens.end(), g) == gens.end()) gens.push_back(std::move(g));
  }

  std::vector<std::uint32_t> frontier{0};
  while (!frontier.empty()) {
    // new encodings of this layer -> (parent index, generator position), first finder wins
    std::map<Encoding, std::pair<std::uint32_t, std::uint32_t>> layer;
    for (std::uint32_t x : frontier)
      for (std::size_t gi = 0; gi < gens.size(); ++gi) {
        Encoding e = m->ambient_->mult(m->elements_[x], gens[gi]);
        if (m->index_.count(e) || layer.count(e)) continue;
        layer.emplace(std::move(e), std::make_pair(x, static_cast<std::uint32_t>(gi)));
      }
    frontier.clear();
    for (auto& [e, src] : layer) {  // std::map iterates in lex order
      if (m->elements_.size() >= cap)
        throw CapExceeded("GroupModel: closure exceeds cap " + std::to_string(cap));
      std::uint32_t idx = static_cast<std::uint32_t>(m->elements_.size());
      m->elements_.push_back(e);
      m->index_[e] = idx;
      auto w = m->words_[src.first];
      w.push_back(src.second);
      m->words_.push_back(std::move(w));
      frontier.push_back(idx);
    }
  }

  const std::size_t n = m->elements_.size();
  m->gen_idx_.reserve(gens.size());
  for (const auto& g : gens) m->gen_idx_.push_back(m->index_.at(g));

  m->left_.assign(gens.size(), std::vector<std::uint32_t>(n));
  m->right_.assign(gens.size(), std::vector<std::uint32_t>(n));
  for (std::size_t gi = 0; gi < gens.size(); ++gi)
    for (std::uint32_t x = 0; x < n; ++x) {
      m->left_[gi][x] = m->index_.at(m->ambient_->mult(gens[gi], m->elements_[x]));
      m->right_[gi][x] = m->index_.at(m->ambient_->mult(m->elements_[x], gens[gi]));
    }

  m->inverse_.resize(n);
  for (std::uint32_t x = 0; x < n; ++x) {
    auto it = m->index_.find(m->ambient_->inv(m->elements_[x]));
    if (it == m->index_.end()) throw std::logic_error("GroupModel: inverse escaped the group");
    m->inverse_[x] = it->second;
  }
  return m;
}

std::vector<std::uint32_t> GroupModel::left_mult_table(std::uint32_t g) const {
  std::vector<std::uint32_t> t(order());
  std::iota(t.begin(), t.end(), 0);
  const auto& w = words_[g];
  for (std::size_t i = w.size(); i-- > 0;) {
    const auto& gt = left_[w[i]];
    for (auto& x : t) x = gt[x];
  }
  return t;
}

std::vector<std::uint32_t> GroupModel::right_mult_table(std::uint32_t g) const {
  std::vector<std::uint32_t> t(order());
  std::iota(t.begin(), t.end(), 0);
  for (std::uint32_t wi : words_[g]) {
    const auto& gt = right_[wi];
    for (auto& x : t) x = gt[x];
  }
  return t;
}

bool GroupModel::is_abelian() const {
  for (std::size_t a = 0; a < gen_idx_.size(); ++a)
    for (std::size_t b = a + 1; b < gen_idx_.size(); ++b)
      if (mult(gen_idx_[a], gen_idx_[b]) != mult(gen_idx_[b], gen_idx_[a])) return false;
  return true;
}

bool GroupModel::is_p_group(std::uint32_t p) const {
  std::size_t n = order();
  while (n % p == 0) n /= p;
  return n == 1;
}

// -------------------------------------------------------------- subgroups

Subgroup subgroup_from_members(const GroupPtr& parent, std::vector<std::uint32_t> members,
                               std::string name) {
  std::sort(members.begin(), members.end());

  // greedy small generating set, scanning members in index order
  std::vector<bool> closed(parent->order(), false);
  closed[GroupModel::kIdentity] = true;
  std::size_t closed_count = 1;
  std::vector<std::uint32_t> gens;
  auto close_with = [&](std::uint32_t g) {
    std::vector<std::uint32_t> stack{g};
    if (!closed[g]) {
      closed[g] = true;
      ++closed_count;
    }
    while (!stack.empty()) {
      std::uint32_t x = stack.back();
      stack.pop_back();
      for (std::uint32_t h : gens) {
        std::uint32_t y = parent->mult(x, h);
        if (!closed[y]) {
          closed[y] = true;
          ++closed_count;
          stack.push_back(y);
        }
      }
    }
  };
  for (std::uint32_t mi : members) {
    if (closed[mi]) continue;
    gens.push_back(mi);
    // reclose from scratch against the enlarged generator set
    std::fill(closed.begin(), closed.end(), false);
    closed[GroupModel::kIdentity] = true;
    closed_count = 1;
    for (std::uint32_t g : gens) close_with(g);
    if (closed_count == members.size()) break;
  }

  std::vector<Encoding> gen_encs;
  gen_encs.reserve(gens.size());
  for (auto g : gens) gen_encs.push_back(parent->enc(g));
  Subgroup s;
  s.group = GroupModel::enumerate(parent->ambient_ptr(), std::move(gen_encs), parent->order() + 1,
                                  std::move(name));
  if (s.group->order() != members.size())
    throw std::invalid_argument("subgroup_from_members: member list is not closed");
  s.to_parent.resize(s.group->order());
  s.parent_to_sub.assign(parent->order(), Subgroup::npos);
  for (std::uint32_t i = 0; i < s.group->order(); ++i) {
    auto pi = parent->index_of(s.group->enc(i));
    if (!pi) throw std::logic_error("subgroup_from_members: element missing in parent");
    s.to_parent[i] = *pi;
    s.parent_to_sub[*pi] = i;
  }
  return s;
}

Subgroup make_subgroup(const GroupPtr& parent, const std::vector<std::uint32_t>& parent_indices,
                       std::string name) {
  // close the given indices inside the parent
  std::vector<bool> in(parent->order(), false);
  std::vector<std::uint32_t> members{GroupModel::kIdentity};
  in[GroupModel::kIdentity] = true;
  std::vector<std::uint32_t> stack = members;
  auto add = [&](std::uint32_t x) {
    if (!in[x]) {
      in[x] = true;
      members.push_back(x);
      stack.push_back(x);
    }
  };
  for (auto g : parent_indices) add(g);
  while (!stack.empty()) {
    std::uint32_t x = stack.back();
    stack.pop_back();
    for (auto g : parent_indices) {
      add(parent->mult(x, g));
      add(parent->mult(x, parent->inv(g)));
    }
  }
  return subgroup_from_members(parent, std::move(members), std::move(name));
}

// --------------------------------------------------------------- builders

namespace {

std::uint64_t ipow(std::uint64_t b, std::uint32_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

Encoding unitriangular_gen(std::uint32_t dim, std::uint32_t i, std::uint32_t j) {
  Encoding e(static_cast<std::size_t>(dim) * dim, 0);
  for (std::uint32_t k = 0; k < dim; ++k) e[k * dim + k] = 1;
  e[i * dim + j] = 1;
  return e;
}

}  // namespace

GroupPtr trivial_group() {
  return GroupModel::enumerate(std::make_shared<CyclicAmbient>(std::vector<std::uint32_t>{1}), {},
                               2, "trivial");
}

GroupPtr cyclic_group(std::uint32_t n) {
  auto amb = std::make_shared<CyclicAmbient>(std::vector<std::uint32_t>{n});
  std::vector<Encoding> gens;
  if (n > 1) gens.push_back(Encoding{1});
  return GroupModel::enumerate(amb, gens, n + 1, "Z/" + std::to_string(n));
}

GroupPtr symmetric3() {
  auto amb = std::make_shared<PermAmbient>(3);
  return GroupModel::enumerate(amb, {Encoding{1, 0, 2}, Encoding{1, 2, 0}}, 7, "S3");
}

GroupPtr alternating3() {
  auto amb = std::make_shared<PermAmbient>(3);
  return GroupModel::enumerate(amb, {Encoding{1, 2, 0}}, 4, "A3");
}

GroupPtr dihedral4() {
  // symmetries of the square on vertices 0..3: rotation + a reflection
  auto amb = std::make_shared<PermAmbient>(4);
  return GroupModel::enumerate(amb, {Encoding{1, 2, 3, 0}, Encoding{1, 0, 3, 2}}, 9, "D4");
}

GroupPtr symmetric4() {
  auto amb = std::make_shared<PermAmbient>(4);
  return GroupModel::enumerate(amb, {Encoding{1, 0, 2, 3}, Encoding{1, 2, 3, 0}}, 25, "S4");
}

GroupPtr alternating4() {
  auto amb = std::make_shared<PermAmbient>(4);
  return GroupModel::enumerate(amb, {Encoding{1, 2, 0, 3}, Encoding{1, 0, 3, 2}}, 13, "A4");
}

GroupPtr heisenberg_level(std::uint32_t p, std::uint32_t level, std::size_t cap) {
  checked_prime(p);
  if (level == 0) throw std::invalid_argument("heisenberg_level: level must be >= 1");
  std::uint64_t m = ipow(p, level);
  auto amb = std::make_shared<MatrixAmbient>(3, static_cast<std::uint32_t>(m));
  return GroupModel::enumerate(
      amb, {unitriangular_gen(3, 0, 1), unitriangular_gen(3, 1, 2)}, cap,
      "H(Z/" + std::to_string(m) + ")");
}

GroupPtr unitriangular4_level(std::uint32_t p, std::uint32_t level, std::size_t cap) {
  checked_prime(p);
  if (level == 0) throw std::invalid_argument("unitriangular4_level: level must be >= 1");
  std::uint64_t m = ipow(p, level);
  auto amb = std::make_shared<MatrixAmbient>(4, static_cast<std::uint32_t>(m));
  return GroupModel::enumerate(
      amb, {unitriangular_gen(4, 0, 1), unitriangular_gen(4, 1, 2), unitriangular_gen(4, 2, 3)},
      cap, "U4(Z/" + std::to_string(m) + ")");
}

GroupPtr units_level(std::uint32_t p, std::uint32_t level, std::size_t cap) {
  checked_prime(p);
  if (level == 0) throw std::invalid_argument("units_level: level must be >= 1");
  std::uint64_t m = ipow(p, level);
  auto amb = std::make_shared<UnitsAmbient>(static_cast<std::uint32_t>(m));
  std::vector<Encoding> gens;
  if (p == 2) {
    if (level == 2) gens = {Encoding{3}};
    if (level >= 3) gens = {Encoding{static_cast<std::int32_t>(m - 1)}, Encoding{5}};
  } else {
    // a generator of the cyclic group (Z/p^level)^x by direct order search
    std::uint64_t phi = m / p * (p - 1);
    for (std::uint32_t g = 2; g < m; ++g) {
      if (g % p == 0) continue;
      std::uint64_t x = g % m, ord = 1;
      while (x != 1) {
        x = (x * g) % m;
        ++ord;
      }
      if (ord == phi) {
        gens = {Encoding{static_cast<std::int32_t>(g)}};
        break;
      }
    }
  }
  return GroupModel::enumerate(amb, gens, cap, "(Z/" + std::to_string(m) + ")^x");
}

GroupPtr cyclic_level(std::uint32_t p, std::uint32_t level, std::size_t cap) {
  checked_prime(p);
  if (level == 0) throw std::invalid_argument("cyclic_level: level must be >= 1");
  std::uint64_t m = ipow(p, level);
  auto amb = std::make_shared<CyclicAmbient>(std::vector<std::uint32_t>{static_cast<std::uint32_t>(m)});
  return GroupModel::enumerate(amb, {Encoding{1}}, cap, "Z/" + std::to_string(m));
}

GroupPtr group_from_table(std::vector<std::vector<std::uint32_t>> table,
                          std::uint32_t identity_index, std::vector<std::string> names,
                          std::string group_name) {
  const std::size_t n = table.size();
  auto amb = std::make_shared<TableAmbient>(std::move(table), identity_index, std::move(names));
  std::vector<Encoding> gens;
  for (std::uint32_t i = 0; i < n; ++i)
    if (i != identity_index) gens.push_back(Encoding{static_cast<std::int32_t>(i)});
  return GroupModel::enumerate(amb, gens, n + 1, std::move(group_name));
}

}  // namespace profp
