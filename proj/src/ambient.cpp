#include "profp/ambient.hpp"

#include <numeric>
#include <stdexcept>

namespace profp {

Encoding Ambient::mult(const Encoding& a, const Encoding& b) const {
  check_size(a);
  check_size(b);
  Encoding out(enc_size());
  mult_raw(a.data(), b.data(), out.data());
  return out;
}

Encoding Ambient::inv(const Encoding& a) const {
  check_size(a);
  Encoding out(enc_size());
  inv_raw(a.data(), out.data());
  return out;
}

void Ambient::check_size(const Encoding& e) const {
  if (e.size() != enc_size()) throw std::invalid_argument("Ambient: encoding size mismatch");
}

// ---------------------------------------------------------------- matrices

namespace {

std::int64_t egcd(std::int64_t a, std::int64_t b, std::int64_t& x, std::int64_t& y) {
  if (b == 0) {
    x = 1;
    y = 0;
    return a;
  }
  std::int64_t x1, y1;
  std::int64_t g = egcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

/// Inverse of a unit mod m (m need not be prime).
std::uint32_t unit_inv(std::uint32_t a, std::uint32_t m) {
  std::int64_t x, y;
  std::int64_t g = egcd(a % m, m, x, y);
  if (g != 1) throw std::domain_error("unit_inv: not a unit");
  x %= m;
  if (x < 0) x += m;
  return static_cast<std::uint32_t>(x);
}

}  // namespace

MatrixAmbient::MatrixAmbient(std::uint32_t dim, std::uint32_t modulus) : dim_(dim), mod_(modulus) {
  if (dim_ == 0 || mod_ < 2) throw std::invalid_argument("MatrixAmbient: bad parameters");
}

void MatrixAmbient::mult_raw(const std::int32_t* a, const std::int32_t* b,
                             std::int32_t* out) const {
  const std::uint32_t d = dim_, m = mod_;
  for (std::uint32_t i = 0; i < d; ++i)
    for (std::uint32_t j = 0; j < d; ++j) {
      std::uint64_t s = 0;
      for (std::uint32_t k = 0; k < d; ++k)
        s += static_cast<std::uint64_t>(a[i * d + k]) * static_cast<std::uint64_t>(b[k * d + j]);
      out[i * d + j] = static_cast<std::int32_t>(s % m);
    }
}

void MatrixAmbient::inv_raw(const std::int32_t* a, std::int32_t* out) const {
  const std::uint32_t d = dim_, m = mod_;
  // Gauss-Jordan on [a | I]; every invertible matrix over Z/p^k has a unit
  // pivot available in each column.
  std::vector<std::uint32_t> w(d * 2 * d, 0);
  for (std::uint32_t i = 0; i < d; ++i) {
    for (std::uint32_t j = 0; j < d; ++j) w[i * 2 * d + j] = static_cast<std::uint32_t>(a[i * d + j]) % m;
    w[i * 2 * d + d + i] = 1;
  }
  auto row = [&](std::uint32_t i) { return w.data() + static_cast<std::size_t>(i) * 2 * d; };
  for (std::uint32_t c = 0; c < d; ++c) {
    std::uint32_t pr = d;
    for (std::uint32_t r = c; r < d; ++r) {
      std::int64_t x, y;
      if (egcd(row(r)[c] % m, m, x, y) == 1) {
        pr = r;
        break;
      }
    }
    if (pr == d) throw std::domain_error("MatrixAmbient: matrix not invertible");
    if (pr != c)
      for (std::uint32_t j = 0; j < 2 * d; ++j) std::swap(row(pr)[j], row(c)[j]);
    std::uint32_t s = unit_inv(row(c)[c], m);
    for (std::uint32_t j = 0; j < 2 * d; ++j)
      row(c)[j] = static_cast<std::uint32_t>((static_cast<std::uint64_t>(row(c)[j]) * s) % m);
    for (std::uint32_t r = 0; r < d; ++r) {
      if (r == c) continue;
      std::uint64_t f = row(r)[c];
      if (!f) continue;
      for (std::uint32_t j = 0; j < 2 * d; ++j) {
        std::uint64_t v = row(r)[j] + static_cast<std::uint64_t>(m) * m - (f * row(c)[j]) % m;
        row(r)[j] = static_cast<std::uint32_t>(v % m);
      }
    }
  }
  for (std::uint32_t i = 0; i < d; ++i)
    for (std::uint32_t j = 0; j < d; ++j) out[i * d + j] = static_cast<std::int32_t>(row(i)[d + j]);
}

Encoding MatrixAmbient::identity() const {
  Encoding e(enc_size(), 0);
  for (std::uint32_t i = 0; i < dim_; ++i) e[i * dim_ + i] = 1;
  return e;
}

bool MatrixAmbient::is_valid(const Encoding& e) const {
  if (e.size() != enc_size()) return false;
  for (auto v : e)
    if (v < 0 || static_cast<std::uint32_t>(v) >= mod_) return false;
  try {
    Encoding out(enc_size());
    inv_raw(e.data(), out.data());
  } catch (const std::domain_error&) {
    return false;
  }
  return true;
}

std::string MatrixAmbient::describe() const {
  return "GL_" + std::to_string(dim_) + "(Z/" + std::to_string(mod_) + ")";
}

// ------------------------------------------------------------ permutations

PermAmbient::PermAmbient(std::uint32_t n) : n_(n) {
  if (n_ == 0) throw std::invalid_argument("PermAmbient: degree 0");
}

void PermAmbient::mult_raw(const std::int32_t* a, const std::int32_t* b, std::int32_t* out) const {
  // (a*b)(x) = a(b(x))
  for (std::uint32_t x = 0; x < n_; ++x) out[x] = a[b[x]];
}

void PermAmbient::inv_raw(const std::int32_t* a, std::int32_t* out) const {
  for (std::uint32_t x = 0; x < n_; ++x) out[a[x]] = static_cast<std::int32_t>(x);
}

Encoding PermAmbient::identity() const {
  Encoding e(n_);
  std::iota(e.begin(), e.end(), 0);
  return e;
}

bool PermAmbient::is_valid(const Encoding& e) const {
  if (e.size() != n_) return false;
  std::vector<bool> seen(n_, false);
  for (auto v : e) {
    if (v < 0 || static_cast<std::uint32_t>(v) >= n_ || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

std::string PermAmbient::describe() const { return "Sym(" + std::to_string(n_) + ")"; }

// ----------------------------------------------------------------- cyclic

CyclicAmbient::CyclicAmbient(std::vector<std::uint32_t> orders) : orders_(std::move(orders)) {
  for (auto c : orders_)
    if (c == 0) throw std::invalid_argument("CyclicAmbient: zero order");
}

void CyclicAmbient::mult_raw(const std::int32_t* a, const std::int32_t* b,
                             std::int32_t* out) const {
  for (std::size_t i = 0; i < orders_.size(); ++i)
    out[i] = static_cast<std::int32_t>((static_cast<std::uint32_t>(a[i]) + b[i]) % orders_[i]);
}

void CyclicAmbient::inv_raw(const std::int32_t* a, std::int32_t* out) const {
  for (std::size_t i = 0; i < orders_.size(); ++i)
    out[i] = static_cast<std::int32_t>((orders_[i] - static_cast<std::uint32_t>(a[i])) % orders_[i]);
}

Encoding CyclicAmbient::identity() const { return Encoding(orders_.size(), 0); }

bool CyclicAmbient::is_valid(const Encoding& e) const {
  if (e.size() != orders_.size()) return false;
  for (std::size_t i = 0; i < orders_.size(); ++i)
    if (e[i] < 0 || static_cast<std::uint32_t>(e[i]) >= orders_[i]) return false;
  return true;
}

std::string CyclicAmbient::describe() const {
  std::string s = "Z";
  for (auto c : orders_) s += "/" + std::to_string(c);
  return s;
}

// ------------------------------------------------------------------ units

UnitsAmbient::UnitsAmbient(std::uint32_t modulus) : mod_(modulus) {
  if (mod_ < 2) throw std::invalid_argument("UnitsAmbient: modulus < 2");
}

void UnitsAmbient::mult_raw(const std::int32_t* a, const std::int32_t* b,
                            std::int32_t* out) const {
  out[0] = static_cast<std::int32_t>(
      (static_cast<std::uint64_t>(a[0]) * static_cast<std::uint64_t>(b[0])) % mod_);
}

void UnitsAmbient::inv_raw(const std::int32_t* a, std::int32_t* out) const {
  out[0] = static_cast<std::int32_t>(unit_inv(static_cast<std::uint32_t>(a[0]), mod_));
}

Encoding UnitsAmbient::identity() const { return Encoding{1}; }

bool UnitsAmbient::is_valid(const Encoding& e) const {
  if (e.size() != 1 || e[0] <= 0 || static_cast<std::uint32_t>(e[0]) >= mod_) return false;
  std::int64_t x, y;
  return egcd(e[0], mod_, x, y) == 1;
}

std::string UnitsAmbient::describe() const { return "(Z/" + std::to_string(mod_) + ")^x"; }

// ------------------------------------------------------------------ table

TableAmbient::TableAmbient(std::vector<std::vector<std::uint32_t>> table,
                           std::uint32_t identity_index, std::vector<std::string> names)
    : table_(std::move(table)), id_(identity_index), names_(std::move(names)) {
  const std::size_t n = table_.size();
  if (n == 0 || id_ >= n) throw std::invalid_argument("TableAmbient: bad table or identity");
  for (const auto& r : table_) {
    if (r.size() != n) throw std::invalid_argument("TableAmbient: table not square");
    for (auto v : r)
      if (v >= n) throw std::invalid_argument("TableAmbient: entry out of range");
  }
  for (std::uint32_t i = 0; i < n; ++i)
    if (table_[id_][i] != i || table_[i][id_] != i)
      throw std::invalid_argument("TableAmbient: identity is not two-sided");
  inv_.assign(n, n);
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = 0; j < n; ++j)
      if (table_[i][j] == id_ && table_[j][i] == id_) {
        inv_[i] = j;
        break;
      }
    if (inv_[i] == n) throw std::invalid_argument("TableAmbient: element without inverse");
  }
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b)
      for (std::uint32_t c = 0; c < n; ++c)
        if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
          throw std::invalid_argument("TableAmbient: multiplication not associative");
}

void TableAmbient::mult_raw(const std::int32_t* a, const std::int32_t* b,
                            std::int32_t* out) const {
  out[0] = static_cast<std::int32_t>(table_[static_cast<std::uint32_t>(a[0])]
                                           [static_cast<std::uint32_t>(b[0])]);
}

void TableAmbient::inv_raw(const std::int32_t* a, std::int32_t* out) const {
  out[0] = static_cast<std::int32_t>(inv_[static_cast<std::uint32_t>(a[0])]);
}

Encoding TableAmbient::identity() const { return Encoding{static_cast<std::int32_t>(id_)}; }

bool TableAmbient::is_valid(const Encoding& e) const {
  return e.size() == 1 && e[0] >= 0 && static_cast<std::size_t>(e[0]) < table_.size();
}

std::string TableAmbient::describe() const {
  return "table group of order " + std::to_string(table_.size());
}

}  // namespace profp
