#include "profp/linear.hpp"

#include <algorithm>
#include <ostream>

#include "profp/fp.hpp"

namespace profp {

std::ostream& operator<<(std::ostream& os, const Fp& x) {
  return os << x.value() << " (mod " << x.modulus() << ")";
}

SparseMatrixFp::SparseMatrixFp(std::uint32_t p, std::uint32_t rows, std::uint32_t cols,
                               std::vector<Entry> entries)
    : p_(checked_prime(p)), rows_(rows), cols_(cols), entries_(std::move(entries)) {
  std::sort(entries_.begin(), entries_.end(), [](const Entry& a, const Entry& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const Entry& e = entries_[i];
    if (e.row >= rows_ || e.col >= cols_)
      throw std::invalid_argument("SparseMatrixFp: entry out of range");
    if (e.val == 0 || e.val >= p_)
      throw std::invalid_argument("SparseMatrixFp: entry value must be in (0, p)");
    if (i > 0 && entries_[i - 1].row == e.row && entries_[i - 1].col == e.col)
      throw std::invalid_argument("SparseMatrixFp: duplicate coordinate");
  }
}

SparseMatrixFp SparseMatrixFp::identity(std::uint32_t p, std::uint32_t n) {
  std::vector<Entry> es;
  es.reserve(n);
  for (std::uint32_t i = 0; i < n; ++i) es.push_back({i, i, 1});
  return SparseMatrixFp(p, n, n, std::move(es));
}

FpVec SparseMatrixFp::apply(const FpVec& x) const {
  if (x.p != p_ || x.size() != cols_)
    throw std::invalid_argument("SparseMatrixFp::apply: shape or modulus mismatch");
  FpVec y(p_, rows_);
  for (const Entry& e : entries_)
    y.v[e.row] = modp::add(y.v[e.row], modp::mul(e.val, x.v[e.col], p_), p_);
  return y;
}

std::vector<std::uint32_t> RowSpace::reduce(std::vector<std::uint32_t> row) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    std::uint32_t c = pivot_cols_[i];
    std::uint32_t f = row[c];
    if (f == 0) continue;
    const auto& pr = rows_[i];
    for (std::size_t j = c; j < cols_; ++j)
      if (pr[j]) row[j] = modp::sub(row[j], modp::mul(f, pr[j], p_), p_);
  }
  return row;
}

bool RowSpace::insert(std::vector<std::uint32_t> row) {
  if (row.size() != cols_) throw std::invalid_argument("RowSpace::insert: wrong length");
  row = reduce(std::move(row));
  std::size_t lead = cols_;
  for (std::size_t j = 0; j < cols_; ++j)
    if (row[j]) {
      lead = j;
      break;
    }
  if (lead == cols_) return false;
  std::uint32_t s = modp::inv(row[lead], p_);
  for (std::size_t j = lead; j < cols_; ++j) row[j] = modp::mul(row[j], s, p_);
  // back-eliminate the new pivot column from existing rows
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    std::uint32_t f = rows_[i][lead];
    if (!f) continue;
    for (std::size_t j = lead; j < cols_; ++j)
      if (row[j]) rows_[i][j] = modp::sub(rows_[i][j], modp::mul(f, row[j], p_), p_);
  }
  auto pos = std::lower_bound(pivot_cols_.begin(), pivot_cols_.end(), lead);
  std::size_t idx = static_cast<std::size_t>(pos - pivot_cols_.begin());
  pivot_cols_.insert(pos, static_cast<std::uint32_t>(lead));
  rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(idx), std::move(row));
  return true;
}

bool RowSpace::insert(const FpVec& row) {
  if (row.p != p_) throw std::invalid_argument("RowSpace::insert: modulus mismatch");
  return insert(row.v);
}

bool RowSpace::contains(const FpVec& row) const {
  if (row.p != p_ || row.size() != cols_)
    throw std::invalid_argument("RowSpace::contains: shape or modulus mismatch");
  auto r = reduce(row.v);
  return std::all_of(r.begin(), r.end(), [](std::uint32_t x) { return x == 0; });
}

std::vector<FpVec> RowSpace::basis_vectors() const {
  std::vector<FpVec> out;
  out.reserve(rows_.size());
  for (const auto& r : rows_) {
    FpVec x(p_, cols_);
    x.v = r;
    out.push_back(std::move(x));
  }
  return out;
}

namespace {

RowSpace echelonize(const SparseMatrixFp& m, std::size_t col_cap) {
  if (m.cols() > col_cap)
    throw CapExceeded("nullspace: " + std::to_string(m.cols()) + " columns exceeds cap " +
                      std::to_string(col_cap));
  RowSpace rs(m.modulus(), m.cols());
  std::vector<std::uint32_t> row(m.cols(), 0);
  const auto& es = m.entries();
  std::size_t i = 0;
  while (i < es.size()) {
    std::uint32_t r = es[i].row;
    std::fill(row.begin(), row.end(), 0);
    for (; i < es.size() && es[i].row == r; ++i) row[es[i].col] = es[i].val;
    rs.insert(row);
  }
  return rs;
}

}  // namespace

std::vector<FpVec> nullspace(const SparseMatrixFp& m, std::size_t col_cap) {
  const std::uint32_t p = m.modulus();
  const std::size_t n = m.cols();
  RowSpace rs = echelonize(m, col_cap);

  std::vector<bool> is_pivot(n, false);
  for (auto c : rs.pivots()) is_pivot[c] = true;

  // free-variable kernel basis, then canonicalize to RREF
  RowSpace kernel(p, n);
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    std::vector<std::uint32_t> x(n, 0);
    x[f] = 1;
    const auto& rows = rs.basis();
    const auto& piv = rs.pivots();
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (rows[i][f]) x[piv[i]] = modp::neg(rows[i][f], p);
    kernel.insert(std::move(x));
  }
  return kernel.basis_vectors();
}

std::size_t rank(const SparseMatrixFp& m, std::size_t col_cap) {
  return echelonize(m, col_cap).dim();
}

RowSpace span_of(std::uint32_t p, std::size_t cols, const std::vector<FpVec>& vecs) {
  RowSpace rs(p, cols);
  for (const auto& v : vecs) rs.insert(v);
  return rs;
}

bool same_span(std::uint32_t p, std::size_t cols, const std::vector<FpVec>& a,
               const std::vector<FpVec>& b) {
  return span_of(p, cols, a) == span_of(p, cols, b);
}

}  // namespace profp
