#pragma once

#include <cstdint>
#include <vector>

#include "profp/common.hpp"
#include "profp/fp.hpp"

namespace profp {

/// Dense vector over F_p; residues in [0, p).
struct FpVec {
  std::uint32_t p = 0;
  std::vector<std::uint32_t> v;

  FpVec() = default;
  FpVec(std::uint32_t p_, std::size_t n) : p(p_), v(n, 0) {}
  std::size_t size() const { return v.size(); }
  bool is_zero() const {
    for (auto x : v)
      if (x) return false;
    return true;
  }
  friend bool operator==(const FpVec& a, const FpVec& b) { return a.p == b.p && a.v == b.v; }
};

/// Coordinate-format sparse matrix over F_p. Entries are validated on
/// construction: in-range coordinates, nonzero values, no duplicate positions.
class SparseMatrixFp {
 public:
  struct Entry {
    std::uint32_t row, col, val;
  };

  SparseMatrixFp(std::uint32_t p, std::uint32_t rows, std::uint32_t cols,
                 std::vector<Entry> entries);

  std::uint32_t modulus() const { return p_; }
  std::uint32_t rows() const { return rows_; }
  std::uint32_t cols() const { return cols_; }
  const std::vector<Entry>& entries() const { return entries_; }

  static SparseMatrixFp identity(std::uint32_t p, std::uint32_t n);

  FpVec apply(const FpVec& x) const;  // m * x

 private:
  std::uint32_t p_, rows_, cols_;
  std::vector<Entry> entries_;  // sorted by (row, col)
};

/// Incremental reduced row echelon form: rows inserted one at a time, kept
/// fully reduced with unit pivots, ordered by pivot column. The basis it
/// exposes is the canonical RREF basis of the row span, so two spans are
/// equal iff their RowSpace bases compare equal.
class RowSpace {
 public:
  RowSpace(std::uint32_t p, std::size_t cols) : p_(p), cols_(cols) {}

  /// Reduces `row` against the current basis and absorbs the remainder if it
  /// is nonzero. Returns true if the dimension grew.
  bool insert(std::vector<std::uint32_t> row);
  bool insert(const FpVec& row);

  /// True iff `row` lies in the current span.
  bool contains(const FpVec& row) const;

  /// Residue of `row` after reduction against the basis.
  std::vector<std::uint32_t> reduce(std::vector<std::uint32_t> row) const;

  std::size_t dim() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  std::uint32_t modulus() const { return p_; }
  const std::vector<std::vector<std::uint32_t>>& basis() const { return rows_; }
  const std::vector<std::uint32_t>& pivots() const { return pivot_cols_; }

  std::vector<FpVec> basis_vectors() const;

  friend bool operator==(const RowSpace& a, const RowSpace& b) {
    return a.p_ == b.p_ && a.cols_ == b.cols_ && a.rows_ == b.rows_;
  }

 private:
  std::uint32_t p_;
  std::size_t cols_;
  std::vector<std::vector<std::uint32_t>> rows_;  // RREF rows, pivot col ascending
  std::vector<std::uint32_t> pivot_cols_;
};

/// Basis of {x : m x = 0} as canonical RREF rows (pivot order: lowest column
/// first). Throws CapExceeded when cols > cap.
std::vector<FpVec> nullspace(const SparseMatrixFp& m,
                             std::size_t col_cap = Caps::from_env().nullspace_cols);

/// Rank of the matrix, same elimination cap.
std::size_t rank(const SparseMatrixFp& m,
                 std::size_t col_cap = Caps::from_env().nullspace_cols);

/// Span equality via canonical RREF comparison.
bool same_span(std::uint32_t p, std::size_t cols, const std::vector<FpVec>& a,
               const std::vector<FpVec>& b);

RowSpace span_of(std::uint32_t p, std::size_t cols, const std::vector<FpVec>& vecs);

}  // namespace profp
