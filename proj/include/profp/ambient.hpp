#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace profp {

/// Canonical element encoding: a fixed-length tuple of small integers
/// (flattened matrix entries, permutation images, residues, ...). Element
/// equality is encoding equality.
using Encoding = std::vector<std::int32_t>;

struct EncodingHash {
  std::size_t operator()(const Encoding& e) const {
    std::size_t h = 1469598103934665603ull;
    for (auto v : e) {
      h ^= static_cast<std::size_t>(static_cast<std::uint32_t>(v));
      h *= 1099511628211ull;
    }
    return h;
  }
};

/// A raw model of a (possibly huge) group the enumerated groups live in:
/// total multiplication and inversion on encodings, never enumerated itself.
/// The *_raw entry points work on contiguous buffers for hot loops.
class Ambient {
 public:
  virtual ~Ambient() = default;

  virtual std::size_t enc_size() const = 0;
  virtual void mult_raw(const std::int32_t* a, const std::int32_t* b, std::int32_t* out) const = 0;
  virtual void inv_raw(const std::int32_t* a, std::int32_t* out) const = 0;
  virtual Encoding identity() const = 0;
  virtual bool is_valid(const Encoding& e) const = 0;
  virtual std::string describe() const = 0;

  Encoding mult(const Encoding& a, const Encoding& b) const;
  Encoding inv(const Encoding& a) const;
  bool is_identity(const Encoding& a) const { return a == identity(); }

 protected:
  void check_size(const Encoding& e) const;
};

using AmbientPtr = std::shared_ptr<const Ambient>;

/// d x d matrices over Z/m, row-major; elements must be invertible mod m.
/// Inversion is Gauss-Jordan with unit pivots (valid over Z/p^k).
class MatrixAmbient final : public Ambient {
 public:
  MatrixAmbient(std::uint32_t dim, std::uint32_t modulus);
  std::size_t enc_size() const override { return static_cast<std::size_t>(dim_) * dim_; }
  void mult_raw(const std::int32_t* a, const std::int32_t* b, std::int32_t* out) const override;
  void inv_raw(const std::int32_t* a, std::int32_t* out) const override;
  Encoding identity() const override;
  bool is_valid(const Encoding& e) const override;
  std::string describe() const override;
  std::uint32_t dim() const { return dim_; }
  std::uint32_t modulus() const { return mod_; }

 private:
  std::uint32_t dim_, mod_;
};

/// Permutations of {0..n-1} encoded by their image vectors.
class PermAmbient final : public Ambient {
 public:
  explicit PermAmbient(std::uint32_t n);
  std::size_t enc_size() const override { return n_; }
  void mult_raw(const std::int32_t* a, const std::int32_t* b, std::int32_t* out) const override;
  void inv_raw(const std::int32_t* a, std::int32_t* out) const override;
  Encoding identity() const override;
  bool is_valid(const Encoding& e) const override;
  std::string describe() const override;
  std::uint32_t degree() const { return n_; }

 private:
  std::uint32_t n_;
};

/// Additive product of cyclic groups Z/c_1 x ... x Z/c_k.
class CyclicAmbient final : public Ambient {
 public:
  explicit CyclicAmbient(std::vector<std::uint32_t> orders);
  std::size_t enc_size() const override { return orders_.size(); }
  void mult_raw(const std::int32_t* a, const std::int32_t* b, std::int32_t* out) const override;
  void inv_raw(const std::int32_t* a, std::int32_t* out) const override;
  Encoding identity() const override;
  bool is_valid(const Encoding& e) const override;
  std::string describe() const override;
  const std::vector<std::uint32_t>& orders() const { return orders_; }

 private:
  std::vector<std::uint32_t> orders_;
};

/// The unit group (Z/m)^x under multiplication; encoding = one residue.
class UnitsAmbient final : public Ambient {
 public:
  explicit UnitsAmbient(std::uint32_t modulus);
  std::size_t enc_size() const override { return 1; }
  void mult_raw(const std::int32_t* a, const std::int32_t* b, std::int32_t* out) const override;
  void inv_raw(const std::int32_t* a, std::int32_t* out) const override;
  Encoding identity() const override;
  bool is_valid(const Encoding& e) const override;
  std::string describe() const override;
  std::uint32_t modulus() const { return mod_; }

 private:
  std::uint32_t mod_;
};

/// A finite group given by an explicit multiplication table; encoding = the
/// element's row index. Used for groups ingested from JSON table files.
class TableAmbient final : public Ambient {
 public:
  /// table[i][j] = index of element i * element j; identity_index must be a
  /// two-sided identity. Validates identity, inverses and associativity.
  TableAmbient(std::vector<std::vector<std::uint32_t>> table, std::uint32_t identity_index,
               std::vector<std::string> names = {});
  std::size_t enc_size() const override { return 1; }
  void mult_raw(const std::int32_t* a, const std::int32_t* b, std::int32_t* out) const override;
  void inv_raw(const std::int32_t* a, std::int32_t* out) const override;
  Encoding identity() const override;
  bool is_valid(const Encoding& e) const override;
  std::string describe() const override;
  std::size_t size() const { return table_.size(); }
  const std::vector<std::string>& names() const { return names_; }

 private:
  std::vector<std::vector<std::uint32_t>> table_;
  std::vector<std::uint32_t> inv_;
  std::uint32_t id_;
  std::vector<std::string> names_;
};

}  // namespace profp
