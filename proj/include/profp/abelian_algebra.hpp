#pragma once

#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "profp/fp.hpp"

namespace profp {

/// The group algebra F_p[A] for a finite abelian A given as a product of
/// cyclic factors. Group elements are residue tuples packed into a single
/// mixed-radix index; elements of the algebra store only nonzero
/// coefficients. A characteristic-p commutative ring.
class AlgebraElem {
 public:
  AlgebraElem(std::uint32_t p, std::vector<std::uint32_t> orders)
      : p_(checked_prime(p)), orders_(std::move(orders)) {
    for (auto c : orders_)
      if (c == 0) throw std::invalid_argument("AlgebraElem: zero cyclic order");
  }

  static AlgebraElem zero(std::uint32_t p, std::vector<std::uint32_t> orders) {
    return AlgebraElem(p, std::move(orders));
  }
  static AlgebraElem one(std::uint32_t p, std::vector<std::uint32_t> orders) {
    AlgebraElem e(p, std::move(orders));
    e.coeffs_[0] = 1;
    return e;
  }
  /// Basis element for the group element with the given residue tuple.
  static AlgebraElem basis(std::uint32_t p, std::vector<std::uint32_t> orders,
                           const std::vector<std::uint32_t>& tuple, std::uint32_t coeff = 1) {
    AlgebraElem e(p, std::move(orders));
    e.add_term(e.pack(tuple), coeff % e.p_);
    return e;
  }

  std::uint32_t modulus() const { return p_; }
  const std::vector<std::uint32_t>& orders() const { return orders_; }
  std::uint64_t group_order() const {
    std::uint64_t n = 1;
    for (auto c : orders_) n *= c;
    return n;
  }
  const std::map<std::uint32_t, std::uint32_t>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  std::uint32_t pack(const std::vector<std::uint32_t>& tuple) const {
    if (tuple.size() != orders_.size())
      throw std::invalid_argument("AlgebraElem: tuple arity mismatch");
    std::uint64_t idx = 0;
    for (std::size_t i = 0; i < orders_.size(); ++i) idx = idx * orders_[i] + tuple[i] % orders_[i];
    return static_cast<std::uint32_t>(idx);
  }
  std::vector<std::uint32_t> unpack(std::uint32_t idx) const {
    std::vector<std::uint32_t> t(orders_.size(), 0);
    for (std::size_t i = orders_.size(); i-- > 0;) {
      t[i] = idx % orders_[i];
      idx /= orders_[i];
    }
    return t;
  }

  void add_term(std::uint32_t idx, std::uint32_t val) {
    val %= p_;
    auto it = coeffs_.find(idx);
    std::uint32_t cur = it == coeffs_.end() ? 0 : it->second;
    std::uint32_t s = modp::add(cur, val, p_);
    if (s == 0) {
      if (it != coeffs_.end()) coeffs_.erase(it);
    } else {
      coeffs_[idx] = s;
    }
  }

  friend AlgebraElem operator+(const AlgebraElem& a, const AlgebraElem& b) {
    a.check_compatible(b);
    AlgebraElem r = a;
    for (auto [i, v] : b.coeffs_) r.add_term(i, v);
    return r;
  }

  friend AlgebraElem operator-(const AlgebraElem& a, const AlgebraElem& b) {
    a.check_compatible(b);
    AlgebraElem r = a;
    for (auto [i, v] : b.coeffs_) r.add_term(i, modp::neg(v, a.p_));
    return r;
  }

  /// Group-algebra convolution.
  friend AlgebraElem operator*(const AlgebraElem& a, const AlgebraElem& b) {
    a.check_compatible(b);
    AlgebraElem r(a.p_, a.orders_);
    for (auto [i, v] : a.coeffs_)
      for (auto [j, w] : b.coeffs_) r.add_term(r.group_mult(i, j), modp::mul(v, w, a.p_));
    return r;
  }

  AlgebraElem scaled(std::uint32_t c) const {
    AlgebraElem r(p_, orders_);
    c %= p_;
    if (c == 0) return r;
    for (auto [i, v] : coeffs_) r.coeffs_[i] = modp::mul(v, c, p_);
    return r;
  }

  AlgebraElem pow(std::uint64_t e) const {
    AlgebraElem r = one(p_, orders_);
    AlgebraElem b = *this;
    while (e) {
      if (e & 1) r = r * b;
      b = b * b;
      e >>= 1;
    }
    return r;
  }

  friend bool operator==(const AlgebraElem& a, const AlgebraElem& b) {
    return a.p_ == b.p_ && a.orders_ == b.orders_ && a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const AlgebraElem& a, const AlgebraElem& b) { return !(a == b); }

  std::string str() const;

 private:
  std::uint32_t group_mult(std::uint32_t i, std::uint32_t j) const {
    auto a = unpack(i), b = unpack(j);
    for (std::size_t k = 0; k < orders_.size(); ++k) a[k] = (a[k] + b[k]) % orders_[k];
    return pack(a);
  }
  void check_compatible(const AlgebraElem& o) const {
    if (p_ != o.p_) throw std::invalid_argument("AlgebraElem: mismatched modulus");
    if (orders_ != o.orders_) throw std::invalid_argument("AlgebraElem: mismatched group");
  }

  std::uint32_t p_;
  std::vector<std::uint32_t> orders_;
  std::map<std::uint32_t, std::uint32_t> coeffs_;  // packed group index -> nonzero value
};

}  // namespace profp
