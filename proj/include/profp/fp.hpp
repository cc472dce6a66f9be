#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>

namespace profp {

/// Modular arithmetic helpers on raw residues. The bulk linear algebra works
/// on uint32_t residues with the modulus carried by the containing structure;
/// Fp below is the self-describing value type for ring-level arithmetic.
namespace modp {

inline std::uint32_t add(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  std::uint32_t s = a + b;
  return s >= p ? s - p : s;
}

inline std::uint32_t sub(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return a >= b ? a - b : a + p - b;
}

inline std::uint32_t neg(std::uint32_t a, std::uint32_t p) { return a == 0 ? 0 : p - a; }

inline std::uint32_t mul(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * b) % p);
}

inline std::uint32_t pow(std::uint32_t a, std::uint64_t e, std::uint32_t p) {
  std::uint32_t r = 1 % p;
  while (e) {
    if (e & 1) r = mul(r, a, p);
    a = mul(a, a, p);
    e >>= 1;
  }
  return r;
}

/// Inverse by Fermat; requires p prime and a != 0.
inline std::uint32_t inv(std::uint32_t a, std::uint32_t p) {
  if (a == 0) throw std::domain_error("modp::inv: zero is not invertible");
  return pow(a, p - 2, p);
}

inline std::uint32_t reduce(std::int64_t v, std::uint32_t p) {
  std::int64_t r = v % static_cast<std::int64_t>(p);
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

}  // namespace modp

inline bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Checks the supported prime range (2 <= p <= 97) and throws otherwise.
inline std::uint32_t checked_prime(std::uint32_t p) {
  if (p < 2 || p > 97 || !is_prime(p))
    throw std::invalid_argument("modulus must be a prime in [2, 97], got " + std::to_string(p));
  return p;
}

/// An element of the prime field F_p. Value in [0, p); arithmetic between
/// elements of different moduli throws.
class Fp {
 public:
  Fp() : p_(0), v_(0) {}  // zero of unspecified modulus; absorbs into any field
  Fp(std::int64_t value, std::uint32_t p) : p_(checked_prime(p)), v_(modp::reduce(value, p_)) {}

  std::uint32_t modulus() const { return p_; }
  std::uint32_t value() const { return v_; }
  bool is_zero() const { return v_ == 0; }

  Fp operator-() const { return make(modp::neg(v_, p_), p_); }
  Fp inverse() const {
    require_modulus();
    return make(modp::inv(v_, p_), p_);
  }
  Fp pow(std::uint64_t e) const {
    require_modulus();
    return make(modp::pow(v_, e, p_), p_);
  }

  friend Fp operator+(Fp a, Fp b) {
    std::uint32_t p = merged(a, b);
    return make(modp::add(a.v_, b.v_, p), p);
  }
  friend Fp operator-(Fp a, Fp b) {
    std::uint32_t p = merged(a, b);
    return make(modp::sub(a.v_, b.v_, p), p);
  }
  friend Fp operator*(Fp a, Fp b) {
    std::uint32_t p = merged(a, b);
    return make(modp::mul(a.v_, b.v_, p), p);
  }
  friend Fp operator/(Fp a, Fp b) { return a * b.inverse(); }

  Fp& operator+=(Fp o) { return *this = *this + o; }
  Fp& operator-=(Fp o) { return *this = *this - o; }
  Fp& operator*=(Fp o) { return *this = *this * o; }

  friend bool operator==(Fp a, Fp b) {
    if (a.p_ && b.p_ && a.p_ != b.p_) return false;
    return a.v_ == b.v_;
  }
  friend bool operator!=(Fp a, Fp b) { return !(a == b); }

 private:
  static Fp make(std::uint32_t v, std::uint32_t p) {
    Fp r;
    r.p_ = p;
    r.v_ = v;
    return r;
  }
  void require_modulus() const {
    if (p_ == 0) throw std::domain_error("Fp: operation needs a modulus");
  }
  static std::uint32_t merged(const Fp& a, const Fp& b) {
    if (a.p_ == 0 && b.p_ == 0) throw std::domain_error("Fp: operation needs a modulus");
    if (a.p_ != 0 && b.p_ != 0 && a.p_ != b.p_)
      throw std::invalid_argument("Fp: mismatched moduli");
    return a.p_ ? a.p_ : b.p_;
  }

  std::uint32_t p_, v_;
};

std::ostream& operator<<(std::ostream& os, const Fp& x);

}  // namespace profp
