#pragma once

#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <random>
#include <stdexcept>
#include <string>

namespace profp {

/// Thrown when an instance exceeds a configured size cap (CLI exit code 2).
struct CapExceeded : std::runtime_error {
  explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Size caps for the exact solvers and enumerators. Overridable via
/// PROFP_NULLSPACE_CAP, PROFP_GROUP_CAP, PROFP_POINT_CAP, PROFP_DENSE_CHECK_CAP.
struct Caps {
  std::size_t nullspace_cols = 5000;  // max columns for dense-backed elimination
  std::size_t group_order = 200000;   // max enumerated group order
  std::size_t points = 200000;        // max points in one action / tower level
  std::size_t dense_check = 1000;     // max points for direct linear cross-checks

  static Caps from_env() {
    Caps c;
    auto rd = [](const char* name, std::size_t& out) {
      if (const char* s = std::getenv(name)) {
        long long v = std::atoll(s);
        if (v > 0) out = static_cast<std::size_t>(v);
      }
    };
    rd("PROFP_NULLSPACE_CAP", c.nullspace_cols);
    rd("PROFP_GROUP_CAP", c.group_order);
    rd("PROFP_POINT_CAP", c.points);
    rd("PROFP_DENSE_CHECK_CAP", c.dense_check);
    return c;
  }
};

/// Deterministic RNG for property sweeps; the sampling helpers avoid
/// std::uniform_int_distribution so streams are identical across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t raw() { return eng_(); }

  /// Uniform-ish value in [0, bound); bound > 0.
  std::uint64_t below(std::uint64_t bound) { return eng_() % bound; }

  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) {  // inclusive
    return lo + below(hi - lo + 1);
  }

 private:
  std::mt19937_64 eng_;
};

inline constexpr const char* kVersion = "0.1.0";
inline constexpr int kReportSchemaVersion = 1;

}  // namespace profp
