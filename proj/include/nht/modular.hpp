#pragma once

/**
 * @file modular.hpp
 * @brief Exact arithmetic in Z/mZ for 2 <= m < 2^31.
 *
 * Residues are kept in canonical form [0, m). The modulus cap keeps the
 * product of two residues below 2^62, so plain 64-bit multiply followed by
 * a single division is exact. No Montgomery or Barrett tricks are needed
 * at the sizes this library works with.
 */

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "nht/errors.hpp"

namespace nht {

class Modulus {
 public:
  static constexpr std::int64_t kMax = std::int64_t{1} << 31;  // exclusive

  constexpr explicit Modulus(std::int64_t m) : m_(static_cast<std::uint64_t>(m)) {
    if (m < 2 || m >= kMax) {
      throw InvalidModulus("modulus must satisfy 2 <= m < 2^31, got " + std::to_string(m));
    }
  }

  [[nodiscard]] constexpr std::uint64_t value() const noexcept { return m_; }

  /// Canonical representative of an arbitrary signed integer.
  [[nodiscard]] constexpr std::uint64_t reduce(std::int64_t x) const noexcept {
    const auto m = static_cast<std::int64_t>(m_);
    std::int64_t r = x % m;
    if (r < 0) r += m;
    return static_cast<std::uint64_t>(r);
  }

  [[nodiscard]] constexpr std::uint64_t reduce_unsigned(std::uint64_t x) const noexcept { return x % m_; }

  // Raw operations on canonical values. Inputs must already lie in [0, m).
  [[nodiscard]] constexpr std::uint64_t add(std::uint64_t a, std::uint64_t b) const noexcept {
    const std::uint64_t s = a + b;
    return s >= m_ ? s - m_ : s;
  }
  [[nodiscard]] constexpr std::uint64_t sub(std::uint64_t a, std::uint64_t b) const noexcept {
    return a >= b ? a - b : a + m_ - b;
  }
  [[nodiscard]] constexpr std::uint64_t neg(std::uint64_t a) const noexcept { return a == 0 ? 0 : m_ - a; }
  [[nodiscard]] constexpr std::uint64_t mul(std::uint64_t a, std::uint64_t b) const noexcept {
    return (a * b) % m_;
  }

  [[nodiscard]] constexpr std::uint64_t pow(std::uint64_t base, std::uint64_t e) const noexcept {
    std::uint64_t result = 1 % m_;
    base %= m_;
    while (e != 0) {
      if (e & 1U) result = mul(result, base);
      base = mul(base, base);
      e >>= 1U;
    }
    return result;
  }

  /// Inverse via extended Euclid; throws NotInvertible when gcd(a, m) != 1.
  [[nodiscard]] std::uint64_t inv(std::uint64_t a) const {
    std::int64_t old_r = static_cast<std::int64_t>(a % m_);
    std::int64_t r = static_cast<std::int64_t>(m_);
    std::int64_t old_s = 1;
    std::int64_t s = 0;
    while (r != 0) {
      const std::int64_t q = old_r / r;
      old_r = std::exchange(r, old_r - q * r);
      old_s = std::exchange(s, old_s - q * s);
    }
    if (old_r != 1) {
      throw NotInvertible(std::to_string(a) + " has no inverse modulo " + std::to_string(m_) +
                          " (gcd = " + std::to_string(old_r) + ")");
    }
    return reduce(old_s);
  }

  [[nodiscard]] constexpr bool is_unit(std::uint64_t a) const noexcept {
    std::uint64_t x = a % m_;
    std::uint64_t y = m_;
    while (y != 0) x = std::exchange(y, x % y);
    return x == 1;
  }

  friend constexpr bool operator==(const Modulus&, const Modulus&) = default;

 private:
  std::uint64_t m_;
};

/// A single element of Z/mZ. The value is canonical at all times.
class Residue {
 public:
  constexpr Residue(std::int64_t value, Modulus m) : value_(m.reduce(value)), modulus_(m) {}

  [[nodiscard]] constexpr std::uint64_t value() const noexcept { return value_; }
  [[nodiscard]] constexpr Modulus modulus() const noexcept { return modulus_; }

  friend constexpr bool operator==(const Residue&, const Residue&) = default;

 private:
  std::uint64_t value_;
  Modulus modulus_;
};

namespace detail {
inline void require_same_modulus(const Residue& a, const Residue& b) {
  if (a.modulus() != b.modulus()) throw ModulusMismatch();
}
inline Residue make_residue(std::uint64_t canonical, Modulus m) {
  return Residue(static_cast<std::int64_t>(canonical), m);
}
}  // namespace detail

inline Residue mod_add(const Residue& a, const Residue& b) {
  detail::require_same_modulus(a, b);
  return detail::make_residue(a.modulus().add(a.value(), b.value()), a.modulus());
}

inline Residue mod_mul(const Residue& a, const Residue& b) {
  detail::require_same_modulus(a, b);
  return detail::make_residue(a.modulus().mul(a.value(), b.value()), a.modulus());
}

inline Residue mod_pow(const Residue& a, std::uint64_t e) {
  return detail::make_residue(a.modulus().pow(a.value(), e), a.modulus());
}

inline Residue mod_inv(const Residue& a) {
  return detail::make_residue(a.modulus().inv(a.value()), a.modulus());
}

/// All s in [1, m) with s^2 == 1 (mod m), ascending, by direct scan.
inline std::vector<std::uint64_t> sqrt_of_unity_set(Modulus m) {
  std::vector<std::uint64_t> out;
  const std::uint64_t one = 1 % m.value();
  for (std::uint64_t s = 1; s < m.value(); ++s) {
    if (m.mul(s, s) == one) out.push_back(s);
  }
  return out;
}

/// Deterministic trial division; adequate for m < 2^31.
[[nodiscard]] constexpr bool is_prime(std::uint64_t m) noexcept {
  if (m < 2) return false;
  if (m % 2 == 0) return m == 2;
  for (std::uint64_t d = 3; d * d <= m; d += 2) {
    if (m % d == 0) return false;
  }
  return true;
}

}  // namespace nht
