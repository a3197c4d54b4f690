#pragma once

/**
 * @file core.hpp
 * @brief Number theoretic Hilbert transform of even size 2n.
 *
 * A transform is keyed by a modulus m and n coefficients c_0..c_{n-1}.
 * The 2n x 2n matrix is circulant with first row
 *
 *     (0, c_0, 0, c_1, ..., 0, c_{n-1})
 *
 * and every following row is the previous one rotated right by one
 * position. The matrix is orthogonal mod m (N * N^T == I) exactly when the
 * circular autocorrelation of the coefficients satisfies
 *
 *     r_0 = sum_i c_i^2              == 1
 *     r_k = sum_i c_i c_{(i+k) mod n} == 0,   1 <= k <= floor(n/2)
 *
 * Lags above n/2 mirror lags below it, so they are not listed separately.
 */

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "nht/errors.hpp"
#include "nht/modular.hpp"

namespace nht {

using Coefficients = std::vector<std::uint64_t>;

/// Whether zero coefficients are accepted. Transforms are defined with
/// nonzero entries; `allow` exists for exploratory searches only.
enum class ZeroPolicy { reject, allow };

/// Block of residues, e.g. the data block F or the transformed block G.
class ResidueVector {
 public:
  explicit ResidueVector(Modulus m) : modulus_(m) {}

  ResidueVector(Modulus m, std::vector<std::uint64_t> entries) : modulus_(m), entries_(std::move(entries)) {
    for (auto& e : entries_) e = m.reduce_unsigned(e);
  }

  /// Signed input, reduced into [0, m).
  static ResidueVector from_signed(Modulus m, std::span<const std::int64_t> values) {
    std::vector<std::uint64_t> entries;
    entries.reserve(values.size());
    for (auto v : values) entries.push_back(m.reduce(v));
    return ResidueVector(m, std::move(entries));
  }

  static ResidueVector zeros(Modulus m, std::size_t length) {
    return ResidueVector(m, std::vector<std::uint64_t>(length, 0));
  }
  static ResidueVector filled(Modulus m, std::size_t length, std::uint64_t value) {
    return ResidueVector(m, std::vector<std::uint64_t>(length, value));
  }

  [[nodiscard]] Modulus modulus() const noexcept { return modulus_; }
  [[nodiscard]] std::size_t size() const noexcept { return entries_.size(); }
  [[nodiscard]] bool empty() const noexcept { return entries_.empty(); }
  [[nodiscard]] std::uint64_t operator[](std::size_t i) const { return entries_[i]; }
  [[nodiscard]] std::span<const std::uint64_t> entries() const noexcept { return entries_; }
  [[nodiscard]] Residue at(std::size_t i) const {
    return Residue(static_cast<std::int64_t>(entries_.at(i)), modulus_);
  }

  [[nodiscard]] bool is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](auto e) { return e == 0; });
  }

  friend bool operator==(const ResidueVector&, const ResidueVector&) = default;

 private:
  Modulus modulus_;
  std::vector<std::uint64_t> entries_;
};

/// Dense square matrix over Z/mZ, row-major.
class SquareMatrix {
 public:
  SquareMatrix(Modulus m, std::size_t size) : modulus_(m), size_(size), data_(size * size, 0) {}

  static SquareMatrix identity(Modulus m, std::size_t size) {
    SquareMatrix out(m, size);
    for (std::size_t i = 0; i < size; ++i) out(i, i) = 1 % m.value();
    return out;
  }

  [[nodiscard]] Modulus modulus() const noexcept { return modulus_; }
  [[nodiscard]] std::size_t size() const noexcept { return size_; }

  std::uint64_t& operator()(std::size_t i, std::size_t j) { return data_[i * size_ + j]; }
  [[nodiscard]] std::uint64_t operator()(std::size_t i, std::size_t j) const { return data_[i * size_ + j]; }

  [[nodiscard]] std::span<const std::uint64_t> row(std::size_t i) const {
    return std::span<const std::uint64_t>(data_).subspan(i * size_, size_);
  }

  [[nodiscard]] bool is_identity() const { return *this == identity(modulus_, size_); }

  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

 private:
  Modulus modulus_;
  std::size_t size_;
  std::vector<std::uint64_t> data_;
};

/// The transform key: half-size n, modulus m, and the n first-row coefficients.
class NhtSpec {
 public:
  NhtSpec(Modulus m, Coefficients coeffs, ZeroPolicy zeros = ZeroPolicy::reject)
      : modulus_(m), coeffs_(std::move(coeffs)), zeros_(zeros) {
    if (coeffs_.empty()) throw InvalidSpec("a transform needs at least one coefficient");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      coeffs_[i] = m.reduce_unsigned(coeffs_[i]);
      if (coeffs_[i] == 0 && zeros_ == ZeroPolicy::reject) {
        throw InvalidSpec("coefficient " + std::to_string(i) + " is zero modulo " + std::to_string(m.value()) +
                          " (pass the allow-zero policy to permit this)");
      }
    }
  }

  /// Builds from signed integers, reducing each into [0, m).
  static NhtSpec from_signed(Modulus m, std::span<const std::int64_t> values, ZeroPolicy zeros = ZeroPolicy::reject) {
    Coefficients c;
    c.reserve(values.size());
    for (auto v : values) c.push_back(m.reduce(v));
    return NhtSpec(m, std::move(c), zeros);
  }

  [[nodiscard]] Modulus modulus() const noexcept { return modulus_; }
  [[nodiscard]] std::size_t half_size() const noexcept { return coeffs_.size(); }
  [[nodiscard]] std::size_t size() const noexcept { return 2 * coeffs_.size(); }
  [[nodiscard]] const Coefficients& coeffs() const noexcept { return coeffs_; }
  [[nodiscard]] ZeroPolicy zero_policy() const noexcept { return zeros_; }
  [[nodiscard]] bool has_zero_coefficient() const {
    return std::find(coeffs_.begin(), coeffs_.end(), 0U) != coeffs_.end();
  }

  friend bool operator==(const NhtSpec& a, const NhtSpec& b) {
    return a.modulus_ == b.modulus_ && a.coeffs_ == b.coeffs_;
  }

 private:
  Modulus modulus_;
  Coefficients coeffs_;
  ZeroPolicy zeros_;
};

/// Residues of the autocorrelation lags r_0..r_{floor(n/2)}.
struct ConditionReport {
  Modulus modulus;
  std::size_t half_size;
  std::vector<std::uint64_t> residues;

  /// r_0 == 1 and every other lag vanishes.
  [[nodiscard]] bool satisfied() const {
    if (residues.empty() || residues[0] != 1 % modulus.value()) return false;
    return std::all_of(residues.begin() + 1, residues.end(), [](auto r) { return r == 0; });
  }
};

inline ResidueVector first_row(const NhtSpec& spec) {
  std::vector<std::uint64_t> row(spec.size(), 0);
  for (std::size_t q = 0; q < spec.half_size(); ++q) row[2 * q + 1] = spec.coeffs()[q];
  return ResidueVector(spec.modulus(), std::move(row));
}

/// Row i is row 0 rotated right by i, i.e. N(i, j) = row0[(j - i) mod 2n].
inline SquareMatrix build_matrix(const NhtSpec& spec) {
  const std::size_t size = spec.size();
  const auto row0 = first_row(spec);
  SquareMatrix out(spec.modulus(), size);
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < size; ++j) out(i, j) = row0[(j + size - i) % size];
  }
  return out;
}

namespace detail {

inline void require_block(const NhtSpec& spec, const ResidueVector& v) {
  if (v.modulus() != spec.modulus()) {
    throw ModulusMismatch("vector modulus " + std::to_string(v.modulus().value()) + " differs from spec modulus " +
                          std::to_string(spec.modulus().value()));
  }
  if (v.size() != spec.size()) {
    throw LengthMismatch("expected a block of " + std::to_string(spec.size()) + " entries, got " +
                         std::to_string(v.size()));
  }
}

// Accumulates in 64 bits and reduces once the running sum could overflow.
class DotAccumulator {
 public:
  explicit DotAccumulator(Modulus m) : m_(m), limit_(~std::uint64_t{0} - (m.value() - 1) * (m.value() - 1)) {}
  void add(std::uint64_t a, std::uint64_t b) {
    sum_ += a * b;
    if (sum_ > limit_) sum_ %= m_.value();
  }
  [[nodiscard]] std::uint64_t result() const { return sum_ % m_.value(); }

 private:
  Modulus m_;
  std::uint64_t limit_;
  std::uint64_t sum_ = 0;
};

}  // namespace detail

/// G = N F mod m by the direct matrix-vector product.
inline ResidueVector forward(const NhtSpec& spec, const ResidueVector& f) {
  detail::require_block(spec, f);
  const std::size_t size = spec.size();
  const auto row0 = first_row(spec);
  std::vector<std::uint64_t> g(size);
  for (std::size_t i = 0; i < size; ++i) {
    detail::DotAccumulator acc(spec.modulus());
    for (std::size_t j = 0; j < size; ++j) acc.add(row0[(j + size - i) % size], f[j]);
    g[i] = acc.result();
  }
  return ResidueVector(spec.modulus(), std::move(g));
}

/// Same result as forward(), computed as two length-n circular correlations.
///
/// Only odd offsets of the first row are nonzero, so even outputs read only
/// odd inputs and vice versa:
///   G[2r]   = sum_p c[(p - r) mod n]     F[2p + 1]
///   G[2r+1] = sum_p c[(p - r - 1) mod n] F[2p]
inline ResidueVector forward_parity_split(const NhtSpec& spec, const ResidueVector& f) {
  detail::require_block(spec, f);
  const std::size_t n = spec.half_size();
  const auto& c = spec.coeffs();
  std::vector<std::uint64_t> g(2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    detail::DotAccumulator even(spec.modulus());
    detail::DotAccumulator odd(spec.modulus());
    for (std::size_t p = 0; p < n; ++p) {
      even.add(c[(p + n - r) % n], f[2 * p + 1]);
      odd.add(c[(p + 2 * n - r - 1) % n], f[2 * p]);
    }
    g[2 * r] = even.result();
    g[2 * r + 1] = odd.result();
  }
  return ResidueVector(spec.modulus(), std::move(g));
}

/// F = N^T G mod m. Recovers the data block when the spec is valid.
inline ResidueVector inverse(const NhtSpec& spec, const ResidueVector& g) {
  detail::require_block(spec, g);
  const std::size_t size = spec.size();
  const auto row0 = first_row(spec);
  std::vector<std::uint64_t> f(size);
  // N^T(i, j) = N(j, i) = row0[(i - j) mod 2n]
  for (std::size_t i = 0; i < size; ++i) {
    detail::DotAccumulator acc(spec.modulus());
    for (std::size_t j = 0; j < size; ++j) acc.add(row0[(i + size - j) % size], g[j]);
    f[i] = acc.result();
  }
  return ResidueVector(spec.modulus(), std::move(f));
}

/// Full product N * N^T mod m.
inline SquareMatrix gram(const NhtSpec& spec) {
  const auto n = build_matrix(spec);
  const std::size_t size = n.size();
  SquareMatrix out(spec.modulus(), size);
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < size; ++j) {
      detail::DotAccumulator acc(spec.modulus());
      for (std::size_t t = 0; t < size; ++t) acc.add(n(i, t), n(j, t));
      out(i, j) = acc.result();
    }
  }
  return out;
}

/// Circular autocorrelation r_k = sum_i c_i c_{(i+k) mod n}, k = 0..floor(n/2).
inline std::vector<std::uint64_t> autocorrelation(std::span<const std::uint64_t> c, Modulus m) {
  const std::size_t n = c.size();
  std::vector<std::uint64_t> r(n / 2 + 1);
  for (std::size_t k = 0; k < r.size(); ++k) {
    detail::DotAccumulator acc(m);
    for (std::size_t i = 0; i < n; ++i) acc.add(c[i], c[(i + k) % n]);
    r[k] = acc.result();
  }
  return r;
}

inline ConditionReport conditions(const NhtSpec& spec) {
  return ConditionReport{spec.modulus(), spec.half_size(), autocorrelation(spec.coeffs(), spec.modulus())};
}

inline bool is_valid(const NhtSpec& spec) { return conditions(spec).satisfied(); }

// Coefficient-vector symmetries. Each preserves the condition residues
// (scaling multiplies them by s^2).

/// Cyclic shift left by `by`: out[i] = c[(i + by) mod n].
inline Coefficients rotate(std::span<const std::uint64_t> c, std::size_t by = 1) {
  Coefficients out(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) out[i] = c[(i + by) % c.size()];
  return out;
}

inline Coefficients reverse(std::span<const std::uint64_t> c) { return Coefficients(c.rbegin(), c.rend()); }

inline Coefficients scale(std::span<const std::uint64_t> c, std::uint64_t s, Modulus m) {
  Coefficients out(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) out[i] = m.mul(c[i], m.reduce_unsigned(s));
  return out;
}

}  // namespace nht
