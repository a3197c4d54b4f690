#pragma once

/**
 * @file shapes.hpp
 * @brief Sequences whose transform has the same shape.
 *
 * "Same shape" is read as scalar proportionality: N F == lambda F (mod m).
 * For each lambda the eigenspace is the right nullspace of N - lambda I,
 * found by Gaussian elimination over Z/mZ. Composite moduli work as long as
 * every pivot the elimination needs is a unit; otherwise tiny cases fall
 * back to enumerating Z_m^{2n}.
 */

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "nht/core.hpp"
#include "nht/errors.hpp"
#include "nht/modular.hpp"
#include "nht/spec_io.hpp"

namespace nht {

struct EigenPair {
  std::uint64_t lambda = 0;
  std::vector<ResidueVector> basis;
};

struct TransformPair {
  ResidueVector input;
  ResidueVector output;
};

/// Reduced row echelon form over Z/mZ, in place. Returns pivot columns.
/// Throws NonUnitPivot when a column has nonzero entries but none is a unit.
inline std::vector<std::size_t> row_reduce(SquareMatrix& a) {
  const Modulus m = a.modulus();
  const std::size_t size = a.size();
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < size && row < size; ++col) {
    std::optional<std::size_t> pick;
    bool nonzero = false;
    for (std::size_t r = row; r < size; ++r) {
      if (a(r, col) == 0) continue;
      nonzero = true;
      if (m.is_unit(a(r, col))) {
        pick = r;
        break;
      }
    }
    if (!pick) {
      if (nonzero) {
        throw NonUnitPivot("column " + std::to_string(col) + " has no invertible pivot modulo " +
                           std::to_string(m.value()));
      }
      continue;
    }
    if (*pick != row) {
      for (std::size_t j = 0; j < size; ++j) std::swap(a(row, j), a(*pick, j));
    }
    const std::uint64_t inv = m.inv(a(row, col));
    for (std::size_t j = 0; j < size; ++j) a(row, j) = m.mul(a(row, j), inv);
    for (std::size_t r = 0; r < size; ++r) {
      if (r == row || a(r, col) == 0) continue;
      const std::uint64_t factor = a(r, col);
      for (std::size_t j = 0; j < size; ++j) a(r, j) = m.sub(a(r, j), m.mul(factor, a(row, j)));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

/// Right nullspace basis: one vector per free column, with that column set
/// to 1 and the other free columns set to 0.
inline std::vector<ResidueVector> nullspace_mod(SquareMatrix a) {
  const Modulus m = a.modulus();
  const std::size_t size = a.size();
  const auto pivots = row_reduce(a);
  std::vector<bool> is_pivot(size, false);
  for (auto p : pivots) is_pivot[p] = true;

  std::vector<ResidueVector> basis;
  for (std::size_t free = 0; free < size; ++free) {
    if (is_pivot[free]) continue;
    std::vector<std::uint64_t> v(size, 0);
    v[free] = 1 % m.value();
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = m.neg(a(r, free));
    basis.emplace_back(m, std::move(v));
  }
  return basis;
}

inline SquareMatrix shifted(const SquareMatrix& a, std::uint64_t lambda) {
  SquareMatrix out = a;
  const Modulus m = a.modulus();
  for (std::size_t i = 0; i < a.size(); ++i) out(i, i) = m.sub(out(i, i), m.reduce_unsigned(lambda));
  return out;
}

namespace detail {

// Adds every t*v (t in Z_m) to an additively closed set, keeping it closed.
inline void extend_span(std::set<std::vector<std::uint64_t>>& span, const ResidueVector& v) {
  const Modulus m = v.modulus();
  std::set<std::vector<std::uint64_t>> grown;
  for (const auto& u : span) {
    std::vector<std::uint64_t> w = u;
    for (std::uint64_t t = 0; t < m.value(); ++t) {
      grown.insert(w);
      for (std::size_t i = 0; i < w.size(); ++i) w[i] = m.add(w[i], v[i]);
    }
  }
  span = std::move(grown);
}

// Eigenvectors by enumeration; keeps a vector only if the span so far misses it.
inline std::vector<ResidueVector> brute_force_eigenspace(const SquareMatrix& a, std::uint64_t lambda) {
  const Modulus m = a.modulus();
  const std::size_t size = a.size();
  std::set<std::vector<std::uint64_t>> span{std::vector<std::uint64_t>(size, 0)};
  std::vector<ResidueVector> generators;
  std::vector<std::uint64_t> v(size, 0);
  for (;;) {
    std::size_t i = size;
    while (i > 0) {
      --i;
      if (++v[i] < m.value()) break;
      v[i] = 0;
      if (i == 0) return generators;
    }
    if (span.contains(v)) continue;
    bool eigen = true;
    for (std::size_t r = 0; r < size && eigen; ++r) {
      DotAccumulator acc(m);
      for (std::size_t j = 0; j < size; ++j) acc.add(a(r, j), v[j]);
      eigen = acc.result() == m.mul(lambda, v[r]);
    }
    if (!eigen) continue;
    generators.emplace_back(m, v);
    extend_span(span, generators.back());
  }
}

}  // namespace detail

/// m^(2n) limit for the composite-modulus enumeration fallback.
inline constexpr std::uint64_t kBruteForceShapeBudget = std::uint64_t{1} << 20;

/// Every lambda in [1, m) with a nonzero eigenvector, ascending.
inline std::vector<EigenPair> find_scalar_shape_pairs(const NhtSpec& spec) {
  if (!is_valid(spec)) throw InvalidSpec("eigen analysis requires an orthogonal spec");
  const Modulus m = spec.modulus();
  const auto n = build_matrix(spec);

  bool can_enumerate = true;
  {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n.size() && can_enumerate; ++i) {
      total *= m.value();
      can_enumerate = total <= kBruteForceShapeBudget;
    }
  }

  std::vector<EigenPair> out;
  for (std::uint64_t lambda = 1; lambda < m.value(); ++lambda) {
    std::vector<ResidueVector> basis;
    try {
      basis = nullspace_mod(shifted(n, lambda));
    } catch (const NonUnitPivot& e) {
      if (!can_enumerate) {
        throw CompositeModulusUnsupported(std::string("cannot eliminate modulo ") + std::to_string(m.value()) +
                                          " and the space is too large to enumerate: " + e.what());
      }
      basis = detail::brute_force_eigenspace(n, lambda);
    }
    if (!basis.empty()) out.push_back(EigenPair{lambda, std::move(basis)});
  }
  return out;
}

namespace detail {
inline std::size_t rank_of_rows(const std::vector<ResidueVector>& rows, std::size_t length, Modulus m) {
  SquareMatrix a(m, std::max(rows.size(), length));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t j = 0; j < length; ++j) a(r, j) = rows[r][j];
  }
  return row_reduce(a).size();
}
}  // namespace detail

/// Whether v lies in the span of `basis`, by comparing ranks. Needs unit
/// pivots, so it is meant for prime moduli.
inline bool in_span(std::vector<ResidueVector> basis, const ResidueVector& v) {
  const std::size_t without = detail::rank_of_rows(basis, v.size(), v.modulus());
  basis.push_back(v);
  return detail::rank_of_rows(basis, v.size(), v.modulus()) == without;
}

inline TransformPair transform_pair(const NhtSpec& spec, const ResidueVector& f) {
  return TransformPair{f, forward(spec, f)};
}

/// CSV with header `lambda,x0,...`; one row per basis vector.
inline std::string eigen_csv(const std::vector<EigenPair>& pairs, std::size_t size) {
  std::string out = "lambda";
  for (std::size_t i = 0; i < size; ++i) out += ",x" + std::to_string(i);
  out += '\n';
  for (const auto& p : pairs) {
    for (const auto& v : p.basis) out += std::to_string(p.lambda) + ',' + format_vector(v) + '\n';
  }
  return out;
}

}  // namespace nht
