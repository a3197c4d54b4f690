#pragma once

/**
 * @file solver.hpp
 * @brief Search for coefficient vectors that make the transform orthogonal.
 *
 * Exhaustive search assigns c_0..c_{n-2} depth first and keeps every lag
 * sum up to date incrementally. Every lag involves the last coefficient x,
 * and x enters each lag in a fixed way:
 *
 *     r_0 = S_0 + x^2
 *     r_k = S_k + x * (c_{n-1-k} + c_{k-1})     for k >= 1
 *
 * so the leaf is solved rather than scanned: x ranges over the square
 * roots of 1 - S_0 and each linear lag is checked for those few values.
 *
 * Results are ordered lexicographically. Work is split on c_0 across
 * workers and merged by c_0, so the output does not depend on the worker
 * count.
 *
 * Randomized search draws each coefficient from a std::mt19937_64 seeded
 * with the configured seed. A coefficient uniform in [lo, m) is obtained by
 * rejection: with span = m - lo, 64-bit draws u >= 2^64 - (2^64 mod span)
 * are discarded and lo + u mod span is returned. Both pieces are fully
 * specified, so a (seed, trials) pair reproduces the same stream everywhere.
 */

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <set>
#include <thread>
#include <vector>

#include "nht/core.hpp"
#include "nht/errors.hpp"
#include "nht/modular.hpp"

namespace nht {

enum class SearchMode { exhaustive, randomized };

struct SearchConfig {
  std::size_t half_size = 1;
  Modulus modulus{2};
  SearchMode mode = SearchMode::exhaustive;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  bool dedup = false;
  bool allow_zero = false;
  std::optional<std::size_t> limit;
  /// Cap on raw candidates (m-1)^n, or m^n with zeros allowed. nullopt disables the guard.
  std::optional<std::uint64_t> budget = kDefaultBudget;
  unsigned workers = 1;

  static constexpr std::uint64_t kDefaultBudget = 10'000'000'000ULL;
};

struct SearchSummary {
  std::size_t count = 0;
  std::chrono::nanoseconds elapsed{0};
  /// Complete coefficient vectors whose conditions were evaluated.
  std::uint64_t candidates = 0;
};

struct SolutionStream {
  std::vector<NhtSpec> solutions;
  SearchSummary summary;
};

/// Closure of c under rotations, reversal and scaling by square roots of
/// unity, in lexicographic order.
inline std::vector<Coefficients> orbit(std::span<const std::uint64_t> c, Modulus m) {
  std::set<Coefficients> members;
  const Coefficients base(c.begin(), c.end());
  for (auto s : sqrt_of_unity_set(m)) {
    const auto scaled = scale(base, s, m);
    for (const auto& start : {scaled, reverse(scaled)}) {
      for (std::size_t r = 0; r < std::max<std::size_t>(start.size(), 1); ++r) members.insert(rotate(start, r));
    }
  }
  return {members.begin(), members.end()};
}

/// Lexicographically smallest member of the orbit of c.
inline Coefficients canonicalize(std::span<const std::uint64_t> c, Modulus m) {
  Coefficients best(c.begin(), c.end());
  for (auto s : sqrt_of_unity_set(m)) {
    const auto scaled = scale(c, s, m);
    for (const auto& start : {scaled, reverse(scaled)}) {
      for (std::size_t r = 0; r < start.size(); ++r) {
        auto candidate = rotate(start, r);
        if (candidate < best) best = std::move(candidate);
      }
    }
  }
  return best;
}

struct VerificationReport {
  ConditionReport conditions;
  bool conditions_valid = false;
  bool gram_identity = false;
  /// Lag conditions and the explicit gram product reach the same verdict.
  [[nodiscard]] bool agreement() const { return conditions_valid == gram_identity; }
  [[nodiscard]] bool valid() const { return conditions_valid && gram_identity; }
};

inline VerificationReport verify_solution(const NhtSpec& spec) {
  VerificationReport out{conditions(spec), false, false};
  out.conditions_valid = out.conditions.satisfied();
  out.gram_identity = gram(spec).is_identity();
  return out;
}

/// Raw candidate count base^n, saturating at uint64 max.
inline std::uint64_t raw_candidate_count(std::uint64_t base, std::size_t n) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (base != 0 && total > std::numeric_limits<std::uint64_t>::max() / base) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    total *= base;
  }
  return total;
}

namespace detail {

// Square roots grouped by their square: roots of t are
// values[offsets[t] .. offsets[t+1]). Only built for moderate moduli.
class SquareRootTable {
 public:
  static constexpr std::uint64_t kMaxTabulated = std::uint64_t{1} << 24;

  SquareRootTable(Modulus m, std::uint64_t lowest) : m_(m), lowest_(lowest) {
    if (m.value() > kMaxTabulated) return;
    const std::uint64_t mv = m.value();
    offsets_.assign(mv + 1, 0);
    for (std::uint64_t x = lowest; x < mv; ++x) ++offsets_[m.mul(x, x) + 1];
    for (std::uint64_t t = 0; t < mv; ++t) offsets_[t + 1] += offsets_[t];
    values_.resize(offsets_[mv]);
    auto fill = offsets_;
    for (std::uint64_t x = lowest; x < mv; ++x) values_[fill[m.mul(x, x)]++] = x;
  }

  template <typename Fn>
  void for_each_root(std::uint64_t t, Fn&& fn) const {
    if (!offsets_.empty()) {
      for (auto i = offsets_[t]; i < offsets_[t + 1]; ++i) fn(values_[i]);
      return;
    }
    for (std::uint64_t x = lowest_; x < m_.value(); ++x) {
      if (m_.mul(x, x) == t) fn(x);
    }
  }

 private:
  Modulus m_;
  std::uint64_t lowest_;
  std::vector<std::uint64_t> offsets_;
  std::vector<std::uint64_t> values_;
};

class LagSearch {
 public:
  LagSearch(const SquareRootTable& roots, Modulus m, std::size_t n, std::uint64_t lowest)
      : roots_(roots), m_(m), n_(n), lags_(n / 2 + 1), lowest_(lowest), coeffs_(n, 0), sums_(n * lags_, 0) {}

  /// All solutions with c_0 == first (n >= 2), or all solutions (n == 1).
  std::vector<Coefficients> run(std::uint64_t first) {
    found_.clear();
    if (n_ == 1) {
      solve_last();
    } else {
      assign(0, first);
      if (n_ == 2) {
        solve_last();
      } else {
        descend(1);
      }
    }
    return std::move(found_);
  }

  [[nodiscard]] std::uint64_t candidates() const { return candidates_; }

 private:
  // sums_[depth * lags_ + k]: lag k restricted to terms whose indices are <= depth.
  void assign(std::size_t j, std::uint64_t value) {
    coeffs_[j] = value;
    const std::uint64_t* prev = j == 0 ? nullptr : &sums_[(j - 1) * lags_];
    std::uint64_t* cur = &sums_[j * lags_];
    for (std::size_t k = 0; k < lags_; ++k) {
      std::uint64_t s = prev ? prev[k] : 0;
      if (k == 0) {
        s = m_.add(s, m_.mul(value, value));
      } else {
        if (j >= k) s = m_.add(s, m_.mul(value, coeffs_[j - k]));
        if (j + k >= n_) s = m_.add(s, m_.mul(value, coeffs_[j + k - n_]));
      }
      cur[k] = s;
    }
  }

  void descend(std::size_t j) {
    for (std::uint64_t v = lowest_; v < m_.value(); ++v) {
      assign(j, v);
      if (j + 2 == n_) {
        solve_last();
      } else {
        descend(j + 1);
      }
    }
  }

  void solve_last() {
    const std::size_t last = n_ - 1;
    const std::uint64_t* s = last == 0 ? nullptr : &sums_[(last - 1) * lags_];
    const std::uint64_t s0 = s ? s[0] : 0;
    const std::uint64_t target = m_.sub(1 % m_.value(), s0);
    roots_.for_each_root(target, [&](std::uint64_t x) {
      ++candidates_;
      for (std::size_t k = 1; k < lags_; ++k) {
        const std::uint64_t linear = m_.add(coeffs_[last - k], coeffs_[k - 1]);
        if (m_.add(s[k], m_.mul(x, linear)) != 0) return;
      }
      coeffs_[last] = x;
      found_.push_back(coeffs_);
    });
  }

  const SquareRootTable& roots_;
  Modulus m_;
  std::size_t n_;
  std::size_t lags_;
  std::uint64_t lowest_;
  Coefficients coeffs_;
  std::vector<std::uint64_t> sums_;
  std::vector<Coefficients> found_;
  std::uint64_t candidates_ = 0;
};

inline NhtSpec to_spec(const SearchConfig& cfg, Coefficients c) {
  return NhtSpec(cfg.modulus, std::move(c), cfg.allow_zero ? ZeroPolicy::allow : ZeroPolicy::reject);
}

inline bool keep(const SearchConfig& cfg, const Coefficients& c) {
  return !cfg.dedup || canonicalize(c, cfg.modulus) == c;
}

}  // namespace detail

inline SolutionStream exhaustive_search(const SearchConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  if (cfg.half_size == 0) throw InvalidSpec("half-size must be at least 1");
  const Modulus m = cfg.modulus;
  const std::uint64_t lowest = cfg.allow_zero ? 0 : 1;
  const std::uint64_t raw = raw_candidate_count(m.value() - lowest, cfg.half_size);
  if (cfg.budget && raw > *cfg.budget) {
    throw BudgetExceeded(std::to_string(raw) + " raw candidates exceed the budget of " + std::to_string(*cfg.budget));
  }

  const detail::SquareRootTable roots(m, lowest);
  const std::size_t n = cfg.half_size;
  const unsigned workers = std::max(1U, cfg.workers);

  // Tasks are the possible values of c_0; n == 1 has a single task.
  std::vector<std::uint64_t> tasks;
  if (n == 1) {
    tasks.push_back(0);
  } else {
    for (std::uint64_t v = lowest; v < m.value(); ++v) tasks.push_back(v);
  }

  SolutionStream out;
  std::uint64_t candidates = 0;
  const auto limit_reached = [&] { return cfg.limit && out.solutions.size() >= *cfg.limit; };

  // Rounds of `workers` tasks; each round is merged in task order before
  // the limit is checked, which keeps output independent of `workers`.
  for (std::size_t begin = 0; begin < tasks.size() && !limit_reached(); begin += workers) {
    const std::size_t end = std::min(tasks.size(), begin + workers);
    std::vector<std::vector<Coefficients>> results(end - begin);
    std::vector<std::uint64_t> counts(end - begin, 0);
    auto work = [&](std::size_t slot) {
      detail::LagSearch search(roots, m, n, lowest);
      auto found = search.run(tasks[begin + slot]);
      std::erase_if(found, [&](const Coefficients& c) { return !detail::keep(cfg, c); });
      results[slot] = std::move(found);
      counts[slot] = search.candidates();
    };
    if (end - begin == 1) {
      work(0);
    } else {
      std::vector<std::jthread> threads;
      threads.reserve(end - begin);
      for (std::size_t slot = 0; slot < end - begin; ++slot) threads.emplace_back(work, slot);
    }
    for (std::size_t slot = 0; slot < results.size(); ++slot) {
      candidates += counts[slot];
      for (auto& c : results[slot]) {
        if (limit_reached()) break;
        out.solutions.push_back(detail::to_spec(cfg, std::move(c)));
      }
    }
  }

  out.summary.count = out.solutions.size();
  out.summary.candidates = candidates;
  out.summary.elapsed = std::chrono::steady_clock::now() - start;
  return out;
}

/// Uniform draw from [lo, m) by rejection on 64-bit outputs.
inline std::uint64_t draw_uniform(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t m) {
  const std::uint64_t span = m - lo;
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t rem = (max % span + 1) % span;  // 2^64 mod span
  for (;;) {
    const std::uint64_t u = rng();
    if (rem == 0 || u <= max - rem) return lo + u % span;
  }
}

inline SolutionStream random_search(const SearchConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  if (cfg.half_size == 0) throw InvalidSpec("half-size must be at least 1");
  const Modulus m = cfg.modulus;
  const std::uint64_t lowest = cfg.allow_zero ? 0 : 1;
  if (lowest >= m.value()) return {};

  std::mt19937_64 rng(cfg.seed);
  std::set<Coefficients> hits;
  Coefficients c(cfg.half_size);
  for (std::uint64_t t = 0; t < cfg.trials; ++t) {
    for (auto& v : c) v = draw_uniform(rng, lowest, m.value());
    const auto r = autocorrelation(c, m);
    const ConditionReport report{m, c.size(), r};
    if (!report.satisfied()) continue;
    hits.insert(cfg.dedup ? canonicalize(c, m) : c);
  }

  SolutionStream out;
  for (const auto& h : hits) {
    if (cfg.limit && out.solutions.size() >= *cfg.limit) break;
    out.solutions.push_back(detail::to_spec(cfg, h));
  }
  out.summary.count = out.solutions.size();
  out.summary.candidates = cfg.trials;
  out.summary.elapsed = std::chrono::steady_clock::now() - start;
  return out;
}

inline SolutionStream search(const SearchConfig& cfg) {
  return cfg.mode == SearchMode::exhaustive ? exhaustive_search(cfg) : random_search(cfg);
}

}  // namespace nht
