#include <gtest/gtest.h>

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "nht/solver.hpp"
#include "nht/spec_io.hpp"
#include "oracle.hpp"

using namespace nht;

namespace {

SearchConfig exhaustive(std::size_t n, std::int64_t m) {
  SearchConfig cfg;
  cfg.half_size = n;
  cfg.modulus = Modulus(m);
  cfg.mode = SearchMode::exhaustive;
  return cfg;
}

std::vector<Coefficients> coeffs_of(const SolutionStream& s) {
  std::vector<Coefficients> out;
  for (const auto& spec : s.solutions) out.push_back(spec.coeffs());
  return out;
}

std::vector<Coefficients> brute(std::size_t n, std::int64_t m, std::int64_t lo = 1) {
  std::vector<Coefficients> out;
  for (const auto& v : oracle::brute_force_solutions(n, m, lo)) out.emplace_back(v.begin(), v.end());
  return out;
}

}  // namespace

TEST(ExhaustiveSearch, Examples) {
  EXPECT_TRUE(exhaustive_search(exhaustive(2, 5)).solutions.empty());
  const auto m15 = coeffs_of(exhaustive_search(exhaustive(2, 15)));
  EXPECT_NE(std::find(m15.begin(), m15.end(), Coefficients{5, 6}), m15.end());
  const auto m7 = coeffs_of(exhaustive_search(exhaustive(7, 7)));
  EXPECT_NE(std::find(m7.begin(), m7.end(), Coefficients{6, 2, 1, 4, 2, 1, 4}), m7.end());
}

TEST(ExhaustiveSearch, EqualsBruteForceGramFiltering) {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (std::int64_t m = 2; m <= 13; ++m) {
      const auto got = coeffs_of(exhaustive_search(exhaustive(n, m)));
      ASSERT_EQ(got, brute(n, m)) << "n=" << n << " m=" << m;  // same set, same order
    }
  }
}

TEST(ExhaustiveSearch, AllowZeroEqualsBruteForce) {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (std::int64_t m : {3, 5, 8, 9, 13}) {
      auto cfg = exhaustive(n, m);
      cfg.allow_zero = true;
      const auto stream = exhaustive_search(cfg);
      ASSERT_EQ(coeffs_of(stream), brute(n, m, 0)) << "n=" << n << " m=" << m;
      for (const auto& s : stream.solutions) ASSERT_EQ(s.zero_policy(), ZeroPolicy::allow);
    }
  }
}

TEST(ExhaustiveSearch, BudgetGuard) {
  auto cfg = exhaustive(8, 13);
  cfg.budget = 1000;
  EXPECT_THROW(exhaustive_search(cfg), BudgetExceeded);
  cfg.half_size = 2;  // 12^2 = 144 fits
  EXPECT_NO_THROW(exhaustive_search(cfg));
  // (2^31 - 2)^2 exceeds the default budget.
  EXPECT_THROW(exhaustive_search(exhaustive(2, (std::int64_t{1} << 31) - 1)), BudgetExceeded);
  EXPECT_EQ(raw_candidate_count(12, 8), 429981696U);
  EXPECT_EQ(raw_candidate_count(1U << 31, 3), std::numeric_limits<std::uint64_t>::max());
}

TEST(ExhaustiveSearch, LimitTruncatesInOrder) {
  auto cfg = exhaustive(7, 7);
  const auto full = coeffs_of(exhaustive_search(cfg));
  ASSERT_GT(full.size(), 5U);
  cfg.limit = 5;
  for (unsigned workers : {1U, 3U}) {
    cfg.workers = workers;
    const auto head = coeffs_of(exhaustive_search(cfg));
    EXPECT_EQ(head, std::vector<Coefficients>(full.begin(), full.begin() + 5));
  }
}

TEST(ExhaustiveSearch, IndependentOfWorkerCount) {
  auto cfg = exhaustive(6, 13);
  const auto one = exhaustive_search(cfg);
  for (unsigned workers : {2U, 4U, 7U}) {
    cfg.workers = workers;
    const auto many = exhaustive_search(cfg);
    EXPECT_EQ(coeffs_of(many), coeffs_of(one)) << workers;
    EXPECT_EQ(many.summary.candidates, one.summary.candidates);
  }
}

TEST(ExhaustiveSearch, LargeModulusSingleCoefficient) {
  // n = 1: c^2 == 1; the square-root table is skipped above 2^24.
  const auto got = coeffs_of(exhaustive_search(exhaustive(1, 1 << 25)));
  std::vector<Coefficients> expected;
  for (auto s : sqrt_of_unity_set(Modulus(1 << 25))) expected.push_back({s});
  EXPECT_EQ(got, expected);
}

TEST(Orbit, Examples) {
  const Modulus m15(15);
  const auto o = orbit(Coefficients{5, 6}, m15);
  const std::vector<Coefficients> expected{{5, 6}, {5, 9}, {6, 5}, {6, 10}, {9, 5}, {9, 10}, {10, 6}, {10, 9}};
  EXPECT_EQ(o, expected);

  const Coefficients c{6, 2, 1, 4, 2, 1, 4};
  const auto o7 = orbit(c, Modulus(7));
  EXPECT_NE(std::find(o7.begin(), o7.end(), c), o7.end());
  EXPECT_EQ(reverse(c), (Coefficients{4, 1, 2, 4, 1, 2, 6}));
  EXPECT_TRUE(is_valid(NhtSpec(Modulus(7), reverse(c))));
}

TEST(Canonicalize, Examples) {
  const Modulus m15(15);
  EXPECT_EQ(canonicalize(Coefficients{6, 5}, m15), (Coefficients{5, 6}));
  const Coefficients c{6, 2, 1, 4, 2, 1, 4};
  const Modulus m7(7);
  const auto canon = canonicalize(c, m7);
  EXPECT_EQ(canonicalize(canon, m7), canon);
  EXPECT_EQ(canonicalize(rotate(c, 3), m7), canon);
  const auto o = orbit(c, m7);
  EXPECT_EQ(canon, o.front());
}

TEST(SolverProperties, OrbitClosureAndDedup) {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (std::int64_t m : {5, 7, 8, 9, 11, 13, 15}) {
      const Modulus mod(m);
      const auto all = exhaustive_search(exhaustive(n, m));
      std::set<Coefficients> full;
      for (const auto& s : all.solutions) {
        full.insert(s.coeffs());
        for (const auto& member : orbit(s.coeffs(), mod)) {
          ASSERT_TRUE(is_valid(NhtSpec(mod, member))) << "orbit member invalid";
        }
      }

      auto cfg = exhaustive(n, m);
      cfg.dedup = true;
      const auto reps = exhaustive_search(cfg);
      std::set<Coefficients> covered;
      std::set<Coefficients> canon_seen;
      for (const auto& s : reps.solutions) {
        ASSERT_TRUE(canon_seen.insert(canonicalize(s.coeffs(), mod)).second) << "two representatives share an orbit";
        for (const auto& member : orbit(s.coeffs(), mod)) covered.insert(member);
      }
      ASSERT_EQ(covered, full) << "n=" << n << " m=" << m;
    }
  }
}

TEST(RandomSearch, Examples) {
  SearchConfig cfg;
  cfg.mode = SearchMode::randomized;
  cfg.half_size = 2;
  cfg.modulus = Modulus(5);
  cfg.trials = 10000;
  cfg.seed = 1;
  EXPECT_TRUE(random_search(cfg).solutions.empty());
  cfg.trials = 0;
  cfg.modulus = Modulus(15);
  EXPECT_TRUE(random_search(cfg).solutions.empty());
}

TEST(RandomSearch, EveryHitPassesGramOracle) {
  SearchConfig cfg;
  cfg.mode = SearchMode::randomized;
  cfg.half_size = 7;
  cfg.modulus = Modulus(29);
  cfg.trials = 1'000'000;
  cfg.seed = 0x5eed;
  const auto stream = random_search(cfg);
  EXPECT_EQ(stream.summary.candidates, cfg.trials);
  for (const auto& s : stream.solutions) {
    const oracle::Vec c(s.coeffs().begin(), s.coeffs().end());
    EXPECT_TRUE(oracle::gram_is_identity(c, 29)) << to_json_line(s);
  }
}

TEST(RandomSearch, DeterministicAndFindsSmallCaseSolutions) {
  SearchConfig cfg;
  cfg.mode = SearchMode::randomized;
  cfg.half_size = 3;
  cfg.modulus = Modulus(13);
  cfg.trials = 20000;
  cfg.seed = 42;
  const auto a = coeffs_of(random_search(cfg));
  const auto b = coeffs_of(random_search(cfg));
  EXPECT_EQ(a, b);
  ASSERT_FALSE(a.empty());
  EXPECT_TRUE(std::is_sorted(a.begin(), a.end()));
  const auto all = brute(3, 13);
  for (const auto& c : a) EXPECT_TRUE(std::binary_search(all.begin(), all.end(), c));
}

TEST(RandomSearch, DrawIsInRangeAndReproducible) {
  std::mt19937_64 a(9);
  std::mt19937_64 b(9);
  for (int i = 0; i < 10000; ++i) {
    const auto x = draw_uniform(a, 1, 29);
    ASSERT_GE(x, 1U);
    ASSERT_LT(x, 29U);
    ASSERT_EQ(x, draw_uniform(b, 1, 29));
  }
  // First draws for seed 0: 1 + u mod 210 of the raw mt19937_64 outputs.
  std::mt19937_64 rng(0);
  std::vector<std::uint64_t> first;
  for (int i = 0; i < 5; ++i) first.push_back(draw_uniform(rng, 1, 211));
  EXPECT_EQ(first, (std::vector<std::uint64_t>{25, 18, 74, 49, 167}));
}

TEST(VerifySolution, Examples) {
  for (const auto& [m, c] : std::vector<std::pair<std::int64_t, Coefficients>>{
           {139, {18, 8, 4, 2, 1, 70, 35}},
           {211, {155, 98, 196, 181, 151, 91, 182}},
           {157, {66, 133, 109, 61, 122, 87, 17, 34}},
       }) {
    const auto report = verify_solution(NhtSpec(Modulus(m), c));
    EXPECT_TRUE(report.valid()) << m;
    EXPECT_TRUE(report.gram_identity);
    EXPECT_TRUE(report.agreement());
  }
  const auto bad = verify_solution(NhtSpec(Modulus(30), {3, 15, 22, 11, 20, 10, 5}));
  EXPECT_FALSE(bad.valid());
  EXPECT_TRUE(bad.agreement());
  EXPECT_EQ(bad.conditions.residues[0], 14U);
}
