#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <tuple>

#include "doctest.h"
#include "rlpc/error.hpp"
#include "rlpc/oracle.hpp"
#include "rlpc/reserved_dp.hpp"
#include "test_support.hpp"

using namespace rlpc;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const CodingError& e) {
    return e.kind();
  }
  FAIL("expected a CodingError");
  return ErrorKind::UsageError;
}

const LengthSet kPowersOfTwo{1, 2, 4, 8};
const LengthVector kBenfordLengths{2, 2, 4, 4, 4, 4, 4, 4, 4};

CostGrid benford_grid() { return dp_grids(benford_pmf(), kPowersOfTwo, {}, {simd::default_isa(), true}); }

// (level, upsilon, eta) -> (printed cost, printed leaves-above)
using Fixture = std::map<std::tuple<std::size_t, std::size_t, std::size_t>, std::pair<double, std::uint32_t>>;

Fixture table_fixture() {
  return {
      {{1, 2, 0}, {1.000, 0}}, {{1, 1, 1}, {1.000, 0}}, {{1, 0, 2}, {1.000, 0}},

      {{2, 2, 0}, {1.523, 2}}, {{2, 3, 0}, {1.699, 1}}, {{2, 4, 0}, {2.000, 0}},
      {{2, 2, 1}, {1.699, 1}}, {{2, 3, 1}, {2.000, 0}},
      {{2, 1, 2}, {1.699, 1}}, {{2, 2, 2}, {2.000, 0}},
      {{2, 1, 3}, {2.000, 0}},
      {{2, 0, 4}, {2.000, 0}},

      // the first row of the level-4 grid is eta = 0
      {{3, 2, 0}, {2.569, 2}}, {{3, 3, 0}, {2.495, 3}}, {{3, 4, 0}, {2.602, 4}},
      {{3, 6, 0}, {2.745, 2}}, {{3, 7, 0}, {2.796, 3}},
      {{3, 5, 1}, {2.745, 2}}, {{3, 6, 1}, {2.796, 3}},
      {{3, 4, 2}, {2.745, 2}}, {{3, 5, 2}, {2.796, 3}},
      {{3, 3, 3}, {2.745, 2}},
  };
}

}  // namespace

TEST_CASE("Benford grids reproduce the published table") {
  const CostGrid grid = benford_grid();
  const Fixture fixture = table_fixture();
  for (std::size_t m = 1; m <= 3; ++m) {
    std::size_t finite = 0;
    for (std::size_t u = 0; u <= 7; ++u)
      for (std::size_t eta = 0; eta <= 4; ++eta) {
        const double c = grid.cost(m, u, eta);
        const auto it = fixture.find({m, u, eta});
        if (it == fixture.end()) {
          CHECK_MESSAGE(std::isinf(c), "unexpected finite cell m=" << m << " u=" << u << " eta=" << eta);
          continue;
        }
        ++finite;
        CHECK(std::abs(c - it->second.first) < 0.0005);
        CHECK(grid.pred(m, u, eta) == it->second.second);
      }
    CHECK(finite == grid.finite_states(m).size());
  }
  CHECK(grid.cost(0, 0, 1) == 0.0);
  CHECK(grid.finite_states(0).size() == 1);
}

TEST_CASE("Benford best finished tree") {
  const CostGrid grid = benford_grid();
  const FinishedTree& best = grid.best();
  REQUIRE(best.found);
  // level-2 state (2,2) costs exactly 2; seven symbols move down two levels
  const double expected = 2.0 + 2.0 * (1.0 - std::log10(3.0));
  CHECK(best.cost == doctest::Approx(expected).epsilon(1e-14));
  CHECK(std::abs(best.cost - 3.046) < 0.001);
  CHECK(best.level == 3);
  CHECK(best.chi == 2);
  CHECK(best.pred_eta == 2);
  // 8 nodes at depth 4, 7 leaves used
  CHECK(best.leftover_eta == 1);
}

TEST_CASE("backtrack") {
  const CostGrid grid = benford_grid();
  const BacktrackResult r = backtrack_path(grid, kPowersOfTwo);
  CHECK(r.lengths == kBenfordLengths);
  REQUIRE(r.path.size() == 2);
  CHECK(r.path[0] == DpState{1, 0, 2});
  CHECK(r.path[1] == DpState{2, 2, 2});

  const std::vector<double> u3{1, 1, 1};
  const Pmf p3 = make_pmf(u3, true);
  CHECK(backtrack(dp_grids(p3, LengthSet{1, 3}), LengthSet{1, 3}) == LengthVector{1, 3, 3});

  const std::vector<double> u4{1, 1, 1, 1};
  CHECK(backtrack(dp_grids(make_pmf(u4, true), LengthSet{2}), LengthSet{2}) == LengthVector{2, 2, 2, 2});

  CHECK(kind_of([] { backtrack(CostGrid{}, LengthSet{1}); }) == ErrorKind::CorruptGrid);
}

TEST_CASE("solve_reserved on the worked examples") {
  const Solution s = solve_reserved(benford_pmf(), kPowersOfTwo);
  CHECK(s.lengths == kBenfordLengths);
  CHECK(std::abs(s.cost - 3.046) < 0.001);
  CHECK(s.lambda_used == kPowersOfTwo);
  CHECK(s.kraft.to_string() == "15/2^4");
  CHECK(s.codebook.lengths() == s.lengths);
  CHECK(s.cost == doctest::Approx(expected_length(benford_pmf(), s.lengths)).epsilon(1e-12));

  const Solution wide = solve_reserved(benford_pmf(), LengthSet{1, 2, 4, 8, 16, 32});
  CHECK(wide.lambda_used == kPowersOfTwo);
  CHECK(wide.lengths == kBenfordLengths);

  const Solution z = solve_reserved(zipf_pmf(4096), LengthSet{5, 9, 14});
  CHECK(std::abs(z.cost - 9.27) < 0.01);
  CHECK(distinct_lengths(z.lengths) <= 3);

  const std::vector<double> u3{1, 1, 1};
  const Solution d = solve_reserved(make_pmf(u3, true), LengthSet{1, 3});
  CHECK(d.lengths == LengthVector{1, 3, 3});
  CHECK(d.kraft.to_double() == 0.75);
}

TEST_CASE("edge cases: two symbols, huge gaps, errors") {
  const std::vector<double> two{0.9, 0.1};
  const Pmf p2 = make_pmf(two, false);
  CHECK(solve_reserved(p2, LengthSet{1}).lengths == LengthVector{1, 1});
  CHECK(solve_reserved(p2, LengthSet{3, 7}).lengths == LengthVector{3, 3});

  const std::vector<double> u3{1, 1, 1};
  const Pmf p3 = make_pmf(u3, true);
  CHECK(solve_reserved(p3, LengthSet{1, 60}).lengths == LengthVector{1, 60, 60});
  CHECK(solve_reserved(p3, LengthSet{1, 64}).lengths == LengthVector{1, 64, 64});
  CHECK(solve_reserved(p3, LengthSet{40, 64}).lengths == LengthVector{40, 40, 40});

  CHECK(kind_of([] { solve_reserved(benford_pmf(), LengthSet{1, 2}); }) == ErrorKind::Infeasible);
  CHECK(kind_of([] { dp_grids(benford_pmf(), LengthSet{1, 8, 9}); }) == ErrorKind::BadParameter);
  CHECK(kind_of([] { dp_grids(benford_pmf(), kPowersOfTwo, CostFunction::table({1, 2, 3})); }) ==
        ErrorKind::BadParameter);
}

TEST_CASE("grid invariants: state bounds and Kraft bookkeeping") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 2 + rng() % 30;
    const Pmf pmf = testing::random_pmf(rng, n);
    std::vector<unsigned> v;
    for (unsigned l = 1; l <= 10; ++l)
      if (rng() % 2) v.push_back(l);
    v.push_back(10);
    const LengthSet ls = truncate_length_set(LengthSet(v), n);
    const CostGrid grid = dp_grids(pmf, ls, {}, {simd::default_isa(), true});
    for (std::size_t m = 1; m < ls.size(); ++m) {
      for (const DpState& s : grid.finite_states(m)) {
        CHECK(2 * s.eta <= n - s.upsilon);
        CHECK(s.upsilon <= n - 2);
        CHECK(s.eta <= n / 2);
        const LengthVector partial = reconstruct_partial(grid, ls, s);
        CHECK(std::is_sorted(partial.begin(), partial.end()));
        for (unsigned l : partial) CHECK(ls.contains(l));
        for (unsigned l : partial) CHECK(l <= ls[m - 1]);
        // partial Kraft sum == 1 - eta * 2^-lambda_m, exactly
        const unsigned lambda = ls[m - 1];
        unsigned __int128 numerator = 0;
        for (unsigned l : partial) numerator += static_cast<unsigned __int128>(1) << (lambda - l);
        CHECK(numerator + s.eta == static_cast<unsigned __int128>(1) << lambda);
        // the stored cost is the partial objective with the rest parked at lambda_m
        double expected = 0.0;
        for (std::size_t i = 0; i < n; ++i) expected += pmf[i] * (i < partial.size() ? partial[i] : lambda);
        CHECK(grid.cost(m, s.upsilon, s.eta) == doctest::Approx(expected).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("agrees with exhaustive search on small instances") {
  std::mt19937_64 rng(41);
  for (std::size_t n = 2; n <= 8; ++n) {
    for (int trial = 0; trial < 6; ++trial) {
      const Pmf pmf = testing::random_pmf(rng, n);
      for (const LengthSet& ls : testing::feasible_subsets(8, n)) {
        const Solution s = solve_reserved(pmf, ls);
        const oracle::OracleResult r = oracle::brute_force(pmf, ls);
        CHECK(std::abs(s.cost - r.best_cost) <= 1e-9);
        const auto& opt = r.optimal_vectors;
        CHECK(std::find(opt.begin(), opt.end(), s.lengths) != opt.end());
        unsigned shortest = 64;
        for (const auto& v : opt) shortest = std::min(shortest, testing::max_length(v));
        CHECK(testing::max_length(s.lengths) == shortest);
        CHECK(std::is_sorted(s.lengths.begin(), s.lengths.end()));
      }
    }
  }
}

TEST_CASE("exact ties resolve to the smallest maximum length") {
  // p1 = p3 + p4 makes {2,2,2,2} and {1,2,3,3} cost exactly 2
  const std::vector<double> w{0.375, 0.25, 0.1875, 0.1875};
  const Pmf pmf = make_pmf(w, false);
  const LengthSet ls{1, 2, 3};
  const oracle::OracleResult r = oracle::brute_force(pmf, ls);
  CHECK(r.best_cost == 2.0);
  CHECK(r.optimal_vectors.size() == 2);
  const Solution s = solve_reserved(pmf, ls);
  CHECK(s.cost == 2.0);
  CHECK(s.lengths == LengthVector{2, 2, 2, 2});
}

TEST_CASE("identity cost reproduces the default solve field for field") {
  std::mt19937_64 rng(43);
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = 2 + rng() % 40;
    const Pmf pmf = testing::random_pmf(rng, n);
    const LengthSet ls{2, 3, 5, 7, 9};
    if (!is_feasible(ls, n)) continue;
    CHECK(solve_reserved(pmf, ls, CostFunction::identity()) == solve_reserved(pmf, ls));
  }
  CHECK(solve_reserved(benford_pmf(), kPowersOfTwo, CostFunction::identity()) ==
        solve_reserved(benford_pmf(), kPowersOfTwo));
}

TEST_CASE("quasiarithmetic costs agree with exhaustive search") {
  std::mt19937_64 rng(47);
  for (double t : {0.5, 1.0, 2.0}) {
    const CostFunction phi = CostFunction::exponential(t);
    for (std::size_t n = 2; n <= 7; ++n) {
      const Pmf pmf = testing::random_pmf(rng, n);
      for (const LengthSet& ls : testing::feasible_subsets(7, n)) {
        const Solution s = solve_reserved(pmf, ls, phi);
        const oracle::OracleResult r = oracle::brute_force(pmf, ls, phi);
        CHECK(std::abs(s.cost - r.best_cost) <= 1e-9);
        double acc = 0.0;
        for (std::size_t i = 0; i < n; ++i) acc += pmf[i] * phi.phi(s.lengths[i]);
        CHECK(phi.phi_inverse(acc) == doctest::Approx(s.cost).epsilon(1e-12));
      }
    }
  }
  const CostFunction table = CostFunction::table({1, 2, 5, 6, 9, 10, 20, 21});
  for (std::size_t n = 2; n <= 7; ++n) {
    const Pmf pmf = testing::random_pmf(rng, n);
    for (const LengthSet& ls : testing::feasible_subsets(8, n)) {
      const Solution s = solve_reserved(pmf, ls, table);
      CHECK(std::abs(s.cost - oracle::brute_force(pmf, ls, table).best_cost) <= 1e-9);
    }
  }
}

TEST_CASE("scaling the weights leaves the lengths unchanged") {
  std::mt19937_64 rng(53);
  std::uniform_real_distribution<double> weight(0.5, 10.0);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 2 + rng() % 25;
    std::vector<double> w(n);
    for (auto& x : w) x = weight(rng);
    std::vector<double> scaled = w;
    const double k = std::exp2(static_cast<double>(rng() % 20) - 10.0) * 1.37;
    for (auto& x : scaled) x *= k;
    const LengthSet ls{1, 3, 4, 6, 9};
    CHECK(solve_reserved(make_pmf(w, true), ls).lengths == solve_reserved(make_pmf(scaled, true), ls).lengths);
  }
}

TEST_CASE("optimal paths satisfy the expansion bound") {
  std::mt19937_64 rng(59);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 2 + rng() % 40;
    const Pmf pmf = testing::random_pmf(rng, n);
    std::vector<unsigned> v;
    for (unsigned l = 1; l <= 12; ++l)
      if (rng() % 2) v.push_back(l);
    v.push_back(12);
    const LengthSet ls = truncate_length_set(LengthSet(v), n);
    const CostGrid grid = dp_grids(pmf, ls);
    for (const DpState& s : backtrack_path(grid, ls).path)
      CHECK(satisfies_expansion_bound(s, ls[s.level] - ls[s.level - 1], n));
  }
  CHECK(satisfies_expansion_bound({1, 0, 2}, 1, 9));
  CHECK(satisfies_expansion_bound({2, 2, 2}, 2, 9));
  CHECK_FALSE(satisfies_expansion_bound({2, 2, 3}, 2, 9));  // 3*4 - 2 = 10 > 7
}

TEST_CASE("rolling storage gives the same answer as full retention") {
  std::mt19937_64 rng(61);
  for (int t = 0; t < 20; ++t) {
    const std::size_t n = 2 + rng() % 200;
    const Pmf pmf = testing::random_pmf(rng, n);
    const LengthSet ls = truncate_length_set(LengthSet{3, 5, 6, 8, 11, 13}, n);
    if (!is_feasible(ls, n)) continue;
    const CostGrid rolled = dp_grids(pmf, ls);
    const CostGrid kept = dp_grids(pmf, ls, {}, {simd::default_isa(), true});
    CHECK_FALSE(rolled.has_costs(1));
    CHECK(rolled.best().cost == kept.best().cost);
    CHECK(backtrack(rolled, ls) == backtrack(kept, ls));
  }
}
