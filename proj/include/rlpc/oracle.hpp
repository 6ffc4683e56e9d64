#pragma once

#include <cstddef>
#include <vector>

#include "rlpc/code_core.hpp"
#include "rlpc/cost_function.hpp"
#include "rlpc/distributions.hpp"

// Reference solvers for validation. Nothing here shares code with the level
// sweep beyond the value types.
namespace rlpc::oracle {

inline constexpr std::size_t kMaxBruteForceSymbols = 16;
inline constexpr double kOptimalSlack = 1e-12;

struct OracleResult {
  double best_cost = 0.0;
  // Every nondecreasing length vector within kOptimalSlack of best_cost, in
  // enumeration (lexicographic) order.
  std::vector<LengthVector> optimal_vectors;
  std::size_t count_enumerated = 0;
};

// Exhaustive search over nondecreasing vectors in ls^n with Kraft sum <= 1.
// Uses ls as given (no truncation). Throws TooLarge or Infeasible.
OracleResult brute_force(const Pmf& pmf, const LengthSet& ls, const CostFunction& cost = {});

// Two-least-merge Huffman construction; lengths returned nondecreasing.
LengthVector huffman(const Pmf& pmf);

}  // namespace rlpc::oracle
