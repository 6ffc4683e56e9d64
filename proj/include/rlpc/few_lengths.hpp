#pragma once

#include <cstddef>
#include <vector>

#include "rlpc/reserved_dp.hpp"

namespace rlpc {

unsigned ceil_log2(std::size_t n);

// Length sets worth trying when at most g distinct lengths may be used, each
// with exactly g elements, in lexicographic order:
//   g = 1: { ceil(log2 n) }
//   g = 2: 1 <= a <= ceil(log2 n) - 1, a < b <= 2 ceil(log2 n) - 1
//   g > 2: first length <= ceil(log2 n) - 1, consecutive gaps <= ceil(log2 n)
// Infeasible sets are dropped. Throws BadParameter for g < 1.
std::vector<LengthSet> candidate_sets(std::size_t n, std::size_t g);

struct GLengthEntry {
  std::size_t g_prime = 0;
  LengthSet lengths;
  Solution solution;
};

struct GSearchReport {
  std::size_t g = 0;
  std::vector<GLengthEntry> best_per_g;  // index g' - 1
  std::size_t candidates_tried = 0;
};

// Best code using at most g' distinct lengths, for every g' <= g. A g' entry
// keeps the (g'-1) winner unless one of its own candidates is strictly cheaper.
GSearchReport solve_g_lengths(const Pmf& pmf, std::size_t g, const CostFunction& cost = {},
                              const DpOptions& options = {});

}  // namespace rlpc
