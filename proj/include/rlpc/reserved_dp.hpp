#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

#include "rlpc/code_core.hpp"
#include "rlpc/cost_function.hpp"
#include "rlpc/distributions.hpp"
#include "rlpc/simd/relax.hpp"

namespace rlpc {

inline constexpr double kUnreachable = std::numeric_limits<double>::infinity();
inline constexpr std::uint32_t kNoPredecessor = std::numeric_limits<std::uint32_t>::max();

// A partial code tree summarized at an allowed level: `upsilon` symbols have
// codewords no longer than the level, `eta` nodes at the level are internal.
struct DpState {
  std::size_t level = 0;  // index m into the length set, 1-based; 0 is the root
  std::size_t upsilon = 0;
  std::size_t eta = 0;

  friend bool operator==(const DpState&, const DpState&) = default;
};

struct DpOptions {
  simd::Isa isa = simd::default_isa();
  bool retain_costs = false;
};

// Cheapest finished tree seen during the sweep.
struct FinishedTree {
  bool found = false;
  double cost = kUnreachable;
  std::size_t level = 0;         // level where the last symbols were placed
  std::size_t leftover_eta = 0;  // unused nodes left at that level (saturates for huge gaps)
  std::size_t chi = 0;           // symbols placed above that level
  std::size_t pred_eta = 0;      // internal nodes of the predecessor state
};

// Per-level tables of the dynamic program. Each level is stored densely in a
// triangular layout indexed by the diagonal d = upsilon + eta, so the cells one
// predecessor relaxes form a contiguous run. Only cells with d <= n - 1,
// upsilon <= n - 2 exist; others read as unreachable.
class CostGrid {
 public:
  CostGrid() = default;
  CostGrid(std::size_t n, std::size_t levels);

  std::size_t n() const noexcept { return n_; }
  std::size_t levels() const noexcept { return levels_; }
  const FinishedTree& best() const noexcept { return best_; }

  // Costs are kept for every level only when DpOptions::retain_costs was set;
  // otherwise just the root level is present.
  bool has_costs(std::size_t level) const { return level < costs_.size() && !costs_[level].empty(); }
  bool has_preds(std::size_t level) const { return level < preds_.size() && !preds_[level].empty(); }
  double cost(std::size_t level, std::size_t upsilon, std::size_t eta) const;
  std::uint32_t pred(std::size_t level, std::size_t upsilon, std::size_t eta) const;

  bool in_layout(std::size_t upsilon, std::size_t eta) const noexcept;
  std::size_t cell_index(std::size_t upsilon, std::size_t eta) const noexcept;
  std::size_t cell_count() const noexcept;

  // Finite cells of a level, in storage order (diagonal, then upsilon).
  std::vector<DpState> finite_states(std::size_t level) const;

 private:
  friend CostGrid dp_grids(const Pmf&, const LengthSet&, const CostFunction&, const DpOptions&);

  std::size_t n_ = 0;
  std::size_t levels_ = 0;
  std::vector<std::vector<double>> costs_;
  std::vector<std::vector<std::uint32_t>> preds_;
  FinishedTree best_;
};

// The level sweep. `ls` must already be truncated for pmf.size() symbols.
// Throws BadParameter (untruncated set, unusable cost function) or Infeasible.
CostGrid dp_grids(const Pmf& pmf, const LengthSet& ls, const CostFunction& cost = {}, const DpOptions& options = {});

struct BacktrackResult {
  LengthVector lengths;
  // Partial states visited, from level 1 upward, ending at the predecessor of
  // the finishing level.
  std::vector<DpState> path;
};

// Throws CorruptGrid when the predecessor chain is inconsistent.
BacktrackResult backtrack_path(const CostGrid& grid, const LengthSet& ls);
LengthVector backtrack(const CostGrid& grid, const LengthSet& ls);

// Lengths of the `upsilon` shortest codewords of the partial tree stored at state.
LengthVector reconstruct_partial(const CostGrid& grid, const LengthSet& ls, const DpState& state);

// Necessary condition on the partial states of an optimal tree:
// eta * 2^gap - (2^gap - 2) <= n - upsilon, gap being the distance to the next level.
bool satisfies_expansion_bound(const DpState& state, unsigned gap, std::size_t n);

struct Solution {
  LengthVector lengths;
  Codebook codebook;
  double cost = 0.0;  // phi^-1 of the accumulated objective
  LengthSet lambda_used;
  KraftSum kraft;
  CostFunction cost_function;

  friend bool operator==(const Solution& a, const Solution& b) {
    return a.lengths == b.lengths && a.cost == b.cost && a.lambda_used == b.lambda_used && a.kraft == b.kraft &&
           a.cost_function == b.cost_function && a.codebook.lengths() == b.codebook.lengths();
  }
};

// Optimal code with every length drawn from ls. Among optimal codes returns one
// of minimal maximum length. Throws Infeasible.
Solution solve_reserved(const Pmf& pmf, const LengthSet& ls, const CostFunction& cost = {},
                        const DpOptions& options = {});

}  // namespace rlpc
