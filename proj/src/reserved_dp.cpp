#include "rlpc/reserved_dp.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

#include "rlpc/error.hpp"

namespace rlpc {

CostGrid::CostGrid(std::size_t n, std::size_t levels) : n_(n), levels_(levels) {
  costs_.resize(levels + 1);
  preds_.resize(levels + 1);
}

bool CostGrid::in_layout(std::size_t upsilon, std::size_t eta) const noexcept {
  return n_ >= 2 && upsilon <= n_ - 2 && upsilon + eta <= n_ - 1;
}

std::size_t CostGrid::cell_index(std::size_t upsilon, std::size_t eta) const noexcept {
  const std::size_t d = upsilon + eta;
  return d * (d + 1) / 2 + upsilon;
}

std::size_t CostGrid::cell_count() const noexcept {
  // Rows d = 0..n-2 hold d+1 cells; row n-1 is capped at upsilon <= n-2.
  return (n_ - 1) * n_ / 2 + (n_ - 1);
}

double CostGrid::cost(std::size_t level, std::size_t upsilon, std::size_t eta) const {
  if (!has_costs(level)) fail(ErrorKind::BadParameter, "costs of level " + std::to_string(level) + " not retained");
  if (!in_layout(upsilon, eta)) return kUnreachable;
  return costs_[level][cell_index(upsilon, eta)];
}

std::uint32_t CostGrid::pred(std::size_t level, std::size_t upsilon, std::size_t eta) const {
  if (!has_preds(level)) return kNoPredecessor;
  if (!in_layout(upsilon, eta)) return kNoPredecessor;
  return preds_[level][cell_index(upsilon, eta)];
}

std::vector<DpState> CostGrid::finite_states(std::size_t level) const {
  std::vector<DpState> out;
  if (!has_costs(level)) fail(ErrorKind::BadParameter, "costs of level " + std::to_string(level) + " not retained");
  const auto& row = costs_[level];
  for (std::size_t d = 0; d + 1 <= n_; ++d)
    for (std::size_t u = 0; u <= std::min(d, n_ - 2); ++u)
      if (std::isfinite(row[cell_index(u, d - u)])) out.push_back({level, u, d - u});
  return out;
}

namespace {

// eta << shift, saturated at cap; any value >= cap behaves identically downstream.
std::size_t shift_saturated(std::size_t eta, unsigned shift, std::size_t cap) {
  if (eta == 0) return 0;
  if (shift >= 63) return cap;
  const std::size_t limit = cap >> shift;
  if (eta > limit) return cap;
  return std::min(eta << shift, cap);
}

}  // namespace

bool satisfies_expansion_bound(const DpState& state, unsigned gap, std::size_t n) {
  if (state.upsilon >= n) return true;
  const std::size_t room = n - state.upsilon;
  // eta*2^gap - (2^gap - 2) = (eta - 1)*2^gap + 2, nonpositive when eta == 0.
  if (state.eta == 0) return true;
  const std::size_t excess = shift_saturated(state.eta - 1, gap, 2 * n + 4);
  return excess + 2 <= room;
}

CostGrid dp_grids(const Pmf& pmf, const LengthSet& ls, const CostFunction& cost, const DpOptions& options) {
  const std::size_t n = pmf.size();
  if (n < 2) fail(ErrorKind::EmptyOrSingleton, "need at least two symbols");
  if (truncate_length_set(ls, n) != ls)
    fail(ErrorKind::BadParameter, "length set " + ls.to_string() + " is not truncated for n = " + std::to_string(n));
  cost.validate_for(ls);
  const simd::RelaxFn relax = simd::relax_kernel(options.isa);

  const std::size_t levels = ls.size();
  CostGrid grid(n, levels);
  const std::size_t cells = grid.cell_count();
  const CumulativeTable F = cdf(pmf);
  const std::size_t eta_cap = 2 * n;

  std::vector<double> previous(cells, kUnreachable);
  previous[grid.cell_index(0, 1)] = 0.0;
  if (options.retain_costs) grid.costs_[0] = previous;

  unsigned previous_lambda = 0;
  double previous_phi = cost.phi_at_zero();
  for (std::size_t m = 1; m <= levels; ++m) {
    const unsigned lambda = ls[m - 1];
    const unsigned shift = lambda - previous_lambda;
    const double phi = cost.phi(lambda);
    const double increment = phi - previous_phi;
    const bool partial = m < levels;

    std::vector<double> current;
    std::vector<std::uint32_t> preds;
    if (partial) {
      current.assign(cells, kUnreachable);
      preds.assign(cells, kNoPredecessor);
    }

    for (std::size_t d = 0; d < n; ++d) {
      const std::size_t row = d * (d + 1) / 2;
      const std::size_t width = std::min(d, n - 2) + 1;
      for (std::size_t upsilon = 0; upsilon < width; ++upsilon) {
        const double base = previous[row + upsilon];
        if (base == kUnreachable) continue;
        const std::size_t eta = d - upsilon;
        const std::size_t eta_next = shift_saturated(eta, shift, eta_cap);
        const double offer = base + increment * (1.0 - F.F[upsilon]);
        const std::size_t reach = upsilon + eta_next;

        if (partial) {
          // Successor (u', eta_next - (u' - upsilon)) lies on diagonal `reach`.
          const std::size_t lo = std::max(upsilon, 2 * reach > n ? 2 * reach - n : std::size_t{0});
          const std::size_t hi = std::min(reach, n - 2);
          if (lo <= hi) {
            assert(reach <= n - 1);
            const std::size_t at = reach * (reach + 1) / 2 + lo;
            relax(current.data() + at, preds.data() + at, hi - lo + 1, offer, static_cast<std::uint32_t>(upsilon));
          }
        }
        if (reach >= n && offer < grid.best_.cost) {
          grid.best_ = {true, offer, m, reach - n, upsilon, eta};
        }
      }
    }

    if (partial) {
      grid.preds_[m] = std::move(preds);
      if (options.retain_costs) grid.costs_[m] = current;
      previous = std::move(current);
    }
    previous_lambda = lambda;
    previous_phi = phi;
  }

  if (!grid.best_.found) fail(ErrorKind::Infeasible, "no finished tree within " + ls.to_string());
  return grid;
}

namespace {

void walk_down(const CostGrid& grid, const LengthSet& ls, DpState state, LengthVector& lengths,
               std::vector<DpState>* path) {
  while (state.level >= 1) {
    if (path) path->push_back(state);
    const std::uint32_t p = grid.pred(state.level, state.upsilon, state.eta);
    if (p == kNoPredecessor || p > state.upsilon)
      fail(ErrorKind::CorruptGrid, "no predecessor at level " + std::to_string(state.level));
    const unsigned lambda = ls[state.level - 1];
    const unsigned lower = state.level >= 2 ? ls[state.level - 2] : 0;
    const std::size_t placed = state.upsilon - p;
    std::fill(lengths.begin() + static_cast<std::ptrdiff_t>(p),
              lengths.begin() + static_cast<std::ptrdiff_t>(state.upsilon), lambda);
    const std::size_t nodes = state.eta + placed;
    const unsigned gap = lambda - lower;
    if (gap < 64 && (nodes & ((std::size_t{1} << gap) - 1)) != 0)
      fail(ErrorKind::CorruptGrid, "node count does not divide at level " + std::to_string(state.level));
    state = {state.level - 1, p, gap < 64 ? nodes >> gap : 0};
  }
  if (state.upsilon != 0 || state.eta != 1) fail(ErrorKind::CorruptGrid, "backtrack did not end at the root");
  if (path) std::reverse(path->begin(), path->end());
}

}  // namespace

LengthVector reconstruct_partial(const CostGrid& grid, const LengthSet& ls, const DpState& state) {
  LengthVector lengths(state.upsilon, 0);
  walk_down(grid, ls, state, lengths, nullptr);
  return lengths;
}

BacktrackResult backtrack_path(const CostGrid& grid, const LengthSet& ls) {
  const FinishedTree& best = grid.best();
  if (!best.found) fail(ErrorKind::CorruptGrid, "grid has no finished tree");
  const std::size_t n = grid.n();
  BacktrackResult result;
  result.lengths.assign(n, 0);
  std::fill(result.lengths.begin() + static_cast<std::ptrdiff_t>(best.chi), result.lengths.end(), ls[best.level - 1]);
  walk_down(grid, ls, {best.level - 1, best.chi, best.pred_eta}, result.lengths, &result.path);

#ifndef NDEBUG
  for (const DpState& s : result.path) assert(satisfies_expansion_bound(s, ls[s.level] - ls[s.level - 1], n));
#endif
  return result;
}

LengthVector backtrack(const CostGrid& grid, const LengthSet& ls) { return backtrack_path(grid, ls).lengths; }

Solution solve_reserved(const Pmf& pmf, const LengthSet& ls, const CostFunction& cost, const DpOptions& options) {
  const std::size_t n = pmf.size();
  if (n < 2) fail(ErrorKind::EmptyOrSingleton, "need at least two symbols");
  Solution s;
  s.lambda_used = truncate_length_set(ls, n);
  s.cost_function = cost;
  const CostGrid grid = dp_grids(pmf, s.lambda_used, cost, options);
  s.lengths = backtrack(grid, s.lambda_used);
  s.codebook = assign_canonical(s.lengths);
  s.kraft = kraft_sum(s.lengths);
  s.cost = cost.phi_inverse(grid.best().cost + cost.phi_at_zero());
  return s;
}

}  // namespace rlpc
