#include "rlpc/few_lengths.hpp"

#include <optional>

#include "rlpc/error.hpp"

namespace rlpc {

unsigned ceil_log2(std::size_t n) {
  unsigned bits = 0;
  while (bits < 64 && (std::size_t{1} << bits) < n) ++bits;
  return bits;
}

namespace {

void extend(std::vector<unsigned>& prefix, std::size_t g, unsigned max_gap, std::size_t n,
            std::vector<LengthSet>& out) {
  if (prefix.size() == g) {
    LengthSet ls(prefix);
    if (is_feasible(ls, n)) out.push_back(std::move(ls));
    return;
  }
  const unsigned last = prefix.back();
  for (unsigned next = last + 1; next <= last + max_gap && next <= kMaxCodeLength; ++next) {
    prefix.push_back(next);
    extend(prefix, g, max_gap, n, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<LengthSet> candidate_sets(std::size_t n, std::size_t g) {
  if (g < 1) fail(ErrorKind::BadParameter, "g must be at least 1");
  if (n < 2) fail(ErrorKind::EmptyOrSingleton, "need at least two symbols");
  const unsigned c = ceil_log2(n);
  std::vector<LengthSet> out;
  if (g == 1) {
    out.emplace_back(std::vector<unsigned>{c});
    return out;
  }
  if (g == 2) {
    for (unsigned a = 1; a + 1 <= c; ++a)
      for (unsigned b = a + 1; b + 1 <= 2 * c && b <= kMaxCodeLength; ++b) {
        LengthSet ls{a, b};
        if (is_feasible(ls, n)) out.push_back(std::move(ls));
      }
    return out;
  }
  std::vector<unsigned> prefix;
  for (unsigned a = 1; a + 1 <= c; ++a) {
    prefix.assign(1, a);
    extend(prefix, g, c, n, out);
  }
  return out;
}

GSearchReport solve_g_lengths(const Pmf& pmf, std::size_t g, const CostFunction& cost, const DpOptions& options) {
  if (g < 1) fail(ErrorKind::BadParameter, "g must be at least 1");
  GSearchReport report;
  report.g = g;
  for (std::size_t gp = 1; gp <= g; ++gp) {
    std::optional<GLengthEntry> winner;
    for (const LengthSet& ls : candidate_sets(pmf.size(), gp)) {
      ++report.candidates_tried;
      Solution s = solve_reserved(pmf, ls, cost, options);
      if (!winner || s.cost < winner->solution.cost) winner = GLengthEntry{gp, ls, std::move(s)};
    }
    if (!report.best_per_g.empty()) {
      const GLengthEntry& prior = report.best_per_g.back();
      if (!winner || prior.solution.cost < winner->solution.cost) {
        winner = prior;
        winner->g_prime = gp;
      }
    }
    if (!winner) fail(ErrorKind::Infeasible, "no candidate length set for g' = " + std::to_string(gp));
    report.best_per_g.push_back(std::move(*winner));
  }
  return report;
}

}  // namespace rlpc
