#include "rlpc/oracle.hpp"

#include <algorithm>
#include <queue>
#include <tuple>

#include "rlpc/error.hpp"

namespace rlpc::oracle {

namespace {

using u128 = unsigned __int128;

struct Search {
  Search(const Pmf& p, const std::vector<unsigned>& l, const CostFunction& c)
      : pmf(p), lambdas(l), cost(c), full(u128{1} << l.back()), top(l.back()), current(p.size(), 0) {}

  const Pmf& pmf;
  const std::vector<unsigned>& lambdas;
  const CostFunction& cost;
  u128 full = 0;  // 2^lambda_max
  unsigned top = 0;
  LengthVector current;
  OracleResult result;

  void visit(std::size_t i, std::size_t first, u128 kraft) {
    const std::size_t n = pmf.size();
    if (i == n) {
      ++result.count_enumerated;
      double acc = 0.0;
      for (std::size_t k = 0; k < n; ++k) acc += pmf[k] * cost.phi(current[k]);
      record(cost.phi_inverse(acc));
      return;
    }
    for (std::size_t j = first; j < lambdas.size(); ++j) {
      // Later codewords are at least this long; the cheapest they can be is
      // one unit of 2^-lambda_max each.
      const u128 unit = u128{1} << (top - lambdas[j]);
      if (kraft + unit + (n - i - 1) > full) continue;
      current[i] = lambdas[j];
      visit(i + 1, j, kraft + unit);
    }
  }

  void record(double value) {
    if (candidates.empty() || value < result.best_cost) {
      result.best_cost = value;
      std::erase_if(candidates, [&](const auto& c) { return c.first > value + kOptimalSlack; });
    }
    if (value <= result.best_cost + kOptimalSlack) candidates.emplace_back(value, current);
  }

  std::vector<std::pair<double, LengthVector>> candidates;
};

}  // namespace

OracleResult brute_force(const Pmf& pmf, const LengthSet& ls, const CostFunction& cost) {
  const std::size_t n = pmf.size();
  if (n > kMaxBruteForceSymbols)
    fail(ErrorKind::TooLarge, "brute force limited to " + std::to_string(kMaxBruteForceSymbols) + " symbols");
  if (!is_feasible(ls, n)) fail(ErrorKind::Infeasible, ls.to_string() + " cannot hold " + std::to_string(n));
  cost.validate_for(ls);

  Search search(pmf, ls.values(), cost);
  search.visit(0, 0, 0);
  if (search.candidates.empty()) fail(ErrorKind::Infeasible, "no prefix code fits " + ls.to_string());
  for (auto& [score, lengths] : search.candidates) search.result.optimal_vectors.push_back(std::move(lengths));
  return std::move(search.result);
}

LengthVector huffman(const Pmf& pmf) {
  const std::size_t n = pmf.size();
  if (n < 2) fail(ErrorKind::EmptyOrSingleton, "huffman needs at least two symbols");

  // (weight, id); ids 0..n-1 are leaves, later ids are merged nodes.
  using Entry = std::tuple<double, std::size_t>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
  for (std::size_t i = 0; i < n; ++i) heap.emplace(pmf[i], i);
  std::vector<std::size_t> parent(2 * n - 1, 0);
  std::size_t next = n;
  while (heap.size() > 1) {
    const auto [wa, a] = heap.top();
    heap.pop();
    const auto [wb, b] = heap.top();
    heap.pop();
    parent[a] = parent[b] = next;
    heap.emplace(wa + wb, next++);
  }
  const std::size_t root = next - 1;
  std::vector<unsigned> depth(2 * n - 1, 0);
  for (std::size_t id = root; id-- > 0;) depth[id] = depth[parent[id]] + 1;

  LengthVector lengths(depth.begin(), depth.begin() + static_cast<std::ptrdiff_t>(n));
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

}  // namespace rlpc::oracle
