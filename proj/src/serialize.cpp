#include "rlpc/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "rlpc/error.hpp"

namespace rlpc {

std::string format_real(double value, int digits) {
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, value);
  return buf;
}

namespace {

std::string fixed(double value, int decimals) {
  if (std::isinf(value)) return "inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
  return buf;
}

}  // namespace

nlohmann::json to_json(const Codebook& cb) {
  nlohmann::json lengths = nlohmann::json::array();
  nlohmann::json codewords = nlohmann::json::array();
  for (const Codeword& c : cb.codewords) {
    lengths.push_back(c.length);
    codewords.push_back(c.to_bitstring());
  }
  return {{"lengths", lengths}, {"codewords", codewords}};
}

Codebook codebook_from_json(const nlohmann::json& doc) {
  LengthVector lengths;
  std::vector<std::string> words;
  try {
    lengths = doc.at("lengths").get<LengthVector>();
    words = doc.at("codewords").get<std::vector<std::string>>();
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::ParseError, e.what());
  }
  if (lengths.size() != words.size()) fail(ErrorKind::ParseError, "lengths and codewords differ in size");
  Codebook cb = assign_canonical(lengths);
  for (std::size_t i = 0; i < words.size(); ++i)
    if (cb.codewords[i].to_bitstring() != words[i])
      fail(ErrorKind::ParseError, "codeword " + std::to_string(i) + " is not canonical");
  return cb;
}

nlohmann::json to_json(const Solution& s) {
  return {{"lambda_used", s.lambda_used.values()},
          {"lengths", s.lengths},
          {"cost", s.cost},
          {"cost_function", s.cost_function.name()},
          {"kraft", s.kraft.to_string()},
          {"codebook", to_json(s.codebook)}};
}

nlohmann::json to_json(const GSearchReport& report) {
  nlohmann::json out = nlohmann::json::array();
  for (const GLengthEntry& e : report.best_per_g) {
    out.push_back({{"g", e.g_prime},
                   {"length_set", e.lengths.values()},
                   {"distinct_lengths", distinct_lengths(e.solution.lengths)},
                   {"lengths", e.solution.lengths},
                   {"cost", e.solution.cost},
                   {"kraft", e.solution.kraft.to_string()}});
  }
  return out;
}

nlohmann::json to_json(const ThroughputReport& report) {
  return {{"symbols_decoded", report.symbols_decoded},
          {"seconds", report.seconds},
          {"median_seconds", report.median_seconds},
          {"median_symbols_per_second", report.median_symbols_per_second},
          {"checksum", report.checksum}};
}

std::string grid_csv(const CostGrid& grid) {
  std::ostringstream out;
  out << "m,upsilon,eta,L,pred_upsilon\n";
  char buf[64];
  for (std::size_t m = 0; m <= grid.levels(); ++m) {
    if (!grid.has_costs(m)) continue;
    for (const DpState& s : grid.finite_states(m)) {
      std::snprintf(buf, sizeof buf, "%.17g", grid.cost(m, s.upsilon, s.eta));
      out << m << ',' << s.upsilon << ',' << s.eta << ',' << buf << ',';
      if (m > 0) out << grid.pred(m, s.upsilon, s.eta);
      out << '\n';
    }
  }
  return out.str();
}

std::string render_grids(const CostGrid& grid, const LengthSet& ls, int decimals) {
  std::ostringstream out;
  const std::size_t n = grid.n();
  const int width = decimals + 9;
  auto cell = [&](const std::string& text) {
    std::string s = text;
    if (static_cast<int>(s.size()) < width) s.insert(0, static_cast<std::size_t>(width) - s.size(), ' ');
    out << s;
  };
  for (std::size_t m = 1; m < grid.levels(); ++m) {
    if (!grid.has_costs(m)) continue;
    out << "Level lambda_" << m << " = " << ls[m - 1] << " (m=" << m << ")\n";
    cell("eta\\ups");
    for (std::size_t u = 0; u + 2 <= n; ++u) cell(std::to_string(u));
    out << '\n';
    for (std::size_t eta = 0; eta <= n / 2; ++eta) {
      cell(std::to_string(eta));
      for (std::size_t u = 0; u + 2 <= n; ++u) {
        const double c = grid.cost(m, u, eta);
        if (std::isinf(c))
          cell("inf");
        else
          cell(fixed(c, decimals) + " (" + std::to_string(grid.pred(m, u, eta)) + ")");
      }
      out << '\n';
    }
    out << '\n';
  }
  const FinishedTree& b = grid.best();
  out << "best finished tree: cost " << fixed(b.cost, decimals) << " at level lambda_" << b.level << " = "
      << ls[b.level - 1] << " from (upsilon, eta) = (" << b.chi << ", " << b.pred_eta << "), leftover eta "
      << b.leftover_eta << '\n';
  return out.str();
}

std::string render_solution(const Solution& s, const Pmf& pmf, int digits) {
  std::ostringstream out;
  out << "lambda used: " << s.lambda_used.to_string() << '\n';
  out << "cost (" << s.cost_function.name() << "): " << format_real(s.cost, digits) << '\n';
  out << "kraft sum: " << s.kraft.to_string() << " = " << format_real(s.kraft.to_double(), digits) << '\n';
  out << "distinct lengths: " << distinct_lengths(s.lengths) << '\n';
  out << "symbol\tprobability\tlength\tcodeword\n";
  for (std::size_t i = 0; i < s.lengths.size(); ++i)
    out << pmf.label_of_sorted(i) << '\t' << format_real(pmf[i], digits) << '\t' << s.lengths[i] << '\t'
        << s.codebook.codewords[i].to_bitstring() << '\n';
  return out.str();
}

std::string render_g_report(const GSearchReport& report, int digits) {
  std::ostringstream out;
  out << "g'\tlength set\texpected length\tkraft sum\n";
  for (const GLengthEntry& e : report.best_per_g)
    out << e.g_prime << '\t' << e.lengths.to_string() << '\t' << format_real(e.solution.cost, digits) << '\t'
        << e.solution.kraft.to_string() << '\n';
  out << "candidate sets tried: " << report.candidates_tried << '\n';
  return out.str();
}

}  // namespace rlpc
