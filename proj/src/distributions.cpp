#include "rlpc/distributions.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iterator>
#include <numeric>
#include <sstream>

#include "json.hpp"
#include "rlpc/error.hpp"

namespace rlpc {

std::string Pmf::label_of_sorted(std::size_t i) const {
  const std::size_t user = perm_.at(i);
  if (labels_.empty()) return std::to_string(user);
  return labels_[user];
}

Pmf make_pmf(std::span<const double> weights, bool normalize, std::vector<std::string> labels) {
  const std::size_t n = weights.size();
  if (n < 2) fail(ErrorKind::EmptyOrSingleton, "need at least two symbols, got " + std::to_string(n));
  if (!labels.empty() && labels.size() != n)
    fail(ErrorKind::SizeMismatch, "label count does not match weight count");

  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (!(weights[i] > 0.0) || !std::isfinite(weights[i]))
      fail(ErrorKind::NonPositiveWeight, "weight " + std::to_string(i) + " is not a positive finite number");
    total += weights[i];
  }
  if (!normalize && std::abs(total - 1.0) > kNormalizationTolerance)
    fail(ErrorKind::NotNormalized, "weights sum to " + std::to_string(total));

  Pmf pmf;
  pmf.perm_.resize(n);
  std::iota(pmf.perm_.begin(), pmf.perm_.end(), std::size_t{0});
  std::stable_sort(pmf.perm_.begin(), pmf.perm_.end(),
                   [&](std::size_t a, std::size_t b) { return weights[a] > weights[b]; });
  pmf.probs_.reserve(n);
  for (std::size_t user : pmf.perm_) pmf.probs_.push_back(normalize ? weights[user] / total : weights[user]);
  pmf.labels_ = std::move(labels);
  return pmf;
}

Pmf zipf_pmf(std::size_t n) {
  if (n < 2) fail(ErrorKind::EmptyOrSingleton, "zipf needs n >= 2");
  double harmonic = 0.0;
  for (std::size_t j = 1; j <= n; ++j) harmonic += 1.0 / static_cast<double>(j);
  Pmf pmf;
  pmf.probs_.resize(n);
  pmf.perm_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    pmf.probs_[i] = 1.0 / (static_cast<double>(i + 1) * harmonic);
    pmf.perm_[i] = i;
  }
  return pmf;
}

Pmf benford_pmf() {
  Pmf pmf;
  for (std::size_t i = 1; i <= 9; ++i) {
    pmf.probs_.push_back(std::log10(static_cast<double>(i + 1)) - std::log10(static_cast<double>(i)));
    pmf.perm_.push_back(i - 1);
  }
  return pmf;
}

CumulativeTable cdf(const Pmf& pmf) {
  CumulativeTable table;
  table.F.reserve(pmf.size() + 1);
  table.F.push_back(0.0);
  for (double p : pmf.probs()) table.F.push_back(table.F.back() + p);
  return table;
}

namespace {

std::string read_all(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::ParseError, "cannot open " + path.string());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

Pmf parse_csv(const std::string& text) {
  std::vector<double> weights;
  std::vector<std::string> labels;
  std::istringstream lines(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(lines, line)) {
    ++lineno;
    const std::string_view row = trim(line);
    if (row.empty()) continue;
    // Split on the last comma so labels may themselves contain commas.
    const auto comma = row.rfind(',');
    if (comma == std::string_view::npos)
      fail(ErrorKind::ParseError, "line " + std::to_string(lineno) + ": expected label,weight");
    const std::string_view field = trim(row.substr(comma + 1));
    double w = 0.0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), w);
    if (ec != std::errc{} || ptr != field.data() + field.size())
      fail(ErrorKind::ParseError, "line " + std::to_string(lineno) + ": bad weight '" + std::string(field) + "'");
    labels.emplace_back(trim(row.substr(0, comma)));
    weights.push_back(w);
  }
  return make_pmf(weights, true, std::move(labels));
}

Pmf parse_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::ParseError, e.what());
  }
  if (!doc.is_object() || !doc.contains("weights") || !doc["weights"].is_array())
    fail(ErrorKind::ParseError, "expected an object with a \"weights\" array");
  std::vector<double> weights;
  std::vector<std::string> labels;
  try {
    weights = doc["weights"].get<std::vector<double>>();
    if (doc.contains("labels")) labels = doc["labels"].get<std::vector<std::string>>();
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::ParseError, e.what());
  }
  return make_pmf(weights, true, std::move(labels));
}

}  // namespace

Pmf pmf_from_bytes(std::span<const unsigned char> bytes) {
  std::array<std::size_t, 256> counts{};
  for (unsigned char b : bytes) ++counts[b];
  std::vector<double> weights;
  std::vector<std::string> labels;
  for (std::size_t v = 0; v < counts.size(); ++v) {
    if (counts[v] == 0) continue;
    weights.push_back(static_cast<double>(counts[v]));
    labels.push_back(std::to_string(v));
  }
  return make_pmf(weights, true, std::move(labels));
}

Pmf pmf_from_file(const std::filesystem::path& path, PmfFormat format) {
  if (format == PmfFormat::Auto) {
    const std::string ext = path.extension().string();
    format = ext == ".csv" ? PmfFormat::Csv : ext == ".json" ? PmfFormat::Json : PmfFormat::Bytes;
  }
  const std::string text = read_all(path);
  switch (format) {
    case PmfFormat::Csv: return parse_csv(text);
    case PmfFormat::Json: return parse_json(text);
    default:
      return pmf_from_bytes({reinterpret_cast<const unsigned char*>(text.data()), text.size()});
  }
}

}  // namespace rlpc
