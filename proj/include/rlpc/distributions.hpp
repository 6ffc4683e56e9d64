#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace rlpc {

inline constexpr double kNormalizationTolerance = 1e-9;

// A probability mass function held in sorted (nonincreasing) order.
// perm()[i] is the user-order index of the i-th most probable symbol.
class Pmf {
 public:
  const std::vector<double>& probs() const noexcept { return probs_; }
  const std::vector<std::size_t>& perm() const noexcept { return perm_; }
  // Labels in user order; empty when none were supplied.
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::size_t size() const noexcept { return probs_.size(); }
  double operator[](std::size_t i) const { return probs_[i]; }

  // Label of the sorted-domain symbol i, or its user index when unlabeled.
  std::string label_of_sorted(std::size_t i) const;

 private:
  friend Pmf make_pmf(std::span<const double>, bool, std::vector<std::string>);
  friend Pmf zipf_pmf(std::size_t);
  friend Pmf benford_pmf();

  std::vector<double> probs_;
  std::vector<std::size_t> perm_;
  std::vector<std::string> labels_;
};

struct CumulativeTable {
  // F[0] = 0, F[i] = F[i-1] + p_i; n + 1 entries.
  std::vector<double> F;
};

// Throws EmptyOrSingleton, NonPositiveWeight or NotNormalized.
Pmf make_pmf(std::span<const double> weights, bool normalize, std::vector<std::string> labels = {});

Pmf zipf_pmf(std::size_t n);
Pmf benford_pmf();

CumulativeTable cdf(const Pmf& pmf);

enum class PmfFormat { Auto, Csv, Json, Bytes };

// Auto picks by extension: .csv, .json, anything else is read as raw bytes and
// histogrammed. Weights are always normalized.
Pmf pmf_from_file(const std::filesystem::path& path, PmfFormat format = PmfFormat::Auto);

// Byte-value histogram of a buffer; labels are the decimal byte values.
Pmf pmf_from_bytes(std::span<const unsigned char> bytes);

}  // namespace rlpc
