#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "rlpc/distributions.hpp"

namespace rlpc {

// Codewords live in a uint64_t, so no length may exceed 64 bits.
inline constexpr unsigned kMaxCodeLength = 64;

// Allowed codeword lengths, sorted strictly increasing.
class LengthSet {
 public:
  LengthSet() = default;
  // Sorts and deduplicates; throws BadParameter on empty input or a length
  // outside [1, kMaxCodeLength].
  explicit LengthSet(std::vector<unsigned> lengths);
  LengthSet(std::initializer_list<unsigned> lengths) : LengthSet(std::vector<unsigned>(lengths)) {}

  const std::vector<unsigned>& values() const noexcept { return lambdas_; }
  std::size_t size() const noexcept { return lambdas_.size(); }
  unsigned operator[](std::size_t i) const { return lambdas_[i]; }
  unsigned front() const { return lambdas_.front(); }
  unsigned back() const { return lambdas_.back(); }
  bool contains(unsigned length) const;
  std::string to_string() const;  // "{1,2,4,8}"

  friend bool operator==(const LengthSet&, const LengthSet&) = default;
  friend auto operator<=>(const LengthSet& a, const LengthSet& b) { return a.lambdas_ <=> b.lambdas_; }

 private:
  std::vector<unsigned> lambdas_;
};

// Codeword lengths in sorted-symbol order (nondecreasing for optimal codes).
using LengthVector = std::vector<unsigned>;

// An exact dyadic rational numerator / 2^exponent, kept in lowest terms.
struct KraftSum {
  unsigned __int128 numerator = 0;
  unsigned exponent = 0;

  bool exceeds_one() const noexcept { return numerator > (static_cast<unsigned __int128>(1) << exponent); }
  bool is_one() const noexcept { return numerator == (static_cast<unsigned __int128>(1) << exponent); }
  double to_double() const noexcept;
  std::string to_string() const;  // "3/2^2"

  friend bool operator==(const KraftSum&, const KraftSum&) = default;
};

KraftSum kraft_sum(std::span<const unsigned> lengths);
// Sum over the first `count` codewords; throws IndexOutOfRange when count > size.
KraftSum partial_kraft(std::span<const unsigned> lengths, std::size_t count);

// Throws SizeMismatch.
double expected_length(const Pmf& pmf, std::span<const unsigned> lengths);

bool is_feasible(const LengthSet& ls, std::size_t n);

// Keeps every length <= n-2 plus the smallest length above n-2, if any.
// Throws Infeasible when is_feasible(ls, n) is false.
LengthSet truncate_length_set(const LengthSet& ls, std::size_t n);

struct Codeword {
  unsigned length = 0;
  std::uint64_t bits = 0;  // low `length` bits; first transmitted bit is the most significant

  std::string to_bitstring() const;
};

// One row per distinct length, ascending.
struct LengthGroup {
  unsigned length = 0;
  std::uint64_t first_code = 0;
  std::size_t first_index = 0;
  std::size_t count = 0;

  friend bool operator==(const LengthGroup&, const LengthGroup&) = default;
};

struct Codebook {
  std::vector<Codeword> codewords;  // sorted-symbol order
  std::vector<LengthGroup> groups;

  LengthVector lengths() const;
  std::size_t size() const noexcept { return codewords.size(); }
};

// Canonical first-to-last assignment. Throws KraftViolation, or BadParameter
// for lengths that are not nondecreasing or out of range.
Codebook assign_canonical(std::span<const unsigned> lengths);

// Number of distinct values in a length vector.
std::size_t distinct_lengths(std::span<const unsigned> lengths);

}  // namespace rlpc
