#include "rlpc/code_core.hpp"

#include <algorithm>
#include <cmath>

#include "rlpc/error.hpp"

namespace rlpc {

using u128 = unsigned __int128;

LengthSet::LengthSet(std::vector<unsigned> lengths) : lambdas_(std::move(lengths)) {
  if (lambdas_.empty()) fail(ErrorKind::BadParameter, "length set is empty");
  std::sort(lambdas_.begin(), lambdas_.end());
  lambdas_.erase(std::unique(lambdas_.begin(), lambdas_.end()), lambdas_.end());
  if (lambdas_.front() < 1 || lambdas_.back() > kMaxCodeLength)
    fail(ErrorKind::BadParameter, "lengths must lie in [1, " + std::to_string(kMaxCodeLength) + "]");
}

bool LengthSet::contains(unsigned length) const {
  return std::binary_search(lambdas_.begin(), lambdas_.end(), length);
}

std::string LengthSet::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < lambdas_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(lambdas_[i]);
  }
  return out + "}";
}

namespace {

std::string u128_to_string(u128 v) {
  if (v == 0) return "0";
  std::string digits;
  while (v) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  return {digits.rbegin(), digits.rend()};
}

KraftSum reduce(KraftSum k) {
  while (k.exponent > 0 && (k.numerator & 1) == 0) {
    k.numerator >>= 1;
    --k.exponent;
  }
  if (k.numerator == 0) k.exponent = 0;
  return k;
}

}  // namespace

double KraftSum::to_double() const noexcept {
  return std::ldexp(static_cast<double>(numerator), -static_cast<int>(exponent));
}

std::string KraftSum::to_string() const { return u128_to_string(numerator) + "/2^" + std::to_string(exponent); }

KraftSum partial_kraft(std::span<const unsigned> lengths, std::size_t count) {
  if (count > lengths.size())
    fail(ErrorKind::IndexOutOfRange, "partial Kraft index " + std::to_string(count) + " exceeds " +
                                         std::to_string(lengths.size()));
  KraftSum k;
  for (std::size_t i = 0; i < count; ++i) {
    if (lengths[i] < 1 || lengths[i] > kMaxCodeLength)
      fail(ErrorKind::BadParameter, "codeword length " + std::to_string(lengths[i]) + " out of range");
    k.exponent = std::max(k.exponent, lengths[i]);
  }
  for (std::size_t i = 0; i < count; ++i) k.numerator += u128{1} << (k.exponent - lengths[i]);
  return reduce(k);
}

KraftSum kraft_sum(std::span<const unsigned> lengths) { return partial_kraft(lengths, lengths.size()); }

double expected_length(const Pmf& pmf, std::span<const unsigned> lengths) {
  if (pmf.size() != lengths.size())
    fail(ErrorKind::SizeMismatch, "pmf has " + std::to_string(pmf.size()) + " symbols, length vector has " +
                                      std::to_string(lengths.size()));
  double sum = 0.0;
  for (std::size_t i = 0; i < lengths.size(); ++i) sum += pmf[i] * static_cast<double>(lengths[i]);
  return sum;
}

bool is_feasible(const LengthSet& ls, std::size_t n) {
  const unsigned top = ls.back();
  if (top >= 64) return true;
  return (std::uint64_t{1} << top) >= n;
}

LengthSet truncate_length_set(const LengthSet& ls, std::size_t n) {
  if (!is_feasible(ls, n))
    fail(ErrorKind::Infeasible, "longest allowed length " + std::to_string(ls.back()) + " cannot hold " +
                                    std::to_string(n) + " symbols");
  // n >= 2 is enforced by Pmf; guard anyway so n - 2 cannot wrap.
  const std::size_t limit = n >= 2 ? n - 2 : 0;
  std::vector<unsigned> kept;
  for (unsigned lambda : ls.values()) {
    kept.push_back(lambda);
    if (lambda > limit) break;  // smallest length beyond n-2 closes the set
  }
  return LengthSet(std::move(kept));
}

std::string Codeword::to_bitstring() const {
  std::string s(length, '0');
  for (unsigned b = 0; b < length; ++b)
    if ((bits >> (length - 1 - b)) & 1) s[b] = '1';
  return s;
}

LengthVector Codebook::lengths() const {
  LengthVector out;
  out.reserve(codewords.size());
  for (const auto& c : codewords) out.push_back(c.length);
  return out;
}

Codebook assign_canonical(std::span<const unsigned> lengths) {
  if (lengths.empty()) fail(ErrorKind::EmptyOrSingleton, "no codeword lengths");
  if (!std::is_sorted(lengths.begin(), lengths.end()))
    fail(ErrorKind::BadParameter, "canonical assignment needs nondecreasing lengths");
  if (kraft_sum(lengths).exceeds_one()) fail(ErrorKind::KraftViolation, "Kraft sum exceeds 1");

  Codebook cb;
  cb.codewords.reserve(lengths.size());
  u128 code = 0;
  for (std::size_t i = 0; i < lengths.size(); ++i) {
    if (i > 0) code = (code + 1) << (lengths[i] - lengths[i - 1]);
    cb.codewords.push_back({lengths[i], static_cast<std::uint64_t>(code)});
    if (cb.groups.empty() || cb.groups.back().length != lengths[i])
      cb.groups.push_back({lengths[i], static_cast<std::uint64_t>(code), i, 0});
    ++cb.groups.back().count;
  }
  return cb;
}

std::size_t distinct_lengths(std::span<const unsigned> lengths) {
  std::vector<unsigned> v(lengths.begin(), lengths.end());
  std::sort(v.begin(), v.end());
  return static_cast<std::size_t>(std::unique(v.begin(), v.end()) - v.begin());
}

}  // namespace rlpc
