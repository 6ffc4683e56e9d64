#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "rlpc/code_core.hpp"
#include "rlpc/distributions.hpp"

namespace rlpc {

// MSB-first bit sequence: the first code bit is the top bit of bytes[0]; the
// final partial byte is zero-padded.
struct BitStream {
  std::vector<std::uint8_t> bytes;
  std::uint64_t bit_count = 0;

  friend bool operator==(const BitStream&, const BitStream&) = default;
};

class BitWriter {
 public:
  // Appends the low `nbits` (<= 64) of value, most significant first.
  void put(std::uint64_t value, unsigned nbits);
  BitStream finish() &&;
  std::uint64_t bit_count() const noexcept { return stream_.bit_count; }

 private:
  BitStream stream_;
};

// Ascending-length canonical decode rows; see LengthGroup.
struct DecodeTable {
  std::vector<LengthGroup> groups;
  std::size_t symbols = 0;

  friend bool operator==(const DecodeTable&, const DecodeTable&) = default;
};

DecodeTable build_decode_table(const Codebook& cb);

using SymbolStream = std::vector<std::uint32_t>;

// Symbols are sorted-domain indices. Throws IndexOutOfRange.
BitStream encode(const Codebook& cb, std::span<const std::uint32_t> symbols);

// Linear search over the distinct lengths, shortest first. Throws Truncated
// when fewer bits remain than the next candidate length, InvalidCode when a
// pattern matches no length.
SymbolStream decode(const DecodeTable& dt, const BitStream& bs, std::size_t count);

struct ThroughputReport {
  std::size_t symbols_decoded = 0;
  std::vector<double> seconds;  // wall time per repeat
  double median_seconds = 0.0;
  double median_symbols_per_second = 0.0;
  std::uint64_t checksum = 0;  // FNV-1a over the decoded indices
};

std::uint64_t checksum(std::span<const std::uint32_t> symbols);

ThroughputReport bench_decode(const DecodeTable& dt, const BitStream& bs, std::size_t count, std::size_t repeats);

// Deterministic i.i.d. stream of sorted-domain indices drawn from pmf.
SymbolStream make_symbol_stream(const Pmf& pmf, std::size_t count, std::uint64_t seed);

// "RLPC" container: magic, version 0x01, u32 BE n, n length octets,
// u64 BE symbol count, payload bytes.
struct Container {
  LengthVector lengths;
  std::uint64_t symbol_count = 0;
  BitStream payload;
};

inline constexpr std::uint8_t kContainerVersion = 0x01;

std::vector<std::uint8_t> serialize_container(const Container& c);
// Throws ParseError. The payload's bit_count covers every payload byte.
Container parse_container(std::span<const std::uint8_t> bytes);

Container encode_container(const Codebook& cb, std::span<const std::uint32_t> symbols);
SymbolStream decode_container(const Container& c);

}  // namespace rlpc
