#include "rlpc/codec.hpp"

#include <algorithm>
#include <chrono>
#include <random>

#include "rlpc/error.hpp"

namespace rlpc {

void BitWriter::put(std::uint64_t value, unsigned nbits) {
  if (nbits < 64) value &= (std::uint64_t{1} << nbits) - 1;
  while (nbits > 0) {
    const unsigned used = static_cast<unsigned>(stream_.bit_count % 8);
    if (used == 0) stream_.bytes.push_back(0);
    const unsigned room = 8 - used;
    const unsigned take = std::min(room, nbits);
    const auto chunk = static_cast<std::uint8_t>((value >> (nbits - take)) & ((1u << take) - 1));
    stream_.bytes.back() |= static_cast<std::uint8_t>(chunk << (room - take));
    stream_.bit_count += take;
    nbits -= take;
  }
}

BitStream BitWriter::finish() && { return std::move(stream_); }

DecodeTable build_decode_table(const Codebook& cb) { return {cb.groups, cb.codewords.size()}; }

BitStream encode(const Codebook& cb, std::span<const std::uint32_t> symbols) {
  BitWriter writer;
  for (std::uint32_t s : symbols) {
    if (s >= cb.codewords.size())
      fail(ErrorKind::IndexOutOfRange, "symbol " + std::to_string(s) + " outside codebook of " +
                                           std::to_string(cb.codewords.size()));
    const Codeword& c = cb.codewords[s];
    writer.put(c.bits, c.length);
  }
  return std::move(writer).finish();
}

namespace {

// Left-aligned 64-bit window over an MSB-first byte buffer.
class BitReader {
 public:
  explicit BitReader(const BitStream& bs) : data_(bs.bytes.data()), nbytes_(bs.bytes.size()), bits_(bs.bit_count) {
    refill();
  }

  std::uint64_t remaining() const noexcept { return bits_ - pos_; }

  void refill() noexcept {
    while (avail_ <= 56 && next_ < nbytes_) {
      window_ |= static_cast<std::uint64_t>(data_[next_++]) << (56 - avail_);
      avail_ += 8;
    }
  }

  // Next k bits (1 <= k <= 64) without consuming them; caller checks remaining().
  std::uint64_t peek(unsigned k) const noexcept {
    if (k <= avail_) return window_ >> (64 - k);
    std::uint64_t v = 0;
    for (unsigned b = 0; b < k; ++b) {
      const std::uint64_t at = pos_ + b;
      v = (v << 1) | ((data_[at >> 3] >> (7 - (at & 7))) & 1u);
    }
    return v;
  }

  void consume(unsigned k) noexcept {
    if (k <= avail_) {
      window_ = k == 64 ? 0 : window_ << k;
      avail_ -= k;
      pos_ += k;
      return;
    }
    pos_ += k;
    next_ = static_cast<std::size_t>(pos_ >> 3);
    window_ = 0;
    avail_ = 0;
    refill();
    const unsigned skip = static_cast<unsigned>(pos_ & 7);
    window_ <<= skip;
    avail_ = avail_ >= skip ? avail_ - skip : 0;
  }

 private:
  const std::uint8_t* data_;
  std::size_t nbytes_;
  std::uint64_t bits_;
  std::uint64_t pos_ = 0;
  std::uint64_t window_ = 0;
  unsigned avail_ = 0;
  std::size_t next_ = 0;
};

void decode_into(const DecodeTable& dt, const BitStream& bs, std::span<std::uint32_t> out) {
  if (bs.bit_count > 8 * static_cast<std::uint64_t>(bs.bytes.size()))
    fail(ErrorKind::Truncated, "bit count exceeds the byte buffer");
  BitReader reader(bs);
  for (std::size_t k = 0; k < out.size(); ++k) {
    reader.refill();
    const std::uint64_t remaining = reader.remaining();
    bool matched = false;
    for (const LengthGroup& g : dt.groups) {
      if (g.length > remaining)
        fail(ErrorKind::Truncated, "stream ends inside symbol " + std::to_string(k));
      const std::uint64_t value = reader.peek(g.length);
      if (value >= g.first_code && value - g.first_code < g.count) {
        out[k] = static_cast<std::uint32_t>(g.first_index + (value - g.first_code));
        reader.consume(g.length);
        matched = true;
        break;
      }
    }
    if (!matched) fail(ErrorKind::InvalidCode, "no codeword matches at symbol " + std::to_string(k));
  }
}

}  // namespace

SymbolStream decode(const DecodeTable& dt, const BitStream& bs, std::size_t count) {
  SymbolStream out(count);
  decode_into(dt, bs, out);
  return out;
}

std::uint64_t checksum(std::span<const std::uint32_t> symbols) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (std::uint32_t s : symbols) {
    for (int byte = 0; byte < 4; ++byte) {
      h ^= (s >> (8 * byte)) & 0xffu;
      h *= 0x100000001b3ull;
    }
  }
  return h;
}

ThroughputReport bench_decode(const DecodeTable& dt, const BitStream& bs, std::size_t count, std::size_t repeats) {
  if (repeats == 0) fail(ErrorKind::BadParameter, "repeats must be positive");
  ThroughputReport report;
  report.symbols_decoded = count;
  SymbolStream out(count);
  for (std::size_t r = 0; r < repeats; ++r) {
    const auto start = std::chrono::steady_clock::now();
    decode_into(dt, bs, out);
    const auto stop = std::chrono::steady_clock::now();
    report.seconds.push_back(std::chrono::duration<double>(stop - start).count());
    report.checksum = checksum(out);
  }
  std::vector<double> sorted = report.seconds;
  std::sort(sorted.begin(), sorted.end());
  const std::size_t mid = sorted.size() / 2;
  report.median_seconds = sorted.size() % 2 ? sorted[mid] : 0.5 * (sorted[mid - 1] + sorted[mid]);
  report.median_symbols_per_second =
      report.median_seconds > 0.0 ? static_cast<double>(count) / report.median_seconds : 0.0;
  return report;
}

SymbolStream make_symbol_stream(const Pmf& pmf, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::discrete_distribution<std::uint32_t> pick(pmf.probs().begin(), pmf.probs().end());
  SymbolStream out(count);
  for (auto& s : out) s = pick(rng);
  return out;
}

namespace {

void put_be(std::vector<std::uint8_t>& out, std::uint64_t v, int bytes) {
  for (int i = bytes - 1; i >= 0; --i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

std::uint64_t get_be(std::span<const std::uint8_t> in, std::size_t at, int bytes) {
  std::uint64_t v = 0;
  for (int i = 0; i < bytes; ++i) v = (v << 8) | in[at + static_cast<std::size_t>(i)];
  return v;
}

constexpr std::uint8_t kMagic[4] = {'R', 'L', 'P', 'C'};

}  // namespace

std::vector<std::uint8_t> serialize_container(const Container& c) {
  std::vector<std::uint8_t> out(std::begin(kMagic), std::end(kMagic));
  out.push_back(kContainerVersion);
  put_be(out, c.lengths.size(), 4);
  for (unsigned l : c.lengths) {
    if (l < 1 || l > kMaxCodeLength) fail(ErrorKind::BadParameter, "codeword length out of range");
    out.push_back(static_cast<std::uint8_t>(l));
  }
  put_be(out, c.symbol_count, 8);
  out.insert(out.end(), c.payload.bytes.begin(), c.payload.bytes.end());
  return out;
}

Container parse_container(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 9 || !std::equal(std::begin(kMagic), std::end(kMagic), bytes.begin()))
    fail(ErrorKind::ParseError, "not an RLPC container");
  if (bytes[4] != kContainerVersion) fail(ErrorKind::ParseError, "unsupported container version");
  const std::uint64_t n = get_be(bytes, 5, 4);
  std::size_t at = 9;
  if (bytes.size() < at + n + 8) fail(ErrorKind::ParseError, "container header is truncated");
  Container c;
  c.lengths.assign(bytes.begin() + static_cast<std::ptrdiff_t>(at),
                   bytes.begin() + static_cast<std::ptrdiff_t>(at + n));
  for (unsigned l : c.lengths)
    if (l < 1 || l > kMaxCodeLength) fail(ErrorKind::ParseError, "codeword length out of range");
  at += n;
  c.symbol_count = get_be(bytes, at, 8);
  at += 8;
  c.payload.bytes.assign(bytes.begin() + static_cast<std::ptrdiff_t>(at), bytes.end());
  c.payload.bit_count = 8 * static_cast<std::uint64_t>(c.payload.bytes.size());
  return c;
}

Container encode_container(const Codebook& cb, std::span<const std::uint32_t> symbols) {
  return {cb.lengths(), symbols.size(), encode(cb, symbols)};
}

SymbolStream decode_container(const Container& c) {
  const Codebook cb = assign_canonical(c.lengths);
  return decode(build_decode_table(cb), c.payload, static_cast<std::size_t>(c.symbol_count));
}

}  // namespace rlpc
