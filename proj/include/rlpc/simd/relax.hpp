#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

// Inner kernel of the level sweep: one predecessor state offers the same cost to
// a contiguous run of successor cells. Every variant must produce bit-identical
// cost/pred arrays to relax_scalar.
namespace rlpc::simd {

enum class Isa { Scalar, Avx2, Avx512 };

// For i in [0, count): if cost[i] > offer then cost[i] = offer, pred[i] = pred_value.
using RelaxFn = void (*)(double* cost, std::uint32_t* pred, std::size_t count, double offer,
                         std::uint32_t pred_value) noexcept;

void relax_scalar(double* cost, std::uint32_t* pred, std::size_t count, double offer,
                  std::uint32_t pred_value) noexcept;

#if defined(RLPC_HAVE_AVX2)
void relax_avx2(double* cost, std::uint32_t* pred, std::size_t count, double offer,
                std::uint32_t pred_value) noexcept;
#endif

#if defined(RLPC_HAVE_AVX512)
void relax_avx512(double* cost, std::uint32_t* pred, std::size_t count, double offer,
                  std::uint32_t pred_value) noexcept;
#endif

std::string_view to_string(Isa isa) noexcept;

// Compiled in and supported by the running CPU.
bool isa_available(Isa isa) noexcept;

// Widest available ISA, unless RLPC_SIMD=scalar|avx2|avx512 narrows it.
Isa default_isa() noexcept;

// Throws BadParameter when the ISA is not available.
RelaxFn relax_kernel(Isa isa);

}  // namespace rlpc::simd
