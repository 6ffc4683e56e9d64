#include <cstdlib>
#include <string>

#include "rlpc/error.hpp"
#include "rlpc/simd/relax.hpp"

namespace rlpc::simd {

std::string_view to_string(Isa isa) noexcept {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
    case Isa::Avx512: return "avx512";
  }
  return "unknown";
}

bool isa_available(Isa isa) noexcept {
  switch (isa) {
    case Isa::Scalar: return true;
    case Isa::Avx2:
#if defined(RLPC_HAVE_AVX2)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Isa::Avx512:
#if defined(RLPC_HAVE_AVX512)
      return __builtin_cpu_supports("avx512f") && __builtin_cpu_supports("avx512vl");
#else
      return false;
#endif
  }
  return false;
}

Isa default_isa() noexcept {
  static const Isa chosen = [] {
    Isa best = Isa::Scalar;
    if (isa_available(Isa::Avx2)) best = Isa::Avx2;
    if (isa_available(Isa::Avx512)) best = Isa::Avx512;
    if (const char* env = std::getenv("RLPC_SIMD")) {
      const std::string want(env);
      for (Isa isa : {Isa::Scalar, Isa::Avx2, Isa::Avx512})
        if (want == to_string(isa) && isa_available(isa) && isa <= best) return isa;
    }
    return best;
  }();
  return chosen;
}

RelaxFn relax_kernel(Isa isa) {
  if (!isa_available(isa)) fail(ErrorKind::BadParameter, std::string(to_string(isa)) + " kernels are not available");
  switch (isa) {
#if defined(RLPC_HAVE_AVX2)
    case Isa::Avx2: return &relax_avx2;
#endif
#if defined(RLPC_HAVE_AVX512)
    case Isa::Avx512: return &relax_avx512;
#endif
    default: return &relax_scalar;
  }
}

}  // namespace rlpc::simd
