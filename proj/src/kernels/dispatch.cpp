#include <cstdlib>
#include <cstring>

#include "isingcc/kernels.hpp"

namespace isingcc::kernels {

#if defined(ISINGCC_HAVE_AVX2)
namespace avx2 {
const KernelTable& table();
}
#endif

bool cpu_supports_avx2() {
#if defined(ISINGCC_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

const KernelTable* avx2_table() {
#if defined(ISINGCC_HAVE_AVX2)
  if (cpu_supports_avx2()) return &avx2::table();
#endif
  return nullptr;
}

const KernelTable& active() {
  static const KernelTable& chosen = []() -> const KernelTable& {
    const char* env = std::getenv("ISINGCC_SIMD");
    if (env != nullptr && std::strcmp(env, "scalar") == 0) return scalar_table();
    if (const KernelTable* t = avx2_table()) return *t;
    return scalar_table();
  }();
  return chosen;
}

}  // namespace isingcc::kernels
