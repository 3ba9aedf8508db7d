#include "sktlab/kernels.hpp"

#include <cstdlib>
#include <string_view>

namespace sktlab::kernels {

#if !defined(SKTLAB_HAVE_AVX2_TU)
const KernelTable* avx2_kernels() { return nullptr; }
#endif

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(__i386__)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

namespace {

const KernelTable& select() {
  const KernelTable* fast = cpu_has_avx2() ? avx2_kernels() : nullptr;
  if (const char* env = std::getenv("SKTLAB_KERNELS")) {
    const std::string_view want(env);
    if (want == "scalar") return scalar_kernels();
    if (want == "avx2" && fast) return *fast;
  }
  return fast ? *fast : scalar_kernels();
}

}  // namespace

const KernelTable& active() {
  static const KernelTable& table = select();
  return table;
}

}  // namespace sktlab::kernels
