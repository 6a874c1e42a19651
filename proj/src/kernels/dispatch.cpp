#include "frontflow/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace frontflow::kernels {

#if defined(FRONTFLOW_BUILD_AVX2)
const Ops* avx2_ops_impl();
#endif

const Ops* avx2_ops() {
#if defined(FRONTFLOW_BUILD_AVX2)
  if (__builtin_cpu_supports("avx2")) return avx2_ops_impl();
#endif
  return nullptr;
}

namespace {

const Ops& select() {
  const char* force = std::getenv("FRONTFLOW_SIMD");
  if (force != nullptr && std::strcmp(force, "scalar") == 0) {
    return scalar_ops();
  }
  if (const Ops* v = avx2_ops()) return *v;
  return scalar_ops();
}

}  // namespace

const Ops& ops() {
  static const Ops& selected = select();
  return selected;
}

}  // namespace frontflow::kernels
