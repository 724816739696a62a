#include "theta/kernels.hpp"

#include <stdexcept>

namespace theta::kernels {

bool avx2_available() {
#if defined(__x86_64__) || defined(_M_X64)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

namespace {

struct Selection {
  RotateFn fn;
  const char* name;
};

Selection pick_auto() {
#if defined(__x86_64__) || defined(_M_X64)
  if (avx2_available()) return {rotate_pair_avx2, "avx2"};
#endif
  return {rotate_pair_scalar, "scalar"};
}

Selection& current() {
  static Selection sel = pick_auto();
  return sel;
}

}  // namespace

RotateFn active_rotate() { return current().fn; }
const char* active_kernel_name() { return current().name; }

void select_kernel(const std::string& name) {
  if (name == "auto") {
    current() = pick_auto();
  } else if (name == "scalar") {
    current() = {rotate_pair_scalar, "scalar"};
  } else if (name == "avx2") {
#if defined(__x86_64__) || defined(_M_X64)
    if (!avx2_available()) throw std::runtime_error("select_kernel: avx2 not supported by this CPU");
    current() = {rotate_pair_avx2, "avx2"};
#else
    throw std::runtime_error("select_kernel: avx2 kernel not built on this architecture");
#endif
  } else {
    throw std::invalid_argument("select_kernel: unknown kernel '" + name + "'");
  }
}

}  // namespace theta::kernels
