#pragma once

#include <cstddef>
#include <string>

namespace theta::kernels {

/// Plane-rotation kernel: (x[i], y[i]) <- (c*x[i] - s*y[i], s*x[i] + c*y[i]).
/// All variants perform the identical IEEE mul/add/sub sequence per lane (the
/// project is built with -ffp-contract=off), so outputs are bit-identical.
using RotateFn = void (*)(double* x, double* y, std::size_t len, double c, double s);

void rotate_pair_scalar(double* x, double* y, std::size_t len, double c, double s);
#if defined(__x86_64__) || defined(_M_X64)
void rotate_pair_avx2(double* x, double* y, std::size_t len, double c, double s);
#endif

/// Currently active kernel (runtime CPU dispatch, overridable).
RotateFn active_rotate();
const char* active_kernel_name();

/// Force a kernel by name: "scalar", "avx2", or "auto". Throws on an
/// unavailable choice.
void select_kernel(const std::string& name);

bool avx2_available();

}  // namespace theta::kernels
