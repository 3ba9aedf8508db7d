#pragma once

#include <cstddef>
#include <span>

namespace sktlab::kernels {

using In = std::span<const double>;
using Out = std::span<double>;

/// Data-parallel inner loops of the solver and monitors. Every table
/// implements the same contracts; element-wise kernels are bit-identical
/// across tables, reductions agree up to summation order.
struct KernelTable {
  const char* name;

  /// Cell-centred Laplacian with mirror ghosts:
  /// out_c = ((w_l - w_c) + (w_r - w_c)) inv_h2, a missing neighbour counts as w_c.
  void (*laplacian_1d)(In w, Out out, double inv_h2);
  /// Same in 2D, row-major with x fastest; x terms and y terms summed separately.
  void (*laplacian_2d)(In w, Out out, std::size_t nx, std::size_t ny, double inv_hx2, double inv_hy2);
  /// inout = diag * x - inout
  void (*diag_minus)(In diag, In x, Out inout);
  /// out = a * b
  void (*multiply)(In a, In b, Out out);
  /// y += alpha x
  void (*axpy)(double alpha, In x, Out y);
  /// y = x + beta y
  void (*xpay)(In x, double beta, Out y);
  double (*dot)(In a, In b);
  double (*sum)(In a);
  double (*sum_squares)(In a);
  double (*sum_cubes)(In a);
  double (*max)(In a);
  /// out = max(u + scale (lap + f), floor). Returns the number of clamped
  /// cells; `added` accumulates floor - raw over them.
  std::size_t (*euler_update)(In u, In lap, In f, double scale, double floor, Out out, double& added);
};

const KernelTable& scalar_kernels();
/// nullptr when the AVX2 variants were not compiled in.
const KernelTable* avx2_kernels();
bool cpu_has_avx2();

/// Selected once per process: AVX2 when compiled and supported by the CPU,
/// scalar otherwise. SKTLAB_KERNELS=scalar|avx2 overrides.
const KernelTable& active();

}  // namespace sktlab::kernels
