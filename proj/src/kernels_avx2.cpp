// AVX2 variants. Built with -mavx2 but without -mfma so element-wise results
// round exactly like the scalar reference.
#include "sktlab/kernels.hpp"

#if defined(__AVX2__)
#include <immintrin.h>

#include <algorithm>

namespace sktlab::kernels {

namespace {

constexpr std::size_t kLanes = 4;

inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

void laplacian_1d(In w, Out out, double inv_h2) {
  const std::size_t n = w.size();
  if (n < kLanes + 2) {
    scalar_kernels().laplacian_1d(w, out, inv_h2);
    return;
  }
  const double* p = w.data();
  out[0] = ((p[0] - p[0]) + (p[1] - p[0])) * inv_h2;
  const __m256d k = _mm256_set1_pd(inv_h2);
  std::size_t i = 1;
  for (; i + kLanes <= n - 1; i += kLanes) {
    const __m256d c = _mm256_loadu_pd(p + i);
    const __m256d l = _mm256_loadu_pd(p + i - 1);
    const __m256d r = _mm256_loadu_pd(p + i + 1);
    const __m256d s = _mm256_add_pd(_mm256_sub_pd(l, c), _mm256_sub_pd(r, c));
    _mm256_storeu_pd(out.data() + i, _mm256_mul_pd(s, k));
  }
  for (; i < n; ++i) {
    const double c = p[i];
    const double r = i + 1 < n ? p[i + 1] : c;
    out[i] = ((p[i - 1] - c) + (r - c)) * inv_h2;
  }
}

void laplacian_2d(In w, Out out, std::size_t nx, std::size_t ny, double inv_hx2, double inv_hy2) {
  if (nx < kLanes + 2) {
    scalar_kernels().laplacian_2d(w, out, nx, ny, inv_hx2, inv_hy2);
    return;
  }
  const __m256d kx = _mm256_set1_pd(inv_hx2);
  const __m256d ky = _mm256_set1_pd(inv_hy2);
  for (std::size_t iy = 0; iy < ny; ++iy) {
    const double* row = w.data() + iy * nx;
    const double* south = iy > 0 ? row - nx : row;
    const double* north = iy + 1 < ny ? row + nx : row;
    double* o = out.data() + iy * nx;
    auto cell = [&](std::size_t ix) {
      const double c = row[ix];
      const double l = ix > 0 ? row[ix - 1] : c;
      const double r = ix + 1 < nx ? row[ix + 1] : c;
      o[ix] = ((l - c) + (r - c)) * inv_hx2 + ((south[ix] - c) + (north[ix] - c)) * inv_hy2;
    };
    cell(0);
    std::size_t ix = 1;
    for (; ix + kLanes <= nx - 1; ix += kLanes) {
      const __m256d c = _mm256_loadu_pd(row + ix);
      const __m256d l = _mm256_loadu_pd(row + ix - 1);
      const __m256d r = _mm256_loadu_pd(row + ix + 1);
      const __m256d s = _mm256_loadu_pd(south + ix);
      const __m256d nn = _mm256_loadu_pd(north + ix);
      const __m256d tx = _mm256_mul_pd(_mm256_add_pd(_mm256_sub_pd(l, c), _mm256_sub_pd(r, c)), kx);
      const __m256d ty = _mm256_mul_pd(_mm256_add_pd(_mm256_sub_pd(s, c), _mm256_sub_pd(nn, c)), ky);
      _mm256_storeu_pd(o + ix, _mm256_add_pd(tx, ty));
    }
    for (; ix < nx; ++ix) cell(ix);
  }
}

void diag_minus(In diag, In x, Out inout) {
  const std::size_t n = x.size();
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    const __m256d v = _mm256_sub_pd(_mm256_mul_pd(_mm256_loadu_pd(diag.data() + i), _mm256_loadu_pd(x.data() + i)),
                                    _mm256_loadu_pd(inout.data() + i));
    _mm256_storeu_pd(inout.data() + i, v);
  }
  for (; i < n; ++i) inout[i] = diag[i] * x[i] - inout[i];
}

void multiply(In a, In b, Out out) {
  const std::size_t n = a.size();
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    _mm256_storeu_pd(out.data() + i, _mm256_mul_pd(_mm256_loadu_pd(a.data() + i), _mm256_loadu_pd(b.data() + i)));
  }
  for (; i < n; ++i) out[i] = a[i] * b[i];
}

void axpy(double alpha, In x, Out y) {
  const std::size_t n = x.size();
  const __m256d a = _mm256_set1_pd(alpha);
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    const __m256d v = _mm256_add_pd(_mm256_loadu_pd(y.data() + i), _mm256_mul_pd(a, _mm256_loadu_pd(x.data() + i)));
    _mm256_storeu_pd(y.data() + i, v);
  }
  for (; i < n; ++i) y[i] += alpha * x[i];
}

void xpay(In x, double beta, Out y) {
  const std::size_t n = x.size();
  const __m256d b = _mm256_set1_pd(beta);
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    const __m256d v = _mm256_add_pd(_mm256_loadu_pd(x.data() + i), _mm256_mul_pd(b, _mm256_loadu_pd(y.data() + i)));
    _mm256_storeu_pd(y.data() + i, v);
  }
  for (; i < n; ++i) y[i] = x[i] + beta * y[i];
}

double dot(In a, In b) {
  const std::size_t n = a.size();
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    acc = _mm256_add_pd(acc, _mm256_mul_pd(_mm256_loadu_pd(a.data() + i), _mm256_loadu_pd(b.data() + i)));
  }
  double s = hsum(acc);
  for (; i < n; ++i) s += a[i] * b[i];
  return s;
}

template <int Power>
double sum_power(In a) {
  const std::size_t n = a.size();
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    const __m256d x = _mm256_loadu_pd(a.data() + i);
    __m256d t = x;
    if constexpr (Power >= 2) t = _mm256_mul_pd(t, x);
    if constexpr (Power >= 3) t = _mm256_mul_pd(t, x);
    acc = _mm256_add_pd(acc, t);
  }
  double s = hsum(acc);
  for (; i < n; ++i) {
    double t = a[i];
    if constexpr (Power >= 2) t *= a[i];
    if constexpr (Power >= 3) t *= a[i];
    s += t;
  }
  return s;
}

double sum(In a) { return sum_power<1>(a); }
double sum_squares(In a) { return sum_power<2>(a); }
double sum_cubes(In a) { return sum_power<3>(a); }

double max(In a) {
  const std::size_t n = a.size();
  if (n < kLanes) return scalar_kernels().max(a);
  __m256d acc = _mm256_loadu_pd(a.data());
  std::size_t i = kLanes;
  for (; i + kLanes <= n; i += kLanes) acc = _mm256_max_pd(acc, _mm256_loadu_pd(a.data() + i));
  alignas(32) double lanes[kLanes];
  _mm256_store_pd(lanes, acc);
  double m = std::max(std::max(lanes[0], lanes[1]), std::max(lanes[2], lanes[3]));
  for (; i < n; ++i) m = std::max(m, a[i]);
  return m;
}

std::size_t euler_update(In u, In lap, In f, double scale, double floor, Out out, double& added) {
  const std::size_t n = u.size();
  const __m256d s = _mm256_set1_pd(scale);
  const __m256d fl = _mm256_set1_pd(floor);
  __m256d deficit = _mm256_setzero_pd();
  std::size_t clamps = 0;
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    const __m256d inc = _mm256_add_pd(_mm256_loadu_pd(lap.data() + i), _mm256_loadu_pd(f.data() + i));
    const __m256d raw = _mm256_add_pd(_mm256_loadu_pd(u.data() + i), _mm256_mul_pd(s, inc));
    const __m256d below = _mm256_cmp_pd(raw, fl, _CMP_LT_OQ);
    const int mask = _mm256_movemask_pd(below);
    if (mask != 0) {
      clamps += static_cast<std::size_t>(__builtin_popcount(static_cast<unsigned>(mask)));
      deficit = _mm256_add_pd(deficit, _mm256_and_pd(below, _mm256_sub_pd(fl, raw)));
    }
    _mm256_storeu_pd(out.data() + i, _mm256_blendv_pd(raw, fl, below));
  }
  added += hsum(deficit);
  for (; i < n; ++i) {
    const double raw = u[i] + scale * (lap[i] + f[i]);
    if (raw < floor) {
      added += floor - raw;
      out[i] = floor;
      ++clamps;
    } else {
      out[i] = raw;
    }
  }
  return clamps;
}

const KernelTable kAvx2 = {
    "avx2", laplacian_1d, laplacian_2d, diag_minus, multiply, axpy, xpay,
    dot,    sum,          sum_squares,  sum_cubes,  max,      euler_update,
};

}  // namespace

const KernelTable* avx2_kernels() { return &kAvx2; }

}  // namespace sktlab::kernels

#else

namespace sktlab::kernels {
const KernelTable* avx2_kernels() { return nullptr; }
}  // namespace sktlab::kernels

#endif
