// Reference kernels. The AVX2 table must reproduce these bit for bit on the
// element-wise entries.
#include <algorithm>

#include "sktlab/kernels.hpp"

namespace sktlab::kernels {

namespace {

void laplacian_1d(In w, Out out, double inv_h2) {
  const std::size_t n = w.size();
  for (std::size_t i = 0; i < n; ++i) {
    const double c = w[i];
    const double l = i > 0 ? w[i - 1] : c;
    const double r = i + 1 < n ? w[i + 1] : c;
    out[i] = ((l - c) + (r - c)) * inv_h2;
  }
}

void laplacian_2d(In w, Out out, std::size_t nx, std::size_t ny, double inv_hx2, double inv_hy2) {
  for (std::size_t iy = 0; iy < ny; ++iy) {
    const double* row = w.data() + iy * nx;
    const double* south = iy > 0 ? row - nx : row;
    const double* north = iy + 1 < ny ? row + nx : row;
    double* o = out.data() + iy * nx;
    for (std::size_t ix = 0; ix < nx; ++ix) {
      const double c = row[ix];
      const double l = ix > 0 ? row[ix - 1] : c;
      const double r = ix + 1 < nx ? row[ix + 1] : c;
      o[ix] = ((l - c) + (r - c)) * inv_hx2 + ((south[ix] - c) + (north[ix] - c)) * inv_hy2;
    }
  }
}

void diag_minus(In diag, In x, Out inout) {
  for (std::size_t i = 0; i < x.size(); ++i) inout[i] = diag[i] * x[i] - inout[i];
}

void multiply(In a, In b, Out out) {
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * b[i];
}

void axpy(double alpha, In x, Out y) {
  for (std::size_t i = 0; i < x.size(); ++i) y[i] += alpha * x[i];
}

void xpay(In x, double beta, Out y) {
  for (std::size_t i = 0; i < x.size(); ++i) y[i] = x[i] + beta * y[i];
}

double dot(In a, In b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double sum(In a) {
  double s = 0.0;
  for (double x : a) s += x;
  return s;
}

double sum_squares(In a) {
  double s = 0.0;
  for (double x : a) s += x * x;
  return s;
}

double sum_cubes(In a) {
  double s = 0.0;
  for (double x : a) s += x * x * x;
  return s;
}

double max(In a) {
  double m = a.empty() ? 0.0 : a[0];
  for (double x : a) m = std::max(m, x);
  return m;
}

std::size_t euler_update(In u, In lap, In f, double scale, double floor, Out out, double& added) {
  std::size_t clamps = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
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

const KernelTable kScalar = {
    "scalar", laplacian_1d, laplacian_2d, diag_minus, multiply, axpy, xpay,
    dot,      sum,          sum_squares,  sum_cubes,  max,      euler_update,
};

}  // namespace

const KernelTable& scalar_kernels() { return kScalar; }

}  // namespace sktlab::kernels
