#include <doctest.h>

#include <cstdlib>
#include <cstring>
#include <random>
#include <string>
#include <vector>

#include "sktlab/kernels.hpp"

using namespace sktlab::kernels;

namespace {

std::vector<double> random_vec(std::size_t n, std::uint64_t seed, double lo = -1.0, double hi = 1.0) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> d(lo, hi);
  std::vector<double> v(n);
  for (auto& x : v) x = d(rng);
  return v;
}

bool bit_equal(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::memcmp(&a[i], &b[i], sizeof(double)) != 0) return false;
  }
  return true;
}

std::vector<const KernelTable*> tables() {
  std::vector<const KernelTable*> t{&scalar_kernels()};
  if (avx2_kernels() && cpu_has_avx2()) t.push_back(avx2_kernels());
  return t;
}

}  // namespace

TEST_CASE("kernel laplacian on a hand-checked stencil") {
  for (const auto* k : tables()) {
    std::vector<double> w{0, 1, 0}, out(3);
    k->laplacian_1d(w, out, 4.0);
    CHECK(out == std::vector<double>{4, -8, 4});
    std::vector<double> one{5}, o1(1);
    k->laplacian_1d(one, o1, 3.0);
    CHECK(o1[0] == 0.0);
    std::vector<double> c(12, 2.5), oc(12);
    k->laplacian_2d(c, oc, 4, 3, 1.0, 7.0);
    for (double x : oc) CHECK(x == 0.0);
  }
}

TEST_CASE("kernel element-wise variants are bit-identical to the scalar reference") {
  const auto& ref = scalar_kernels();
  for (const auto* k : tables()) {
    for (std::size_t n : {1u, 2u, 3u, 4u, 5u, 7u, 8u, 9u, 15u, 16u, 17u, 63u, 64u, 65u, 1000u}) {
      const auto a = random_vec(n, n), b = random_vec(n, n + 1), f = random_vec(n, n + 2);
      std::vector<double> x(n), y(n);
      ref.laplacian_1d(a, x, 3.7);
      k->laplacian_1d(a, y, 3.7);
      CHECK(bit_equal(x, y));

      ref.multiply(a, b, x);
      k->multiply(a, b, y);
      CHECK(bit_equal(x, y));

      x = b, y = b;
      ref.diag_minus(a, f, x);
      k->diag_minus(a, f, y);
      CHECK(bit_equal(x, y));

      x = b, y = b;
      ref.axpy(0.3, a, x);
      k->axpy(0.3, a, y);
      CHECK(bit_equal(x, y));

      x = b, y = b;
      ref.xpay(a, -1.7, x);
      k->xpay(a, -1.7, y);
      CHECK(bit_equal(x, y));

      const auto u = random_vec(n, n + 3, 0.0, 1.0);
      double added_ref = 0.0, added = 0.0;
      const auto cr = ref.euler_update(u, a, f, 0.4, 1e-3, x, added_ref);
      const auto ck = k->euler_update(u, a, f, 0.4, 1e-3, y, added);
      CHECK(cr == ck);
      CHECK(bit_equal(x, y));
      CHECK(added == doctest::Approx(added_ref).epsilon(1e-13));
      for (double v : y) CHECK(v >= 1e-3);
    }
    for (auto [nx, ny] : {std::pair<std::size_t, std::size_t>{1, 1}, {1, 7}, {7, 1}, {3, 5}, {4, 4}, {9, 6}, {64, 64}}) {
      const auto a = random_vec(nx * ny, nx * 31 + ny);
      std::vector<double> x(nx * ny), y(nx * ny);
      ref.laplacian_2d(a, x, nx, ny, 2.5, 0.75);
      k->laplacian_2d(a, y, nx, ny, 2.5, 0.75);
      CHECK(bit_equal(x, y));
    }
  }
}

TEST_CASE("kernel reductions agree up to summation order") {
  const auto& ref = scalar_kernels();
  for (const auto* k : tables()) {
    for (std::size_t n : {0u, 1u, 3u, 4u, 5u, 8u, 13u, 100u, 4097u}) {
      const auto a = random_vec(n, 7 * n + 1), b = random_vec(n, 7 * n + 2);
      const double scale = static_cast<double>(n) + 1.0;
      CHECK(k->dot(a, b) == doctest::Approx(ref.dot(a, b)).epsilon(1e-13 * scale));
      CHECK(k->sum(a) == doctest::Approx(ref.sum(a)).epsilon(1e-13 * scale));
      CHECK(k->sum_squares(a) == doctest::Approx(ref.sum_squares(a)).epsilon(1e-13 * scale));
      CHECK(k->sum_cubes(a) == doctest::Approx(ref.sum_cubes(a)).epsilon(1e-13 * scale));
      CHECK(k->max(a) == ref.max(a));
    }
  }
}

TEST_CASE("kernel laplacian sums to zero") {
  for (const auto* k : tables()) {
    for (std::size_t n : {2u, 5u, 33u, 512u}) {
      const auto w = random_vec(n, n, 0.0, 10.0);
      std::vector<double> out(n);
      k->laplacian_1d(w, out, 1.0);
      double s = 0.0, norm = 0.0;
      for (std::size_t i = 0; i < n; ++i) s += out[i], norm = std::max(norm, std::abs(w[i]));
      CHECK(std::abs(s) <= 1e-13 * norm * static_cast<double>(n));
    }
  }
}

TEST_CASE("kernel selection honours the environment override") {
  const char* env = std::getenv("SKTLAB_KERNELS");
  if (env && std::string(env) == "scalar") {
    CHECK(std::string(active().name) == "scalar");
  } else if (avx2_kernels() && cpu_has_avx2()) {
    CHECK(std::string(active().name) == "avx2");
  }
}
