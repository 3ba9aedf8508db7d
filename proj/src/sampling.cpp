#include "sktlab/sampling.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>

#include "sktlab/errors.hpp"

namespace sktlab {

namespace {

constexpr std::array<unsigned, kMaxSpecies> kPrimes = {2, 3, 5, 7, 11, 13, 17, 19};

std::vector<Vec> halton_unit(int n, int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  Vec shift(n);
  for (int k = 0; k < n; ++k) shift[k] = uni(rng);

  std::vector<Vec> pts;
  pts.reserve(static_cast<size_t>(count));
  for (int idx = 1; idx <= count; ++idx) {
    Vec p(n);
    for (int k = 0; k < n; ++k) {
      double x = radical_inverse(static_cast<std::uint64_t>(idx), kPrimes[static_cast<size_t>(k)]) + shift[k];
      p[k] = x - std::floor(x);
    }
    pts.push_back(p);
  }
  return pts;
}

Vec map_to_box(const SampleBox& box, const Vec& unit) {
  return (box.lower.array() + unit.array() * (box.upper - box.lower).array()).matrix();
}

}  // namespace

bool SampleBox::interior() const { return lower.size() > 0 && (lower.array() > 0.0).all(); }

void SampleBox::validate() const {
  if (lower.size() != upper.size() || lower.size() < 1) throw DomainError("sample box bounds differ in length");
  if (count < 1) throw DomainError("sample box count must be at least 1");
  for (int i = 0; i < lower.size(); ++i) {
    if (!(lower[i] >= 0.0) || !(upper[i] >= lower[i]) || !std::isfinite(upper[i])) {
      throw DomainError("sample box needs 0 <= lower <= upper");
    }
  }
}

SampleBox SampleBox::cube(int n, double lo, double hi, int count, std::uint64_t seed) {
  SampleBox b;
  b.lower = Vec::Constant(n, lo);
  b.upper = Vec::Constant(n, hi);
  b.count = count;
  b.seed = seed;
  return b;
}

double radical_inverse(std::uint64_t index, unsigned base) {
  double inv = 1.0 / base;
  double f = inv;
  double r = 0.0;
  while (index > 0) {
    r += f * static_cast<double>(index % base);
    index /= base;
    f *= inv;
  }
  return r;
}

std::vector<Vec> box_samples(const SampleBox& box) {
  box.validate();
  const int n = box.dim();
  std::vector<Vec> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    Vec c(n);
    for (int k = 0; k < n; ++k) c[k] = (mask >> k) & 1u ? box.upper[k] : box.lower[k];
    out.push_back(c);
  }
  const auto unit = halton_unit(n, box.count, box.seed);
  for (const auto& p : unit) out.push_back(map_to_box(box, p));
  // Lower faces: catch extremes where one species is at its minimum.
  const int per_face = std::max(1, box.count / (4 * n));
  for (int k = 0; k < n; ++k) {
    for (int s = 0; s < per_face; ++s) {
      Vec p = map_to_box(box, unit[static_cast<size_t>(s)]);
      p[k] = box.lower[k];
      out.push_back(p);
    }
  }
  return out;
}

std::vector<Vec> face_samples(const SampleBox& box, int i) {
  box.validate();
  const int n = box.dim();
  std::vector<Vec> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    Vec c(n);
    for (int k = 0; k < n; ++k) c[k] = (mask >> k) & 1u ? box.upper[k] : box.lower[k];
    c[i] = 0.0;
    out.push_back(c);
  }
  for (const auto& p : halton_unit(n, box.count, box.seed ^ (0x9e3779b97f4a7c15ULL + static_cast<unsigned>(i)))) {
    Vec q = map_to_box(box, p);
    q[i] = 0.0;
    out.push_back(q);
  }
  return out;
}

std::vector<Vec> probe_directions(int n, bool strictly_positive) {
  std::vector<Vec> dirs;
  dirs.push_back(Vec::Constant(n, 1.0 / std::sqrt(static_cast<double>(n))));
  if (!strictly_positive) {
    for (int k = 0; k < n; ++k) {
      Vec e = Vec::Zero(n);
      e[k] = 1.0;
      dirs.push_back(e);
    }
  }
  for (int idx = 1; idx <= 8; ++idx) {
    Vec p(n);
    for (int k = 0; k < n; ++k) p[k] = 0.05 + radical_inverse(static_cast<std::uint64_t>(idx), kPrimes[static_cast<size_t>(k)]);
    dirs.push_back(p.normalized());
  }
  return dirs;
}

}  // namespace sktlab
