#pragma once

#include <cstdint>
#include <vector>

#include "sktlab/types.hpp"

namespace sktlab {

/// Axis-aligned box in state space, sampled by a shifted Halton sequence.
struct SampleBox {
  Vec lower;
  Vec upper;
  int count = 4096;
  std::uint64_t seed = 1;

  int dim() const { return static_cast<int>(lower.size()); }
  bool interior() const;  // lower > 0 componentwise
  void validate() const;  // throws DomainError

  static SampleBox cube(int n, double lo, double hi, int count = 4096, std::uint64_t seed = 1);
};

/// Radical inverse of index in the given base.
double radical_inverse(std::uint64_t index, unsigned base);

/// Sample set used by every sampled condition: box corners first, then the
/// seeded Halton points (Cranley-Patterson rotation), then the same Halton
/// points projected onto each lower coordinate face. Order is deterministic.
std::vector<Vec> box_samples(const SampleBox& box);

/// Points of the box restricted to the face u_i = 0 (other coordinates
/// Halton-sampled inside the box). Used for quasi-positivity.
std::vector<Vec> face_samples(const SampleBox& box, int i);

/// Unit directions in the closed positive orthant: the diagonal, the
/// coordinate axes and a few Halton directions. When strictly_positive is
/// set the axes are omitted.
std::vector<Vec> probe_directions(int n, bool strictly_positive);

}  // namespace sktlab
