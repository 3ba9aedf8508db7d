#pragma once

#include <Eigen/Core>

namespace sktlab {

// Systems are small; fixed upper bound keeps per-cell evaluations off the heap.
inline constexpr int kMaxSpecies = 8;

using Vec = Eigen::Matrix<double, Eigen::Dynamic, 1, Eigen::ColMajor, kMaxSpecies, 1>;
using Mat = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::ColMajor,
                          kMaxSpecies, kMaxSpecies>;

}  // namespace sktlab
