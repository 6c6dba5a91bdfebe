#pragma once

#include <vector>

#include "hyperball/geometry.hpp"
#include "hyperball/kernels.hpp"
#include "hyperball/parallel.hpp"

namespace hyperball {

using PointKernel = std::function<KernelValue(const BallPoint& w)>;

// Evaluates k at every w; results in input order.
std::vector<KernelValue> sweep_kernel(const PointKernel& k, const std::vector<BallPoint>& ws,
                                      Execution mode = Execution::parallel);

// Plain loop with no threading machinery, kept as the reference the parallel
// sweep is tested against.
std::vector<KernelValue> sweep_kernel_reference(const PointKernel& k, const std::vector<BallPoint>& ws);

}  // namespace hyperball
