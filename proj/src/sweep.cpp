#include "hyperball/sweep.hpp"

namespace hyperball {

std::vector<KernelValue> sweep_kernel(const PointKernel& k, const std::vector<BallPoint>& ws, Execution mode) {
    return map_indices<KernelValue>(ws.size(), [&](std::size_t i) { return k(ws[i]); }, mode);
}

std::vector<KernelValue> sweep_kernel_reference(const PointKernel& k, const std::vector<BallPoint>& ws) {
    std::vector<KernelValue> out;
    out.reserve(ws.size());
    for (const BallPoint& w : ws) out.push_back(k(w));
    return out;
}

}  // namespace hyperball
