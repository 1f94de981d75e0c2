#include "swarmopt/core.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace swarmopt {

Bounds::Bounds(RealVector lo, RealVector up)
    : lower(std::move(lo)), upper(std::move(up)) {
    if (lower.size() != upper.size())
        throw std::invalid_argument("Bounds: lower and upper lengths differ");
    for (std::size_t i = 0; i < lower.size(); ++i) {
        if (!std::isfinite(lower[i]) || !std::isfinite(upper[i]))
            throw std::invalid_argument("Bounds: non-finite bound at index " +
                                        std::to_string(i));
        if (!(lower[i] < upper[i]))
            throw std::invalid_argument("Bounds: lower >= upper at index " +
                                        std::to_string(i));
    }
}

Bounds Bounds::uniform(std::size_t dim, double lo, double hi) {
    return Bounds(RealVector(dim, lo), RealVector(dim, hi));
}

std::size_t RandomStream::uniform_index(std::size_t n) {
    if (n == 0)
        throw std::invalid_argument("uniform_index: n must be positive");
    auto idx = static_cast<std::size_t>(uniform01() * static_cast<double>(n));
    return std::min(idx, n - 1);
}

double linear_a_schedule(std::uint64_t t, std::uint64_t T) {
    if (T == 0)
        throw std::invalid_argument("linear_a_schedule: T must be positive");
    if (t > T)
        throw std::invalid_argument("linear_a_schedule: t exceeds T");
    return 2.0 * (1.0 - static_cast<double>(t) / static_cast<double>(T));
}

double coefficient_A(double a, double r) {
    if (a < 0.0)
        throw std::invalid_argument("coefficient_A: a must be nonnegative");
    return 2.0 * a * r - a;
}

double coefficient_C(double r) { return 2.0 * r; }

RealVector clamp_to_bounds(const RealVector& x, const Bounds& b) {
    if (x.size() != b.dimension())
        throw std::invalid_argument("clamp_to_bounds: length mismatch");
    RealVector out = x;
    clamp_to_bounds_inplace(out, b);
    return out;
}

void clamp_to_bounds_inplace(RealVector& x, const Bounds& b) {
    if (x.size() != b.dimension())
        throw std::invalid_argument("clamp_to_bounds: length mismatch");
    for (std::size_t i = 0; i < x.size(); ++i)
        x[i] = std::clamp(x[i], b.lower[i], b.upper[i]);
}

} // namespace swarmopt
