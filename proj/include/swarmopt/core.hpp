#ifndef SWARMOPT_CORE_HPP
#define SWARMOPT_CORE_HPP

#include <cstdint>
#include <random>
#include <vector>

namespace swarmopt {

/// A candidate solution position. Components are finite reals; the length
/// must equal the dimension of the problem it is used with.
using RealVector = std::vector<double>;

/// Componentwise search-space box. lower[i] < upper[i] for every i.
struct Bounds {
    RealVector lower;
    RealVector upper;

    Bounds() = default;
    Bounds(RealVector lo, RealVector up);

    /// Box [lo, hi]^dim with the same scalar range in every dimension.
    static Bounds uniform(std::size_t dim, double lo, double hi);

    std::size_t dimension() const { return lower.size(); }
};

/// Deterministic random stream owned by exactly one run. Identical seeds
/// produce identical draw sequences for the same build. The double mapping
/// is done from raw generator bits so the sequence does not depend on the
/// standard library's distribution implementations.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed = 0)
        : seed_(seed), gen_(seed) {}
    virtual ~RandomStream() = default;

    std::uint64_t seed() const { return seed_; }

    /// Uniform draw in [0, 1).
    virtual double uniform01() {
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }

    /// Uniform draw in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    /// Uniform index in {0, ..., n-1}. n must be positive.
    std::size_t uniform_index(std::size_t n);

private:
    std::uint64_t seed_;
    std::mt19937_64 gen_;
};

/// Distance-control schedule: 2 * (1 - t/T), ramping 2 -> 0 over the run.
/// Throws std::invalid_argument when T == 0 or t > T.
double linear_a_schedule(std::uint64_t t, std::uint64_t T);

/// A = 2*a*r - a, confined to [-a, a] for r in [0, 1].
double coefficient_A(double a, double r);

/// C = 2*r, confined to [0, 2] for r in [0, 1].
double coefficient_C(double r);

/// Per-agent per-iteration coefficient draws. The scalar A used for the
/// exploration/exploitation branch test is drawn separately from the
/// per-dimension A and C applied in position updates.
struct CoefficientState {
    double a = 2.0;        // distance-control parameter, in [0, 2]
    double branch_A = 0.0; // scalar branch-test A, |branch_A| <= a
    double b = 1.0;        // logarithmic spiral shape constant
    double k = 0.0;        // spiral phase, in [-1, 1]
    double p = 0.0;        // branch coin, in [0, 1)
};

/// Clamp every component of x into [lower[i], upper[i]].
/// Throws std::invalid_argument on length mismatch.
RealVector clamp_to_bounds(const RealVector& x, const Bounds& b);

/// In-place variant used by the optimizer inner loops.
void clamp_to_bounds_inplace(RealVector& x, const Bounds& b);

} // namespace swarmopt

#endif
