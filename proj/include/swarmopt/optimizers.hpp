#ifndef SWARMOPT_OPTIMIZERS_HPP
#define SWARMOPT_OPTIMIZERS_HPP

#include <chrono>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "swarmopt/core.hpp"
#include "swarmopt/objectives.hpp"

namespace swarmopt {

/// One member of the population. Velocity, frequency, loudness, and pulse
/// rate are used by the bat and hybrid optimizers only.
struct SearchAgent {
    RealVector position;
    double fitness = 0.0;
    RealVector velocity;
    double frequency = 0.0;
    double loudness = 1.0;
    double pulse_rate = 0.5;
};

enum class HybridMode {
    /// Exploration branch pulls toward a randomly selected agent.
    rand_best_substitution,
    /// Both non-spiral branches pull toward the global best.
    literal,
};

struct AlgorithmConfig {
    std::size_t population = 30;
    std::size_t iterations = 500;
    double spiral_b = 1.0;
    double f_min = 0.0;
    double f_max = 2.0;
    double loudness_init = 1.0;
    double pulse_rate_init = 0.5;
    double alpha = 0.9; // loudness decay per acceptance
    double gamma = 0.9; // pulse-rate growth rate
    HybridMode hybrid_mode = HybridMode::rand_best_substitution;

    /// Throws std::invalid_argument on the first violated constraint.
    void validate() const;
};

/// Best-so-far fitness, one entry per iteration; nonincreasing.
using ConvergenceTrace = std::vector<double>;

/// How many agent updates took each branch.
struct BranchCounters {
    std::uint64_t encircle = 0; // pull toward the elite
    std::uint64_t search = 0;   // pull toward a random agent
    std::uint64_t spiral = 0;   // helix move around the elite

    BranchCounters& operator+=(const BranchCounters& o) {
        encircle += o.encircle;
        search += o.search;
        spiral += o.spiral;
        return *this;
    }
};

struct RunResult {
    RealVector best_position;
    double best_fitness = 0.0;
    ConvergenceTrace trace;
    std::uint64_t evaluations = 0;
    std::chrono::duration<double, std::milli> elapsed{0.0};
    std::uint64_t seed = 0;
    BranchCounters branches; // totals over the whole run
};

/// Test hook: called once per iteration after amendment, evaluation, and
/// the elite update, with that iteration's branch counts.
struct IterationSnapshot {
    std::size_t iteration;
    const std::vector<SearchAgent>& agents;
    BranchCounters branches;
    double best_fitness;
};
using IterationObserver = std::function<void(const IterationSnapshot&)>;

// --- position-update primitives ----------------------------------------

/// x_best - A (.) |C (.) x_best - x|, componentwise.
RealVector woa_encircle_update(const RealVector& x, const RealVector& x_best,
                               const RealVector& A, const RealVector& C);

/// e^{b k} cos(2 pi k) |x_best - x| + x_best, componentwise.
RealVector woa_spiral_update(const RealVector& x, const RealVector& x_best,
                             double b, double k);

/// x_rand - A (.) |C (.) x_rand - x|, componentwise.
RealVector woa_search_update(const RealVector& x, const RealVector& x_rand,
                             const RealVector& A, const RealVector& C);

/// f_min + (f_max - f_min) * beta.
double bat_frequency(double f_min, double f_max, double beta);

/// v' = v + (x - x_best) f; x' = x + v'. Returns (v', x').
std::pair<RealVector, RealVector> bat_velocity_position(const RealVector& x,
                                                        const RealVector& v,
                                                        const RealVector& x_best,
                                                        double f);

/// x_best + eps * mean_loudness with eps drawn per dimension from [-1, 1].
RealVector bat_local_walk(const RealVector& x_best, double mean_loudness,
                          RandomStream& rng);

/// Keeps whichever of the old agent and the candidate has lower fitness;
/// ties keep the candidate. Other agent state is untouched.
SearchAgent greedy_accept(const SearchAgent& old,
                          const RealVector& candidate_position,
                          double candidate_fitness);

enum class WoaBranch { encircle, search, spiral };

/// Branch rule shared by WOA and the hybrid: spiral when p >= 0.5,
/// otherwise encircle when |branch_A| < 1 and random search when >= 1.
WoaBranch choose_woa_branch(double p, double branch_A);

// --- optimizers ---------------------------------------------------------
//
// All three run strictly sequentially on a single stream the run owns.
// Draw order, per agent per iteration:
//
//   woa:      r_branch, p, then either k (spiral) or
//             [random-agent index when |A| >= 1, then per dimension rA, rC]
//   bat:      beta, gate, [per-dimension eps when gate > pulse_rate],
//             acceptance draw
//   woa-bat:  r_branch, p, then either k (spiral) or
//             [random-agent index when |A| >= 1, then beta]
//
// Population initialization draws agent by agent, dimension by dimension,
// uniformly within bounds, before the first evaluation. The bat pulse-rate
// law uses the 1-based iteration index.

RunResult woa_optimize(const ObjectiveSpec& objective,
                       const AlgorithmConfig& config, RandomStream& rng,
                       const IterationObserver& observer = {});
RunResult woa_optimize(const ObjectiveSpec& objective,
                       const AlgorithmConfig& config, std::uint64_t seed,
                       const IterationObserver& observer = {});

RunResult bat_optimize(const ObjectiveSpec& objective,
                       const AlgorithmConfig& config, RandomStream& rng,
                       const IterationObserver& observer = {});
RunResult bat_optimize(const ObjectiveSpec& objective,
                       const AlgorithmConfig& config, std::uint64_t seed,
                       const IterationObserver& observer = {});

RunResult woabat_optimize(const ObjectiveSpec& objective,
                          const AlgorithmConfig& config, RandomStream& rng,
                          const IterationObserver& observer = {});
RunResult woabat_optimize(const ObjectiveSpec& objective,
                          const AlgorithmConfig& config, std::uint64_t seed,
                          const IterationObserver& observer = {});

enum class Algorithm { woa, bat, woa_bat };

const char* to_string(Algorithm a);
Algorithm parse_algorithm(const std::string& name);

RunResult optimize(Algorithm algorithm, const ObjectiveSpec& objective,
                   const AlgorithmConfig& config, std::uint64_t seed,
                   const IterationObserver& observer = {});

} // namespace swarmopt

#endif
