#include "swarmopt/optimizers.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace swarmopt {

namespace {

void require_same_length(const RealVector& a, const RealVector& b,
                         const char* what) {
    if (a.size() != b.size())
        throw std::invalid_argument(std::string(what) + ": length mismatch");
}

std::vector<SearchAgent> init_population(const ObjectiveSpec& objective,
                                         const AlgorithmConfig& config,
                                         RandomStream& rng) {
    std::vector<SearchAgent> agents(config.population);
    const auto& b = objective.bounds;
    for (auto& agent : agents) {
        agent.position.resize(objective.dimension);
        for (std::size_t d = 0; d < objective.dimension; ++d)
            agent.position[d] = rng.uniform(b.lower[d], b.upper[d]);
        agent.velocity.assign(objective.dimension, 0.0);
        agent.loudness = config.loudness_init;
        agent.pulse_rate = config.pulse_rate_init;
    }
    return agents;
}

std::size_t best_index(const std::vector<SearchAgent>& agents) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < agents.size(); ++i)
        if (agents[i].fitness < agents[best].fitness) best = i;
    return best;
}

struct RunClock {
    std::chrono::steady_clock::time_point start =
        std::chrono::steady_clock::now();
    std::chrono::duration<double, std::milli> elapsed() const {
        return std::chrono::steady_clock::now() - start;
    }
};

} // namespace

void AlgorithmConfig::validate() const {
    if (population == 0)
        throw std::invalid_argument("config: population must be positive");
    if (iterations == 0)
        throw std::invalid_argument("config: iterations must be positive");
    if (!(f_min < f_max))
        throw std::invalid_argument("config: f_min must be less than f_max");
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::invalid_argument("config: alpha must lie in (0, 1)");
    if (!(gamma > 0.0))
        throw std::invalid_argument("config: gamma must be positive");
    if (!(loudness_init >= 0.0))
        throw std::invalid_argument("config: loudness_init must be nonnegative");
    if (!(pulse_rate_init >= 0.0 && pulse_rate_init <= 1.0))
        throw std::invalid_argument("config: pulse_rate_init must lie in [0, 1]");
    if (!std::isfinite(spiral_b))
        throw std::invalid_argument("config: spiral_b must be finite");
}

RealVector woa_encircle_update(const RealVector& x, const RealVector& x_best,
                               const RealVector& A, const RealVector& C) {
    require_same_length(x, x_best, "woa_encircle_update");
    require_same_length(x, A, "woa_encircle_update");
    require_same_length(x, C, "woa_encircle_update");
    RealVector out(x.size());
    for (std::size_t d = 0; d < x.size(); ++d) {
        const double dist = std::fabs(C[d] * x_best[d] - x[d]);
        out[d] = x_best[d] - A[d] * dist;
    }
    return out;
}

RealVector woa_spiral_update(const RealVector& x, const RealVector& x_best,
                             double b, double k) {
    require_same_length(x, x_best, "woa_spiral_update");
    const double scale = std::exp(b * k) * std::cos(2.0 * std::numbers::pi * k);
    RealVector out(x.size());
    for (std::size_t d = 0; d < x.size(); ++d)
        out[d] = scale * std::fabs(x_best[d] - x[d]) + x_best[d];
    return out;
}

RealVector woa_search_update(const RealVector& x, const RealVector& x_rand,
                             const RealVector& A, const RealVector& C) {
    require_same_length(x, x_rand, "woa_search_update");
    require_same_length(x, A, "woa_search_update");
    require_same_length(x, C, "woa_search_update");
    RealVector out(x.size());
    for (std::size_t d = 0; d < x.size(); ++d) {
        const double dist = std::fabs(C[d] * x_rand[d] - x[d]);
        out[d] = x_rand[d] - A[d] * dist;
    }
    return out;
}

double bat_frequency(double f_min, double f_max, double beta) {
    if (!(f_min < f_max))
        throw std::invalid_argument("bat_frequency: f_min must be less than f_max");
    return f_min + (f_max - f_min) * beta;
}

std::pair<RealVector, RealVector> bat_velocity_position(const RealVector& x,
                                                        const RealVector& v,
                                                        const RealVector& x_best,
                                                        double f) {
    require_same_length(x, v, "bat_velocity_position");
    require_same_length(x, x_best, "bat_velocity_position");
    RealVector v_next(x.size()), x_next(x.size());
    for (std::size_t d = 0; d < x.size(); ++d) {
        v_next[d] = v[d] + (x[d] - x_best[d]) * f;
        x_next[d] = x[d] + v_next[d];
    }
    return {std::move(v_next), std::move(x_next)};
}

RealVector bat_local_walk(const RealVector& x_best, double mean_loudness,
                          RandomStream& rng) {
    if (mean_loudness < 0.0)
        throw std::invalid_argument("bat_local_walk: mean loudness must be nonnegative");
    RealVector out(x_best.size());
    for (std::size_t d = 0; d < x_best.size(); ++d)
        out[d] = x_best[d] + rng.uniform(-1.0, 1.0) * mean_loudness;
    return out;
}

SearchAgent greedy_accept(const SearchAgent& old,
                          const RealVector& candidate_position,
                          double candidate_fitness) {
    SearchAgent out = old;
    if (candidate_fitness <= old.fitness) {
        out.position = candidate_position;
        out.fitness = candidate_fitness;
    }
    return out;
}

WoaBranch choose_woa_branch(double p, double branch_A) {
    if (p >= 0.5) return WoaBranch::spiral;
    return std::fabs(branch_A) < 1.0 ? WoaBranch::encircle : WoaBranch::search;
}

RunResult woa_optimize(const ObjectiveSpec& objective,
                       const AlgorithmConfig& config, RandomStream& rng,
                       const IterationObserver& observer) {
    config.validate();
    RunClock clock;
    RunResult result;
    result.seed = rng.seed();

    auto agents = init_population(objective, config, rng);
    for (auto& agent : agents) {
        agent.fitness = evaluate(objective, agent.position, &rng);
        ++result.evaluations;
    }
    std::size_t elite = best_index(agents);
    RealVector elite_pos = agents[elite].position;
    double elite_fit = agents[elite].fitness;

    const std::size_t dim = objective.dimension;
    RealVector A(dim), C(dim);

    for (std::size_t t = 0; t < config.iterations; ++t) {
        const double a = linear_a_schedule(t, config.iterations);
        BranchCounters iter_branches;

        for (auto& agent : agents) {
            const double branch_A = coefficient_A(a, rng.uniform01());
            const double p = rng.uniform01();
            const WoaBranch branch = choose_woa_branch(p, branch_A);
            RealVector next;
            switch (branch) {
                case WoaBranch::spiral: {
                    ++iter_branches.spiral;
                    const double k = rng.uniform(-1.0, 1.0);
                    next = woa_spiral_update(agent.position, elite_pos,
                                             config.spiral_b, k);
                    break;
                }
                case WoaBranch::search: {
                    ++iter_branches.search;
                    const std::size_t j = rng.uniform_index(agents.size());
                    const RealVector target = agents[j].position;
                    for (std::size_t d = 0; d < dim; ++d) {
                        A[d] = coefficient_A(a, rng.uniform01());
                        C[d] = coefficient_C(rng.uniform01());
                    }
                    next = woa_search_update(agent.position, target, A, C);
                    break;
                }
                case WoaBranch::encircle: {
                    ++iter_branches.encircle;
                    for (std::size_t d = 0; d < dim; ++d) {
                        A[d] = coefficient_A(a, rng.uniform01());
                        C[d] = coefficient_C(rng.uniform01());
                    }
                    next = woa_encircle_update(agent.position, elite_pos, A, C);
                    break;
                }
            }
            clamp_to_bounds_inplace(next, objective.bounds);
            agent.position = std::move(next);
        }

        for (auto& agent : agents) {
            agent.fitness = evaluate(objective, agent.position, &rng);
            ++result.evaluations;
        }
        for (const auto& agent : agents) {
            if (agent.fitness < elite_fit) {
                elite_fit = agent.fitness;
                elite_pos = agent.position;
            }
        }

        result.trace.push_back(elite_fit);
        result.branches += iter_branches;
        if (observer)
            observer(IterationSnapshot{t, agents, iter_branches, elite_fit});
    }

    result.best_position = std::move(elite_pos);
    result.best_fitness = elite_fit;
    result.elapsed = clock.elapsed();
    return result;
}

RunResult bat_optimize(const ObjectiveSpec& objective,
                       const AlgorithmConfig& config, RandomStream& rng,
                       const IterationObserver& observer) {
    config.validate();
    RunClock clock;
    RunResult result;
    result.seed = rng.seed();

    auto agents = init_population(objective, config, rng);
    for (auto& agent : agents) {
        agent.fitness = evaluate(objective, agent.position, &rng);
        ++result.evaluations;
    }
    std::size_t elite = best_index(agents);
    RealVector elite_pos = agents[elite].position;
    double elite_fit = agents[elite].fitness;

    for (std::size_t t = 0; t < config.iterations; ++t) {
        double mean_loudness = 0.0;
        for (const auto& agent : agents) mean_loudness += agent.loudness;
        mean_loudness /= static_cast<double>(agents.size());

        for (auto& agent : agents) {
            const double beta = rng.uniform01();
            agent.frequency = bat_frequency(config.f_min, config.f_max, beta);
            auto [v_next, candidate] = bat_velocity_position(
                agent.position, agent.velocity, elite_pos, agent.frequency);
            agent.velocity = std::move(v_next); // flight state persists
            if (rng.uniform01() > agent.pulse_rate)
                candidate = bat_local_walk(elite_pos, mean_loudness, rng);
            clamp_to_bounds_inplace(candidate, objective.bounds);
            const double candidate_fit =
                evaluate(objective, candidate, &rng);
            ++result.evaluations;

            if (rng.uniform01() < agent.loudness &&
                candidate_fit < agent.fitness) {
                agent.position = candidate;
                agent.fitness = candidate_fit;
                agent.loudness *= config.alpha;
                agent.pulse_rate =
                    config.pulse_rate_init *
                    (1.0 - std::exp(-config.gamma * static_cast<double>(t + 1)));
            }
            // The global best tracks every evaluated candidate, accepted
            // or not.
            if (candidate_fit < elite_fit) {
                elite_fit = candidate_fit;
                elite_pos = candidate;
            }
        }

        result.trace.push_back(elite_fit);
        if (observer)
            observer(IterationSnapshot{t, agents, BranchCounters{}, elite_fit});
    }

    result.best_position = std::move(elite_pos);
    result.best_fitness = elite_fit;
    result.elapsed = clock.elapsed();
    return result;
}

RunResult woabat_optimize(const ObjectiveSpec& objective,
                          const AlgorithmConfig& config, RandomStream& rng,
                          const IterationObserver& observer) {
    config.validate();
    RunClock clock;
    RunResult result;
    result.seed = rng.seed();

    auto agents = init_population(objective, config, rng);
    for (auto& agent : agents) {
        agent.fitness = evaluate(objective, agent.position, &rng);
        ++result.evaluations;
    }
    std::size_t elite = best_index(agents);
    RealVector elite_pos = agents[elite].position;
    double elite_fit = agents[elite].fitness;

    for (std::size_t t = 0; t < config.iterations; ++t) {
        const double a = linear_a_schedule(t, config.iterations);
        BranchCounters iter_branches;

        for (auto& agent : agents) {
            const double branch_A = coefficient_A(a, rng.uniform01());
            const double p = rng.uniform01();
            const WoaBranch branch = choose_woa_branch(p, branch_A);
            RealVector candidate;
            if (branch == WoaBranch::spiral) {
                ++iter_branches.spiral;
                const double k = rng.uniform(-1.0, 1.0);
                candidate = woa_spiral_update(agent.position, elite_pos,
                                              config.spiral_b, k);
            } else {
                RealVector target;
                if (branch == WoaBranch::search) {
                    ++iter_branches.search;
                    const std::size_t j = rng.uniform_index(agents.size());
                    target = config.hybrid_mode == HybridMode::literal
                                 ? elite_pos
                                 : agents[j].position;
                } else {
                    ++iter_branches.encircle;
                    target = elite_pos;
                }
                const double beta = rng.uniform01();
                agent.frequency = bat_frequency(config.f_min, config.f_max, beta);
                auto [v_next, x_next] = bat_velocity_position(
                    agent.position, agent.velocity, target, agent.frequency);
                agent.velocity = std::move(v_next);
                candidate = std::move(x_next);
            }
            clamp_to_bounds_inplace(candidate, objective.bounds);
            const double candidate_fit =
                evaluate(objective, candidate, &rng);
            ++result.evaluations;

            if (candidate_fit <= agent.fitness) {
                agent.position = std::move(candidate);
                agent.fitness = candidate_fit;
                agent.loudness *= config.alpha;
                agent.pulse_rate =
                    config.pulse_rate_init *
                    (1.0 - std::exp(-config.gamma * static_cast<double>(t + 1)));
            }
        }

        for (const auto& agent : agents) {
            if (agent.fitness < elite_fit) {
                elite_fit = agent.fitness;
                elite_pos = agent.position;
            }
        }

        result.trace.push_back(elite_fit);
        result.branches += iter_branches;
        if (observer)
            observer(IterationSnapshot{t, agents, iter_branches, elite_fit});
    }

    result.best_position = std::move(elite_pos);
    result.best_fitness = elite_fit;
    result.elapsed = clock.elapsed();
    return result;
}

RunResult woa_optimize(const ObjectiveSpec& objective,
                       const AlgorithmConfig& config, std::uint64_t seed,
                       const IterationObserver& observer) {
    RandomStream rng(seed);
    return woa_optimize(objective, config, rng, observer);
}

RunResult bat_optimize(const ObjectiveSpec& objective,
                       const AlgorithmConfig& config, std::uint64_t seed,
                       const IterationObserver& observer) {
    RandomStream rng(seed);
    return bat_optimize(objective, config, rng, observer);
}

RunResult woabat_optimize(const ObjectiveSpec& objective,
                          const AlgorithmConfig& config, std::uint64_t seed,
                          const IterationObserver& observer) {
    RandomStream rng(seed);
    return woabat_optimize(objective, config, rng, observer);
}

const char* to_string(Algorithm a) {
    switch (a) {
        case Algorithm::woa: return "woa";
        case Algorithm::bat: return "bat";
        case Algorithm::woa_bat: return "woa-bat";
    }
    return "?";
}

Algorithm parse_algorithm(const std::string& name) {
    if (name == "woa") return Algorithm::woa;
    if (name == "bat") return Algorithm::bat;
    if (name == "woa-bat" || name == "woabat") return Algorithm::woa_bat;
    throw std::invalid_argument("unknown algorithm: " + name);
}

RunResult optimize(Algorithm algorithm, const ObjectiveSpec& objective,
                   const AlgorithmConfig& config, std::uint64_t seed,
                   const IterationObserver& observer) {
    switch (algorithm) {
        case Algorithm::woa: return woa_optimize(objective, config, seed, observer);
        case Algorithm::bat: return bat_optimize(objective, config, seed, observer);
        case Algorithm::woa_bat:
            return woabat_optimize(objective, config, seed, observer);
    }
    throw std::invalid_argument("optimize: bad algorithm");
}

} // namespace swarmopt
