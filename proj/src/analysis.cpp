#include "swarmopt/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace swarmopt {

StatSummary summarize_runs(const std::vector<double>& fitnesses) {
    if (fitnesses.empty())
        throw std::invalid_argument("summarize_runs: empty input");
    StatSummary s;
    s.n = fitnesses.size();
    s.mean = std::accumulate(fitnesses.begin(), fitnesses.end(), 0.0) /
             static_cast<double>(s.n);
    if (s.n > 1) {
        double ss = 0.0;
        for (double v : fitnesses) ss += (v - s.mean) * (v - s.mean);
        s.std = std::sqrt(ss / static_cast<double>(s.n - 1));
    }
    std::vector<double> sorted = fitnesses;
    std::sort(sorted.begin(), sorted.end());
    s.best = sorted.front();
    s.worst = sorted.back();
    s.median = (s.n % 2 == 1)
                   ? sorted[s.n / 2]
                   : 0.5 * (sorted[s.n / 2 - 1] + sorted[s.n / 2]);
    return s;
}

void ResultsMatrix::validate() const {
    if (functions.empty() || algorithms.empty())
        throw std::invalid_argument("results matrix: needs at least one function and algorithm");
    if (means.size() != functions.size())
        throw std::invalid_argument("results matrix: row count does not match function count");
    for (const auto& row : means) {
        if (row.size() != algorithms.size())
            throw std::invalid_argument("results matrix: row width does not match algorithm count");
        for (double v : row)
            if (!std::isfinite(v))
                throw std::invalid_argument("results matrix: non-finite entry");
    }
}

namespace {

/// Ascending ranks with tied values receiving the average of the tied
/// rank positions.
std::vector<double> rank_row(const std::vector<double>& values) {
    const std::size_t k = values.size();
    std::vector<std::size_t> order(k);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return values[a] < values[b];
    });
    std::vector<double> ranks(k, 0.0);
    std::size_t i = 0;
    while (i < k) {
        std::size_t j = i;
        while (j + 1 < k && values[order[j + 1]] == values[order[i]]) ++j;
        const double avg =
            0.5 * (static_cast<double>(i + 1) + static_cast<double>(j + 1));
        for (std::size_t m = i; m <= j; ++m) ranks[order[m]] = avg;
        i = j + 1;
    }
    return ranks;
}

} // namespace

RankTable aggregate_ranks(std::vector<std::string> algorithms,
                          std::vector<std::vector<double>> per_function_ranks) {
    if (per_function_ranks.empty())
        throw std::invalid_argument("aggregate_ranks: no functions");
    for (const auto& row : per_function_ranks)
        if (row.size() != algorithms.size())
            throw std::invalid_argument("aggregate_ranks: rank row width mismatch");
    RankTable table;
    table.algorithms = std::move(algorithms);
    table.per_function_ranks = std::move(per_function_ranks);
    const std::size_t k = table.algorithms.size();
    table.per_algorithm_sum.assign(k, 0.0);
    for (const auto& row : table.per_function_ranks)
        for (std::size_t j = 0; j < k; ++j) table.per_algorithm_sum[j] += row[j];
    const double n = static_cast<double>(table.per_function_ranks.size());
    table.overall_rank.resize(k);
    for (std::size_t j = 0; j < k; ++j)
        table.overall_rank[j] = table.per_algorithm_sum[j] / n;
    return table;
}

RankTable rank_by_mean(const ResultsMatrix& matrix) {
    matrix.validate();
    std::vector<std::vector<double>> ranks;
    ranks.reserve(matrix.means.size());
    for (const auto& row : matrix.means) ranks.push_back(rank_row(row));
    return aggregate_ranks(matrix.algorithms, std::move(ranks));
}

double friedman_statistic(const RankTable& ranks) {
    const std::size_t k = ranks.algorithms.size();
    const std::size_t N = ranks.per_function_ranks.size();
    if (k < 2 || N < 2)
        throw std::invalid_argument(
            "friedman_statistic: needs at least 2 algorithms and 2 functions");
    double sum_sq = 0.0;
    for (std::size_t j = 0; j < k; ++j) {
        const double mean_rank =
            ranks.per_algorithm_sum[j] / static_cast<double>(N);
        sum_sq += mean_rank * mean_rank;
    }
    const double kd = static_cast<double>(k);
    const double Nd = static_cast<double>(N);
    return 12.0 * Nd / (kd * (kd + 1.0)) * sum_sq - 3.0 * Nd * (kd + 1.0);
}

WinCount win_count(const std::vector<double>& a_means,
                   const std::vector<double>& b_means) {
    if (a_means.size() != b_means.size())
        throw std::invalid_argument("win_count: length mismatch");
    WinCount w;
    for (std::size_t i = 0; i < a_means.size(); ++i) {
        if (a_means[i] < b_means[i])
            ++w.wins;
        else if (a_means[i] == b_means[i])
            ++w.ties;
        else
            ++w.losses;
    }
    return w;
}

} // namespace swarmopt
