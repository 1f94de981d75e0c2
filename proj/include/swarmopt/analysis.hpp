#ifndef SWARMOPT_ANALYSIS_HPP
#define SWARMOPT_ANALYSIS_HPP

#include <string>
#include <vector>

namespace swarmopt {

/// Summary of repeated-run fitness values. The standard deviation uses the
/// sample (n-1) denominator.
struct StatSummary {
    double mean = 0.0;
    double std = 0.0;
    double best = 0.0;
    double worst = 0.0;
    double median = 0.0;
    std::size_t n = 0;
};

StatSummary summarize_runs(const std::vector<double>& fitnesses);

/// Mean results per (function, algorithm) pair, the unit of comparison.
struct ResultsMatrix {
    std::vector<std::string> functions;
    std::vector<std::string> algorithms;
    std::vector<std::vector<double>> means; // [function][algorithm]

    void validate() const;
};

/// Per-function ranks (1 = best, ties averaged), rank sums, and rank sums
/// divided by the function count.
struct RankTable {
    std::vector<std::string> algorithms;
    std::vector<std::vector<double>> per_function_ranks; // [function][algorithm]
    std::vector<double> per_algorithm_sum;
    std::vector<double> overall_rank;
};

/// Rank algorithms per function by ascending mean; aggregate rank sums.
RankTable rank_by_mean(const ResultsMatrix& matrix);

/// Aggregation step alone: sums and overall ranks from given per-function
/// ranks. rank_by_mean uses this after ranking each row.
RankTable aggregate_ranks(std::vector<std::string> algorithms,
                          std::vector<std::vector<double>> per_function_ranks);

/// Friedman chi-square over the rank table:
/// chi2 = 12N/(k(k+1)) * sum_j meanrank_j^2 - 3N(k+1).
double friedman_statistic(const RankTable& ranks);

struct WinCount {
    std::size_t wins = 0;
    std::size_t ties = 0;
    std::size_t losses = 0;
};

/// Strict componentwise comparison; a[i] < b[i] counts as a win for a.
WinCount win_count(const std::vector<double>& a_means,
                   const std::vector<double>& b_means);

} // namespace swarmopt

#endif
