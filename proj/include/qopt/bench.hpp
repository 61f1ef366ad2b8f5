#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "qopt/graph.hpp"
#include "qopt/rational.hpp"
#include "qopt/sample_set.hpp"

namespace qopt {

struct SolverSpec {
    std::string name;  // bruteforce | bnb | sa | anneal | qaoa
    std::map<std::string, double> params;
};

struct BenchmarkConfig {
    std::vector<int> sizes;
    int instances_per_size = 1;
    double edge_probability = 0.5;
    std::uint64_t base_seed = 1;
    std::vector<SolverSpec> solvers;
    std::int64_t shots = 1000;
    bool penalty_auto = true;     // heuristic penalty; otherwise fixed_penalty
    Rational fixed_penalty = 0;
    bool record_timing = true;    // false zeroes the *_time_ms fields
};

/// One solver-on-instance row. build_time_ms covers graph -> QUBO -> solver
/// input construction (the desk-scale analog of hardware embedding time);
/// optimal_value is certified by branch and bound, so gap >= 0 always.
struct BenchmarkRecord {
    std::string instance_id;
    int size = 0;
    int instance_index = 0;
    std::uint64_t seed = 0;
    std::string solver;
    std::int64_t build_time_ms = 0;
    std::int64_t solve_time_ms = 0;
    std::int64_t shots = 0;
    std::int64_t best_value = 0;     // best feasible decoded weight (original sense)
    std::int64_t optimal_value = 0;
    std::int64_t gap = 0;
    Rational success_frequency;
    bool feasible = false;           // whether the lowest-energy sample decodes feasible
    std::string status = "ok";       // or "skipped: <reason>"
};

/// Fraction of shots decoding to a feasible independent set of exactly the
/// target weight.
Rational success_frequency(const SampleSet& samples, std::int64_t target,
                           const WeightedGraph& g);

/// Runs every (size, instance, solver) cell: instance seeds derive
/// deterministically from (base seed, size, index), the certified optimum
/// comes from branch and bound, and solvers whose qubit guard is exceeded
/// yield a skipped record instead of failing the run.
std::vector<BenchmarkRecord> run_benchmark(const BenchmarkConfig& config);

/// Builds the solver input for one graph (timed) and solves it (timed).
struct SolverRun {
    SampleSet samples;
    std::int64_t build_time_ms = 0;
    std::int64_t solve_time_ms = 0;
};
SolverRun run_solver_on_graph(const SolverSpec& spec, const WeightedGraph& g,
                              const Rational& penalty, std::int64_t shots,
                              std::uint64_t seed, bool record_timing = true);

/// CSV with the fixed header
/// instance_id,size,seed,solver,build_time_ms,solve_time_ms,shots,best_value,
/// optimal_value,gap,success_freq,feasible,status
/// and rows sorted by (size, instance_id, solver).
std::string write_records_csv(const std::vector<BenchmarkRecord>& records);
std::vector<BenchmarkRecord> parse_records_csv(std::istream& in);
std::vector<BenchmarkRecord> parse_records_csv(const std::string& text);

std::string write_records_json(const std::vector<BenchmarkRecord>& records);

struct TrendRow {
    std::string solver;
    int size = 0;
    int record_count = 0;
    double mean_success_frequency = 0.0;
    double mean_gap = 0.0;
    double mean_solve_time_ms = 0.0;
};

/// Per-(solver, size) means over non-skipped records.
std::vector<TrendRow> trend_summary(const std::vector<BenchmarkRecord>& records);

/// Two-column TSVs for external plotting.
std::string write_success_tsv(const std::vector<TrendRow>& rows, const std::string& solver);
std::string write_time_tsv(const std::vector<TrendRow>& rows, const std::string& solver);

/// Spearman rank correlation with average ranks for ties; 0 when either
/// side is constant.
double spearman_rho(const std::vector<double>& x, const std::vector<double>& y);

/// Parses the flat JSON configuration (unknown keys rejected).
BenchmarkConfig benchmark_config_from_json(const std::string& text);

}  // namespace qopt
