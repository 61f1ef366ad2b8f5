#include "qopt/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "qopt/errors.hpp"
#include "qopt/qubo.hpp"
#include "qopt/quantum.hpp"
#include "qopt/rng.hpp"
#include "qopt/solvers.hpp"

namespace qopt {

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t elapsed_ms(Clock::time_point start, Clock::time_point end) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(end - start).count();
}

double param_or(const std::map<std::string, double>& params, const std::string& key,
                double fallback) {
    auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
}

SampleSet exact_result_to_samples(const std::string& solver, const ExactResult& result) {
    SampleEntry entry{result.assignment, result.optimal_value, 1};
    return SampleSet::from_shots(solver, 0, {}, {entry});
}

}  // namespace

Rational success_frequency(const SampleSet& samples, std::int64_t target,
                           const WeightedGraph& g) {
    if (samples.shots() == 0) throw std::invalid_argument("sample set has zero shots");
    std::int64_t hits = 0;
    for (const SampleEntry& e : samples.entries()) {
        MwisDecoded d = decode_mwis(g, e.bits);
        if (d.feasible && d.weight == target) hits += e.count;
    }
    return Rational(hits, samples.shots());
}

SolverRun run_solver_on_graph(const SolverSpec& spec, const WeightedGraph& g,
                              const Rational& penalty, std::int64_t shots,
                              std::uint64_t seed, bool record_timing) {
    SolverRun run;
    const auto build_start = Clock::now();

    if (spec.name == "bnb") {
        const auto solve_start = Clock::now();
        ExactResult result = mwis_branch_and_bound(g);
        const auto solve_end = Clock::now();
        run.samples = exact_result_to_samples("bnb", result);
        run.build_time_ms = record_timing ? elapsed_ms(build_start, solve_start) : 0;
        run.solve_time_ms = record_timing ? elapsed_ms(solve_start, solve_end) : 0;
        return run;
    }

    if (spec.name == "bruteforce") {
        Qubo q = mwis_direct_qubo(g, penalty);
        if (q.size() > kBruteForceMaxQubits) throw size_guard_error("size guard");
        const auto solve_start = Clock::now();
        ExactResult result = brute_force_qubo(q);
        const auto solve_end = Clock::now();
        run.samples = exact_result_to_samples("bruteforce", result);
        run.build_time_ms = record_timing ? elapsed_ms(build_start, solve_start) : 0;
        run.solve_time_ms = record_timing ? elapsed_ms(solve_start, solve_end) : 0;
        return run;
    }

    if (spec.name == "sa") {
        IsingModel ising = qubo_to_ising(mwis_direct_qubo(g, penalty));
        AnnealingParams params;
        params.sweeps = static_cast<int>(param_or(spec.params, "sweeps", params.sweeps));
        params.beta_start = param_or(spec.params, "beta_start", params.beta_start);
        params.beta_end = param_or(spec.params, "beta_end", params.beta_end);
        const auto solve_start = Clock::now();
        run.samples = simulated_annealing(ising, params, shots, seed);
        const auto solve_end = Clock::now();
        run.build_time_ms = record_timing ? elapsed_ms(build_start, solve_start) : 0;
        run.solve_time_ms = record_timing ? elapsed_ms(solve_start, solve_end) : 0;
        return run;
    }

    if (spec.name == "anneal") {
        if (g.vertex_count() > kStateVectorMaxQubits) throw size_guard_error("size guard");
        IsingModel ising = qubo_to_ising(mwis_direct_qubo(g, penalty));
        AnnealSchedule schedule;
        schedule.total_time = param_or(spec.params, "T", schedule.total_time);
        schedule.dt = param_or(spec.params, "dt", schedule.dt);
        const auto solve_start = Clock::now();
        StateVector psi = anneal_evolve(ising, schedule);
        run.samples = sample_state(psi, ising, shots, mix_seed(seed, 0xa11eau), "anneal");
        const auto solve_end = Clock::now();
        run.build_time_ms = record_timing ? elapsed_ms(build_start, solve_start) : 0;
        run.solve_time_ms = record_timing ? elapsed_ms(solve_start, solve_end) : 0;
        return run;
    }

    if (spec.name == "qaoa") {
        if (g.vertex_count() > kStateVectorMaxQubits) throw size_guard_error("size guard");
        IsingModel ising = qubo_to_ising(mwis_direct_qubo(g, penalty));
        QaoaOptions options;
        options.depth = static_cast<int>(param_or(spec.params, "depth", options.depth));
        options.restarts = static_cast<int>(param_or(spec.params, "restarts", options.restarts));
        options.max_iterations =
            static_cast<int>(param_or(spec.params, "max_iters", options.max_iterations));
        options.shots = shots;
        const auto solve_start = Clock::now();
        run.samples = qaoa_optimize(ising, options, seed).samples;
        const auto solve_end = Clock::now();
        run.build_time_ms = record_timing ? elapsed_ms(build_start, solve_start) : 0;
        run.solve_time_ms = record_timing ? elapsed_ms(solve_start, solve_end) : 0;
        return run;
    }

    throw std::invalid_argument("unknown solver '" + spec.name + "'");
}

std::vector<BenchmarkRecord> run_benchmark(const BenchmarkConfig& config) {
    if (config.sizes.empty()) throw std::invalid_argument("config has no sizes");
    if (config.instances_per_size < 1)
        throw std::invalid_argument("instances_per_size must be >= 1");
    if (config.solvers.empty()) throw std::invalid_argument("config has no solvers");
    if (!config.penalty_auto && config.fixed_penalty <= 0)
        throw std::invalid_argument("fixed penalty must be positive");

    std::vector<BenchmarkRecord> records;
    for (int size : config.sizes) {
        for (int index = 0; index < config.instances_per_size; ++index) {
            const std::uint64_t seed = mix_seed(config.base_seed, static_cast<std::uint64_t>(size),
                                                static_cast<std::uint64_t>(index));
            const WeightedGraph g = generate_random_graph(size, config.edge_probability, seed);
            const std::int64_t optimum =
                mwis_branch_and_bound(g).optimal_value.numerator();
            const Rational penalty =
                config.penalty_auto ? Rational(default_penalty(g)) : config.fixed_penalty;

            char id[32];
            std::snprintf(id, sizeof(id), "k%d_i%03d", size, index);

            for (const SolverSpec& spec : config.solvers) {
                BenchmarkRecord rec;
                rec.instance_id = id;
                rec.size = size;
                rec.instance_index = index;
                rec.seed = seed;
                rec.solver = spec.name;
                rec.optimal_value = optimum;

                const bool exact = spec.name == "bnb" || spec.name == "bruteforce";
                rec.shots = exact ? 1 : config.shots;
                try {
                    SolverRun run = run_solver_on_graph(spec, g, penalty, rec.shots,
                                                        mix_seed(seed, 0x50e0u),
                                                        config.record_timing);
                    rec.build_time_ms = run.build_time_ms;
                    rec.solve_time_ms = run.solve_time_ms;
                    rec.feasible = decode_mwis(g, run.samples.best().bits).feasible;

                    std::int64_t best_feasible = -1;
                    for (const SampleEntry& e : run.samples.entries()) {
                        MwisDecoded d = decode_mwis(g, e.bits);
                        if (d.feasible) best_feasible = std::max(best_feasible, d.weight);
                    }
                    rec.best_value = best_feasible < 0 ? 0 : best_feasible;
                    rec.gap = optimum - rec.best_value;
                    rec.success_frequency =
                        exact ? Rational(1) : success_frequency(run.samples, optimum, g);
                } catch (const size_guard_error&) {
                    rec.status = "skipped: size guard";
                    rec.gap = optimum;
                }
                records.push_back(std::move(rec));
            }
        }
    }
    return records;
}

namespace {

const char* kCsvHeader =
    "instance_id,size,seed,solver,build_time_ms,solve_time_ms,shots,best_value,"
    "optimal_value,gap,success_freq,feasible,status";

std::vector<BenchmarkRecord> sorted_records(std::vector<BenchmarkRecord> records) {
    std::stable_sort(records.begin(), records.end(),
                     [](const BenchmarkRecord& a, const BenchmarkRecord& b) {
                         if (a.size != b.size) return a.size < b.size;
                         if (a.instance_id != b.instance_id) return a.instance_id < b.instance_id;
                         return a.solver < b.solver;
                     });
    return records;
}

}  // namespace

std::string write_records_csv(const std::vector<BenchmarkRecord>& records) {
    std::ostringstream out;
    out << kCsvHeader << '\n';
    for (const BenchmarkRecord& r : sorted_records(records)) {
        out << r.instance_id << ',' << r.size << ',' << r.seed << ',' << r.solver << ','
            << r.build_time_ms << ',' << r.solve_time_ms << ',' << r.shots << ','
            << r.best_value << ',' << r.optimal_value << ',' << r.gap << ','
            << format_rational(r.success_frequency) << ',' << (r.feasible ? "true" : "false")
            << ',' << r.status << '\n';
    }
    return out.str();
}

std::vector<BenchmarkRecord> parse_records_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != kCsvHeader)
        throw parse_error(1, "unexpected CSV header");
    std::vector<BenchmarkRecord> records;
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::vector<std::string> fields;
        std::size_t start = 0;
        // The status field may contain ": "; only the first 12 commas split.
        while (fields.size() < 12) {
            std::size_t comma = line.find(',', start);
            if (comma == std::string::npos) throw parse_error(line_no, "too few fields");
            fields.push_back(line.substr(start, comma - start));
            start = comma + 1;
        }
        fields.push_back(line.substr(start));
        try {
            BenchmarkRecord r;
            r.instance_id = fields[0];
            r.size = std::stoi(fields[1]);
            r.seed = std::stoull(fields[2]);
            r.solver = fields[3];
            r.build_time_ms = std::stoll(fields[4]);
            r.solve_time_ms = std::stoll(fields[5]);
            r.shots = std::stoll(fields[6]);
            r.best_value = std::stoll(fields[7]);
            r.optimal_value = std::stoll(fields[8]);
            r.gap = std::stoll(fields[9]);
            r.success_frequency = parse_rational(fields[10]);
            r.feasible = fields[11] == "true";
            r.status = fields[12];
            if (auto underscore = r.instance_id.find("_i"); underscore != std::string::npos)
                r.instance_index = std::stoi(r.instance_id.substr(underscore + 2));
            records.push_back(std::move(r));
        } catch (const std::exception& e) {
            throw parse_error(line_no, e.what());
        }
    }
    return records;
}

std::vector<BenchmarkRecord> parse_records_csv(const std::string& text) {
    std::istringstream in(text);
    return parse_records_csv(in);
}

std::string write_records_json(const std::vector<BenchmarkRecord>& records) {
    nlohmann::json out = nlohmann::json::array();
    for (const BenchmarkRecord& r : sorted_records(records)) {
        out.push_back({{"instance_id", r.instance_id},
                       {"size", r.size},
                       {"seed", r.seed},
                       {"solver", r.solver},
                       {"build_time_ms", r.build_time_ms},
                       {"solve_time_ms", r.solve_time_ms},
                       {"shots", r.shots},
                       {"best_value", r.best_value},
                       {"optimal_value", r.optimal_value},
                       {"gap", r.gap},
                       {"success_freq", to_double(r.success_frequency)},
                       {"feasible", r.feasible},
                       {"status", r.status}});
    }
    return out.dump(2) + "\n";
}

std::vector<TrendRow> trend_summary(const std::vector<BenchmarkRecord>& records) {
    if (records.empty()) throw std::invalid_argument("no records to summarize");
    std::map<std::pair<std::string, int>, TrendRow> groups;
    for (const BenchmarkRecord& r : records) {
        if (r.status != "ok") continue;
        TrendRow& row = groups[{r.solver, r.size}];
        row.solver = r.solver;
        row.size = r.size;
        ++row.record_count;
        row.mean_success_frequency += to_double(r.success_frequency);
        row.mean_gap += static_cast<double>(r.gap);
        row.mean_solve_time_ms += static_cast<double>(r.solve_time_ms);
    }
    std::vector<TrendRow> rows;
    for (auto& [key, row] : groups) {
        row.mean_success_frequency /= row.record_count;
        row.mean_gap /= row.record_count;
        row.mean_solve_time_ms /= row.record_count;
        rows.push_back(row);
    }
    return rows;
}

namespace {

std::string trend_tsv(const std::vector<TrendRow>& rows, const std::string& solver,
                      const char* column, double TrendRow::* field) {
    std::ostringstream out;
    out << "size\t" << column << '\n';
    for (const TrendRow& r : rows)
        if (r.solver == solver) out << r.size << '\t' << r.*field << '\n';
    return out.str();
}

}  // namespace

std::string write_success_tsv(const std::vector<TrendRow>& rows, const std::string& solver) {
    return trend_tsv(rows, solver, "mean_success_freq", &TrendRow::mean_success_frequency);
}

std::string write_time_tsv(const std::vector<TrendRow>& rows, const std::string& solver) {
    return trend_tsv(rows, solver, "mean_solve_time_ms", &TrendRow::mean_solve_time_ms);
}

namespace {

std::vector<double> average_ranks(const std::vector<double>& values) {
    const std::size_t n = values.size();
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    std::vector<double> ranks(n, 0.0);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && values[idx[j + 1]] == values[idx[i]]) ++j;
        const double rank = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
        for (std::size_t k = i; k <= j; ++k) ranks[idx[k]] = rank;
        i = j + 1;
    }
    return ranks;
}

}  // namespace

double spearman_rho(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2)
        throw std::invalid_argument("spearman needs two equal-length series");
    std::vector<double> rx = average_ranks(x), ry = average_ranks(y);
    const double n = static_cast<double>(x.size());
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += rx[i];
        my += ry[i];
    }
    mx /= n;
    my /= n;
    double cov = 0, vx = 0, vy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        cov += (rx[i] - mx) * (ry[i] - my);
        vx += (rx[i] - mx) * (rx[i] - mx);
        vy += (ry[i] - my) * (ry[i] - my);
    }
    if (vx == 0.0 || vy == 0.0) return 0.0;
    return cov / std::sqrt(vx * vy);
}

BenchmarkConfig benchmark_config_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    if (!j.is_object()) throw std::invalid_argument("config must be a JSON object");

    static const std::map<std::string, std::set<std::string>> kSolverParams = {
        {"bruteforce", {}},
        {"bnb", {}},
        {"sa", {"sweeps", "beta_start", "beta_end"}},
        {"anneal", {"T", "dt"}},
        {"qaoa", {"depth", "restarts", "max_iters"}},
    };

    BenchmarkConfig config;
    std::map<std::string, std::map<std::string, double>> solver_params;
    std::vector<std::string> solver_names;

    for (const auto& [key, value] : j.items()) {
        if (key == "sizes") {
            config.sizes = value.get<std::vector<int>>();
        } else if (key == "instances_per_size") {
            config.instances_per_size = value.get<int>();
        } else if (key == "edge_probability") {
            config.edge_probability = value.get<double>();
        } else if (key == "seed") {
            config.base_seed = value.get<std::uint64_t>();
        } else if (key == "shots") {
            config.shots = value.get<std::int64_t>();
        } else if (key == "solvers") {
            solver_names = value.get<std::vector<std::string>>();
        } else if (key == "penalty") {
            if (value.is_string() && value.get<std::string>() == "auto") {
                config.penalty_auto = true;
            } else if (value.is_string()) {
                config.penalty_auto = false;
                config.fixed_penalty = parse_rational(value.get<std::string>());
            } else {
                config.penalty_auto = false;
                config.fixed_penalty = parse_rational(value.dump());
            }
        } else if (key == "no_timing") {
            config.record_timing = !value.get<bool>();
        } else if (auto underscore = key.find('_'); underscore != std::string::npos &&
                                                    kSolverParams.count(key.substr(0, underscore))) {
            const std::string solver = key.substr(0, underscore);
            const std::string param = key.substr(underscore + 1);
            if (!kSolverParams.at(solver).count(param))
                throw std::invalid_argument("unknown config key '" + key + "'");
            solver_params[solver][param] = value.get<double>();
        } else {
            throw std::invalid_argument("unknown config key '" + key + "'");
        }
    }

    for (const std::string& name : solver_names) {
        if (!kSolverParams.count(name))
            throw std::invalid_argument("unknown solver '" + name + "'");
        config.solvers.push_back({name, solver_params[name]});
    }
    return config;
}

}  // namespace qopt
