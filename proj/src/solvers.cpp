#include "qopt/solvers.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

#include "qopt/errors.hpp"
#include "qopt/rng.hpp"

namespace qopt {

ExactResult brute_force_qubo(const Qubo& q) {
    const int n = q.size();
    if (n > kBruteForceMaxQubits)
        throw size_guard_error("brute force is guarded at " +
                               std::to_string(kBruteForceMaxQubits) + " qubits");

    std::vector<Rational> diagonal(n, Rational(0));
    std::vector<std::vector<std::pair<int, Rational>>> neighbors(n);
    for (const auto& [key, c] : q.coefficients()) {
        auto [i, j] = key;
        if (i == j) {
            diagonal[i] = c;
        } else {
            neighbors[i].emplace_back(j, c);
            neighbors[j].emplace_back(i, c);
        }
    }

    std::vector<int> x(n, 0);
    Rational energy = q.offset();
    ExactResult best{energy, x, 1, true, 1};

    // Gray-code walk: consecutive assignments differ in one bit, so the
    // energy update is the local field of the flipped qubit.
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t step = 1; step < total; ++step) {
        const int i = std::countr_zero(step);
        Rational delta = diagonal[i];
        for (const auto& [j, c] : neighbors[i])
            if (x[j] != 0) delta += c;
        if (x[i] != 0)
            energy -= delta;
        else
            energy += delta;
        x[i] ^= 1;

        if (energy < best.optimal_value) {
            best.optimal_value = energy;
            best.assignment = x;
            best.optimum_count = 1;
        } else if (energy == best.optimal_value) {
            ++best.optimum_count;
            if (x < best.assignment) best.assignment = x;
        }
    }
    best.explored_nodes = static_cast<std::int64_t>(total);
    return best;
}

namespace {

struct BnbState {
    const WeightedGraph* graph;
    std::vector<std::uint64_t> adjacency;  // bitmask per vertex
    std::int64_t best_weight = -1;
    std::uint64_t best_mask = 0;
    std::int64_t optimum_count = 0;
    std::int64_t explored = 0;

    void explore(std::int64_t weight, std::uint64_t selected, std::uint64_t undecided) {
        ++explored;
        std::int64_t bound = weight;
        for (std::uint64_t rest = undecided; rest != 0; rest &= rest - 1)
            bound += graph->weight(std::countr_zero(rest));
        if (bound < best_weight) return;

        if (undecided == 0) {
            if (weight > best_weight) {
                best_weight = weight;
                best_mask = selected;
                optimum_count = 1;
            } else if (weight == best_weight) {
                ++optimum_count;
            }
            return;
        }

        // Branch on the vertex with most undecided neighbors.
        int pick = -1, pick_degree = -1;
        for (std::uint64_t rest = undecided; rest != 0; rest &= rest - 1) {
            const int v = std::countr_zero(rest);
            const int degree = std::popcount(adjacency[v] & undecided);
            if (degree > pick_degree) {
                pick = v;
                pick_degree = degree;
            }
        }
        const std::uint64_t bit = std::uint64_t{1} << pick;
        // Include: the vertex and its neighbors leave the undecided set.
        explore(weight + graph->weight(pick), selected | bit,
                undecided & ~(adjacency[pick] | bit));
        // Exclude.
        explore(weight, selected, undecided & ~bit);
    }
};

}  // namespace

ExactResult mwis_branch_and_bound(const WeightedGraph& g) {
    const int n = g.vertex_count();
    if (n > 64)
        throw size_guard_error("branch and bound uses 64-bit vertex masks");

    BnbState state;
    state.graph = &g;
    state.adjacency.assign(n, 0);
    for (const auto& [u, v] : g.edges()) {
        state.adjacency[u] |= std::uint64_t{1} << v;
        state.adjacency[v] |= std::uint64_t{1} << u;
    }
    const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    state.explore(0, 0, all);

    ExactResult result;
    result.optimal_value = Rational(state.best_weight);
    result.assignment.assign(n, 0);
    for (int v = 0; v < n; ++v)
        if (state.best_mask & (std::uint64_t{1} << v)) result.assignment[v] = 1;
    result.optimum_count = state.optimum_count;
    result.certified = true;
    result.explored_nodes = state.explored;
    return result;
}

SampleSet simulated_annealing(const IsingModel& m, const AnnealingParams& params,
                              std::int64_t shots, std::uint64_t seed) {
    if (params.beta_start <= 0 || params.beta_end <= 0 || params.beta_start > params.beta_end)
        throw std::invalid_argument("annealing schedule requires 0 < beta_start <= beta_end");
    if (params.sweeps < 1) throw std::invalid_argument("sweeps must be >= 1");
    if (shots < 1) throw std::invalid_argument("shots must be >= 1");

    const int n = m.size();
    std::vector<double> field(n);
    for (int i = 0; i < n; ++i) field[i] = to_double(m.field(i));
    std::vector<std::vector<std::pair<int, double>>> neighbors(n);
    for (const auto& [key, J] : m.couplings()) {
        const double c = to_double(J);
        neighbors[key.first].emplace_back(key.second, c);
        neighbors[key.second].emplace_back(key.first, c);
    }

    std::vector<double> beta(params.sweeps);
    const double ratio = params.beta_end / params.beta_start;
    for (int t = 0; t < params.sweeps; ++t) {
        const double frac = params.sweeps > 1 ? static_cast<double>(t) / (params.sweeps - 1) : 1.0;
        beta[t] = params.beta_start * std::pow(ratio, frac);
    }

    std::vector<SampleEntry> raw;
    raw.reserve(shots);
    std::vector<int> spins(n);
    for (std::int64_t shot = 0; shot < shots; ++shot) {
        std::mt19937_64 rng(mix_seed(seed, static_cast<std::uint64_t>(shot)));
        for (int i = 0; i < n; ++i) spins[i] = (rng() & 1) ? 1 : -1;

        for (int t = 0; t < params.sweeps; ++t) {
            for (int i = 0; i < n; ++i) {
                double local = field[i];
                for (const auto& [j, c] : neighbors[i]) local += c * spins[j];
                const double delta = 2.0 * spins[i] * local;
                if (delta <= 0.0 || canonical_double(rng) < std::exp(-beta[t] * delta))
                    spins[i] = -spins[i];
            }
        }

        SampleEntry entry;
        entry.bits.resize(n);
        for (int i = 0; i < n; ++i) entry.bits[i] = spins[i] == 1 ? 0 : 1;
        entry.energy = evaluate_ising(m, spins);
        entry.count = 1;
        raw.push_back(std::move(entry));
    }

    return SampleSet::from_shots("sa", seed,
                                 {{"sweeps", static_cast<double>(params.sweeps)},
                                  {"beta_start", params.beta_start},
                                  {"beta_end", params.beta_end}},
                                 std::move(raw));
}

}  // namespace qopt
