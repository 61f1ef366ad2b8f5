#pragma once

#include <cstdint>
#include <vector>

#include "qopt/graph.hpp"
#include "qopt/qubo.hpp"
#include "qopt/rational.hpp"
#include "qopt/sample_set.hpp"

namespace qopt {

struct ExactResult {
    Rational optimal_value;
    std::vector<int> assignment;      // one optimum; lexicographically first for brute force
    std::int64_t optimum_count = 0;   // number of optimal assignments
    bool certified = false;
    std::int64_t explored_nodes = 0;
};

inline constexpr int kBruteForceMaxQubits = 24;

/// Exhaustive scan of all 2^n assignments with exact arithmetic. Ground-truth
/// oracle for everything else; guarded at n <= 24.
ExactResult brute_force_qubo(const Qubo& q);

/// Certified maximum-weight independent set. Branches on the remaining
/// highest-degree vertex; bound is current weight plus all undecided weights;
/// prunes strictly below the incumbent so ties are counted exactly.
/// optimal_value is the weight (maximize sense), assignment the incidence
/// vector.
ExactResult mwis_branch_and_bound(const WeightedGraph& g);

struct AnnealingParams {
    int sweeps = 100;
    double beta_start = 0.1;
    double beta_end = 10.0;  // geometric interpolation between the two
};

/// Metropolis single-spin-flip annealing; every shot is an independent
/// restart seeded from (seed, shot index), so runs are reproducible and
/// shots could execute in parallel. Final energies are recomputed exactly.
SampleSet simulated_annealing(const IsingModel& m, const AnnealingParams& params,
                              std::int64_t shots, std::uint64_t seed);

}  // namespace qopt
