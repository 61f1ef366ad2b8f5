#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "qopt/qubo.hpp"
#include "qopt/sample_set.hpp"

namespace qopt {

inline constexpr int kDiagonalMaxQubits = 20;
inline constexpr int kStateVectorMaxQubits = 16;

/// Dense 2^n state vector. Basis-state index b encodes qubit i as bit i
/// (LSB = qubit 0); bit 0 corresponds to spin +1, bit 1 to spin -1.
struct StateVector {
    int qubit_count = 0;
    std::vector<std::complex<double>> amplitudes;

    double norm_squared() const;
};

/// Linear annealing schedule with driver weight A(t) = 1 - t/T and problem
/// weight B(t) = t/T over dimensionless time (hbar = 1).
struct AnnealSchedule {
    double total_time = 50.0;
    double dt = 0.01;

    double driver_weight(double t) const { return 1.0 - t / total_time; }
    double problem_weight(double t) const { return t / total_time; }
};

/// Problem Hamiltonian as a diagonal: entry b is the Ising energy of the spin
/// configuration encoded by basis state b. Guarded at n <= 20.
std::vector<double> problem_diagonal(const IsingModel& m);

/// Continuous-time annealing from the uniform superposition (ground state of
/// the driver -sum sigma^x) under H(t) = A(t) H_0 + B(t) H_p, integrated with
/// second-order Strang splitting (diagonal half-step, per-qubit driver
/// rotations, diagonal half-step) with coefficients at step midpoints.
/// The optional trace receives CSV rows "t,ground_population,norm".
StateVector anneal_evolve(const IsingModel& m, const AnnealSchedule& schedule,
                          std::ostream* trace = nullptr);

/// Depth-p circuit  prod_k exp(-i beta_k sum sigma^x) exp(-i gamma_k H_p)
/// applied to the uniform superposition.
StateVector qaoa_state(const IsingModel& m, const std::vector<double>& gammas,
                       const std::vector<double>& betas);

/// <H_p> of a state under the model's diagonal.
double ising_expectation(const IsingModel& m, const StateVector& psi);

/// Born-rule multinomial sampling; energies are recomputed exactly from the
/// model, and results are deterministic given the seed.
SampleSet sample_state(const StateVector& psi, const IsingModel& m, std::int64_t shots,
                       std::uint64_t seed, const std::string& solver_name = "statevector");

struct QaoaOptions {
    int depth = 1;
    int restarts = 4;          // independent seeded simplex starts
    int max_iterations = 400;  // per restart
    double tolerance = 1e-9;
    std::int64_t shots = 1000;
};

struct QaoaResult {
    std::vector<double> gammas;
    std::vector<double> betas;
    double expectation = 0.0;
    int iterations = 0;  // summed over restarts
    SampleSet samples;
};

/// Nelder-Mead search over the 2p angles from seeded random starts
/// (gamma in [0, 2pi), beta in [0, pi)); returns the best expectation found
/// and a shot sample of the optimized state.
QaoaResult qaoa_optimize(const IsingModel& m, const QaoaOptions& options, std::uint64_t seed);

}  // namespace qopt
