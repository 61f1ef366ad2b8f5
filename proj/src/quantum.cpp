#include "qopt/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include "qopt/errors.hpp"
#include "qopt/nelder_mead.hpp"
#include "qopt/rng.hpp"

namespace qopt {

namespace {

constexpr std::complex<double> kImaginary{0.0, 1.0};

// Applies the single-qubit unitary [[d, o], [o, d]] to every amplitude pair
// differing in qubit q. Covers both exp(+i theta sigma^x) (driver) and
// exp(-i beta sigma^x) (QAOA mixer) via d = cos, o = +-i sin.
void apply_symmetric_x(StateVector& psi, int q, std::complex<double> d,
                       std::complex<double> o) {
    const std::size_t mask = std::size_t{1} << q;
    const std::size_t total = psi.amplitudes.size();
    for (std::size_t b = 0; b < total; ++b) {
        if (b & mask) continue;
        const std::size_t b1 = b | mask;
        const std::complex<double> a0 = psi.amplitudes[b];
        const std::complex<double> a1 = psi.amplitudes[b1];
        psi.amplitudes[b] = d * a0 + o * a1;
        psi.amplitudes[b1] = o * a0 + d * a1;
    }
}

void apply_diagonal_phase(StateVector& psi, const std::vector<double>& diagonal,
                          double angle_scale) {
    for (std::size_t b = 0; b < psi.amplitudes.size(); ++b)
        psi.amplitudes[b] *= std::exp(-kImaginary * (angle_scale * diagonal[b]));
}

StateVector uniform_superposition(int n) {
    StateVector psi;
    psi.qubit_count = n;
    const std::size_t total = std::size_t{1} << n;
    psi.amplitudes.assign(total, std::complex<double>(1.0 / std::sqrt(static_cast<double>(total)), 0.0));
    return psi;
}

void check_state_guard(int n) {
    if (n > kStateVectorMaxQubits)
        throw size_guard_error("state-vector simulation is guarded at " +
                               std::to_string(kStateVectorMaxQubits) + " qubits");
}

}  // namespace

double StateVector::norm_squared() const {
    double s = 0.0;
    for (const auto& a : amplitudes) s += std::norm(a);
    return s;
}

std::vector<double> problem_diagonal(const IsingModel& m) {
    const int n = m.size();
    if (n > kDiagonalMaxQubits)
        throw size_guard_error("problem diagonal is guarded at " +
                               std::to_string(kDiagonalMaxQubits) + " qubits");

    std::vector<double> fields(n);
    for (int i = 0; i < n; ++i) fields[i] = to_double(m.field(i));

    const std::size_t total = std::size_t{1} << n;
    std::vector<double> diagonal(total, to_double(m.offset()));
    // Spin of qubit i in basis state b: +1 for bit 0, -1 for bit 1.
    for (std::size_t b = 0; b < total; ++b) {
        double e = diagonal[b];
        for (int i = 0; i < n; ++i) e -= (b >> i & 1) ? -fields[i] : fields[i];
        diagonal[b] = e;
    }
    for (const auto& [key, J] : m.couplings()) {
        const double c = to_double(J);
        for (std::size_t b = 0; b < total; ++b) {
            const int si = (b >> key.first & 1) ? -1 : 1;
            const int sj = (b >> key.second & 1) ? -1 : 1;
            diagonal[b] -= c * si * sj;
        }
    }
    return diagonal;
}

StateVector anneal_evolve(const IsingModel& m, const AnnealSchedule& schedule,
                          std::ostream* trace) {
    check_state_guard(m.size());
    if (schedule.total_time <= 0 || schedule.dt <= 0)
        throw std::invalid_argument("schedule times must be positive");
    if (schedule.dt > schedule.total_time)
        throw std::invalid_argument("dt must not exceed the total time");

    const std::vector<double> diagonal = problem_diagonal(m);
    const std::size_t ground =
        std::min_element(diagonal.begin(), diagonal.end()) - diagonal.begin();

    StateVector psi = uniform_superposition(m.size());
    // Land exactly on T with uniform steps as close to the requested dt as
    // possible.
    const long steps = std::max<long>(1, std::lround(schedule.total_time / schedule.dt));
    const double dt = schedule.total_time / static_cast<double>(steps);

    if (trace) *trace << "t,ground_population,norm\n";
    for (long step = 0; step < steps; ++step) {
        const double t_mid = (static_cast<double>(step) + 0.5) * dt;
        const double a = schedule.driver_weight(t_mid);
        const double b = schedule.problem_weight(t_mid);

        apply_diagonal_phase(psi, diagonal, 0.5 * dt * b);
        // exp(-i dt A H_0) with H_0 = -sum sigma^x factors into per-qubit
        // rotations exp(+i dt A sigma^x).
        const double theta = dt * a;
        const std::complex<double> d{std::cos(theta), 0.0};
        const std::complex<double> o = kImaginary * std::sin(theta);
        for (int q = 0; q < m.size(); ++q) apply_symmetric_x(psi, q, d, o);
        apply_diagonal_phase(psi, diagonal, 0.5 * dt * b);

        if (trace)
            *trace << (static_cast<double>(step) + 1.0) * dt << ','
                   << std::norm(psi.amplitudes[ground]) << ',' << psi.norm_squared() << '\n';
    }

    if (std::fabs(psi.norm_squared() - 1.0) > 1e-6)
        throw std::runtime_error("state norm drifted beyond 1e-6");
    return psi;
}

StateVector qaoa_state(const IsingModel& m, const std::vector<double>& gammas,
                       const std::vector<double>& betas) {
    check_state_guard(m.size());
    if (gammas.empty() || gammas.size() != betas.size())
        throw std::invalid_argument("gamma and beta vectors must have equal positive length");

    const std::vector<double> diagonal = problem_diagonal(m);
    StateVector psi = uniform_superposition(m.size());
    for (std::size_t layer = 0; layer < gammas.size(); ++layer) {
        apply_diagonal_phase(psi, diagonal, gammas[layer]);
        const std::complex<double> d{std::cos(betas[layer]), 0.0};
        const std::complex<double> o = -kImaginary * std::sin(betas[layer]);
        for (int q = 0; q < m.size(); ++q) apply_symmetric_x(psi, q, d, o);
    }
    return psi;
}

double ising_expectation(const IsingModel& m, const StateVector& psi) {
    const std::vector<double> diagonal = problem_diagonal(m);
    double e = 0.0;
    for (std::size_t b = 0; b < psi.amplitudes.size(); ++b)
        e += diagonal[b] * std::norm(psi.amplitudes[b]);
    return e;
}

SampleSet sample_state(const StateVector& psi, const IsingModel& m, std::int64_t shots,
                       std::uint64_t seed, const std::string& solver_name) {
    if (shots < 1) throw std::invalid_argument("shots must be >= 1");
    if (std::fabs(psi.norm_squared() - 1.0) > 1e-6)
        throw std::invalid_argument("state is not normalized");

    std::vector<double> cumulative(psi.amplitudes.size());
    double acc = 0.0;
    for (std::size_t b = 0; b < psi.amplitudes.size(); ++b) {
        acc += std::norm(psi.amplitudes[b]);
        cumulative[b] = acc;
    }
    cumulative.back() = 1.0;

    std::mt19937_64 rng(seed);
    std::vector<std::int64_t> counts(psi.amplitudes.size(), 0);
    for (std::int64_t s = 0; s < shots; ++s) {
        const double u = canonical_double(rng);
        const std::size_t b =
            std::lower_bound(cumulative.begin(), cumulative.end(), u) - cumulative.begin();
        ++counts[b];
    }

    std::vector<SampleEntry> raw;
    std::vector<int> spins(psi.qubit_count);
    for (std::size_t b = 0; b < counts.size(); ++b) {
        if (counts[b] == 0) continue;
        SampleEntry entry;
        entry.bits.resize(psi.qubit_count);
        for (int i = 0; i < psi.qubit_count; ++i) {
            entry.bits[i] = static_cast<int>(b >> i & 1);
            spins[i] = entry.bits[i] ? -1 : 1;
        }
        entry.energy = evaluate_ising(m, spins);
        entry.count = counts[b];
        raw.push_back(std::move(entry));
    }
    return SampleSet::from_shots(solver_name, seed, {}, std::move(raw));
}

QaoaResult qaoa_optimize(const IsingModel& m, const QaoaOptions& options, std::uint64_t seed) {
    check_state_guard(m.size());
    if (options.depth < 1) throw std::invalid_argument("depth must be >= 1");
    if (options.restarts < 1) throw std::invalid_argument("restarts must be >= 1");

    const int p = options.depth;
    auto objective = [&](const std::vector<double>& params) {
        std::vector<double> gammas(params.begin(), params.begin() + p);
        std::vector<double> betas(params.begin() + p, params.end());
        return ising_expectation(m, qaoa_state(m, gammas, betas));
    };

    NelderMeadOptions nm;
    nm.max_iterations = options.max_iterations;
    nm.tolerance = options.tolerance;

    QaoaResult best;
    best.expectation = std::numeric_limits<double>::infinity();
    for (int restart = 0; restart < options.restarts; ++restart) {
        std::mt19937_64 rng(mix_seed(seed, static_cast<std::uint64_t>(restart)));
        std::vector<double> start(2 * p);
        for (int k = 0; k < p; ++k) start[k] = canonical_double(rng) * 2.0 * std::numbers::pi;
        for (int k = 0; k < p; ++k) start[p + k] = canonical_double(rng) * std::numbers::pi;

        std::vector<std::vector<double>> simplex{start};
        for (int d = 0; d < 2 * p; ++d) {
            std::vector<double> vertex = start;
            vertex[d] += d < p ? 0.4 : 0.2;
            simplex.push_back(std::move(vertex));
        }

        NelderMeadResult r = nelder_mead(objective, std::move(simplex), nm);
        best.iterations += r.iterations;
        if (r.value < best.expectation) {
            best.expectation = r.value;
            best.gammas.assign(r.x.begin(), r.x.begin() + p);
            best.betas.assign(r.x.begin() + p, r.x.end());
        }
    }

    StateVector psi = qaoa_state(m, best.gammas, best.betas);
    best.samples = sample_state(psi, m, options.shots, mix_seed(seed, 0x5a0au), "qaoa");
    return best;
}

}  // namespace qopt
