#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "qopt/errors.hpp"
#include "qopt/quantum.hpp"
#include "qopt/rng.hpp"
#include "qopt/solvers.hpp"

using namespace qopt;

namespace {

using Complex = std::complex<double>;

std::vector<double> probabilities(const StateVector& psi) {
    std::vector<double> p(psi.amplitudes.size());
    for (std::size_t b = 0; b < p.size(); ++b) p[b] = std::norm(psi.amplitudes[b]);
    return p;
}

IsingModel triangle_ising() {
    WeightedGraph triangle({3, 5, 4}, {{0, 1}, {1, 2}, {0, 2}});
    return qubo_to_ising(mwis_direct_qubo(triangle, 11));
}

// Reference integrator for the 1-spin anneal: RK4 on the dense 2x2
// Hamiltonian A(t) (-sigma_x) + B(t) diag at a far finer step than the
// production splitting uses.
std::array<Complex, 2> rk4_two_level(const std::array<double, 2>& diag, double total_time,
                                     double dt) {
    auto apply_h = [&](double t, const std::array<Complex, 2>& v) {
        const double a = 1.0 - t / total_time;
        const double b = t / total_time;
        return std::array<Complex, 2>{
            b * diag[0] * v[0] - a * v[1],
            b * diag[1] * v[1] - a * v[0],
        };
    };
    auto derivative = [&](double t, const std::array<Complex, 2>& v) {
        auto hv = apply_h(t, v);
        return std::array<Complex, 2>{Complex(0, -1) * hv[0], Complex(0, -1) * hv[1]};
    };

    std::array<Complex, 2> psi{1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0)};
    const long steps = std::lround(total_time / dt);
    for (long s = 0; s < steps; ++s) {
        const double t = static_cast<double>(s) * dt;
        auto k1 = derivative(t, psi);
        std::array<Complex, 2> v2{psi[0] + 0.5 * dt * k1[0], psi[1] + 0.5 * dt * k1[1]};
        auto k2 = derivative(t + 0.5 * dt, v2);
        std::array<Complex, 2> v3{psi[0] + 0.5 * dt * k2[0], psi[1] + 0.5 * dt * k2[1]};
        auto k3 = derivative(t + 0.5 * dt, v3);
        std::array<Complex, 2> v4{psi[0] + dt * k3[0], psi[1] + dt * k3[1]};
        auto k4 = derivative(t + dt, v4);
        for (int i = 0; i < 2; ++i)
            psi[i] += dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    }
    return psi;
}

}  // namespace

TEST_SUITE("quantum") {

TEST_CASE("problem diagonal matches hand evaluation") {
    IsingModel one(1);
    one.add_field(0, 1);
    CHECK(problem_diagonal(one) == std::vector<double>{-1.0, 1.0});

    CHECK(problem_diagonal(IsingModel(2)) == std::vector<double>{0, 0, 0, 0});

    IsingModel pair(2);
    pair.add_coupling(0, 1, 1);
    CHECK(problem_diagonal(pair) == std::vector<double>{-1.0, 1.0, 1.0, -1.0});
}

TEST_CASE("problem diagonal agrees with evaluate_ising on every basis state") {
    IsingModel m = triangle_ising();
    std::vector<double> diag = problem_diagonal(m);
    for (std::uint64_t b = 0; b < diag.size(); ++b) {
        std::vector<int> s(m.size());
        for (int i = 0; i < m.size(); ++i) s[i] = (b >> i & 1) ? -1 : 1;
        CHECK(diag[b] == doctest::Approx(to_double(evaluate_ising(m, s))).epsilon(1e-12));
    }
}

TEST_CASE("problem diagonal size guard") {
    CHECK_THROWS_AS(problem_diagonal(IsingModel(21)), size_guard_error);
}

TEST_CASE("vanishing anneal time leaves the uniform superposition") {
    IsingModel m = triangle_ising();
    StateVector psi = anneal_evolve(m, {1e-6, 1e-6});
    for (double p : probabilities(psi)) CHECK(std::fabs(p - 0.125) < 1e-6);
}

TEST_CASE("slow anneal of one spin reaches the ground state") {
    IsingModel m(1);
    m.add_field(0, 1);
    StateVector psi = anneal_evolve(m, {50.0, 0.01});
    std::vector<double> p = probabilities(psi);
    CHECK(p[0] >= 0.99);  // diagonal minimum is basis state 0

    // Cross-check against a fine-step dense reference integration.
    auto ref = rk4_two_level({-1.0, 1.0}, 50.0, 1e-4);
    CHECK(std::fabs(p[0] - std::norm(ref[0])) < 1e-3);
    CHECK(std::fabs(p[1] - std::norm(ref[1])) < 1e-3);
}

TEST_CASE("slow anneal concentrates on the four-vertex path optimum") {
    WeightedGraph path({2, 3, 2, 3}, {{0, 1}, {1, 2}, {2, 3}});
    ExactResult exact = brute_force_qubo(mwis_direct_qubo(path, Rational(default_penalty(path))));
    std::uint64_t ground = 0;
    for (int i = 0; i < 4; ++i)
        if (exact.assignment[i]) ground |= std::uint64_t{1} << i;

    IsingModel m = qubo_to_ising(mwis_direct_qubo(path, Rational(default_penalty(path))));
    StateVector psi = anneal_evolve(m, {50.0, 0.01});
    CHECK(probabilities(psi)[ground] >= 0.9);
    CHECK(std::fabs(psi.norm_squared() - 1.0) <= 1e-6);
}

TEST_CASE("halving dt shrinks probability deltas like a second-order method") {
    IsingModel m = triangle_ising();
    auto max_delta = [&](double dt_a, double dt_b) {
        std::vector<double> pa = probabilities(anneal_evolve(m, {4.0, dt_a}));
        std::vector<double> pb = probabilities(anneal_evolve(m, {4.0, dt_b}));
        double d = 0;
        for (std::size_t i = 0; i < pa.size(); ++i) d = std::max(d, std::fabs(pa[i] - pb[i]));
        return d;
    };
    const double coarse = max_delta(0.08, 0.04);
    const double fine = max_delta(0.04, 0.02);
    CHECK(coarse >= 3.0 * fine);
}

TEST_CASE("ground-state population grows with anneal time") {
    WeightedGraph path({2, 3, 2}, {{0, 1}, {1, 2}});
    IsingModel m = qubo_to_ising(mwis_direct_qubo(path, 7));
    std::vector<double> diag = problem_diagonal(m);
    const std::size_t ground =
        std::min_element(diag.begin(), diag.end()) - diag.begin();
    double previous = 0.0;
    for (double total_time : {1.0, 5.0, 20.0, 50.0}) {
        double population = probabilities(anneal_evolve(m, {total_time, 0.01}))[ground];
        CHECK(population >= previous - 0.02);
        previous = population;
    }
    CHECK(previous >= 0.9);
}

TEST_CASE("anneal schedule validation") {
    IsingModel m(1);
    CHECK_THROWS_AS(anneal_evolve(m, {1.0, 2.0}), std::invalid_argument);
    CHECK_THROWS_AS(anneal_evolve(m, {0.0, 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(anneal_evolve(IsingModel(17), {1.0, 0.1}), size_guard_error);
}

TEST_CASE("sampling a basis state always returns it") {
    StateVector psi;
    psi.qubit_count = 2;
    psi.amplitudes = {0, 0, 1, 0};  // qubit0 = 0, qubit1 = 1
    SampleSet set = sample_state(psi, IsingModel(2), 100, 5);
    REQUIRE(set.entries().size() == 1);
    CHECK(set.entries()[0].bits == std::vector<int>{0, 1});
    CHECK(set.entries()[0].count == 100);
}

TEST_CASE("sampling the uniform state stays within binomial bounds") {
    StateVector psi;
    psi.qubit_count = 2;
    psi.amplitudes.assign(4, Complex(0.5, 0.0));
    SampleSet set = sample_state(psi, IsingModel(2), 1000, 99);
    CHECK(set.shots() == 1000);
    const double sigma = std::sqrt(1000 * 0.25 * 0.75);
    for (const SampleEntry& e : set.entries())
        CHECK(std::fabs(static_cast<double>(e.count) - 250.0) <= 5.0 * sigma);
}

TEST_CASE("sampling is deterministic and validates the norm") {
    StateVector psi;
    psi.qubit_count = 1;
    psi.amplitudes = {std::sqrt(0.3), std::sqrt(0.7)};
    SampleSet a = sample_state(psi, IsingModel(1), 500, 123);
    SampleSet b = sample_state(psi, IsingModel(1), 500, 123);
    CHECK(a.to_json() == b.to_json());

    psi.amplitudes = {1.0, 1.0};
    CHECK_THROWS_AS(sample_state(psi, IsingModel(1), 10, 1), std::invalid_argument);
}

TEST_CASE("zero-angle QAOA is the identity circuit") {
    IsingModel m = triangle_ising();
    StateVector psi = qaoa_state(m, {0.0, 0.0}, {0.0, 0.0});
    for (double p : probabilities(psi)) CHECK(std::fabs(p - 0.125) <= 1e-12);
}

TEST_CASE("depth-1 QAOA on one spin matches the dense matrix oracle") {
    IsingModel m(1);
    m.add_field(0, 1);
    const double gamma = std::numbers::pi / 4;
    const double beta = std::numbers::pi / 8;
    StateVector psi = qaoa_state(m, {gamma}, {beta});

    // |psi> = Mixer(beta) * Phase(gamma) * |+> built from explicit 2x2 products.
    const Complex i(0, 1);
    std::array<Complex, 2> v{1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0)};
    v[0] *= std::exp(-i * gamma * -1.0);  // diagonal is (-1, +1)
    v[1] *= std::exp(-i * gamma * +1.0);
    std::array<Complex, 2> out{
        std::cos(beta) * v[0] - i * std::sin(beta) * v[1],
        -i * std::sin(beta) * v[0] + std::cos(beta) * v[1],
    };
    CHECK(std::abs(psi.amplitudes[0] - out[0]) < 1e-10);
    CHECK(std::abs(psi.amplitudes[1] - out[1]) < 1e-10);

    const double expectation = ising_expectation(m, psi);
    const double oracle = -std::norm(out[0]) + std::norm(out[1]);
    CHECK(expectation == doctest::Approx(oracle).epsilon(1e-10));
}

TEST_CASE("QAOA states stay normalized for random parameters") {
    IsingModel m = triangle_ising();
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<double> gammas{canonical_double(rng) * 6.28, canonical_double(rng) * 6.28};
        std::vector<double> betas{canonical_double(rng) * 3.14, canonical_double(rng) * 3.14};
        StateVector psi = qaoa_state(m, gammas, betas);
        CHECK(std::fabs(psi.norm_squared() - 1.0) <= 1e-9);
    }
}

TEST_CASE("QAOA parameter validation") {
    IsingModel m(1);
    CHECK_THROWS_AS(qaoa_state(m, {0.1}, {0.1, 0.2}), std::invalid_argument);
    CHECK_THROWS_AS(qaoa_state(m, {}, {}), std::invalid_argument);
}

TEST_CASE("optimizing the zero Hamiltonian terminates with expectation zero") {
    IsingModel m(2);
    QaoaOptions options;
    options.depth = 1;
    options.max_iterations = 50;
    QaoaResult r = qaoa_optimize(m, options, 3);
    CHECK(r.expectation == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(r.samples.shots() == options.shots);
}

TEST_CASE("depth-1 QAOA drives a single spin near its ground energy") {
    IsingModel m(1);
    m.add_field(0, 1);

    // Independent 2-parameter grid scan of the expectation landscape.
    const Complex i(0, 1);
    double grid_best = 1e9;
    for (int gi = 0; gi < 64; ++gi) {
        for (int bi = 0; bi < 32; ++bi) {
            const double gamma = gi * 2.0 * std::numbers::pi / 64;
            const double beta = bi * std::numbers::pi / 32;
            std::array<Complex, 2> v{1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0)};
            v[0] *= std::exp(i * gamma);
            v[1] *= std::exp(-i * gamma);
            std::array<Complex, 2> out{
                std::cos(beta) * v[0] - i * std::sin(beta) * v[1],
                -i * std::sin(beta) * v[0] + std::cos(beta) * v[1],
            };
            grid_best = std::min(grid_best, -std::norm(out[0]) + std::norm(out[1]));
        }
    }

    QaoaOptions options;
    options.depth = 1;
    QaoaResult r = qaoa_optimize(m, options, 17);
    CHECK(r.expectation <= -0.9);
    CHECK(r.expectation <= grid_best + 0.05);
}

TEST_CASE("depth-2 QAOA lifts the triangle optimum above twice uniform") {
    IsingModel m = triangle_ising();
    QaoaOptions options;
    options.depth = 2;
    QaoaResult r = qaoa_optimize(m, options, 1);
    StateVector psi = qaoa_state(m, r.gammas, r.betas);
    // Optimal assignment x = (0,1,0) is basis state 0b010 = 2.
    CHECK(probabilities(psi)[2] >= 0.25);
}

}  // TEST_SUITE
