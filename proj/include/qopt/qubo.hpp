#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qopt/graph.hpp"
#include "qopt/rational.hpp"

namespace qopt {

/// Minimizing quadratic form x' Q x + offset over x in {0,1}^n.
///
/// Upper-triangular map storage: key (i, j) with i <= j; diagonal entries are
/// the linear terms; absent pairs are zero. Minimization is the canonical
/// sense everywhere; maximize-form problems are negated at construction.
class Qubo {
public:
    explicit Qubo(int n);

    int size() const { return n_; }

    /// Accumulates c onto Q_(min(i,j), max(i,j)). Zero sums are erased so the
    /// stored map stays canonical.
    void add(int i, int j, const Rational& c);
    void add_offset(const Rational& c) { offset_ += c; }

    Rational coefficient(int i, int j) const;
    const Rational& offset() const { return offset_; }
    const std::map<std::pair<int, int>, Rational>& coefficients() const { return coeffs_; }

    bool operator==(const Qubo&) const = default;

private:
    int n_;
    std::map<std::pair<int, int>, Rational> coeffs_;
    Rational offset_;
};

/// Ising energy  -sum_{i<j} J_ij s_i s_j  -  sum_i h_i s_i  +  offset,
/// spins s_i = +-1. Couplings are stored once per unordered pair (i < j);
/// self-couplings are rejected.
class IsingModel {
public:
    explicit IsingModel(int n);

    int size() const { return n_; }

    void add_field(int i, const Rational& c);
    void add_coupling(int i, int j, const Rational& c);
    void add_offset(const Rational& c) { offset_ += c; }

    const Rational& field(int i) const { return h_[i]; }
    Rational coupling(int i, int j) const;
    const std::vector<Rational>& fields() const { return h_; }
    const std::map<std::pair<int, int>, Rational>& couplings() const { return couplings_; }
    const Rational& offset() const { return offset_; }

    bool operator==(const IsingModel&) const = default;

private:
    int n_;
    std::vector<Rational> h_;
    std::map<std::pair<int, int>, Rational> couplings_;
    Rational offset_;
};

/// x' Q x + offset, exact arithmetic. x entries must be 0/1.
Rational evaluate_qubo(const Qubo& q, const std::vector<int>& x);

/// Ising energy at spin configuration s (entries +-1), exact arithmetic.
Rational evaluate_ising(const IsingModel& m, const std::vector<int>& s);

/// Conversions under x_i = (s_i + 1)/2: energies agree on every assignment
/// and the round trip reproduces coefficients exactly.
IsingModel qubo_to_ising(const Qubo& q);
Qubo ising_to_qubo(const IsingModel& m);

/// The penalty formulation with no slack variables: minimize
/// -sum_i a_i x_i + p * sum_{(i,j) in E} x_i x_j. Qubit i is vertex i.
Qubo mwis_direct_qubo(const WeightedGraph& g, const Rational& penalty);

/// Penalty estimate from the constraints: max_i a_i * max_i deg(i) + 1.
std::int64_t default_penalty(const WeightedGraph& g);

struct MwisDecoded {
    std::vector<int> vertices;  // selected, ascending
    std::int64_t weight;
    bool feasible;  // no edge with both endpoints selected
};

/// Reads off the vertex set {i : x_i = 1}, its weight, and independence.
MwisDecoded decode_mwis(const WeightedGraph& g, const std::vector<int>& x);

/// File format: "n <qubits>", optional "offset <value>", then "<i> <j> <coeff>"
/// lines with 0-based i <= j. Values are exact decimals or "p/q".
std::string write_qubo(const Qubo& q);
Qubo parse_qubo(std::istream& in);
Qubo parse_qubo(const std::string& text);

/// Ising file format: "n <spins>", optional "offset <value>", then
/// "h <i> <value>" and "J <i> <j> <value>" lines.
std::string write_ising(const IsingModel& m);
IsingModel parse_ising(std::istream& in);
IsingModel parse_ising(const std::string& text);

}  // namespace qopt
