#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qopt/rational.hpp"

namespace qopt {

enum class EncodingScheme { binary, one_hot, domain_wall };

std::string to_string(EncodingScheme s);
EncodingScheme encoding_scheme_from_string(const std::string& name);

/// Quadratic expression over qubits of a host QUBO: offset + linear + pairwise
/// terms. Squares b^2 fold into linear since bits are idempotent.
struct QuadraticTerms {
    Rational offset;
    std::map<int, Rational> linear;
    std::map<std::pair<int, int>, Rational> quadratic;  // i < j

    void add_constant(const Rational& c) { offset += c; }
    void add_linear(int i, const Rational& c);
    void add_quadratic(int i, int j, const Rational& c);
    bool empty() const { return offset == 0 && linear.empty() && quadratic.empty(); }

    /// bits is indexed by absolute qubit id and must cover every referenced index.
    Rational evaluate(const std::vector<int>& bits) const;
};

/// Linear form  constant + sum_k coeff_k * b_k  over host qubit indices.
struct LinearForm {
    Rational constant;
    std::map<int, Rational> coeffs;

    Rational evaluate(const std::vector<int>& bits) const;
};

/// Placement of one m-valued discrete variable inside a host QUBO.
/// Qubit count per scheme: floor(log2(M))+1 bits would be the literal binary
/// formula (see binary_bits_required), m for one-hot, m-1 for domain-wall.
struct EncodingSpec {
    EncodingScheme scheme = EncodingScheme::one_hot;
    int value_count = 1;  // m >= 1
    int first_qubit = 0;

    int qubit_count() const;
};

/// Literal formula floor(log2(M)) + 1; allots one extra bit when M is a
/// power of two. Out-of-range codewords are absorbed by the clamping decode.
int binary_bits_required(std::int64_t value_count);

/// sum_k 2^k b_k, clamped to M-1 when the codeword exceeds the range.
/// Accepts any bit-vector length.
std::int64_t binary_decode(const std::vector<int>& bits, std::int64_t value_count);

/// Codeword 1...10...0 with exactly d leading ones (m-1 bits).
std::vector<int> domain_wall_encode(int d, int m);

/// Valid iff bits are monotone non-increasing; value is the number of ones.
std::pair<int, bool> domain_wall_decode(const std::vector<int>& bits);

/// Chain penalty sum_k b_{k+1} (1 - b_k): zero exactly on valid codewords,
/// >= 1 otherwise, nearest-neighbor couplings only.
QuadraticTerms domain_wall_validity_terms(const EncodingSpec& spec);

std::vector<int> one_hot_encode(int d, int m);
std::pair<int, bool> one_hot_decode(const std::vector<int>& bits);

/// (sum_k b_k - 1)^2: zero exactly on one-hot codewords, >= 1 otherwise.
QuadraticTerms one_hot_validity_terms(const EncodingSpec& spec);

/// Indicator of value d as a linear form in the variable's bits.
/// One-hot: b_d. Domain-wall: b_d - b_{d+1} with boundary bits b_0 = 1,
/// b_m = 0. Binary indicators are not linear, hence unsupported.
LinearForm value_indicator(const EncodingSpec& spec, int d);

/// The decoded value itself as a linear form (one-hot: sum d b_d;
/// domain-wall: sum b_k).
LinearForm value_expression(const EncodingSpec& spec);

/// Compiles an arbitrary m1 x m2 interaction table D into quadratic terms
/// over the two variables' qubits: on every pair of valid codewords (d1, d2)
/// the expression evaluates to exactly D[d1][d2].
QuadraticTerms pairwise_interaction_terms(const std::vector<std::vector<Rational>>& table,
                                          const EncodingSpec& a, const EncodingSpec& b);

}  // namespace qopt
