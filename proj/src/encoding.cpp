#include "qopt/encoding.hpp"

#include <stdexcept>

namespace qopt {

std::string to_string(EncodingScheme s) {
    switch (s) {
        case EncodingScheme::binary: return "binary";
        case EncodingScheme::one_hot: return "one_hot";
        case EncodingScheme::domain_wall: return "domain_wall";
    }
    return "?";
}

EncodingScheme encoding_scheme_from_string(const std::string& name) {
    if (name == "binary") return EncodingScheme::binary;
    if (name == "one_hot" || name == "onehot") return EncodingScheme::one_hot;
    if (name == "domain_wall" || name == "domainwall") return EncodingScheme::domain_wall;
    throw std::invalid_argument("unknown encoding scheme '" + name + "'");
}

void QuadraticTerms::add_linear(int i, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = linear.try_emplace(i, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) linear.erase(it);
    }
}

void QuadraticTerms::add_quadratic(int i, int j, const Rational& c) {
    if (i == j) {  // b^2 = b
        add_linear(i, c);
        return;
    }
    if (c == 0) return;
    auto key = i < j ? std::make_pair(i, j) : std::make_pair(j, i);
    auto [it, inserted] = quadratic.try_emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) quadratic.erase(it);
    }
}

Rational QuadraticTerms::evaluate(const std::vector<int>& bits) const {
    Rational e = offset;
    for (const auto& [i, c] : linear)
        if (bits.at(i) != 0) e += c;
    for (const auto& [key, c] : quadratic)
        if (bits.at(key.first) != 0 && bits.at(key.second) != 0) e += c;
    return e;
}

Rational LinearForm::evaluate(const std::vector<int>& bits) const {
    Rational v = constant;
    for (const auto& [i, c] : coeffs)
        if (bits.at(i) != 0) v += c;
    return v;
}

int EncodingSpec::qubit_count() const {
    switch (scheme) {
        case EncodingScheme::binary: return binary_bits_required(value_count);
        case EncodingScheme::one_hot: return value_count;
        case EncodingScheme::domain_wall: return value_count - 1;
    }
    return 0;
}

int binary_bits_required(std::int64_t value_count) {
    if (value_count < 1) throw std::invalid_argument("value count must be >= 1");
    int bits = 1;
    while ((std::int64_t{1} << bits) <= value_count) ++bits;  // bits = floor(log2(M)) + 1
    return bits;
}

std::int64_t binary_decode(const std::vector<int>& bits, std::int64_t value_count) {
    if (value_count < 1) throw std::invalid_argument("value count must be >= 1");
    std::int64_t v = 0;
    for (std::size_t k = 0; k < bits.size(); ++k)
        if (bits[k] != 0) v += std::int64_t{1} << k;
    return v < value_count ? v : value_count - 1;
}

std::vector<int> domain_wall_encode(int d, int m) {
    if (m < 1) throw std::invalid_argument("value count must be >= 1");
    if (d < 0 || d >= m) throw std::invalid_argument("value out of range");
    std::vector<int> bits(m - 1, 0);
    for (int k = 0; k < d; ++k) bits[k] = 1;
    return bits;
}

std::pair<int, bool> domain_wall_decode(const std::vector<int>& bits) {
    int ones = 0;
    bool valid = true;
    for (std::size_t k = 0; k < bits.size(); ++k) {
        if (bits[k] != 0) {
            ++ones;
            if (k > 0 && bits[k - 1] == 0) valid = false;  // 0 followed by 1
        }
    }
    return {valid ? ones : 0, valid};
}

QuadraticTerms domain_wall_validity_terms(const EncodingSpec& spec) {
    if (spec.scheme != EncodingScheme::domain_wall)
        throw std::invalid_argument("spec is not domain-wall");
    QuadraticTerms t;
    const int q0 = spec.first_qubit;
    // sum_k b_{k+1} (1 - b_k) over adjacent bit pairs of the chain.
    for (int k = 0; k + 1 < spec.qubit_count(); ++k) {
        t.add_linear(q0 + k + 1, 1);
        t.add_quadratic(q0 + k, q0 + k + 1, -1);
    }
    return t;
}

std::vector<int> one_hot_encode(int d, int m) {
    if (m < 1) throw std::invalid_argument("value count must be >= 1");
    if (d < 0 || d >= m) throw std::invalid_argument("value out of range");
    std::vector<int> bits(m, 0);
    bits[d] = 1;
    return bits;
}

std::pair<int, bool> one_hot_decode(const std::vector<int>& bits) {
    int ones = 0, where = 0;
    for (std::size_t k = 0; k < bits.size(); ++k) {
        if (bits[k] != 0) {
            ++ones;
            where = static_cast<int>(k);
        }
    }
    return ones == 1 ? std::make_pair(where, true) : std::make_pair(0, false);
}

QuadraticTerms one_hot_validity_terms(const EncodingSpec& spec) {
    if (spec.scheme != EncodingScheme::one_hot)
        throw std::invalid_argument("spec is not one-hot");
    QuadraticTerms t;
    const int q0 = spec.first_qubit;
    const int m = spec.value_count;
    // (sum_k b_k - 1)^2 expanded with b^2 = b.
    t.add_constant(1);
    for (int k = 0; k < m; ++k) {
        t.add_linear(q0 + k, -1);
        for (int l = k + 1; l < m; ++l) t.add_quadratic(q0 + k, q0 + l, 2);
    }
    return t;
}

LinearForm value_indicator(const EncodingSpec& spec, int d) {
    if (d < 0 || d >= spec.value_count) throw std::invalid_argument("value out of range");
    LinearForm f;
    const int q0 = spec.first_qubit;
    switch (spec.scheme) {
        case EncodingScheme::one_hot:
            f.coeffs[q0 + d] = 1;
            return f;
        case EncodingScheme::domain_wall: {
            // Indicator of value d is b_d - b_{d+1} with fixed boundary bits
            // b_0 = 1 and b_m = 0; physical bits are b_1 .. b_{m-1}.
            const int m = spec.value_count;
            if (d == 0)
                f.constant = 1;
            else
                f.coeffs[q0 + d - 1] = 1;
            if (d + 1 < m) {
                auto [it, inserted] = f.coeffs.try_emplace(q0 + d, -1);
                if (!inserted) it->second -= 1;
            }
            return f;
        }
        case EncodingScheme::binary:
            throw std::invalid_argument("binary value indicators are not linear in bits");
    }
    throw std::invalid_argument("unknown scheme");
}

LinearForm value_expression(const EncodingSpec& spec) {
    LinearForm f;
    const int q0 = spec.first_qubit;
    switch (spec.scheme) {
        case EncodingScheme::one_hot:
            for (int d = 1; d < spec.value_count; ++d) f.coeffs[q0 + d] = d;
            return f;
        case EncodingScheme::domain_wall:
            for (int k = 0; k < spec.qubit_count(); ++k) f.coeffs[q0 + k] = 1;
            return f;
        case EncodingScheme::binary:
            for (int k = 0; k < spec.qubit_count(); ++k)
                f.coeffs[q0 + k] = Rational(std::int64_t{1} << k);
            return f;
    }
    throw std::invalid_argument("unknown scheme");
}

QuadraticTerms pairwise_interaction_terms(const std::vector<std::vector<Rational>>& table,
                                          const EncodingSpec& a, const EncodingSpec& b) {
    if (a.scheme == EncodingScheme::binary || b.scheme == EncodingScheme::binary)
        throw std::invalid_argument("pairwise compilation is unsupported for binary encodings");
    if (static_cast<int>(table.size()) != a.value_count)
        throw std::invalid_argument("table row count does not match first variable");
    for (const auto& row : table)
        if (static_cast<int>(row.size()) != b.value_count)
            throw std::invalid_argument("table column count does not match second variable");

    // D expanded over products of value indicators; indicators are linear in
    // bits, so every term has degree <= 2.
    QuadraticTerms t;
    for (int d1 = 0; d1 < a.value_count; ++d1) {
        LinearForm ia = value_indicator(a, d1);
        for (int d2 = 0; d2 < b.value_count; ++d2) {
            const Rational& c = table[d1][d2];
            if (c == 0) continue;
            LinearForm ib = value_indicator(b, d2);
            t.add_constant(c * ia.constant * ib.constant);
            for (const auto& [qa, ca] : ia.coeffs) t.add_linear(qa, c * ca * ib.constant);
            for (const auto& [qb, cb] : ib.coeffs) t.add_linear(qb, c * cb * ia.constant);
            for (const auto& [qa, ca] : ia.coeffs)
                for (const auto& [qb, cb] : ib.coeffs) t.add_quadratic(qa, qb, c * ca * cb);
        }
    }
    return t;
}

}  // namespace qopt
