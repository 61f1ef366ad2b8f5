#include <doctest.h>

#include <random>

#include "qopt/encoding.hpp"
#include "qopt/rng.hpp"

using namespace qopt;

namespace {

std::vector<int> bits_of(std::uint64_t b, int n) {
    std::vector<int> x(n);
    for (int i = 0; i < n; ++i) x[i] = static_cast<int>(b >> i & 1);
    return x;
}

}  // namespace

TEST_SUITE("encoding") {

TEST_CASE("binary_bits_required uses floor(log2(M)) + 1") {
    CHECK(binary_bits_required(5) == 3);
    CHECK(binary_bits_required(1) == 1);
    CHECK(binary_bits_required(4) == 3);  // one more than the minimal 2
    CHECK(binary_bits_required(2) == 2);
    CHECK(binary_bits_required(8) == 4);
    CHECK_THROWS_AS(binary_bits_required(0), std::invalid_argument);
}

TEST_CASE("binary_decode clamps out-of-range codewords") {
    CHECK(binary_decode({1, 0, 1}, 8) == 5);
    CHECK(binary_decode({1, 1, 1}, 5) == 4);  // 7 clamps to M-1
    CHECK(binary_decode({0, 0, 0}, 5) == 0);
    CHECK(binary_decode({}, 1) == 0);
}

TEST_CASE("domain wall encode") {
    CHECK(domain_wall_encode(0, 4) == std::vector<int>{0, 0, 0});
    CHECK(domain_wall_encode(2, 4) == std::vector<int>{1, 1, 0});
    CHECK(domain_wall_encode(3, 4) == std::vector<int>{1, 1, 1});
    CHECK(domain_wall_encode(0, 1).empty());
    CHECK_THROWS_AS(domain_wall_encode(4, 4), std::invalid_argument);
    CHECK_THROWS_AS(domain_wall_encode(-1, 4), std::invalid_argument);
}

TEST_CASE("domain wall decode") {
    CHECK(domain_wall_decode({1, 1, 0}) == std::pair<int, bool>{2, true});
    CHECK(domain_wall_decode({0, 1, 0}).second == false);
    CHECK(domain_wall_decode({}) == std::pair<int, bool>{0, true});
}

TEST_CASE("domain wall validity terms vanish exactly on codewords") {
    EncodingSpec spec{EncodingScheme::domain_wall, 4, 0};
    QuadraticTerms t = domain_wall_validity_terms(spec);
    CHECK(t.evaluate({1, 1, 0}) == Rational(0));
    CHECK(t.evaluate({0, 1, 0}) == Rational(1));
    CHECK(t.evaluate({0, 1, 1}) == Rational(1));
    // Only nearest-neighbour couplings appear (chain connectivity).
    for (const auto& [key, c] : t.quadratic) CHECK(key.second - key.first == 1);
}

TEST_CASE("one hot encode and decode") {
    CHECK(one_hot_encode(1, 3) == std::vector<int>{0, 1, 0});
    CHECK(one_hot_decode({0, 1, 0}) == std::pair<int, bool>{1, true});
    CHECK(one_hot_decode({1, 1, 0}).second == false);
    CHECK(one_hot_decode({0, 0, 0}).second == false);
    CHECK_THROWS_AS(one_hot_encode(3, 3), std::invalid_argument);
}

TEST_CASE("one hot validity penalty is the squared deviation from one") {
    EncodingSpec spec{EncodingScheme::one_hot, 3, 0};
    QuadraticTerms t = one_hot_validity_terms(spec);
    CHECK(t.evaluate({1, 1, 0}) == Rational(1));  // (2-1)^2
    CHECK(t.evaluate({0, 0, 0}) == Rational(1));  // (0-1)^2
    CHECK(t.evaluate({1, 1, 1}) == Rational(4));
    CHECK(t.evaluate({0, 1, 0}) == Rational(0));
}

TEST_CASE("decode composed with encode is the identity, all schemes") {
    for (int m = 2; m <= 8; ++m) {
        for (int d = 0; d < m; ++d) {
            CHECK(domain_wall_decode(domain_wall_encode(d, m)) == std::pair<int, bool>{d, true});
            CHECK(one_hot_decode(one_hot_encode(d, m)) == std::pair<int, bool>{d, true});
            std::vector<int> bin(binary_bits_required(m), 0);
            for (std::size_t k = 0; k < bin.size(); ++k) bin[k] = d >> k & 1;
            CHECK(binary_decode(bin, m) == d);
        }
    }
}

TEST_CASE("validity terms are 0 on valid codewords and >= 1 on invalid ones") {
    for (int m = 2; m <= 8; ++m) {
        EncodingSpec dw{EncodingScheme::domain_wall, m, 0};
        QuadraticTerms t_dw = domain_wall_validity_terms(dw);
        for (std::uint64_t b = 0; b < (std::uint64_t{1} << (m - 1)); ++b) {
            std::vector<int> bits = bits_of(b, m - 1);
            Rational v = t_dw.evaluate(bits);
            if (domain_wall_decode(bits).second)
                CHECK(v == Rational(0));
            else
                CHECK(v >= Rational(1));
        }

        EncodingSpec oh{EncodingScheme::one_hot, m, 0};
        QuadraticTerms t_oh = one_hot_validity_terms(oh);
        for (std::uint64_t b = 0; b < (std::uint64_t{1} << m); ++b) {
            std::vector<int> bits = bits_of(b, m);
            Rational v = t_oh.evaluate(bits);
            if (one_hot_decode(bits).second)
                CHECK(v == Rational(0));
            else
                CHECK(v >= Rational(1));
        }
    }
}

TEST_CASE("domain wall saves exactly one qubit over one-hot") {
    for (int m = 1; m <= 8; ++m) {
        EncodingSpec dw{EncodingScheme::domain_wall, m, 0};
        EncodingSpec oh{EncodingScheme::one_hot, m, 0};
        CHECK(oh.qubit_count() - dw.qubit_count() == 1);
    }
}

TEST_CASE("pairwise compilation: zero table gives no terms") {
    EncodingSpec a{EncodingScheme::one_hot, 3, 0};
    EncodingSpec b{EncodingScheme::one_hot, 3, 3};
    std::vector<std::vector<Rational>> zero(3, std::vector<Rational>(3, Rational(0)));
    CHECK(pairwise_interaction_terms(zero, a, b).empty());
}

TEST_CASE("pairwise compilation: one-hot equality table") {
    EncodingSpec a{EncodingScheme::one_hot, 2, 0};
    EncodingSpec b{EncodingScheme::one_hot, 2, 2};
    std::vector<std::vector<Rational>> identity{{1, 0}, {0, 1}};
    QuadraticTerms t = pairwise_interaction_terms(identity, a, b);
    CHECK(t.offset == Rational(0));
    CHECK(t.linear.empty());
    CHECK(t.quadratic == decltype(t.quadratic){{{0, 2}, Rational(1)}, {{1, 3}, Rational(1)}});
    for (int d1 = 0; d1 < 2; ++d1)
        for (int d2 = 0; d2 < 2; ++d2) {
            std::vector<int> bits = one_hot_encode(d1, 2);
            for (int bit : one_hot_encode(d2, 2)) bits.push_back(bit);
            CHECK(t.evaluate(bits) == identity[d1][d2]);
        }
}

TEST_CASE("pairwise compilation matches the table on all valid codeword pairs") {
    std::mt19937_64 rng(11);
    for (int m1 = 2; m1 <= 5; ++m1) {
        for (int m2 = 2; m2 <= 5; ++m2) {
            std::vector<std::vector<Rational>> table(m1, std::vector<Rational>(m2));
            for (auto& row : table)
                for (auto& cell : row)
                    cell = Rational(static_cast<std::int64_t>(uniform_int(rng, 0, 12)) - 6);

            for (EncodingScheme s1 : {EncodingScheme::one_hot, EncodingScheme::domain_wall}) {
                for (EncodingScheme s2 : {EncodingScheme::one_hot, EncodingScheme::domain_wall}) {
                    EncodingSpec a{s1, m1, 0};
                    EncodingSpec b{s2, m2, a.qubit_count()};
                    QuadraticTerms t = pairwise_interaction_terms(table, a, b);
                    for (int d1 = 0; d1 < m1; ++d1) {
                        for (int d2 = 0; d2 < m2; ++d2) {
                            std::vector<int> bits = s1 == EncodingScheme::one_hot
                                                        ? one_hot_encode(d1, m1)
                                                        : domain_wall_encode(d1, m1);
                            std::vector<int> second = s2 == EncodingScheme::one_hot
                                                          ? one_hot_encode(d2, m2)
                                                          : domain_wall_encode(d2, m2);
                            bits.insert(bits.end(), second.begin(), second.end());
                            CHECK(t.evaluate(bits) == table[d1][d2]);
                        }
                    }
                }
            }
        }
    }
}

TEST_CASE("pairwise compilation rejects binary encodings") {
    EncodingSpec a{EncodingScheme::binary, 4, 0};
    EncodingSpec b{EncodingScheme::one_hot, 4, 3};
    std::vector<std::vector<Rational>> table(4, std::vector<Rational>(4, Rational(1)));
    CHECK_THROWS_AS(pairwise_interaction_terms(table, a, b), std::invalid_argument);
}

}  // TEST_SUITE
