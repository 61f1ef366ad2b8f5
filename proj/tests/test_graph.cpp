#include <doctest.h>

#include <cmath>
#include <set>

#include "qopt/errors.hpp"
#include "qopt/graph.hpp"

using namespace qopt;

TEST_SUITE("graph") {

TEST_CASE("single vertex instance has no edges") {
    WeightedGraph g = generate_random_graph(1, 0.5, 7);
    CHECK(g.vertex_count() == 1);
    CHECK(g.edge_count() == 0);
    CHECK(g.weight(0) >= 1);
    CHECK(g.weight(0) <= 3);  // weights drawn from {1, ..., 2k+1}
}

TEST_CASE("edge probability 1 yields the complete graph") {
    WeightedGraph g = generate_random_graph(5, 1.0, 1);
    CHECK(g.edge_count() == 10);
    for (int v = 0; v < 5; ++v) {
        CHECK(g.weight(v) >= 1);
        CHECK(g.weight(v) <= 11);
        CHECK(g.degree(v) == 4);
    }
}

TEST_CASE("edge probability 0 yields no edges") {
    CHECK(generate_random_graph(6, 0.0, 3).edge_count() == 0);
}

TEST_CASE("generation is a pure function of (k, p, seed)") {
    WeightedGraph a = generate_random_graph(10, 0.5, 42);
    WeightedGraph b = generate_random_graph(10, 0.5, 42);
    CHECK(a == b);
    CHECK(a.edges() == b.edges());
    // A different seed should disagree somewhere (overwhelmingly likely).
    WeightedGraph c = generate_random_graph(10, 0.5, 43);
    CHECK(a != c);
}

TEST_CASE("invalid generator parameters are rejected") {
    CHECK_THROWS_AS(generate_random_graph(0, 0.5, 1), std::invalid_argument);
    CHECK_THROWS_AS(generate_random_graph(3, -0.1, 1), std::invalid_argument);
    CHECK_THROWS_AS(generate_random_graph(3, 1.5, 1), std::invalid_argument);
}

TEST_CASE("edge count statistics match p * k(k-1)/2") {
    // k=10, p=0.5: per-draw mean 22.5, sd sqrt(45 * 0.25); over 1000 draws
    // the sample mean must sit within 3 standard errors.
    const int draws = 1000;
    double total = 0;
    for (int i = 0; i < draws; ++i) {
        WeightedGraph g = generate_random_graph(10, 0.5, 1000 + i);
        total += g.edge_count();
        for (int v = 0; v < 10; ++v) {
            CHECK(g.weight(v) >= 1);
            CHECK(g.weight(v) <= 21);
        }
    }
    const double mean = total / draws;
    const double standard_error = std::sqrt(45.0 * 0.25) / std::sqrt(double(draws));
    CHECK(std::fabs(mean - 22.5) <= 3.0 * standard_error);
}

TEST_CASE("max_degree") {
    WeightedGraph edgeless({1, 1, 1}, {});
    CHECK(max_degree(edgeless) == 0);
    WeightedGraph triangle({3, 5, 4}, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(max_degree(triangle) == 2);
    WeightedGraph path({2, 3, 2}, {{0, 1}, {1, 2}});
    CHECK(max_degree(path) == 2);
}

TEST_CASE("constructor enforces the invariants") {
    CHECK_THROWS_AS(WeightedGraph({0, 1}, {}), std::invalid_argument);       // weight < 1
    CHECK_THROWS_AS(WeightedGraph({1, 1}, {{0, 0}}), std::invalid_argument); // self-loop
    CHECK_THROWS_AS(WeightedGraph({1, 1}, {{0, 2}}), std::invalid_argument); // bad index
    CHECK_THROWS_AS(WeightedGraph({1, 1}, {{0, 1}, {1, 0}}), std::invalid_argument);
}

TEST_CASE("parse_graph reads the documented format") {
    WeightedGraph g = parse_graph("p mwis 2 1\nv 1 3\nv 2 5\ne 1 2\n");
    CHECK(g.vertex_count() == 2);
    CHECK(g.weight(0) == 3);
    CHECK(g.weight(1) == 5);
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}});

    WeightedGraph single = parse_graph("p mwis 1 0\nv 1 1\n");
    CHECK(single.vertex_count() == 1);
    CHECK(single.weight(0) == 1);
}

TEST_CASE("parse_graph ignores comment lines") {
    WeightedGraph g = parse_graph("c generated fixture\np mwis 1 0\nc mid comment\nv 1 2\n");
    CHECK(g.weight(0) == 2);
}

TEST_CASE("parse_graph rejects malformed input with a line number") {
    CHECK_THROWS_WITH_AS(parse_graph("p mwis 2 1\nv 1 3\nv 2 5\ne 1 3\n"),
                         doctest::Contains("undeclared vertex 3"), parse_error);
    CHECK_THROWS_WITH_AS(parse_graph("p mwis 1 0\nv 1 3\nv 1 4\n"),
                         doctest::Contains("line 3"), parse_error);
    CHECK_THROWS_AS(parse_graph("p mwis 1 0\nv 1 0\n"), parse_error);   // weight < 1
    CHECK_THROWS_AS(parse_graph("v 1 1\n"), parse_error);               // no header
    CHECK_THROWS_AS(parse_graph("p mwis 2 2\nv 1 1\nv 2 1\ne 1 2\n"), parse_error);
    CHECK_THROWS_AS(parse_graph(""), parse_error);
}

TEST_CASE("write_graph round-trips and is stable") {
    WeightedGraph triangle({3, 5, 4}, {{1, 2}, {0, 1}, {0, 2}});
    CHECK(parse_graph(write_graph(triangle)) == triangle);

    WeightedGraph edgeless({9}, {});
    CHECK(write_graph(edgeless).find("\ne ") == std::string::npos);

    WeightedGraph g = generate_random_graph(10, 0.5, 42);
    CHECK(write_graph(g) == write_graph(generate_random_graph(10, 0.5, 42)));
    CHECK(parse_graph(write_graph(g)) == g);
}

TEST_CASE("round trip holds for random instances") {
    for (int seed = 0; seed < 25; ++seed) {
        WeightedGraph g = generate_random_graph(1 + seed % 12, 0.4, seed);
        CHECK(parse_graph(write_graph(g)) == g);
    }
}

}  // TEST_SUITE
