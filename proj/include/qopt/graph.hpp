#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace qopt {

/// Undirected graph with positive integer vertex weights.
///
/// Vertices are 0-based internally and 1-based in the file format. The edge
/// set is normalized at construction (u < v, sorted, duplicate-free) and the
/// graph is immutable afterwards, so concurrent reads are safe.
class WeightedGraph {
public:
    WeightedGraph(std::vector<std::int64_t> weights,
                  std::vector<std::pair<int, int>> edges);

    int vertex_count() const { return static_cast<int>(weights_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    std::int64_t weight(int v) const { return weights_[v]; }
    const std::vector<std::int64_t>& weights() const { return weights_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    int degree(int v) const { return degrees_[v]; }
    std::int64_t max_weight() const;

    bool operator==(const WeightedGraph&) const = default;

private:
    std::vector<std::int64_t> weights_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<int> degrees_;
};

/// Random instance per the benchmark protocol: k vertices, weights uniform on
/// {1, ..., 2k+1}, each of the k(k-1)/2 edges present independently with
/// probability edge_probability. Pure function of (k, edge_probability, seed).
WeightedGraph generate_random_graph(int k, double edge_probability, std::uint64_t seed);

int max_degree(const WeightedGraph& g);

/// Reads the line-based graph format:
///   c <comment>
///   p mwis <n> <m>
///   v <id> <weight>     (n lines, ids 1..n)
///   e <u> <v>           (m lines)
/// Throws qopt::parse_error naming the offending line.
WeightedGraph parse_graph(std::istream& in);
WeightedGraph parse_graph(const std::string& text);

/// Inverse of parse_graph; edges emitted smaller-id first, sorted.
std::string write_graph(const WeightedGraph& g);

}  // namespace qopt
