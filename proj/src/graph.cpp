#include "qopt/graph.hpp"

#include <algorithm>
#include <istream>
#include <sstream>
#include <stdexcept>

#include "qopt/errors.hpp"
#include "qopt/rng.hpp"

namespace qopt {

WeightedGraph::WeightedGraph(std::vector<std::int64_t> weights,
                             std::vector<std::pair<int, int>> edges)
    : weights_(std::move(weights)), edges_(std::move(edges)) {
    const int n = static_cast<int>(weights_.size());
    if (n == 0) throw std::invalid_argument("graph needs at least one vertex");
    for (std::int64_t w : weights_)
        if (w < 1) throw std::invalid_argument("vertex weights must be >= 1");

    for (auto& [u, v] : edges_) {
        if (u == v) throw std::invalid_argument("self-loops are not allowed");
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("edge references unknown vertex");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw std::invalid_argument("duplicate edge");

    degrees_.assign(n, 0);
    for (const auto& [u, v] : edges_) {
        ++degrees_[u];
        ++degrees_[v];
    }
}

std::int64_t WeightedGraph::max_weight() const {
    return *std::max_element(weights_.begin(), weights_.end());
}

WeightedGraph generate_random_graph(int k, double edge_probability, std::uint64_t seed) {
    if (k < 1) throw std::invalid_argument("vertex count must be >= 1");
    if (edge_probability < 0.0 || edge_probability > 1.0)
        throw std::invalid_argument("edge probability must be in [0, 1]");

    std::mt19937_64 rng(seed);
    std::vector<std::int64_t> weights(k);
    for (int i = 0; i < k; ++i)
        weights[i] = static_cast<std::int64_t>(uniform_int(rng, 1, 2 * static_cast<std::uint64_t>(k) + 1));

    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < k; ++u)
        for (int v = u + 1; v < k; ++v)
            if (canonical_double(rng) < edge_probability) edges.emplace_back(u, v);

    return WeightedGraph(std::move(weights), std::move(edges));
}

int max_degree(const WeightedGraph& g) {
    int best = 0;
    for (int v = 0; v < g.vertex_count(); ++v) best = std::max(best, g.degree(v));
    return best;
}

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (ss >> tok) tokens.push_back(tok);
    return tokens;
}

std::int64_t parse_int_or(const std::string& tok, int line_no, const char* what) {
    try {
        std::size_t pos = 0;
        std::int64_t v = std::stoll(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw parse_error(line_no, std::string("expected ") + what + ", got '" + tok + "'");
    }
}

}  // namespace

WeightedGraph parse_graph(std::istream& in) {
    std::string line;
    int line_no = 0;
    std::int64_t n = -1, m = -1;
    std::vector<std::int64_t> weights;
    std::vector<bool> declared;
    std::vector<std::pair<int, int>> edges;

    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == 'c') continue;
        auto tokens = tokenize(line);
        if (tokens.empty()) continue;

        if (tokens[0] == "p") {
            if (n != -1) throw parse_error(line_no, "duplicate problem line");
            if (tokens.size() != 4 || tokens[1] != "mwis")
                throw parse_error(line_no, "expected 'p mwis <n> <m>'");
            n = parse_int_or(tokens[2], line_no, "vertex count");
            m = parse_int_or(tokens[3], line_no, "edge count");
            if (n < 1) throw parse_error(line_no, "vertex count must be >= 1");
            if (m < 0) throw parse_error(line_no, "edge count must be >= 0");
            weights.assign(n, 0);
            declared.assign(n, false);
        } else if (tokens[0] == "v") {
            if (n == -1) throw parse_error(line_no, "vertex line before problem line");
            if (tokens.size() != 3) throw parse_error(line_no, "expected 'v <id> <weight>'");
            std::int64_t id = parse_int_or(tokens[1], line_no, "vertex id");
            std::int64_t w = parse_int_or(tokens[2], line_no, "weight");
            if (id < 1 || id > n)
                throw parse_error(line_no, "vertex id " + std::to_string(id) + " out of range");
            if (declared[id - 1])
                throw parse_error(line_no, "duplicate declaration of vertex " + std::to_string(id));
            if (w < 1) throw parse_error(line_no, "weight must be >= 1");
            declared[id - 1] = true;
            weights[id - 1] = w;
        } else if (tokens[0] == "e") {
            if (n == -1) throw parse_error(line_no, "edge line before problem line");
            if (tokens.size() != 3) throw parse_error(line_no, "expected 'e <u> <v>'");
            std::int64_t u = parse_int_or(tokens[1], line_no, "vertex id");
            std::int64_t v = parse_int_or(tokens[2], line_no, "vertex id");
            for (std::int64_t id : {u, v}) {
                if (id < 1 || id > n || !declared[id - 1])
                    throw parse_error(line_no, "undeclared vertex " + std::to_string(id));
            }
            if (u == v) throw parse_error(line_no, "self-loop on vertex " + std::to_string(u));
            edges.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
        } else {
            throw parse_error(line_no, "unknown line type '" + tokens[0] + "'");
        }
    }

    if (n == -1) throw parse_error(line_no, "missing problem line");
    for (std::int64_t i = 0; i < n; ++i)
        if (!declared[i])
            throw parse_error(line_no, "vertex " + std::to_string(i + 1) + " never declared");
    if (static_cast<std::int64_t>(edges.size()) != m)
        throw parse_error(line_no, "edge count mismatch: header says " + std::to_string(m) +
                                       ", found " + std::to_string(edges.size()));

    try {
        return WeightedGraph(std::move(weights), std::move(edges));
    } catch (const std::invalid_argument& e) {
        throw parse_error(line_no, e.what());
    }
}

WeightedGraph parse_graph(const std::string& text) {
    std::istringstream in(text);
    return parse_graph(in);
}

std::string write_graph(const WeightedGraph& g) {
    std::ostringstream out;
    out << "p mwis " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (int v = 0; v < g.vertex_count(); ++v)
        out << "v " << v + 1 << ' ' << g.weight(v) << '\n';
    for (const auto& [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
    return out.str();
}

}  // namespace qopt
