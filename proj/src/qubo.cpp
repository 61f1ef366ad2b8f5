#include "qopt/qubo.hpp"

#include <istream>
#include <sstream>
#include <stdexcept>

#include "qopt/errors.hpp"

namespace qopt {

Qubo::Qubo(int n) : n_(n) {
    if (n < 0) throw std::invalid_argument("qubit count must be >= 0");
}

void Qubo::add(int i, int j, const Rational& c) {
    if (i < 0 || j < 0 || i >= n_ || j >= n_)
        throw std::invalid_argument("qubit index out of range");
    if (c == 0) return;
    auto key = i <= j ? std::make_pair(i, j) : std::make_pair(j, i);
    auto [it, inserted] = coeffs_.try_emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) coeffs_.erase(it);
    }
}

Rational Qubo::coefficient(int i, int j) const {
    auto key = i <= j ? std::make_pair(i, j) : std::make_pair(j, i);
    auto it = coeffs_.find(key);
    return it == coeffs_.end() ? Rational(0) : it->second;
}

IsingModel::IsingModel(int n) : n_(n), h_(n, Rational(0)) {
    if (n < 0) throw std::invalid_argument("spin count must be >= 0");
}

void IsingModel::add_field(int i, const Rational& c) {
    if (i < 0 || i >= n_) throw std::invalid_argument("spin index out of range");
    h_[i] += c;
}

void IsingModel::add_coupling(int i, int j, const Rational& c) {
    if (i < 0 || j < 0 || i >= n_ || j >= n_)
        throw std::invalid_argument("spin index out of range");
    if (i == j) throw std::invalid_argument("self-couplings are not allowed");
    if (c == 0) return;
    auto key = i < j ? std::make_pair(i, j) : std::make_pair(j, i);
    auto [it, inserted] = couplings_.try_emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) couplings_.erase(it);
    }
}

Rational IsingModel::coupling(int i, int j) const {
    auto key = i < j ? std::make_pair(i, j) : std::make_pair(j, i);
    auto it = couplings_.find(key);
    return it == couplings_.end() ? Rational(0) : it->second;
}

Rational evaluate_qubo(const Qubo& q, const std::vector<int>& x) {
    if (static_cast<int>(x.size()) != q.size())
        throw std::invalid_argument("assignment length does not match qubit count");
    Rational e = q.offset();
    for (const auto& [key, c] : q.coefficients()) {
        if (x[key.first] != 0 && x[key.second] != 0) e += c;
    }
    return e;
}

Rational evaluate_ising(const IsingModel& m, const std::vector<int>& s) {
    if (static_cast<int>(s.size()) != m.size())
        throw std::invalid_argument("spin vector length does not match spin count");
    for (int v : s)
        if (v != 1 && v != -1) throw std::invalid_argument("spins must be +1 or -1");
    Rational e = m.offset();
    for (const auto& [key, J] : m.couplings()) e -= J * (s[key.first] * s[key.second]);
    for (int i = 0; i < m.size(); ++i) e -= m.field(i) * s[i];
    return e;
}

IsingModel qubo_to_ising(const Qubo& q) {
    // Substitute x_i = (s_i + 1)/2 into x'Qx + c and match the Ising sign
    // convention -J s s - h s + offset.
    IsingModel m(q.size());
    m.add_offset(q.offset());
    for (const auto& [key, c] : q.coefficients()) {
        auto [i, j] = key;
        if (i == j) {
            // c x_i = c (s_i + 1) / 2
            m.add_field(i, -c / 2);
            m.add_offset(c / 2);
        } else {
            // c x_i x_j = c (s_i s_j + s_i + s_j + 1) / 4
            m.add_coupling(i, j, -c / 4);
            m.add_field(i, -c / 4);
            m.add_field(j, -c / 4);
            m.add_offset(c / 4);
        }
    }
    return m;
}

Qubo ising_to_qubo(const IsingModel& m) {
    // s_i = 2 x_i - 1.
    Qubo q(m.size());
    q.add_offset(m.offset());
    for (const auto& [key, J] : m.couplings()) {
        auto [i, j] = key;
        // -J s_i s_j = -J (4 x_i x_j - 2 x_i - 2 x_j + 1)
        q.add(i, j, -4 * J);
        q.add(i, i, 2 * J);
        q.add(j, j, 2 * J);
        q.add_offset(-J);
    }
    for (int i = 0; i < m.size(); ++i) {
        // -h s_i = -h (2 x_i - 1)
        q.add(i, i, -2 * m.field(i));
        q.add_offset(m.field(i));
    }
    return q;
}

Qubo mwis_direct_qubo(const WeightedGraph& g, const Rational& penalty) {
    if (penalty <= 0) throw std::invalid_argument("penalty must be positive");
    Qubo q(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) q.add(v, v, Rational(-g.weight(v)));
    for (const auto& [u, v] : g.edges()) q.add(u, v, penalty);
    return q;
}

std::int64_t default_penalty(const WeightedGraph& g) {
    return g.max_weight() * max_degree(g) + 1;
}

MwisDecoded decode_mwis(const WeightedGraph& g, const std::vector<int>& x) {
    if (static_cast<int>(x.size()) != g.vertex_count())
        throw std::invalid_argument("assignment length does not match vertex count");
    MwisDecoded d{{}, 0, true};
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (x[v] != 0) {
            d.vertices.push_back(v);
            d.weight += g.weight(v);
        }
    }
    for (const auto& [u, v] : g.edges())
        if (x[u] != 0 && x[v] != 0) {
            d.feasible = false;
            break;
        }
    return d;
}

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (ss >> tok) tokens.push_back(tok);
    return tokens;
}

int parse_index(const std::string& tok, int line_no, int n) {
    std::int64_t v;
    try {
        std::size_t pos = 0;
        v = std::stoll(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
        throw parse_error(line_no, "expected index, got '" + tok + "'");
    }
    if (v < 0 || v >= n) throw parse_error(line_no, "index " + tok + " out of range");
    return static_cast<int>(v);
}

Rational parse_value(const std::string& tok, int line_no) {
    try {
        return parse_rational(tok);
    } catch (const std::exception&) {
        throw parse_error(line_no, "expected value, got '" + tok + "'");
    }
}

// Shared scanner for the QUBO and Ising formats; the callback handles the
// per-format body lines.
template <typename Body>
void scan_model_file(std::istream& in, int& n, Body&& body) {
    std::string line;
    int line_no = 0;
    n = -1;
    bool offset_allowed = true;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == 'c') continue;
        auto tokens = tokenize(line);
        if (tokens.empty()) continue;
        if (tokens[0] == "n") {
            if (n != -1) throw parse_error(line_no, "duplicate size line");
            if (tokens.size() != 2) throw parse_error(line_no, "expected 'n <count>'");
            try {
                n = std::stoi(tokens[1]);
            } catch (const std::exception&) {
                throw parse_error(line_no, "expected count, got '" + tokens[1] + "'");
            }
            if (n < 0) throw parse_error(line_no, "size must be >= 0");
            continue;
        }
        if (n == -1) throw parse_error(line_no, "body line before size line");
        if (tokens[0] == "offset") {
            if (!offset_allowed) throw parse_error(line_no, "duplicate offset line");
            if (tokens.size() != 2) throw parse_error(line_no, "expected 'offset <value>'");
            offset_allowed = false;
            body(tokens, line_no);
            continue;
        }
        body(tokens, line_no);
    }
    if (n == -1) throw parse_error(line_no, "missing size line");
}

}  // namespace

std::string write_qubo(const Qubo& q) {
    std::ostringstream out;
    out << "n " << q.size() << '\n';
    if (q.offset() != 0) out << "offset " << format_rational(q.offset()) << '\n';
    for (const auto& [key, c] : q.coefficients())
        out << key.first << ' ' << key.second << ' ' << format_rational(c) << '\n';
    return out.str();
}

Qubo parse_qubo(std::istream& in) {
    int n = 0;
    Qubo q(0);
    bool sized = false;
    scan_model_file(in, n, [&](const std::vector<std::string>& tokens, int line_no) {
        if (!sized) {
            q = Qubo(n);
            sized = true;
        }
        if (tokens[0] == "offset") {
            q.add_offset(parse_value(tokens[1], line_no));
            return;
        }
        if (tokens.size() != 3) throw parse_error(line_no, "expected '<i> <j> <coeff>'");
        int i = parse_index(tokens[0], line_no, n);
        int j = parse_index(tokens[1], line_no, n);
        if (i > j) throw parse_error(line_no, "expected i <= j");
        q.add(i, j, parse_value(tokens[2], line_no));
    });
    if (!sized) q = Qubo(n);
    return q;
}

Qubo parse_qubo(const std::string& text) {
    std::istringstream in(text);
    return parse_qubo(in);
}

std::string write_ising(const IsingModel& m) {
    std::ostringstream out;
    out << "n " << m.size() << '\n';
    if (m.offset() != 0) out << "offset " << format_rational(m.offset()) << '\n';
    for (int i = 0; i < m.size(); ++i)
        if (m.field(i) != 0) out << "h " << i << ' ' << format_rational(m.field(i)) << '\n';
    for (const auto& [key, J] : m.couplings())
        out << "J " << key.first << ' ' << key.second << ' ' << format_rational(J) << '\n';
    return out.str();
}

IsingModel parse_ising(std::istream& in) {
    int n = 0;
    IsingModel m(0);
    bool sized = false;
    scan_model_file(in, n, [&](const std::vector<std::string>& tokens, int line_no) {
        if (!sized) {
            m = IsingModel(n);
            sized = true;
        }
        if (tokens[0] == "offset") {
            m.add_offset(parse_value(tokens[1], line_no));
            return;
        }
        if (tokens[0] == "h") {
            if (tokens.size() != 3) throw parse_error(line_no, "expected 'h <i> <value>'");
            m.add_field(parse_index(tokens[1], line_no, n), parse_value(tokens[2], line_no));
            return;
        }
        if (tokens[0] == "J") {
            if (tokens.size() != 4) throw parse_error(line_no, "expected 'J <i> <j> <value>'");
            int i = parse_index(tokens[1], line_no, n);
            int j = parse_index(tokens[2], line_no, n);
            if (i == j) throw parse_error(line_no, "self-coupling");
            m.add_coupling(i, j, parse_value(tokens[3], line_no));
            return;
        }
        throw parse_error(line_no, "unknown line type '" + tokens[0] + "'");
    });
    if (!sized) m = IsingModel(n);
    return m;
}

IsingModel parse_ising(const std::string& text) {
    std::istringstream in(text);
    return parse_ising(in);
}

}  // namespace qopt
