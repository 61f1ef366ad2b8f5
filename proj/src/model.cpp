#include "qopt/model.hpp"

#include <algorithm>
#include <stdexcept>

#include "qopt/errors.hpp"

namespace qopt {

void LinearExpr::add(int var, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms.try_emplace(var, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

Rational LinearExpr::value(const std::vector<std::int64_t>& assignment) const {
    Rational v;
    for (const auto& [var, c] : terms) v += c * assignment.at(var);
    return v;
}

bool Constraint::satisfied(const std::vector<std::int64_t>& assignment) const {
    Rational v = lhs.value(assignment);
    switch (sense) {
        case ConstraintSense::less_equal: return v <= rhs;
        case ConstraintSense::equal: return v == rhs;
        case ConstraintSense::greater_equal: return v >= rhs;
    }
    return false;
}

int ProblemModel::add_binary(std::string name) {
    variables_.push_back({std::move(name), VarKind::binary, 0, 1, false});
    return variable_count() - 1;
}

int ProblemModel::add_integer(std::string name, std::int64_t lower, std::int64_t upper,
                              bool is_slack) {
    if (lower > upper) throw std::invalid_argument("integer bounds must satisfy lo <= hi");
    variables_.push_back({std::move(name), VarKind::integer, lower, upper, is_slack});
    return variable_count() - 1;
}

void ProblemModel::check_var(int v) const {
    if (v < 0 || v >= variable_count()) throw std::invalid_argument("unknown variable index");
}

void ProblemModel::add_objective_linear(int var, const Rational& c) {
    check_var(var);
    if (c == 0) return;
    auto [it, inserted] = objective_linear_.try_emplace(var, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) objective_linear_.erase(it);
    }
}

void ProblemModel::add_objective_quadratic(int u, int v, const Rational& c) {
    check_var(u);
    check_var(v);
    if (c == 0) return;
    if (u == v && variables_[u].kind == VarKind::binary) {
        add_objective_linear(u, c);  // x^2 = x
        return;
    }
    auto key = u <= v ? std::make_pair(u, v) : std::make_pair(v, u);
    auto [it, inserted] = objective_quadratic_.try_emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) objective_quadratic_.erase(it);
    }
}

void ProblemModel::add_constraint(LinearExpr lhs, ConstraintSense sense, Rational rhs) {
    for (const auto& [var, c] : lhs.terms) check_var(var);
    constraints_.push_back({std::move(lhs), sense, std::move(rhs)});
}

Rational ProblemModel::objective_value(const std::vector<std::int64_t>& assignment) const {
    if (assignment.size() != variables_.size())
        throw std::invalid_argument("assignment length does not match variable count");
    Rational v = objective_constant_;
    for (const auto& [var, c] : objective_linear_) v += c * assignment[var];
    for (const auto& [key, c] : objective_quadratic_)
        v += c * assignment[key.first] * assignment[key.second];
    return v;
}

bool ProblemModel::is_feasible(const std::vector<std::int64_t>& assignment) const {
    return std::all_of(constraints_.begin(), constraints_.end(),
                       [&](const Constraint& c) { return c.satisfied(assignment); });
}

ProblemModel mwis_model(const WeightedGraph& g) {
    ProblemModel m;
    m.set_sense(Sense::maximize);
    for (int v = 0; v < g.vertex_count(); ++v) {
        int idx = m.add_binary("x" + std::to_string(v + 1));
        m.add_objective_linear(idx, Rational(g.weight(v)));
    }
    for (const auto& [u, v] : g.edges()) {
        LinearExpr lhs;
        lhs.add(u, 1);
        lhs.add(v, 1);
        m.add_constraint(std::move(lhs), ConstraintSense::less_equal, 1);
    }
    return m;
}

namespace {

// Extremes of a linear expression over the variable bounds; requires integer
// coefficients and bounds so slack ranges stay integral.
std::pair<std::int64_t, std::int64_t> expression_range(const LinearExpr& expr,
                                                       const ProblemModel& model) {
    std::int64_t lo = 0, hi = 0;
    for (const auto& [var, c] : expr.terms) {
        if (c.denominator() != 1)
            throw transform_error("constraint coefficient " + format_rational(c) +
                                  " is not integral");
        const Variable& v = model.variable(var);
        std::int64_t a = c.numerator() * v.lower;
        std::int64_t b = c.numerator() * v.upper;
        lo += std::min(a, b);
        hi += std::max(a, b);
    }
    return {lo, hi};
}

std::int64_t integral_rhs(const Rational& rhs) {
    if (rhs.denominator() != 1)
        throw transform_error("constraint bound " + format_rational(rhs) + " is not integral");
    return rhs.numerator();
}

ProblemModel copy_without_constraints(const ProblemModel& model) {
    ProblemModel out;
    out.set_sense(model.sense());
    for (const Variable& v : model.variables()) {
        if (v.kind == VarKind::binary)
            out.add_binary(v.name);
        else
            out.add_integer(v.name, v.lower, v.upper, v.is_slack);
    }
    out.add_objective_constant(model.objective_constant());
    for (const auto& [var, c] : model.objective_linear()) out.add_objective_linear(var, c);
    for (const auto& [key, c] : model.objective_quadratic())
        out.add_objective_quadratic(key.first, key.second, c);
    return out;
}

}  // namespace

ProblemModel inequality_to_equality(const ProblemModel& model) {
    ProblemModel out = copy_without_constraints(model);
    int slack_index = 0;
    for (const Constraint& c : model.constraints()) {
        if (c.sense == ConstraintSense::equal) {
            out.add_constraint(c.lhs, ConstraintSense::equal, c.rhs);
            continue;
        }
        auto [lhs_lo, lhs_hi] = expression_range(c.lhs, model);
        std::int64_t rhs = integral_rhs(c.rhs);
        std::int64_t slack_max = c.sense == ConstraintSense::less_equal ? rhs - lhs_lo
                                                                        : lhs_hi - rhs;
        if (slack_max < 0)
            throw transform_error("constraint is infeasible under the variable bounds");
        int y = out.add_integer("slack" + std::to_string(slack_index++), 0, slack_max,
                                /*is_slack=*/true);
        LinearExpr lhs = c.lhs;
        lhs.add(y, c.sense == ConstraintSense::less_equal ? Rational(1) : Rational(-1));
        out.add_constraint(std::move(lhs), ConstraintSense::equal, c.rhs);
    }
    return out;
}

ProblemModel equality_to_penalty(const ProblemModel& model, const Rational& penalty) {
    if (penalty <= 0) throw std::invalid_argument("penalty must be positive");
    ProblemModel out = copy_without_constraints(model);
    // Violations must worsen the objective: add the squared residual when
    // minimizing, subtract it when maximizing.
    Rational signed_penalty = model.sense() == Sense::minimize ? penalty : -penalty;
    for (const Constraint& c : model.constraints()) {
        if (c.sense != ConstraintSense::equal)
            throw transform_error("equality_to_penalty requires equality constraints");
        // (sum_v c_v v - rhs)^2 expanded term by term.
        out.add_objective_constant(signed_penalty * c.rhs * c.rhs);
        for (const auto& [v, cv] : c.lhs.terms) {
            out.add_objective_linear(v, signed_penalty * (-2) * c.rhs * cv);
            out.add_objective_quadratic(v, v, signed_penalty * cv * cv);
            for (auto it = c.lhs.terms.upper_bound(v); it != c.lhs.terms.end(); ++it)
                out.add_objective_quadratic(v, it->first, signed_penalty * 2 * cv * it->second);
        }
    }
    return out;
}

namespace {

// Smallest width covering M values; 0 bits for a fixed variable. Range-2
// variables are plain bits, wider ranges rely on the clamping decode.
int minimal_bits(std::int64_t value_count) {
    int bits = 0;
    while ((std::int64_t{1} << bits) < value_count) ++bits;
    return bits;
}

struct Substitution {
    LinearForm form;              // variable value as linear form over qubits
    QuadraticTerms validity;      // unweighted; empty for binary groups
};

}  // namespace

std::pair<ProblemModel, VariableMap> discretize_variables(const ProblemModel& model) {
    return discretize_variables(model, EncodingScheme::binary, 0);
}

std::pair<ProblemModel, VariableMap> discretize_variables(const ProblemModel& model,
                                                          EncodingScheme scheme,
                                                          const Rational& validity_penalty) {
    if (!model.constraints().empty())
        throw transform_error("discretize_variables requires an unconstrained model");

    ProblemModel out;
    out.set_sense(model.sense());
    VariableMap map;
    std::vector<Substitution> subs(model.variable_count());

    for (int i = 0; i < model.variable_count(); ++i) {
        const Variable& v = model.variable(i);
        VariableMapEntry entry{v.name, v.kind, v.lower, v.upper, v.is_slack,
                               EncodingScheme::binary, {}};
        Substitution& sub = subs[i];

        if (v.kind == VarKind::binary) {
            int q = out.add_binary(v.name);
            entry.qubits = {q};
            sub.form.coeffs[q] = 1;
        } else {
            const std::int64_t value_count = v.upper - v.lower + 1;
            sub.form.constant = Rational(v.lower);
            if (value_count > 1) {
                entry.scheme = scheme;
                EncodingSpec spec{scheme, static_cast<int>(value_count), out.variable_count()};
                const int width = scheme == EncodingScheme::binary
                                      ? minimal_bits(value_count)
                                      : spec.qubit_count();
                for (int k = 0; k < width; ++k)
                    entry.qubits.push_back(out.add_binary(v.name + "[" + std::to_string(k) + "]"));
                if (scheme == EncodingScheme::binary) {
                    for (int k = 0; k < width; ++k)
                        sub.form.coeffs[spec.first_qubit + k] = Rational(std::int64_t{1} << k);
                } else {
                    for (const auto& [q, c] : value_expression(spec).coeffs)
                        sub.form.coeffs[q] = c;
                }
                if (scheme == EncodingScheme::one_hot)
                    sub.validity = one_hot_validity_terms(spec);
                else if (scheme == EncodingScheme::domain_wall)
                    sub.validity = domain_wall_validity_terms(spec);
            }
        }
        map.entries.push_back(std::move(entry));
    }
    map.qubit_count = out.variable_count();

    // Substitute each variable's linear form into the objective.
    out.add_objective_constant(model.objective_constant());
    for (const auto& [var, c] : model.objective_linear()) {
        const LinearForm& f = subs[var].form;
        out.add_objective_constant(c * f.constant);
        for (const auto& [q, fc] : f.coeffs) out.add_objective_linear(q, c * fc);
    }
    for (const auto& [key, c] : model.objective_quadratic()) {
        const LinearForm& a = subs[key.first].form;
        const LinearForm& b = subs[key.second].form;
        out.add_objective_constant(c * a.constant * b.constant);
        for (const auto& [q, ac] : a.coeffs) out.add_objective_linear(q, c * ac * b.constant);
        for (const auto& [q, bc] : b.coeffs) out.add_objective_linear(q, c * bc * a.constant);
        for (const auto& [qa, ac] : a.coeffs)
            for (const auto& [qb, bc] : b.coeffs) out.add_objective_quadratic(qa, qb, c * ac * bc);
    }

    // Validity penalties, oriented like constraint penalties.
    if (validity_penalty != 0) {
        Rational signed_penalty =
            model.sense() == Sense::minimize ? validity_penalty : -validity_penalty;
        for (const Substitution& sub : subs) {
            if (sub.validity.empty()) continue;
            out.add_objective_constant(signed_penalty * sub.validity.offset);
            for (const auto& [q, c] : sub.validity.linear)
                out.add_objective_linear(q, signed_penalty * c);
            for (const auto& [key, c] : sub.validity.quadratic)
                out.add_objective_quadratic(key.first, key.second, signed_penalty * c);
        }
    }
    return {std::move(out), std::move(map)};
}

std::vector<std::int64_t> VariableMap::decode(const std::vector<int>& bits) const {
    if (static_cast<int>(bits.size()) != qubit_count)
        throw std::invalid_argument("bit vector length does not match qubit count");
    std::vector<std::int64_t> values;
    values.reserve(entries.size());
    for (const VariableMapEntry& e : entries) {
        std::vector<int> group;
        group.reserve(e.qubits.size());
        for (int q : e.qubits) group.push_back(bits[q]);
        std::int64_t v = 0;
        switch (e.scheme) {
            case EncodingScheme::binary:
                v = binary_decode(group, e.upper - e.lower + 1);
                break;
            case EncodingScheme::one_hot:
                v = one_hot_decode(group).first;
                break;
            case EncodingScheme::domain_wall:
                v = domain_wall_decode(group).first;
                break;
        }
        values.push_back(e.lower + v);
    }
    return values;
}

bool VariableMap::codewords_valid(const std::vector<int>& bits) const {
    for (const VariableMapEntry& e : entries) {
        if (e.scheme == EncodingScheme::binary) continue;
        std::vector<int> group;
        group.reserve(e.qubits.size());
        for (int q : e.qubits) group.push_back(bits[q]);
        bool valid = e.scheme == EncodingScheme::one_hot ? one_hot_decode(group).second
                                                         : domain_wall_decode(group).second;
        if (!valid) return false;
    }
    return true;
}

std::pair<Qubo, VariableMap> to_qubo(const ProblemModel& model, const Rational& penalty,
                                     EncodingScheme integer_encoding) {
    ProblemModel equalities = inequality_to_equality(model);
    ProblemModel penalized = equality_to_penalty(equalities, penalty);
    auto [binary_model, map] = discretize_variables(penalized, integer_encoding, penalty);

    // Canonical sense is minimization; restore the sign when reporting.
    const bool negate = binary_model.sense() == Sense::maximize;
    map.negated_objective = negate;
    const Rational sign = negate ? Rational(-1) : Rational(1);

    Qubo q(map.qubit_count);
    q.add_offset(sign * binary_model.objective_constant());
    for (const auto& [var, c] : binary_model.objective_linear()) q.add(var, var, sign * c);
    for (const auto& [key, c] : binary_model.objective_quadratic())
        q.add(key.first, key.second, sign * c);
    return {std::move(q), std::move(map)};
}

}  // namespace qopt
