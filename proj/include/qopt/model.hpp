#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qopt/encoding.hpp"
#include "qopt/graph.hpp"
#include "qopt/qubo.hpp"
#include "qopt/rational.hpp"

namespace qopt {

enum class Sense { minimize, maximize };
enum class ConstraintSense { less_equal, equal, greater_equal };
enum class VarKind { binary, integer };

struct Variable {
    std::string name;
    VarKind kind = VarKind::binary;
    std::int64_t lower = 0;
    std::int64_t upper = 1;
    bool is_slack = false;
};

struct LinearExpr {
    std::map<int, Rational> terms;  // variable index -> coefficient

    void add(int var, const Rational& c);
    Rational value(const std::vector<std::int64_t>& assignment) const;
};

struct Constraint {
    LinearExpr lhs;
    ConstraintSense sense = ConstraintSense::equal;
    Rational rhs;

    bool satisfied(const std::vector<std::int64_t>& assignment) const;
};

/// Constrained optimization IR: binary / bounded-integer variables, a
/// linear-quadratic objective, and linear constraints. Immutable once built
/// up; the transformation operations below are pure functions over it.
class ProblemModel {
public:
    int add_binary(std::string name);
    int add_integer(std::string name, std::int64_t lower, std::int64_t upper,
                    bool is_slack = false);

    void set_sense(Sense s) { sense_ = s; }
    Sense sense() const { return sense_; }

    void add_objective_constant(const Rational& c) { objective_constant_ += c; }
    void add_objective_linear(int var, const Rational& c);
    /// Accumulates c * v_u * v_v; squares of binary variables fold to linear.
    void add_objective_quadratic(int u, int v, const Rational& c);
    void add_constraint(LinearExpr lhs, ConstraintSense sense, Rational rhs);

    int variable_count() const { return static_cast<int>(variables_.size()); }
    const std::vector<Variable>& variables() const { return variables_; }
    const Variable& variable(int i) const { return variables_[i]; }
    const std::vector<Constraint>& constraints() const { return constraints_; }
    const Rational& objective_constant() const { return objective_constant_; }
    const std::map<int, Rational>& objective_linear() const { return objective_linear_; }
    const std::map<std::pair<int, int>, Rational>& objective_quadratic() const {
        return objective_quadratic_;
    }

    Rational objective_value(const std::vector<std::int64_t>& assignment) const;
    bool is_feasible(const std::vector<std::int64_t>& assignment) const;

private:
    void check_var(int v) const;

    Sense sense_ = Sense::minimize;
    std::vector<Variable> variables_;
    Rational objective_constant_;
    std::map<int, Rational> objective_linear_;
    std::map<std::pair<int, int>, Rational> objective_quadratic_;  // u <= v
    std::vector<Constraint> constraints_;
};

/// maximize sum_i a_i x_i subject to x_i + x_j <= 1 per edge, x binary.
ProblemModel mwis_model(const WeightedGraph& g);

/// Step 1: every inequality gains a bounded non-negative integer slack whose
/// range is the constraint's maximal slack under the variable bounds
/// (lhs + y = rhs for <=, lhs - y = rhs for >=). Equalities pass through.
ProblemModel inequality_to_equality(const ProblemModel& model);

/// Step 2: constraints become penalty * (lhs - rhs)^2 objective terms, signed
/// so violations worsen the objective under the model's sense.
ProblemModel equality_to_penalty(const ProblemModel& model, const Rational& penalty);

/// Records how original and slack variables map onto host qubits.
struct VariableMapEntry {
    std::string name;
    VarKind kind = VarKind::binary;
    std::int64_t lower = 0;
    std::int64_t upper = 1;
    bool is_slack = false;
    EncodingScheme scheme = EncodingScheme::binary;
    std::vector<int> qubits;  // contiguous, ascending; empty for fixed variables

    bool operator==(const VariableMapEntry&) const = default;
};

struct VariableMap {
    std::vector<VariableMapEntry> entries;
    int qubit_count = 0;
    /// True when a maximize objective was negated into the minimizing QUBO;
    /// reported objective values are already back in the original sense.
    bool negated_objective = false;

    /// Decoded value per entry. Binary codewords clamp to the range;
    /// one-hot / domain-wall decode invalid codewords best-effort.
    std::vector<std::int64_t> decode(const std::vector<int>& bits) const;
    /// True iff every one-hot / domain-wall codeword in bits is valid.
    bool codewords_valid(const std::vector<int>& bits) const;
};

/// Step 3: integer variables become bit groups (minimal binary width for the
/// default scheme), leaving an all-binary model plus the decode map.
std::pair<ProblemModel, VariableMap> discretize_variables(const ProblemModel& model);

/// Scheme-parameterized variant. One-hot / domain-wall groups additionally
/// contribute validity_penalty-weighted validity terms to the objective.
std::pair<ProblemModel, VariableMap> discretize_variables(const ProblemModel& model,
                                                          EncodingScheme scheme,
                                                          const Rational& validity_penalty);

/// Steps 1-3 composed, then maximize objectives negated into a minimizing
/// QUBO. The VariableMap decodes qubit assignments back to model variables.
std::pair<Qubo, VariableMap> to_qubo(const ProblemModel& model, const Rational& penalty,
                                     EncodingScheme integer_encoding = EncodingScheme::binary);

}  // namespace qopt
