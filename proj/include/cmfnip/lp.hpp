#pragma once

#include <cmfnip/rational.hpp>

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace cmfnip {

enum class Relation { less_equal, greater_equal, equal };

struct LpVariable {
    std::string name;
    Rational lower;
    std::optional<Rational> upper;   // nullopt = +infinity
    bool integral = false;
};

struct LpConstraint {
    std::string name;
    std::vector<Rational> coefficients;   // one per variable
    Relation relation;
    Rational rhs;
};

using Term = std::pair<std::size_t, Rational>;

/// Minimisation model with dense rows. Lower bounds must be finite.
class LpModel {
public:
    std::size_t add_variable(std::string name, Rational lower, std::optional<Rational> upper, bool integral,
                             Rational cost = 0);

    /// Terms may mention a variable more than once; coefficients add up.
    std::size_t add_constraint(std::string name, const std::vector<Term> & terms, Relation relation, Rational rhs);

    std::size_t variable_count() const noexcept { return _vars.size(); }
    std::size_t constraint_count() const noexcept { return _rows.size(); }

    const std::vector<LpVariable> & variables() const noexcept { return _vars; }
    const std::vector<LpConstraint> & constraints() const noexcept { return _rows; }
    const std::vector<Rational> & objective() const noexcept { return _cost; }

    void set_bounds(std::size_t var, Rational lower, std::optional<Rational> upper);

    bool has_integral_variables() const;

    /// Throws std::invalid_argument on lower > upper or ragged rows.
    void validate() const;

    Rational evaluate_objective(const std::vector<Rational> & x) const;

    /// True iff x meets every bound and every row exactly.
    bool is_feasible(const std::vector<Rational> & x) const;

private:
    std::vector<LpVariable> _vars;
    std::vector<Rational> _cost;
    std::vector<LpConstraint> _rows;
};

enum class LpStatus { optimal, infeasible, unbounded };

const char * to_string(LpStatus s);

struct LpSolution {
    LpStatus status = LpStatus::infeasible;
    Rational objective_value;              // meaningful when optimal
    std::vector<Rational> assignment;      // empty unless optimal
    std::size_t pivots = 0;
};

struct IpSolution : LpSolution {
    std::size_t node_count = 0;
};

/// Two-phase bounded-variable primal simplex on a dense tableau, exact
/// arithmetic, Bland's rule (lowest eligible index enters, lowest basic index
/// leaves on ratio ties). Integrality flags are ignored.
LpSolution solve_lp(const LpModel & model);

/// Depth-first branch and bound over solve_lp relaxations. Branches on the
/// integral variable whose fractional part is closest to 1/2 (lowest index on
/// ties), down branch first. A model whose root relaxation is unbounded is
/// reported unbounded.
IpSolution solve_ip(const LpModel & model);

/// Plain-text dump used for golden files:
///
///     lp <variables> <constraints>
///     var <name> <lower> <upper|inf> <int|cont>
///     obj <c_1> ... <c_n>
///     row <name> <a_1> ... <a_n> <=|>=|= <rhs>
void write_lp(std::ostream & out, const LpModel & model);
std::string to_string(const LpModel & model);

}
