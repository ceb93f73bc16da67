#include <cmfnip/lp.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cmfnip {

Rational parse_rational(const std::string & text)
{
    auto slash = text.find('/');
    auto valid_int = [](const std::string & s, bool allow_sign) {
        std::size_t i = (allow_sign && ! s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        if (i >= s.size())
            return false;
        return std::all_of(s.begin() + static_cast<long>(i), s.end(), [](char c) { return c >= '0' && c <= '9'; });
    };
    std::string num = text.substr(0, slash), den = slash == std::string::npos ? "1" : text.substr(slash + 1);
    if (! num.empty() && num[0] == '+')
        num.erase(0, 1);
    if (! valid_int(num, true) || ! valid_int(den, false))
        throw std::invalid_argument("not a rational: '" + text + "'");
    mpz_class d(den);
    if (d == 0)
        throw std::invalid_argument("zero denominator: '" + text + "'");
    Rational r(mpz_class(num), d);
    r.canonicalize();
    return r;
}

const char * to_string(LpStatus s)
{
    switch (s) {
        case LpStatus::optimal: return "optimal";
        case LpStatus::infeasible: return "infeasible";
        case LpStatus::unbounded: return "unbounded";
    }
    return "?";
}

std::size_t LpModel::add_variable(std::string name, Rational lower, std::optional<Rational> upper, bool integral,
                                  Rational cost)
{
    if (upper && *upper < lower)
        throw std::invalid_argument("variable '" + name + "' has lower bound above upper bound");
    _vars.push_back({std::move(name), std::move(lower), std::move(upper), integral});
    _cost.push_back(std::move(cost));
    for (auto & row : _rows)
        row.coefficients.emplace_back(0);
    return _vars.size() - 1;
}

std::size_t LpModel::add_constraint(std::string name, const std::vector<Term> & terms, Relation relation, Rational rhs)
{
    std::vector<Rational> coeffs(_vars.size());
    for (auto & [var, c] : terms) {
        if (var >= _vars.size())
            throw std::invalid_argument("constraint '" + name + "' references unknown variable");
        coeffs[var] += c;
    }
    _rows.push_back({std::move(name), std::move(coeffs), relation, std::move(rhs)});
    return _rows.size() - 1;
}

void LpModel::set_bounds(std::size_t var, Rational lower, std::optional<Rational> upper)
{
    if (upper && *upper < lower)
        throw std::invalid_argument("variable '" + _vars.at(var).name + "' has lower bound above upper bound");
    _vars.at(var).lower = std::move(lower);
    _vars.at(var).upper = std::move(upper);
}

bool LpModel::has_integral_variables() const
{
    return std::any_of(_vars.begin(), _vars.end(), [](const LpVariable & v) { return v.integral; });
}

void LpModel::validate() const
{
    for (auto & v : _vars)
        if (v.upper && *v.upper < v.lower)
            throw std::invalid_argument("variable '" + v.name + "' has lower bound above upper bound");
    for (auto & row : _rows)
        if (row.coefficients.size() != _vars.size())
            throw std::invalid_argument("constraint '" + row.name + "' has the wrong number of coefficients");
}

Rational LpModel::evaluate_objective(const std::vector<Rational> & x) const
{
    Rational z = 0;
    for (std::size_t j = 0; j < _vars.size(); ++j)
        z += _cost[j] * x.at(j);
    return z;
}

bool LpModel::is_feasible(const std::vector<Rational> & x) const
{
    if (x.size() != _vars.size())
        return false;
    for (std::size_t j = 0; j < _vars.size(); ++j) {
        if (x[j] < _vars[j].lower || (_vars[j].upper && x[j] > *_vars[j].upper))
            return false;
        if (_vars[j].integral && ! is_integer(x[j]))
            return false;
    }
    for (auto & row : _rows) {
        Rational lhs = 0;
        for (std::size_t j = 0; j < _vars.size(); ++j)
            if (sgn(row.coefficients[j]) != 0)
                lhs += row.coefficients[j] * x[j];
        switch (row.relation) {
            case Relation::less_equal: if (lhs > row.rhs) return false; break;
            case Relation::greater_equal: if (lhs < row.rhs) return false; break;
            case Relation::equal: if (lhs != row.rhs) return false; break;
        }
    }
    return true;
}

namespace {
    // Dense tableau over shifted variables y = x - lower, so every column has
    // lower bound 0. Basic values are tracked explicitly rather than through
    // a right-hand-side column, which keeps bound flips cheap.
    class Tableau {
    public:
        std::size_t rows = 0, cols = 0;
        std::vector<std::vector<Rational>> a;
        std::vector<Rational> reduced;
        std::vector<Rational> value;
        std::vector<std::optional<Rational>> upper;
        std::vector<bool> at_upper;
        std::vector<int> basis;
        std::vector<int> row_of;
        std::size_t pivots = 0;

        bool fixed(std::size_t j) const { return upper[j] && sgn(*upper[j]) == 0; }

        void price(const std::vector<Rational> & cost)
        {
            reduced = cost;
            for (std::size_t i = 0; i < rows; ++i) {
                const auto & cb = cost[basis[i]];
                if (sgn(cb) == 0)
                    continue;
                for (std::size_t j = 0; j < cols; ++j)
                    if (sgn(a[i][j]) != 0)
                        reduced[j] -= cb * a[i][j];
            }
        }

        void pivot(std::size_t r, std::size_t enter)
        {
            ++pivots;
            auto & prow = a[r];
            Rational p = prow[enter];
            for (auto & v : prow)
                if (sgn(v) != 0)
                    v /= p;

            auto eliminate = [&](std::vector<Rational> & row) {
                Rational f = row[enter];
                if (sgn(f) == 0)
                    return;
                for (std::size_t j = 0; j < cols; ++j)
                    if (sgn(prow[j]) != 0)
                        row[j] -= f * prow[j];
            };
            for (std::size_t i = 0; i < rows; ++i)
                if (i != r)
                    eliminate(a[i]);
            eliminate(reduced);

            row_of[basis[r]] = -1;
            basis[r] = static_cast<int>(enter);
            row_of[enter] = static_cast<int>(r);
        }

        // Returns false when the objective is unbounded below.
        bool optimise()
        {
            for (;;) {
                std::size_t enter = cols;
                int dir = 0;
                for (std::size_t j = 0; j < cols; ++j) {
                    if (row_of[j] >= 0 || fixed(j))
                        continue;
                    int s = sgn(reduced[j]);
                    if (! at_upper[j] && s < 0) {
                        enter = j, dir = 1;
                        break;
                    }
                    if (at_upper[j] && s > 0) {
                        enter = j, dir = -1;
                        break;
                    }
                }
                if (enter == cols)
                    return true;

                std::optional<Rational> best;
                std::size_t leave_row = rows;
                bool leave_to_upper = false;
                for (std::size_t i = 0; i < rows; ++i) {
                    if (sgn(a[i][enter]) == 0)
                        continue;
                    // basic value moves by -rate * t
                    Rational rate = dir > 0 ? a[i][enter] : Rational(-a[i][enter]);
                    auto col = static_cast<std::size_t>(basis[i]);
                    Rational limit;
                    bool to_upper = false;
                    if (sgn(rate) > 0)
                        limit = value[col] / rate;
                    else if (upper[col]) {
                        limit = (*upper[col] - value[col]) / -rate;
                        to_upper = true;
                    }
                    else
                        continue;
                    if (! best || limit < *best || (limit == *best && basis[i] < basis[leave_row])) {
                        best = limit;
                        leave_row = i;
                        leave_to_upper = to_upper;
                    }
                }

                bool flip = upper[enter] && (! best || *upper[enter] < *best);
                if (! flip && ! best)
                    return false;
                Rational step = flip ? *upper[enter] : *best;

                if (sgn(step) != 0) {
                    for (std::size_t i = 0; i < rows; ++i)
                        if (sgn(a[i][enter]) != 0) {
                            if (dir > 0)
                                value[basis[i]] -= a[i][enter] * step;
                            else
                                value[basis[i]] += a[i][enter] * step;
                        }
                    if (dir > 0)
                        value[enter] += step;
                    else
                        value[enter] -= step;
                }

                if (flip) {
                    at_upper[enter] = dir > 0;
                    continue;
                }

                auto leaving = static_cast<std::size_t>(basis[leave_row]);
                value[leaving] = leave_to_upper ? *upper[leaving] : Rational(0);
                at_upper[leaving] = leave_to_upper;
                at_upper[enter] = false;
                pivot(leave_row, enter);
            }
        }
    };

    LpSolution solve_bounded(const LpModel & model, const std::vector<Rational> & lower,
                             const std::vector<std::optional<Rational>> & upper)
    {
        const std::size_t n = model.variable_count(), m = model.constraint_count();
        const auto & rows = model.constraints();

        std::size_t slack_count = 0;
        for (auto & row : rows)
            if (row.relation != Relation::equal)
                ++slack_count;

        // Rows whose slack has coefficient +1 after sign normalisation start
        // with the slack basic; every other row gets an artificial.
        std::vector<std::vector<Rational>> a(m);
        std::vector<Rational> b(m);
        std::vector<int> slack_col(m, -1);
        std::vector<bool> needs_art(m, true);
        std::size_t next_slack = n;
        for (std::size_t i = 0; i < m; ++i) {
            b[i] = rows[i].rhs;
            for (std::size_t j = 0; j < n; ++j)
                if (sgn(rows[i].coefficients[j]) != 0)
                    b[i] -= rows[i].coefficients[j] * lower[j];
            if (rows[i].relation != Relation::equal)
                slack_col[i] = static_cast<int>(next_slack++);
        }

        std::size_t art_count = 0;
        std::vector<int> art_col(m, -1);
        std::vector<int> sign(m, 1);
        for (std::size_t i = 0; i < m; ++i) {
            int slack_sign = rows[i].relation == Relation::less_equal ? 1 : rows[i].relation == Relation::greater_equal ? -1 : 0;
            if (sgn(b[i]) < 0)
                sign[i] = -1;
            if (slack_sign * sign[i] > 0)
                needs_art[i] = false;
            else
                art_col[i] = static_cast<int>(n + slack_count + art_count++);
        }

        Tableau t;
        t.rows = m;
        t.cols = n + slack_count + art_count;
        t.a.assign(m, std::vector<Rational>(t.cols));
        t.value.assign(t.cols, Rational(0));
        t.upper.assign(t.cols, std::nullopt);
        t.at_upper.assign(t.cols, false);
        t.basis.assign(m, -1);
        t.row_of.assign(t.cols, -1);

        for (std::size_t j = 0; j < n; ++j)
            if (upper[j])
                t.upper[j] = *upper[j] - lower[j];

        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < n; ++j)
                if (sgn(rows[i].coefficients[j]) != 0)
                    t.a[i][j] = sign[i] > 0 ? rows[i].coefficients[j] : Rational(-rows[i].coefficients[j]);
            if (slack_col[i] >= 0) {
                int s = rows[i].relation == Relation::less_equal ? 1 : -1;
                t.a[i][slack_col[i]] = s * sign[i];
            }
            Rational rhs = sign[i] > 0 ? b[i] : Rational(-b[i]);
            int basic = needs_art[i] ? art_col[i] : slack_col[i];
            if (needs_art[i])
                t.a[i][basic] = 1;
            t.basis[i] = basic;
            t.row_of[basic] = static_cast<int>(i);
            t.value[basic] = rhs;
        }

        LpSolution sol;

        if (art_count > 0) {
            std::vector<Rational> phase1(t.cols);
            for (std::size_t i = 0; i < m; ++i)
                if (art_col[i] >= 0)
                    phase1[art_col[i]] = 1;
            t.price(phase1);
            t.optimise();

            Rational infeasibility = 0;
            for (std::size_t i = 0; i < m; ++i)
                if (art_col[i] >= 0)
                    infeasibility += t.value[art_col[i]];
            if (sgn(infeasibility) != 0) {
                sol.status = LpStatus::infeasible;
                sol.pivots = t.pivots;
                return sol;
            }

            const std::size_t first_art = n + slack_count;
            for (std::size_t r = 0; r < m; ++r) {
                if (static_cast<std::size_t>(t.basis[r]) < first_art)
                    continue;
                for (std::size_t j = 0; j < first_art; ++j)
                    if (t.row_of[j] < 0 && sgn(t.a[r][j]) != 0) {
                        auto leaving = static_cast<std::size_t>(t.basis[r]);
                        t.value[leaving] = 0;
                        t.at_upper[j] = false;
                        t.pivot(r, j);
                        break;
                    }
                // a row with no non-artificial entry is redundant; its
                // artificial stays basic at zero
            }
            for (std::size_t j = first_art; j < t.cols; ++j) {
                t.upper[j] = Rational(0);
                if (t.row_of[j] < 0)
                    t.at_upper[j] = false;
            }
        }

        std::vector<Rational> phase2(t.cols);
        for (std::size_t j = 0; j < n; ++j)
            phase2[j] = model.objective()[j];
        t.price(phase2);
        if (! t.optimise()) {
            sol.status = LpStatus::unbounded;
            sol.pivots = t.pivots;
            return sol;
        }

        sol.status = LpStatus::optimal;
        sol.assignment.resize(n);
        for (std::size_t j = 0; j < n; ++j)
            sol.assignment[j] = lower[j] + t.value[j];
        sol.objective_value = model.evaluate_objective(sol.assignment);
        sol.pivots = t.pivots;
        return sol;
    }

    void bounds_of(const LpModel & model, std::vector<Rational> & lower, std::vector<std::optional<Rational>> & upper)
    {
        lower.clear();
        upper.clear();
        for (auto & v : model.variables()) {
            lower.push_back(v.lower);
            upper.push_back(v.upper);
        }
    }
}

LpSolution solve_lp(const LpModel & model)
{
    model.validate();
    std::vector<Rational> lower;
    std::vector<std::optional<Rational>> upper;
    bounds_of(model, lower, upper);
    return solve_bounded(model, lower, upper);
}

IpSolution solve_ip(const LpModel & model)
{
    model.validate();

    struct Node {
        std::vector<Rational> lower;
        std::vector<std::optional<Rational>> upper;
    };

    IpSolution result;
    result.status = LpStatus::infeasible;
    std::optional<Rational> incumbent;

    std::vector<Node> stack(1);
    bounds_of(model, stack.back().lower, stack.back().upper);

    const Rational half = make_rational(1, 2);
    bool root = true;

    while (! stack.empty()) {
        Node node = std::move(stack.back());
        stack.pop_back();

        auto relaxed = solve_bounded(model, node.lower, node.upper);
        ++result.node_count;
        result.pivots += relaxed.pivots;

        if (relaxed.status == LpStatus::unbounded && root) {
            result.status = LpStatus::unbounded;
            return result;
        }
        root = false;
        if (relaxed.status != LpStatus::optimal)
            continue;
        if (incumbent && relaxed.objective_value >= *incumbent)
            continue;

        std::size_t branch = model.variable_count();
        Rational best_distance;
        for (std::size_t j = 0; j < model.variable_count(); ++j) {
            if (! model.variables()[j].integral || is_integer(relaxed.assignment[j]))
                continue;
            Rational frac = relaxed.assignment[j] - Rational(floor_of(relaxed.assignment[j]));
            Rational distance = abs(frac - half);
            if (branch == model.variable_count() || distance < best_distance) {
                branch = j;
                best_distance = distance;
            }
        }

        if (branch == model.variable_count()) {
            incumbent = relaxed.objective_value;
            result.status = LpStatus::optimal;
            result.objective_value = relaxed.objective_value;
            result.assignment = std::move(relaxed.assignment);
            continue;
        }

        const Rational & v = relaxed.assignment[branch];
        Node up = node;
        up.lower[branch] = Rational(ceil_of(v));
        Node down = std::move(node);
        down.upper[branch] = Rational(floor_of(v));
        stack.push_back(std::move(up));
        stack.push_back(std::move(down));
    }

    return result;
}

void write_lp(std::ostream & out, const LpModel & model)
{
    out << "lp " << model.variable_count() << ' ' << model.constraint_count() << '\n';
    for (auto & v : model.variables())
        out << "var " << v.name << ' ' << to_string(v.lower) << ' ' << (v.upper ? to_string(*v.upper) : "inf") << ' '
            << (v.integral ? "int" : "cont") << '\n';
    out << "obj";
    for (auto & c : model.objective())
        out << ' ' << to_string(c);
    out << '\n';
    for (auto & row : model.constraints()) {
        out << "row " << row.name;
        for (auto & c : row.coefficients)
            out << ' ' << to_string(c);
        out << ' ' << (row.relation == Relation::less_equal ? "<=" : row.relation == Relation::greater_equal ? ">=" : "=")
            << ' ' << to_string(row.rhs) << '\n';
    }
}

std::string to_string(const LpModel & model)
{
    std::ostringstream out;
    write_lp(out, model);
    return out.str();
}

}
