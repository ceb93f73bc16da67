#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmfnip/lp.hpp>

#include <optional>
#include <random>

using namespace cmfnip;

namespace {

const Rational zero = 0, one = 1;

Rational q(long p, long d = 1)
{
    return make_rational(p, d);
}

// Solves the square system M x = rhs; nullopt when singular.
std::optional<std::vector<Rational>> solve_square(std::vector<std::vector<Rational>> m, std::vector<Rational> rhs)
{
    const std::size_t n = m.size();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c] == 0)
            ++p;
        if (p == n)
            return std::nullopt;
        std::swap(m[p], m[c]);
        std::swap(rhs[p], rhs[c]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || m[r][c] == 0)
                continue;
            Rational f = m[r][c] / m[c][c];
            for (std::size_t k = c; k < n; ++k)
                m[r][k] -= f * m[c][k];
            rhs[r] -= f * rhs[c];
        }
    }
    std::vector<Rational> x(n);
    for (std::size_t i = 0; i < n; ++i)
        x[i] = rhs[i] / m[i][i];
    return x;
}

// Minimum over the vertices of a box-bounded polytope, found by making every
// choice of n tight rows among bounds and constraints. nullopt = infeasible.
std::optional<Rational> vertex_enumeration_optimum(const LpModel & model)
{
    const std::size_t n = model.variable_count(), m = model.constraint_count();
    std::optional<Rational> best;
    std::vector<int> status(n, 0);   // 0 free, 1 lower, 2 upper
    for (;;) {
        std::size_t free = 0;
        for (auto s : status)
            free += s == 0;
        for (std::uint32_t rows = 0; rows < (1u << m); ++rows) {
            if (static_cast<std::size_t>(__builtin_popcount(rows)) != free)
                continue;
            std::vector<std::vector<Rational>> sys;
            std::vector<Rational> rhs;
            for (std::size_t j = 0; j < n; ++j)
                if (status[j] != 0) {
                    std::vector<Rational> row(n, zero);
                    row[j] = one;
                    sys.push_back(row);
                    rhs.push_back(status[j] == 1 ? model.variables()[j].lower : *model.variables()[j].upper);
                }
            for (std::size_t i = 0; i < m; ++i)
                if (rows >> i & 1) {
                    sys.push_back(model.constraints()[i].coefficients);
                    rhs.push_back(model.constraints()[i].rhs);
                }
            auto x = solve_square(sys, rhs);
            if (x && model.is_feasible(*x)) {
                auto v = model.evaluate_objective(*x);
                if (! best || v < *best)
                    best = v;
            }
        }
        std::size_t j = 0;
        while (j < n && status[j] == 2)
            status[j++] = 0;
        if (j == n)
            break;
        ++status[j];
    }
    return best;
}

// Exhaustive search over the integer points of the box.
std::optional<Rational> integer_point_optimum(const LpModel & model)
{
    const std::size_t n = model.variable_count();
    std::vector<Rational> x(n);
    for (std::size_t j = 0; j < n; ++j)
        x[j] = model.variables()[j].lower;
    std::optional<Rational> best;
    for (;;) {
        if (model.is_feasible(x)) {
            auto v = model.evaluate_objective(x);
            if (! best || v < *best)
                best = v;
        }
        std::size_t j = 0;
        while (j < n && x[j] == *model.variables()[j].upper) {
            x[j] = model.variables()[j].lower;
            ++j;
        }
        if (j == n)
            break;
        x[j] += 1;
    }
    return best;
}

LpModel random_model(std::mt19937_64 & rng, std::size_t n, std::size_t m, bool integral, bool binary)
{
    auto pick = [&](int lo, int hi) { return static_cast<long>(lo + static_cast<int>(rng() % static_cast<unsigned>(hi - lo + 1))); };
    LpModel model;
    for (std::size_t j = 0; j < n; ++j) {
        long lo = binary ? 0 : pick(-2, 1);
        long hi = binary ? 1 : lo + pick(0, 3);
        model.add_variable("x" + std::to_string(j), q(lo), q(hi), integral, q(pick(-4, 4)));
    }
    for (std::size_t i = 0; i < m; ++i) {
        std::vector<Term> terms;
        for (std::size_t j = 0; j < n; ++j)
            if (rng() % 3 != 0)
                terms.emplace_back(j, binary ? q(pick(-3, 3)) : q(pick(-6, 6), pick(1, 3)));
        auto rel = static_cast<Relation>(rng() % 3 == 0 ? (rng() % 2 == 0 ? 2 : 1) : rng() % 2);
        model.add_constraint("r" + std::to_string(i), terms, rel, q(pick(-4, 6), binary ? 1 : pick(1, 2)));
    }
    return model;
}

}

TEST_CASE("small fixed linear programs")
{
    {
        LpModel lp;
        auto x = lp.add_variable("x", zero, q(10), false, one);
        lp.add_constraint("c", {{x, one}}, Relation::greater_equal, q(3));
        auto s = solve_lp(lp);
        REQUIRE(s.status == LpStatus::optimal);
        CHECK(s.objective_value == 3);
    }
    {
        LpModel lp;
        auto x = lp.add_variable("x", zero, one, false, one);
        lp.add_constraint("c", {{x, one}}, Relation::greater_equal, q(3));
        CHECK(solve_lp(lp).status == LpStatus::infeasible);
    }
    {
        LpModel lp;
        auto a = lp.add_variable("a", zero, one, false, one);
        auto b = lp.add_variable("b", zero, one, false, one);
        lp.add_constraint("c", {{a, one}, {b, one}}, Relation::greater_equal, q(3, 2));
        auto s = solve_lp(lp);
        REQUIRE(s.status == LpStatus::optimal);
        CHECK(s.objective_value == q(3, 2));
        CHECK(lp.is_feasible(s.assignment));
    }
    {
        LpModel lp;
        auto x = lp.add_variable("x", zero, std::nullopt, false, Rational(-1));
        lp.add_constraint("c", {{x, one}}, Relation::greater_equal, one);
        CHECK(solve_lp(lp).status == LpStatus::unbounded);
    }
    {
        LpModel lp;
        auto x = lp.add_variable("x", zero, std::nullopt, false, one);
        auto y = lp.add_variable("y", zero, std::nullopt, false, q(2));
        lp.add_constraint("e", {{x, one}, {y, one}}, Relation::equal, q(5));
        auto s = solve_lp(lp);
        REQUIRE(s.status == LpStatus::optimal);
        CHECK(s.objective_value == 5);
        CHECK(s.assignment[x] == 5);
    }
}

TEST_CASE("small fixed integer programs")
{
    {
        LpModel lp;
        auto x = lp.add_variable("x", zero, one, true, one);
        lp.add_constraint("c", {{x, one}}, Relation::greater_equal, q(1, 2));
        auto s = solve_ip(lp);
        REQUIRE(s.status == LpStatus::optimal);
        CHECK(s.objective_value == 1);
    }
    {
        LpModel lp;
        auto a = lp.add_variable("a", zero, one, true, one);
        auto b = lp.add_variable("b", zero, one, true, one);
        lp.add_constraint("c", {{a, one}, {b, one}}, Relation::greater_equal, q(3, 2));
        CHECK(solve_lp(lp).objective_value == q(3, 2));
        auto s = solve_ip(lp);
        REQUIRE(s.status == LpStatus::optimal);
        CHECK(s.objective_value == 2);
    }
    {
        LpModel lp;
        auto a = lp.add_variable("a", zero, one, true, one);
        auto b = lp.add_variable("b", zero, one, true, one);
        lp.add_constraint("c", {{a, q(2)}, {b, q(2)}}, Relation::equal, q(1));
        CHECK(solve_lp(lp).status == LpStatus::optimal);
        CHECK(solve_ip(lp).status == LpStatus::infeasible);
    }
}

TEST_CASE("model validation")
{
    LpModel lp;
    auto x = lp.add_variable("x", zero, one, false);
    CHECK_THROWS(lp.add_constraint("c", {{x + 1, one}}, Relation::less_equal, one));
    CHECK_THROWS(lp.set_bounds(x, q(2), one));
    CHECK_THROWS(lp.add_variable("y", q(2), one, false));
    CHECK_FALSE(lp.has_integral_variables());
    lp.add_variable("z", zero, one, true);
    CHECK(lp.has_integral_variables());
    CHECK(lp.is_feasible({zero, one}));
    CHECK_FALSE(lp.is_feasible({zero, q(1, 2)}));
}

TEST_CASE("rational text helpers")
{
    CHECK(to_string(q(3)) == "3/1");
    CHECK(to_string(q(-4, 6)) == "-2/3");
    CHECK(parse_rational("6/4") == q(3, 2));
    CHECK(parse_rational("-7") == -7);
    CHECK_THROWS(parse_rational("1/0"));
    CHECK_THROWS(parse_rational("x"));
    CHECK(floor_of(q(-3, 2)) == -2);
    CHECK(ceil_of(q(-3, 2)) == -1);
}

TEST_CASE("solve_lp matches vertex enumeration on random models")
{
    std::mt19937_64 rng(7);
    int optimal = 0, infeasible = 0;
    for (int trial = 0; trial < 300; ++trial) {
        auto n = 2 + rng() % 4, m = 1 + rng() % 4;
        auto model = random_model(rng, n, m, false, false);
        auto expected = vertex_enumeration_optimum(model);
        auto got = solve_lp(model);
        CAPTURE(to_string(model));
        if (! expected) {
            CHECK(got.status == LpStatus::infeasible);
            ++infeasible;
            continue;
        }
        REQUIRE(got.status == LpStatus::optimal);
        CHECK(got.objective_value == *expected);
        CHECK(model.is_feasible(got.assignment));
        CHECK(model.evaluate_objective(got.assignment) == got.objective_value);
        ++optimal;
    }
    CHECK(optimal > 50);
    CHECK(infeasible > 10);
}

TEST_CASE("solve_ip matches integer enumeration on random models")
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const bool binary = trial % 2 == 0;
        auto n = binary ? 1 + rng() % 12 : 1 + rng() % 5;
        auto m = 1 + rng() % 10;
        auto model = random_model(rng, n, m, true, binary);
        auto expected = integer_point_optimum(model);
        auto got = solve_ip(model);
        CAPTURE(to_string(model));
        if (! expected) {
            CHECK(got.status == LpStatus::infeasible);
            continue;
        }
        REQUIRE(got.status == LpStatus::optimal);
        CHECK(got.objective_value == *expected);
        CHECK(model.is_feasible(got.assignment));
    }
}

TEST_CASE("solver is deterministic")
{
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        auto model = random_model(rng, 6, 4, true, true);
        auto a = solve_ip(model), b = solve_ip(model);
        CHECK(a.status == b.status);
        CHECK(a.assignment == b.assignment);
        CHECK(a.node_count == b.node_count);
    }
}

TEST_CASE("model dump")
{
    LpModel lp;
    auto x = lp.add_variable("x", zero, one, true, q(2));
    auto y = lp.add_variable("y", q(-1), std::nullopt, false);
    lp.add_constraint("c", {{x, one}, {y, q(1, 2)}}, Relation::greater_equal, q(3, 2));
    CHECK(to_string(lp) ==
          "lp 2 1\n"
          "var x 0/1 1/1 int\n"
          "var y -1/1 inf cont\n"
          "obj 2/1 0/1\n"
          "row c 1/1 1/2 >= 3/2\n");
}
