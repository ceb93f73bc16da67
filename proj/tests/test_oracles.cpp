#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmfnip/oracles.hpp>

#include <random>

using namespace cmfnip;

namespace {

// Bitmask reference: largest vertex set whose members are pairwise adjacent.
int reference_max_clique(const UndirectedGraph & g)
{
    const int n = g.vertex_count();
    int best = 0;
    for (std::uint32_t s = 0; s < (1u << n); ++s) {
        bool ok = true;
        for (int u = 0; ok && u < n; ++u)
            for (int v = u + 1; ok && v < n; ++v)
                if ((s >> u & 1) && (s >> v & 1) && ! g.has_edge(u + 1, v + 1))
                    ok = false;
        if (ok)
            best = std::max(best, __builtin_popcount(s));
    }
    return best;
}

int reference_min_cover(const UndirectedGraph & g)
{
    const int n = g.vertex_count();
    int best = n;
    for (std::uint32_t s = 0; s < (1u << n); ++s) {
        bool ok = true;
        for (auto [u, v] : g.edges())
            ok = ok && ((s >> (u - 1) & 1) || (s >> (v - 1) & 1));
        if (ok)
            best = std::min(best, __builtin_popcount(s));
    }
    return best;
}

Clause clause(int a, int b, int c)
{
    auto lit = [](int x) { return Literal{std::abs(x), x < 0}; };
    return {lit(a), lit(b), lit(c)};
}

}

TEST_CASE("clique oracle examples")
{
    auto tri = oracle_clique(complete_graph(3), 3);
    CHECK(tri.yes);
    CHECK(tri.witness == std::vector<int>{1, 2, 3});
    auto k33 = oracle_clique(complete_bipartite_graph(3, 3), 3);
    CHECK_FALSE(k33.yes);
    CHECK(k33.work_count == 20);
    CHECK(oracle_clique(UndirectedGraph(1, {}), 1).yes);
    CHECK(oracle_clique(path_graph(3), 0).yes);
    CHECK_FALSE(oracle_clique(path_graph(3), 4).yes);
}

TEST_CASE("max clique oracle examples")
{
    CHECK(oracle_max_clique(complete_graph(3)).size == 3);
    CHECK(oracle_max_clique(complete_bipartite_graph(3, 3)).size == 2);
    CHECK(oracle_max_clique(UndirectedGraph(4, {})).size == 1);
}

TEST_CASE("clique oracles agree with a bitmask reference")
{
    for (std::uint64_t mask = 0; mask < (1u << 10); ++mask) {
        auto g = graph_from_mask(5, mask);
        int omega = reference_max_clique(g);
        auto m = oracle_max_clique(g);
        CHECK(m.size == omega);
        CHECK(is_clique(g, m.witness));
        for (int k = 1; k <= 5; ++k) {
            auto a = oracle_clique(g, k);
            CHECK(a.yes == (k <= omega));
            if (a.yes) {
                CHECK(a.witness.size() == static_cast<std::size_t>(k));
                CHECK(is_clique(g, a.witness));
            }
        }
    }
}

TEST_CASE("vertex cover oracle")
{
    auto p3 = oracle_vertex_cover(path_graph(3), 1);
    CHECK(p3.yes);
    CHECK(p3.witness == std::vector<int>{2});
    CHECK_FALSE(oracle_vertex_cover(complete_graph(3), 1).yes);
    CHECK(oracle_vertex_cover(cycle_graph(5), 5).yes);
    CHECK(oracle_vertex_cover(UndirectedGraph(3, {}), 0).yes);
    CHECK_THROWS_AS(oracle_vertex_cover(path_graph(3), 4), std::invalid_argument);

    for (std::uint64_t mask = 0; mask < (1u << 10); mask += 3) {
        auto g = graph_from_mask(5, mask);
        int tau = reference_min_cover(g);
        for (int k = 0; k <= 5; ++k) {
            auto a = oracle_vertex_cover(g, k);
            CHECK(a.yes == (k >= tau));
            if (a.yes)
                CHECK(is_vertex_cover(g, a.witness));
        }
    }
}

TEST_CASE("sat oracle")
{
    CHECK(oracle_sat(CnfFormula(3, {clause(1, 2, 3)})).yes);
    auto two = oracle_sat(CnfFormula(3, {clause(1, 2, 3), clause(-1, -2, -3)}));
    CHECK(two.yes);
    CHECK(two.witness == std::vector<int>{-1, -2, 3});

    std::vector<Clause> every;
    for (int s = 0; s < 8; ++s)
        every.push_back(clause(s & 4 ? -1 : 1, s & 2 ? -2 : 2, s & 1 ? -3 : 3));
    auto none = oracle_sat(CnfFormula(3, every));
    CHECK_FALSE(none.yes);
    CHECK(none.work_count == 8);
}

TEST_CASE("sat witness checks out on random formulas")
{
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 200; ++trial) {
        int vars = 3 + static_cast<int>(rng() % 3);
        std::vector<Clause> clauses;
        for (int c = 0; c < 1 + static_cast<int>(rng() % 12); ++c) {
            int a = 1 + static_cast<int>(rng() % vars), b, d;
            do
                b = 1 + static_cast<int>(rng() % vars);
            while (b == a);
            do
                d = 1 + static_cast<int>(rng() % vars);
            while (d == a || d == b);
            clauses.push_back(clause(rng() % 2 ? a : -a, rng() % 2 ? b : -b, rng() % 2 ? d : -d));
        }
        CnfFormula f(vars, clauses);
        bool any = false;
        for (std::uint32_t s = 0; s < (1u << vars); ++s) {
            std::vector<bool> x(static_cast<std::size_t>(vars));
            for (int v = 0; v < vars; ++v)
                x[v] = s >> v & 1;
            any = any || f.satisfied_by(x);
        }
        auto a = oracle_sat(f);
        CHECK(a.yes == any);
        if (a.yes)
            CHECK(satisfies(f, a.witness));
    }
}

TEST_CASE("oracle guards")
{
    CHECK_THROWS_AS(oracle_clique(UndirectedGraph(60, {}), 12), EnumerationGuardError);
    std::vector<Clause> c{clause(1, 2, 3)};
    CHECK_THROWS_AS(oracle_sat(CnfFormula(25, c)), EnumerationGuardError);
}

TEST_CASE("checkers")
{
    CHECK(is_clique(complete_graph(4), {1, 3, 4}));
    CHECK_FALSE(is_clique(path_graph(3), {1, 3}));
    CHECK(is_vertex_cover(path_graph(3), {2}));
    CHECK_FALSE(is_vertex_cover(path_graph(3), {1}));
}
