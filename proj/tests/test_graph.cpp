#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmfnip/graph.hpp>

#include <algorithm>
#include <set>

using namespace cmfnip;

TEST_CASE("dimacs edge parsing")
{
    auto g = parse_dimacs_graph("p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n");
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 3);
    CHECK(g.has_edge(3, 1));
    CHECK(g == complete_graph(3));

    auto empty = parse_dimacs_graph("p edge 2 0\n");
    CHECK(empty.vertex_count() == 2);
    CHECK(empty.edge_count() == 0);

    CHECK_THROWS_AS(parse_dimacs_graph("p edge 2 1\ne 1 1\n"), ParseError);
}

TEST_CASE("dimacs edge parsing errors name the line")
{
    auto line_of = [](const char * text) {
        try {
            parse_dimacs_graph(text);
        }
        catch (const ParseError & e) {
            return e.line();
        }
        return std::size_t{999};
    };
    CHECK(line_of("c hi\np edge 3 1\ne 1 4\n") == 3);
    CHECK(line_of("p edge 3 2\ne 1 2\n") == 1);
    CHECK(line_of("e 1 2\n") == 1);
    CHECK(line_of("p edge 3 1\nx 1 2\n") == 2);
    CHECK(line_of("p edge 3 1\ne 1\n") == 2);
}

TEST_CASE("duplicate edges collapse with a warning")
{
    Warnings w;
    auto g = parse_dimacs_graph("p edge 3 2\ne 1 2\ne 2 1\n", &w);
    CHECK(g.edge_count() == 1);
    CHECK(w.size() == 1);
}

TEST_CASE("graph round trip through dimacs")
{
    for (std::uint64_t mask = 0; mask < 64; ++mask) {
        auto g = graph_from_mask(4, mask);
        CHECK(parse_dimacs_graph(to_dimacs(g)) == g);
    }
}

TEST_CASE("edge set is order independent")
{
    UndirectedGraph a(4, {{1, 2}, {3, 4}, {2, 3}});
    UndirectedGraph b(4, {{4, 3}, {3, 2}, {2, 1}});
    CHECK(a == b);
    CHECK_THROWS_AS(UndirectedGraph(3, {{1, 4}}), std::invalid_argument);
    CHECK_THROWS_AS(UndirectedGraph(3, {{2, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(UndirectedGraph(0, {}), std::invalid_argument);
}

TEST_CASE("complement")
{
    CHECK(complement(complete_graph(3)).edge_count() == 0);
    CHECK(complement(UndirectedGraph(4, {})).edge_count() == 6);

    auto c5 = cycle_graph(5);
    auto cc = complement(c5);
    CHECK(cc.edge_count() == 5);
    for (Vertex v = 1; v <= 5; ++v)
        CHECK(degree(cc, v).degree == 2);

    for (std::uint64_t mask = 0; mask < 1024; mask += 7) {
        auto g = graph_from_mask(5, mask);
        auto h = complement(g);
        CHECK(g.edge_count() + h.edge_count() == 10);
        CHECK(complement(h) == g);
        for (Vertex u = 1; u <= 5; ++u)
            for (Vertex v = u + 1; v <= 5; ++v)
                CHECK(g.has_edge(u, v) != h.has_edge(u, v));
    }
}

TEST_CASE("degree")
{
    CHECK(degree(complete_graph(3), 1).degree == 2);
    CHECK(degree(UndirectedGraph(1, {}), 1).degree == 0);
    auto k33 = complete_bipartite_graph(3, 3);
    for (Vertex v = 1; v <= 6; ++v) {
        int count = 0;
        for (auto [a, b] : k33.edges())
            count += (a == v) + (b == v);
        CHECK(degree(k33, v).degree == count);
        CHECK(count == 3);
    }
    CHECK_THROWS_AS(degree(k33, 7), std::out_of_range);
}

TEST_CASE("graph_from_mask covers every labeled graph once")
{
    std::set<std::vector<Edge>> seen;
    for (std::uint64_t mask = 0; mask < 64; ++mask)
        seen.insert(graph_from_mask(4, mask).edges());
    CHECK(seen.size() == 64);
    CHECK(graph_from_mask(3, 1).edges() == std::vector<Edge>{{1, 2}});
    CHECK(graph_from_mask(3, 4).edges() == std::vector<Edge>{{2, 3}});
}

TEST_CASE("dimacs cnf parsing")
{
    auto f = parse_dimacs_cnf("p cnf 3 1\n1 -2 3 0\n");
    REQUIRE(f.clause_count() == 1);
    CHECK(f.clauses()[0][0] == Literal{1, false});
    CHECK(f.clauses()[0][1] == Literal{2, true});
    CHECK(f.clauses()[0][2] == Literal{3, false});

    auto g = parse_dimacs_cnf("p cnf 2 1\n1 -1 2 0\n");
    CHECK(complementary(g.clauses()[0][0], g.clauses()[0][1]));

    CHECK_THROWS_AS(parse_dimacs_cnf("p cnf 2 1\n1 2 0\n"), ParseError);
    CHECK_THROWS_AS(parse_dimacs_cnf("p cnf 2 1\n1 1 2 0\n"), ParseError);
    CHECK_THROWS_AS(parse_dimacs_cnf("p cnf 2 1\n1 2 3 0\n"), ParseError);
    CHECK_THROWS_AS(parse_dimacs_cnf("p cnf 3 2\n1 2 3 0\n"), ParseError);
    CHECK_THROWS_AS(parse_dimacs_cnf("p cnf 3 1\n1 2 3\n"), ParseError);

    auto multi = parse_dimacs_cnf("c x\np cnf 3 2\n1 2\n3 0 -1 -2 -3 0\n%\n0\n");
    CHECK(multi.clause_count() == 2);
    CHECK(parse_dimacs_cnf(to_dimacs(multi)) == multi);
}

TEST_CASE("cnf evaluation")
{
    auto f = parse_dimacs_cnf("p cnf 3 2\n1 2 3 0\n-1 -2 -3 0\n");
    CHECK(f.satisfied_by({true, false, false}));
    CHECK_FALSE(f.satisfied_by({true, true, true}));
    CHECK_FALSE(f.satisfied_by({false, false, false}));
}
