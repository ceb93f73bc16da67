#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmfnip/reductions.hpp>

using namespace cmfnip;

TEST_CASE("clique to p-cmfnip sizes")
{
    auto tri = clique_to_pcmfnip(complete_graph(3), 3);
    REQUIRE(tri.instance);
    CHECK(tri.instance->a1_count() == 3);
    CHECK(tri.instance->a2_count() == 3);
    CHECK(tri.budget == 0);
    CHECK(tri.certificate.budget == 0);
    CHECK(tri.certificate.mapping.size() == 6);

    auto edge = clique_to_pcmfnip(UndirectedGraph(2, {{1, 2}}), 2);
    REQUIRE(edge.instance);
    CHECK(edge.instance->a1_count() == 1);
    CHECK(edge.instance->a2_count() == 2);
    CHECK(edge.budget == 0);

    auto k33 = clique_to_pcmfnip(complete_bipartite_graph(3, 3), 3);
    REQUIRE(k33.instance);
    CHECK(k33.instance->a1_count() == 9);
    CHECK(k33.instance->a2_count() == 6);
    CHECK(k33.budget == 6);
}

TEST_CASE("clique reduction degenerate cases")
{
    auto small = clique_to_pcmfnip(complete_graph(3), 1);
    CHECK(small.degenerate == DegenerateClique::k_below_two);
    CHECK_FALSE(small.instance);
    auto sparse = clique_to_pcmfnip(path_graph(3), 3);
    CHECK(sparse.degenerate == DegenerateClique::too_few_edges);
    CHECK_FALSE(sparse.instance);
}

TEST_CASE("layered network structure")
{
    for (std::uint64_t mask = 0; mask < 1024; mask += 13) {
        auto g = graph_from_mask(5, mask);
        auto inst = pcmfnip_instance(g);
        const auto & net = inst.network();
        const int a1 = static_cast<int>(inst.a1_count());
        CHECK(net.node_count() == 2 + a1 + 5);
        CHECK(net.arcs().size() == 3 * inst.a1_count() + 5);
        for (int j = 0; j < a1; ++j) {
            const auto & s = net.arcs()[j];
            CHECK(s.tail == net.source());
            CHECK(s.capacity == 2);
            CHECK(s.interdictable);
            auto [u, v] = inst.a1_endpoints(j);
            CHECK(g.edges()[j] == Edge{u + 1, v + 1});
            CHECK(net.arcs()[a1 + 2 * j].capacity == 1);
            CHECK(net.arcs()[a1 + 2 * j].head == 1 + a1 + u);
            CHECK(net.arcs()[a1 + 2 * j + 1].head == 1 + a1 + v);
        }
        for (int i = 0; i < 5; ++i) {
            const auto & t = net.arcs()[3 * a1 + i];
            CHECK(t.head == net.sink());
            CHECK(t.capacity == 1);
            CHECK_FALSE(t.interdictable);
            CHECK(static_cast<int>(inst.incident_a1(i).size()) == degree(g, i + 1).degree);
        }
        for (auto & a : net.arcs())
            CHECK(a.interdiction_cost == 1);
    }
}

TEST_CASE("instance validation")
{
    CHECK_THROWS_AS(PcmfnipInstance(2, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(PcmfnipInstance(2, {{0, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(PcmfnipInstance(0, {}), std::invalid_argument);
    PcmfnipInstance swapped(3, {{2, 0}});
    CHECK(swapped.a1_endpoints(0) == std::pair<int, int>{0, 2});
}

TEST_CASE("sat to clique graph")
{
    CnfFormula one(3, {{Literal{1, false}, Literal{2, false}, Literal{3, false}}});
    auto r1 = sat_to_clique_graph(one);
    CHECK(r1.graph.vertex_count() == 3);
    CHECK(r1.graph.edge_count() == 0);
    CHECK(r1.target == 1);

    CnfFormula two(3, {{Literal{1, false}, Literal{2, false}, Literal{3, false}},
                       {Literal{1, true}, Literal{2, true}, Literal{3, true}}});
    auto r2 = sat_to_clique_graph(two);
    CHECK(r2.graph.vertex_count() == 6);
    CHECK(r2.graph.edge_count() == 6);
    CHECK_FALSE(r2.graph.has_edge(1, 4));
    CHECK_FALSE(r2.graph.has_edge(2, 5));
    CHECK_FALSE(r2.graph.has_edge(3, 6));
    CHECK(r2.graph.has_edge(1, 5));
    CHECK(r2.target == 2);
    CHECK_THROWS_AS(sat_to_clique_graph(CnfFormula(3, {})), std::invalid_argument);
}

TEST_CASE("sat pairing modes")
{
    Clause c{Literal{1, false}, Literal{2, false}, Literal{3, false}};
    CnfFormula three(3, {c, c, c});
    auto all = sat_to_clique_graph(three, SatPairing::all_clause_pairs);
    auto next = sat_to_clique_graph(three, SatPairing::succeeding_clauses);
    CHECK(all.graph.vertex_count() == 9);
    CHECK(all.graph.edge_count() == 27);
    CHECK(next.graph.edge_count() == 18);
    CHECK(all.graph.has_edge(1, 7));
    CHECK_FALSE(next.graph.has_edge(1, 7));
    CHECK(next.graph.has_edge(4, 7));
    CHECK(std::string(to_string(SatPairing::succeeding_clauses)) == "succeeding");
}

TEST_CASE("vertex cover to clique")
{
    auto p3 = vc_to_clique(path_graph(3), 1);
    CHECK(p3.target == 2);
    CHECK(p3.graph == complement(path_graph(3)));
    auto k4 = vc_to_clique(complete_graph(4), 3);
    CHECK(k4.target == 1);
    CHECK(k4.graph.edge_count() == 0);
    CHECK(vc_to_clique(cycle_graph(5), 5).target == 0);
    CHECK_THROWS_AS(vc_to_clique(path_graph(3), 4), std::invalid_argument);
    CHECK_THROWS_AS(vc_to_clique(path_graph(3), -1), std::invalid_argument);
}
