#include <cmfnip/reductions.hpp>

#include <stdexcept>

namespace cmfnip {

namespace {
    FlowNetwork layered_network(int a2_count, const std::vector<std::pair<int, int>> & incidence)
    {
        const int a1 = static_cast<int>(incidence.size());
        const int source = 0, sink = 1 + a1 + a2_count;
        std::vector<Arc> arcs;
        for (int j = 0; j < a1; ++j)
            arcs.push_back({source, 1 + j, 2, 1, true});
        for (int j = 0; j < a1; ++j) {
            arcs.push_back({1 + j, 1 + a1 + incidence[j].first, 1, 1, false});
            arcs.push_back({1 + j, 1 + a1 + incidence[j].second, 1, 1, false});
        }
        for (int i = 0; i < a2_count; ++i)
            arcs.push_back({1 + a1 + i, sink, 1, 1, false});
        return FlowNetwork(sink + 1, source, sink, std::move(arcs));
    }

    std::vector<std::pair<int, int>> normalised(int a2_count, std::vector<std::pair<int, int>> incidence)
    {
        for (auto & [u, v] : incidence) {
            if (u < 0 || u >= a2_count || v < 0 || v >= a2_count)
                throw std::invalid_argument("A1 node wired to an A2 node out of range");
            if (u == v)
                throw std::invalid_argument("A1 node must touch two distinct A2 nodes");
            if (u > v)
                std::swap(u, v);
        }
        return incidence;
    }
}

PcmfnipInstance::PcmfnipInstance(int a2_count, std::vector<std::pair<int, int>> incidence) :
    _a2(a2_count),
    _incidence(normalised(a2_count, std::move(incidence))),
    _incident(static_cast<std::size_t>(a2_count > 0 ? a2_count : 0)),
    _network(layered_network(a2_count, _incidence))
{
    if (a2_count < 1)
        throw std::invalid_argument("P-CMFNIP instance needs at least one A2 node");
    for (std::size_t j = 0; j < _incidence.size(); ++j) {
        _incident[_incidence[j].first].push_back(j);
        _incident[_incidence[j].second].push_back(j);
    }
}

PcmfnipInstance pcmfnip_instance(const UndirectedGraph & g)
{
    std::vector<std::pair<int, int>> incidence;
    for (auto [u, v] : g.edges())
        incidence.emplace_back(u - 1, v - 1);
    return PcmfnipInstance(g.vertex_count(), std::move(incidence));
}

const char * to_string(SatPairing p)
{
    return p == SatPairing::all_clause_pairs ? "all" : "succeeding";
}

const char * to_string(DegenerateClique d)
{
    switch (d) {
        case DegenerateClique::none: return "none";
        case DegenerateClique::k_below_two: return "k-below-two";
        case DegenerateClique::too_few_edges: return "too-few-edges";
    }
    return "?";
}

CliqueReduction clique_to_pcmfnip(const UndirectedGraph & g, std::int64_t k)
{
    CliqueReduction result;
    result.certificate.target = k;
    const auto m = static_cast<std::int64_t>(g.edge_count());
    if (k < 2) {
        result.degenerate = DegenerateClique::k_below_two;
        return result;
    }
    if (choose2(k) > m) {
        result.degenerate = DegenerateClique::too_few_edges;
        return result;
    }

    for (std::size_t j = 0; j < g.edges().size(); ++j) {
        auto [u, v] = g.edges()[j];
        result.certificate.mapping.emplace_back("edge {" + std::to_string(u) + "," + std::to_string(v) + "}",
                                                "A1[" + std::to_string(j) + "]");
    }
    for (Vertex v = 1; v <= g.vertex_count(); ++v)
        result.certificate.mapping.emplace_back("vertex " + std::to_string(v), "A2[" + std::to_string(v - 1) + "]");

    result.instance.emplace(pcmfnip_instance(g));
    result.budget = m - choose2(k);
    result.certificate.budget = result.budget;
    return result;
}

SatReduction sat_to_clique_graph(const CnfFormula & f, SatPairing pairing)
{
    const auto & clauses = f.clauses();
    const int m = static_cast<int>(clauses.size());
    if (m < 1)
        throw std::invalid_argument("formula has no clauses");

    ReductionCertificate cert;
    for (int r = 0; r < m; ++r)
        for (int p = 0; p < 3; ++p)
            cert.mapping.emplace_back("clause " + std::to_string(r + 1) + " literal " + std::to_string(p + 1),
                                      "vertex " + std::to_string(3 * r + p + 1));

    std::vector<Edge> edges;
    for (int r = 0; r < m; ++r)
        for (int s = r + 1; s < m; ++s) {
            if (pairing == SatPairing::succeeding_clauses && s != r + 1)
                continue;
            for (int p = 0; p < 3; ++p)
                for (int q = 0; q < 3; ++q)
                    if (! complementary(clauses[r][p], clauses[s][q]))
                        edges.emplace_back(3 * r + p + 1, 3 * s + q + 1);
        }

    cert.target = m;
    return {UndirectedGraph(3 * m, edges), m, std::move(cert)};
}

VertexCoverReduction vc_to_clique(const UndirectedGraph & g, std::int64_t k)
{
    if (k < 0 || k > g.vertex_count())
        throw std::invalid_argument("cover size must lie in [0, |V|]");
    ReductionCertificate cert;
    for (Vertex v = 1; v <= g.vertex_count(); ++v)
        cert.mapping.emplace_back("vertex " + std::to_string(v), "vertex " + std::to_string(v));
    cert.target = g.vertex_count() - k;
    return {complement(g), g.vertex_count() - k, std::move(cert)};
}

}
