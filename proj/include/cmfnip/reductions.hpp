#pragma once

#include <cmfnip/flow.hpp>
#include <cmfnip/graph.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cmfnip {

/// Two-layer interdiction instance: A1 nodes (one per source-graph edge) each
/// feed exactly two distinct A2 nodes (one per source-graph vertex).
///
/// Derived network layout: node 0 is the source, A1 node j is node 1+j, A2
/// node i is node 1+|A1|+i and the sink comes last. Arcs are listed as all
/// source->A1 (capacity 2), then A1->A2 in A1 order (capacity 1, lower A2
/// index first), then A2->sink (capacity 1). Every arc costs 1; only the
/// source->A1 arcs are interdictable, so arc j is "interdict A1 node j".
class PcmfnipInstance {
public:
    /// Throws std::invalid_argument unless every pair names two distinct A2
    /// nodes in [0, a2_count).
    PcmfnipInstance(int a2_count, std::vector<std::pair<int, int>> incidence);

    std::size_t a1_count() const noexcept { return _incidence.size(); }
    std::size_t a2_count() const noexcept { return static_cast<std::size_t>(_a2); }

    /// A2 endpoints of A1 node j, 0-based, lower first.
    const std::pair<int, int> & a1_endpoints(std::size_t j) const { return _incidence.at(j); }

    /// A1 nodes wired to A2 node i, ascending.
    const std::vector<std::size_t> & incident_a1(std::size_t i) const { return _incident.at(i); }

    const FlowNetwork & network() const noexcept { return _network; }

private:
    int _a2;
    std::vector<std::pair<int, int>> _incidence;
    std::vector<std::vector<std::size_t>> _incident;
    FlowNetwork _network;
};

/// Audit trail of a reduction: what each source object became, plus the
/// parameters handed to the target problem.
struct ReductionCertificate {
    std::vector<std::pair<std::string, std::string>> mapping;
    std::optional<std::int64_t> budget;   // R, when the target uses one
    std::int64_t target = 0;              // K
};

inline std::int64_t choose2(std::int64_t k)
{
    return k * (k - 1) / 2;
}

/// The instance whose A1 nodes are the edges of g and A2 nodes its vertices.
PcmfnipInstance pcmfnip_instance(const UndirectedGraph & g);

enum class DegenerateClique { none, k_below_two, too_few_edges };

struct CliqueReduction {
    DegenerateClique degenerate = DegenerateClique::none;
    std::optional<PcmfnipInstance> instance;   // set iff not degenerate
    std::int64_t budget = 0;                   // R = |E| - C(K,2)
    ReductionCertificate certificate;
};

/// One A1 node per edge of g (in edge order), one A2 node per vertex.
/// K < 2 or C(K,2) > |E| yields a tagged degenerate result, not an instance.
CliqueReduction clique_to_pcmfnip(const UndirectedGraph & g, std::int64_t k);

enum class SatPairing { all_clause_pairs, succeeding_clauses };

struct SatReduction {
    UndirectedGraph graph;
    std::int64_t target;   // number of clauses
    ReductionCertificate certificate;
};

/// Vertex 3r+p+1 is literal p of clause r. Two occurrences are adjacent iff
/// they sit in different clauses that the pairing mode couples and are not
/// complementary. all_clause_pairs couples every pair of clauses;
/// succeeding_clauses couples clause r with clause r+1 only.
SatReduction sat_to_clique_graph(const CnfFormula & f, SatPairing pairing = SatPairing::all_clause_pairs);

struct VertexCoverReduction {
    UndirectedGraph graph;   // complement of the input
    std::int64_t target;     // |V| - K
    ReductionCertificate certificate;
};

/// Throws std::invalid_argument unless 0 <= K <= |V|.
VertexCoverReduction vc_to_clique(const UndirectedGraph & g, std::int64_t k);

const char * to_string(SatPairing p);
const char * to_string(DegenerateClique d);

}
