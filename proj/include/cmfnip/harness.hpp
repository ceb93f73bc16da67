#pragma once

#include <cmfnip/flow.hpp>
#include <cmfnip/graph.hpp>
#include <cmfnip/oracles.hpp>
#include <cmfnip/paper_algos.hpp>

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cmfnip {

using Json = nlohmann::ordered_json;

enum class Problem { clique, maxclique, sat, vertex_cover, pcmfnip, mfnip };

const char * to_string(Problem p);
Problem parse_problem(const std::string & name);

// ---------------------------------------------------------------------------
// Instance generation

/// Every labeled graph on exactly n vertices, indexed by edge mask (see
/// graph_from_mask). Limited to n <= 7.
class GraphEnumeration {
public:
    explicit GraphEnumeration(int n);
    std::uint64_t size() const noexcept { return _count; }
    UndirectedGraph operator[](std::uint64_t index) const { return graph_from_mask(_n, index); }

private:
    int _n;
    std::uint64_t _count;
};

inline constexpr int exhaustive_vertex_limit = 7;

/// Throws std::invalid_argument when max_vertices is outside [1, 7].
GraphEnumeration enumerate_graphs(int max_vertices);

/// G(n, p): each pair (u,v), u < v in lexicographic order, is kept when the
/// next mt19937_64 draw falls below p * 2^64.
UndirectedGraph generate_random_graph(int n, double edge_probability, std::uint64_t seed);

/// Clauses of three distinct literals drawn uniformly from the 2n literals.
CnfFormula generate_random_cnf(int variables, int clauses, std::uint64_t seed);

/// Source 0, sink n-1; each ordered pair gets an arc with the given
/// probability, capacity in [1,5], cost in [1,3], interdictable with
/// probability 1/2 (capped at the interdiction enumeration limit).
FlowNetwork generate_random_network(int n, double arc_probability, std::uint64_t seed);

/// One representative per class of 3-CNF formulas over `variables` variables
/// with 1..max_clauses distinct clauses, classes being taken up to variable
/// renaming and polarity flips.
std::vector<CnfFormula> enumerate_cnf_formulas(int variables, int max_clauses);

// ---------------------------------------------------------------------------
// Experiments

struct InstanceSource {
    enum class Kind { file, exhaustive, random, complete_bipartite };
    Kind kind = Kind::file;
    std::string path;
    int max_size = 0;          // exhaustive: vertices, or variables for sat
    int clauses = 2;           // sat: clause bound (exhaustive) or count (random)
    int n = 0;                 // random: vertices / variables / nodes
    double p = 0.5;            // random: edge or arc probability
    std::uint64_t seed = 0;
    int count = 1;             // random: instances, seeds seed..seed+count-1
    int lo = 0, hi = 0;        // complete_bipartite: K_{n,n} for n in [lo,hi]
};

struct ExperimentConfig {
    Problem problem = Problem::clique;
    InstanceSource source;
    std::optional<std::int64_t> k;
    std::optional<std::int64_t> r;
    DecisionOptions options;
    bool record_timing = true;
};

/// A fully serialised instance: enough to replay both sides.
struct Instance {
    Problem problem = Problem::clique;
    std::string format;   // "dimacs-edge", "dimacs-cnf" or "network"
    std::string text;
    std::optional<std::int64_t> k;
    std::optional<std::int64_t> r;
    DecisionOptions options;
    Json source = Json::object();

    std::string digest() const;
};

/// Expands the configured source. Exhaustive graph sources cover every
/// labeled graph on 1..max_size vertices; when K is unset, clique gets every
/// K in [2, |V|], pcmfnip every such K with C(K,2) <= |E| and vertex cover
/// every K in [0, |V|]. Throws on unreadable files or bad parameters.
std::vector<Instance> expand(const ExperimentConfig & config);

struct Record {
    std::string digest;
    bool agree = false;
    bool error = false;
    bool false_negative = false;   // oracle yes, decider no
    bool false_positive = false;   // oracle no, decider yes
    Json data;
};

/// Runs the SLP-based decider and the matching oracle on one instance. Guard
/// errors are captured in the record rather than thrown.
Record evaluate(const Instance & instance, bool record_timing = true);

struct Report {
    Json config = Json::object();
    std::vector<Record> records;   // ordered by digest
    std::uint64_t scanned = 0;
    std::uint64_t agree = 0, disagree = 0, errors = 0;
    std::uint64_t false_negatives = 0, false_positives = 0;

    Json to_json() const;
    const Record * first_disagreement() const;
};

Json to_json(const ExperimentConfig & config);

/// Every instance, every record kept.
Report run_experiment(const ExperimentConfig & config);
Report run_instances(const std::vector<Instance> & instances, bool record_timing, Json config = Json::object());

/// Scans at most `budget` instances of the configured space in generation
/// order and keeps only disagreement and error records; counts cover all
/// scanned instances.
Report search_counterexamples(const ExperimentConfig & space, std::uint64_t budget);

/// Rebuilds the instance stored in a record.
Instance instance_from_record(const Json & record);

/// Re-evaluates a record's instance; true iff the decider and oracle sections
/// come out identical.
bool replay_matches(const Json & record);

Json to_json(const AlgoVerdict & v);
Json to_json(const OracleAnswer & a);

}
