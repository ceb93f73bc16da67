#pragma once

#include <cstdint>
#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cmfnip {

using Capacity = std::int64_t;

struct Arc {
    int tail;
    int head;
    Capacity capacity;
    Capacity interdiction_cost;
    bool interdictable;

    friend bool operator==(const Arc &, const Arc &) = default;
};

/// Directed s-t network on nodes 0..node_count-1 with integer capacities and
/// per-arc interdiction costs. Parallel arcs are allowed.
class FlowNetwork {
public:
    /// Throws std::invalid_argument on source == sink, endpoints out of range
    /// or negative capacities / costs.
    FlowNetwork(int node_count, int source, int sink, std::vector<Arc> arcs);

    int node_count() const noexcept { return _n; }
    int source() const noexcept { return _s; }
    int sink() const noexcept { return _t; }
    const std::vector<Arc> & arcs() const noexcept { return _arcs; }

    Capacity total_interdiction_cost() const;
    std::vector<std::size_t> interdictable_arcs() const;

    friend bool operator==(const FlowNetwork &, const FlowNetwork &) = default;

private:
    int _n, _s, _t;
    std::vector<Arc> _arcs;
};

struct MinCut {
    std::vector<bool> source_side;        // per node
    std::vector<std::size_t> arcs;        // arcs leaving the source side
    Capacity capacity = 0;
};

struct FlowResult {
    Capacity value = 0;
    std::vector<Capacity> arc_flow;       // per arc, in [0, capacity]
    MinCut cut;
};

/// Edmonds-Karp (shortest augmenting path). The returned cut is the set of
/// nodes reachable from the source in the final residual network.
FlowResult max_flow(const FlowNetwork & net);

/// Checks conservation, capacity bounds and value == cut capacity.
bool certifies(const FlowNetwork & net, const FlowResult & result);

/// Copy of `net` without the given arcs; remaining arcs keep their relative
/// order. Throws std::invalid_argument if an index is out of range or names a
/// non-interdictable arc.
FlowNetwork apply_interdiction(const FlowNetwork & net, const std::vector<std::size_t> & arcs);

struct InterdictionInstance {
    FlowNetwork network;
    Capacity budget;
    bool clamped = false;   // the requested budget exceeded what could be spent
};

/// Clamps the budget to the total interdiction cost, noting it in `clamped`.
/// Throws std::invalid_argument on a negative budget.
InterdictionInstance make_interdiction_instance(FlowNetwork net, Capacity budget);

class EnumerationGuardError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::size_t interdiction_enumeration_limit = 25;

struct InterdictionOptimum {
    Capacity value = 0;
    std::vector<std::size_t> witness;     // sorted arc indices
    std::uint64_t subsets_evaluated = 0;
};

/// Exhaustive ground truth: the minimum, over every set of interdictable arcs
/// with total cost <= budget, of the max flow left after removing the set.
/// Ties go to the lexicographically smallest sorted index list. Throws
/// EnumerationGuardError beyond `interdiction_enumeration_limit` interdictable
/// arcs.
InterdictionOptimum oracle_min_interdicted_flow(const InterdictionInstance & inst);

/// Text format: header "n source sink", then one line per arc
/// "tail head capacity cost interdictable" (interdictable is 0 or 1).
/// Blank lines and lines starting with 'c' are ignored.
FlowNetwork parse_network(std::istream & in);
FlowNetwork parse_network(std::string_view text);
std::string to_text(const FlowNetwork & net);

}
