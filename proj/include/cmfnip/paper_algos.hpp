#pragma once

#include <cmfnip/formulations.hpp>
#include <cmfnip/graph.hpp>
#include <cmfnip/lp.hpp>
#include <cmfnip/reductions.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cmfnip {

// The claimed polynomial-time deciders, implemented as stated: solve the
// strengthened LP, then accept iff its optimum equals the target and the
// integer-settlement test passes. Nothing in here consults an oracle.

struct RoundingPick {
    std::size_t variable;   // position within the group
    Rational value;         // K_i, the picked variable's LP value
    Rational complement;    // 1 - K_i
    Rational residual;      // what is left to settle after this pick
};

struct RoundingTrace {
    Rational target;
    Rational group_sum;
    std::vector<RoundingPick> picks;
    std::vector<int> rounded;   // per group position, 0 or 1; empty if not passed
};

struct SettlementResult {
    bool passed = false;
    RoundingTrace trace;
};

/// Passes iff the group's values sum to an integer. On success the largest
/// value is picked repeatedly (lowest position on ties) until as many picks as
/// that integer sum have been made; picks round to 1 and everything else to 0.
/// Each pick settles one unit, so the residual drops by one per step and ends
/// at zero. Throws std::invalid_argument if `sol` is not optimal, the group is
/// empty, or a group value lies outside [0,1].
SettlementResult integer_settlement(const LpSolution & sol, const std::vector<std::size_t> & group,
                                    const Rational & target);

struct DecisionOptions {
    SatPairing pairing = SatPairing::all_clause_pairs;
    bool beta_settlement = false;   // also require the beta group to settle
};

enum class DecisionPath { slp, short_circuit };

struct RowViolation {
    std::size_t a2_node;   // 0-based
    Rational lhs;
    Rational rhs;
};

struct AlgoVerdict {
    bool yes = false;
    DecisionPath path = DecisionPath::slp;
    std::string note;   // short-circuit reason or solver status

    std::optional<std::int64_t> target;
    std::optional<std::int64_t> budget;

    std::optional<LpStatus> slp_status;
    std::optional<Rational> slp_optimum;
    std::vector<Rational> slp_assignment;   // gamma block, then beta block

    bool settlement_passed = false;
    std::optional<RoundingTrace> gamma_trace;
    std::optional<bool> beta_settlement_passed;
    std::optional<RoundingTrace> beta_trace;

    /// gamma rounded by the trace; beta rounded too when beta settlement is
    /// on, otherwise left at its LP values.
    std::vector<Rational> rounded_assignment;
    std::size_t rows_checked = 0;
    std::vector<RowViolation> post_round_violations;
};

/// Evaluates every cover row of the instance at `assignment` (gamma block
/// then beta block) and lists the ones that fail.
std::vector<RowViolation> cover_row_violations(const PcmfnipInstance & inst, const std::vector<Rational> & assignment);

AlgoVerdict decide_pcmfnip(const PcmfnipInstance & inst, std::int64_t budget, std::int64_t target,
                           const DecisionOptions & options = {});

/// K = 0 is trivially yes; K = 1 is yes iff the graph has a vertex;
/// C(K,2) > |E| is no. Otherwise decides the clique reduction with
/// R = |E| - C(K,2).
AlgoVerdict decide_clique(const UndirectedGraph & g, std::int64_t k, const DecisionOptions & options = {});

struct MaxCliqueVerdict {
    int size = 0;
    AlgoVerdict verdict;
    std::vector<int> attempted;   // K values tried, in order
};

/// Walks K downward from min(|V|, largest K with C(K,2) <= |E|) and stops at
/// the first K the clique decider accepts. An edgeless graph gives 1.
MaxCliqueVerdict max_clique_paper(const UndirectedGraph & g, const DecisionOptions & options = {});

/// decide_clique on the literal-coupling graph with K = number of clauses.
AlgoVerdict decide_sat_paper(const CnfFormula & f, const DecisionOptions & options = {});

/// decide_clique on the complement with target |V| - K; the budget is
/// computed from the complement's edge count.
AlgoVerdict decide_vertex_cover_paper(const UndirectedGraph & g, std::int64_t k, const DecisionOptions & options = {});

}
