#include <cmfnip/paper_algos.hpp>

#include <stdexcept>

namespace cmfnip {

SettlementResult integer_settlement(const LpSolution & sol, const std::vector<std::size_t> & group,
                                    const Rational & target)
{
    if (sol.status != LpStatus::optimal)
        throw std::invalid_argument("settlement needs an optimal LP solution");
    if (group.empty())
        throw std::invalid_argument("settlement group is empty");

    std::vector<Rational> values;
    for (auto j : group) {
        const auto & v = sol.assignment.at(j);
        if (sgn(v) < 0 || v > 1)
            throw std::invalid_argument("settlement group value outside [0,1]");
        values.push_back(v);
    }

    SettlementResult result;
    auto & trace = result.trace;
    trace.target = target;
    for (auto & v : values)
        trace.group_sum += v;
    if (! is_integer(trace.group_sum))
        return result;

    result.passed = true;
    trace.rounded.assign(values.size(), 0);
    Rational residual = trace.group_sum;
    const Rational one = 1;
    while (sgn(residual) > 0) {
        std::size_t pick = values.size();
        for (std::size_t i = 0; i < values.size(); ++i)
            if (! trace.rounded[i] && (pick == values.size() || values[i] > values[pick]))
                pick = i;
        trace.rounded[pick] = 1;
        Rational complement = one - values[pick];
        residual -= values[pick] + complement;
        trace.picks.push_back({pick, values[pick], complement, residual});
    }
    return result;
}

std::vector<RowViolation> cover_row_violations(const PcmfnipInstance & inst, const std::vector<Rational> & assignment)
{
    if (assignment.size() != inst.a2_count() + inst.a1_count())
        throw std::invalid_argument("assignment does not match the instance");
    std::vector<RowViolation> out;
    for (std::size_t i = 0; i < inst.a2_count(); ++i) {
        const auto & incident = inst.incident_a1(i);
        Rational n(static_cast<long>(incident.size()));
        Rational lhs = n * assignment[i];
        for (auto j : incident)
            lhs += assignment[inst.a2_count() + j];
        if (lhs < n)
            out.push_back({i, lhs, n});
    }
    return out;
}

AlgoVerdict decide_pcmfnip(const PcmfnipInstance & inst, std::int64_t budget, std::int64_t target,
                           const DecisionOptions & options)
{
    AlgoVerdict verdict;
    verdict.target = target;
    verdict.budget = budget;

    auto slp = build_slp(inst, budget, target);
    auto sol = solve_lp(slp.model);
    verdict.slp_status = sol.status;
    verdict.note = to_string(sol.status);
    if (sol.status != LpStatus::optimal)
        return verdict;

    verdict.slp_optimum = sol.objective_value;
    verdict.slp_assignment = sol.assignment;

    auto gamma = integer_settlement(sol, slp.gamma, Rational(static_cast<long>(target)));
    verdict.settlement_passed = gamma.passed;
    verdict.gamma_trace = gamma.trace;

    bool beta_ok = true;
    if (options.beta_settlement) {
        if (slp.beta.empty())
            verdict.beta_settlement_passed = true;
        else {
            auto beta = integer_settlement(sol, slp.beta, Rational(static_cast<long>(budget)));
            verdict.beta_settlement_passed = beta.passed;
            verdict.beta_trace = beta.trace;
            beta_ok = beta.passed;
        }
    }

    verdict.yes = sol.objective_value == target && gamma.passed && beta_ok;

    if (gamma.passed && beta_ok) {
        auto rounded = sol.assignment;
        for (std::size_t i = 0; i < slp.gamma.size(); ++i)
            rounded[slp.gamma[i]] = gamma.trace.rounded[i];
        if (verdict.beta_trace)
            for (std::size_t j = 0; j < slp.beta.size(); ++j)
                rounded[slp.beta[j]] = verdict.beta_trace->rounded[j];
        verdict.post_round_violations = cover_row_violations(inst, rounded);
        verdict.rows_checked = inst.a2_count();
        verdict.rounded_assignment = std::move(rounded);
    }
    return verdict;
}

AlgoVerdict decide_clique(const UndirectedGraph & g, std::int64_t k, const DecisionOptions & options)
{
    if (k < 0)
        throw std::invalid_argument("clique size must be nonnegative");

    auto short_circuit = [&](bool yes, std::string why) {
        AlgoVerdict v;
        v.yes = yes;
        v.path = DecisionPath::short_circuit;
        v.note = std::move(why);
        v.target = k;
        return v;
    };
    if (k == 0)
        return short_circuit(true, "empty clique");
    if (k == 1)
        return short_circuit(g.vertex_count() >= 1, "single-vertex clique");

    auto reduction = clique_to_pcmfnip(g, k);
    if (reduction.degenerate == DegenerateClique::too_few_edges)
        return short_circuit(false, "C(K,2) exceeds |E|");
    return decide_pcmfnip(*reduction.instance, reduction.budget, k, options);
}

MaxCliqueVerdict max_clique_paper(const UndirectedGraph & g, const DecisionOptions & options)
{
    MaxCliqueVerdict out;
    if (g.edge_count() == 0) {
        out.size = 1;
        out.verdict = decide_clique(g, 1, options);
        out.attempted.push_back(1);
        return out;
    }

    int top = 2;
    while (top + 1 <= g.vertex_count() && choose2(top + 1) <= static_cast<std::int64_t>(g.edge_count()))
        ++top;

    for (int k = top; k >= 2; --k) {
        out.attempted.push_back(k);
        auto v = decide_clique(g, k, options);
        if (v.yes) {
            out.size = k;
            out.verdict = std::move(v);
            return out;
        }
        out.verdict = std::move(v);
    }
    // reachable only if the decider rejects K=2 on a graph with an edge
    out.size = 1;
    return out;
}

AlgoVerdict decide_sat_paper(const CnfFormula & f, const DecisionOptions & options)
{
    auto reduction = sat_to_clique_graph(f, options.pairing);
    return decide_clique(reduction.graph, reduction.target, options);
}

AlgoVerdict decide_vertex_cover_paper(const UndirectedGraph & g, std::int64_t k, const DecisionOptions & options)
{
    auto reduction = vc_to_clique(g, k);
    return decide_clique(reduction.graph, reduction.target, options);
}

}
