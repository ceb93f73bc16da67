#include <cmfnip/oracles.hpp>

#include <algorithm>
#include <stdexcept>
#include <string>

namespace cmfnip {

namespace {
    std::uint64_t binomial_capped(std::int64_t n, std::int64_t k, std::uint64_t cap)
    {
        if (k < 0 || k > n)
            return 0;
        k = std::min(k, n - k);
        unsigned __int128 result = 1;
        for (std::int64_t i = 1; i <= k; ++i) {
            result = result * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
            if (result > cap)
                return cap + 1;
        }
        return static_cast<std::uint64_t>(result);
    }

    // Visits K-subsets of {1..n} in lexicographic order until `visit` returns
    // true. Returns the number of subsets visited.
    template <typename Visit>
    std::uint64_t for_each_subset(int n, int k, Visit && visit)
    {
        std::vector<int> subset(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i)
            subset[i] = i + 1;
        std::uint64_t visited = 0;
        for (;;) {
            ++visited;
            if (visit(subset))
                return visited;
            int i = k - 1;
            while (i >= 0 && subset[i] == n - k + i + 1)
                --i;
            if (i < 0)
                return visited;
            ++subset[i];
            for (int j = i + 1; j < k; ++j)
                subset[j] = subset[j - 1] + 1;
        }
    }

    void guard_subsets(const UndirectedGraph & g, std::int64_t k)
    {
        if (binomial_capped(g.vertex_count(), k, subset_enumeration_limit) > subset_enumeration_limit)
            throw EnumerationGuardError("C(" + std::to_string(g.vertex_count()) + "," + std::to_string(k) +
                                        ") exceeds the subset enumeration limit");
    }
}

bool is_clique(const UndirectedGraph & g, const std::vector<int> & vertices)
{
    for (std::size_t a = 0; a < vertices.size(); ++a)
        for (std::size_t b = a + 1; b < vertices.size(); ++b)
            if (! g.has_edge(vertices[a], vertices[b]))
                return false;
    return true;
}

bool is_vertex_cover(const UndirectedGraph & g, const std::vector<int> & vertices)
{
    return std::all_of(g.edges().begin(), g.edges().end(), [&](const Edge & e) {
        return std::find(vertices.begin(), vertices.end(), e.first) != vertices.end() ||
            std::find(vertices.begin(), vertices.end(), e.second) != vertices.end();
    });
}

bool satisfies(const CnfFormula & f, const std::vector<int> & literals)
{
    std::vector<bool> assignment(static_cast<std::size_t>(f.variable_count()), false);
    if (literals.size() != assignment.size())
        return false;
    for (int l : literals) {
        int v = l < 0 ? -l : l;
        if (v < 1 || v > f.variable_count())
            return false;
        assignment[v - 1] = l > 0;
    }
    return f.satisfied_by(assignment);
}

OracleAnswer oracle_clique(const UndirectedGraph & g, std::int64_t k)
{
    if (k < 0)
        throw std::invalid_argument("clique size must be nonnegative");
    OracleAnswer answer;
    if (k == 0) {
        answer.yes = true;
        answer.work_count = 1;
        return answer;
    }
    if (k > g.vertex_count())
        return answer;
    guard_subsets(g, k);

    answer.work_count = for_each_subset(g.vertex_count(), static_cast<int>(k), [&](const std::vector<int> & s) {
        if (! is_clique(g, s))
            return false;
        answer.yes = true;
        answer.witness = s;
        return true;
    });
    return answer;
}

MaxCliqueAnswer oracle_max_clique(const UndirectedGraph & g)
{
    MaxCliqueAnswer best;
    for (int k = 1; k <= g.vertex_count(); ++k) {
        auto a = oracle_clique(g, k);
        best.work_count += a.work_count;
        if (! a.yes)
            break;
        best.size = k;
        best.witness = std::move(a.witness);
    }
    return best;
}

OracleAnswer oracle_sat(const CnfFormula & f)
{
    const int n = f.variable_count();
    if (n > truth_table_variable_limit)
        throw EnumerationGuardError("formula has " + std::to_string(n) + " variables, truth-table limit is " +
                                    std::to_string(truth_table_variable_limit));
    OracleAnswer answer;
    std::vector<bool> assignment(static_cast<std::size_t>(n));
    for (std::uint64_t row = 0; row < (std::uint64_t{1} << n); ++row) {
        ++answer.work_count;
        for (int v = 0; v < n; ++v)
            assignment[v] = (row >> (n - 1 - v)) & 1U;
        if (f.satisfied_by(assignment)) {
            answer.yes = true;
            for (int v = 0; v < n; ++v)
                answer.witness.push_back(assignment[v] ? v + 1 : -(v + 1));
            break;
        }
    }
    return answer;
}

OracleAnswer oracle_vertex_cover(const UndirectedGraph & g, std::int64_t k)
{
    if (k < 0 || k > g.vertex_count())
        throw std::invalid_argument("cover size must lie in [0, |V|]");
    OracleAnswer answer;
    if (k == 0) {
        answer.work_count = 1;
        answer.yes = g.edge_count() == 0;
        return answer;
    }
    guard_subsets(g, k);
    answer.work_count = for_each_subset(g.vertex_count(), static_cast<int>(k), [&](const std::vector<int> & s) {
        if (! is_vertex_cover(g, s))
            return false;
        answer.yes = true;
        answer.witness = s;
        return true;
    });
    return answer;
}

}
