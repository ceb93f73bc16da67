#pragma once

#include <cmfnip/flow.hpp>
#include <cmfnip/graph.hpp>

#include <cstdint>
#include <vector>

namespace cmfnip {

// Brute-force ground truth. Plain enumeration with early exit only; these
// exist to be obviously right, not fast.

inline constexpr std::uint64_t subset_enumeration_limit = 10'000'000;
inline constexpr int truth_table_variable_limit = 24;

struct OracleAnswer {
    bool yes = false;
    /// Vertex set (clique, vertex cover) or signed literals +v / -v for a
    /// satisfying assignment. Empty when the answer is no.
    std::vector<int> witness;
    std::uint64_t work_count = 0;
};

/// Is there a K-subset of pairwise adjacent vertices? The witness is the
/// lexicographically smallest such subset. K = 0 is trivially yes. Throws
/// EnumerationGuardError when C(|V|,K) exceeds subset_enumeration_limit.
OracleAnswer oracle_clique(const UndirectedGraph & g, std::int64_t k);

struct MaxCliqueAnswer {
    int size = 0;
    std::vector<int> witness;
    std::uint64_t work_count = 0;
};

MaxCliqueAnswer oracle_max_clique(const UndirectedGraph & g);

/// Truth-table search; the witness is the first satisfying assignment when
/// assignments are ordered with x1 most significant and false before true.
OracleAnswer oracle_sat(const CnfFormula & f);

/// Is there a K-subset touching every edge? Throws std::invalid_argument if K
/// is outside [0, |V|].
OracleAnswer oracle_vertex_cover(const UndirectedGraph & g, std::int64_t k);

bool is_clique(const UndirectedGraph & g, const std::vector<int> & vertices);
bool is_vertex_cover(const UndirectedGraph & g, const std::vector<int> & vertices);
bool satisfies(const CnfFormula & f, const std::vector<int> & literals);

}
