#pragma once

#include <array>
#include <cstdint>
#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cmfnip {

/// Raised by the DIMACS readers. `line()` is 1-based; 0 means "end of input".
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string & what);
    std::size_t line() const noexcept { return _line; }

private:
    std::size_t _line;
};

/// Non-fatal parser notes (duplicate edges and the like). When no sink is
/// supplied the parsers write them to std::clog.
using Warnings = std::vector<std::string>;

using Vertex = int;                       // 1-based, as in DIMACS
using Edge = std::pair<Vertex, Vertex>;   // always stored with first < second

/// Simple undirected graph on vertices 1..vertex_count. Immutable once built.
class UndirectedGraph {
public:
    /// Throws std::invalid_argument on self-loops or out-of-range endpoints.
    /// Duplicate pairs (in either orientation) collapse to one edge.
    UndirectedGraph(int vertex_count, const std::vector<Edge> & edges);

    int vertex_count() const noexcept { return _n; }
    std::size_t edge_count() const noexcept { return _edges.size(); }

    /// Sorted lexicographically, each pair normalised to (min, max).
    const std::vector<Edge> & edges() const noexcept { return _edges; }

    bool has_edge(Vertex u, Vertex v) const;

    /// Sorted neighbours of v.
    const std::vector<Vertex> & neighbours(Vertex v) const;

    friend bool operator==(const UndirectedGraph &, const UndirectedGraph &) = default;

private:
    int _n;
    std::vector<Edge> _edges;
    std::vector<std::vector<Vertex>> _adj;
};

struct VertexDegree {
    Vertex vertex;
    int degree;
};

/// Throws std::out_of_range when v is not a vertex of g.
VertexDegree degree(const UndirectedGraph & g, Vertex v);

UndirectedGraph complement(const UndirectedGraph & g);

/// The labeled graph on n vertices whose edge set is selected by `mask`, bit i
/// standing for the i-th pair in lexicographic order (1,2),(1,3),...,(n-1,n).
UndirectedGraph graph_from_mask(int n, std::uint64_t mask);

UndirectedGraph complete_graph(int n);
UndirectedGraph complete_bipartite_graph(int left, int right);
UndirectedGraph cycle_graph(int n);
UndirectedGraph path_graph(int n);

UndirectedGraph parse_dimacs_graph(std::istream & in, Warnings * warnings = nullptr);
UndirectedGraph parse_dimacs_graph(std::string_view text, Warnings * warnings = nullptr);
std::string to_dimacs(const UndirectedGraph & g);

// ---------------------------------------------------------------------------
// 3-CNF

struct Literal {
    int variable;     // 1-based
    bool negated;

    friend bool operator==(const Literal &, const Literal &) = default;
    friend auto operator<=>(const Literal &, const Literal &) = default;
};

inline bool complementary(const Literal & a, const Literal & b)
{
    return a.variable == b.variable && a.negated != b.negated;
}

using Clause = std::array<Literal, 3>;

/// A conjunction of clauses, each with exactly three pairwise distinct
/// literals. Clause order is preserved.
class CnfFormula {
public:
    /// Throws std::invalid_argument if a clause repeats a literal or mentions
    /// a variable outside 1..variable_count.
    CnfFormula(int variable_count, std::vector<Clause> clauses);

    int variable_count() const noexcept { return _vars; }
    std::size_t clause_count() const noexcept { return _clauses.size(); }
    const std::vector<Clause> & clauses() const noexcept { return _clauses; }

    /// `assignment[v-1]` is the value of variable v.
    bool satisfied_by(const std::vector<bool> & assignment) const;

    friend bool operator==(const CnfFormula &, const CnfFormula &) = default;

private:
    int _vars;
    std::vector<Clause> _clauses;
};

CnfFormula parse_dimacs_cnf(std::istream & in);
CnfFormula parse_dimacs_cnf(std::string_view text);
std::string to_dimacs(const CnfFormula & f);

}
