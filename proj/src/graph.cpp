#include <cmfnip/graph.hpp>

#include <algorithm>
#include <iostream>
#include <set>
#include <sstream>

namespace cmfnip {

ParseError::ParseError(std::size_t line, const std::string & what) :
    std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : "end of input: " + what),
    _line(line)
{
}

UndirectedGraph::UndirectedGraph(int vertex_count, const std::vector<Edge> & edges) :
    _n(vertex_count),
    _adj(vertex_count > 0 ? vertex_count : 0)
{
    if (vertex_count < 1)
        throw std::invalid_argument("graph must have at least one vertex");

    for (auto [u, v] : edges) {
        if (u < 1 || u > _n || v < 1 || v > _n)
            throw std::invalid_argument("edge {" + std::to_string(u) + "," + std::to_string(v) + "} has an endpoint out of range");
        if (u == v)
            throw std::invalid_argument("self-loop on vertex " + std::to_string(u));
        _edges.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(_edges.begin(), _edges.end());
    _edges.erase(std::unique(_edges.begin(), _edges.end()), _edges.end());

    for (auto [u, v] : _edges) {
        _adj[u - 1].push_back(v);
        _adj[v - 1].push_back(u);
    }
    for (auto & a : _adj)
        std::sort(a.begin(), a.end());
}

bool UndirectedGraph::has_edge(Vertex u, Vertex v) const
{
    if (u < 1 || u > _n || v < 1 || v > _n)
        return false;
    const auto & a = _adj[u - 1];
    return std::binary_search(a.begin(), a.end(), v);
}

const std::vector<Vertex> & UndirectedGraph::neighbours(Vertex v) const
{
    if (v < 1 || v > _n)
        throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
    return _adj[v - 1];
}

VertexDegree degree(const UndirectedGraph & g, Vertex v)
{
    return {v, static_cast<int>(g.neighbours(v).size())};
}

UndirectedGraph complement(const UndirectedGraph & g)
{
    std::vector<Edge> edges;
    for (Vertex u = 1; u <= g.vertex_count(); ++u)
        for (Vertex v = u + 1; v <= g.vertex_count(); ++v)
            if (! g.has_edge(u, v))
                edges.emplace_back(u, v);
    return UndirectedGraph(g.vertex_count(), edges);
}

UndirectedGraph graph_from_mask(int n, std::uint64_t mask)
{
    std::vector<Edge> edges;
    int bit = 0;
    for (Vertex u = 1; u <= n; ++u)
        for (Vertex v = u + 1; v <= n; ++v, ++bit)
            if (bit < 64 && (mask >> bit) & 1U)
                edges.emplace_back(u, v);
    return UndirectedGraph(n, edges);
}

UndirectedGraph complete_graph(int n)
{
    return complement(UndirectedGraph(n, {}));
}

UndirectedGraph complete_bipartite_graph(int left, int right)
{
    std::vector<Edge> edges;
    for (Vertex u = 1; u <= left; ++u)
        for (Vertex v = left + 1; v <= left + right; ++v)
            edges.emplace_back(u, v);
    return UndirectedGraph(left + right, edges);
}

UndirectedGraph cycle_graph(int n)
{
    std::vector<Edge> edges;
    for (Vertex u = 1; u <= n; ++u)
        edges.emplace_back(u, u % n + 1);
    return UndirectedGraph(n, edges);
}

UndirectedGraph path_graph(int n)
{
    std::vector<Edge> edges;
    for (Vertex u = 1; u < n; ++u)
        edges.emplace_back(u, u + 1);
    return UndirectedGraph(n, edges);
}

namespace {
    std::vector<std::string> tokens_of(const std::string & line)
    {
        std::istringstream s(line);
        std::vector<std::string> result;
        std::string t;
        while (s >> t)
            result.push_back(t);
        return result;
    }

    long long to_integer(const std::string & token, std::size_t line_no)
    {
        std::size_t used = 0;
        long long value = 0;
        try {
            value = std::stoll(token, &used);
        }
        catch (const std::exception &) {
            throw ParseError(line_no, "expected an integer, got '" + token + "'");
        }
        if (used != token.size())
            throw ParseError(line_no, "expected an integer, got '" + token + "'");
        return value;
    }

    void warn(Warnings * sink, std::string message)
    {
        if (sink)
            sink->push_back(std::move(message));
        else
            std::clog << "warning: " << message << '\n';
    }
}

UndirectedGraph parse_dimacs_graph(std::istream & in, Warnings * warnings)
{
    std::string line;
    std::size_t line_no = 0, header_line = 0;
    long long n = -1, declared_m = 0, seen_m = 0;
    std::set<Edge> edges;

    while (std::getline(in, line)) {
        ++line_no;
        auto tok = tokens_of(line);
        if (tok.empty() || tok[0] == "c")
            continue;

        if (tok[0] == "p") {
            if (n >= 0)
                throw ParseError(line_no, "duplicate problem line");
            if (tok.size() != 4 || (tok[1] != "edge" && tok[1] != "col"))
                throw ParseError(line_no, "malformed header, expected 'p edge N M'");
            n = to_integer(tok[2], line_no);
            declared_m = to_integer(tok[3], line_no);
            if (n < 1 || declared_m < 0)
                throw ParseError(line_no, "header needs N >= 1 and M >= 0");
            header_line = line_no;
        }
        else if (tok[0] == "e") {
            if (n < 0)
                throw ParseError(line_no, "edge line before problem line");
            if (tok.size() != 3)
                throw ParseError(line_no, "malformed edge line, expected 'e u v'");
            auto u = to_integer(tok[1], line_no), v = to_integer(tok[2], line_no);
            if (u < 1 || u > n || v < 1 || v > n)
                throw ParseError(line_no, "endpoint out of range 1.." + std::to_string(n));
            if (u == v)
                throw ParseError(line_no, "self-loop on vertex " + std::to_string(u));
            ++seen_m;
            Edge e{static_cast<Vertex>(std::min(u, v)), static_cast<Vertex>(std::max(u, v))};
            if (! edges.insert(e).second)
                warn(warnings, "line " + std::to_string(line_no) + ": duplicate edge {" + std::to_string(e.first) + "," +
                                   std::to_string(e.second) + "} ignored");
        }
        else
            throw ParseError(line_no, "unrecognised line type '" + tok[0] + "'");
    }

    if (n < 0)
        throw ParseError(0, "missing 'p edge N M' header");
    if (seen_m != declared_m)
        throw ParseError(header_line, "header declares " + std::to_string(declared_m) + " edges but " +
                                          std::to_string(seen_m) + " edge lines follow");

    return UndirectedGraph(static_cast<int>(n), {edges.begin(), edges.end()});
}

UndirectedGraph parse_dimacs_graph(std::string_view text, Warnings * warnings)
{
    std::istringstream in{std::string(text)};
    return parse_dimacs_graph(in, warnings);
}

std::string to_dimacs(const UndirectedGraph & g)
{
    std::ostringstream out;
    out << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges())
        out << "e " << u << ' ' << v << '\n';
    return out.str();
}

// ---------------------------------------------------------------------------

CnfFormula::CnfFormula(int variable_count, std::vector<Clause> clauses) :
    _vars(variable_count),
    _clauses(std::move(clauses))
{
    if (variable_count < 1)
        throw std::invalid_argument("formula must have at least one variable");
    for (std::size_t c = 0; c < _clauses.size(); ++c) {
        const auto & cl = _clauses[c];
        for (auto & l : cl)
            if (l.variable < 1 || l.variable > _vars)
                throw std::invalid_argument("clause " + std::to_string(c + 1) + " mentions variable " +
                                            std::to_string(l.variable) + " out of range");
        if (cl[0] == cl[1] || cl[0] == cl[2] || cl[1] == cl[2])
            throw std::invalid_argument("clause " + std::to_string(c + 1) + " repeats a literal");
    }
}

bool CnfFormula::satisfied_by(const std::vector<bool> & assignment) const
{
    return std::all_of(_clauses.begin(), _clauses.end(), [&](const Clause & cl) {
        return std::any_of(cl.begin(), cl.end(), [&](const Literal & l) {
            return assignment.at(l.variable - 1) != l.negated;
        });
    });
}

CnfFormula parse_dimacs_cnf(std::istream & in)
{
    std::string line;
    std::size_t line_no = 0, header_line = 0;
    long long n = -1, declared_m = 0;
    std::vector<Clause> clauses;
    std::vector<Literal> pending;

    while (std::getline(in, line)) {
        ++line_no;
        auto tok = tokens_of(line);
        if (tok.empty() || tok[0] == "c")
            continue;
        if (tok[0] == "%")
            break;

        if (tok[0] == "p") {
            if (n >= 0)
                throw ParseError(line_no, "duplicate problem line");
            if (tok.size() != 4 || tok[1] != "cnf")
                throw ParseError(line_no, "malformed header, expected 'p cnf N M'");
            n = to_integer(tok[2], line_no);
            declared_m = to_integer(tok[3], line_no);
            if (n < 1 || declared_m < 0)
                throw ParseError(line_no, "header needs N >= 1 and M >= 0");
            header_line = line_no;
            continue;
        }

        if (n < 0)
            throw ParseError(line_no, "clause before problem line");
        for (auto & t : tok) {
            auto value = to_integer(t, line_no);
            if (value == 0) {
                if (pending.size() != 3)
                    throw ParseError(line_no, "clause has " + std::to_string(pending.size()) +
                                                  " literals, only 3-CNF is supported");
                if (pending[0] == pending[1] || pending[0] == pending[2] || pending[1] == pending[2])
                    throw ParseError(line_no, "clause repeats a literal");
                clauses.push_back({pending[0], pending[1], pending[2]});
                pending.clear();
                continue;
            }
            auto var = value < 0 ? -value : value;
            if (var > n)
                throw ParseError(line_no, "variable " + std::to_string(var) + " out of range 1.." + std::to_string(n));
            pending.push_back({static_cast<int>(var), value < 0});
        }
    }

    if (n < 0)
        throw ParseError(0, "missing 'p cnf N M' header");
    if (! pending.empty())
        throw ParseError(0, "last clause is not terminated by 0");
    if (static_cast<long long>(clauses.size()) != declared_m)
        throw ParseError(header_line, "header declares " + std::to_string(declared_m) + " clauses but " +
                                          std::to_string(clauses.size()) + " follow");

    return CnfFormula(static_cast<int>(n), std::move(clauses));
}

CnfFormula parse_dimacs_cnf(std::string_view text)
{
    std::istringstream in{std::string(text)};
    return parse_dimacs_cnf(in);
}

std::string to_dimacs(const CnfFormula & f)
{
    std::ostringstream out;
    out << "p cnf " << f.variable_count() << ' ' << f.clause_count() << '\n';
    for (auto & cl : f.clauses()) {
        for (auto & l : cl)
            out << (l.negated ? -l.variable : l.variable) << ' ';
        out << "0\n";
    }
    return out.str();
}

}
