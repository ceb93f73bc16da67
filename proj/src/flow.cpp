#include <cmfnip/flow.hpp>
#include <cmfnip/parallel.hpp>

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

namespace cmfnip {

FlowNetwork::FlowNetwork(int node_count, int source, int sink, std::vector<Arc> arcs) :
    _n(node_count),
    _s(source),
    _t(sink),
    _arcs(std::move(arcs))
{
    if (_n < 2)
        throw std::invalid_argument("network needs at least two nodes");
    if (_s < 0 || _s >= _n || _t < 0 || _t >= _n)
        throw std::invalid_argument("source or sink out of range");
    if (_s == _t)
        throw std::invalid_argument("source and sink coincide");
    for (std::size_t k = 0; k < _arcs.size(); ++k) {
        const auto & a = _arcs[k];
        if (a.tail < 0 || a.tail >= _n || a.head < 0 || a.head >= _n)
            throw std::invalid_argument("arc " + std::to_string(k) + " has an endpoint out of range");
        if (a.capacity < 0 || a.interdiction_cost < 0)
            throw std::invalid_argument("arc " + std::to_string(k) + " has a negative capacity or cost");
    }
}

Capacity FlowNetwork::total_interdiction_cost() const
{
    Capacity total = 0;
    for (auto & a : _arcs)
        if (a.interdictable)
            total += a.interdiction_cost;
    return total;
}

std::vector<std::size_t> FlowNetwork::interdictable_arcs() const
{
    std::vector<std::size_t> result;
    for (std::size_t k = 0; k < _arcs.size(); ++k)
        if (_arcs[k].interdictable)
            result.push_back(k);
    return result;
}

namespace {
    // Residual graph in CSR form; edge 2k is arc k, edge 2k+1 its reverse.
    // Reusable across runs with different sets of disabled arcs.
    class Residual {
    public:
        explicit Residual(const FlowNetwork & net) :
            _net(net),
            _n(static_cast<std::size_t>(net.node_count())),
            _first(_n + 1, 0),
            _residual(2 * net.arcs().size()),
            _parent(_n),
            _queue(_n)
        {
            const auto & arcs = net.arcs();
            for (auto & a : arcs) {
                ++_first[a.tail + 1];
                ++_first[a.head + 1];
            }
            std::partial_sum(_first.begin(), _first.end(), _first.begin());
            _incident.resize(2 * arcs.size());
            std::vector<std::size_t> fill(_first.begin(), _first.end() - 1);
            for (std::size_t k = 0; k < arcs.size(); ++k) {
                _incident[fill[arcs[k].tail]++] = 2 * k;
                _incident[fill[arcs[k].head]++] = 2 * k + 1;
            }
        }

        // enabled may be empty, meaning every arc is present
        Capacity run(const std::vector<char> & enabled)
        {
            const auto & arcs = _net.arcs();
            for (std::size_t k = 0; k < arcs.size(); ++k) {
                _residual[2 * k] = (enabled.empty() || enabled[k]) ? arcs[k].capacity : 0;
                _residual[2 * k + 1] = 0;
            }

            const auto s = static_cast<std::size_t>(_net.source()), t = static_cast<std::size_t>(_net.sink());
            Capacity total = 0;
            for (;;) {
                std::fill(_parent.begin(), _parent.end(), none);
                _parent[s] = root;
                std::size_t head = 0, tail = 0;
                _queue[tail++] = s;
                while (head < tail && _parent[t] == none) {
                    auto u = _queue[head++];
                    for (auto i = _first[u]; i < _first[u + 1]; ++i) {
                        auto e = _incident[i];
                        if (_residual[e] <= 0)
                            continue;
                        auto v = endpoint(e);
                        if (_parent[v] != none)
                            continue;
                        _parent[v] = e;
                        _queue[tail++] = v;
                    }
                }
                if (_parent[t] == none)
                    return total;

                Capacity push = -1;
                for (auto v = t; v != s; v = start(_parent[v]))
                    push = push < 0 ? _residual[_parent[v]] : std::min(push, _residual[_parent[v]]);
                for (auto v = t; v != s; v = start(_parent[v])) {
                    _residual[_parent[v]] -= push;
                    _residual[_parent[v] ^ 1U] += push;
                }
                total += push;
            }
        }

        // Valid after run(): parent marks from the final, failed BFS.
        bool reached(std::size_t v) const { return _parent[v] != none; }
        Capacity flow_on(std::size_t arc) const { return _residual[2 * arc + 1]; }

    private:
        static constexpr std::size_t none = static_cast<std::size_t>(-1);
        static constexpr std::size_t root = static_cast<std::size_t>(-2);

        std::size_t endpoint(std::size_t e) const
        {
            const auto & a = _net.arcs()[e / 2];
            return static_cast<std::size_t>((e & 1U) ? a.tail : a.head);
        }
        std::size_t start(std::size_t e) const
        {
            const auto & a = _net.arcs()[e / 2];
            return static_cast<std::size_t>((e & 1U) ? a.head : a.tail);
        }

        const FlowNetwork & _net;
        std::size_t _n;
        std::vector<std::size_t> _first;
        std::vector<std::size_t> _incident;
        std::vector<Capacity> _residual;
        std::vector<std::size_t> _parent;
        std::vector<std::size_t> _queue;
    };
}

FlowResult max_flow(const FlowNetwork & net)
{
    Residual residual(net);
    FlowResult result;
    result.value = residual.run({});

    const auto & arcs = net.arcs();
    result.arc_flow.resize(arcs.size());
    for (std::size_t k = 0; k < arcs.size(); ++k)
        result.arc_flow[k] = residual.flow_on(k);

    result.cut.source_side.resize(static_cast<std::size_t>(net.node_count()));
    for (std::size_t v = 0; v < result.cut.source_side.size(); ++v)
        result.cut.source_side[v] = residual.reached(v);
    for (std::size_t k = 0; k < arcs.size(); ++k)
        if (result.cut.source_side[arcs[k].tail] && ! result.cut.source_side[arcs[k].head]) {
            result.cut.arcs.push_back(k);
            result.cut.capacity += arcs[k].capacity;
        }
    return result;
}

bool certifies(const FlowNetwork & net, const FlowResult & result)
{
    const auto & arcs = net.arcs();
    if (result.arc_flow.size() != arcs.size())
        return false;
    std::vector<Capacity> excess(static_cast<std::size_t>(net.node_count()), 0);
    for (std::size_t k = 0; k < arcs.size(); ++k) {
        auto f = result.arc_flow[k];
        if (f < 0 || f > arcs[k].capacity)
            return false;
        excess[arcs[k].tail] -= f;
        excess[arcs[k].head] += f;
    }
    for (int v = 0; v < net.node_count(); ++v)
        if (v != net.source() && v != net.sink() && excess[v] != 0)
            return false;
    if (-excess[net.source()] != result.value || excess[net.sink()] != result.value)
        return false;

    const auto & side = result.cut.source_side;
    if (side.size() != static_cast<std::size_t>(net.node_count()) || ! side[net.source()] || side[net.sink()])
        return false;
    Capacity cut = 0;
    for (auto & a : arcs)
        if (side[a.tail] && ! side[a.head])
            cut += a.capacity;
    return cut == result.cut.capacity && cut == result.value;
}

FlowNetwork apply_interdiction(const FlowNetwork & net, const std::vector<std::size_t> & arcs)
{
    std::vector<bool> removed(net.arcs().size(), false);
    for (auto k : arcs) {
        if (k >= net.arcs().size())
            throw std::invalid_argument("arc index " + std::to_string(k) + " out of range");
        if (! net.arcs()[k].interdictable)
            throw std::invalid_argument("arc " + std::to_string(k) + " is not interdictable");
        removed[k] = true;
    }
    std::vector<Arc> kept;
    for (std::size_t k = 0; k < net.arcs().size(); ++k)
        if (! removed[k])
            kept.push_back(net.arcs()[k]);
    return FlowNetwork(net.node_count(), net.source(), net.sink(), std::move(kept));
}

InterdictionInstance make_interdiction_instance(FlowNetwork net, Capacity budget)
{
    if (budget < 0)
        throw std::invalid_argument("interdiction budget must be nonnegative");
    auto total = net.total_interdiction_cost();
    bool clamped = budget > total;
    return {std::move(net), clamped ? total : budget, clamped};
}

namespace {
    // Lexicographic order on the sorted position lists encoded by two masks,
    // a proper prefix ordering first.
    bool lex_less(std::uint64_t a, std::uint64_t b)
    {
        while (a && b) {
            int la = std::countr_zero(a), lb = std::countr_zero(b);
            if (la != lb)
                return la < lb;
            a &= a - 1;
            b &= b - 1;
        }
        return ! a && b;
    }

    struct Candidate {
        Capacity value = -1;
        std::uint64_t mask = 0;
        std::uint64_t evaluated = 0;

        void offer(Capacity v, std::uint64_t m)
        {
            if (value < 0 || v < value || (v == value && lex_less(m, mask))) {
                value = v;
                mask = m;
            }
        }
    };
}

InterdictionOptimum oracle_min_interdicted_flow(const InterdictionInstance & inst)
{
    const auto & net = inst.network;
    const auto candidates = net.interdictable_arcs();
    if (candidates.size() > interdiction_enumeration_limit)
        throw EnumerationGuardError("instance has " + std::to_string(candidates.size()) +
                                    " interdictable arcs, exhaustive limit is " +
                                    std::to_string(interdiction_enumeration_limit));

    const std::uint64_t subsets = std::uint64_t{1} << candidates.size();
    const std::uint64_t block = 1U << 12;
    const std::size_t blocks = static_cast<std::size_t>((subsets + block - 1) / block);
    std::vector<Candidate> best(blocks);

    std::vector<Capacity> cost(candidates.size());
    for (std::size_t i = 0; i < candidates.size(); ++i)
        cost[i] = net.arcs()[candidates[i]].interdiction_cost;

    parallel_for(blocks, [&](std::size_t b) {
        Residual residual(net);
        std::vector<char> enabled(net.arcs().size(), 1);
        auto & local = best[b];
        const std::uint64_t end = std::min(subsets, (b + 1) * block);
        for (std::uint64_t mask = b * block; mask < end; ++mask) {
            Capacity spent = 0;
            for (std::size_t i = 0; i < candidates.size(); ++i) {
                bool out = (mask >> i) & 1U;
                enabled[candidates[i]] = ! out;
                if (out)
                    spent += cost[i];
            }
            if (spent > inst.budget)
                continue;
            ++local.evaluated;
            local.offer(residual.run(enabled), mask);
        }
    });

    Candidate overall;
    for (auto & c : best) {
        overall.evaluated += c.evaluated;
        if (c.value >= 0)
            overall.offer(c.value, c.mask);
    }

    InterdictionOptimum result;
    result.value = overall.value;
    result.subsets_evaluated = overall.evaluated;
    for (std::size_t i = 0; i < candidates.size(); ++i)
        if ((overall.mask >> i) & 1U)
            result.witness.push_back(candidates[i]);
    return result;
}

FlowNetwork parse_network(std::istream & in)
{
    std::string line;
    std::size_t line_no = 0;
    bool have_header = false;
    int n = 0, s = 0, t = 0;
    std::vector<Arc> arcs;

    auto fail = [&](const std::string & what) {
        throw std::invalid_argument("line " + std::to_string(line_no) + ": " + what);
    };

    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream fields(line);
        std::string first;
        if (! (fields >> first) || first == "c")
            continue;
        fields.clear();
        fields.seekg(0);
        if (! have_header) {
            if (! (fields >> n >> s >> t))
                fail("expected header 'n source sink'");
            have_header = true;
            continue;
        }
        Arc a{};
        int flag = 0;
        if (! (fields >> a.tail >> a.head >> a.capacity >> a.interdiction_cost >> flag) || (flag != 0 && flag != 1))
            fail("expected 'tail head capacity cost interdictable'");
        std::string extra;
        if (fields >> extra)
            fail("trailing text '" + extra + "'");
        a.interdictable = flag == 1;
        arcs.push_back(a);
    }
    if (! have_header)
        throw std::invalid_argument("missing network header");
    return FlowNetwork(n, s, t, std::move(arcs));
}

FlowNetwork parse_network(std::string_view text)
{
    std::istringstream in{std::string(text)};
    return parse_network(in);
}

std::string to_text(const FlowNetwork & net)
{
    std::ostringstream out;
    out << net.node_count() << ' ' << net.source() << ' ' << net.sink() << '\n';
    for (auto & a : net.arcs())
        out << a.tail << ' ' << a.head << ' ' << a.capacity << ' ' << a.interdiction_cost << ' '
            << (a.interdictable ? 1 : 0) << '\n';
    return out.str();
}

}
