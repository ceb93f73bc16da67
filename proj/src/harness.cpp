#include <cmfnip/formulations.hpp>
#include <cmfnip/harness.hpp>
#include <cmfnip/oracles.hpp>
#include <cmfnip/parallel.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace cmfnip {

const char * to_string(Problem p)
{
    switch (p) {
        case Problem::clique: return "clique";
        case Problem::maxclique: return "maxclique";
        case Problem::sat: return "sat";
        case Problem::vertex_cover: return "vc";
        case Problem::pcmfnip: return "pcmfnip";
        case Problem::mfnip: return "mfnip";
    }
    return "?";
}

Problem parse_problem(const std::string & name)
{
    static const std::map<std::string, Problem> names{
        {"clique", Problem::clique}, {"maxclique", Problem::maxclique}, {"sat", Problem::sat},
        {"vc", Problem::vertex_cover}, {"vertex-cover", Problem::vertex_cover}, {"pcmfnip", Problem::pcmfnip},
        {"mfnip", Problem::mfnip}};
    auto it = names.find(name);
    if (it == names.end())
        throw std::invalid_argument("unknown problem '" + name + "'");
    return it->second;
}

// ---------------------------------------------------------------------------
// Generators

GraphEnumeration::GraphEnumeration(int n) :
    _n(n),
    _count(std::uint64_t{1} << (n * (n - 1) / 2))
{
}

GraphEnumeration enumerate_graphs(int max_vertices)
{
    if (max_vertices < 1 || max_vertices > exhaustive_vertex_limit)
        throw std::invalid_argument("exhaustive enumeration supports 1.." + std::to_string(exhaustive_vertex_limit) +
                                    " vertices");
    return GraphEnumeration(max_vertices);
}

namespace {
    bool draw(std::mt19937_64 & rng, double probability)
    {
        if (probability <= 0)
            return false;
        if (probability >= 1)
            return true;
        // 2^64 * p without overflow
        auto threshold = static_cast<std::uint64_t>(probability * 18446744073709551616.0);
        return rng() < threshold;
    }

    std::uint64_t uniform(std::mt19937_64 & rng, std::uint64_t lo, std::uint64_t hi)
    {
        return lo + rng() % (hi - lo + 1);
    }
}

UndirectedGraph generate_random_graph(int n, double edge_probability, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::vector<Edge> edges;
    for (Vertex u = 1; u <= n; ++u)
        for (Vertex v = u + 1; v <= n; ++v)
            if (draw(rng, edge_probability))
                edges.emplace_back(u, v);
    return UndirectedGraph(n, edges);
}

CnfFormula generate_random_cnf(int variables, int clauses, std::uint64_t seed)
{
    if (variables < 2)
        throw std::invalid_argument("random 3-CNF needs at least two variables");
    std::mt19937_64 rng(seed);
    std::vector<Clause> out;
    for (int c = 0; c < clauses; ++c) {
        std::vector<Literal> picked;
        while (picked.size() < 3) {
            auto code = static_cast<int>(uniform(rng, 0, static_cast<std::uint64_t>(2 * variables - 1)));
            Literal l{code / 2 + 1, code % 2 == 1};
            if (std::find(picked.begin(), picked.end(), l) == picked.end())
                picked.push_back(l);
        }
        out.push_back({picked[0], picked[1], picked[2]});
    }
    return CnfFormula(variables, std::move(out));
}

FlowNetwork generate_random_network(int n, double arc_probability, std::uint64_t seed)
{
    if (n < 2)
        throw std::invalid_argument("random network needs at least two nodes");
    std::mt19937_64 rng(seed);
    std::vector<Arc> arcs;
    std::size_t interdictable = 0;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            if (u == v || ! draw(rng, arc_probability))
                continue;
            Arc a{u, v, static_cast<Capacity>(uniform(rng, 1, 5)), static_cast<Capacity>(uniform(rng, 1, 3)), false};
            a.interdictable = draw(rng, 0.5) && interdictable < interdiction_enumeration_limit;
            if (a.interdictable)
                ++interdictable;
            arcs.push_back(a);
        }
    return FlowNetwork(n, 0, n - 1, std::move(arcs));
}

std::vector<CnfFormula> enumerate_cnf_formulas(int variables, int max_clauses)
{
    if (variables < 2 || variables > 6)
        throw std::invalid_argument("formula enumeration supports 2..6 variables");
    if (max_clauses < 1 || max_clauses > 4)
        throw std::invalid_argument("formula enumeration supports 1..4 clauses");

    using CodedClause = std::array<int, 3>;   // sorted literal codes 2*(v-1)+negated
    const int literals = 2 * variables;
    std::vector<CodedClause> all_clauses;
    for (int a = 0; a < literals; ++a)
        for (int b = a + 1; b < literals; ++b)
            for (int c = b + 1; c < literals; ++c)
                all_clauses.push_back({a, b, c});

    std::vector<int> perm(static_cast<std::size_t>(variables));
    std::vector<std::pair<std::vector<int>, int>> transforms;   // (variable permutation, flip mask)
    for (int i = 0; i < variables; ++i)
        perm[i] = i;
    do
        for (int flips = 0; flips < (1 << variables); ++flips)
            transforms.emplace_back(perm, flips);
    while (std::next_permutation(perm.begin(), perm.end()));

    auto apply = [&](const std::vector<CodedClause> & f, const std::pair<std::vector<int>, int> & t) {
        std::vector<CodedClause> out;
        for (auto & c : f) {
            CodedClause m;
            for (int i = 0; i < 3; ++i) {
                int v = c[i] / 2, neg = c[i] % 2;
                m[i] = 2 * t.first[v] + (neg ^ ((t.second >> v) & 1));
            }
            std::sort(m.begin(), m.end());
            out.push_back(m);
        }
        std::sort(out.begin(), out.end());
        return out;
    };

    std::vector<CnfFormula> result;
    std::vector<std::size_t> pick;
    auto consider = [&] {
        std::vector<CodedClause> f;
        for (auto i : pick)
            f.push_back(all_clauses[i]);
        for (auto & t : transforms)
            if (apply(f, t) < f)
                return;
        std::vector<Clause> clauses;
        for (auto & c : f) {
            Clause cl;
            for (int i = 0; i < 3; ++i)
                cl[i] = {c[i] / 2 + 1, c[i] % 2 == 1};
            clauses.push_back(cl);
        }
        result.emplace_back(variables, std::move(clauses));
    };

    const std::size_t total = all_clauses.size();
    for (int m = 1; m <= max_clauses; ++m) {
        pick.assign(static_cast<std::size_t>(m), 0);
        for (int i = 0; i < m; ++i)
            pick[i] = static_cast<std::size_t>(i);
        for (;;) {
            consider();
            int i = m - 1;
            while (i >= 0 && pick[i] == total - static_cast<std::size_t>(m - i))
                --i;
            if (i < 0)
                break;
            ++pick[i];
            for (int j = i + 1; j < m; ++j)
                pick[j] = pick[j - 1] + 1;
        }
    }
    return result;
}

// ---------------------------------------------------------------------------
// Instances

namespace {
    std::uint64_t fnv1a(const std::string & s)
    {
        std::uint64_t h = 14695981039346656037ULL;
        for (unsigned char c : s) {
            h ^= c;
            h *= 1099511628211ULL;
        }
        return h;
    }

    std::string read_file(const std::string & path)
    {
        std::ifstream in(path);
        if (! in)
            throw std::runtime_error("cannot read '" + path + "'");
        std::ostringstream s;
        s << in.rdbuf();
        return s.str();
    }

    bool is_graph_problem(Problem p)
    {
        return p == Problem::clique || p == Problem::maxclique || p == Problem::vertex_cover || p == Problem::pcmfnip;
    }

    // K values to try on g when the config leaves K open
    std::vector<std::int64_t> default_ks(Problem p, const UndirectedGraph & g)
    {
        std::vector<std::int64_t> ks;
        if (p == Problem::vertex_cover)
            for (std::int64_t k = 0; k <= g.vertex_count(); ++k)
                ks.push_back(k);
        else if (p == Problem::clique)
            for (std::int64_t k = 2; k <= g.vertex_count(); ++k)
                ks.push_back(k);
        else if (p == Problem::pcmfnip)
            for (std::int64_t k = 2; k <= g.vertex_count(); ++k)
                if (choose2(k) <= static_cast<std::int64_t>(g.edge_count()))
                    ks.push_back(k);
        return ks;
    }

    void add_graph_instances(const ExperimentConfig & config, const UndirectedGraph & g, Json source,
                             std::vector<Instance> & out)
    {
        auto base = [&] {
            Instance inst;
            inst.problem = config.problem;
            inst.format = "dimacs-edge";
            inst.text = to_dimacs(g);
            inst.r = config.r;
            inst.options = config.options;
            inst.source = source;
            return inst;
        };
        if (config.problem == Problem::maxclique) {
            out.push_back(base());
            return;
        }
        std::vector<std::int64_t> ks = config.k ? std::vector<std::int64_t>{*config.k} : default_ks(config.problem, g);
        for (auto k : ks) {
            auto inst = base();
            inst.k = k;
            out.push_back(std::move(inst));
        }
    }
}

std::string Instance::digest() const
{
    std::string key = std::string(to_string(problem)) + "\n" + format + "\n" + text;
    key += "\nk=" + (k ? std::to_string(*k) : "-");
    key += "\nr=" + (r ? std::to_string(*r) : "-");
    key += std::string("\npairing=") + to_string(options.pairing);
    key += std::string("\nbeta=") + (options.beta_settlement ? "on" : "off");
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(key)));
    return buf;
}

std::vector<Instance> expand(const ExperimentConfig & config)
{
    std::vector<Instance> out;
    const auto & src = config.source;
    const bool graphs = is_graph_problem(config.problem);

    switch (src.kind) {
        case InstanceSource::Kind::file: {
            auto text = read_file(src.path);
            Json source{{"kind", "file"}, {"path", src.path}};
            if (graphs)
                add_graph_instances(config, parse_dimacs_graph(text), source, out);
            else {
                Instance inst;
                inst.problem = config.problem;
                inst.k = config.k;
                inst.r = config.r;
                inst.options = config.options;
                inst.source = source;
                if (config.problem == Problem::sat) {
                    inst.format = "dimacs-cnf";
                    inst.text = to_dimacs(parse_dimacs_cnf(text));
                }
                else {
                    inst.format = "network";
                    inst.text = to_text(parse_network(text));
                    if (! inst.r)
                        throw std::invalid_argument("mfnip needs a budget (--r)");
                }
                out.push_back(std::move(inst));
            }
            break;
        }

        case InstanceSource::Kind::exhaustive: {
            if (graphs) {
                for (int n = 1; n <= src.max_size; ++n) {
                    auto all = enumerate_graphs(n);
                    for (std::uint64_t i = 0; i < all.size(); ++i)
                        add_graph_instances(config, all[i], Json{{"kind", "exhaustive"}, {"vertices", n}, {"mask", i}},
                                            out);
                }
            }
            else if (config.problem == Problem::sat) {
                auto formulas = enumerate_cnf_formulas(src.max_size, src.clauses);
                for (std::size_t i = 0; i < formulas.size(); ++i) {
                    Instance inst;
                    inst.problem = Problem::sat;
                    inst.format = "dimacs-cnf";
                    inst.text = to_dimacs(formulas[i]);
                    inst.options = config.options;
                    inst.source = Json{{"kind", "exhaustive"}, {"variables", src.max_size}, {"index", i}};
                    out.push_back(std::move(inst));
                }
            }
            else
                throw std::invalid_argument("mfnip has no exhaustive mode");
            break;
        }

        case InstanceSource::Kind::random: {
            for (int c = 0; c < src.count; ++c) {
                std::uint64_t seed = src.seed + static_cast<std::uint64_t>(c);
                Json source{{"kind", "random"}, {"n", src.n}, {"p", src.p}, {"seed", seed}};
                if (graphs)
                    add_graph_instances(config, generate_random_graph(src.n, src.p, seed), source, out);
                else if (config.problem == Problem::sat) {
                    source["clauses"] = src.clauses;
                    Instance inst;
                    inst.problem = Problem::sat;
                    inst.format = "dimacs-cnf";
                    inst.text = to_dimacs(generate_random_cnf(src.n, src.clauses, seed));
                    inst.options = config.options;
                    inst.source = source;
                    out.push_back(std::move(inst));
                }
                else {
                    auto net = generate_random_network(src.n, src.p, seed);
                    Instance inst;
                    inst.problem = Problem::mfnip;
                    inst.format = "network";
                    inst.text = to_text(net);
                    inst.options = config.options;
                    inst.source = source;
                    if (config.r)
                        inst.r = config.r;
                    else {
                        std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
                        inst.r = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(net.total_interdiction_cost() + 1));
                    }
                    out.push_back(std::move(inst));
                }
            }
            break;
        }

        case InstanceSource::Kind::complete_bipartite: {
            if (! graphs)
                throw std::invalid_argument("the bipartite family applies to graph problems only");
            for (int n = src.lo; n <= src.hi; ++n)
                add_graph_instances(config, complete_bipartite_graph(n, n),
                                    Json{{"kind", "complete-bipartite"}, {"n", n}}, out);
            break;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Serialisation

namespace {
    Json rationals(const std::vector<Rational> & values)
    {
        Json out = Json::array();
        for (auto & v : values)
            out.push_back(to_string(v));
        return out;
    }

    Json to_json(const RoundingTrace & t)
    {
        Json picks = Json::array();
        for (auto & p : t.picks)
            picks.push_back({{"position", p.variable},
                             {"value", to_string(p.value)},
                             {"complement", to_string(p.complement)},
                             {"residual", to_string(p.residual)}});
        return {{"target", to_string(t.target)}, {"group_sum", to_string(t.group_sum)}, {"picks", picks}, {"rounded", t.rounded}};
    }

    template <typename T>
    Json optional_json(const std::optional<T> & v)
    {
        return v ? Json(*v) : Json(nullptr);
    }
}

Json to_json(const AlgoVerdict & v)
{
    Json out;
    out["answer"] = v.yes ? "yes" : "no";
    out["path"] = v.path == DecisionPath::slp ? "slp" : "short-circuit";
    out["note"] = v.note;
    out["target"] = optional_json(v.target);
    out["budget"] = optional_json(v.budget);
    out["slp_status"] = v.slp_status ? Json(to_string(*v.slp_status)) : Json(nullptr);
    out["slp_optimum"] = v.slp_optimum ? Json(to_string(*v.slp_optimum)) : Json(nullptr);
    out["slp_assignment"] = rationals(v.slp_assignment);
    out["settlement_passed"] = v.settlement_passed;
    out["gamma_trace"] = v.gamma_trace ? to_json(*v.gamma_trace) : Json(nullptr);
    out["beta_settlement_passed"] = optional_json(v.beta_settlement_passed);
    out["beta_trace"] = v.beta_trace ? to_json(*v.beta_trace) : Json(nullptr);
    out["rounded_assignment"] = rationals(v.rounded_assignment);
    out["rows_checked"] = v.rows_checked;
    Json violations = Json::array();
    for (auto & r : v.post_round_violations)
        violations.push_back({{"a2_node", r.a2_node + 1}, {"lhs", to_string(r.lhs)}, {"rhs", to_string(r.rhs)}});
    out["post_round_violations"] = violations;
    return out;
}

Json to_json(const OracleAnswer & a)
{
    return {{"answer", a.yes ? "yes" : "no"}, {"witness", a.witness}, {"work_count", a.work_count}};
}

Json to_json(const ExperimentConfig & config)
{
    Json src;
    const auto & s = config.source;
    switch (s.kind) {
        case InstanceSource::Kind::file: src = {{"kind", "file"}, {"path", s.path}}; break;
        case InstanceSource::Kind::exhaustive:
            src = {{"kind", "exhaustive"}, {"max_size", s.max_size}};
            if (config.problem == Problem::sat)
                src["max_clauses"] = s.clauses;
            break;
        case InstanceSource::Kind::random:
            src = {{"kind", "random"}, {"n", s.n}, {"p", s.p}, {"seed", s.seed}, {"count", s.count}};
            if (config.problem == Problem::sat)
                src["clauses"] = s.clauses;
            break;
        case InstanceSource::Kind::complete_bipartite:
            src = {{"kind", "complete-bipartite"}, {"lo", s.lo}, {"hi", s.hi}};
            break;
    }
    return {{"problem", to_string(config.problem)},
            {"source", src},
            {"k", optional_json(config.k)},
            {"r", optional_json(config.r)},
            {"pairing", to_string(config.options.pairing)},
            {"beta_settlement", config.options.beta_settlement}};
}

// ---------------------------------------------------------------------------
// Evaluation

namespace {
    using Clock = std::chrono::steady_clock;

    std::int64_t micros_since(Clock::time_point t0)
    {
        return std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - t0).count();
    }

    struct Sides {
        Json paper, oracle;
        bool paper_yes = false, oracle_yes = false;
        bool compare_answers = true;   // false for value comparisons (mfnip, maxclique)
        bool values_equal = false;
        std::int64_t paper_us = 0, oracle_us = 0;
    };

    template <typename F>
    auto timed(std::int64_t & us, F && f)
    {
        auto t0 = Clock::now();
        auto result = f();
        us = micros_since(t0);
        return result;
    }

    Sides run_sides(const Instance & inst)
    {
        Sides s;
        const auto & opt = inst.options;
        auto need_k = [&] {
            if (! inst.k)
                throw std::invalid_argument(std::string(to_string(inst.problem)) + " needs K");
            return *inst.k;
        };

        switch (inst.problem) {
            case Problem::clique: {
                auto g = parse_dimacs_graph(inst.text);
                auto k = need_k();
                auto v = timed(s.paper_us, [&] { return decide_clique(g, k, opt); });
                s.paper = to_json(v);
                s.paper_yes = v.yes;
                auto o = timed(s.oracle_us, [&] { return oracle_clique(g, k); });
                s.oracle = to_json(o);
                s.oracle_yes = o.yes;
                break;
            }
            case Problem::maxclique: {
                auto g = parse_dimacs_graph(inst.text);
                auto v = timed(s.paper_us, [&] { return max_clique_paper(g, opt); });
                s.paper = {{"size", v.size}, {"attempted", v.attempted}, {"verdict", to_json(v.verdict)}};
                auto o = timed(s.oracle_us, [&] { return oracle_max_clique(g); });
                s.oracle = {{"size", o.size}, {"witness", o.witness}, {"work_count", o.work_count}};
                s.compare_answers = false;
                s.values_equal = v.size == o.size;
                // the descending loop under-reporting the maximum is the maxclique
                // analogue of rejecting an existing clique
                s.paper_yes = v.size >= o.size;
                s.oracle_yes = true;
                break;
            }
            case Problem::sat: {
                auto f = parse_dimacs_cnf(inst.text);
                auto v = timed(s.paper_us, [&] { return decide_sat_paper(f, opt); });
                s.paper = to_json(v);
                s.paper_yes = v.yes;
                auto o = timed(s.oracle_us, [&] { return oracle_sat(f); });
                s.oracle = to_json(o);
                s.oracle_yes = o.yes;
                break;
            }
            case Problem::vertex_cover: {
                auto g = parse_dimacs_graph(inst.text);
                auto k = need_k();
                auto v = timed(s.paper_us, [&] { return decide_vertex_cover_paper(g, k, opt); });
                s.paper = to_json(v);
                s.paper_yes = v.yes;
                auto o = timed(s.oracle_us, [&] { return oracle_vertex_cover(g, k); });
                s.oracle = to_json(o);
                s.oracle_yes = o.yes;
                break;
            }
            case Problem::pcmfnip: {
                auto g = parse_dimacs_graph(inst.text);
                auto k = need_k();
                auto r = inst.r ? *inst.r : static_cast<std::int64_t>(g.edge_count()) - choose2(k);
                if (r < 0)
                    throw std::invalid_argument("default budget |E| - C(K,2) is negative; pass --r");
                auto pc = pcmfnip_instance(g);
                auto v = timed(s.paper_us, [&] { return decide_pcmfnip(pc, r, k, opt); });
                s.paper = to_json(v);
                s.paper_yes = v.yes;
                auto o = timed(s.oracle_us, [&] { return oracle_min_interdicted_flow(make_interdiction_instance(pc.network(), r)); });
                s.oracle_yes = o.value == k;
                s.oracle = {{"answer", s.oracle_yes ? "yes" : "no"},
                            {"min_interdicted_flow", o.value},
                            {"witness", o.witness},
                            {"subsets_evaluated", o.subsets_evaluated}};
                break;
            }
            case Problem::mfnip: {
                auto net = parse_network(inst.text);
                if (! inst.r)
                    throw std::invalid_argument("mfnip needs a budget");
                auto r = *inst.r;
                auto model = build_mfnip_ip(net, r);
                auto ip = timed(s.paper_us, [&] { return solve_ip(model.model); });
                Json interdicted = Json::array();
                if (ip.status == LpStatus::optimal)
                    for (std::size_t k = 0; k < model.beta.size(); ++k)
                        if (ip.assignment[model.beta[k]] == 1)
                            interdicted.push_back(k);
                s.paper = {{"ip_status", to_string(ip.status)},
                           {"ip_optimum", ip.status == LpStatus::optimal ? Json(to_string(ip.objective_value)) : Json(nullptr)},
                           {"node_count", ip.node_count},
                           {"interdicted_in_cut", interdicted}};
                auto o = timed(s.oracle_us, [&] { return oracle_min_interdicted_flow(make_interdiction_instance(net, r)); });
                s.oracle = {{"min_interdicted_flow", o.value}, {"witness", o.witness}, {"subsets_evaluated", o.subsets_evaluated}};
                s.compare_answers = false;
                s.values_equal = ip.status == LpStatus::optimal && ip.objective_value == o.value;
                s.paper_yes = s.oracle_yes = true;
                break;
            }
        }
        return s;
    }

    Json params_of(const Instance & inst)
    {
        return {{"k", optional_json(inst.k)},
                {"r", optional_json(inst.r)},
                {"pairing", to_string(inst.options.pairing)},
                {"beta_settlement", inst.options.beta_settlement}};
    }
}

Record evaluate(const Instance & inst, bool record_timing)
{
    Record rec;
    rec.digest = inst.digest();
    auto & d = rec.data;
    d["digest"] = rec.digest;
    d["problem"] = to_string(inst.problem);
    d["instance"] = {{"format", inst.format}, {"text", inst.text}};
    d["params"] = params_of(inst);
    d["source"] = inst.source;

    try {
        auto s = run_sides(inst);
        rec.agree = s.compare_answers ? s.paper_yes == s.oracle_yes : s.values_equal;
        rec.false_negative = s.oracle_yes && ! s.paper_yes;
        rec.false_positive = s.compare_answers && s.paper_yes && ! s.oracle_yes;
        d["algorithm"] = std::move(s.paper);
        d["oracle"] = std::move(s.oracle);
        d["agree"] = rec.agree;
        d["error"] = nullptr;
        if (record_timing)
            d["timing_us"] = {{"algorithm", s.paper_us}, {"oracle", s.oracle_us}};
    }
    catch (const std::exception & e) {
        rec.error = true;
        d["algorithm"] = nullptr;
        d["oracle"] = nullptr;
        d["agree"] = nullptr;
        d["error"] = e.what();
    }
    return rec;
}

Json Report::to_json() const
{
    Json recs = Json::array();
    for (auto & r : records)
        recs.push_back(r.data);
    auto first = first_disagreement();
    return {{"schema", "cmfnip-report/1"},
            {"config", config},
            {"records", recs},
            {"summary",
             {{"instances", scanned},
              {"agree", agree},
              {"disagree", disagree},
              {"errors", errors},
              {"false_negatives", false_negatives},
              {"false_positives", false_positives},
              {"first_disagreement", first ? Json(first->digest) : Json(nullptr)}}}};
}

const Record * Report::first_disagreement() const
{
    for (auto & r : records)
        if (! r.error && ! r.agree)
            return &r;
    return nullptr;
}

namespace {
    Report collect(const std::vector<Instance> & instances, std::size_t limit, bool record_timing, bool keep_all, Json config)
    {
        const std::size_t n = std::min(limit, instances.size());
        std::vector<Record> results(n);
        parallel_for(n, [&](std::size_t i) { results[i] = evaluate(instances[i], record_timing); });

        Report report;
        report.config = std::move(config);
        report.scanned = n;
        for (auto & r : results) {
            if (r.error)
                ++report.errors;
            else if (r.agree)
                ++report.agree;
            else
                ++report.disagree;
            if (r.false_negative)
                ++report.false_negatives;
            if (r.false_positive)
                ++report.false_positives;
            if (keep_all || r.error || ! r.agree)
                report.records.push_back(std::move(r));
        }
        std::stable_sort(report.records.begin(), report.records.end(),
                         [](const Record & a, const Record & b) { return a.digest < b.digest; });
        return report;
    }
}

Report run_instances(const std::vector<Instance> & instances, bool record_timing, Json config)
{
    return collect(instances, instances.size(), record_timing, true, std::move(config));
}

Report run_experiment(const ExperimentConfig & config)
{
    return collect(expand(config), static_cast<std::size_t>(-1), config.record_timing, true, to_json(config));
}

Report search_counterexamples(const ExperimentConfig & space, std::uint64_t budget)
{
    auto config = to_json(space);
    config["budget"] = budget;
    if (budget == 0) {
        Report empty;
        empty.config = std::move(config);
        return empty;
    }
    return collect(expand(space), static_cast<std::size_t>(budget), space.record_timing, false, std::move(config));
}

Instance instance_from_record(const Json & record)
{
    Instance inst;
    inst.problem = parse_problem(record.at("problem").get<std::string>());
    inst.format = record.at("instance").at("format").get<std::string>();
    inst.text = record.at("instance").at("text").get<std::string>();
    const auto & p = record.at("params");
    if (! p.at("k").is_null())
        inst.k = p.at("k").get<std::int64_t>();
    if (! p.at("r").is_null())
        inst.r = p.at("r").get<std::int64_t>();
    inst.options.pairing =
        p.at("pairing").get<std::string>() == "succeeding" ? SatPairing::succeeding_clauses : SatPairing::all_clause_pairs;
    inst.options.beta_settlement = p.at("beta_settlement").get<bool>();
    inst.source = record.value("source", Json::object());
    return inst;
}

bool replay_matches(const Json & record)
{
    auto again = evaluate(instance_from_record(record), false);
    return again.digest == record.at("digest").get<std::string>() && again.data.at("algorithm") == record.at("algorithm") &&
        again.data.at("oracle") == record.at("oracle") && again.data.at("agree") == record.at("agree");
}

}
