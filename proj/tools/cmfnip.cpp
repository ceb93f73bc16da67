// Command-line front end: runs the SLP deciders against the exhaustive
// oracles and writes a JSON report.

#include <cmfnip/harness.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace cmfnip;

namespace {

struct Flags {
    std::string input;
    int exhaustive = 0;
    std::string random;
    std::string bipartite;
    int count = 1;
    int clauses = 2;
    std::optional<std::int64_t> k, r;
    std::string pairing = "all";
    std::string beta = "off";
    std::string report;
    bool no_timing = false;
    std::string problem = "clique";
    std::uint64_t budget = 1000;
};

void add_common(CLI::App * cmd, Flags & f)
{
    auto * src = cmd->add_option_group("source", "instance source");
    src->add_option("--input", f.input, "DIMACS graph / CNF file, or network file for mfnip");
    src->add_option("--exhaustive", f.exhaustive, "every graph on 1..N vertices (sat: formulas over N variables)");
    src->add_option("--random", f.random, "n,p,seed (sat: variables,clauses,seed)");
    if (cmd->get_name() == "search")
        src->add_option("--bipartite", f.bipartite, "lo,hi: K_{n,n} for n in [lo,hi]");
    src->require_option(1);

    cmd->add_option("--count", f.count, "random instances, seeds seed..seed+count-1")->check(CLI::PositiveNumber);
    cmd->add_option("--clauses", f.clauses, "clause bound for exhaustive sat")->check(CLI::Range(1, 4));
    cmd->add_option("--k", f.k, "target K (clique size, cover size)");
    cmd->add_option("--r", f.r, "interdiction budget R");
    cmd->add_option("--pairing", f.pairing, "SAT reduction clause pairing")->check(CLI::IsMember({"all", "succeeding"}));
    cmd->add_option("--beta-settlement", f.beta, "also settle the beta group")->check(CLI::IsMember({"on", "off"}));
    cmd->add_option("--report", f.report, "write the JSON report here instead of stdout");
    cmd->add_flag("--no-timing", f.no_timing, "omit timings (byte-stable reports)");
}

std::vector<std::string> split(const std::string & s, char sep)
{
    std::vector<std::string> out;
    std::stringstream in(s);
    std::string part;
    while (std::getline(in, part, sep))
        out.push_back(part);
    return out;
}

ExperimentConfig config_from(Problem problem, const Flags & f)
{
    ExperimentConfig c;
    c.problem = problem;
    c.k = f.k;
    c.r = f.r;
    c.options.pairing = f.pairing == "succeeding" ? SatPairing::succeeding_clauses : SatPairing::all_clause_pairs;
    c.options.beta_settlement = f.beta == "on";
    c.record_timing = ! f.no_timing;

    auto & s = c.source;
    if (! f.input.empty()) {
        s.kind = InstanceSource::Kind::file;
        s.path = f.input;
    }
    else if (f.exhaustive > 0) {
        s.kind = InstanceSource::Kind::exhaustive;
        s.max_size = f.exhaustive;
        s.clauses = f.clauses;
    }
    else if (! f.random.empty()) {
        auto parts = split(f.random, ',');
        if (parts.size() != 3)
            throw CLI::ValidationError("--random", "expected n,p,seed");
        s.kind = InstanceSource::Kind::random;
        s.n = std::stoi(parts[0]);
        s.seed = std::stoull(parts[2]);
        s.count = f.count;
        if (problem == Problem::sat)
            s.clauses = std::stoi(parts[1]);
        else
            s.p = std::stod(parts[1]);
    }
    else if (! f.bipartite.empty()) {
        auto parts = split(f.bipartite, ',');
        if (parts.size() != 2)
            throw CLI::ValidationError("--bipartite", "expected lo,hi");
        s.kind = InstanceSource::Kind::complete_bipartite;
        s.lo = std::stoi(parts[0]);
        s.hi = std::stoi(parts[1]);
    }
    else
        throw CLI::ValidationError("source", "--exhaustive needs N >= 1");
    return c;
}

void emit(const Report & report, const Flags & f)
{
    auto text = report.to_json().dump(2) + "\n";
    if (f.report.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(f.report);
    if (! out)
        throw std::runtime_error("cannot write '" + f.report + "'");
    out << text;
    std::cerr << "instances " << report.scanned << ", agree " << report.agree << ", disagree " << report.disagree
              << ", errors " << report.errors << " -> " << f.report << "\n";
}

}

int main(int argc, char ** argv)
{
    CLI::App app{"SLP clique decider versus exhaustive oracles"};
    app.require_subcommand(1);

    Flags flags;
    const std::vector<std::pair<std::string, std::string>> commands{
        {"clique", "decide K-clique"},          {"maxclique", "maximum clique by descending K"},
        {"sat", "3-SAT through the clique reduction"}, {"vc", "vertex cover through the complement"},
        {"pcmfnip", "two-layer interdiction on a graph's edge/vertex network"},
        {"mfnip", "general interdiction IP versus enumeration"}, {"search", "scan a space, keep disagreements"}};
    for (auto & [name, help] : commands) {
        auto * cmd = app.add_subcommand(name, help);
        add_common(cmd, flags);
        if (name == "search") {
            cmd->add_option("--problem", flags.problem, "problem to adjudicate")
                ->check(CLI::IsMember({"clique", "maxclique", "sat", "vc", "pcmfnip", "mfnip"}));
            cmd->add_option("--budget", flags.budget, "maximum instances scanned");
        }
    }

    CLI11_PARSE(app, argc, argv);

    try {
        auto * cmd = app.get_subcommands().front();
        if (cmd->get_name() == "search") {
            auto config = config_from(parse_problem(flags.problem), flags);
            emit(search_counterexamples(config, flags.budget), flags);
        }
        else
            emit(run_experiment(config_from(parse_problem(cmd->get_name()), flags)), flags);
    }
    catch (const std::exception & e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
