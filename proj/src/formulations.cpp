#include <cmfnip/formulations.hpp>

#include <stdexcept>
#include <string>

namespace cmfnip {

MfnipModel build_mfnip_ip(const FlowNetwork & net, std::int64_t budget)
{
    if (budget < 0)
        throw std::invalid_argument("interdiction budget must be nonnegative");

    MfnipModel out;
    auto & lp = out.model;
    const Rational zero = 0, one = 1;

    for (int v = 0; v < net.node_count(); ++v) {
        Rational lo = v == net.sink() ? one : zero;
        Rational hi = v == net.source() ? zero : one;
        out.alpha.push_back(lp.add_variable("alpha_" + std::to_string(v), lo, hi, true));
    }
    const auto & arcs = net.arcs();
    for (std::size_t k = 0; k < arcs.size(); ++k)
        out.beta.push_back(lp.add_variable("beta_" + std::to_string(k), zero, arcs[k].interdictable ? one : zero, true));
    for (std::size_t k = 0; k < arcs.size(); ++k)
        out.gamma.push_back(lp.add_variable("gamma_" + std::to_string(k), zero, one, true,
                                            Rational(static_cast<long>(arcs[k].capacity))));

    for (std::size_t k = 0; k < arcs.size(); ++k)
        lp.add_constraint("arc_" + std::to_string(k),
                          {{out.alpha[arcs[k].tail], one},
                           {out.alpha[arcs[k].head], Rational(-1)},
                           {out.beta[k], one},
                           {out.gamma[k], one}},
                          Relation::greater_equal, zero);

    lp.add_constraint("cut", {{out.alpha[net.sink()], one}, {out.alpha[net.source()], Rational(-1)}},
                      Relation::greater_equal, one);

    std::vector<Term> spend;
    for (std::size_t k = 0; k < arcs.size(); ++k)
        spend.emplace_back(out.beta[k], Rational(static_cast<long>(arcs[k].interdiction_cost)));
    lp.add_constraint("budget", spend, Relation::less_equal, Rational(static_cast<long>(budget)));
    return out;
}

namespace {
    PcmfnipModel build_pcmfnip(const PcmfnipInstance & inst, std::int64_t budget, PcmfnipMode mode)
    {
        if (budget < 0)
            throw std::invalid_argument("interdiction budget must be nonnegative");

        PcmfnipModel out;
        out.mode = mode;
        auto & lp = out.model;
        const bool integral = mode == PcmfnipMode::integer_program;
        const Rational zero = 0, one = 1;

        for (std::size_t i = 0; i < inst.a2_count(); ++i)
            out.gamma.push_back(lp.add_variable("gamma_" + std::to_string(i + 1), zero, one, integral, one));
        for (std::size_t j = 0; j < inst.a1_count(); ++j)
            out.beta.push_back(lp.add_variable("beta_" + std::to_string(j + 1), zero, one, integral));

        std::vector<Term> spend;
        for (auto b : out.beta)
            spend.emplace_back(b, one);
        out.budget_row = lp.add_constraint("budget", spend, Relation::less_equal, Rational(static_cast<long>(budget)));

        for (std::size_t i = 0; i < inst.a2_count(); ++i) {
            const auto & incident = inst.incident_a1(i);
            Rational n(static_cast<long>(incident.size()));
            std::vector<Term> terms{{out.gamma[i], n}};
            for (auto j : incident)
                terms.emplace_back(out.beta[j], one);
            out.cover_rows.push_back(lp.add_constraint("cover_" + std::to_string(i + 1), terms, Relation::greater_equal, n));
        }
        return out;
    }
}

PcmfnipModel build_pcmfnip_ip(const PcmfnipInstance & inst, std::int64_t budget)
{
    return build_pcmfnip(inst, budget, PcmfnipMode::integer_program);
}

PcmfnipModel build_slp(const PcmfnipInstance & inst, std::int64_t budget, std::int64_t target)
{
    if (target < 0)
        throw std::invalid_argument("target must be nonnegative");
    auto out = build_pcmfnip(inst, budget, PcmfnipMode::slp);
    std::vector<Term> sum;
    for (auto g : out.gamma)
        sum.emplace_back(g, Rational(1));
    out.model.add_constraint("strengthen", sum, Relation::greater_equal, Rational(static_cast<long>(target)));
    return out;
}

}
