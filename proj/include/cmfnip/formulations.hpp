#pragma once

#include <cmfnip/flow.hpp>
#include <cmfnip/lp.hpp>
#include <cmfnip/reductions.hpp>

#include <cstdint>
#include <vector>

namespace cmfnip {

/// Wood's interdiction IP over a general network. Variables are ordered
/// alpha (per node), beta (per arc), gamma (per arc).
struct MfnipModel {
    LpModel model;
    std::vector<std::size_t> alpha;   // node -> variable
    std::vector<std::size_t> beta;    // arc -> variable
    std::vector<std::size_t> gamma;   // arc -> variable
};

/// Objective sum C_e gamma_e; per arc (u,v) the row
/// alpha_u - alpha_v + beta_e + gamma_e >= 0; the row alpha_t - alpha_s >= 1;
/// the budget row sum r_e beta_e <= R; everything 0/1. alpha_s and alpha_t are
/// additionally pinned to 0 and 1 through their bounds, and beta of a
/// non-interdictable arc is pinned to 0.
MfnipModel build_mfnip_ip(const FlowNetwork & net, std::int64_t budget);

enum class PcmfnipMode { integer_program, slp };

/// Variables: all gamma (A2 order) then all beta (A1 order).
/// Rows: "budget", then one "cover_i" per A2 node, then "strengthen" in slp
/// mode.
struct PcmfnipModel {
    LpModel model;
    std::vector<std::size_t> gamma;   // A2 node -> variable
    std::vector<std::size_t> beta;    // A1 node -> variable
    PcmfnipMode mode;
    std::size_t budget_row = 0;
    std::vector<std::size_t> cover_rows;   // A2 node -> row
};

/// min sum gamma s.t. sum beta <= R and, for each A2 node i of degree n_i,
/// n_i gamma_i + sum_{j incident to i} beta_j >= n_i; gamma, beta binary.
/// Throws std::invalid_argument on a negative budget.
PcmfnipModel build_pcmfnip_ip(const PcmfnipInstance & inst, std::int64_t budget);

/// The relaxation of build_pcmfnip_ip with all variables in [0,1], plus the
/// row sum gamma >= K. Throws std::invalid_argument on negative R or K.
PcmfnipModel build_slp(const PcmfnipInstance & inst, std::int64_t budget, std::int64_t target);

}
