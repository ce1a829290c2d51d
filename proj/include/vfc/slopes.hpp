// horizontal-surface slope solver for star-shaped graph manifolds, exact rationals throughout
#pragma once

#include "vfc/rational.hpp"

#include <utility>
#include <vector>

namespace vfc {

struct GluingMatrix {
    Int a = 1, b = 0, c = 1, d = 1;  // ad - bc = 1, c != 0
};

struct StarGraph {
    Int leaf_count = 1;    // V
    Int q = 0;             // per-leaf Euler part e^i = 2q for i < V
    Int e = 0;             // total Euler number, sum of the parts
    Int e_prime = 0;       // e - 2q(V-1), the last leaf's part
    std::vector<Int> parts() const {
        std::vector<Int> v((size_t)leaf_count - 1, 2 * q);
        v.push_back(e_prime);
        return v;
    }
};

struct LambdaSolution {
    Rat lambda;                   // normalized to 1
    std::vector<Rat> lambda_bar;  // cq for leaves before the last, c*e'/2 for the last
};

struct LeafSlopes {
    Int eps_minus = -1, eps_plus = 1;
    Rat s_minus, s_plus;           // t/u slopes on the outer tori
    Rat sb_minus, sb_plus, sb_zero;  // bar-side slopes; sb_zero = -(sb_minus+sb_plus)
    // integer presentation (literal table cells when canonical, reduced fractions otherwise)
    Int t_m = 0, u_m = 0, t_p = 0, u_p = 0;
    Int tb_m = 0, ub_m = 0, tb_p = 0, ub_p = 0, tb_0 = 0, ub_0 = 0;
    bool reduced_fallback = false;  // integers came from fraction reduction, not the table branches
};

struct SlopeTable {
    std::vector<LeafSlopes> leaves;
    bool semibundle = false;   // eps_-^i == -eps_+^i for every leaf
    Rat central_residual;      // sum of s_minus + s_plus over leaves; 0 for the canonical signs
    std::vector<Rat> leaf_residuals;  // sb_minus + sb_plus + sb_zero per leaf
};

// q == 0 requests auto selection: smallest |q| >= 1 with e' != 0, positive preferred
StarGraph build_star(Int e, Int V, Int q);

LambdaSolution solve_wang_yu(const StarGraph& star, const GluingMatrix& g);

std::vector<std::pair<Int, Int>> canonical_eps(Int V);

SlopeTable boundary_slopes(const StarGraph& star, const GluingMatrix& g, const LambdaSolution& sol,
                           const std::vector<std::pair<Int, Int>>& eps);

struct Case1SlopeData {
    Rat gamma1;               // 1/(2e) - 1/2
    Rat gamma2;               // -1/(2e) - 1/2
    Rat interp_intercept;     // -1/2
    Rat interp_coefficient;   // -1/(2e), in the normalized variable t/delta in [-1,1]
    Int wrap_count = 0;       // (1-e)/2
};

Case1SlopeData case1_slope_data(Int e);  // e odd, nonzero

std::pair<Int, Int> case2_wrap_counts(Int q, Int e_prime);  // (q-1, 1-e'/2)

}
