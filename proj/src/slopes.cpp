#include "vfc/slopes.hpp"

#include <stdexcept>
#include <string>

namespace vfc {

StarGraph build_star(Int e, Int V, Int q) {
    if (e == 0) throw std::invalid_argument("total Euler number must be nonzero");
    if (V < 1) throw std::invalid_argument("need at least one leaf");
    if (q == 0) {
        // auto: smallest magnitude keeping the last part nonzero, positive preferred
        for (Int mag = 1;; mag++) {
            for (Int cand : {mag, -mag}) {
                if (e - 2 * cand * (V - 1) != 0) {
                    q = cand;
                    break;
                }
            }
            if (q != 0) break;
        }
    }
    Int ep = e - 2 * q * (V - 1);
    if (ep == 0) {
        Int alt = (e - 2 * (q + 1) * (V - 1) != 0) ? q + 1 : q - 1;
        throw std::invalid_argument("e' = 0 for q = " + std::to_string(q) +
                                    "; try q = " + std::to_string(alt));
    }
    return {V, q, e, ep};
}

LambdaSolution solve_wang_yu(const StarGraph& star, const GluingMatrix& g) {
    if (g.a * g.d - g.b * g.c != 1) throw std::invalid_argument("gluing determinant must be 1");
    if (g.c == 0) throw std::invalid_argument("gluing entry c must be nonzero");
    if ((g.c * star.e_prime) % 2 != 0)
        throw std::invalid_argument("c*e' must be even for an integral solution");

    LambdaSolution sol;
    sol.lambda = Rat(1);
    for (Int i = 1; i < star.leaf_count; i++) sol.lambda_bar.push_back(Rat(g.c * star.q));
    sol.lambda_bar.push_back(Rat(g.c * star.e_prime, 2));

    // first row of the linear system: -e*lambda + (2/c) * sum(lambda_bar) = 0
    Rat residual = Rat(-star.e) * sol.lambda;
    for (auto& lb : sol.lambda_bar) residual += Rat(2, g.c) * lb;
    if (residual != Rat(0)) throw std::logic_error("solution does not satisfy the first equation");
    return sol;
}

std::vector<std::pair<Int, Int>> canonical_eps(Int V) {
    return std::vector<std::pair<Int, Int>>((size_t)V, {-1, 1});
}

namespace {

void reduce_into(const Rat& s, Int& t, Int& u) {
    t = s.numerator();
    u = s.denominator();
}

}  // namespace

SlopeTable boundary_slopes(const StarGraph& star, const GluingMatrix& g, const LambdaSolution& sol,
                           const std::vector<std::pair<Int, Int>>& eps) {
    if ((Int)eps.size() != star.leaf_count) throw std::invalid_argument("one sign pair per leaf");
    if (g.a * g.d - g.b * g.c != 1) throw std::invalid_argument("gluing determinant must be 1");

    SlopeTable table;
    table.semibundle = true;
    table.central_residual = Rat(0);
    bool canonical_glue = g.a == 1 && g.b == 0 && g.c == 1 && g.d == 1;
    auto parts = star.parts();

    for (Int i = 0; i < star.leaf_count; i++) {
        LeafSlopes leaf;
        auto [em, ep_sign] = eps[(size_t)i];
        if ((em != 1 && em != -1) || (ep_sign != 1 && ep_sign != -1))
            throw std::invalid_argument("signs must be +-1");
        leaf.eps_minus = em;
        leaf.eps_plus = ep_sign;
        if (em != -ep_sign) table.semibundle = false;

        Rat L = sol.lambda_bar[(size_t)i] / sol.lambda;  // never zero: cq or ce'/2
        Rat c = Rat(g.c);
        leaf.s_minus = Rat(-em) * L / c - Rat(g.d, g.c);
        leaf.s_plus = Rat(ep_sign) * L / c - Rat(parts[(size_t)i]) + Rat(g.d, g.c);
        leaf.sb_minus = Rat(-em) / (c * L) - Rat(g.a, g.c);
        leaf.sb_plus = Rat(ep_sign) / (c * L) + Rat(g.a, g.c);
        leaf.sb_zero = -(leaf.sb_minus + leaf.sb_plus);

        bool last = i == star.leaf_count - 1;
        bool canonical = canonical_glue && em == -1 && ep_sign == 1;
        if (canonical) {
            // literal table cells; x is q for the inner leaves and e'/2 for the last one
            Int x = last ? star.e_prime / 2 : star.q;
            leaf.t_m = x - 1;
            leaf.u_m = 1;
            leaf.t_p = 1 - x;
            leaf.u_p = 1;
            leaf.tb_m = 1 - x;
            leaf.ub_m = x;
            leaf.tb_p = 1 + x;
            leaf.ub_p = x;
            if (x % 2 != 0) {
                leaf.tb_0 = -2;
                leaf.ub_0 = x;
            } else {
                leaf.tb_0 = -1;
                leaf.ub_0 = x / 2;
            }
        } else {
            leaf.reduced_fallback = true;
            reduce_into(leaf.s_minus, leaf.t_m, leaf.u_m);
            reduce_into(leaf.s_plus, leaf.t_p, leaf.u_p);
            reduce_into(leaf.sb_minus, leaf.tb_m, leaf.ub_m);
            reduce_into(leaf.sb_plus, leaf.tb_p, leaf.ub_p);
            reduce_into(leaf.sb_zero, leaf.tb_0, leaf.ub_0);
        }

        table.central_residual += leaf.s_minus + leaf.s_plus;
        table.leaf_residuals.push_back(leaf.sb_minus + leaf.sb_plus + leaf.sb_zero);
        table.leaves.push_back(leaf);
    }
    return table;
}

Case1SlopeData case1_slope_data(Int e) {
    if (e == 0 || e % 2 == 0) throw std::invalid_argument("needs odd nonzero Euler number");
    Case1SlopeData d;
    d.gamma1 = Rat(1, 2 * e) - Rat(1, 2);
    d.gamma2 = Rat(-1, 2 * e) - Rat(1, 2);
    d.interp_intercept = Rat(-1, 2);
    d.interp_coefficient = Rat(-1, 2 * e);
    d.wrap_count = (1 - e) / 2;
    return d;
}

std::pair<Int, Int> case2_wrap_counts(Int q, Int e_prime) {
    if (e_prime % 2 != 0) throw std::invalid_argument("e' must be even");
    return {q - 1, 1 - e_prime / 2};
}

}
