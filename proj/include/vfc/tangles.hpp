// cyclic rational tangle decompositions: parsing, link invariants, theorem-case matching
#pragma once

#include "vfc/rational.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace vfc {

struct RationalTangle {
    Int q = 0;  // numerator, may be negative and |q/p| may exceed 1
    Int p = 0;  // denominator, >= 2, coprime to |q|
    bool operator==(const RationalTangle&) const = default;
};

struct TangleDecomposition {
    std::vector<RationalTangle> tangles;  // cyclic order as given
    Int n() const { return (Int)tangles.size(); }
    std::string echo() const;  // canonical "q/p,q/p,..." form, re-parses to *this
    bool operator==(const TangleDecomposition&) const = default;
};

struct MontesinosInvariants {
    Rat euler_number;    // e(W_K) = -sum q_i/p_i
    Rat chi;             // chi of the base orbifold, 2 - n + sum 1/p_i
    Int components = 0;  // |K|
    bool is_sl2 = false; // euler_number != 0 and chi < 0
};

struct CaseIParams {
    Int p = 0, r = 0, k = 0, n = 0;
    Int rotation_offset = 0;  // rotation applied to the input so the p-block comes first
};

struct CaseIIParams {
    Int p = 0, m = 0, n = 0;  // p = 2m, m odd
};

struct CaseMatch {
    enum class Kind { I, II, None };
    Kind kind = Kind::None;
    CaseIParams c1{};
    CaseIIParams c2{};
    std::string reason;  // set when kind == None
};

struct parse_error : std::runtime_error {
    Int index;  // offending tangle index, -1 when not tied to one
    parse_error(const std::string& what, Int idx) : std::runtime_error(what), index(idx) {}
};

// grammar: decomp := frac ("," frac)* ; frac := ["-"] digits "/" digits
// whitespace around tokens is ignored; non-reduced fractions are rejected, not reduced
TangleDecomposition parse_decomposition(const std::string& text);

MontesinosInvariants invariants(const TangleDecomposition& d);

// tries all n cyclic rotations of the tangle list against the two admissible shapes
CaseMatch classify_theorem_case(const TangleDecomposition& d);

// integer Euler number of the relevant Seifert piece:
//   case I : -(r*sum_{i<=k} q_i + sum_{i>k} q_i) = p*r*e(W_K), taken after rotation
//   case II: -sum q_i = p*e(W_K)
Int integer_euler(const TangleDecomposition& d, const CaseMatch& m);

// decomposition rotated so index `offset` comes first
TangleDecomposition rotated(const TangleDecomposition& d, Int offset);

// side conditions reported in the certificate; they never block the pipeline
struct SideConditions {
    bool integer_euler_nonzero = false;
    bool case1_euler_odd = false;      // case I only: integer e odd (single component)
    bool case2_all_q_odd = false;      // case II only
    bool case2_euler_even = false;     // case II only
};
SideConditions side_conditions(const TangleDecomposition& d, const CaseMatch& m);

}
