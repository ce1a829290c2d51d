// reference curve systems on the base surface: closed curves and disk arcs whose
// signed crossings pair every odd segment class strictly negatively
#pragma once

#include "vfc/curves.hpp"

#include <string>
#include <vector>

namespace vfc {

struct RefCrossing {
    Int i = 0, j = 0;   // the crossed lifted curve
    Int label = 0;      // its odd segment (L^label)*
    int sign = -1;
};

struct ReferenceArc {
    enum class Kind { Disk, Parallel };
    Kind kind = Kind::Parallel;
    std::string name;                    // "a2,5", "b3,1", "l1", "conn", ...
    Int point = -1;                      // Disk: the marked point the disk sits at
    Int side = 0;                        // boundary-parallel arcs: -1 or +1
    Int host_band = 0;                   // which beta circle a boundary parallel runs along
    Int shadow_i = 0, shadow_j = 0;      // carrier curve of a curve-parallel arc
    Int from_point = -1, to_point = -1;  // corridor ends of a carrier-parallel arc
    Int band = 1;                        // nesting index within its disk or corridor
    std::vector<RefCrossing> crossings;
};

struct ReferenceCurve {
    std::string label;
    int orientation = 1;  // -1 reverses the curve; every stored sign then counts negated
    std::vector<ReferenceArc> cycle;  // arcs chained head to tail, closing up
};

struct ReferenceSystem {
    CaseMatch::Kind kind = CaseMatch::Kind::None;
    Int n = 0;
    std::vector<ReferenceCurve> curves;
};

// (r+1)/2 curves: the beta_- parallel plus one curve per row pair (t, r+2-t),
// each assembled from the disk arcs a..g, the carrier parallels b and connectors
ReferenceSystem build_case1(const CurveSystem& sys);

// n/2 boundary parallels when 4 | n; otherwise n/2 + 3 curves, the extra ones
// running around the middle bands on disk arcs
ReferenceSystem build_case2(const CurveSystem& sys);

// signed crossing total of one segment against the whole system; odd (F1) segments
// carry all the stored crossings, so even segments come back 0
Int total_intersection(const ReferenceSystem& ref, const SegmentRecord& seg);

struct SegmentTotal {
    Int i = 0, j = 0, label = 0;
    Int total = 0;
};

struct NegativityReport {
    bool all_negative = false;
    // case I: every odd segment is met by the arc family the coverage table names;
    // case II: totals match the -1/-2 profile read off the four wrap rows around
    // the middle band (for n == 6 the profile is extrapolated, see the certificate)
    bool coverage_ok = false;
    std::vector<SegmentTotal> totals;
};

NegativityReport verify_negativity(const CurveSystem& sys, const ReferenceSystem& ref);

// structural disjointness: no two arcs share a corridor or disk band, and arcs at a
// common disk have pairwise nested or disjoint angular hulls
bool check_disjointness(const CurveSystem& sys, const ReferenceSystem& ref);

}
