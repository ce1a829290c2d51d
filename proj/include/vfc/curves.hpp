// lifted curve systems on the top cover surface: exact rational crossing angles,
// reorientation, segment decomposition against the fibered bands, double-cover labels
#pragma once

#include "vfc/rational.hpp"
#include "vfc/tangles.hpp"
#include "vfc/tower.hpp"

#include <string>
#include <vector>

namespace vfc {

// a point of the top surface where lifted curves cross (preimage of a cone point)
struct MarkedPoint {
    Int row = 0;            // 0: shared by several curve rows; i > 0: interior to row i (case I)
    Int index = 0;          // c^_l / c^_v index, or the slot s <= k for interior points
    Rat rotation_unit;      // local deck-rotation granularity, in turns
    Int rotation_sense = 1; // +1 counterclockwise, -1 clockwise (case II sign table)
    Int mid_index = 0;      // position of the underlying cone point in the mid orbifold's list
    std::string name() const;
};

struct Passage {
    Int point = 0;  // index into CurveSystem::points
    Rat angle;      // tangent direction in [0,1) turns, relative to the local reference curve
};

struct LiftedCurve {
    Int i = 1, j = 1;
    Int cover_t = 0;            // case II trivial-cover sheet (1,2), 0 before labeling
    Int sheet = 0;              // double-cover sheet s (1,2), 0 before labeling
    Int orientation_flag = 1;   // -1 after a reorientation flip
    bool exceptional = false;   // a band core: (1,1) in case I, odd rows j=1 in case II
    std::vector<Passage> itinerary;  // in travel order along the original orientation
};

struct CurveSystem {
    CaseMatch::Kind kind = CaseMatch::Kind::None;
    Int p = 0, r = 0, k = 0, n = 0, m = 0;  // case I uses p,r,k,n; case II m,n (p = 2m)
    std::vector<MarkedPoint> points;
    std::vector<LiftedCurve> curves;
    bool reoriented = false;
    bool doubled = false;

    Int point_id(Int row, Int index) const;  // -1 when absent
    const LiftedCurve* find(Int i, Int j) const;
    const Passage* passage_at(const LiftedCurve& c, Int point) const;
};

// pr curves; angles (i-1)/(pr) + (j-1)/p at the shared points and (j-1)/p at the
// interior points of the own row, all relative to the j=1 curve of the reference row
CurveSystem enumerate_case1(const CoverTower& tw, const CaseIParams& cp);

// nm curves, each through two adjacent points; quarter-unit offsets between
// neighbouring rows, with the per-point rotation sense from the tower's sign table
CurveSystem enumerate_case2(const CoverTower& tw, const CaseIIParams& cp);

// sign of a transverse crossing: +1 iff the turn from `from` to `to` lies in (1/2, 1);
// throws on a tangent pair (turn 0 or 1/2)
int intersection_sign(const Rat& from_angle, const Rat& to_angle);
int intersection_sign(const CurveSystem& sys, const LiftedCurve& a, const LiftedCurve& b, Int point);

// turn from a to b at a shared point; throws if either misses the point
Rat angle_between(const CurveSystem& sys, const LiftedCurve& a, const LiftedCurve& b, Int point);

// membership in the case-specific flip set
bool case1_flip(const CaseIParams& cp, Int i, Int j);
bool case2_flip(const CaseIIParams& cp, Int i, Int j);

// flips the orientation of the flip-set curves (half-turn on every passage angle);
// afterwards every crossing with a band core has the sense demanded by the construction
CurveSystem reorient(CurveSystem sys);

struct SegmentEndpoint {
    enum class Kind { Beta, Fiber };
    Kind kind = Kind::Beta;
    Int band = 1;            // which band boundary (case I has a single band)
    Int side = -1;           // -1: beta_-, +1: beta_+  (Beta kind)
    Int row = 0, slot = 0;   // the interior circle phi'_{row,slot}  (Fiber kind)
    bool operator==(const SegmentEndpoint&) const = default;
};

struct SegmentRecord {
    Int i = 1, j = 1;        // owner curve
    Int index = 1;           // label l of the segment (L^l)*
    enum class Region { F1, F2 };
    Region region = Region::F1;
    Int band = 0;            // F2 records: which band; F1 records: 0
    Int point = -1;          // marked point inside an F2 record
    SegmentEndpoint start, end;  // in travel order under the current orientation; head = end
};

// cuts every non-exceptional curve along the band(s) around the exceptional curves;
// requires a reoriented system so the crossing directions are settled
std::vector<SegmentRecord> decompose_segments(const CurveSystem& sys);

// labels for the curves upstairs in the double cover: two sheets per curve in case I,
// trivial-cover sheets times two in case II; single application only
CurveSystem double_cover_labels(CurveSystem sys);

// interval foliations of the vertical annuli over the band segments carry two singular
// points each; the two-component variant of the construction has one
constexpr int singular_points_per_annulus(bool two_component) { return two_component ? 1 : 2; }

}
