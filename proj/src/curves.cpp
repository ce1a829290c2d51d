#include "vfc/curves.hpp"

#include <algorithm>
#include <stdexcept>

namespace vfc {

std::string MarkedPoint::name() const {
    if (row == 0) return "c^_" + std::to_string(index);
    return "c^_" + std::to_string(row) + "," + std::to_string(index);
}

Int CurveSystem::point_id(Int row, Int index) const {
    for (size_t t = 0; t < points.size(); t++)
        if (points[t].row == row && points[t].index == index) return (Int)t;
    return -1;
}

const LiftedCurve* CurveSystem::find(Int i, Int j) const {
    for (const auto& c : curves)
        if (c.i == i && c.j == j) return &c;
    return nullptr;
}

const Passage* CurveSystem::passage_at(const LiftedCurve& c, Int point) const {
    for (const auto& ps : c.itinerary)
        if (ps.point == point) return &ps;
    return nullptr;
}

CurveSystem enumerate_case1(const CoverTower& tw, const CaseIParams& cp) {
    Int p = cp.p, r = cp.r, k = cp.k, n = cp.n;
    if ((Int)tw.base.cone_orders.size() != n || tw.d1 != r || tw.d2 != p)
        throw std::invalid_argument("tower does not match the case I parameters");

    CurveSystem sys;
    sys.kind = CaseMatch::Kind::I;
    sys.p = p;
    sys.r = r;
    sys.k = k;
    sys.n = n;

    // interior points row by row, then the shared points; mid_index follows the
    // tower's base-slot-major cone order
    for (Int i = 1; i <= r; i++)
        for (Int s = 1; s <= k; s++)
            sys.points.push_back({i, s, Rat(1, p), 1, (s - 1) * r + (i - 1)});
    for (Int l = k + 1; l <= n; l++)
        sys.points.push_back({0, l, Rat(1, p * r), 1, k * r + (l - k - 1)});

    for (Int i = 1; i <= r; i++) {
        for (Int j = 1; j <= p; j++) {
            LiftedCurve c;
            c.i = i;
            c.j = j;
            c.exceptional = (i == 1 && j == 1);
            for (Int s = 1; s <= k; s++)
                c.itinerary.push_back({sys.point_id(i, s), mod1(Rat(j - 1, p))});
            for (Int l = k + 1; l <= n; l++)
                c.itinerary.push_back({sys.point_id(0, l), mod1(Rat(i - 1, p * r) + Rat(j - 1, p))});
            sys.curves.push_back(std::move(c));
        }
    }
    return sys;
}

CurveSystem enumerate_case2(const CoverTower& tw, const CaseIIParams& cp) {
    Int m = cp.m, n = cp.n;
    if ((Int)tw.hom2_signs.size() != n || tw.d2 != m)
        throw std::invalid_argument("tower does not match the case II parameters");

    CurveSystem sys;
    sys.kind = CaseMatch::Kind::II;
    sys.m = m;
    sys.n = n;
    sys.p = cp.p;

    for (Int v = 1; v <= n; v++)
        sys.points.push_back({0, v, Rat(1, m), tw.hom2_signs[(size_t)(v - 1)], v - 1});

    // angle of the row-i curve j at point v, relative to the band core through v:
    // own-row position gets 0 (v odd) or +1/(4m) (v even), the lower-row position
    // -1/(4m) (v odd) or 0 (v even), plus the sensed j-offset
    auto angle = [&](Int v, bool own_row, Int j) {
        Int sense = tw.hom2_signs[(size_t)(v - 1)];
        Rat a = Rat(sense * (j - 1), m);
        if (v % 2 == 1 && !own_row) a -= Rat(1, 4 * m);
        if (v % 2 == 0 && own_row) a += Rat(1, 4 * m);
        return mod1(a);
    };

    for (Int i = 1; i <= n; i++) {
        for (Int j = 1; j <= m; j++) {
            LiftedCurve c;
            c.i = i;
            c.j = j;
            c.exceptional = (i % 2 == 1 && j == 1);
            Int v2 = i % n + 1;
            c.itinerary.push_back({sys.point_id(0, i), angle(i, true, j)});
            c.itinerary.push_back({sys.point_id(0, v2), angle(v2, false, j)});
            sys.curves.push_back(std::move(c));
        }
    }
    return sys;
}

int intersection_sign(const Rat& from_angle, const Rat& to_angle) {
    Rat d = mod1(to_angle - from_angle);
    if (d == 0 || d == Rat(1, 2))
        throw std::invalid_argument("tangent directions coincide; crossing sign undefined");
    return d > Rat(1, 2) ? 1 : -1;
}

int intersection_sign(const CurveSystem& sys, const LiftedCurve& a, const LiftedCurve& b, Int point) {
    return intersection_sign(Rat(0), angle_between(sys, a, b, point));
}

Rat angle_between(const CurveSystem& sys, const LiftedCurve& a, const LiftedCurve& b, Int point) {
    const Passage* pa = sys.passage_at(a, point);
    const Passage* pb = sys.passage_at(b, point);
    if (!pa || !pb)
        throw std::invalid_argument("curves do not both pass " + sys.points[(size_t)point].name());
    return mod1(pb->angle - pa->angle);
}

bool case1_flip(const CaseIParams& cp, Int i, Int j) {
    if (i == 1 && j == 1) return false;
    // the order is j-major; flip everything strictly after (1,1) and at or
    // before ((r+1)/2, (p+1)/2)
    Int jm = (cp.p + 1) / 2, im = (cp.r + 1) / 2;
    return j < jm || (j == jm && i <= im);
}

bool case2_flip(const CaseIIParams& cp, Int i, Int j) {
    if (j > 1) return j <= (cp.m + 1) / 2;
    if (i % 2 == 1) return false;  // band cores keep their orientation
    if (cp.n % 4 == 0) return i % 4 == 2;
    return (i <= cp.n / 2) ? (i % 4 == 2) : (i % 4 == 0);
}

CurveSystem reorient(CurveSystem sys) {
    if (sys.reoriented) throw std::logic_error("system already reoriented");
    for (auto& c : sys.curves) {
        bool flip = sys.kind == CaseMatch::Kind::I
                        ? case1_flip({sys.p, sys.r, sys.k, sys.n, 0}, c.i, c.j)
                        : case2_flip({sys.p, sys.m, sys.n}, c.i, c.j);
        if (!flip) continue;
        c.orientation_flag = -c.orientation_flag;
        for (auto& ps : c.itinerary) ps.angle = mod1(ps.angle + Rat(1, 2));
    }
    sys.reoriented = true;
    return sys;
}

namespace {

SegmentEndpoint beta(Int band, Int side) {
    SegmentEndpoint e;
    e.kind = SegmentEndpoint::Kind::Beta;
    e.band = band;
    e.side = side;
    return e;
}

SegmentEndpoint fiber(Int row, Int slot) {
    SegmentEndpoint e;
    e.kind = SegmentEndpoint::Kind::Fiber;
    e.row = row;
    e.slot = slot;
    return e;
}

void case1_segments(const CurveSystem& sys, const LiftedCurve& c, std::vector<SegmentRecord>& out) {
    Int k = sys.k, n = sys.n;
    bool flip = c.orientation_flag < 0;
    auto push = [&](Int index, SegmentRecord::Region reg, Int point, SegmentEndpoint a, SegmentEndpoint b) {
        SegmentRecord rec;
        rec.i = c.i;
        rec.j = c.j;
        rec.index = index;
        rec.region = reg;
        rec.band = reg == SegmentRecord::Region::F2 ? 1 : 0;
        rec.point = point;
        rec.start = a;
        rec.end = b;
        out.push_back(rec);
    };

    if (c.i == 1) {
        // 2n segments; every band passage runs beta_- -> beta_+ after reorientation
        for (Int l = 1; l <= n; l++) {
            Int pt = l <= k ? sys.point_id(1, l) : sys.point_id(0, l);
            push(2 * l, SegmentRecord::Region::F2, pt, beta(1, -1), beta(1, +1));
            push(2 * l - 1, SegmentRecord::Region::F1, -1, beta(1, +1), beta(1, -1));
        }
        return;
    }

    for (Int l = k + 1; l <= n; l++)
        push(2 * l, SegmentRecord::Region::F2, sys.point_id(0, l), beta(1, -1), beta(1, +1));
    // the complementary arc through the own-row interior points is subdivided by them;
    // a flipped curve passes them in decreasing slot order
    push(1, SegmentRecord::Region::F1, -1,
         flip ? fiber(c.i, 1) : beta(1, +1),
         flip ? beta(1, -1) : fiber(c.i, 1));
    for (Int l = 1; l < k; l++)
        push(2 * l + 1, SegmentRecord::Region::F1, -1,
             fiber(c.i, flip ? l + 1 : l),
             fiber(c.i, flip ? l : l + 1));
    push(2 * k + 1, SegmentRecord::Region::F1, -1,
         flip ? beta(1, +1) : fiber(c.i, k),
         flip ? fiber(c.i, k) : beta(1, -1));
    for (Int l = k + 1; l < n; l++)
        push(2 * l + 1, SegmentRecord::Region::F1, -1, beta(1, +1), beta(1, -1));
}

void case2_segments(const CurveSystem& sys, const LiftedCurve& c, std::vector<SegmentRecord>& out) {
    Int n = sys.n;
    auto sense = [&](Int v) { return sys.points[(size_t)sys.point_id(0, v)].rotation_sense; };
    auto push = [&](Int index, SegmentRecord::Region reg, Int band, Int point, SegmentEndpoint a,
                    SegmentEndpoint b) {
        SegmentRecord rec;
        rec.i = c.i;
        rec.j = c.j;
        rec.index = index;
        rec.region = reg;
        rec.band = band;
        rec.point = point;
        rec.start = a;
        rec.end = b;
        out.push_back(rec);
    };
    // a passage at v runs beta_- -> beta_+ exactly when the sense there is positive
    auto entry = [&](Int v) { return sense(v) > 0 ? -1 : +1; };
    auto exit = [&](Int v) { return sense(v) > 0 ? +1 : -1; };

    // part 2 holds the first point met along the new orientation, part 4 the second
    Int v2, v4, band2, band4;
    if (c.i % 2 == 1) {
        v2 = c.i;
        v4 = c.i % n + 1;
        band2 = band4 = (c.i + 1) / 2;
    } else {
        v2 = c.i % n + 1;
        v4 = c.i;
        band4 = c.i / 2;
        band2 = band4 % (n / 2) + 1;
    }
    push(2, SegmentRecord::Region::F2, band2, sys.point_id(0, v2),
         beta(band2, entry(v2)), beta(band2, exit(v2)));
    push(4, SegmentRecord::Region::F2, band4, sys.point_id(0, v4),
         beta(band4, entry(v4)), beta(band4, exit(v4)));
    push(1, SegmentRecord::Region::F1, 0, -1, beta(band4, exit(v4)), beta(band2, entry(v2)));
    push(3, SegmentRecord::Region::F1, 0, -1, beta(band2, exit(v2)), beta(band4, entry(v4)));
}

}  // namespace

std::vector<SegmentRecord> decompose_segments(const CurveSystem& sys) {
    if (!sys.reoriented) throw std::logic_error("segment sides need the reoriented system");
    std::vector<SegmentRecord> out;
    for (const auto& c : sys.curves) {
        if (c.exceptional) continue;
        if (sys.kind == CaseMatch::Kind::I)
            case1_segments(sys, c, out);
        else
            case2_segments(sys, c, out);
    }
    return out;
}

CurveSystem double_cover_labels(CurveSystem sys) {
    if (sys.doubled) throw std::logic_error("labels already doubled");
    std::vector<LiftedCurve> doubled;
    for (const auto& c : sys.curves) {
        if (sys.kind == CaseMatch::Kind::I) {
            for (Int s = 1; s <= 2; s++) {
                LiftedCurve d = c;
                d.sheet = s;
                doubled.push_back(std::move(d));
            }
        } else {
            // each starred curve is trivially double covered upstairs before the
            // two-sheet split, so four labels per curve
            for (Int t = 1; t <= 2; t++)
                for (Int s = 1; s <= 2; s++) {
                    LiftedCurve d = c;
                    d.cover_t = t;
                    d.sheet = s;
                    doubled.push_back(std::move(d));
                }
        }
    }
    sys.curves = std::move(doubled);
    sys.doubled = true;
    return sys;
}

}
