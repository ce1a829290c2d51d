#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "vfc/curves.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

using namespace vfc;

namespace {

CurveSystem sys1() { return enumerate_case1(case1_tower(5, 3, 5, 20), {5, 3, 5, 20, 0}); }
CurveSystem sys2(Int n = 6) { return enumerate_case2(case2_tower(6, 3, n), {6, 3, n}); }

// every point both curves pass
std::vector<Int> shared_points(const LiftedCurve& a, const LiftedCurve& b) {
    std::vector<Int> pts;
    for (const auto& pa : a.itinerary)
        for (const auto& pb : b.itinerary)
            if (pa.point == pb.point) pts.push_back(pa.point);
    return pts;
}

}  // namespace

TEST_CASE("case I enumeration 5,3,5,20") {
    auto s = sys1();
    CHECK(s.curves.size() == 15);
    CHECK(s.points.size() == 30);  // kr interior + (n-k) shared, same as the mid cone count
    for (const auto& pt : s.points) {
        CHECK(pt.rotation_unit > 0);
        CHECK(pt.rotation_unit <= Rat(1, 2));
        CHECK(pt.rotation_sense == 1);
    }
    CHECK(s.points[(size_t)s.point_id(1, 2)].rotation_unit == Rat(1, 5));
    CHECK(s.points[(size_t)s.point_id(0, 8)].rotation_unit == Rat(1, 15));

    const auto* core = s.find(1, 1);
    REQUIRE(core != nullptr);
    CHECK(core->exceptional);
    CHECK(core->itinerary.size() == 20);
    for (const auto& ps : core->itinerary) CHECK(ps.angle == 0);

    // worked angle values at a shared point
    Int pt = s.point_id(0, 6);
    CHECK(angle_between(s, *core, *s.find(2, 1), pt) == Rat(1, 15));
    CHECK(angle_between(s, *core, *s.find(1, 2), pt) == Rat(1, 5));
    CHECK(angle_between(s, *core, *s.find(3, 5), pt) == Rat(2, 15) + Rat(4, 5));

    // same-row offsets at an interior point do not see the row index
    Int ipt = s.point_id(2, 3);
    CHECK(angle_between(s, *s.find(2, 1), *s.find(2, 4), ipt) == Rat(3, 5));
    CHECK(s.point_id(0, 3) == -1);  // slots <= k are interior only

    for (const auto& c : s.curves) {
        CHECK(c.itinerary.size() == 20);
        for (const auto& ps : c.itinerary) CHECK((2 * 5 * 3) % ps.angle.denominator() == 0);
    }
}

TEST_CASE("case II enumeration 3,6") {
    auto s = sys2();
    CHECK(s.curves.size() == 18);
    CHECK(s.points.size() == 6);
    CHECK(s.points[(size_t)s.point_id(0, 3)].rotation_sense == -1);
    CHECK(s.points[(size_t)s.point_id(0, 2)].rotation_sense == 1);
    for (const auto& pt : s.points) CHECK(pt.rotation_unit == Rat(1, 3));

    for (const auto& c : s.curves) {
        CHECK(c.itinerary.size() == 2);
        CHECK(c.exceptional == (c.i % 2 == 1 && c.j == 1));
        for (const auto& ps : c.itinerary) CHECK((4 * 3) % ps.angle.denominator() == 0);
    }

    // the band cores chain around the circle a quarter unit apart
    for (Int i = 1; i <= 6; i++) {
        Int inext = i % 6 + 1;
        Int pt = s.point_id(0, inext);
        CHECK(angle_between(s, *s.find(i, 1), *s.find(inext, 1), pt) == Rat(1, 12));
    }

    // sensed j-offsets from a core to the next row
    for (Int i = 1; i <= 6; i++) {
        Int inext = i % 6 + 1;
        Int sense = s.points[(size_t)s.point_id(0, inext)].rotation_sense;
        for (Int j = 2; j <= 3; j++) {
            Rat got = angle_between(s, *s.find(i, 1), *s.find(inext, j), s.point_id(0, inext));
            CHECK(got == mod1(Rat(1, 12) + Rat(sense * (j - 1), 3)));
        }
    }
}

TEST_CASE("crossing sign convention") {
    CHECK(intersection_sign(Rat(0), Rat(1, 15)) == -1);
    CHECK(intersection_sign(Rat(0), Rat(14, 15)) == 1);
    CHECK(intersection_sign(Rat(1, 3), Rat(1, 15)) == 1);  // turn 11/15
    CHECK_THROWS(intersection_sign(Rat(1, 4), Rat(1, 4)));
    CHECK_THROWS(intersection_sign(Rat(1, 4), Rat(3, 4)));
}

TEST_CASE("angle complement and sign antisymmetry on both examples") {
    const CurveSystem systems[] = {reorient(sys1()), reorient(sys2())};
    // 30 same-row pairs x 20 points + 75 cross-row x 15; 18 same-row x 2 + 54 adjacent x 1
    const size_t expected[] = {1725, 90};
    for (int which = 0; which < 2; which++) {
        const auto& s = systems[which];
        size_t pairs = 0;
        for (size_t a = 0; a < s.curves.size(); a++)
            for (size_t b = a + 1; b < s.curves.size(); b++)
                for (Int pt : shared_points(s.curves[a], s.curves[b])) {
                    Rat ab = angle_between(s, s.curves[a], s.curves[b], pt);
                    Rat ba = angle_between(s, s.curves[b], s.curves[a], pt);
                    CHECK(ab != 0);
                    CHECK(ba != 0);
                    CHECK(mod1(ab + ba) == 0);
                    CHECK(intersection_sign(s, s.curves[a], s.curves[b], pt) ==
                          -intersection_sign(s, s.curves[b], s.curves[a], pt));
                    pairs++;
                }
        CHECK(pairs == expected[which]);
    }
}

TEST_CASE("sign oracle: planar cross product of unit tangents") {
    for (auto s : {sys1(), reorient(sys1()), sys2(), reorient(sys2())}) {
        for (size_t a = 0; a < s.curves.size(); a++)
            for (size_t b = 0; b < s.curves.size(); b++) {
                if (a == b) continue;
                for (Int pt : shared_points(s.curves[a], s.curves[b])) {
                    double ta = 2 * M_PI * to_double(s.passage_at(s.curves[a], pt)->angle);
                    double tb = 2 * M_PI * to_double(s.passage_at(s.curves[b], pt)->angle);
                    double cross = std::cos(ta) * std::sin(tb) - std::sin(ta) * std::cos(tb);
                    REQUIRE(std::fabs(cross) > 1e-9);
                    CHECK(intersection_sign(s, s.curves[a], s.curves[b], pt) == (cross < 0 ? 1 : -1));
                }
            }
    }
}

TEST_CASE("case I flip set 5,3") {
    std::set<std::pair<Int, Int>> flips;
    for (Int i = 1; i <= 3; i++)
        for (Int j = 1; j <= 5; j++)
            if (case1_flip({5, 3, 5, 20, 0}, i, j)) flips.insert({i, j});
    std::set<std::pair<Int, Int>> want = {{2, 1}, {3, 1}, {1, 2}, {2, 2}, {3, 2}, {1, 3}, {2, 3}};
    CHECK(flips == want);
}

TEST_CASE("case II flip sets") {
    // 4|n: all small-j curves plus the 4i-2 cores' companions
    std::set<std::pair<Int, Int>> flips8;
    for (Int i = 1; i <= 8; i++)
        for (Int j = 1; j <= 3; j++)
            if (case2_flip({6, 3, 8}, i, j)) flips8.insert({i, j});
    std::set<std::pair<Int, Int>> want8;
    for (Int i = 1; i <= 8; i++) want8.insert({i, 2});
    want8.insert({2, 1});
    want8.insert({6, 1});
    CHECK(flips8 == want8);

    std::set<std::pair<Int, Int>> flips6;
    for (Int i = 1; i <= 6; i++)
        for (Int j = 1; j <= 3; j++)
            if (case2_flip({6, 3, 6}, i, j)) flips6.insert({i, j});
    std::set<std::pair<Int, Int>> want6;
    for (Int i = 1; i <= 6; i++) want6.insert({i, 2});
    want6.insert({2, 1});
    want6.insert({4, 1});
    CHECK(flips6 == want6);

    // the j=1 rule matches the sign table: flip an even row exactly when its own point
    // rotates counterclockwise
    for (Int n : {4, 6, 8, 10, 12, 14}) {
        auto tw = case2_tower(6, 3, n);
        for (Int i = 2; i <= n; i += 2)
            CHECK(case2_flip({6, 3, n}, i, 1) == (tw.hom2_signs[(size_t)(i - 1)] == 1));
        // adjacent signs around an even point always disagree, so the two tables
        // an even row appears in never conflict
        for (Int v = 2; v <= n; v += 2)
            CHECK(tw.hom2_signs[(size_t)(v % n)] == -tw.hom2_signs[(size_t)(v - 1)]);
    }
}

TEST_CASE("reorientation flags, involution, guard") {
    auto base = sys1();
    auto s = reorient(base);
    CHECK(s.reoriented);
    CHECK_THROWS(reorient(s));

    int flipped = 0;
    for (size_t c = 0; c < s.curves.size(); c++) {
        bool f = s.curves[c].orientation_flag < 0;
        flipped += f;
        for (size_t t = 0; t < s.curves[c].itinerary.size(); t++) {
            Rat want = f ? mod1(base.curves[c].itinerary[t].angle + Rat(1, 2))
                         : base.curves[c].itinerary[t].angle;
            CHECK(s.curves[c].itinerary[t].angle == want);
        }
    }
    CHECK(flipped == 7);

    // a second half-turn on the same set restores the original system
    for (auto& c : s.curves) {
        if (c.orientation_flag > 0) continue;
        c.orientation_flag = -c.orientation_flag;
        for (auto& ps : c.itinerary) ps.angle = mod1(ps.angle + Rat(1, 2));
    }
    for (size_t c = 0; c < s.curves.size(); c++) {
        CHECK(s.curves[c].orientation_flag == 1);
        for (size_t t = 0; t < s.curves[c].itinerary.size(); t++)
            CHECK(s.curves[c].itinerary[t].angle == base.curves[c].itinerary[t].angle);
    }
}

TEST_CASE("case I reorientation postconditions") {
    auto s = reorient(sys1());
    const auto* core = s.find(1, 1);

    // every other curve crosses the core band leftward at every shared point
    for (const auto& c : s.curves) {
        if (c.exceptional) continue;
        for (Int pt : shared_points(*core, c)) {
            Rat a = angle_between(s, *core, c, pt);
            CHECK(a > Rat(1, 2));
            CHECK(a < 1);
        }
    }

    // rows 2..r: measured from the row's late curve, all companions sit in the
    // back half plane at the interior points
    for (Int i = 2; i <= 3; i++) {
        Int jref = i <= 2 ? 3 : 5;  // (p+1)/2 up to the middle row, p after
        for (Int l = 1; l <= 5; l++) {
            Int pt = s.point_id(i, l);
            for (Int j = 1; j <= 5; j++) {
                if (j == jref) continue;
                Rat a = angle_between(s, *s.find(i, jref), *s.find(i, j), pt);
                CHECK(a > Rat(1, 2));
                CHECK(a < 1);
            }
        }
    }
}

TEST_CASE("case II reorientation postconditions at 3,6 3,8 3,10") {
    for (Int n : {6, 8, 10}) {
        auto s = reorient(sys2(n));
        for (Int v = 1; v <= n; v++) {
            Int pt = s.point_id(0, v);
            Int sense = s.points[(size_t)pt].rotation_sense;
            const auto* core = s.find(v % 2 == 1 ? v : v - 1, 1);
            REQUIRE(core->exceptional);
            for (const auto& c : s.curves) {
                if (c.i == core->i && c.j == core->j) continue;
                if (!s.passage_at(c, pt)) continue;
                CHECK(intersection_sign(s, *core, c, pt) == sense);
            }
        }
    }
}

TEST_CASE("intersection counts") {
    auto s = sys1();
    const auto* core = s.find(1, 1);
    for (const auto& c : s.curves) {
        if (c.exceptional) continue;
        CHECK(shared_points(*core, c).size() == (c.i == 1 ? 20u : 15u));
    }
    CHECK(shared_points(*s.find(2, 1), *s.find(2, 4)).size() == 20);
    CHECK(shared_points(*s.find(2, 1), *s.find(3, 4)).size() == 15);

    auto t = sys2();
    for (const auto& a : t.curves)
        for (const auto& b : t.curves) {
            if (a.i == b.i && a.j == b.j) continue;
            Int gap = std::min((a.i - b.i + 6) % 6, (b.i - a.i + 6) % 6);
            size_t want = a.i == b.i ? 2 : (gap == 1 ? 1 : 0);
            CHECK(shared_points(a, b).size() == want);
        }
}

namespace {

// the published endpoint tables for the odd case I segments, transcribed as predicates
// on (i, j, l); R and P are the midpoints (r+1)/2 and (p+1)/2
struct EndpointTables {
    Int p, r, k, n;
    Int R() const { return (r + 1) / 2; }
    Int P() const { return (p + 1) / 2; }

    bool head_on_minus(Int i, Int j, Int l) const {
        if (i == 1) return j > 1;
        bool low = (i <= R()) ? (j <= P()) : (j < P());
        if (low) return l == 1 || (l >= k + 2 && l <= n);
        return l >= k + 1 && l <= n;
    }
    bool tail_on_plus(Int i, Int j, Int l) const {
        if (i == 1) return j > 1;
        bool low = (i <= R()) ? (j <= P()) : (j < P());
        if (low) return l >= k + 1 && l <= n;
        return l == 1 || (l >= k + 2 && l <= n);
    }
    // fiber circle slot the head lands on, or 0 when the head is on a torus
    Int head_slot(Int i, Int j, Int l) const {
        if (i == 1) return 0;
        bool low = (i <= R()) ? (j <= P()) : (j < P());
        if (low && l >= 2 && l <= k + 1) return l - 1;
        if (!low && l >= 1 && l <= k) return l;
        return 0;
    }
    Int tail_slot(Int i, Int j, Int l) const {
        if (i == 1) return 0;
        bool low = (i <= R()) ? (j <= P()) : (j < P());
        if (low && l >= 1 && l <= k) return l;
        if (!low && l >= 2 && l <= k + 1) return l - 1;
        return 0;
    }
};

}  // namespace

TEST_CASE("case I endpoint tables at 5,3,5,20") {
    auto s = reorient(sys1());
    auto recs = decompose_segments(s);
    EndpointTables tab{5, 3, 5, 20};

    size_t odd = 0;
    for (const auto& rec : recs) {
        if (rec.index % 2 == 0) continue;
        odd++;
        Int l = (rec.index + 1) / 2;
        bool beta_head = tab.head_on_minus(rec.i, rec.j, l);
        bool beta_tail = tab.tail_on_plus(rec.i, rec.j, l);
        // the tables partition every odd segment's ends between the tori and the fibers
        CHECK(beta_head != (tab.head_slot(rec.i, rec.j, l) != 0));
        CHECK(beta_tail != (tab.tail_slot(rec.i, rec.j, l) != 0));

        if (beta_head) {
            CHECK(rec.end == SegmentEndpoint{SegmentEndpoint::Kind::Beta, 1, -1, 0, 0});
        } else {
            CHECK(rec.end.kind == SegmentEndpoint::Kind::Fiber);
            CHECK(rec.end.row == rec.i);
            CHECK(rec.end.slot == tab.head_slot(rec.i, rec.j, l));
        }
        if (beta_tail) {
            CHECK(rec.start == SegmentEndpoint{SegmentEndpoint::Kind::Beta, 1, +1, 0, 0});
        } else {
            CHECK(rec.start.kind == SegmentEndpoint::Kind::Fiber);
            CHECK(rec.start.row == rec.i);
            CHECK(rec.start.slot == tab.tail_slot(rec.i, rec.j, l));
        }
    }
    CHECK(odd == 4 * 20 + 10 * 20);  // n odd segments for every non-core curve
}

TEST_CASE("case I segment structure at 5,3,5,20") {
    auto s = reorient(sys1());
    auto recs = decompose_segments(s);

    std::map<std::pair<Int, Int>, std::vector<SegmentRecord>> by_curve;
    for (const auto& rec : recs) by_curve[{rec.i, rec.j}].push_back(rec);
    CHECK(by_curve.size() == 14);
    CHECK(by_curve.count({1, 1}) == 0);

    for (auto& [key, segs] : by_curve) {
        CHECK(segs.size() == (key.first == 1 ? 40u : 35u));
        std::set<Int> labels;
        for (const auto& rec : segs) {
            labels.insert(rec.index);
            CHECK((rec.region == SegmentRecord::Region::F2) == (rec.index % 2 == 0));
            if (rec.region == SegmentRecord::Region::F2) {
                CHECK(rec.band == 1);
                CHECK(rec.point >= 0);
                CHECK(rec.start == SegmentEndpoint{SegmentEndpoint::Kind::Beta, 1, -1, 0, 0});
                CHECK(rec.end == SegmentEndpoint{SegmentEndpoint::Kind::Beta, 1, +1, 0, 0});
            }
        }
        CHECK((Int)labels.size() == (Int)segs.size());
        if (key.first > 1) {
            for (Int l = 1; l <= 20; l++) CHECK(labels.count(2 * l - 1) == 1);
            for (Int l = 1; l <= 5; l++) CHECK(labels.count(2 * l) == 0);
            for (Int l = 6; l <= 20; l++) CHECK(labels.count(2 * l) == 1);
        }
    }

    // band passages hold the right points, in particular the own-row interior ones for row 1
    for (const auto& rec : recs) {
        if (rec.region != SegmentRecord::Region::F2) continue;
        Int l = rec.index / 2;
        const auto& pt = s.points[(size_t)rec.point];
        if (rec.i == 1 && l <= 5) {
            CHECK(pt.row == 1);
            CHECK(pt.index == l);
        } else {
            CHECK(pt.row == 0);
            CHECK(pt.index == l);
        }
    }

    CHECK_THROWS(decompose_segments(sys1()));  // sides are defined only after reorienting
}

TEST_CASE("case II segment records match the published sides") {
    for (Int n : {6, 8}) {
        auto s = reorient(sys2(n));
        auto recs = decompose_segments(s);
        CHECK(recs.size() == (size_t)(4 * (n / 2 * 3 + n / 2 * 2)));  // even rows m, odd rows m-1

        auto sgn = [&](Int v) { return s.points[(size_t)s.point_id(0, ((v - 1) % n + n) % n + 1)].rotation_sense; };

        std::map<std::tuple<Int, Int, Int>, SegmentRecord> at;
        for (const auto& rec : recs) at[{rec.i, rec.j, rec.index}] = rec;

        for (const auto& c : s.curves) {
            if (c.exceptional) continue;
            auto p1 = at.at({c.i, c.j, 1}), p2 = at.at({c.i, c.j, 2});
            auto p3 = at.at({c.i, c.j, 3}), p4 = at.at({c.i, c.j, 4});
            CHECK(p1.region == SegmentRecord::Region::F1);
            CHECK(p3.region == SegmentRecord::Region::F1);
            CHECK(p2.region == SegmentRecord::Region::F2);
            CHECK(p4.region == SegmentRecord::Region::F2);

            if (c.i % 2 == 1) {
                Int b = (c.i + 1) / 2;
                Int s1 = sgn(c.i), s2 = sgn(c.i + 1);
                CHECK(s.points[(size_t)p2.point].index == c.i);
                CHECK(s.points[(size_t)p4.point].index == c.i + 1);
                CHECK(p2.band == b);
                CHECK(p4.band == b);
                // the four sign patterns of the published table
                auto B = [&](Int side) { return SegmentEndpoint{SegmentEndpoint::Kind::Beta, b, side, 0, 0}; };
                if (s1 == 1 && s2 == 1) {
                    CHECK(p1.start == B(+1)); CHECK(p1.end == B(-1));
                    CHECK(p3.start == B(+1)); CHECK(p3.end == B(-1));
                } else if (s1 == -1 && s2 == -1) {
                    CHECK(p1.start == B(-1)); CHECK(p1.end == B(+1));
                    CHECK(p3.start == B(-1)); CHECK(p3.end == B(+1));
                } else if (s1 == -1 && s2 == 1) {
                    CHECK(p1.start == B(+1)); CHECK(p1.end == B(+1));
                    CHECK(p3.start == B(-1)); CHECK(p3.end == B(-1));
                } else {
                    CHECK(p1.start == B(-1)); CHECK(p1.end == B(-1));
                    CHECK(p3.start == B(+1)); CHECK(p3.end == B(+1));
                }
            } else {
                Int b = c.i / 2, bn = b % (n / 2) + 1;
                Int s0 = sgn(c.i), s1 = sgn(c.i + 1);
                CHECK(s.points[(size_t)p4.point].index == c.i);
                CHECK(s.points[(size_t)p2.point].index == c.i % n + 1);
                CHECK(p4.band == b);
                CHECK(p2.band == bn);
                REQUIRE(s1 == -s0);
                auto B = [&](Int band, Int side) {
                    return SegmentEndpoint{SegmentEndpoint::Kind::Beta, band, side, 0, 0};
                };
                if (s0 == 1) {  // next point turns clockwise
                    CHECK(p1.start == B(b, +1)); CHECK(p1.end == B(bn, +1));
                    CHECK(p3.start == B(bn, -1)); CHECK(p3.end == B(b, -1));
                } else {
                    CHECK(p1.start == B(b, -1)); CHECK(p1.end == B(bn, -1));
                    CHECK(p3.start == B(bn, +1)); CHECK(p3.end == B(b, +1));
                }
            }

            // passages run - to + exactly at counterclockwise points
            for (const auto& rec : {p2, p4}) {
                Int sense = s.points[(size_t)rec.point].rotation_sense;
                CHECK(rec.start.side == (sense == 1 ? -1 : +1));
                CHECK(rec.end.side == (sense == 1 ? +1 : -1));
            }
        }
    }
}

TEST_CASE("segments never chain two band passages") {
    auto s = reorient(sys1());
    auto recs = decompose_segments(s);
    std::map<std::pair<Int, Int>, std::vector<SegmentRecord>> by_curve;
    for (const auto& rec : recs) by_curve[{rec.i, rec.j}].push_back(rec);
    for (auto& [key, segs] : by_curve) {
        std::sort(segs.begin(), segs.end(),
                  [](const SegmentRecord& a, const SegmentRecord& b) { return a.index < b.index; });
        for (size_t t = 0; t < segs.size(); t++) {
            const auto& cur = segs[t];
            const auto& nxt = segs[(t + 1) % segs.size()];
            CHECK(!(cur.region == SegmentRecord::Region::F2 && nxt.region == SegmentRecord::Region::F2));
        }
        if (key.first == 1)  // row-one curves alternate strictly
            for (size_t t = 0; t < segs.size(); t++)
                CHECK((segs[t].region == SegmentRecord::Region::F2) ==
                      (segs[(t + 1) % segs.size()].region == SegmentRecord::Region::F1));
    }
}

TEST_CASE("double cover labels") {
    auto s1 = double_cover_labels(reorient(sys1()));
    CHECK(s1.curves.size() == 30);
    std::set<std::tuple<Int, Int, Int>> seen1;
    for (const auto& c : s1.curves) {
        CHECK(c.cover_t == 0);
        CHECK((c.sheet == 1 || c.sheet == 2));
        seen1.insert({c.i, c.j, c.sheet});
    }
    CHECK(seen1.size() == 30);
    CHECK_THROWS(double_cover_labels(s1));

    auto s2 = double_cover_labels(reorient(sys2()));
    CHECK(s2.curves.size() == 72);
    std::set<std::tuple<Int, Int, Int, Int>> seen2;
    for (const auto& c : s2.curves) {
        CHECK((c.cover_t == 1 || c.cover_t == 2));
        CHECK((c.sheet == 1 || c.sheet == 2));
        seen2.insert({c.i, c.j, c.cover_t, c.sheet});
    }
    CHECK(seen2.size() == 72);

    // angle data is shared between the copies of a curve
    const auto* a = s1.find(2, 3);
    for (const auto& c : s1.curves)
        if (c.i == 2 && c.j == 3)
            for (size_t t = 0; t < c.itinerary.size(); t++)
                CHECK(c.itinerary[t].angle == a->itinerary[t].angle);
}

TEST_CASE("m=1 degenerate case II still decomposes") {
    auto s = reorient(enumerate_case2(case2_tower(2, 1, 6), {2, 1, 6}));
    CHECK(s.curves.size() == 6);
    int flipped = 0;
    for (const auto& c : s.curves) flipped += c.orientation_flag < 0;
    CHECK(flipped == 2);  // rows 2 and 4
    auto recs = decompose_segments(s);
    CHECK(recs.size() == 12);  // the three even rows, four parts each
    for (const auto& rec : recs) CHECK(rec.i % 2 == 0);
}

TEST_CASE("two component variant flag") {
    CHECK(singular_points_per_annulus(false) == 2);
    CHECK(singular_points_per_annulus(true) == 1);
}
