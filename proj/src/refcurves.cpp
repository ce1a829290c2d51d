#include "vfc/refcurves.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <tuple>

namespace vfc {

namespace {

// strict j-major order on curve indices
bool before(Int ai, Int aj, Int bi, Int bj) {
    return aj != bj ? aj < bj : ai < bi;
}

std::string nm(const char* fam, Int i, Int l) {
    return std::string(fam) + std::to_string(i) + "," + std::to_string(l);
}

// shared state so every disk and corridor hands out fresh nesting bands
struct ArcFactory {
    std::map<Int, Int> disk_used;
    std::map<std::tuple<Int, Int, Int, Int>, Int> corridor_used;

    ReferenceArc disk(std::string name, Int point) {
        ReferenceArc arc;
        arc.kind = ReferenceArc::Kind::Disk;
        arc.name = std::move(name);
        arc.point = point;
        arc.band = ++disk_used[point];
        return arc;
    }

    ReferenceArc corridor(Int si, Int sj, Int pa, Int pb) {
        ReferenceArc arc;
        arc.kind = ReferenceArc::Kind::Parallel;
        arc.name = "conn";
        arc.shadow_i = si;
        arc.shadow_j = sj;
        arc.from_point = pa;
        arc.to_point = pb;
        arc.band = ++corridor_used[{si, sj, std::min(pa, pb), std::max(pa, pb)}];
        return arc;
    }
};

class Case1Builder {
public:
    explicit Case1Builder(const CurveSystem& s)
        : sys(s), p(s.p), r(s.r), k(s.k), n(s.n), R((s.r + 1) / 2), P((s.p + 1) / 2) {}

    ReferenceSystem build() {
        ReferenceSystem ref;
        ref.kind = CaseMatch::Kind::I;
        ref.n = n;
        ref.curves.push_back(boundary_parallel());
        for (Int t = 2; t <= R; t++) ref.curves.push_back(row_pair(t));
        return ref;
    }

private:
    const CurveSystem& sys;
    Int p, r, k, n, R, P;
    ArcFactory fab;

    bool head_on_minus(Int i, Int j, Int l) const {
        if (i == 1) return true;
        bool low = (i <= R) ? (j <= P) : (j < P);
        if (low) return l == 1 || l >= k + 2;
        return l >= k + 1;
    }

    ReferenceCurve boundary_parallel() {
        ReferenceCurve cur;
        cur.label = "l1";
        ReferenceArc arc;
        arc.name = "l1";
        arc.side = -1;
        arc.host_band = 1;
        for (const auto& c : sys.curves) {
            if (c.exceptional) continue;
            for (Int l = 1; l <= n; l++)
                if (head_on_minus(c.i, c.j, l)) arc.crossings.push_back({c.i, c.j, 2 * l - 1, -1});
        }
        cur.cycle.push_back(std::move(arc));
        return cur;
    }

    ReferenceArc arc_a(Int i, Int l) {
        auto arc = fab.disk(nm("a", i, l), sys.point_id(i, l));
        if (i <= R)
            arc.crossings.push_back({i, P, 2 * l + 1, -1});
        else
            arc.crossings.push_back({i, p, 2 * l - 1, -1});
        return arc;
    }

    ReferenceArc arc_b(Int i, Int l) {
        Int pa = sys.point_id(i, l);
        Int pb = i <= R ? (l == 1 ? sys.point_id(0, n) : sys.point_id(i, l - 1))
                        : (l == k ? sys.point_id(0, k + 1) : sys.point_id(i, l + 1));
        auto arc = fab.corridor(i, i <= R ? P : p, pa, pb);
        arc.name = nm("b", i, l);
        // the low branch runs through j = (p-1)/2: the 2k+1 labels there are met by
        // nothing else, so stopping one short would leave their totals at zero
        for (Int j = 1; j <= (p - 1) / 2; j++) arc.crossings.push_back({i, j, 2 * l + 1, -1});
        if (i <= R)
            for (Int j = P + 1; j <= p; j++) arc.crossings.push_back({i, j, 2 * l - 1, -1});
        else
            for (Int j = P; j <= p - 1; j++) arc.crossings.push_back({i, j, 2 * l - 1, -1});
        return arc;
    }

    ReferenceArc arc_c(Int i, Int l) {
        auto arc = fab.disk(nm("c", i, l), sys.point_id(i, l));
        if (i <= R)
            arc.crossings.push_back({i, p, 2 * l - 1, -1});
        else
            arc.crossings.push_back({i, (p - 1) / 2, 2 * l + 1, -1});
        return arc;
    }

    ReferenceArc arc_d(Int i, Int l) {
        auto arc = fab.disk(nm("d", i, l), sys.point_id(i, l));
        arc.crossings.push_back({i, (p - 1) / 2, 2 * l - 1, -1});
        arc.crossings.push_back({i, i <= R ? p : p - 1, 2 * l + 1, -1});
        return arc;
    }

    ReferenceArc arc_e(Int i, Int l) {
        auto arc = fab.disk(nm("e", i, l), sys.point_id(0, l));
        arc.crossings.push_back({i + (r - 1) / 2, p, l == k + 1 ? 2 * k + 3 : 2 * n - 1, -1});
        return arc;
    }

    // inner=true is the copy next to slot k+1; when n-k == 3 both copies share a
    // slot, so the caller has to say which one it wants rather than test l
    ReferenceArc arc_f(Int i, Int l, bool inner) {
        auto arc = fab.disk(nm("f", i, l), sys.point_id(0, l));
        Int high = inner ? 2 * k + 5 : 2 * n - 3;
        Int low = inner ? 2 * k + 3 : 2 * n - 1;
        // every f arc at this disk sweeps the same strands, one band further out each time
        for (Int i2 = 2; i2 <= R; i2++) arc.crossings.push_back({i2, P, high, -1});
        for (Int i2 = 3; i2 <= R; i2++) arc.crossings.push_back({i2 + (r - 1) / 2, p, low, -1});
        return arc;
    }

    ReferenceArc arc_g(Int i, Int l) {
        auto arc = fab.disk(nm("g", i, l), sys.point_id(0, l));
        Int bound = R - (r - i);
        Int flip_label = l == k + 1 ? 2 * k + 3 : 2 * n - 1;
        Int plain_label = l == k + 1 ? 2 * k + 1 : 1;
        for (Int j1 = 1; j1 <= p; j1++)
            for (Int i1 = 1; i1 <= r; i1++) {
                if (before(1, 1, i1, j1) && before(i1, j1, bound, P))
                    arc.crossings.push_back({i1, j1, flip_label, -1});
                if (before(R, P, i1, j1) && before(i1, j1, i, p))
                    arc.crossings.push_back({i1, j1, plain_label, -1});
            }
        return arc;
    }

    ReferenceCurve row_pair(Int t) {
        Int u = r + 2 - t;
        ReferenceCurve cur;
        cur.label = "l" + std::to_string(t);
        auto& cyc = cur.cycle;
        for (Int l = k; l >= 2; l--) {
            cyc.push_back(arc_a(t, l));
            cyc.push_back(arc_b(t, l));
            cyc.push_back(arc_c(t, l - 1));
            cyc.push_back(fab.corridor(t, (p - 1) / 2, sys.point_id(t, l - 1), sys.point_id(t, l)));
            cyc.push_back(arc_d(t, l));
            cyc.push_back(fab.corridor(t, P, sys.point_id(t, l), sys.point_id(t, l - 1)));
        }
        cyc.push_back(arc_a(t, 1));
        cyc.push_back(arc_b(t, 1));
        cyc.push_back(arc_e(t, n));
        cyc.push_back(fab.corridor(t + (r - 1) / 2, p, sys.point_id(0, n), sys.point_id(0, n - 1)));
        cyc.push_back(arc_f(t, n - 1, false));
        cyc.push_back(fab.corridor(1, 1, sys.point_id(0, n - 1), sys.point_id(0, n)));
        cyc.push_back(arc_g(u, n));
        cyc.push_back(fab.corridor(u, p, sys.point_id(0, n), sys.point_id(u, 1)));
        for (Int l = 1; l <= k - 1; l++) {
            cyc.push_back(arc_a(u, l));
            cyc.push_back(arc_b(u, l));
            cyc.push_back(arc_c(u, l + 1));
            cyc.push_back(fab.corridor(u, p - 1, sys.point_id(u, l + 1), sys.point_id(u, l)));
            cyc.push_back(arc_d(u, l));
            cyc.push_back(fab.corridor(u, p, sys.point_id(u, l), sys.point_id(u, l + 1)));
        }
        cyc.push_back(arc_a(u, k));
        cyc.push_back(arc_b(u, k));
        cyc.push_back(arc_g(u, k + 1));
        cyc.push_back(fab.corridor(1, 1, sys.point_id(0, k + 1), sys.point_id(0, k + 2)));
        cyc.push_back(arc_f(t, k + 2, true));
        cyc.push_back(fab.corridor(t + (r - 1) / 2, p, sys.point_id(0, k + 2), sys.point_id(0, k + 1)));
        cyc.push_back(arc_e(t, k + 1));
        cyc.push_back(fab.corridor(t, P, sys.point_id(0, k + 1), sys.point_id(t, k)));
        return cur;
    }
};

class Case2Builder {
public:
    explicit Case2Builder(const CurveSystem& s) : sys(s), m(s.m), n(s.n), I((s.n + 2) / 4) {}

    ReferenceSystem build() {
        ReferenceSystem ref;
        ref.kind = CaseMatch::Kind::II;
        ref.n = n;
        if (n % 4 == 0) {
            for (Int i = 1; i <= n / 2; i++)
                ref.curves.push_back(parallel(i, i % 2 == 1 ? -1 : +1, false));
            return ref;
        }
        for (Int i = 1; i <= n / 2; i++) {
            if (i == I) {
                ref.curves.push_back(middle_first());
                continue;
            }
            bool minus_side = (i < I) == (i % 2 == 1);
            ref.curves.push_back(parallel(i, minus_side ? -1 : +1, false));
        }
        ref.curves.push_back(flank(I - 1));
        ref.curves.push_back(middle_second());
        ref.curves.push_back(flank(I + 1));
        return ref;
    }

private:
    const CurveSystem& sys;
    Int m, n, I;
    ArcFactory fab;

    Int wrap(Int row) const { return (row - 1 + n) % n + 1; }

    Int sense(Int v) const {
        return sys.points[(size_t)sys.point_id(0, v)].rotation_sense;
    }

    // a closed curve along one beta circle; the swapped variant trades the labels
    // its even-row neighbours contribute
    ReferenceCurve parallel(Int i, int side, bool swapped) {
        ReferenceCurve cur;
        cur.label = "l" + std::to_string(i) + (swapped ? ",1" : "");
        ReferenceArc arc;
        arc.name = cur.label;
        arc.side = side;
        arc.host_band = i;
        for (Int j = 2; j <= m; j++) {
            arc.crossings.push_back({2 * i - 1, j, 1, -1});
            arc.crossings.push_back({2 * i - 1, j, 3, -1});
        }
        for (Int j = 1; j <= m; j++) {
            arc.crossings.push_back({wrap(2 * i - 2), j, swapped ? 3 : 1, -1});
            arc.crossings.push_back({wrap(2 * i), j, swapped ? 1 : 3, -1});
        }
        cur.cycle.push_back(std::move(arc));
        return cur;
    }

    ReferenceCurve flank(Int j) {
        // the swapped parallel sits on beta_+ with the carrier orientation exactly
        // when its index parity matches the middle index
        bool plus_side = (I % 2 == 0) == (j == I - 1);
        return parallel(j, plus_side ? +1 : -1, true);
    }

    ReferenceArc disk_arc(const char* name, Int v, int sign, Int label, Int odd_row, Int even_row) {
        auto arc = fab.disk(name, sys.point_id(0, v));
        for (Int j = 2; j <= m; j++) arc.crossings.push_back({odd_row, j, label, sign});
        for (Int j = 1; j <= m; j++) arc.crossings.push_back({even_row, j, label, sign});
        return arc;
    }

    ReferenceCurve middle_first() {
        ReferenceCurve cur;
        cur.label = "l" + std::to_string(I);
        Int pa = sys.point_id(0, 2 * (I - 1));
        Int pb = sys.point_id(0, 2 * I - 1);
        cur.cycle.push_back(disk_arc("a1", 2 * (I - 1), +1, 1, 2 * I - 3, 2 * (I - 1)));
        cur.cycle.push_back(fab.corridor(2 * (I - 1), 1, pa, pb));
        cur.cycle.push_back(disk_arc("b1", 2 * I - 1, -1, 1, 2 * I - 1, 2 * (I - 1)));
        cur.cycle.push_back(fab.corridor(2 * (I - 1), sense(2 * I - 1) > 0 ? (m + 3) / 2 : (m + 1) / 2, pb, pa));
        return cur;
    }

    ReferenceCurve middle_second() {
        ReferenceCurve cur;
        cur.label = "l" + std::to_string(I) + ",1";
        Int pa = sys.point_id(0, 2 * I + 1);
        Int pb = sys.point_id(0, 2 * I);
        cur.cycle.push_back(disk_arc("a2", 2 * I + 1, +1, 3, 2 * I + 1, 2 * I));
        cur.cycle.push_back(fab.corridor(2 * I, 1, pa, pb));
        cur.cycle.push_back(disk_arc("b2", 2 * I, -1, 3, 2 * I - 1, 2 * I));
        cur.cycle.push_back(fab.corridor(2 * I, sense(2 * I) > 0 ? (m + 1) / 2 : (m + 3) / 2, pb, pa));
        return cur;
    }
};

void require_base(const CurveSystem& sys, CaseMatch::Kind kind) {
    if (sys.kind != kind) throw std::invalid_argument("curve system belongs to the other case");
    if (!sys.reoriented) throw std::logic_error("reference curves need the reoriented system");
    if (sys.doubled) throw std::logic_error("reference curves live below the double cover labels");
}

bool case1_coverage(const CurveSystem& sys, const ReferenceSystem& ref,
                    const std::vector<SegmentRecord>& recs) {
    Int p = sys.p, r = sys.r, k = sys.k;
    Int R = (r + 1) / 2, P = (p + 1) / 2;
    std::map<std::string, const ReferenceArc*> arcs;
    for (const auto& cur : ref.curves)
        for (const auto& arc : cur.cycle)
            if (arc.name != "conn") arcs[arc.name] = &arc;

    auto witness = [&](Int i, Int j, Int l) -> std::string {
        if (i == 1) return "l1";
        if (i <= R) {
            if (l == 1) return j <= P ? "l1" : nm("b", i, 1);
            if (l <= k) return j < P ? nm("b", i, l - 1) : j == P ? nm("a", i, l - 1) : nm("b", i, l);
            if (l == k + 1) return j < P ? nm("b", i, k) : j == P ? nm("a", i, k) : "l1";
            return "l1";
        }
        if (l == 1) return j < P ? "l1" : j < p ? nm("b", i, 1) : nm("a", i, 1);
        if (l <= k) return j < P ? nm("b", i, l - 1) : j < p ? nm("b", i, l) : nm("a", i, l);
        if (l == k + 1) return j < P ? nm("b", i, k) : "l1";
        return "l1";
    };

    for (const auto& rec : recs) {
        if (rec.region != SegmentRecord::Region::F1) continue;
        auto it = arcs.find(witness(rec.i, rec.j, (rec.index + 1) / 2));
        if (it == arcs.end()) return false;
        bool hit = false;
        for (const auto& cr : it->second->crossings)
            hit |= cr.i == rec.i && cr.j == rec.j && cr.label == rec.index;
        if (!hit) return false;
    }
    return true;
}

bool case2_profile(const CurveSystem& sys, const std::vector<SegmentTotal>& totals) {
    Int n = sys.n;
    auto expect = [&](Int row, Int label) -> Int {
        if (n % 4 == 0) return -1;
        Int I = (n + 2) / 4;
        auto wrap = [&](Int v) { return (v - 1 + n) % n + 1; };
        if (row % 2 == 1) {
            if (row == wrap(2 * I - 3) && label == 3) return -2;
            if (row == wrap(2 * I + 1) && label == 1) return -2;
            return -1;
        }
        if (row == wrap(2 * (I - 2)) && label == 3) return -2;
        if (row == wrap(2 * (I + 1)) && label == 1) return -2;
        return -1;
    };
    for (const auto& t : totals)
        if (t.total != expect(t.i, t.label)) return false;
    return true;
}

// boundary position of the crossed strand where it passes the disk: a strand
// arriving at the central point enters from the back of its travel direction
Rat strand_angle(const CurveSystem& sys, const ReferenceArc& arc, const RefCrossing& cr) {
    const LiftedCurve* c = sys.find(cr.i, cr.j);
    if (!c) throw std::logic_error("reference crossing names an absent curve");
    const Passage* ps = sys.passage_at(*c, arc.point);
    if (!ps) throw std::logic_error("reference crossing away from its disk");
    bool arriving;
    if (sys.kind == CaseMatch::Kind::I) {
        const MarkedPoint& pt = sys.points[(size_t)arc.point];
        Int l = pt.index;
        Int down = 2 * l - 1;
        Int up = (pt.row == 0 && l == sys.n) ? 1 : 2 * l + 1;
        if (cr.label != down && cr.label != up)
            throw std::logic_error("reference crossing on a segment away from its disk");
        arriving = c->orientation_flag < 0 ? cr.label == up : cr.label == down;
    } else {
        Int v = sys.points[(size_t)arc.point].index;
        Int v2 = c->i % 2 == 1 ? c->i : c->i % sys.n + 1;
        Int v4 = c->i % 2 == 1 ? c->i % sys.n + 1 : c->i;
        if (v != v2 && v != v4)
            throw std::logic_error("reference crossing on a segment away from its disk");
        arriving = cr.label == 1 ? v == v2 : v == v4;
    }
    return arriving ? mod1(ps->angle + Rat(1, 2)) : ps->angle;
}

struct Hull {
    std::vector<Rat> pts;  // sorted, deduplicated
    Rat start, len;        // minimal covering arc (complement of the widest gap)
};

Hull make_hull(std::vector<Rat> angles) {
    Hull h;
    std::sort(angles.begin(), angles.end());
    angles.erase(std::unique(angles.begin(), angles.end()), angles.end());
    h.pts = angles;
    size_t sz = angles.size();
    if (sz <= 1) {
        h.start = sz ? angles[0] : Rat(0);
        h.len = Rat(0);
        return h;
    }
    size_t widest = sz - 1;
    Rat best = mod1(angles[0] - angles[sz - 1]);
    for (size_t g = 0; g + 1 < sz; g++) {
        Rat gap = angles[g + 1] - angles[g];
        if (gap > best) {
            best = gap;
            widest = g;
        }
    }
    h.start = angles[(widest + 1) % sz];
    h.len = Rat(1) - best;
    return h;
}

bool hulls_compatible(const Hull& a, const Hull& b) {
    auto subset = [](const std::vector<Rat>& x, const std::vector<Rat>& y) {
        return std::includes(y.begin(), y.end(), x.begin(), x.end());
    };
    if (subset(a.pts, b.pts) || subset(b.pts, a.pts)) return true;
    auto inside = [](const Hull& h, const Rat& x) {
        Rat d = mod1(x - h.start);
        return d > 0 && d < h.len;
    };
    bool cut_a = inside(a, b.start) != inside(a, mod1(b.start + b.len));
    bool cut_b = inside(b, a.start) != inside(b, mod1(a.start + a.len));
    return !(cut_a && cut_b);
}

}  // namespace

ReferenceSystem build_case1(const CurveSystem& sys) {
    require_base(sys, CaseMatch::Kind::I);
    return Case1Builder(sys).build();
}

ReferenceSystem build_case2(const CurveSystem& sys) {
    require_base(sys, CaseMatch::Kind::II);
    return Case2Builder(sys).build();
}

Int total_intersection(const ReferenceSystem& ref, const SegmentRecord& seg) {
    Int total = 0;
    for (const auto& cur : ref.curves)
        for (const auto& arc : cur.cycle)
            for (const auto& cr : arc.crossings)
                if (cr.i == seg.i && cr.j == seg.j && cr.label == seg.index)
                    total += cr.sign * cur.orientation;
    return total;
}

NegativityReport verify_negativity(const CurveSystem& sys, const ReferenceSystem& ref) {
    auto recs = decompose_segments(sys);
    std::map<std::tuple<Int, Int, Int>, Int> totals;
    for (const auto& cur : ref.curves)
        for (const auto& arc : cur.cycle)
            for (const auto& cr : arc.crossings)
                totals[{cr.i, cr.j, cr.label}] += cr.sign * cur.orientation;

    NegativityReport rep;
    rep.all_negative = true;
    for (const auto& rec : recs) {
        if (rec.region != SegmentRecord::Region::F1) continue;
        auto it = totals.find({rec.i, rec.j, rec.index});
        Int t = it == totals.end() ? 0 : it->second;
        rep.totals.push_back({rec.i, rec.j, rec.index, t});
        if (t >= 0) rep.all_negative = false;
    }
    rep.coverage_ok = ref.kind == CaseMatch::Kind::I ? case1_coverage(sys, ref, recs)
                                                     : case2_profile(sys, rep.totals);
    return rep;
}

bool check_disjointness(const CurveSystem& sys, const ReferenceSystem& ref) {
    std::set<std::tuple<int, Int, Int>> parallels;
    std::set<std::tuple<Int, Int, Int, Int, Int>> corridors;
    std::set<std::pair<Int, Int>> disk_bands;
    std::map<Int, std::vector<const ReferenceArc*>> disks;

    for (const auto& cur : ref.curves)
        for (const auto& arc : cur.cycle) {
            if (arc.kind == ReferenceArc::Kind::Disk) {
                if (!disk_bands.insert({arc.point, arc.band}).second) return false;
                disks[arc.point].push_back(&arc);
            } else if (arc.side != 0) {
                if (!parallels.insert({arc.side, arc.host_band, arc.band}).second) return false;
            } else {
                auto key = std::make_tuple(arc.shadow_i, arc.shadow_j,
                                           std::min(arc.from_point, arc.to_point),
                                           std::max(arc.from_point, arc.to_point), arc.band);
                if (!corridors.insert(key).second) return false;
            }
        }

    for (const auto& [point, arcs] : disks) {
        std::vector<Hull> hulls;
        for (const auto* arc : arcs) {
            std::vector<Rat> angles;
            for (const auto& cr : arc->crossings) angles.push_back(strand_angle(sys, *arc, cr));
            hulls.push_back(make_hull(std::move(angles)));
        }
        for (size_t a = 0; a < hulls.size(); a++)
            for (size_t b = a + 1; b < hulls.size(); b++)
                if (!hulls_compatible(hulls[a], hulls[b])) return false;
    }
    return true;
}

}
