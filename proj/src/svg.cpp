#include "vfc/svg.hpp"

#include <cmath>
#include <cstdio>

namespace vfc {

namespace {

struct Pt {
    double x = 0, y = 0;
};

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.2f", v + 0.0);
    std::string s = buf;
    return s == "-0.00" ? "0.00" : s;
}

std::string hsl(size_t idx, size_t total) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "hsl(%d,70%%,42%%)", (int)(360.0 * (double)idx / (double)(total ? total : 1)));
    return buf;
}

const double kWidth = 960, kHeight = 960, kCx = 510, kCy = 480, kRadius = 330;
const double kPointR = 24, kChordR = 18;

}  // namespace

std::string render_svg(const CurveSystem& sys, const ReferenceSystem* ref) {
    const size_t total = sys.points.size();
    auto pos = [&](Int pt) {
        double a = 2.0 * M_PI * (double)pt / (double)(total ? total : 1) - M_PI / 2;
        return Pt{kCx + kRadius * std::cos(a), kCy + kRadius * std::sin(a)};
    };
    // radial pull toward the center, for stacking overlays without collisions
    auto pulled = [&](Pt at, double off) {
        double f = (kRadius - off) / kRadius;
        return Pt{kCx + (at.x - kCx) * f, kCy + (at.y - kCy) * f};
    };

    std::string s;
    auto line = [&](const std::string& text) { s += text + "\n"; };
    line("<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(kWidth) + "\" height=\"" +
         num(kHeight) + "\" viewBox=\"0 0 " + num(kWidth) + " " + num(kHeight) + "\">");
    line("<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>");

    // marked points
    line("<g class=\"points\" fill=\"none\" stroke=\"#999999\">");
    for (size_t t = 0; t < total; t++) {
        Pt at = pos((Int)t);
        line("<circle cx=\"" + num(at.x) + "\" cy=\"" + num(at.y) + "\" r=\"" + num(kPointR) +
             "\"/>");
        Pt lab = pulled(at, -34);
        line("<text x=\"" + num(lab.x) + "\" y=\"" + num(lab.y) +
             "\" font-size=\"11\" font-family=\"monospace\" fill=\"#555555\" stroke=\"none\" "
             "text-anchor=\"middle\">" +
             sys.points[t].name() + "</text>");
    }
    line("</g>");

    // one closed trace per curve, with a chord at each passage showing the exact angle
    for (size_t c = 0; c < sys.curves.size(); c++) {
        const auto& cur = sys.curves[c];
        std::string color = hsl(c, sys.curves.size());
        std::string label = "(" + std::to_string(cur.i) + "," + std::to_string(cur.j) + ")";
        line("<g class=\"curve\" data-curve=\"" + label + "\" stroke=\"" + color +
             "\" fill=\"none\"" + (cur.exceptional ? " stroke-width=\"2.4\"" : "") + ">");
        std::string d;
        for (size_t t = 0; t < cur.itinerary.size(); t++) {
            Pt at = pos(cur.itinerary[t].point);
            d += (t == 0 ? "M" : " L") + num(at.x) + " " + num(at.y);
        }
        if (!d.empty()) d += " Z";
        line("<path d=\"" + d + "\" opacity=\"0.55\"/>");
        for (const auto& ps : cur.itinerary) {
            Pt at = pos(ps.point);
            double th = 2.0 * M_PI * to_double(ps.angle);
            double dx = kChordR * std::cos(th), dy = kChordR * std::sin(th);
            line("<line x1=\"" + num(at.x - dx) + "\" y1=\"" + num(at.y - dy) + "\" x2=\"" +
                 num(at.x + dx) + "\" y2=\"" + num(at.y + dy) + "\" stroke-width=\"2\" data-angle=\"" +
                 rat_str(ps.angle) + "\"/>");
        }
        line("</g>");
    }

    // reference curves, dashed: pure parallels as concentric circles, assembled
    // curves as closed runs through their disk and corridor anchors
    if (ref) {
        for (size_t c = 0; c < ref->curves.size(); c++) {
            const auto& cur = ref->curves[c];
            line("<g class=\"ref\" data-ref=\"" + cur.label +
                 "\" stroke=\"#333333\" fill=\"none\" stroke-dasharray=\"7 5\" stroke-width=\"1.6\">");
            const bool parallel_only = cur.cycle.size() == 1 &&
                                       cur.cycle[0].kind == ReferenceArc::Kind::Parallel &&
                                       cur.cycle[0].side != 0;
            if (parallel_only) {
                double rr = kRadius + (double)cur.cycle[0].side * (34 + 9 * (double)cur.cycle[0].host_band);
                line("<circle cx=\"" + num(kCx) + "\" cy=\"" + num(kCy) + "\" r=\"" + num(rr) +
                     "\"/>");
            } else {
                std::string d;
                bool first = true;
                for (const auto& arc : cur.cycle) {
                    Pt at;
                    if (arc.kind == ReferenceArc::Kind::Disk) {
                        at = pulled(pos(arc.point), 40 + 7 * (double)arc.band);
                    } else {
                        Pt a = pos(arc.from_point), b = pos(arc.to_point);
                        at = pulled(Pt{(a.x + b.x) / 2, (a.y + b.y) / 2}, 70 + 7 * (double)arc.band);
                    }
                    d += (first ? "M" : " L") + num(at.x) + " " + num(at.y);
                    first = false;
                }
                if (!d.empty()) d += " Z";
                line("<path d=\"" + d + "\"/>");
            }
            line("</g>");
        }
    }

    // legend: curve labels in palette order
    line("<g class=\"legend\" font-size=\"11\" font-family=\"monospace\">");
    const size_t cap = 60;
    for (size_t c = 0; c < sys.curves.size() && c < cap; c++) {
        const auto& cur = sys.curves[c];
        double y = 22 + 14 * (double)c;
        line("<line x1=\"12\" y1=\"" + num(y - 4) + "\" x2=\"34\" y2=\"" + num(y - 4) +
             "\" stroke=\"" + hsl(c, sys.curves.size()) + "\" stroke-width=\"3\"/>");
        line("<text x=\"40\" y=\"" + num(y) + "\" fill=\"#333333\">(" + std::to_string(cur.i) +
             "," + std::to_string(cur.j) + ")</text>");
    }
    if (sys.curves.size() > cap)
        line("<text x=\"12\" y=\"" + num(22 + 14 * (double)cap) + "\" fill=\"#333333\">+" +
             std::to_string(sys.curves.size() - cap) + " more</text>");
    line("</g>");

    line("</svg>");
    return s;
}

}
