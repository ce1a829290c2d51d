#include "vfc/certify.hpp"

#include "vfc/svg.hpp"
#include "vfc/tower.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>

namespace vfc {

namespace {

using nlohmann::ordered_json;

ordered_json jrat(const Rat& x) {
    return {{"num", x.numerator()}, {"den", x.denominator()}};
}

ordered_json jorb(const OrbifoldSurface& o) {
    std::map<Int, Int> hist;
    for (Int c : o.cone_orders) hist[c]++;
    ordered_json cones = ordered_json::object();
    for (auto& [order, count] : hist) cones[std::to_string(order)] = count;
    return {{"genus", o.genus},
            {"cone_points", (Int)o.cone_orders.size()},
            {"cone_orders", cones},
            {"chi_orb", jrat(o.chi_orb())}};
}

ordered_json jleaf(const LeafSlopes& lf) {
    auto pr = [](Int t, Int u) { return ordered_json{{"t", t}, {"u", u}}; };
    return {{"eps_minus", lf.eps_minus},
            {"eps_plus", lf.eps_plus},
            {"outer_minus", pr(lf.t_m, lf.u_m)},
            {"outer_plus", pr(lf.t_p, lf.u_p)},
            {"bar_minus", pr(lf.tb_m, lf.ub_m)},
            {"bar_plus", pr(lf.tb_p, lf.ub_p)},
            {"bar_zero", pr(lf.tb_0, lf.ub_0)},
            {"slope_bar_minus", jrat(lf.sb_minus)},
            {"slope_bar_plus", jrat(lf.sb_plus)},
            {"slope_bar_zero", jrat(lf.sb_zero)},
            {"reduced_fallback", lf.reduced_fallback}};
}

const char* kind_name(CaseMatch::Kind k) {
    switch (k) {
        case CaseMatch::Kind::I: return "I";
        case CaseMatch::Kind::II: return "II";
        default: return "None";
    }
}

struct VerdictSink {
    ordered_json& cert;
    int exit_code = 0;
    bool done = false;

    void unmatched(const std::string& reason) {
        cert["verdict"] = {{"kind", "StructurallyUnmatched"}, {"reason", reason}};
        exit_code = 2;
        done = true;
    }
    void failed(const std::string& stage, const std::string& detail) {
        cert["verdict"] = {{"kind", "ConditionFailed"}, {"stage", stage}, {"detail", detail}};
        exit_code = 3;
        done = true;
    }
    void certified(CaseMatch::Kind k) {
        cert["verdict"] = {{"kind", "VirtuallyFiberedCertified"}, {"case", kind_name(k)}};
        exit_code = 0;
        done = true;
    }
};

}  // namespace

CertifyOutcome certify(const CertifyOptions& opt) {
    CertifyOutcome oc;
    ordered_json& cert = oc.certificate;
    VerdictSink verdict{cert};
    std::vector<std::string> notes;
    notes.push_back("tangle fractions are used exactly as written; nothing is reduced or normalized");

    auto d = parse_decomposition(opt.tangles);
    cert["cert_version"] = 1;
    cert["input"] = {{"tangles", d.echo()},
                     {"n", d.n()},
                     {"q", opt.q == 0 ? ordered_json("auto") : ordered_json(opt.q)},
                     {"case", kind_name(opt.force) == std::string("None") ? "auto" : kind_name(opt.force)},
                     {"two_component", opt.two_component}};

    auto inv = invariants(d);
    cert["invariants"] = {{"euler_number", jrat(inv.euler_number)},
                          {"chi", jrat(inv.chi)},
                          {"components", inv.components},
                          {"is_sl2", inv.is_sl2}};

    auto match = classify_theorem_case(d);
    if (match.kind == CaseMatch::Kind::None) {
        cert["case"] = {{"kind", "None"}, {"reason", match.reason}};
    } else if (match.kind == CaseMatch::Kind::I) {
        cert["case"] = {{"kind", "I"},
                        {"p", match.c1.p},
                        {"r", match.c1.r},
                        {"k", match.c1.k},
                        {"n", match.c1.n},
                        {"rotation_offset", match.c1.rotation_offset}};
    } else {
        cert["case"] = {{"kind", "II"}, {"p", match.c2.p}, {"m", match.c2.m}, {"n", match.c2.n}};
    }

    auto finish = [&]() {
        cert["notes"] = notes;
        oc.exit_code = verdict.exit_code;
        return oc;
    };

    if (inv.euler_number == Rat(0)) {
        verdict.unmatched("e(W_K)=0: not SL2~ type");
        return finish();
    }
    if (opt.force != CaseMatch::Kind::None && match.kind != opt.force) {
        std::string why = match.kind == CaseMatch::Kind::None
                              ? match.reason
                              : std::string("the decomposition matches case ") + kind_name(match.kind);
        verdict.unmatched(std::string("forced case ") + kind_name(opt.force) + ", but: " + why);
        return finish();
    }
    if (match.kind == CaseMatch::Kind::None) {
        verdict.unmatched(match.reason);
        return finish();
    }
    if (!inv.is_sl2) {
        verdict.unmatched("chi(B_K) >= 0: not SL2~ type");
        return finish();
    }

    bool case1 = match.kind == CaseMatch::Kind::I;
    auto side = side_conditions(d, match);
    Int e = integer_euler(d, match);
    if (case1) {
        cert["case"]["side_conditions"] = {{"integer_euler_nonzero", side.integer_euler_nonzero},
                                           {"euler_odd", side.case1_euler_odd}};
        if (match.c1.rotation_offset != 0)
            notes.push_back("input rotated by " + std::to_string(match.c1.rotation_offset) +
                            " so the uniform-denominator block leads");
    } else {
        cert["case"]["side_conditions"] = {{"integer_euler_nonzero", side.integer_euler_nonzero},
                                           {"all_q_odd", side.case2_all_q_odd},
                                           {"euler_even", side.case2_euler_even}};
    }
    cert["case"]["integer_euler"] = e;
    if (!side.integer_euler_nonzero)
        notes.push_back("the integer Euler sum vanishes; reported as a side condition only");

    // covering tower
    CoverTower tw = case1 ? case1_tower(match.c1.p, match.c1.r, match.c1.k, match.c1.n)
                          : case2_tower(match.c2.p, match.c2.m, match.c2.n);
    bool hom1_ok = hom_validity(tw.hom1, tw.base);
    bool hom2_ok = hom_validity(tw.hom2, tw.mid);
    cert["tower"] = {{"degrees", {tw.d1, tw.d2}},
                     {"hom1_valid", hom1_ok},
                     {"hom2_valid", hom2_ok},
                     {"base", jorb(tw.base)},
                     {"mid", jorb(tw.mid)},
                     {"top", jorb(tw.top)}};

    // lifted curve system
    oc.system = reorient(case1 ? enumerate_case1(tw, match.c1) : enumerate_case2(tw, match.c2));
    oc.has_systems = true;
    auto recs = decompose_segments(oc.system);

    ordered_json flips = ordered_json::array();
    Int exceptional = 0;
    for (const auto& c : oc.system.curves) {
        if (c.orientation_flag < 0) flips.push_back({c.i, c.j});
        exceptional += c.exceptional;
    }
    Int odd_segs = 0, even_segs = 0;
    for (const auto& rec : recs) (rec.region == SegmentRecord::Region::F1 ? odd_segs : even_segs)++;
    cert["curve_system"] = {{"curves", (Int)oc.system.curves.size()},
                            {"exceptional_curves", exceptional},
                            {"marked_points", (Int)oc.system.points.size()},
                            {"flip_set", flips},
                            {"segments", {{"odd", odd_segs}, {"even", even_segs}}},
                            {"double_cover_curves",
                             (Int)double_cover_labels(oc.system).curves.size()}};
    if (case1)
        cert["curve_system"]["singular_points_per_annulus"] =
            singular_points_per_annulus(opt.two_component);

    // reference system, intersection totals, disjointness
    oc.refsys = case1 ? build_case1(oc.system) : build_case2(oc.system);
    auto rep = verify_negativity(oc.system, oc.refsys);
    bool disjoint = check_disjointness(oc.system, oc.refsys);

    ordered_json ref_labels = ordered_json::array();
    for (const auto& cur : oc.refsys.curves) ref_labels.push_back(cur.label);
    cert["reference_system"] = {{"curves", (Int)oc.refsys.curves.size()},
                                {"labels", ref_labels},
                                {"disjoint", disjoint}};

    Int lo = 0, hi = 0;
    if (!rep.totals.empty()) lo = hi = rep.totals.front().total;
    for (const auto& st : rep.totals) {
        lo = std::min(lo, st.total);
        hi = std::max(hi, st.total);
    }
    cert["negativity"] = {{"all_negative", rep.all_negative},
                          {"coverage_ok", rep.coverage_ok},
                          {"segments", (Int)rep.totals.size()},
                          {"min_total", lo},
                          {"max_total", hi}};
    if (!case1 && match.c2.n == 6) {
        cert["negativity"]["profile_extrapolated"] = true;
        notes.push_back("n=6 coverage profile is the cyclic extension of the general wrap-row rule");
    }
    notes.push_back("disjointness is certified structurally (band bookkeeping plus non-crossing "
                    "angular hulls on each disk), not by an isotopy search");

    if (opt.include_matrix) {
        ordered_json rows = ordered_json::array();
        for (const auto& rec : recs) {
            if (rec.region != SegmentRecord::Region::F1) continue;
            ordered_json by_curve = ordered_json::array();
            Int total = 0;
            for (const auto& cur : oc.refsys.curves) {
                ReferenceSystem one{oc.refsys.kind, oc.refsys.n, {cur}};
                Int t = total_intersection(one, rec);
                by_curve.push_back(t);
                total += t;
            }
            rows.push_back({{"i", rec.i},
                            {"j", rec.j},
                            {"label", rec.index},
                            {"by_curve", by_curve},
                            {"total", total}});
        }
        cert["negativity"]["matrix"] = rows;
    }

    // boundary slopes on the star graph
    bool horizontal = false, semibundle = false;
    std::string slope_error;
    try {
        Int V = case1 ? 1 : match.c2.n / 2;
        GluingMatrix g = case1 ? GluingMatrix{1, 0, 2, 1} : GluingMatrix{1, 0, 1, 1};
        auto star = build_star(e, V, opt.q);
        auto sol = solve_wang_yu(star, g);
        auto table = boundary_slopes(star, g, sol, canonical_eps(V));
        semibundle = table.semibundle;
        horizontal = table.central_residual == Rat(0);
        ordered_json residuals = ordered_json::array();
        for (const auto& rres : table.leaf_residuals) {
            horizontal = horizontal && rres == Rat(0);
            residuals.push_back(jrat(rres));
        }
        ordered_json leaves = ordered_json::array();
        for (const auto& lf : table.leaves) leaves.push_back(jleaf(lf));
        ordered_json lambda_bar = ordered_json::array();
        for (const auto& lb : sol.lambda_bar) lambda_bar.push_back(jrat(lb));
        cert["slopes"] = {{"graph",
                           {{"leaf_count", star.leaf_count},
                            {"q", star.q},
                            {"e", e},
                            {"e_prime", star.e_prime}}},
                          {"gluing", {{"a", g.a}, {"b", g.b}, {"c", g.c}, {"d", g.d}}},
                          {"lambda", jrat(sol.lambda)},
                          {"lambda_bar", lambda_bar},
                          {"leaves", leaves},
                          {"leaf_residuals", residuals},
                          {"central_residual", jrat(table.central_residual)},
                          {"horizontal", horizontal},
                          {"semibundle", semibundle}};
        if (case1) {
            notes.push_back("case I slope table comes from the single-leaf specialization of the "
                            "star solver (gluing c=2)");
            if (e % 2 != 0) {
                auto cd = case1_slope_data(e);
                cert["slopes"]["gamma1"] = jrat(cd.gamma1);
                cert["slopes"]["gamma2"] = jrat(cd.gamma2);
                cert["slopes"]["interpolation"] = {{"intercept", jrat(cd.interp_intercept)},
                                                   {"coefficient", jrat(cd.interp_coefficient)}};
                cert["slopes"]["wrap_count"] = cd.wrap_count;
            } else {
                notes.push_back("interpolation data needs an odd integer Euler number; skipped");
            }
        } else {
            auto wraps = case2_wrap_counts(star.q, star.e_prime);
            cert["slopes"]["wrap_counts"] = {wraps.first, wraps.second};
        }
    } catch (const std::exception& ex) {
        slope_error = ex.what();
        cert["slopes"] = {{"error", slope_error}};
    }

    // the verdict is the conjunction of the stage flags, first failure named
    if (!hom1_ok || !hom2_ok)
        verdict.failed("tower", "homomorphism table fails validity");
    else if (!rep.all_negative)
        verdict.failed("negativity", "some intersection total is above -1");
    else if (!rep.coverage_ok)
        verdict.failed("negativity", "segment coverage check failed");
    else if (!disjoint)
        verdict.failed("disjointness", "reference curves are not pairwise disjoint");
    else if (!slope_error.empty())
        verdict.failed("slopes", slope_error);
    else if (!horizontal)
        verdict.failed("slopes", "horizontality residual is nonzero");
    else if (!semibundle)
        verdict.failed("slopes", "boundary sign pattern is not a semi-bundle");
    else
        verdict.certified(match.kind);
    return finish();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"certify virtual fibering of classic Montesinos links", "fibercert"};
    std::string tangles, qtext = "auto", case_text = "auto", out_path, svg_prefix;
    bool json_flag = false;
    CertifyOptions opt;
    app.add_option("--tangles", tangles, "comma separated q/p fractions, cyclic order")->required();
    app.add_option("--q", qtext, "star parameter for the case II slope stage (integer or auto)");
    app.add_option("--case", case_text, "accept only this case")
        ->check(CLI::IsMember({"auto", "I", "II"}));
    app.add_flag("--json", json_flag, "emit the certificate as JSON (the default output)");
    app.add_option("--out", out_path, "write the certificate to this path instead of stdout");
    app.add_option("--emit-svg", svg_prefix, "write a <prefix>.svg schematic of the curve system");
    app.add_flag("--matrix", opt.include_matrix, "embed the full intersection matrix");
    app.add_flag("--two-component", opt.two_component, "two-component variant bookkeeping");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& ex) {
        err << ex.what() << "\n";
        return 1;
    }

    opt.tangles = tangles;
    if (qtext != "auto") {
        try {
            size_t used = 0;
            opt.q = std::stoll(qtext, &used);
            if (used != qtext.size()) throw std::invalid_argument(qtext);
        } catch (const std::exception&) {
            err << "--q wants an integer or auto, got '" << qtext << "'\n";
            return 1;
        }
    }
    if (case_text == "I") opt.force = CaseMatch::Kind::I;
    if (case_text == "II") opt.force = CaseMatch::Kind::II;

    CertifyOutcome oc;
    try {
        oc = certify(opt);
    } catch (const parse_error& ex) {
        err << "input error: " << ex.what() << "\n";
        return 1;
    }

    std::string doc = oc.certificate.dump(2) + "\n";
    if (out_path.empty()) {
        out << doc;
    } else {
        std::ofstream f(out_path, std::ios::binary);
        if (!f || !(f << doc).good()) {
            err << "cannot write " << out_path << "\n";
            return 1;
        }
    }
    if (!svg_prefix.empty() && oc.has_systems) {
        std::string svg = render_svg(oc.system, &oc.refsys);
        std::string path = svg_prefix + ".svg";
        std::ofstream f(path, std::ios::binary);
        if (!f || !(f << svg).good()) {
            err << "cannot write " << path << "\n";
            return 1;
        }
    }
    return oc.exit_code;
}

}
