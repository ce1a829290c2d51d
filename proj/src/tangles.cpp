#include "vfc/tangles.hpp"

#include <charconv>
#include <numeric>

namespace vfc {

std::string TangleDecomposition::echo() const {
    std::string out;
    for (size_t i = 0; i < tangles.size(); i++) {
        if (i) out += ",";
        out += std::to_string(tangles[i].q) + "/" + std::to_string(tangles[i].p);
    }
    return out;
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (unsigned char)s.front() <= ' ') s.remove_prefix(1);
    while (!s.empty() && (unsigned char)s.back() <= ' ') s.remove_suffix(1);
    return s;
}

Int parse_digits(std::string_view s, Int idx) {
    if (s.empty()) throw parse_error("empty number in tangle " + std::to_string(idx), idx);
    for (char c : s)
        if (c < '0' || c > '9') throw parse_error("bad digit '" + std::string(1, c) + "' in tangle " + std::to_string(idx), idx);
    Int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw parse_error("number out of range in tangle " + std::to_string(idx), idx);
    return v;
}

}  // namespace

TangleDecomposition parse_decomposition(const std::string& text) {
    TangleDecomposition d;
    size_t pos = 0;
    Int idx = 0;
    while (true) {
        size_t comma = text.find(',', pos);
        std::string_view tok = trim(std::string_view(text).substr(pos, comma == std::string::npos ? std::string::npos : comma - pos));
        bool neg = !tok.empty() && tok.front() == '-';
        if (neg) tok.remove_prefix(1);
        size_t slash = tok.find('/');
        if (slash == std::string_view::npos)
            throw parse_error("tangle " + std::to_string(idx) + " is not of the form q/p", idx);
        Int q = parse_digits(tok.substr(0, slash), idx);
        Int p = parse_digits(tok.substr(slash + 1), idx);
        if (neg) q = -q;
        if (p < 2) throw parse_error("denominator " + std::to_string(p) + " < 2 in tangle " + std::to_string(idx), idx);
        if (std::gcd(q < 0 ? -q : q, p) != 1)
            throw parse_error("tangle " + std::to_string(idx) + " (" + std::to_string(q) + "/" + std::to_string(p) + ") is not reduced", idx);
        d.tangles.push_back({q, p});
        idx++;
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return d;
}

MontesinosInvariants invariants(const TangleDecomposition& d) {
    MontesinosInvariants inv;
    inv.euler_number = Rat(0);
    inv.chi = Rat(2 - d.n());
    Int qsum = 0, even_count = 0;
    for (auto& t : d.tangles) {
        inv.euler_number -= Rat(t.q, t.p);
        inv.chi += Rat(1, t.p);
        qsum += t.q;
        if (t.p % 2 == 0) even_count++;
    }
    if (even_count == 0)
        inv.components = (qsum % 2 != 0) ? 1 : 2;
    else
        inv.components = even_count;
    inv.is_sl2 = inv.euler_number != Rat(0) && inv.chi < Rat(0);
    return inv;
}

TangleDecomposition rotated(const TangleDecomposition& d, Int offset) {
    TangleDecomposition out;
    Int n = d.n();
    for (Int i = 0; i < n; i++) out.tangles.push_back(d.tangles[(i + offset) % n]);
    return out;
}

CaseMatch classify_theorem_case(const TangleDecomposition& d) {
    CaseMatch m;
    Int n = d.n();

    bool uniform = true;
    for (auto& t : d.tangles)
        if (t.p != d.tangles[0].p) uniform = false;

    if (uniform) {
        Int p = d.tangles[0].p;
        if (p % 2 == 1) {
            m.reason = "uniform odd denominator; outside the two certified shapes (covered by earlier methods)";
            return m;
        }
        Int mm = p / 2;
        if (mm % 2 == 0) {
            m.reason = "denominator p=" + std::to_string(p) + " is 2m with m even; case II needs m odd";
            return m;
        }
        if (n < 4 || n % 2 != 0) {
            m.reason = "case II needs n >= 4 even, got n=" + std::to_string(n);
            return m;
        }
        if (p == 2 && n == 4) {
            m.reason = "excluded case (p,n)≠(2,4): p=2 with n=4 is not covered";
            return m;
        }
        m.kind = CaseMatch::Kind::II;
        m.c2 = {p, mm, n};
        return m;
    }

    // case I: some rotation is k tangles of denominator p followed by n-k of denominator p*r
    for (Int off = 0; off < n; off++) {
        auto rot = rotated(d, off);
        Int p = rot.tangles[0].p;
        Int k = 1;
        while (k < n && rot.tangles[k].p == p) k++;
        if (k == n) continue;  // uniform, handled above
        Int pr = rot.tangles[k].p;
        bool tail_ok = true;
        for (Int i = k; i < n; i++)
            if (rot.tangles[i].p != pr) tail_ok = false;
        if (!tail_ok) continue;
        if (pr % p != 0) continue;
        Int r = pr / p;
        if (p < 3 || p % 2 == 0) continue;
        if (r < 3 || r % 2 == 0) continue;
        if (k % p != 0 || (n - k) % p != 0 || (n - k) % r != 0) continue;
        m.kind = CaseMatch::Kind::I;
        m.c1 = {p, r, k, n, off};
        return m;
    }

    m.reason = "no cyclic rotation matches either theorem shape";
    return m;
}

Int integer_euler(const TangleDecomposition& d, const CaseMatch& m) {
    if (m.kind == CaseMatch::Kind::I) {
        auto rot = rotated(d, m.c1.rotation_offset);
        Int s = 0;
        for (Int i = 0; i < m.c1.n; i++) s += (i < m.c1.k ? m.c1.r : 1) * rot.tangles[i].q;
        return -s;
    }
    if (m.kind == CaseMatch::Kind::II) {
        Int s = 0;
        for (auto& t : d.tangles) s += t.q;
        return -s;
    }
    return 0;
}

SideConditions side_conditions(const TangleDecomposition& d, const CaseMatch& m) {
    SideConditions sc;
    Int e = integer_euler(d, m);
    sc.integer_euler_nonzero = e != 0;
    if (m.kind == CaseMatch::Kind::I) sc.case1_euler_odd = (e % 2 != 0);
    if (m.kind == CaseMatch::Kind::II) {
        sc.case2_euler_even = (e % 2 == 0);
        sc.case2_all_q_odd = true;
        for (auto& t : d.tangles)
            if (t.q % 2 == 0) sc.case2_all_q_odd = false;
    }
    return sc;
}

}
