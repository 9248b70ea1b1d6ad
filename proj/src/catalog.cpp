#include "witt/catalog.hpp"

namespace witt {

namespace {

std::string rs(const Rational& r) { return to_string(r); }

std::string co(const Rational& u, const Rational& v) { return ";" + rs(u) + "," + rs(v); }

std::string pt(const std::pair<Rational, Rational>& p) {
    return "(" + rs(p.first) + "," + rs(p.second) + ")";
}

Rational sample_delta_avoiding(RationalSampler& s, const std::vector<Rational>& avoid) {
    for (;;) {
        Rational d = s.rational(20, 10);
        bool ok = true;
        for (const Rational& a : avoid)
            if (d == a) ok = false;
        if (ok) return d;
    }
}

}  // namespace

std::vector<CatalogEntry> table1_catalog(RationalSampler& s) {
    Rational u = s.generic_coset(), v = s.generic_coset();
    if (u + v == 1) v = v / 2 + Rational(1, 101);  // keep u+v off the integers
    Rational d = sample_delta_avoiding(s, {Rational(0), Rational(1)});
    Rational d1 = sample_delta_avoiding(s, {Rational(0)});
    Rational d2 = sample_delta_avoiding(s, {Rational(0), -d1});
    std::vector<CatalogEntry> out;
    out.push_back({"T1.1 Grozman", "G[" + rs(u) + "," + rs(v) + "]", true});
    out.push_back({"T1.2 (0,0,3)", "B[1,1" + co(u, v) + "] . (d x d)", true});
    out.push_back({"T1.3 (0,-2,1)", "d . B[1,-2" + co(u, v) + "] . (d x id)", true});
    out.push_back({"T1.4 (-2,0,1)", "d . B[-2,1" + co(u, v) + "] . (id x d)", true});
    out.push_back({"T1.5 (0,d,d+2)", "B[1," + rs(d) + co(u, v) + "] . (d x id)", true});
    out.push_back({"T1.6 (d,0,d+2)", "B[" + rs(d) + ",1" + co(u, v) + "] . (id x d)", true});
    out.push_back({"T1.7 (d,-d-1,1)", "d . B[" + rs(d) + "," + rs(-d - 1) + co(u, v) + "]", true});
    out.push_back({"T1.8 bracket", "B[" + rs(d1) + "," + rs(d2) + co(u, v) + "]", true});
    out.push_back({"T1.9 product", "P[" + rs(d1) + "," + rs(d2) + co(u, v) + "]", true});
    out.push_back({"T1.10 (1,d,d)", "P[0," + rs(d) + co(u, v) + "] . (d^-1 x id)", true});
    out.push_back({"T1.11 (d,1,d)", "P[" + rs(d) + ",0" + co(u, v) + "] . (id x d^-1)", true});
    out.push_back({"T1.12 (d,1-d,0)", "d^-1 . P[" + rs(d) + "," + rs(Rational(1) - d) + co(u, v) + "]",
                   true});
    return out;
}

std::vector<CatalogEntry> table4_catalog(RationalSampler& s) {
    Rational u = s.generic_coset(), v = s.generic_coset();
    auto xi = s.finite_xi();
    auto eta = s.finite_xi();
    // footnote restrictions: line 1 {d1,d2,d1+d2} not subset of {0,1}; line 2
    // (d1,d2) != (0,0); lines 3-4 d != 0; lines 6-7 d != 0,1
    Rational d1 = sample_delta_avoiding(s, {Rational(0), Rational(1)});
    Rational d2 = sample_delta_avoiding(s, {Rational(0), Rational(1), -d1, Rational(1) - d1});
    Rational d = sample_delta_avoiding(s, {Rational(0), Rational(1)});
    std::vector<CatalogEntry> out;
    out.push_back({"T4.1 P", "P[" + rs(d1) + "," + rs(d2) + co(u, v) + "]", false});
    out.push_back({"T4.2 B", "B[" + rs(d1) + "," + rs(d2) + co(u, v) + "]", false});
    out.push_back({"T4.3 B(xi) on A x Omega",
                   "B[0," + rs(d) + ";0," + rs(u) + "]" + pt(xi), false});
    out.push_back({"T4.4 B(xi) into B",
                   "B[" + rs(d) + "," + rs(-d) + co(u, normalize_coset(-u)) + "]" + pt(xi), false});
    out.push_back({"T4.5 Grozman", "G[" + rs(u) + "," + rs(v) + "]", false});
    out.push_back({"T4.6 P(dxi x id)",
                   "P[1," + rs(d) + ";0," + rs(u) + "] . (dxi" + pt(xi) + " x id)", false});
    out.push_back({"T4.7 d^xi P",
                   "d^xi" + pt(xi) + " . P[" + rs(d) + "," + rs(-d) + co(u, normalize_coset(-u)) +
                       "]",
                   false});
    out.push_back({"T4.8 B(dxi x id)",
                   "B[1," + rs(d) + ";0," + rs(u) + "] . (dxi" + pt(xi) + " x id)", false});
    out.push_back({"T4.9 d^xi B",
                   "d^xi" + pt(xi) + " . B[" + rs(d) + "," + rs(-d - 1) +
                       co(u, normalize_coset(-u)) + "]",
                   false});
    out.push_back({"T4.10 B(eta)(id x dxi)",
                   "B[0,1;0,0]" + pt(eta) + " . (id x dxi" + pt(xi) + ")", false});
    out.push_back({"T4.11 d^xi B(eta)", "d^xi" + pt(xi) + " . B[0,-1;0,0]" + pt(eta), false});
    out.push_back({"T4.12 B(eta)(dxi x id)",
                   "B[1,-1;0,0]" + pt(eta) + " . (dxi" + pt(xi) + " x id)", false});
    out.push_back({"T4.13 P(dxi x dxi)",
                   "P[1,1;0,0] . (dxi" + pt(eta) + " x dxi" + pt(xi) + ")", false});
    out.push_back({"T4.14 d^xi P (dxi x id)",
                   "d^xi" + pt(xi) + " . P[1,-1;0,0] . (dxi" + pt(eta) + " x id)", false});
    out.push_back({"T4.15 B(dxi x dxi)",
                   "B[1,1;0,0] . (dxi" + pt(eta) + " x dxi" + pt(xi) + ")", false});
    out.push_back({"T4.16 d^xi B (dxi x id)",
                   "d^xi" + pt(xi) + " . B[1,-2;0,0] . (dxi" + pt(eta) + " x id)", false});
    return out;
}

std::vector<CatalogEntry> table5_catalog(RationalSampler& s) {
    Rational u = s.generic_coset(), v = s.generic_coset();
    if (u + v == 1) v = v / 2 + Rational(1, 103);
    auto xi = s.finite_xi();
    Rational mu = normalize_coset(-u);
    std::vector<CatalogEntry> out;
    out.push_back({"T5.1a P(d x id)", "P[1,0" + co(u, v) + "] . (d x id)", false});
    out.push_back({"T5.1b P(id x d)", "P[0,1" + co(u, v) + "] . (id x d)", false});
    out.push_back({"T5.2 P into coset 0", "P[0,0" + co(u, mu) + "]", false});
    out.push_back({"T5.3 P with Omega^1_0", "P[0,1" + co(u, Rational(0)) + "]", false});
    out.push_back({"T5.4 d^xi P", "d^xi" + pt(xi) + " . P[0,0" + co(u, mu) + "]", false});
    out.push_back({"T5.5 P(dxi x id)", "P[1,0;0," + rs(u) + "] . (dxi" + pt(xi) + " x id)",
                   false});
    return out;
}

}  // namespace witt
