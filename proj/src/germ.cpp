#include "witt/germ.hpp"

#include <nlohmann/json.hpp>
#include <functional>
#include <set>
#include <sstream>

#include "witt/equivariance.hpp"
#include "witt/linalg.hpp"

namespace witt {

namespace {

MultiPoly pv(Var v) { return MultiPoly::var(v); }
MultiPoly pc(long n, long d = 1) { return MultiPoly(Rational(n, d)); }

MultiPoly shift_xy(const MultiPoly& p, long dx, long dy) {
    return p.substitute_affine(VX, Rational(1), Rational(dx))
        .substitute_affine(VY, Rational(1), Rational(dy));
}

}  // namespace

RecurrencePolys coeff_polys(int k) {
    MultiPoly d1 = pv(VD1), d2 = pv(VD2), g = pv(VG), x = pv(VX), y = pv(VY);
    Rational kk(k);
    RecurrencePolys r;
    r.a = (x + d1 * kk) * (y - d2 * kk);
    r.b = (d1 + d2 - g - d1 * d1 - d2 * d2 + g * g) * Rational(k * k) - x * y * Rational(2);
    r.c = (x - d1 * kk) * (y + d2 * kk);
    return r;
}

std::array<std::array<MultiPoly, 6>, 6> build_matrix() {
    RecurrencePolys r1 = coeff_polys(1), r2 = coeff_polys(2);
    auto A = [&](int i, long l) { return shift_xy(i == 1 ? r1.a : r2.a, l, -l); };
    auto B = [&](int i, long l) { return shift_xy(i == 1 ? r1.b : r2.b, l, -l); };
    auto C = [&](int i, long l) { return shift_xy(i == 1 ? r1.c : r2.c, l, -l); };
    MultiPoly z;
    std::array<std::array<MultiPoly, 6>, 6> m = {{
        {A(1, 5), B(1, 5), C(1, 5), z, z, z},
        {z, A(1, 4), B(1, 4), C(1, 4), z, z},
        {z, z, A(1, 3), B(1, 3), C(1, 3), z},
        {z, z, z, A(1, 2), B(1, 2), C(1, 2)},
        {A(2, 4), z, B(2, 4), z, C(2, 4), z},
        {z, A(2, 3), z, B(2, 3), z, C(2, 3)},
    }};
    return m;
}

namespace {

// Cofactor expansion with minors memoized on the surviving-column bitmask.
MultiPoly det_cofactor(const std::array<std::array<MultiPoly, 6>, 6>& m) {
    std::map<unsigned, MultiPoly> memo;
    std::function<MultiPoly(int, unsigned)> minor = [&](int row, unsigned mask) -> MultiPoly {
        if (row == 6) return MultiPoly(Rational(1));
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;
        MultiPoly acc;
        int sign = 1;
        for (int c = 0; c < 6; ++c) {
            if (!(mask & (1u << c))) continue;
            if (!m[row][c].is_zero()) {
                MultiPoly sub = minor(row + 1, mask & ~(1u << c));
                MultiPoly term = m[row][c] * sub;
                acc += sign > 0 ? term : -term;
            }
            sign = -sign;
        }
        memo.emplace(mask, acc);
        return acc;
    };
    return minor(0, 0x3Fu);
}

MultiPoly c_poly() {
    MultiPoly d1 = pv(VD1), d2 = pv(VD2), g = pv(VG), one = pc(1);
    MultiPoly s = d1 + d2;
    return (s + g) * (s - g) * (s + one - g) * (s - one + g);
}

MultiPoly must_divide(const MultiPoly& a, const MultiPoly& b, const char* what) {
    auto q = divide_exact(a, b);
    if (!q) throw DivisionFailure(std::string("exact division failed: ") + what);
    return *q;
}

}  // namespace

DetBundle compute_determinant() {
    auto m = build_matrix();
    DetBundle bundle;
    MultiPoly d_cof = det_cofactor(m);
    std::vector<std::vector<MultiPoly>> rows(6, std::vector<MultiPoly>(6));
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) rows[i][j] = m[i][j];
    MultiPoly d_bar = bareiss_determinant<MultiPoly>(
        rows,
        [](const MultiPoly& a, const MultiPoly& b) {
            return must_divide(a, b, "Bareiss pivot step");
        },
        MultiPoly(Rational(1)));
    bundle.methods_agree = (d_cof == d_bar);
    bundle.D = d_cof;
    bundle.C = c_poly();
    bundle.p = bundle.D.coefficients_in_xy();
    for (auto& [ij, pij] : bundle.p)
        bundle.q[ij] = must_divide(pij, bundle.C, "p_{i,j} / C");
    MultiPoly shifted = bundle.D.substitute_affine(VX, Rational(1), Rational(-7, 2))
                            .substitute_affine(VY, Rational(1), Rational(7, 2));
    MultiPoly shifted_over_c = must_divide(shifted, bundle.C, "D(x-7/2,y+7/2) / C");
    bundle.qtilde = shifted_over_c.coefficients_in_xy();
    return bundle;
}

const DetBundle& determinant_bundle() {
    static DetBundle bundle = compute_determinant();
    return bundle;
}

std::string DetBundle::json() const {
    nlohmann::json j;
    j["methods_agree"] = methods_agree;
    j["D"] = nlohmann::json::parse(poly_to_json(D));
    j["C"] = nlohmann::json::parse(poly_to_json(C));
    auto dump = [](const std::map<std::pair<int, int>, MultiPoly>& m) {
        nlohmann::json out;
        for (auto& [ij, p] : m) {
            std::string key = std::to_string(ij.first) + "," + std::to_string(ij.second);
            out[key] = nlohmann::json::parse(poly_to_json(p));
        }
        return out;
    };
    j["p"] = dump(p);
    j["q"] = dump(q);
    j["qtilde"] = dump(qtilde);
    return j.dump();
}

// --- zero sets ---------------------------------------------------------------

namespace {

bool hit_component(ZeroComponent c, const Rational& d1, const Rational& d2, const Rational& g) {
    switch (c) {
        case ZeroComponent::H0: return g == d1 + d2;
        case ZeroComponent::H1: return g == d1 + d2 + 1;
        case ZeroComponent::D1: return d1 == 0 && g == d2 + 2;
        case ZeroComponent::D2: return d2 == 0 && g == d1 + 2;
        case ZeroComponent::D3: return d2 == 1 && g == d1;
        case ZeroComponent::D4: return d1 == 1 && g == d2;
        case ZeroComponent::D5: return g == 1 && d1 + d2 == -1;
        case ZeroComponent::D6: return g == 0 && d1 + d2 == 1;
        case ZeroComponent::P1: return d1 == 0 && d2 == 0 && g == 3;
        case ZeroComponent::P2: return d1 == 0 && d2 == -2 && g == 1;
        case ZeroComponent::P3: return d1 == -2 && d2 == 0 && g == 1;
        case ZeroComponent::P4: return d1 == 1 && d2 == 1 && g == 0;
        case ZeroComponent::P5:
            return d1 == Rational(-2, 3) && d2 == Rational(-2, 3) && g == Rational(5, 3);
    }
    return false;
}

const char* component_name(ZeroComponent c) {
    switch (c) {
        case ZeroComponent::H0: return "H0";
        case ZeroComponent::H1: return "H1";
        case ZeroComponent::D1: return "D1";
        case ZeroComponent::D2: return "D2";
        case ZeroComponent::D3: return "D3";
        case ZeroComponent::D4: return "D4";
        case ZeroComponent::D5: return "D5";
        case ZeroComponent::D6: return "D6";
        case ZeroComponent::P1: return "P1";
        case ZeroComponent::P2: return "P2";
        case ZeroComponent::P3: return "P3";
        case ZeroComponent::P4: return "P4";
        case ZeroComponent::P5: return "P5";
    }
    return "?";
}

const ZeroComponent kAllComponents[] = {
    ZeroComponent::H0, ZeroComponent::H1, ZeroComponent::D1, ZeroComponent::D2,
    ZeroComponent::D3, ZeroComponent::D4, ZeroComponent::D5, ZeroComponent::D6,
    ZeroComponent::P1, ZeroComponent::P2, ZeroComponent::P3, ZeroComponent::P4,
    ZeroComponent::P5};

}  // namespace

std::string ZeroSetHit::str() const {
    std::string s = component_name(comp);
    if (tau_image) s += "^tau";
    return s;
}

std::vector<ZeroSetHit> zero_set_membership(const TripleSignature& t) {
    std::vector<ZeroSetHit> hits;
    for (ZeroComponent c : kAllComponents) {
        if (hit_component(c, t.d1, t.d2, t.g)) hits.push_back({c, false});
        if (hit_component(c, t.d1, t.d2, Rational(1) - t.g)) hits.push_back({c, true});
    }
    return hits;
}

bool in_frak_z(const TripleSignature& t) {
    for (ZeroComponent c : kAllComponents)
        if (hit_component(c, t.d1, t.d2, t.g)) return true;
    return false;
}

bool frak_z_star(const TripleSignature& t) {
    auto in01 = [](const Rational& r) { return r == 0 || r == 1; };
    if (in01(t.d1) && in01(t.d2) && in01(t.g)) return false;
    return in_frak_z(t);
}

bool in_big_z_display(const TripleSignature& t) {
    const ZeroComponent displayed[] = {ZeroComponent::H0, ZeroComponent::H1, ZeroComponent::D1,
                                       ZeroComponent::D2, ZeroComponent::D3, ZeroComponent::D4,
                                       ZeroComponent::P1, ZeroComponent::P2};
    for (ZeroComponent c : displayed) {
        if (hit_component(c, t.d1, t.d2, t.g)) return true;
        if (hit_component(c, t.d1, t.d2, Rational(1) - t.g)) return true;
    }
    return false;
}

// --- Theorem 2 ----------------------------------------------------------------

GermDim theorem2_dim(const TripleSignature& t) {
    GermDim out;
    out.components = zero_set_membership(t);
    std::string us = t.u ? to_string(*t.u) : "0";
    std::string vs = t.v ? to_string(*t.v) : "0";
    auto in01 = [](const Rational& r) { return r == 0 || r == 1; };
    if (in01(t.d1) && in01(t.d2) && in01(t.g)) {
        out.dim = 2;
        out.generators = {"P[0,1;" + us + "," + vs + "] . (id x d)",
                          "P[1,0;" + us + "," + vs + "] . (d x id)"};
        return out;
    }
    if (!in_frak_z(t)) {
        out.dim = 0;
        return out;
    }
    out.dim = 1;
    std::string d1 = to_string(t.d1), d2 = to_string(t.d2);
    std::string co = ";" + us + "," + vs;
    // Table-1 row, in the table's own order.
    auto has = [&](ZeroComponent c) { return hit_component(c, t.d1, t.d2, t.g); };
    if (has(ZeroComponent::P5)) out.generators = {"G[" + us + "," + vs + "]"};
    else if (has(ZeroComponent::P1)) out.generators = {"B[1,1" + co + "] . (d x d)"};
    else if (has(ZeroComponent::P2)) out.generators = {"d . B[1,-2" + co + "] . (d x id)"};
    else if (has(ZeroComponent::P3)) out.generators = {"d . B[-2,1" + co + "] . (id x d)"};
    else if (has(ZeroComponent::D1)) out.generators = {"B[1," + d2 + co + "] . (d x id)"};
    else if (has(ZeroComponent::D2)) out.generators = {"B[" + d1 + ",1" + co + "] . (id x d)"};
    else if (has(ZeroComponent::D5)) out.generators = {"d . B[" + d1 + "," + d2 + co + "]"};
    else if (has(ZeroComponent::H1)) out.generators = {"B[" + d1 + "," + d2 + co + "]"};
    else if (has(ZeroComponent::H0)) out.generators = {"P[" + d1 + "," + d2 + co + "]"};
    else if (has(ZeroComponent::D4)) out.generators = {"P[0," + d2 + co + "] . (d^-1 x id)"};
    else if (has(ZeroComponent::D3)) out.generators = {"P[" + d1 + ",0" + co + "] . (id x d^-1)"};
    else if (has(ZeroComponent::D6)) out.generators = {"d^-1 . P[" + d1 + "," + d2 + co + "]"};
    return out;
}

// --- recurrence oracle ----------------------------------------------------------

namespace {

long cone_nullity(const TripleSignature& t, const Rational& x0, const Rational& y0, long k) {
    auto idx = [k](long i, long j) { return static_cast<int>(i * (k + 1) + j); };
    auto inside = [k](long i, long j) { return 0 <= i && i <= k && 0 <= j && j <= k; };
    SparseLinearSystem sys(static_cast<int>((k + 1) * (k + 1)));

    std::array<Rational, kNumVars> pt;
    pt[VD1] = t.d1;
    pt[VD2] = t.d2;
    pt[VG] = t.g;
    RecurrencePolys rec1 = coeff_polys(1), rec2 = coeff_polys(2);

    for (long i = 0; i <= k; ++i) {
        Rational x = x0 + i;
        for (long j = 0; j <= k; ++j) {
            Rational y = y0 + j;
            pt[VX] = x;
            pt[VY] = y;
            // L_{+-1} equivariance
            for (long m : {-1L, 1L}) {
                if (!inside(i + m, j) || !inside(i, j + m)) continue;
                sys.add_row({{idx(i, j), Rational(m) * t.g + x + y},
                             {idx(i + m, j), -(Rational(m) * t.d1 + x)},
                             {idx(i, j + m), -(Rational(m) * t.d2 + y)}});
            }
            // Casimir recurrences, k = 1 and 2 (anti-diagonal stencils)
            for (int kk : {1, 2}) {
                if (!inside(i + kk, j - kk) || !inside(i - kk, j + kk)) continue;
                const RecurrencePolys& rp = kk == 1 ? rec1 : rec2;
                sys.add_row({{idx(i + kk, j - kk), rp.a.eval(pt)},
                             {idx(i, j), rp.b.eval(pt)},
                             {idx(i - kk, j + kk), rp.c.eval(pt)}});
            }
        }
    }
    return static_cast<long>(sys.cols() - sys.rank());
}

}  // namespace

long recurrence_germ_oracle(const TripleSignature& t, const Rational& x0, const Rational& y0,
                            long depth) {
    long n1 = cone_nullity(t, x0, y0, depth);
    long n2 = cone_nullity(t, x0, y0, depth + 5);
    if (n1 != n2)
        throw UnstableDimension("germ oracle nullity did not stabilize between depth and depth+5");
    return n1;
}

// --- section 6.3 identities -----------------------------------------------------

namespace {

struct EliminationRows {
    // (6): e1 X(x+1,y-1) + e2 X(x,y) + e3 X(x-1,y+1) = 0
    MultiPoly e1, e2, e3;
    // (7): A10 X(x+1,y-1) + B10 X(x,y) + C10 X(x-1,y+1) = 0
    MultiPoly f1, f2, f3;
};

EliminationRows eliminate(const RecurrencePolys& r1, const RecurrencePolys& r2) {
    auto A1 = [&](long l) { return shift_xy(r1.a, l, -l); };
    auto B1 = [&](long l) { return shift_xy(r1.b, l, -l); };
    auto C1 = [&](long l) { return shift_xy(r1.c, l, -l); };
    EliminationRows rows;
    // substitute the k=1 relations at (x+1,y-1) and (x-1,y+1) into the k=2 relation
    // scaled by A_{1,1} C_{1,-1}
    rows.e1 = -(r2.a * B1(1) * C1(-1));
    rows.e2 = r2.b * A1(1) * C1(-1) - r2.a * C1(1) * C1(-1) - A1(1) * A1(-1) * r2.c;
    rows.e3 = -(A1(1) * B1(-1) * r2.c);
    rows.f1 = A1(0);
    rows.f2 = B1(0);
    rows.f3 = C1(0);
    return rows;
}

}  // namespace

StepIdentityReport verify_step_identities() {
    StepIdentityReport rep;
    RecurrencePolys r1 = coeff_polys(1), r2 = coeff_polys(2);
    EliminationRows rows = eliminate(r1, r2);

    // identity (8): a2(x,y) b1(x+1,y-1) c1(x-1,y+1) c1(x,y)
    //             = a1(x,y) a1(x+1,y-1) b1(x-1,y+1) c2(x,y)
    MultiPoly lhs8 = r2.a * shift_xy(r1.b, 1, -1) * shift_xy(r1.c, -1, 1) * r1.c;
    MultiPoly rhs8 = r1.a * shift_xy(r1.a, 1, -1) * shift_xy(r1.b, -1, 1) * r2.c;
    MultiPoly rhs8_display = r1.a * shift_xy(r1.a, 1, 1) * shift_xy(r1.b, -1, 1) * r2.c;

    // cross-product of (6) and (7) reproduces (8) up to sign
    MultiPoly cross = rows.e1 * rows.f3 - rows.f1 * rows.e3;
    if (cross != rhs8 - lhs8)
        rep.notes.push_back("elimination cross-product does not reproduce identity (8)");

    rep.identity8_on_01 = true;
    for (long a : {0L, 1L}) {
        for (long b : {0L, 1L}) {
            for (long c : {0L, 1L}) {  // gamma in {0,1} makes tau = 0 for deltas in {0,1}
                MultiPoly diff = (lhs8 - rhs8)
                                     .substitute(VD1, Rational(a))
                                     .substitute(VD2, Rational(b))
                                     .substitute(VG, Rational(c));
                if (!diff.is_zero()) rep.identity8_on_01 = false;
            }
        }
    }
    {
        MultiPoly diff = (lhs8 - rhs8)
                             .substitute(VD1, Rational(1, 3))
                             .substitute(VD2, Rational(1, 5))
                             .substitute(VG, Rational(2, 7));
        rep.identity8_fails_generic = !diff.is_zero();
    }
    {
        MultiPoly diff = (lhs8 - rhs8_display)
                             .substitute(VD1, Rational(0))
                             .substitute(VD2, Rational(0))
                             .substitute(VG, Rational(0));
        rep.displayed_rhs_differs = !diff.is_zero();
        if (rep.displayed_rhs_differs)
            rep.notes.push_back(
                "printed identity (8) uses a_1(x+1,y+1); the elimination yields a_1(x+1,y-1)");
    }

    // ad-bc at d1 = d2 = -1/2 with gamma(1-gamma) = -3/2, i.e. tau = 0. gamma only
    // enters through tau, so substitute the b_k coefficient directly.
    {
        RecurrencePolys s1, s2;
        MultiPoly x = pv(VX), y = pv(VY);
        Rational mh(-1, 2);
        auto subst = [&](const MultiPoly& p) {
            return p.substitute(VD1, mh).substitute(VD2, mh);
        };
        s1.a = subst(r1.a);
        s1.c = subst(r1.c);
        s2.a = subst(r2.a);
        s2.c = subst(r2.c);
        s1.b = -(x * y) * Rational(2);  // tau = 0
        s2.b = s1.b;
        EliminationRows er = eliminate(s1, s2);
        MultiPoly adbc = er.e1 * er.f2 - er.e2 * er.f1;
        MultiPoly target = (pc(1) + y * Rational(2)) * (x * Rational(2) - pc(1)) *
                           (x * y * Rational(2) - pc(1)) * Rational(9, 32);
        if (adbc == target) {
            rep.adbc_matches = true;
            rep.adbc_sign = 1;
        } else if (adbc == -target) {
            rep.adbc_matches = true;
            rep.adbc_sign = -1;
        } else {
            rep.notes.push_back("ad-bc does not match (9/32)(1+2y)(2x-1)(2xy-1) up to sign");
        }
    }
    return rep;
}

// --- Appendix A -------------------------------------------------------------------

namespace {

// Literal transcriptions of the Appendix A displays (the "++" read as "+").
MultiPoly appendix_16qt00() {
    MultiPoly d1 = pv(VD1), d2 = pv(VD2), g = pv(VG);
    MultiPoly gg = g - g * g;  // gamma(1-gamma)
    MultiPoly s2 = d1 * d1 + d2 * d2;
    MultiPoly pr = d1 * d2;
    MultiPoly sum = d1 + d2;
    MultiPoly common = (d1 * Rational(4) + pc(1)) * (d2 * Rational(4) + pc(1)) * gg +
                       (s2 - pr) * pr * Rational(16);
    MultiPoly br1 = common + (s2 - pr * sum * Rational(3)) * Rational(4) +
                    (s2 * Rational(13) - pr * Rational(50)) + sum * Rational(11) + pc(2);
    MultiPoly br2 = common + s2 * sum * Rational(4) - (s2 + pr * Rational(6)) * Rational(3) -
                    sum * Rational(7) + pc(6);
    return br1 * br2;
}

MultiPoly appendix_m4qt02_of(Var da, Var db) {
    // -(4) qtilde_{0,2} with (da,db) = (d1,d2); swapping gives qtilde_{2,0}
    MultiPoly a = pv(da), b = pv(db), g = pv(VG);
    MultiPoly gg = g - g * g;
    MultiPoly f = a * Rational(4) + pc(1);  // 4 d + 1
    return f * f * gg * gg +
           f * (f * b * b - f * (a + pc(1)) * b * Rational(2) + a.pow(3) * Rational(4) +
                a * a * Rational(5) + a * Rational(2) + pc(4)) *
               gg * Rational(2) +
           f * f * b.pow(4) - f * f * (a + pc(1)) * b.pow(3) * Rational(4) +
           (a.pow(4) * Rational(32) + a.pow(3) * Rational(112) + a * a * Rational(142) +
            a * Rational(52) - pc(13)) *
               b * b -
           (a.pow(5) * Rational(64) + a.pow(4) * Rational(32) - a.pow(3) * Rational(92) +
            a * a * Rational(68) + a * Rational(82) - pc(4)) *
               b -
           f * (a - pc(1)) * (a + pc(1)) * (a + pc(2)) * (a * a * Rational(4) + a - pc(6));
}

MultiPoly appendix_half_qt11() {
    MultiPoly d1 = pv(VD1), d2 = pv(VD2), g = pv(VG);
    MultiPoly gg = g - g * g;
    MultiPoly s2 = d1 * d1 + d2 * d2;
    MultiPoly pr = d1 * d2;
    MultiPoly sum = d1 + d2;
    return (pr * pr * Rational(28) - sum * pr * Rational(4) + s2 - pr * Rational(20) - sum) * gg +
           (s2 * Rational(7) - pr * Rational(10)) * pr * pr * Rational(4) -
           (d1.pow(3) + d2.pow(3)) * pr * Rational(4) +
           (d1.pow(4) + d2.pow(4) - s2 * pr * Rational(12) - pr * pr * Rational(6)) +
           (s2 + pr) * sum * Rational(2) - (s2 - pr * Rational(14)) - sum * Rational(2);
}

void diff_report(const char* name, const MultiPoly& recomputed, const MultiPoly& transcribed,
                 std::vector<std::string>& out) {
    MultiPoly diff = recomputed - transcribed;
    if (diff.is_zero()) return;
    std::ostringstream os;
    os << name << ": transcription differs from recomputation in " << diff.terms().size()
       << " monomial(s): ";
    bool first = true;
    for (auto it = diff.terms().rbegin(); it != diff.terms().rend(); ++it) {
        if (!first) os << ", ";
        first = false;
        os << MultiPoly::monomial(it->first, it->second).str();
    }
    out.push_back(os.str());
}

}  // namespace

AppendixReport verify_appendix(const DetBundle& b) {
    AppendixReport rep;
    rep.methods_agree = b.methods_agree;
    rep.divisibility_ok = true;
    for (auto& [ij, pij] : b.p)
        if (!b.q.count(ij)) rep.divisibility_ok = false;

    // exactly the seven listed non-zero qtilde
    const std::set<std::pair<int, int>> expected = {{0, 0}, {0, 2}, {1, 1}, {2, 0},
                                                    {1, 3}, {2, 2}, {3, 1}};
    std::set<std::pair<int, int>> got;
    for (auto& [ij, qt] : b.qtilde)
        if (!qt.is_zero()) got.insert(ij);
    rep.support_ok = (got == expected);

    // D(x,y) = D(-x-7, -y+7)
    MultiPoly mirrored = b.D.substitute_affine(VX, Rational(-1), Rational(-7))
                             .substitute_affine(VY, Rational(-1), Rational(7));
    rep.symmetry_ok = (mirrored == b.D);

    auto getq = [&](int i, int j) {
        auto it = b.q.find({i, j});
        return it == b.q.end() ? MultiPoly() : it->second;
    };
    auto getqt = [&](int i, int j) {
        auto it = b.qtilde.find({i, j});
        return it == b.qtilde.end() ? MultiPoly() : it->second;
    };
    rep.qtilde_matches_q = getqt(1, 3) == getq(1, 3) && getqt(3, 1) == getq(3, 1) &&
                           getqt(2, 2) == getq(2, 2);

    rep.tau_invariance_ok = true;
    for (auto& [ij, pij] : b.p) {
        MultiPoly flipped = pij.substitute_affine(VG, Rational(-1), Rational(1));
        if (flipped != pij) rep.tau_invariance_ok = false;
    }

    // transcription comparison (typo report; mismatches are not fatal)
    diff_report("16*qtilde_{0,0}", getqt(0, 0) * Rational(16), appendix_16qt00(),
                rep.transcription_mismatches);
    diff_report("-4*qtilde_{0,2}", getqt(0, 2) * Rational(-4), appendix_m4qt02_of(VD1, VD2),
                rep.transcription_mismatches);
    diff_report("-4*qtilde_{2,0}", getqt(2, 0) * Rational(-4), appendix_m4qt02_of(VD2, VD1),
                rep.transcription_mismatches);
    diff_report("(1/2)*qtilde_{1,1}", getqt(1, 1) * Rational(1, 2), appendix_half_qt11(),
                rep.transcription_mismatches);
    {
        // section 7.3 display of q_{2,2}
        MultiPoly d1 = pv(VD1), d2 = pv(VD2), g = pv(VG);
        MultiPoly gg = g - g * g;
        MultiPoly s2 = d1 * d1 + d2 * d2;
        MultiPoly pr = d1 * d2;
        MultiPoly sum = d1 + d2;
        MultiPoly q22_display =
            gg * gg + gg * (s2 - pr * Rational(2) - sum * Rational(2) + pc(4)) * Rational(2) +
            (d1.pow(4) + d2.pow(4) - pr * s2 * Rational(4) + pr * pr * Rational(38)) -
            sum.pow(3) * Rational(4) - (s2 * Rational(13) - pr * Rational(6)) +
            sum * Rational(4) + pc(12);
        diff_report("q_{2,2}", getq(2, 2), q22_display, rep.transcription_mismatches);
    }
    {
        // the q_{1,3} display, with the printed "d1^1" taken literally
        MultiPoly d1 = pv(VD1), d2 = pv(VD2), g = pv(VG);
        MultiPoly gg = g - g * g;
        MultiPoly bracket_printed =
            gg + d1 + d2 * d2 - d1 * d2 * Rational(4) + (d1 - d2) * Rational(3) + pc(2);
        diff_report("-(1/8)*q_{1,3} [printed d1^1]", getq(1, 3) * Rational(-1, 8),
                    d1 * (d1 - pc(1)) * bracket_printed, rep.transcription_mismatches);
    }
    rep.notes.push_back(
        "displayed frak-Z (4 planes, 8 lines, 4 points) omits P5 and P5^tau; both are common "
        "zeros of p13, p31, p22 (see frak-z reconciliation test)");
    return rep;
}

FactorizationReport verify_factorizations(const DetBundle& b) {
    FactorizationReport rep;
    MultiPoly d1 = pv(VD1), d2 = pv(VD2), g = pv(VG);
    auto getq = [&](int i, int j) {
        auto it = b.q.find({i, j});
        return it == b.q.end() ? MultiPoly() : it->second;
    };

    MultiPoly r13 = getq(1, 3) * Rational(-1, 8);
    MultiPoly r31 = getq(3, 1) * Rational(-1, 8);
    MultiPoly Q, Qp;
    {
        auto t1 = divide_exact(r13, d1);
        auto t2 = t1 ? divide_exact(*t1, d1 - pc(1)) : std::nullopt;
        if (t2 && t2->total_degree() == 2) {
            rep.q13_factors = true;
            Q = *t2;
            rep.q13_bracket = Q.str();
        }
    }
    {
        auto t1 = divide_exact(r31, d2);
        auto t2 = t1 ? divide_exact(*t1, d2 - pc(1)) : std::nullopt;
        if (t2 && t2->total_degree() == 2) {
            rep.q31_factors = true;
            Qp = *t2;
        }
    }
    if (rep.q13_factors) {
        MultiPoly gg = g - g * g;
        MultiPoly with_square =
            gg + d1 * d1 + d2 * d2 - d1 * d2 * Rational(4) + (d1 - d2) * Rational(3) + pc(2);
        MultiPoly with_linear =
            gg + d1 + d2 * d2 - d1 * d2 * Rational(4) + (d1 - d2) * Rational(3) + pc(2);
        if (Q == with_square) {
            rep.typo_resolved_to_square = true;
            rep.notes.push_back("q13 bracket matches the d1^2 reading (printed d1^1 is a typo)");
        } else if (Q == with_linear) {
            rep.notes.push_back("q13 bracket matches the printed d1^1 reading");
        } else {
            rep.notes.push_back("q13 bracket matches neither reading: " + Q.str());
        }
    }
    if (rep.q13_factors && rep.q31_factors) {
        auto c = divide_exact(Qp - Q, d1 - d2);
        rep.qdiff_proportional = c && c->is_constant();
    }
    {
        // q22 on the diagonal modulo gamma(1-gamma) = 2 d^2 - 2
        MultiPoly q22d = getq(2, 2).substitute_poly(VD2, d1);
        MultiPoly modulus = g * g - g + (d1 * d1 * Rational(2) - pc(2));
        MultiPoly reduced = reduce_mod_univar(q22d, modulus, VG);
        MultiPoly target = d1 * (d1 * Rational(3) + pc(2)) * (d1 - pc(1)) * (d1 - pc(1)) *
                           Rational(12);
        rep.q22_diagonal_ok = (reduced == target) && reduced.degree(VG) <= 0;
    }
    if (rep.q31_factors) {
        // section 7.3 Step 4 display: Q'(0, d2, g) = -(g+d2+1)(g-d2-2)
        MultiPoly q_at0 = Qp.substitute(VD1, Rational(0));
        MultiPoly target = -((g + d2 + pc(1)) * (g - d2 - pc(2)));
        rep.q_at_zero_factors = (q_at0 == target);
    }
    return rep;
}

}  // namespace witt
