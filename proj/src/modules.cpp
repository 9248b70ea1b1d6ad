#include "witt/modules.hpp"

#include <nlohmann/json.hpp>
#include <sstream>

namespace witt {

Rational normalize_coset(const Rational& u) {
    return u - Rational(rational_floor(u));  // in [0,1)
}

Weight make_weight(const Rational& value) {
    Int f = rational_floor(value);
    return Weight{value - Rational(f), static_cast<long>(f)};
}

std::pair<Rational, long> add_cosets(const Rational& a, const Rational& b) {
    Rational s = a + b;
    if (s >= 1) return {s - 1, 1};
    return {s, 0};
}

ModuleSpec ModuleSpec::omega(const Rational& delta, const Rational& coset) {
    ModuleSpec m;
    m.family = Family::Omega;
    m.delta = delta;
    m.coset = normalize_coset(coset);
    return m;
}

ModuleSpec ModuleSpec::afam(const Rational& a, const Rational& b) {
    ModuleSpec m;
    m.family = Family::A;
    if (a == 0 && b == 0) { m.family = Family::AbarPlusC; return m; }
    m.a = a;
    m.b = b;
    return m;
}

ModuleSpec ModuleSpec::bfam(const Rational& a, const Rational& b) {
    ModuleSpec m = afam(a, b);
    if (m.family == Family::A) m.family = Family::B;
    return m;
}

ModuleSpec ModuleSpec::abar_plus_c() {
    ModuleSpec m;
    m.family = Family::AbarPlusC;
    return m;
}

ModuleSpec ModuleSpec::trivial() {
    ModuleSpec m;
    m.family = Family::Trivial;
    return m;
}

std::pair<Rational, Rational> ModuleSpec::xi_normalized() const {
    if (a != 0) return {Rational(1), b / a};
    return {Rational(0), Rational(1)};
}

std::vector<Rational> ModuleSpec::deg_values() const {
    if (family == Family::Omega && delta != 0 && delta != 1) return {delta};
    if (family == Family::Trivial) return {Rational(0)};
    return {Rational(0), Rational(1)};
}

bool ModuleSpec::deg_is_01() const {
    return !(family == Family::Omega && delta != 0 && delta != 1);
}

ModuleSpec ModuleSpec::dual() const {
    switch (family) {
        case Family::Omega: return omega(Rational(1) - delta, normalize_coset(-coset));
        case Family::A: { ModuleSpec m = *this; m.family = Family::B; return m; }
        case Family::B: { ModuleSpec m = *this; m.family = Family::A; return m; }
        default: return *this;
    }
}

Rational ModuleSpec::casimir() const {
    if (family == Family::Omega) return delta * delta - delta;
    return Rational(0);
}

bool ModuleSpec::is_irreducible() const {
    if (family == Family::Trivial) return true;
    if (family != Family::Omega) return false;
    if (coset != 0) return true;
    return delta != 0 && delta != 1;
}

ModuleSpec ModuleSpec::canonical() const {
    if (family == Family::Omega && coset == 0) {
        if (delta == 0) return bfam(Rational(0), Rational(1));
        if (delta == 1) return afam(Rational(0), Rational(1));
    }
    if (family == Family::A || family == Family::B) {
        auto [na, nb] = xi_normalized();
        ModuleSpec m = *this;
        m.a = na;
        m.b = nb;
        return m;
    }
    return *this;
}

bool ModuleSpec::operator==(const ModuleSpec& o) const {
    if (family != o.family) return false;
    switch (family) {
        case Family::Omega: return delta == o.delta && coset == o.coset;
        case Family::A:
        case Family::B: return a == o.a && b == o.b;
        default: return true;
    }
}

bool ModuleSpec::same_module(const ModuleSpec& o) const {
    ModuleSpec x = canonical(), y = o.canonical();
    if (x == y) return true;
    // d : Omega^0_u -> Omega^1_u for u not in Z
    if (x.family == Family::Omega && y.family == Family::Omega && x.coset == y.coset &&
        x.coset != 0) {
        auto in01 = [](const Rational& d) { return d == 0 || d == 1; };
        if (in01(x.delta) && in01(y.delta)) return true;
    }
    return false;
}

std::string ModuleSpec::str() const {
    std::ostringstream os;
    switch (family) {
        case Family::Omega:
            os << "Omega^" << to_string(delta) << "_" << to_string(coset);
            break;
        case Family::A: os << "A_(" << to_string(a) << "," << to_string(b) << ")"; break;
        case Family::B: os << "B_(" << to_string(a) << "," << to_string(b) << ")"; break;
        case Family::AbarPlusC: os << "Abar+C"; break;
        case Family::Trivial: os << "C"; break;
    }
    return os.str();
}

std::string ModuleSpec::json() const {
    nlohmann::json j;
    switch (family) {
        case Family::Omega:
            j["kind"] = "Omega";
            j["delta"] = to_string(delta);
            j["coset"] = to_string(coset);
            j["degree"] = deg_is_01() ? "{0,1}" : to_string(delta);
            break;
        case Family::A:
        case Family::B:
            j["kind"] = family == Family::A ? "A" : "B";
            j["proj"] = {to_string(a), to_string(b)};
            j["degree"] = "{0,1}";
            break;
        case Family::AbarPlusC:
            j["kind"] = "AbarPlusC";
            j["degree"] = "{0,1}";
            break;
        case Family::Trivial:
            j["kind"] = "Trivial";
            j["degree"] = "0";
            break;
    }
    return j.dump();
}

std::optional<ModuleSpec> ModuleSpec::parse(const std::string& text) {
    std::istringstream is(text);
    std::string kind;
    is >> kind;
    if (kind == "AbarC" || kind == "AbarPlusC") return abar_plus_c();
    std::string s1, s2;
    is >> s1;
    if (kind == "Omega") {
        if (!(is >> s2)) s2 = "0";
        auto d = parse_rational(s1), u = parse_rational(s2);
        if (!d || !u) return std::nullopt;
        return omega(*d, *u);
    }
    if (!(is >> s2)) return std::nullopt;
    auto a = parse_rational(s1), b = parse_rational(s2);
    if (!a || !b) return std::nullopt;
    if (kind == "A") return afam(*a, *b);
    if (kind == "B") return bfam(*a, *b);
    return std::nullopt;
}

Rational act(const ModuleSpec& spec, long m, const Weight& x) {
    switch (spec.family) {
        case Family::Omega:
            return Rational(m) * spec.delta + x.value();
        case Family::A: {
            long n = x.offset;  // A/B weights are integers
            if (n != 0) return Rational(m + n);
            return spec.a * m * m + spec.b * m;
        }
        case Family::B: {
            long n = x.offset;
            if (n + m != 0) return Rational(n);
            return spec.a * m * m + spec.b * m;
        }
        case Family::AbarPlusC: {
            long n = x.offset;
            if (n != 0) return Rational(m + n);
            return Rational(0);
        }
        case Family::Trivial:
            return Rational(0);
    }
    return Rational(0);
}

std::vector<std::string> check_linear_equivariance(const LinearTable& t, long mmax) {
    std::vector<std::string> violations;
    for (long m = -mmax; m <= mmax; ++m) {
        if (m == 0) continue;
        for (long k = t.source.lo; k <= t.source.hi; ++k) {
            if (!t.source.contains(k + m) || !t.target.contains(k) || !t.target.contains(k + m))
                continue;
            Weight w = t.source.weight(k);
            Rational lhs = act(t.target.spec, m, t.target.weight(k)) * t.at(k);
            Rational rhs = act(t.source.spec, m, w) * t.at(k + m);
            if (lhs != rhs) {
                std::ostringstream os;
                os << "m=" << m << " k=" << k << " residual=" << to_string(lhs - rhs);
                violations.push_back(os.str());
            }
        }
    }
    return violations;
}

LinearTable map_d(const Rational& coset, long lo, long hi) {
    Rational u = normalize_coset(coset);
    LinearTable t;
    t.source = WindowedModule{ModuleSpec::omega(Rational(0), u), lo, hi};
    t.target = WindowedModule{ModuleSpec::omega(Rational(1), u), lo, hi};
    for (long k = lo; k <= hi; ++k) {
        Rational x = t.source.weight(k).value();
        if (x != 0) t.coeff[k] = x;
    }
    return t;
}

LinearTable map_rho(const Rational& coset, long lo, long hi) {
    Rational u = normalize_coset(coset);
    LinearTable t;
    t.source = WindowedModule{ModuleSpec::omega(Rational(1), u), lo, hi};
    t.target = WindowedModule{ModuleSpec::omega(Rational(0), u), lo, hi};
    if (u != 0) {
        for (long k = lo; k <= hi; ++k) t.coeff[k] = 1 / t.source.weight(k).value();
    } else {
        // residue composite: e_0 -> e_0, everything else -> 0
        if (lo <= 0 && 0 <= hi) t.coeff[0] = 1;
    }
    return t;
}

LinearTable map_rho_invertible(const Rational& coset, long lo, long hi) {
    Rational u = normalize_coset(coset);
    LinearTable t;
    t.source = WindowedModule{ModuleSpec::omega(Rational(1), u), lo, hi};
    t.target = WindowedModule{ModuleSpec::omega(Rational(0), u), lo, hi};
    for (long k = lo; k <= hi; ++k) {
        Rational x = t.source.weight(k).value();
        if (x == 0) throw PartialDomainError("rho^{-1} requested at weight 0");
        t.coeff[k] = 1 / x;
    }
    return t;
}

LinearTable map_res(const ModuleSpec& afam, long lo, long hi) {
    LinearTable t;
    t.source = WindowedModule{afam, lo, hi};
    t.target = WindowedModule{ModuleSpec::trivial(), 0, 0};
    if (lo <= 0 && 0 <= hi) t.coeff[0] = 1;
    return t;
}

LinearTable map_d_xi(const ModuleSpec& bfam, long lo, long hi) {
    LinearTable t;
    t.source = WindowedModule{bfam, lo, hi};
    t.target = WindowedModule{ModuleSpec::omega(Rational(1), Rational(0)), lo, hi};
    for (long k = lo; k <= hi; ++k)
        if (k != 0) t.coeff[k] = Rational(k);
    return t;
}

LinearTable map_d_upper_xi(const ModuleSpec& afam, long lo, long hi) {
    LinearTable t;
    t.source = WindowedModule{ModuleSpec::omega(Rational(0), Rational(0)), lo, hi};
    t.target = WindowedModule{afam, lo, hi};
    for (long k = lo; k <= hi; ++k)
        if (k != 0) t.coeff[k] = Rational(k);
    return t;
}

namespace {

std::optional<LinearTable> verified(LinearTable t) {
    if (!check_linear_equivariance(t, 2).empty()) return std::nullopt;
    return t;
}

LinearTable diagonal(const ModuleSpec& s1, const ModuleSpec& s2, long lo, long hi,
                     const Rational& generic, const Rational& at_zero) {
    LinearTable t;
    t.source = WindowedModule{s1, lo, hi};
    t.target = WindowedModule{s2, lo, hi};
    for (long k = lo; k <= hi; ++k) {
        Rational c = (k == 0) ? at_zero : generic;
        if (c != 0) t.coeff[k] = c;
    }
    return t;
}

}  // namespace

std::optional<LinearTable> ks_isomorphism_check(const ModuleSpec& s1, const ModuleSpec& s2, long n) {
    const long lo = -n, hi = n;
    if (s1 == s2)
        return verified(diagonal(s1, s2, lo, hi, Rational(1), Rational(1)));

    // A_{la,lb} ~ A_{a,b} (and the B analogue): lambda-rescaling of the e_0 line.
    if (s1.family == s2.family && (s1.family == Family::A || s1.family == Family::B)) {
        bool prop = s1.a * s2.b == s1.b * s2.a;
        if (!prop) return std::nullopt;
        Rational lambda = (s1.a != 0) ? s2.a / s1.a : s2.b / s1.b;
        Rational at0 = s1.family == Family::A ? 1 / lambda : lambda;
        return verified(diagonal(s1, s2, lo, hi, Rational(1), at0));
    }

    // d : Omega^0_u -> Omega^1_u (u not 0) and its inverse
    if (s1.family == Family::Omega && s2.family == Family::Omega && s1.coset == s2.coset &&
        s1.coset != 0) {
        if (s1.delta == 0 && s2.delta == 1) return verified(map_d(s1.coset, lo, hi));
        if (s1.delta == 1 && s2.delta == 0) return verified(map_rho(s1.coset, lo, hi));
    }

    // Omega^1_0 ~ A_{0,b} and Omega^0_0 ~ B_{0,b}
    auto bridge = [&](const ModuleSpec& from, const ModuleSpec& to,
                      bool invert) -> std::optional<LinearTable> {
        Rational generic, at0;
        if (from.family == Family::Omega && from.delta == 1 && from.coset == 0 &&
            to.family == Family::A && to.is_infinity()) {
            generic = to.b;  // e_n^1 -> b e_n^A (n != 0), e_0 -> e_0
            at0 = 1;
        } else if (from.family == Family::Omega && from.delta == 0 && from.coset == 0 &&
                   to.family == Family::B && to.is_infinity()) {
            generic = 1;  // e_n^0 -> e_n^B (n != 0), e_0 -> -b e_0
            at0 = -to.b;
        } else {
            return std::nullopt;
        }
        if (invert)
            return verified(diagonal(to, from, lo, hi, 1 / generic, 1 / at0));
        return verified(diagonal(from, to, lo, hi, generic, at0));
    };
    if (auto t = bridge(s1, s2, false)) return t;
    if (auto t = bridge(s2, s1, true)) return t;
    return std::nullopt;
}

}  // namespace witt
