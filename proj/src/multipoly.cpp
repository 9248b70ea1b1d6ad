#include "witt/multipoly.hpp"

#include <nlohmann/json.hpp>
#include <sstream>

namespace witt {

namespace {
const char* kVarNames[kNumVars] = {"d1", "d2", "g", "x", "y"};
}

bool MultiPoly::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && terms_.begin()->first == Expo{0, 0, 0, 0, 0};
}

int MultiPoly::total_degree() const {
    if (terms_.empty()) return -1;
    const Expo& e = terms_.rbegin()->first;
    int d = 0;
    for (int i = 0; i < kNumVars; ++i) d += e[i];
    return d;
}

int MultiPoly::degree(Var v) const {
    if (terms_.empty()) return -1;
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, int(e[v]));
    return d;
}

void MultiPoly::add_term(const Expo& e, const Rational& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            Expo e;
            for (int i = 0; i < kNumVars; ++i) e[i] = static_cast<int16_t>(ea[i] + eb[i]);
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

MultiPoly MultiPoly::operator*(const Rational& c) const {
    MultiPoly r;
    if (c == 0) return r;
    for (const auto& [e, cc] : terms_) r.terms_.emplace(e, cc * c);
    return r;
}

MultiPoly MultiPoly::pow(int n) const {
    MultiPoly r(Rational(1));
    MultiPoly base = *this;
    while (n > 0) {
        if (n & 1) r = r * base;
        base = base * base;
        n >>= 1;
    }
    return r;
}

Rational MultiPoly::eval(const std::array<Rational, kNumVars>& point) const {
    Rational acc(0);
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (int i = 0; i < kNumVars; ++i) {
            for (int k = 0; k < e[i]; ++k) t *= point[i];
        }
        acc += t;
    }
    return acc;
}

MultiPoly MultiPoly::substitute_affine(Var v, const Rational& scale, const Rational& shift) const {
    // v := scale*v + shift, expanded by the binomial theorem per term.
    MultiPoly result;
    MultiPoly repl = MultiPoly::var(v, 1, scale) + MultiPoly(shift);
    // Cache powers of the replacement.
    std::vector<MultiPoly> powers{MultiPoly(Rational(1))};
    for (const auto& [e, c] : terms_) {
        int k = e[v];
        while ((int)powers.size() <= k) powers.push_back(powers.back() * repl);
        Expo rest = e;
        rest[v] = 0;
        result += MultiPoly::monomial(rest, c) * powers[k];
    }
    return result;
}

MultiPoly MultiPoly::substitute_poly(Var v, const MultiPoly& value) const {
    MultiPoly result;
    std::vector<MultiPoly> powers{MultiPoly(Rational(1))};
    for (const auto& [e, c] : terms_) {
        int k = e[v];
        while ((int)powers.size() <= k) powers.push_back(powers.back() * value);
        Expo rest = e;
        rest[v] = 0;
        result += MultiPoly::monomial(rest, c) * powers[k];
    }
    return result;
}

MultiPoly MultiPoly::coeff_of(Var v, int k) const {
    MultiPoly r;
    for (const auto& [e, c] : terms_) {
        if (e[v] == k) {
            Expo rest = e;
            rest[v] = 0;
            r.add_term(rest, c);
        }
    }
    return r;
}

std::map<std::pair<int, int>, MultiPoly> MultiPoly::coefficients_in_xy() const {
    std::map<std::pair<int, int>, MultiPoly> out;
    for (const auto& [e, c] : terms_) {
        Expo rest = e;
        rest[VX] = 0;
        rest[VY] = 0;
        out[{e[VX], e[VY]}].add_term(rest, c);
    }
    return out;
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rational a = c;
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool has_var = false;
        for (int i = 0; i < kNumVars; ++i) has_var = has_var || e[i] > 0;
        if (!has_var || a != 1) os << to_string(a);
        bool star = !has_var || a != 1 ? true : false;
        for (int i = 0; i < kNumVars; ++i) {
            if (e[i] == 0) continue;
            if (star) os << "*";
            os << kVarNames[i];
            if (e[i] > 1) os << "^" << e[i];
            star = true;
        }
    }
    return os.str();
}

std::optional<MultiPoly> divide_exact(const MultiPoly& a, const MultiPoly& b) {
    if (b.is_zero()) return std::nullopt;
    MultiPoly q;
    MultiPoly r = a;
    const auto [eb, cb] = b.leading();
    while (!r.is_zero()) {
        const auto [er, cr] = r.leading();
        Expo t;
        for (int i = 0; i < kNumVars; ++i) {
            int d = er[i] - eb[i];
            if (d < 0) return std::nullopt;  // leading term not divisible: no exact quotient
            t[i] = static_cast<int16_t>(d);
        }
        MultiPoly m = MultiPoly::monomial(t, cr / cb);
        q += m;
        r -= m * b;
    }
    return q;
}

MultiPoly reduce_mod_univar(const MultiPoly& a, const MultiPoly& m, Var v) {
    int dm = m.degree(v);
    MultiPoly lead = m.coeff_of(v, dm);
    if (!(lead.is_constant() && lead.constant_term() == 1))
        return a;  // only monic-in-v moduli are supported; callers use g^2-g+c
    MultiPoly r = a;
    int dr = r.degree(v);
    while (dr >= dm && !r.is_zero()) {
        MultiPoly c = r.coeff_of(v, dr);
        if (c.is_zero()) { --dr; continue; }
        r -= c * MultiPoly::var(v, dr - dm) * m;
        dr = r.degree(v);
    }
    return r;
}

std::string poly_to_json(const MultiPoly& p) {
    nlohmann::json arr = nlohmann::json::array();
    const auto& t = p.terms();
    for (auto it = t.rbegin(); it != t.rend(); ++it) {
        nlohmann::json term;
        term["exp"] = std::vector<int>(it->first.begin(), it->first.end());
        term["coef"] = to_string(it->second);
        arr.push_back(term);
    }
    return arr.dump();
}

std::optional<MultiPoly> poly_from_json(const std::string& json) {
    auto j = nlohmann::json::parse(json, nullptr, false);
    if (j.is_discarded() || !j.is_array()) return std::nullopt;
    MultiPoly p;
    for (const auto& term : j) {
        if (!term.contains("exp") || !term.contains("coef")) return std::nullopt;
        auto ev = term["exp"].get<std::vector<int>>();
        if (ev.size() != kNumVars) return std::nullopt;
        Expo e;
        for (int i = 0; i < kNumVars; ++i) e[i] = static_cast<int16_t>(ev[i]);
        auto c = parse_rational(term["coef"].get<std::string>());
        if (!c) return std::nullopt;
        p.add_term(e, *c);
    }
    return p;
}

}  // namespace witt
