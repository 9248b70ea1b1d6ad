#include "witt/opexpr.hpp"

#include <sstream>

namespace witt {

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t");
    return s.substr(a, b - a + 1);
}

// Splits at top-level occurrences of `sep` (depth tracked over (), []).
std::vector<std::string> split_top(const std::string& s, char sep) {
    std::vector<std::string> parts;
    int depth = 0;
    std::string cur;
    for (char ch : s) {
        if (ch == '(' || ch == '[') ++depth;
        if (ch == ')' || ch == ']') --depth;
        if (ch == sep && depth == 0) {
            parts.push_back(trim(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    parts.push_back(trim(cur));
    return parts;
}

std::optional<std::vector<Rational>> parse_rationals(const std::string& s) {
    std::vector<Rational> out;
    for (const auto& part : split_top(s, ',')) {
        auto r = parse_rational(trim(part));
        if (!r) return std::nullopt;
        out.push_back(*r);
    }
    return out;
}

// "(a,b)" -> pair
std::optional<std::pair<Rational, Rational>> parse_point(const std::string& s) {
    std::string t = trim(s);
    if (t.size() < 2 || t.front() != '(' || t.back() != ')') return std::nullopt;
    auto rs = parse_rationals(t.substr(1, t.size() - 2));
    if (!rs || rs->size() != 2) return std::nullopt;
    return std::make_pair((*rs)[0], (*rs)[1]);
}

std::optional<LinOp> parse_lin(const std::string& raw) {
    std::string s = trim(raw);
    LinOp l;
    if (s == "id") { l.kind = LinOp::Id; return l; }
    if (s == "d") { l.kind = LinOp::D; return l; }
    if (s == "rho") { l.kind = LinOp::Rho; return l; }
    if (s == "d^-1") { l.kind = LinOp::RhoInv; return l; }
    if (s.rfind("dxi", 0) == 0 || s.rfind("d^xi", 0) == 0) {
        bool upper = s.rfind("d^xi", 0) == 0;
        auto open = s.find('(');
        if (open == std::string::npos || s.back() != ')') return std::nullopt;
        auto rs = parse_rationals(s.substr(open + 1, s.size() - open - 2));
        if (!rs || rs->size() != 2) return std::nullopt;
        l.kind = upper ? LinOp::DUpperXi : LinOp::DXi;
        l.a = (*rs)[0];
        l.b = (*rs)[1];
        return l;
    }
    if (s.rfind("c[", 0) == 0 && s.back() == ']') {
        auto r = parse_rational(s.substr(2, s.size() - 3));
        if (!r) return std::nullopt;
        l.kind = LinOp::Scalar;
        l.c = *r;
        return l;
    }
    return std::nullopt;
}

struct LeafParse {
    OperatorExpr e;
    bool ok = false;
};

LeafParse parse_leaf(const std::string& raw) {
    LeafParse out;
    OperatorExpr& e = out.e;
    std::string s = trim(raw);

    auto bracket_args = [&](const std::string& t) -> std::optional<std::pair<std::string, std::string>> {
        // "X[...](...)" -> {bracket contents, trailing parenthetical or ""}
        auto open = t.find('[');
        if (open == std::string::npos) return std::nullopt;
        auto close = t.find(']', open);
        if (close == std::string::npos) return std::nullopt;
        std::string inside = t.substr(open + 1, close - open - 1);
        std::string tail = trim(t.substr(close + 1));
        return std::make_pair(inside, tail);
    };

    if (s == "G" || s.rfind("G[", 0) == 0) {
        e.leaf = OperatorExpr::Leaf::G;
        e.u = e.v = 0;
        if (s != "G") {
            auto args = bracket_args(s);
            if (!args) return out;
            auto rs = parse_rationals(args->first);
            if (!rs || rs->size() != 2 || !args->second.empty()) return out;
            e.u = (*rs)[0];
            e.v = (*rs)[1];
        }
        out.ok = true;
        return out;
    }
    if (s.rfind("Theta", 0) == 0) {
        auto pt = parse_point(s.substr(5));
        if (!pt) return out;
        e.leaf = OperatorExpr::Leaf::Theta;
        e.xa = pt->first;
        e.xb = pt->second;
        out.ok = true;
        return out;
    }
    if (s.rfind("eta_t", 0) == 0) {
        std::string t = trim(s.substr(5));
        if (t.size() < 2 || t.front() != '(' || t.back() != ')') return out;
        auto parts = split_top(t.substr(1, t.size() - 2), ';');
        if (parts.size() != 2) return out;
        auto pt = parse_point(parts[0]);
        auto r = parse_rational(trim(parts[1]));
        if (!pt || !r) return out;
        e.leaf = OperatorExpr::Leaf::EtaT;
        e.xa = pt->first;
        e.xb = pt->second;
        e.tparam = *r;
        out.ok = true;
        return out;
    }
    if (s.rfind("eta", 0) == 0) {
        std::string t = trim(s.substr(3));
        if (t.size() < 2 || t.front() != '(' || t.back() != ')') return out;
        // points themselves contain commas; split by balanced ')' groups
        std::vector<std::string> groups;
        {
            int depth = 0;
            std::string cur;
            for (char ch : t.substr(1, t.size() - 2)) {
                if (ch == '(') ++depth;
                if (ch == ')') --depth;
                cur += ch;
                if (depth == 0 && ch == ')') {
                    groups.push_back(trim(cur));
                    cur.clear();
                } else if (depth == 0 && ch == ',') {
                    cur.clear();
                }
            }
        }
        if (groups.size() != 3) return out;
        auto p1 = parse_point(groups[0]), p2 = parse_point(groups[1]), p3 = parse_point(groups[2]);
        if (!p1 || !p2 || !p3) return out;
        e.leaf = OperatorExpr::Leaf::Eta;
        e.e1 = *p1;
        e.e2 = *p2;
        e.e3 = *p3;
        out.ok = true;
        return out;
    }
    if (s.rfind("trivial", 0) == 0) {
        std::string t = trim(s.substr(7));
        if (t.size() < 2 || t.front() != '(' || t.back() != ')') return out;
        std::vector<std::string> groups;
        int depth = 0;
        std::string cur;
        for (char ch : t.substr(1, t.size() - 2)) {
            if (ch == '(') ++depth;
            if (ch == ')') --depth;
            cur += ch;
            if (depth == 0 && ch == ')') {
                groups.push_back(trim(cur));
                cur.clear();
            } else if (depth == 0 && ch == ',') {
                cur.clear();
            }
        }
        if (groups.size() != 3) return out;
        auto p1 = parse_point(groups[0]), p2 = parse_point(groups[1]), p3 = parse_point(groups[2]);
        if (!p1 || !p2 || !p3) return out;
        e.leaf = OperatorExpr::Leaf::Trivial;
        e.e1 = *p1;
        e.e2 = *p2;
        e.e3 = *p3;
        out.ok = true;
        return out;
    }
    if (s.rfind("PM", 0) == 0) {
        std::string t = trim(s.substr(2));
        if (t.size() < 2 || t.front() != '(' || t.back() != ')') return out;
        auto spec = ModuleSpec::parse(t.substr(1, t.size() - 2));
        if (!spec) return out;
        e.leaf = OperatorExpr::Leaf::PM;
        e.pm_target = *spec;
        out.ok = true;
        return out;
    }
    if (s.rfind("P[", 0) == 0 || s.rfind("B[", 0) == 0) {
        bool is_b = s[0] == 'B';
        auto args = bracket_args(s);
        if (!args) return out;
        auto halves = split_top(args->first, ';');
        if (halves.empty() || halves.size() > 2) return out;
        auto degs = parse_rationals(halves[0]);
        if (!degs || degs->size() != 2) return out;
        e.d1 = (*degs)[0];
        e.d2 = (*degs)[1];
        e.u = e.v = 0;
        if (halves.size() == 2) {
            auto cosets = parse_rationals(halves[1]);
            if (!cosets || cosets->size() != 2) return out;
            e.u = (*cosets)[0];
            e.v = (*cosets)[1];
        }
        if (!args->second.empty()) {
            if (!is_b) return out;
            auto pt = parse_point(args->second);
            if (!pt) return out;
            e.leaf = OperatorExpr::Leaf::BXi;
            e.xa = pt->first;
            e.xb = pt->second;
        } else {
            e.leaf = is_b ? OperatorExpr::Leaf::B : OperatorExpr::Leaf::P;
        }
        out.ok = true;
        return out;
    }
    return out;
}

}  // namespace

std::string LinOp::str() const {
    switch (kind) {
        case Id: return "id";
        case D: return "d";
        case Rho: return "rho";
        case RhoInv: return "d^-1";
        case DXi: return "dxi(" + to_string(a) + "," + to_string(b) + ")";
        case DUpperXi: return "d^xi(" + to_string(a) + "," + to_string(b) + ")";
        case Scalar: return "c[" + to_string(c) + "]";
    }
    return "id";
}

std::string OperatorExpr::str() const {
    std::ostringstream os;
    for (const auto& l : out) os << l.str() << " . ";
    auto pt = [](const std::pair<Rational, Rational>& p) {
        return "(" + to_string(p.first) + "," + to_string(p.second) + ")";
    };
    switch (leaf) {
        case Leaf::P:
            os << "P[" << to_string(d1) << "," << to_string(d2) << ";" << to_string(u) << ","
               << to_string(v) << "]";
            break;
        case Leaf::B:
            os << "B[" << to_string(d1) << "," << to_string(d2) << ";" << to_string(u) << ","
               << to_string(v) << "]";
            break;
        case Leaf::BXi:
            os << "B[" << to_string(d1) << "," << to_string(d2) << ";" << to_string(u) << ","
               << to_string(v) << "](" << to_string(xa) << "," << to_string(xb) << ")";
            break;
        case Leaf::G:
            os << "G[" << to_string(u) << "," << to_string(v) << "]";
            break;
        case Leaf::Theta:
            os << "Theta(" << to_string(xa) << "," << to_string(xb) << ")";
            break;
        case Leaf::Eta:
            os << "eta(" << pt(e1) << "," << pt(e2) << "," << pt(e3) << ")";
            break;
        case Leaf::EtaT:
            os << "eta_t((" << to_string(xa) << "," << to_string(xb) << ");" << to_string(tparam)
               << ")";
            break;
        case Leaf::Trivial:
            os << "trivial(" << pt(e1) << "," << pt(e2) << "," << pt(e3) << ")";
            break;
        case Leaf::PM:
            os << "PM(" << pm_target.str() << ")";
            break;
    }
    for (const auto& [l, r] : pairs) os << " . (" << l.str() << " x " << r.str() << ")";
    return os.str();
}

std::optional<OperatorExpr> OperatorExpr::parse(const std::string& text) {
    auto items = split_top(text, '.');
    if (items.empty()) return std::nullopt;
    OperatorExpr e;
    size_t leaf_pos = items.size();
    for (size_t k = 0; k < items.size(); ++k) {
        auto lp = parse_leaf(items[k]);
        if (lp.ok) {
            e = lp.e;
            leaf_pos = k;
            break;
        }
    }
    if (leaf_pos == items.size()) return std::nullopt;
    for (size_t k = 0; k < leaf_pos; ++k) {
        auto l = parse_lin(items[k]);
        if (!l) return std::nullopt;
        e.out.push_back(*l);
    }
    for (size_t k = leaf_pos + 1; k < items.size(); ++k) {
        std::string s = trim(items[k]);
        if (s.size() < 2 || s.front() != '(' || s.back() != ')') return std::nullopt;
        // split on the token " x " at depth 0 (a bare 'x' also occurs in "dxi")
        std::string inner = s.substr(1, s.size() - 2);
        int depth = 0;
        size_t cut = std::string::npos;
        for (size_t i = 0; i + 2 < inner.size(); ++i) {
            char ch = inner[i];
            if (ch == '(' || ch == '[') ++depth;
            if (ch == ')' || ch == ']') --depth;
            if (depth == 0 && inner.compare(i, 3, " x ") == 0) {
                cut = i;
                break;
            }
        }
        if (cut == std::string::npos) return std::nullopt;
        auto l = parse_lin(inner.substr(0, cut));
        auto r = parse_lin(inner.substr(cut + 3));
        if (!l || !r) return std::nullopt;
        e.pairs.emplace_back(*l, *r);
    }
    return e;
}

namespace {

// Builds the linear table whose target must equal `expected` (the slot of the
// bilinear table it composes into), inferring cosets from `expected`.
LinearTable realize_into(const LinOp& l, const ModuleSpec& expected, long lo, long hi) {
    switch (l.kind) {
        case LinOp::D:
            if (!(expected.family == Family::Omega && expected.delta == 1))
                throw CompositionTypeError("d must land in Omega^1, got " + expected.str());
            return map_d(expected.coset, lo, hi);
        case LinOp::Rho:
            if (!(expected.family == Family::Omega && expected.delta == 0))
                throw CompositionTypeError("rho must land in Omega^0, got " + expected.str());
            return map_rho(expected.coset, lo, hi);
        case LinOp::RhoInv:
            if (!(expected.family == Family::Omega && expected.delta == 0))
                throw CompositionTypeError("d^-1 must land in Omega^0, got " + expected.str());
            return map_rho_invertible(expected.coset, lo, hi);
        case LinOp::DXi:
            if (!(expected.family == Family::Omega && expected.delta == 1 && expected.coset == 0))
                throw CompositionTypeError("dxi must land in Omega^1_0, got " + expected.str());
            return map_d_xi(ModuleSpec::bfam(l.a, l.b), lo, hi);
        case LinOp::DUpperXi: {
            if (!(expected.family == Family::A))
                throw CompositionTypeError("d^xi must land in the A-family, got " + expected.str());
            return map_d_upper_xi(ModuleSpec::afam(l.a, l.b), lo, hi);
        }
        default:
            throw CompositionTypeError("unsupported input composition " + l.str());
    }
}

// Output composition: source must equal the bilinear target.
LinearTable realize_from(const LinOp& l, const ModuleSpec& source, long lo, long hi) {
    switch (l.kind) {
        case LinOp::D:
            if (!(source.family == Family::Omega && source.delta == 0))
                throw CompositionTypeError("d must start from Omega^0, got " + source.str());
            return map_d(source.coset, lo, hi);
        case LinOp::Rho:
            if (!(source.family == Family::Omega && source.delta == 1))
                throw CompositionTypeError("rho must start from Omega^1, got " + source.str());
            return map_rho(source.coset, lo, hi);
        case LinOp::RhoInv:
            if (!(source.family == Family::Omega && source.delta == 1))
                throw CompositionTypeError("d^-1 must start from Omega^1, got " + source.str());
            return map_rho_invertible(source.coset, lo, hi);
        case LinOp::DXi:
            if (!(source.family == Family::B))
                throw CompositionTypeError("dxi must start from the B-family, got " + source.str());
            return map_d_xi(source, lo, hi);
        case LinOp::DUpperXi:
            if (!(source.family == Family::Omega && source.delta == 0 && source.coset == 0))
                throw CompositionTypeError("d^xi must start from Omega^0_0, got " + source.str());
            return map_d_upper_xi(ModuleSpec::afam(l.a, l.b), lo, hi);
        default:
            throw CompositionTypeError("unsupported output composition " + l.str());
    }
}

}  // namespace

BilinearTable OperatorExpr::evaluate(long lo, long hi) const {
    BilinearTable t;
    switch (leaf) {
        case Leaf::P: t = poisson_product(d1, d2, u, v, lo, hi); break;
        case Leaf::B: t = poisson_bracket(d1, d2, u, v, lo, hi); break;
        case Leaf::BXi: t = extended_bracket(d1, d2, u, v, xa, xb, lo, hi); break;
        case Leaf::G: t = grozman(u, v, lo, hi); break;
        case Leaf::Theta: t = theta(xa, xb, lo, hi); break;
        case Leaf::Eta: t = eta(e1, e2, e3, lo, hi); break;
        case Leaf::EtaT: t = eta_t(xa, xb, tparam, lo, hi); break;
        case Leaf::Trivial:
            t = trivial_map(ModuleSpec::afam(e1.first, e1.second),
                            ModuleSpec::afam(e2.first, e2.second),
                            ModuleSpec::bfam(e3.first, e3.second), Rational(1), lo, hi);
            break;
        case Leaf::PM: t = obvious_P(pm_target, lo, hi); break;
    }
    for (const auto& [l, r] : pairs) {
        if (l.kind != LinOp::Id) t = compose_left(t, realize_into(l, t.left.spec, lo, hi));
        if (r.kind != LinOp::Id) t = compose_right(t, realize_into(r, t.right.spec, lo, hi));
    }
    for (auto it = out.rbegin(); it != out.rend(); ++it) {
        if (it->kind == LinOp::Id) continue;
        if (it->kind == LinOp::Scalar) {
            t = it->c * t;
            continue;
        }
        t = compose_output(realize_from(*it, t.target.spec, t.target.lo, t.target.hi), t);
    }
    return t;
}

}  // namespace witt
