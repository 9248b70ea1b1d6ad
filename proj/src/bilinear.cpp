#include "witt/bilinear.hpp"

#include "witt/linalg.hpp"

namespace witt {

BilinearTable make_table(const WindowedModule& left, const WindowedModule& right,
                         const WindowedModule& target) {
    auto [rep, carry] = add_cosets(left.spec.coset_rep(), right.spec.coset_rep());
    if (rep != target.spec.coset_rep())
        throw CompositionTypeError("target coset is not the sum of the source cosets");
    BilinearTable t;
    t.left = left;
    t.right = right;
    t.target = target;
    t.carry = carry;
    return t;
}

BilinearTable operator+(const BilinearTable& a, const BilinearTable& b) {
    BilinearTable r = a;
    for (auto& [k, c] : b.coeff) {
        auto it = r.coeff.find(k);
        if (it == r.coeff.end()) r.coeff[k] = c;
        else {
            it->second += c;
            if (it->second == 0) r.coeff.erase(it);
        }
    }
    return r;
}

BilinearTable operator*(const Rational& c, const BilinearTable& t) {
    BilinearTable r = t;
    if (c == 0) { r.coeff.clear(); return r; }
    for (auto& [k, v] : r.coeff) v *= c;
    return r;
}

namespace {

WindowedModule sum_window(const WindowedModule& l, const WindowedModule& r,
                          const ModuleSpec& target_spec, long margin = 4) {
    auto [rep, carry] = add_cosets(l.spec.coset_rep(), r.spec.coset_rep());
    (void)rep;
    return WindowedModule{target_spec, l.lo + r.lo + carry - margin, l.hi + r.hi + carry + margin};
}

BilinearTable omega_pair_table(const Rational& d1, const Rational& d2, const Rational& u,
                               const Rational& v, const Rational& target_deg, long lo, long hi) {
    WindowedModule L{ModuleSpec::omega(d1, u), lo, hi};
    WindowedModule R{ModuleSpec::omega(d2, v), lo, hi};
    auto [rep, carry] = add_cosets(L.spec.coset_rep(), R.spec.coset_rep());
    (void)carry;
    WindowedModule T = sum_window(L, R, ModuleSpec::omega(target_deg, rep));
    return make_table(L, R, T);
}

}  // namespace

BilinearTable poisson_product(const Rational& d1, const Rational& d2, const Rational& u,
                              const Rational& v, long lo, long hi) {
    BilinearTable t = omega_pair_table(d1, d2, u, v, d1 + d2, lo, hi);
    for (long i = lo; i <= hi; ++i)
        for (long j = lo; j <= hi; ++j) t.set(i, j, Rational(1));
    return t;
}

BilinearTable poisson_bracket(const Rational& d1, const Rational& d2, const Rational& u,
                              const Rational& v, long lo, long hi) {
    BilinearTable t = omega_pair_table(d1, d2, u, v, d1 + d2 + 1, lo, hi);
    for (long i = lo; i <= hi; ++i) {
        Rational x = t.left.weight(i).value();
        for (long j = lo; j <= hi; ++j) {
            Rational y = t.right.weight(j).value();
            t.set(i, j, d2 * x - d1 * y);
        }
    }
    return t;
}

BilinearTable grozman(const Rational& u, const Rational& v, long lo, long hi) {
    Rational d(-2, 3);
    BilinearTable t = omega_pair_table(d, d, u, v, Rational(5, 3), lo, hi);
    for (long i = lo; i <= hi; ++i) {
        Rational x = t.left.weight(i).value();
        for (long j = lo; j <= hi; ++j) {
            Rational y = t.right.weight(j).value();
            t.set(i, j, (x - y) * (2 * x + y) * (x + 2 * y));
        }
    }
    return t;
}

BilinearTable extended_bracket(const Rational& d1, const Rational& d2, const Rational& u,
                               const Rational& v, const Rational& xi_a, const Rational& xi_b,
                               long lo, long hi) {
    if (xi_a == 0 && xi_b == 0) throw CompositionTypeError("xi must be a point of P^1");
    const Rational a = xi_a, b = xi_b;
    Rational un = normalize_coset(u), vn = normalize_coset(v);
    const bool leftA = (d1 == 0 && un == 0);
    const bool rightA = (d2 == 0 && vn == 0);
    auto [trep, carry] = add_cosets(un, vn);
    (void)carry;
    const bool targetB = (d1 + d2 == 0 && trep == 0);

    WindowedModule L = leftA ? WindowedModule{ModuleSpec::afam(a, b), lo, hi}
                             : WindowedModule{ModuleSpec::omega(d1, un), lo, hi};
    WindowedModule R = rightA ? WindowedModule{ModuleSpec::afam(a, b), lo, hi}
                              : WindowedModule{ModuleSpec::omega(d2, vn), lo, hi};
    WindowedModule T = targetB
        ? sum_window(L, R, ModuleSpec::bfam(a, b))
        : sum_window(L, R, ModuleSpec::omega(d1 + d2 + 1, trep));
    BilinearTable t = make_table(L, R, T);

    for (long i = lo; i <= hi; ++i) {
        Rational x = Rational(i) + (leftA ? Rational(0) : un);
        for (long j = lo; j <= hi; ++j) {
            Rational y = Rational(j) + (rightA ? Rational(0) : vn);
            Rational z = x + y;
            // symbol-level bracket of U_i and V_j, written in the e^{d1+d2+1} basis,
            // plus the Khesin-Kravchenko cocycle hitting the central element
            Rational bracket(0), central(0), scale(1);
            if (leftA && i == 0 && rightA && j == 0) {
                // [-delta_xi, -delta_xi] = 0
            } else if (leftA && i == 0) {
                // [-delta_xi, V] = (b d2 - a y) e_y^{d2+1}, scaled for a right A-slot
                if (rightA) scale = Rational(1) / y;
                bracket = (b * d2 - a * y) * scale;
            } else if (rightA && j == 0) {
                // [U, -delta_xi] = delta_xi(U) = (a x - b d1) e_x^{d1+1}
                if (leftA) scale = Rational(1) / x;
                bracket = (a * x - b * d1) * scale;
            } else {
                if (leftA) scale /= x;
                if (rightA) scale /= y;
                bracket = (d2 * x - d1 * y) * scale;
                if (targetB && z == 0) central = (a * y - b * d2) * scale;
            }
            if (targetB) {
                if (z == 0) t.set(i, j, central);
                else t.set(i, j, bracket / z);  // e^1_z = (1/z) e^B_z
            } else {
                t.set(i, j, bracket);
            }
        }
    }
    return t;
}

BilinearTable theta(const Rational& xi_a, const Rational& xi_b, long lo, long hi) {
    WindowedModule L{ModuleSpec::afam(xi_a, xi_b), lo, hi};
    WindowedModule R = L;
    WindowedModule T = sum_window(L, R, ModuleSpec::bfam(xi_a, xi_b));
    BilinearTable t = make_table(L, R, T);
    for (long m = lo; m <= hi; ++m) {
        if (m == 0) continue;
        t.set(0, m, Rational(1, 1) / m);    // Theta(e_0, e_m) = (1/m) e_m
        t.set(m, 0, Rational(-1, 1) / m);   // Theta(e_m, e_0) = -(1/m) e_m
        t.set(-m, m, Rational(1, 1) / m);   // Theta(e_{-m}, e_m) = (1/m) e_0
    }
    return t;
}

BilinearTable eta(const std::pair<Rational, Rational>& xi1, const std::pair<Rational, Rational>& xi2,
                  const std::pair<Rational, Rational>& xi3, long lo, long hi) {
    auto proj_eq = [](const std::pair<Rational, Rational>& p, const std::pair<Rational, Rational>& q) {
        return p.first * q.second == p.second * q.first;
    };
    if (proj_eq(xi1, xi2) && proj_eq(xi2, xi3))
        throw CompositionTypeError("eta requires xi1, xi2, xi3 not all equal");
    // Solve x*xi1 + y*xi2 - z*xi3 = 0 for a non-zero (x,y,z).
    RatMatrix m(2, 3);
    m << xi1.first, xi2.first, -xi3.first, xi1.second, xi2.second, -xi3.second;
    auto basis = nullspace(m);
    if (basis.empty()) throw CompositionTypeError("eta: no non-zero relation (degenerate input)");
    RatVector sol = basis.front();
    // gauge: z = 1 when possible, else first non-zero coordinate = 1
    if (sol(2) != 0)
        for (int k = 0; k < 3; ++k) sol(k) /= sol(2);
    Rational xc = sol(0), yc = sol(1), zc = sol(2);

    WindowedModule L{ModuleSpec::afam(xi1.first, xi1.second), lo, hi};
    WindowedModule R{ModuleSpec::afam(xi2.first, xi2.second), lo, hi};
    WindowedModule T = sum_window(L, R, ModuleSpec::afam(xi3.first, xi3.second));
    BilinearTable t = make_table(L, R, T);
    for (long n = lo; n <= hi; ++n) {
        if (n == 0) continue;
        t.set(0, n, yc);
        t.set(n, 0, xc);
    }
    t.set(0, 0, zc);
    return t;
}

BilinearTable eta_t(const Rational& xi_a, const Rational& xi_b, const Rational& tparam, long lo,
                    long hi) {
    WindowedModule L{ModuleSpec::afam(xi_a, xi_b), lo, hi};
    WindowedModule R = L;
    WindowedModule T = sum_window(L, R, ModuleSpec::afam(xi_a, xi_b));
    BilinearTable t = make_table(L, R, T);
    for (long n = lo; n <= hi; ++n) {
        if (n == 0) continue;
        t.set(0, n, Rational(1));
        t.set(n, 0, tparam);
    }
    t.set(0, 0, Rational(1) + tparam);
    return t;
}

BilinearTable trivial_map(const ModuleSpec& m, const ModuleSpec& n, const ModuleSpec& p,
                          const Rational& c, long lo, long hi) {
    if (m.family != Family::A || n.family != Family::A || p.family != Family::B)
        throw CompositionTypeError("trivial maps require A-family sources and a B-family target");
    BilinearTable t = make_table({m, lo, hi}, {n, lo, hi}, sum_window({m, lo, hi}, {n, lo, hi}, p));
    t.set(0, 0, c);
    return t;
}

BilinearTable obvious_P(const ModuleSpec& m, long lo, long hi) {
    WindowedModule L{ModuleSpec::abar_plus_c(), lo, hi};
    WindowedModule R{m, lo, hi};
    WindowedModule T = sum_window(L, R, m);
    BilinearTable t = make_table(L, R, T);
    for (long j = lo; j <= hi; ++j) t.set(0, j, Rational(1));
    return t;
}

BilinearTable compose_output(const LinearTable& phi, const BilinearTable& pi) {
    if (!(phi.source.spec == pi.target.spec))
        throw CompositionTypeError("output composition: " + phi.source.spec.str() +
                                   " does not match " + pi.target.spec.str());
    BilinearTable t = make_table(pi.left, pi.right,
                                 WindowedModule{phi.target.spec, pi.target.lo, pi.target.hi});
    for (auto& [k, c] : pi.coeff) {
        long z = pi.target_offset(k.first, k.second);
        if (phi.source.contains(z)) t.set(k.first, k.second, c * phi.at(z));
    }
    return t;
}

BilinearTable compose_left(const BilinearTable& pi, const LinearTable& phi) {
    if (!(phi.target.spec == pi.left.spec))
        throw CompositionTypeError("left composition: " + phi.target.spec.str() +
                                   " does not match " + pi.left.spec.str());
    BilinearTable t = make_table(WindowedModule{phi.source.spec, pi.left.lo, pi.left.hi}, pi.right,
                                 pi.target);
    for (long i = t.left.lo; i <= t.left.hi; ++i) {
        Rational f = phi.at(i);
        if (f == 0) continue;
        for (long j = t.right.lo; j <= t.right.hi; ++j) {
            Rational c = pi.at(i, j);
            if (c != 0) t.set(i, j, f * c);
        }
    }
    return t;
}

BilinearTable compose_right(const BilinearTable& pi, const LinearTable& psi) {
    if (!(psi.target.spec == pi.right.spec))
        throw CompositionTypeError("right composition: " + psi.target.spec.str() +
                                   " does not match " + pi.right.spec.str());
    BilinearTable t = make_table(pi.left, WindowedModule{psi.source.spec, pi.right.lo, pi.right.hi},
                                 pi.target);
    for (long j = t.right.lo; j <= t.right.hi; ++j) {
        Rational f = psi.at(j);
        if (f == 0) continue;
        for (long i = t.left.lo; i <= t.left.hi; ++i) {
            Rational c = pi.at(i, j);
            if (c != 0) t.set(i, j, f * c);
        }
    }
    return t;
}

}  // namespace witt
