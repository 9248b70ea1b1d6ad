#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "witt/modules.hpp"

namespace witt {

struct CompositionTypeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// L_0-equivariant bilinear map on windowed modules, stored through its
// coefficient function X: pi(e_x, e_y) = X(x,y) e_{x+y}. Entries are kept only
// where non-zero and where all three weights are in-window.
struct BilinearTable {
    WindowedModule left, right, target;
    long carry = 0;  // target offset of (i,j) is i + j + carry
    std::map<std::pair<long, long>, Rational> coeff;

    long target_offset(long i, long j) const { return i + j + carry; }
    bool in_window(long i, long j) const {
        return left.contains(i) && right.contains(j) && target.contains(target_offset(i, j));
    }
    Rational at(long i, long j) const {
        auto it = coeff.find({i, j});
        return it == coeff.end() ? Rational(0) : it->second;
    }
    void set(long i, long j, const Rational& c) {
        if (c == 0) coeff.erase({i, j});
        else if (in_window(i, j)) coeff[{i, j}] = c;
    }

    std::set<std::pair<long, long>> support() const {
        std::set<std::pair<long, long>> s;
        for (auto& [k, c] : coeff) s.insert(k);
        return s;
    }
};

// Skeleton with the correct windows/carry and empty coefficients. Checks that
// the coset of `target` is the sum of the source cosets.
BilinearTable make_table(const WindowedModule& left, const WindowedModule& right,
                         const WindowedModule& target);

BilinearTable operator+(const BilinearTable& a, const BilinearTable& b);
BilinearTable operator*(const Rational& c, const BilinearTable& t);

// --- the operator catalog -------------------------------------------------

// P^{d1,d2}_{u,v}: Omega^{d1}_u x Omega^{d2}_v -> Omega^{d1+d2}_{u+v}, X = 1.
BilinearTable poisson_product(const Rational& d1, const Rational& d2, const Rational& u,
                              const Rational& v, long lo, long hi);

// B^{d1,d2}_{u,v}: -> Omega^{d1+d2+1}_{u+v}, X = d2*x - d1*y.
BilinearTable poisson_bracket(const Rational& d1, const Rational& d2, const Rational& u,
                              const Rational& v, long lo, long hi);

// Grozman operator G_{u,v}: Omega^{-2/3} x Omega^{-2/3} -> Omega^{5/3},
// X = (x-y)(2x+y)(x+2y).
BilinearTable grozman(const Rational& u, const Rational& v, long lo, long hi);

// Bracket of the extended algebra. Sources become A_xi/B_xi exactly at
// (delta,u) = (0,0); the target becomes B_xi exactly at degree 1, coset 0.
// Coincides with poisson_bracket when d1*d2*(d1+d2) != 0.
BilinearTable extended_bracket(const Rational& d1, const Rational& d2, const Rational& u,
                               const Rational& v, const Rational& xi_a, const Rational& xi_b,
                               long lo, long hi);

// Theta_xi: A_xi x A_xi -> B_xi (the four-case table of the paper).
BilinearTable theta(const Rational& xi_a, const Rational& xi_b, long lo, long hi);

// eta(xi1,xi2,xi3): A_{xi1} x A_{xi2} -> A_{xi3} for points not all equal,
// built on the solved relation z*xi3 = x*xi1 + y*xi2 in the given coordinates.
BilinearTable eta(const std::pair<Rational, Rational>& xi1, const std::pair<Rational, Rational>& xi2,
                  const std::pair<Rational, Rational>& xi3, long lo, long hi);

// eta^t_xi: A_xi x A_xi -> A_xi, (m,n) -> Res(m) n + t Res(n) m.
BilinearTable eta_t(const Rational& xi_a, const Rational& xi_b, const Rational& t, long lo, long hi);

// Trivial map A x A -> B supported at {(0,0)} with scalar c.
BilinearTable trivial_map(const ModuleSpec& m, const ModuleSpec& n, const ModuleSpec& p,
                          const Rational& c, long lo, long hi);

// P^M: (Abar + C) x M -> M, ((a+x), m) -> x m.
BilinearTable obvious_P(const ModuleSpec& m, long lo, long hi);

// --- composition -----------------------------------------------------------

// phi o pi (post-compose the output with a weight-preserving linear table).
BilinearTable compose_output(const LinearTable& phi, const BilinearTable& pi);
// pi o (phi x id) and pi o (id x psi).
BilinearTable compose_left(const BilinearTable& pi, const LinearTable& phi);
BilinearTable compose_right(const BilinearTable& pi, const LinearTable& psi);

}  // namespace witt
