#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "witt/rational.hpp"

namespace witt {

// A weight z = coset_rep + offset with coset_rep normalized into [0,1).
struct Weight {
    Rational rep;  // in [0,1)
    long offset = 0;

    Rational value() const { return rep + offset; }
    Weight shifted(long m) const { return Weight{rep, offset + m}; }
    bool operator==(const Weight& o) const { return rep == o.rep && offset == o.offset; }
};

// Normalizes an arbitrary rational into coset form (rep in [0,1), offset).
Weight make_weight(const Rational& value);
// rep + rep addition with carry; returns (rep, carry in {0,1}).
std::pair<Rational, long> add_cosets(const Rational& a, const Rational& b);
Rational normalize_coset(const Rational& u);

enum class Family { Omega, A, B, AbarPlusC, Trivial };

// A class-S module description. Omega carries (delta, coset); the A/B families
// carry normalized projective coordinates (a,b) != (0,0); AbarPlusC is the one
// decomposable member (= A_{0,0} = B_{0,0}); Trivial is the one-dimensional
// module used as the target of Res and the middle of trivial maps.
struct ModuleSpec {
    Family family = Family::Omega;
    Rational delta;    // Omega only
    Rational coset;    // Omega only, normalized into [0,1); others live on coset 0
    Rational a, b;     // A/B only, normalized: first non-zero coordinate = 1

    static ModuleSpec omega(const Rational& delta, const Rational& coset);
    static ModuleSpec afam(const Rational& a, const Rational& b);
    static ModuleSpec bfam(const Rational& a, const Rational& b);
    static ModuleSpec abar_plus_c();
    static ModuleSpec trivial();

    Rational coset_rep() const { return family == Family::Omega ? coset : Rational(0); }
    bool is_infinity() const { return (family == Family::A || family == Family::B) && a == 0; }
    // Projective coordinates normalized to first non-zero entry 1 (infinity = (0,1)).
    std::pair<Rational, Rational> xi_normalized() const;

    // Multivalued degree: {delta} for Omega with delta outside {0,1}, else {0,1}.
    std::vector<Rational> deg_values() const;
    bool deg_is_01() const;

    ModuleSpec dual() const;
    Rational casimir() const;  // scalar of L0^2+L0-L_{-1}L_1 away from exceptional weights
    bool is_irreducible() const;
    bool is_indecomposable() const { return family != Family::AbarPlusC; }

    // KS normal form used by the classifier: Omega^0_0 -> B_inf, Omega^1_0 -> A_inf.
    ModuleSpec canonical() const;
    bool same_module(const ModuleSpec& o) const;  // equality up to KS isomorphism

    std::string str() const;
    std::string json() const;
    static std::optional<ModuleSpec> parse(const std::string& text);  // "Omega 1/2 0", "A 1 2", ...

    bool operator==(const ModuleSpec& o) const;
};

// Action of L_m on the basis vector of weight x: returns the coefficient; the
// image sits at weight x+m (all class-S actions are rank-one shifts).
Rational act(const ModuleSpec& spec, long m, const Weight& x);

// A module truncated to the weights coset_rep + k for k in [lo, hi].
struct WindowedModule {
    ModuleSpec spec;
    long lo = 0, hi = 0;

    bool contains(long k) const { return lo <= k && k <= hi; }
    long size() const { return hi - lo + 1; }
    Weight weight(long k) const { return Weight{spec.coset_rep(), k}; }
};

inline WindowedModule window(const ModuleSpec& spec, long n) { return WindowedModule{spec, -n, n}; }
inline WindowedModule cone_window(const ModuleSpec& spec, long lo, long hi) {
    return WindowedModule{spec, lo, hi};
}

// Weight-preserving linear map between windowed modules, stored as the diagonal
// coefficient at each common offset (entries only where non-zero).
struct LinearTable {
    WindowedModule source, target;
    std::map<long, Rational> coeff;

    Rational at(long k) const {
        auto it = coeff.find(k);
        return it == coeff.end() ? Rational(0) : it->second;
    }
};

// Exact residuals of the intertwining identity at interior points for |m| <= mmax.
// Empty result means the table commutes with every checked generator.
std::vector<std::string> check_linear_equivariance(const LinearTable& t, long mmax);

struct PartialDomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The named maps of the paper; each is validated by check_linear_equivariance in tests.
LinearTable map_d(const Rational& coset, long lo, long hi);              // Omega^0_u -> Omega^1_u, e_x -> x e_x
LinearTable map_rho(const Rational& coset, long lo, long hi);            // inverse branch for u != 0, residue composite for u == 0
LinearTable map_rho_invertible(const Rational& coset, long lo, long hi); // strict d^{-1}; throws PartialDomainError at weight 0
LinearTable map_res(const ModuleSpec& afam, long lo, long hi);           // A_xi -> Trivial
LinearTable map_d_xi(const ModuleSpec& bfam, long lo, long hi);          // B_xi -> Omega^1_0, e_n -> n e_n
LinearTable map_d_upper_xi(const ModuleSpec& afam, long lo, long hi);    // Omega^0_0 -> A_xi, e_n -> n e_n

// Windowed intertwiner for a pair in the Kaplansky-Santharoubane isomorphism
// list (verified to commute with L_m, |m| <= 2, before being returned), or
// nullopt when the modules are not isomorphic.
std::optional<LinearTable> ks_isomorphism_check(const ModuleSpec& s1, const ModuleSpec& s2, long n);

}  // namespace witt
