#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "witt/rational.hpp"

namespace witt {

// Sparse polynomials over Q in the five fixed variables (delta1, delta2, gamma, x, y).
// Monomial order: graded lexicographic with delta1 > delta2 > gamma > x > y.

enum Var : int { VD1 = 0, VD2 = 1, VG = 2, VX = 3, VY = 4 };
inline constexpr int kNumVars = 5;
using Expo = std::array<int16_t, kNumVars>;

struct GrlexLess {
    bool operator()(const Expo& a, const Expo& b) const {
        int da = 0, db = 0;
        for (int i = 0; i < kNumVars; ++i) { da += a[i]; db += b[i]; }
        if (da != db) return da < db;
        for (int i = 0; i < kNumVars; ++i)
            if (a[i] != b[i]) return a[i] < b[i];
        return false;
    }
};

class MultiPoly {
  public:
    using TermMap = std::map<Expo, Rational, GrlexLess>;

    MultiPoly() = default;
    explicit MultiPoly(const Rational& c) {
        if (c != 0) terms_[Expo{0, 0, 0, 0, 0}] = c;
    }
    explicit MultiPoly(long c) : MultiPoly(Rational(c)) {}

    static MultiPoly var(Var v, int power = 1, const Rational& coeff = Rational(1)) {
        MultiPoly p;
        if (coeff == 0) return p;
        Expo e{0, 0, 0, 0, 0};
        e[v] = static_cast<int16_t>(power);
        p.terms_[e] = coeff;
        return p;
    }
    static MultiPoly monomial(const Expo& e, const Rational& coeff) {
        MultiPoly p;
        if (coeff != 0) p.terms_[e] = coeff;
        return p;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    int total_degree() const;       // -1 for the zero polynomial
    int degree(Var v) const;        // -1 for the zero polynomial

    // Leading term in the fixed grlex order; requires non-zero.
    std::pair<Expo, Rational> leading() const { return *terms_.rbegin(); }

    Rational coeff(const Expo& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational(0) : it->second;
    }
    Rational constant_term() const { return coeff(Expo{0, 0, 0, 0, 0}); }

    void add_term(const Expo& e, const Rational& c);

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly operator-() const;
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
    MultiPoly operator*(const Rational& c) const;
    MultiPoly pow(int n) const;

    bool operator==(const MultiPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    Rational eval(const std::array<Rational, kNumVars>& point) const;

    // Substitutes v := scale*v + shift (affine change in a single variable).
    MultiPoly substitute_affine(Var v, const Rational& scale, const Rational& shift) const;
    MultiPoly substitute(Var v, const Rational& value) const {
        return substitute_affine(v, Rational(0), value);
    }
    // Substitutes v := value for an arbitrary replacement polynomial.
    MultiPoly substitute_poly(Var v, const MultiPoly& value) const;

    // Coefficient of v^k, viewing the polynomial in v over the remaining variables.
    MultiPoly coeff_of(Var v, int k) const;

    // Groups terms as sum_{i,j} c_{i,j}(d1,d2,g) x^i y^j.
    std::map<std::pair<int, int>, MultiPoly> coefficients_in_xy() const;

    std::string str() const;

  private:
    TermMap terms_;
};

// Exact multivariate division along the fixed grlex order: returns q with a = q*b,
// or nullopt when no exact quotient exists. A failed division is a correctness
// alarm for the callers dividing det-coefficients by C.
std::optional<MultiPoly> divide_exact(const MultiPoly& a, const MultiPoly& b);

// Remainder of a modulo m, both viewed as polynomials in v; m must be monic in v.
MultiPoly reduce_mod_univar(const MultiPoly& a, const MultiPoly& m, Var v);

// JSON form: [{"exp":[e1..e5],"coef":"num/den"}...], leading terms first.
std::string poly_to_json(const MultiPoly& p);
std::optional<MultiPoly> poly_from_json(const std::string& json);

}  // namespace witt
