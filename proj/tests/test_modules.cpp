#include <doctest.h>

#include "witt/modules.hpp"
#include "witt/sampling.hpp"

using namespace witt;
using MS = ModuleSpec;

TEST_CASE("module spec parsing and JSON") {
    auto m = MS::parse("Omega -2/3 1/3");
    REQUIRE(m);
    CHECK(m->family == Family::Omega);
    CHECK(m->delta == Rational(-2, 3));
    CHECK(m->coset == Rational(1, 3));
    CHECK(MS::parse("A 1 2")->family == Family::A);
    CHECK(MS::parse("AbarC")->family == Family::AbarPlusC);
    CHECK(!MS::parse("Q 1 2"));
    CHECK(m->json().find("\"kind\":\"Omega\"") != std::string::npos);
    CHECK(m->json().find("\"degree\":\"-2/3\"") != std::string::npos);
    CHECK(MS::parse("Omega 0 1/2")->json().find("{0,1}") != std::string::npos);
}

TEST_CASE("actions on basis vectors") {
    // L_2 . e_3 in Omega^1_0 -> 5 e_5
    MS om1 = MS::omega(Rational(1), Rational(0));
    CHECK(act(om1, 2, Weight{Rational(0), 3}) == 5);

    // A_{1,2}: L_3 . e_0 = 15 e_3
    MS a12 = MS::afam(Rational(1), Rational(2));
    CHECK(act(a12, 3, Weight{Rational(0), 0}) == 15);

    // B_{1,1}: L_2 . e_{-2} = 6 e_0
    MS b11 = MS::bfam(Rational(1), Rational(1));
    CHECK(act(b11, 2, Weight{Rational(0), -2}) == 6);

    // Omega^0_{1/2}: L_1 . e_{1/2} = 1/2 e_{3/2}
    MS om0h = MS::omega(Rational(0), Rational(1, 2));
    CHECK(act(om0h, 1, Weight{Rational(1, 2), 0}) == Rational(1, 2));
}

TEST_CASE("restricted dual") {
    MS m = MS::omega(Rational(-2, 3), Rational(1, 5));
    MS md = m.dual();
    CHECK(md.delta == Rational(5, 3));
    CHECK(md.coset == Rational(4, 5));
    CHECK(MS::afam(Rational(1), Rational(2)).dual().family == Family::B);
    MS sd = MS::omega(Rational(1, 2), Rational(0));
    CHECK(sd.dual() == sd);
    // duality is involutive on the nose
    CHECK(m.dual().dual() == m);
    // deg M* = 1 - deg M elementwise
    RationalSampler s(11);
    for (int i = 0; i < 12; ++i) {
        MS spec = MS::omega(s.rational(), s.rational());
        auto degs = spec.deg_values();
        auto dual_degs = spec.dual().deg_values();
        REQUIRE(degs.size() == dual_degs.size());
        for (const Rational& d : degs) {
            bool found = false;
            for (const Rational& e : dual_degs) found = found || (e == Rational(1) - d);
            CHECK(found);
        }
    }
}

TEST_CASE("casimir scalar") {
    CHECK(MS::omega(Rational(-2, 3), Rational(0)).casimir() == Rational(10, 9));
    CHECK(MS::omega(Rational(0), Rational(1, 7)).casimir() == 0);
    CHECK(MS::omega(Rational(1), Rational(1, 7)).casimir() == 0);
    CHECK(MS::afam(Rational(1), Rational(2)).casimir() == 0);
    RationalSampler s(3);
    Rational d = s.rational();
    CHECK(MS::omega(d, Rational(0)).casimir() == d * d - d);
}

TEST_CASE("commutator relation on windows") {
    // [L_m, L_n] v = (n-m) L_{m+n} v at interior points, for every family
    std::vector<MS> specs = {MS::omega(Rational(5, 7), Rational(2, 9)),
                             MS::omega(Rational(0), Rational(0)),
                             MS::afam(Rational(1), Rational(-3)),
                             MS::bfam(Rational(2), Rational(5)), MS::abar_plus_c()};
    const long N = 8;
    for (const MS& spec : specs) {
        for (long m = -2; m <= 2; ++m) {
            for (long n = -2; n <= 2; ++n) {
                for (long k = -N + 4; k <= N - 4; ++k) {
                    Weight w{spec.coset_rep(), k};
                    // L_m L_n v
                    Rational c1 = act(spec, n, w) * act(spec, m, w.shifted(n));
                    Rational c2 = act(spec, m, w) * act(spec, n, w.shifted(m));
                    Rational lhs = c1 - c2;
                    Rational rhs = Rational(n - m) * act(spec, m + n, w);
                    CHECK(lhs == rhs);
                }
            }
        }
    }
}

TEST_CASE("Omega_2 acts as 4 c(X)") {
    std::vector<MS> specs = {MS::omega(Rational(5, 7), Rational(2, 9)),
                             MS::omega(Rational(-2, 3), Rational(1, 3)),
                             MS::afam(Rational(1), Rational(2)),
                             MS::bfam(Rational(1), Rational(1)), MS::abar_plus_c()};
    for (const MS& spec : specs) {
        for (long k = 3; k <= 6; ++k) {  // interior, away from the exceptional weights
            Weight w{spec.coset_rep(), k};
            Rational z = w.value();
            Rational omega2 = z * z + 2 * z - act(spec, 2, w) * act(spec, -2, w.shifted(2));
            CHECK(omega2 == Rational(4) * spec.casimir());
        }
    }
}

TEST_CASE("KS isomorphism check") {
    auto t = ks_isomorphism_check(MS::afam(Rational(1), Rational(2)),
                                  MS::afam(Rational(2), Rational(4)), 8);
    REQUIRE(t);
    CHECK(t->at(0) == Rational(1, 2));
    CHECK(t->at(3) == 1);

    auto d = ks_isomorphism_check(MS::omega(Rational(0), Rational(1, 2)),
                                  MS::omega(Rational(1), Rational(1, 2)), 8);
    REQUIRE(d);
    CHECK(d->at(2) == Rational(1, 2) + 2);  // coefficient x at weight x

    CHECK(!ks_isomorphism_check(MS::omega(Rational(0), Rational(0)),
                                MS::omega(Rational(1), Rational(0)), 8));
    CHECK(!ks_isomorphism_check(MS::afam(Rational(1), Rational(2)),
                                MS::afam(Rational(1), Rational(3)), 8));

    // the infinity bridges
    CHECK(ks_isomorphism_check(MS::omega(Rational(1), Rational(0)), MS::afam(Rational(0), Rational(1)), 8));
    CHECK(ks_isomorphism_check(MS::omega(Rational(0), Rational(0)), MS::bfam(Rational(0), Rational(3)), 8));
    CHECK(ks_isomorphism_check(MS::bfam(Rational(0), Rational(3)), MS::omega(Rational(0), Rational(0)), 8));

    // double dual lands on an isomorphic spec
    MS m = MS::afam(Rational(2), Rational(6));
    CHECK(ks_isomorphism_check(m, m.dual().dual(), 8));
}

TEST_CASE("standard maps") {
    auto d = map_d(Rational(0), -6, 6);
    CHECK(d.at(3) == 3);
    CHECK(d.at(0) == 0);
    CHECK(check_linear_equivariance(d, 2).empty());

    auto rho0 = map_rho(Rational(0), -6, 6);
    CHECK(rho0.at(0) == 1);
    CHECK(rho0.at(2) == 0);
    CHECK(check_linear_equivariance(rho0, 2).empty());

    auto rho_u = map_rho(Rational(1, 3), -6, 6);
    CHECK(rho_u.at(1) == Rational(3, 4));
    CHECK(check_linear_equivariance(rho_u, 2).empty());
    CHECK_THROWS_AS(map_rho_invertible(Rational(0), -6, 6), PartialDomainError);

    auto res = map_res(MS::afam(Rational(1), Rational(2)), -6, 6);
    CHECK(res.at(0) == 1);
    CHECK(res.at(5) == 0);
    CHECK(check_linear_equivariance(res, 2).empty());

    auto dxi = map_d_xi(MS::bfam(Rational(1), Rational(4)), -6, 6);
    CHECK(dxi.at(2) == 2);
    CHECK(dxi.at(0) == 0);
    CHECK(check_linear_equivariance(dxi, 2).empty());

    auto duxi = map_d_upper_xi(MS::afam(Rational(1), Rational(4)), -6, 6);
    CHECK(duxi.at(-3) == -3);
    CHECK(check_linear_equivariance(duxi, 2).empty());
}

TEST_CASE("weights normalize into [0,1)") {
    Weight w = make_weight(Rational(-7, 3));
    CHECK(w.rep == Rational(2, 3));
    CHECK(w.offset == -3);
    CHECK(w.value() == Rational(-7, 3));
    auto [rep, carry] = add_cosets(Rational(2, 3), Rational(2, 3));
    CHECK(rep == Rational(1, 3));
    CHECK(carry == 1);
}
