#include <doctest.h>

#include "witt/classify.hpp"
#include "witt/equivariance.hpp"
#include "witt/sampling.hpp"

using namespace witt;
using MS = ModuleSpec;

TEST_CASE("check_bilinear on the catalog and on a broken table") {
    auto g = grozman(Rational(1, 3), Rational(1, 5), -15, 15);
    auto rep = check_bilinear(g, generator_range(2));
    CHECK(rep.pass());
    CHECK(rep.interior_constraint_count > 1000);

    auto broken = g;
    broken.coeff[{1, 2}] += 1;
    auto rep2 = check_bilinear(broken, generator_range(2));
    CHECK(!rep2.pass());
    CHECK(rep2.violations.size() >= 1);
}

TEST_CASE("solve_bilinear_space reproduces the germ pillars") {
    Rational u(1, 3), v(1, 3);
    auto r = solve_bilinear_space(MS::omega(Rational(-2, 3), u), MS::omega(Rational(-2, 3), v),
                                  MS::omega(Rational(5, 3), u + v), 7);
    CHECK(r.nullity == 1);
    CHECK(r.stabilized);
    // the basis element is proportional to the Grozman table
    auto g = grozman(u, v, -7, 7);
    const BilinearTable& b = r.basis[0];
    Rational ratio;
    bool first = true;
    for (auto& [k, c] : b.coeff) {
        REQUIRE(g.at(k.first, k.second) != 0);
        Rational q = c / g.at(k.first, k.second);
        if (first) { ratio = q; first = false; }
        CHECK(q == ratio);
    }
    CHECK(b.coeff.size() == g.coeff.size());

    auto r0 = solve_bilinear_space(MS::omega(Rational(1, 3), u), MS::omega(Rational(1, 5), v),
                                   MS::omega(Rational(7), u + v), 7);
    CHECK(r0.nullity == 0);

    // support mismatch short-circuits to zero
    auto rs = solve_bilinear_space(MS::omega(Rational(1, 3), u), MS::omega(Rational(1, 5), v),
                                   MS::omega(Rational(8, 15), Rational(1, 7)), 7);
    CHECK(rs.nullity == 0);
}

TEST_CASE("oracle soundness: every basis table passes the checker") {
    Rational u(2, 7);
    std::vector<SolveResult> results;
    results.push_back(solve_bilinear_space(MS::omega(Rational(0), u), MS::omega(Rational(0), -u),
                                           MS::omega(Rational(0), Rational(0)), 6));
    results.push_back(solve_bilinear_space(MS::afam(Rational(1), Rational(1)),
                                           MS::afam(Rational(1), Rational(1)),
                                           MS::bfam(Rational(1), Rational(1)), 6));
    for (const auto& r : results) {
        CHECK(r.stabilized);
        for (const auto& b : r.basis) CHECK(check_bilinear(b, r.generators).pass());
    }
}

TEST_CASE("degenerate-space solves reproduce the Table-2 dimensions") {
    MS a11 = MS::afam(Rational(1), Rational(1));
    MS b11 = MS::bfam(Rational(1), Rational(1));
    SupportMask all{SupportLine::H, SupportLine::V, SupportLine::D, SupportLine::Origin};
    auto r = solve_degenerate_space(a11, a11, b11, 7, all);
    CHECK(r.nullity == 2);  // trivial + Theta

    SupportMask origin{SupportLine::Origin};
    auto r2 = solve_degenerate_space(MS::afam(Rational(1), Rational(0)),
                                     MS::afam(Rational(0), Rational(1)),
                                     MS::bfam(Rational(1), Rational(1)), 7, origin);
    CHECK(r2.nullity == 1);

    // mask V: (A_xi, Omega^d_u, Omega^d_u): Res (x) isomorphism
    SupportMask vmask{SupportLine::V};
    auto r3 = solve_degenerate_space(a11, MS::omega(Rational(5, 7), Rational(1, 3)),
                                     MS::omega(Rational(5, 7), Rational(1, 3)), 7, vmask);
    CHECK(r3.nullity == 1);
}

TEST_CASE("mask H u V u D catches Theta's support") {
    auto th = theta(Rational(1), Rational(1), -7, 7);
    auto rep = check_bilinear(th, generator_range(2));
    CHECK(rep.pass());
    for (auto& [k, c] : th.coeff) {
        Rational x = th.left.weight(k.first).value();
        Rational y = th.right.weight(k.second).value();
        CHECK((x == 0 || y == 0 || x + y == 0));
    }
}

namespace {

// Rank of the stacked coefficient vectors of `tables` over the in-window cells
// of `grid` (all tables must share module windows up to margins).
Eigen::Index stacked_rank(const std::vector<const BilinearTable*>& tables,
                          const BilinearTable& grid, long w) {
    std::vector<std::pair<long, long>> cells;
    for (long i = -w; i <= w; ++i)
        for (long j = -w; j <= w; ++j)
            if (grid.in_window(i, j)) cells.push_back({i, j});
    RatMatrix m(tables.size(), cells.size());
    for (size_t r = 0; r < tables.size(); ++r)
        for (size_t c = 0; c < cells.size(); ++c)
            m(r, c) = tables[r]->at(cells[c].first, cells[c].second);
    return rank(m);
}

}  // namespace

TEST_CASE("catalog expressions span the stabilized solution space modulo degenerate maps") {
    const long W = 6;
    const SupportMask all_mask{SupportLine::H, SupportLine::V, SupportLine::D, SupportLine::Origin};
    struct Row {
        MS m, n, p;
        std::vector<std::string> exprs;
    };
    Rational u(1, 3), v(1, 5);
    std::vector<Row> rows = {
        // Table 4 line 3: A_xi x Omega^d_u -> Omega^{d+1}_u
        {MS::afam(Rational(1), Rational(2)), MS::omega(Rational(7, 2), u),
         MS::omega(Rational(9, 2), u), {"B[0,7/2;0,1/3](1,2)"}},
        // Table 4 line 8: B_xi x Omega^d_u -> Omega^{d+2}_u
        {MS::bfam(Rational(1), Rational(2)), MS::omega(Rational(7, 2), u),
         MS::omega(Rational(11, 2), u), {"B[1,7/2;0,1/3] . (dxi(1,2) x id)"}},
        // Table 4 line 4: Omega^d_u x Omega^{-d}_{-u} -> B_xi
        {MS::omega(Rational(7, 2), u), MS::omega(Rational(-7, 2), -u),
         MS::bfam(Rational(1), Rational(2)), {"B[7/2,-7/2;1/3,2/3](1,2)"}},
        // Table 5 line 1 (two-dimensional)
        {MS::omega(Rational(0), u), MS::omega(Rational(0), v), MS::omega(Rational(1), u + v),
         {"P[1,0;1/3,1/5] . (d x id)", "P[0,1;1/3,1/5] . (id x d)"}},
        // mixing triple: Table 6 line 1
        {MS::omega(Rational(0), u), MS::omega(Rational(1), Rational(0)), MS::omega(Rational(1), u),
         {"P[0,1;1/3,0]"}},
    };
    for (const Row& row : rows) {
        SolveResult full = solve_bilinear_space(row.m, row.n, row.p, W);
        SolveResult degen = solve_degenerate_space(row.m, row.n, row.p, W, all_mask);
        std::vector<BilinearTable> catalog;
        for (const auto& text : row.exprs) {
            auto e = OperatorExpr::parse(text);
            REQUIRE(e);
            catalog.push_back(e->evaluate(W));
        }
        REQUIRE(!full.basis.empty());
        const BilinearTable& grid = full.basis.front();
        std::vector<const BilinearTable*> solution, degen_plus_catalog, everything;
        for (const auto& b : full.basis) solution.push_back(&b);
        for (const auto& b : degen.basis) { degen_plus_catalog.push_back(&b); everything.push_back(&b); }
        for (const auto& b : catalog) { degen_plus_catalog.push_back(&b); everything.push_back(&b); }
        for (const auto& b : full.basis) everything.push_back(&b);
        Eigen::Index r_solution = stacked_rank(solution, grid, W);
        Eigen::Index r_dc = stacked_rank(degen_plus_catalog, grid, W);
        Eigen::Index r_all = stacked_rank(everything, grid, W);
        CHECK(r_solution == static_cast<Eigen::Index>(full.nullity));
        CHECK(r_dc == r_solution);   // degenerate + catalog generate everything
        CHECK(r_all == r_solution);  // and introduce nothing new
    }
}

TEST_CASE("solve result JSON") {
    Rational u(1, 3);
    auto r = solve_bilinear_space(MS::omega(Rational(0), u), MS::omega(Rational(0), -u),
                                  MS::omega(Rational(0), Rational(0)), 6);
    auto j = r.json();
    CHECK(j.find("\"nullity\":2") != std::string::npos);
    CHECK(j.find("\"stabilized\":true") != std::string::npos);
}
