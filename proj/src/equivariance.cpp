#include "witt/equivariance.hpp"

#include <nlohmann/json.hpp>
#include <algorithm>
#include <map>

namespace witt {

EquivarianceReport check_bilinear(const BilinearTable& t, const std::vector<long>& generators) {
    EquivarianceReport rep;
    rep.checked_generators = generators;
    for (long m : generators) {
        if (m == 0) continue;
        for (long i = t.left.lo; i <= t.left.hi; ++i) {
            if (!t.left.contains(i + m)) continue;
            for (long j = t.right.lo; j <= t.right.hi; ++j) {
                if (!t.right.contains(j + m)) continue;
                long z = t.target_offset(i, j);
                if (!t.target.contains(z) || !t.target.contains(z + m)) continue;
                ++rep.interior_constraint_count;
                Rational lhs = act(t.target.spec, m, t.target.weight(z)) * t.at(i, j);
                Rational rhs = act(t.left.spec, m, t.left.weight(i)) * t.at(i + m, j) +
                               act(t.right.spec, m, t.right.weight(j)) * t.at(i, j + m);
                if (lhs != rhs) rep.violations.push_back({m, i, j, lhs - rhs});
            }
        }
    }
    return rep;
}

namespace {

struct Grid {
    BilinearTable skeleton;                       // windows + carry, no coefficients
    std::vector<std::pair<long, long>> cells;     // unknown order: by i+j, then i
    std::map<std::pair<long, long>, int> index;

    bool has(long i, long j) const { return index.count({i, j}) > 0; }
};

bool on_mask(const BilinearTable& t, long i, long j, const SupportMask& mask) {
    Rational x = t.left.weight(i).value();
    Rational y = t.right.weight(j).value();
    if (mask.count(SupportLine::Origin) && x == 0 && y == 0) return true;
    if (mask.count(SupportLine::H) && y == 0) return true;
    if (mask.count(SupportLine::V) && x == 0) return true;
    if (mask.count(SupportLine::D) && x + y == 0) return true;
    return false;
}

Grid build_grid(const ModuleSpec& m, const ModuleSpec& n, const ModuleSpec& p, long window,
                long margin, const SupportMask* mask) {
    WindowedModule L{m, -window, window}, R{n, -window, window};
    auto [rep, carry] = add_cosets(L.spec.coset_rep(), R.spec.coset_rep());
    (void)rep;
    WindowedModule T{p, L.lo + R.lo + carry - margin, L.hi + R.hi + carry + margin};
    Grid g;
    g.skeleton = make_table(L, R, T);
    for (long s = 2 * L.lo; s <= 2 * L.hi; ++s) {
        for (long i = std::max(L.lo, s - R.hi); i <= std::min(L.hi, s - R.lo); ++i) {
            long j = s - i;
            if (!g.skeleton.in_window(i, j)) continue;
            if (mask && !on_mask(g.skeleton, i, j, *mask)) continue;
            g.index[{i, j}] = static_cast<int>(g.cells.size());
            g.cells.push_back({i, j});
        }
    }
    return g;
}

long solve_on_grid(const Grid& g, const std::vector<long>& gens,
                   std::vector<RatVector>* kernel_out) {
    const BilinearTable& t = g.skeleton;
    SparseLinearSystem sys(static_cast<int>(g.cells.size()));
    for (long m : gens) {
        for (long i = t.left.lo; i <= t.left.hi; ++i) {
            if (!t.left.contains(i + m)) continue;
            for (long j = t.right.lo; j <= t.right.hi; ++j) {
                if (!t.right.contains(j + m)) continue;
                long z = t.target_offset(i, j);
                if (!t.target.contains(z) || !t.target.contains(z + m)) continue;
                std::vector<std::pair<int, Rational>> row;
                auto push = [&](long a, long b, const Rational& c) {
                    if (c == 0) return;
                    auto it = g.index.find({a, b});
                    if (it != g.index.end()) row.emplace_back(it->second, c);
                };
                push(i, j, act(t.target.spec, m, t.target.weight(z)));
                push(i + m, j, -act(t.left.spec, m, t.left.weight(i)));
                push(i, j + m, -act(t.right.spec, m, t.right.weight(j)));
                sys.add_row(std::move(row));
            }
        }
    }
    auto ker = sys.kernel();
    long nullity = static_cast<long>(ker.size());
    if (kernel_out) *kernel_out = std::move(ker);
    return nullity;
}

SolveResult solve_impl(const ModuleSpec& m, const ModuleSpec& n, const ModuleSpec& p, long window,
                       std::vector<long> gens, const SupportMask* mask) {
    if (gens.empty()) gens = {-2, -1, 1, 2};
    long margin = 4;
    for (long g : gens) margin = std::max(margin, std::abs(g) + 1);

    SolveResult res;
    res.window = window;
    res.generators = gens;

    // Supp P must be Supp M + Supp N as cosets, else the space is trivially zero.
    auto [rep, carry] = add_cosets(ModuleSpec(m).coset_rep(), ModuleSpec(n).coset_rep());
    (void)carry;
    if (rep != ModuleSpec(p).coset_rep()) {
        res.nullity = 0;
        res.stabilized = true;
        return res;
    }

    Grid g = build_grid(m, n, p, window, margin, mask);
    std::vector<RatVector> ker;
    res.nullity = solve_on_grid(g, gens, &ker);

    Grid g2 = build_grid(m, n, p, window + 5, margin, mask);
    long nullity2 = solve_on_grid(g2, gens, nullptr);
    res.stabilized = (nullity2 == res.nullity);

    for (const auto& v : ker) {
        BilinearTable b = g.skeleton;
        for (size_t k = 0; k < g.cells.size(); ++k)
            if (v(static_cast<Eigen::Index>(k)) != 0)
                b.coeff[g.cells[k]] = v(static_cast<Eigen::Index>(k));
        res.basis.push_back(std::move(b));
    }
    return res;
}

}  // namespace

SolveResult solve_bilinear_space(const ModuleSpec& m, const ModuleSpec& n, const ModuleSpec& p,
                                 long window, std::vector<long> generators) {
    SolveResult r = solve_impl(m, n, p, window, std::move(generators), nullptr);
    if (!r.stabilized)
        throw UnstableDimension("nullity did not stabilize between N and N+5 (window too small)");
    return r;
}

SolveResult solve_degenerate_space(const ModuleSpec& m, const ModuleSpec& n, const ModuleSpec& p,
                                   long window, const SupportMask& mask,
                                   std::vector<long> generators) {
    SolveResult r = solve_impl(m, n, p, window, std::move(generators), &mask);
    if (!r.stabilized)
        throw UnstableDimension("nullity did not stabilize between N and N+5 (window too small)");
    return r;
}

std::string SolveResult::json() const {
    nlohmann::json j;
    j["nullity"] = nullity;
    j["stabilized"] = stabilized;
    j["window"] = window;
    nlohmann::json basis_json = nlohmann::json::array();
    for (const auto& b : basis) {
        nlohmann::json entries = nlohmann::json::array();
        for (auto& [k, c] : b.coeff) entries.push_back({k.first, k.second, to_string(c)});
        basis_json.push_back(entries);
    }
    j["basis"] = basis_json;
    return j.dump();
}

}  // namespace witt
