#pragma once

#include <optional>
#include <string>
#include <vector>

#include "witt/bilinear.hpp"
#include "witt/linalg.hpp"

namespace witt {

struct Violation {
    long m = 0, x = 0, y = 0;
    Rational residual;
};

struct EquivarianceReport {
    std::vector<long> checked_generators;
    long interior_constraint_count = 0;
    std::vector<Violation> violations;

    bool pass() const { return violations.empty(); }
};

// Exact residuals of L_m.pi(a,b) = pi(L_m a, b) + pi(a, L_m b) at every
// interior point: a constraint at (m,x,y) is emitted only when (x,y), (x+m,y),
// (x,y+m) and the target weight x+y+m all index in-window basis vectors.
EquivarianceReport check_bilinear(const BilinearTable& t, const std::vector<long>& generators);

inline std::vector<long> generator_range(long mmax) {
    std::vector<long> g;
    for (long m = -mmax; m <= mmax; ++m)
        if (m != 0) g.push_back(m);
    return g;
}

struct UnstableDimension : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class SupportLine { H, V, D, Origin };
using SupportMask = std::set<SupportLine>;

struct SolveResult {
    long window = 0;
    std::vector<long> generators;
    long nullity = 0;
    std::vector<BilinearTable> basis;
    bool stabilized = false;

    std::string json() const;
};

// Exact dimension and basis of the space of equivariant bilinear tables on the
// symmetric window [-n, n], with the interior-restriction rule above. The
// nullity is recomputed at n+5; UnstableDimension is thrown when the two
// disagree. Generators must include {-2,-1,1,2} (they generate W).
SolveResult solve_bilinear_space(const ModuleSpec& m, const ModuleSpec& n, const ModuleSpec& p,
                                 long window, std::vector<long> generators = {});

// Same linear system with the unknowns restricted to a union of the lines
// H = {y=0}, V = {x=0}, D = {x+y=0} and the origin.
SolveResult solve_degenerate_space(const ModuleSpec& m, const ModuleSpec& n, const ModuleSpec& p,
                                   long window, const SupportMask& mask,
                                   std::vector<long> generators = {});

}  // namespace witt
