#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "witt/equivariance.hpp"
#include "witt/germ.hpp"
#include "witt/opexpr.hpp"

namespace witt {

// dim B^0_W(M x N, P) with the matching constructors, by Table-2 lookup over
// the S3-orbit of {M, N, P*} in KS normal form. Inputs must be indecomposable.
struct DegenerateResult {
    int dim = 0;
    std::vector<std::string> constructors;
    std::set<std::string> support;  // subset of {"0","H","V","D"}
};
DegenerateResult degenerate_dim(const ModuleSpec& m, const ModuleSpec& n, const ModuleSpec& p);

// dim Bbar_W(M x N, P) (the lifted-germ part) with generator expressions where
// the orientation matches a table row directly.
struct BbarResult {
    int dim = 0;
    std::vector<std::string> basis;
};
BbarResult bbar_dim(const ModuleSpec& m, const ModuleSpec& n, const ModuleSpec& p);

struct ClassificationVerdict {
    int dim_B0 = 0;
    int dim_Bbar = 0;
    int dim_B = 0;
    bool mixing = false;
    std::vector<std::string> basis_degenerate;
    std::vector<std::string> basis_nondegenerate;
    std::set<std::string> support_profile;
    bool oracle_sourced = false;             // decomposable mixes fall back to the solver
    std::optional<bool> oracle_agrees;       // set when a window cross-check was requested

    std::string json() const;
};

// Combines the two decision procedures; flags mixing triples; optionally
// cross-validates against solve_bilinear_space on the given window.
ClassificationVerdict full_classification(const ModuleSpec& m, const ModuleSpec& n,
                                          const ModuleSpec& p,
                                          std::optional<long> oracle_window = std::nullopt);

// True iff the expression is one of the primitive maps of the classification
// (Poisson products/brackets, extended brackets, Theta, Grozman, eta with
// distinct points, the obvious P^M), verified on a window against the
// sufficient conditions (image spans the target / zero left kernel) where the
// irreducibility pattern makes them applicable.
bool primitivity_check(const OperatorExpr& expr, long window = 8);

struct SupportAnalysis {
    long m_quotient_dim = 0;  // dim M / M_pi measured on the window
    long n_quotient_dim = 0;
    std::set<std::string> closure;  // lines H/V/D met by the support away from 0
    bool dense = false;             // support not inside H u V u D u {(0,0)}
};
SupportAnalysis support_analysis(const BilinearTable& t);

}  // namespace witt
