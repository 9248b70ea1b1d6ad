#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "witt/multipoly.hpp"
#include "witt/rational.hpp"

namespace witt {

struct TripleSignature {
    Rational d1, d2, g;
    std::optional<Rational> u, v;
};

// Coefficients of the weight recurrences
//   a_k(x,y) X(x+k,y-k) + b_k(x,y) X(x,y) + c_k(x,y) X(x-k,y+k) = 0,  k = 1,2.
struct RecurrencePolys {
    MultiPoly a, b, c;
};
RecurrencePolys coeff_polys(int k);

// The 6x6 matrix acting on (X(x+6,y-6), ..., X(x+1,y-1)): rows 1-4 are the k=1
// recurrence at shifts l = 5,4,3,2 and rows 5-6 the k=2 recurrence at l = 4,3.
std::array<std::array<MultiPoly, 6>, 6> build_matrix();

struct DivisionFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DetBundle {
    MultiPoly D;  // det M, fully expanded
    MultiPoly C;  // (d1+d2+g)(d1+d2-g)(d1+d2+1-g)(d1+d2-1+g)
    std::map<std::pair<int, int>, MultiPoly> p;       // D = sum p_{i,j} x^i y^j
    std::map<std::pair<int, int>, MultiPoly> q;       // p_{i,j} = C q_{i,j}
    std::map<std::pair<int, int>, MultiPoly> qtilde;  // D(x-7/2,y+7/2) = C sum qt x^i y^j
    bool methods_agree = false;                       // cofactor == Bareiss, bit for bit

    std::string json() const;
};

// Expands det M by two independent methods (memoized cofactors and fraction-free
// Bareiss) and performs the exact divisions. A failed division throws
// DivisionFailure: it would falsify the divisibility lemma.
DetBundle compute_determinant();
// Cached singleton (the bundle is immutable once computed).
const DetBundle& determinant_bundle();

// --- zero sets --------------------------------------------------------------

enum class ZeroComponent { H0, H1, D1, D2, D3, D4, D5, D6, P1, P2, P3, P4, P5 };

struct ZeroSetHit {
    ZeroComponent comp;
    bool tau_image = false;  // hit the gamma -> 1-gamma image of the component
    std::string str() const;
};

// All components of frak-z (and of its tau image) containing the triple.
std::vector<ZeroSetHit> zero_set_membership(const TripleSignature& t);
bool in_frak_z(const TripleSignature& t);         // member of frak-z itself
bool frak_z_star(const TripleSignature& t);       // frak-z minus the {0,1}^3 cases
bool in_big_z_display(const TripleSignature& t);  // the displayed frak-Z (4 planes, 8 lines, 4 points)

// --- Theorem 2 --------------------------------------------------------------

struct GermDim {
    int dim = 0;
    std::vector<std::string> generators;  // OperatorExpr text
    std::vector<ZeroSetHit> components;
};
GermDim theorem2_dim(const TripleSignature& t);

// Exact kernel dimension of {k=1,2 recurrences + L_{+-1} cross constraints} on
// the cone with the given origin weights, re-checked at depth+5.
long recurrence_germ_oracle(const TripleSignature& t, const Rational& x0, const Rational& y0,
                            long depth);

// --- verifiers ---------------------------------------------------------------

struct StepIdentityReport {
    bool identity8_on_01 = false;        // holds for deltas in {0,1}, tau = 0
    bool identity8_fails_generic = false;
    bool displayed_rhs_differs = false;  // the printed a_1(x+1,y+1) variant is not an identity
    bool adbc_matches = false;           // ad-bc = sign * (9/32)(1+2y)(2x-1)(2xy-1)
    int adbc_sign = 0;
    std::vector<std::string> notes;
    bool pass() const { return identity8_on_01 && identity8_fails_generic && adbc_matches; }
};
StepIdentityReport verify_step_identities();

struct AppendixReport {
    bool methods_agree = false;
    bool divisibility_ok = false;   // every p_{i,j} divisible by C
    bool support_ok = false;        // exactly the seven listed qtilde
    bool symmetry_ok = false;       // D(x,y) = D(-x-7, -y+7)
    bool qtilde_matches_q = false;  // qt_13 = q_13, qt_31 = q_31, qt_22 = q_22
    bool tau_invariance_ok = false; // p_{i,j}(g) = p_{i,j}(1-g)
    std::vector<std::string> transcription_mismatches;  // per-display typo report
    std::vector<std::string> notes;
    bool internally_consistent() const {
        return methods_agree && divisibility_ok && support_ok && symmetry_ok && qtilde_matches_q &&
               tau_invariance_ok;
    }
};
AppendixReport verify_appendix(const DetBundle& bundle);

struct FactorizationReport {
    bool q13_factors = false;  // -(1/8)q13 = d1 (d1-1) Q with Q quadratic
    bool q31_factors = false;
    bool typo_resolved_to_square = false;  // bracket matches the d1^2 reading, not d1^1
    bool qdiff_proportional = false;       // Q' - Q is a scalar multiple of d1-d2
    bool q22_diagonal_ok = false;          // q22(d,d,g) = 12d(3d+2)(d-1)^2 under g(1-g)=2d^2-2
    bool q_at_zero_factors = false;        // Q(0,d2,g) = -(g+d2+1)(g-d2-2)
    std::string q13_bracket;               // recomputed quadratic factor, printed
    std::vector<std::string> notes;
    bool pass() const {
        return q13_factors && q31_factors && qdiff_proportional && q22_diagonal_ok &&
               q_at_zero_factors;
    }
};
FactorizationReport verify_factorizations(const DetBundle& bundle);

}  // namespace witt
