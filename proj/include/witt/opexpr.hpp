#pragma once

#include <optional>
#include <string>
#include <vector>

#include "witt/bilinear.hpp"

namespace witt {

// Linear-map atoms usable on either input slot or the output of a bilinear
// primitive. `RhoInv` is the strict d^{-1} branch (PartialDomainError at
// weight 0); `Rho` is the total map (residue composite when the coset is 0).
struct LinOp {
    enum Kind { Id, D, Rho, RhoInv, DXi, DUpperXi, Scalar } kind = Id;
    Rational a, b;  // xi for DXi / DUpperXi
    Rational c;     // Scalar

    std::string str() const;
};

// A composition tree over the named operator catalog, flattened as
//   out_k o ... o out_1 o LEAF o (pair_1) o (pair_2) o ...
// in text form "out_k . ... . LEAF . (l_1 x r_1) . ...".
struct OperatorExpr {
    enum class Leaf { P, B, BXi, G, Theta, Eta, EtaT, Trivial, PM };
    Leaf leaf = Leaf::P;

    Rational d1, d2;  // degrees (P, B, BXi)
    Rational u, v;    // source cosets (P, B, BXi, G)
    Rational xa, xb;  // xi (BXi, Theta, EtaT)
    std::pair<Rational, Rational> e1, e2, e3;  // eta / trivial parameters
    Rational tparam;                           // EtaT
    ModuleSpec pm_target;                      // PM

    std::vector<LinOp> out;                          // text order: outermost first
    std::vector<std::pair<LinOp, LinOp>> pairs;      // text order: nearest to the leaf first

    std::string str() const;
    static std::optional<OperatorExpr> parse(const std::string& text);

    // Evaluates the composed coefficient table on source windows [lo, hi].
    // Throws CompositionTypeError on spec mismatches and PartialDomainError
    // when d^{-1} is requested at weight 0.
    BilinearTable evaluate(long lo, long hi) const;
    BilinearTable evaluate(long window) const { return evaluate(-window, window); }
};

}  // namespace witt
