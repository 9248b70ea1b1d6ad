#pragma once

#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "witt/rational.hpp"

namespace witt {

using RatMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RatVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

// Exact row reduction. Returns the rank; if `kernel` is non-null, fills it with
// a basis of the right kernel (each vector normalized so its first non-zero
// entry is 1). Works on a copy.
Eigen::Index rank(const RatMatrix& m);
std::vector<RatVector> nullspace(const RatMatrix& m);

// Exact m*v. (Spelled out: Eigen's product expression trips over a
// non-SFINAE-friendly converting constructor in this Boost version.)
inline RatVector mat_vec(const RatMatrix& m, const RatVector& v) {
    RatVector out = RatVector::Zero(m.rows());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            if (m(i, j) != 0 && v(j) != 0) out(i) += m(i, j) * v(j);
    return out;
}

// Sparse rows for the solver: the equivariance systems have three non-zeros per
// row, and unknowns ordered by total weight keep the elimination banded.
struct SparseRow {
    std::vector<std::pair<int, Rational>> entries;  // sorted by column
};

class SparseLinearSystem {
  public:
    explicit SparseLinearSystem(int cols) : cols_(cols) {}
    int cols() const { return cols_; }
    void add_row(std::vector<std::pair<int, Rational>> entries);
    // Exact nullspace; basis vectors are dense of length cols().
    std::vector<RatVector> kernel() const;
    Eigen::Index rank() const;

  private:
    int cols_;
    std::vector<SparseRow> rows_;
};

// Fraction-free Bareiss determinant over any commutative ring with exact
// division, supplied as `divide(a, b)` (must succeed for Bareiss divisions).
template <typename T, typename DivFn>
T bareiss_determinant(std::vector<std::vector<T>> m, const DivFn& divide, const T& one) {
    const int n = static_cast<int>(m.size());
    if (n == 0) return one;
    T prev = one;
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (m[k][k] == T{}) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (!(m[i][k] == T{})) { p = i; break; }
            if (p < 0) return T{};  // structurally singular
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                T t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                m[i][j] = divide(t, prev);
            }
            m[i][k] = T{};
        }
        prev = m[k][k];
    }
    T det = m[n - 1][n - 1];
    return sign < 0 ? T{} - det : det;
}

}  // namespace witt
