#include "witt/linalg.hpp"

#include <algorithm>
#include <map>

namespace witt {

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<Eigen::Index> rref(RatMatrix& a) {
    std::vector<Eigen::Index> pivots;
    Eigen::Index r = 0;
    for (Eigen::Index c = 0; c < a.cols() && r < a.rows(); ++c) {
        Eigen::Index p = -1;
        for (Eigen::Index i = r; i < a.rows(); ++i)
            if (a(i, c) != 0) { p = i; break; }
        if (p < 0) continue;
        a.row(p).swap(a.row(r));
        Rational inv = a(r, c);
        for (Eigen::Index j = c; j < a.cols(); ++j) a(r, j) /= inv;
        for (Eigen::Index i = 0; i < a.rows(); ++i) {
            if (i == r || a(i, c) == 0) continue;
            Rational f = a(i, c);
            for (Eigen::Index j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::vector<RatVector> kernel_from_rref(const RatMatrix& a, const std::vector<Eigen::Index>& pivots) {
    std::vector<RatVector> basis;
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    for (Eigen::Index free = 0; free < a.cols(); ++free) {
        if (is_pivot[free]) continue;
        RatVector v = RatVector::Zero(a.cols());
        v(free) = 1;
        for (size_t r = 0; r < pivots.size(); ++r) v(pivots[r]) = -a(r, free);
        // normalize: first non-zero entry 1
        for (Eigen::Index i = 0; i < v.size(); ++i) {
            if (v(i) != 0) {
                Rational inv = v(i);
                for (Eigen::Index j = 0; j < v.size(); ++j) v(j) /= inv;
                break;
            }
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace

Eigen::Index rank(const RatMatrix& m) {
    RatMatrix a = m;
    return static_cast<Eigen::Index>(rref(a).size());
}

std::vector<RatVector> nullspace(const RatMatrix& m) {
    RatMatrix a = m;
    auto pivots = rref(a);
    return kernel_from_rref(a, pivots);
}

void SparseLinearSystem::add_row(std::vector<std::pair<int, Rational>> entries) {
    std::sort(entries.begin(), entries.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    // merge duplicates, drop zeros
    std::vector<std::pair<int, Rational>> merged;
    for (auto& e : entries) {
        if (e.second == 0) continue;
        if (!merged.empty() && merged.back().first == e.first)
            merged.back().second += e.second;
        else
            merged.push_back(std::move(e));
    }
    merged.erase(std::remove_if(merged.begin(), merged.end(),
                                [](const auto& e) { return e.second == 0; }),
                 merged.end());
    if (!merged.empty()) rows_.push_back(SparseRow{std::move(merged)});
}

namespace {

// Integer-preserving sparse elimination: rows are cleared of denominators,
// combined by cross-multiplication (no per-entry rational gcds) and stripped
// of their integer content once per operation. Much faster than normalized
// rational elimination on the banded equivariance systems.
struct IntRow {
    std::vector<std::pair<int, Int>> entries;  // sorted by column
};

void strip_content(IntRow& r) {
    Int g = 0;
    for (auto& [c, v] : r.entries) {
        g = boost::multiprecision::gcd(g, v);
        if (g == 1) return;
    }
    if (g == 0 || g == 1) return;
    for (auto& [c, v] : r.entries) v /= g;
}

IntRow clear_denominators(const SparseRow& row) {
    Int l = 1;
    for (auto& [c, v] : row.entries)
        l = boost::multiprecision::lcm(l, Int(denominator(v)));
    IntRow out;
    out.entries.reserve(row.entries.size());
    for (auto& [c, v] : row.entries)
        out.entries.emplace_back(c, numerator(v) * (l / Int(denominator(v))));
    strip_content(out);
    return out;
}

// a*r1 + b*r2, merged by column
IntRow combine(const Int& a, const IntRow& r1, const Int& b, const IntRow& r2) {
    IntRow out;
    out.entries.reserve(r1.entries.size() + r2.entries.size());
    auto it = r1.entries.begin();
    auto jt = r2.entries.begin();
    while (it != r1.entries.end() || jt != r2.entries.end()) {
        if (jt == r2.entries.end() || (it != r1.entries.end() && it->first < jt->first)) {
            out.entries.emplace_back(it->first, a * it->second);
            ++it;
        } else if (it == r1.entries.end() || jt->first < it->first) {
            out.entries.emplace_back(jt->first, b * jt->second);
            ++jt;
        } else {
            Int v = a * it->second + b * jt->second;
            if (v != 0) out.entries.emplace_back(it->first, std::move(v));
            ++it;
            ++jt;
        }
    }
    return out;
}

struct SparseElim {
    std::vector<IntRow> reduced;  // echelon rows, one pivot each
    std::map<int, size_t> pivot_of_col;

    void insert(IntRow row) {
        while (!row.entries.empty()) {
            int lead = row.entries.front().first;
            auto it = pivot_of_col.find(lead);
            if (it == pivot_of_col.end()) {
                strip_content(row);
                pivot_of_col[lead] = reduced.size();
                reduced.push_back(std::move(row));
                return;
            }
            const IntRow& p = reduced[it->second];
            row = combine(p.entries.front().second, row, -row.entries.front().second, p);
            strip_content(row);
        }
    }
};

}  // namespace

namespace {

// Insert in leading-column order: on the banded equivariance systems this
// keeps the reduction chains short.
SparseElim eliminate_all(const std::vector<SparseRow>& rows) {
    std::vector<IntRow> cleared;
    cleared.reserve(rows.size());
    for (const auto& r : rows) cleared.push_back(clear_denominators(r));
    std::stable_sort(cleared.begin(), cleared.end(), [](const IntRow& a, const IntRow& b) {
        return a.entries.front().first < b.entries.front().first;
    });
    SparseElim elim;
    for (auto& r : cleared) elim.insert(std::move(r));
    return elim;
}

}  // namespace

std::vector<RatVector> SparseLinearSystem::kernel() const {
    SparseElim elim = eliminate_all(rows_);
    std::vector<bool> is_pivot(cols_, false);
    for (auto& [c, idx] : elim.pivot_of_col) is_pivot[c] = true;
    std::vector<RatVector> basis;
    for (int free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        RatVector v = RatVector::Zero(cols_);
        v(free) = 1;
        // echelon rows only touch columns >= their pivot: solve right to left
        for (auto it = elim.pivot_of_col.rbegin(); it != elim.pivot_of_col.rend(); ++it) {
            const IntRow& r = elim.reduced[it->second];
            Rational acc(0);
            for (size_t k = 1; k < r.entries.size(); ++k) {
                const auto& [c, val] = r.entries[k];
                if (v(c) != 0) acc += Rational(val) * v(c);
            }
            v(it->first) = -acc / Rational(r.entries.front().second);
        }
        // normalize: first non-zero entry 1
        for (Eigen::Index i = 0; i < v.size(); ++i) {
            if (v(i) != 0) {
                Rational inv = v(i);
                for (Eigen::Index j = i; j < v.size(); ++j) v(j) /= inv;
                break;
            }
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

Eigen::Index SparseLinearSystem::rank() const {
    return static_cast<Eigen::Index>(eliminate_all(rows_).pivot_of_col.size());
}

}  // namespace witt
