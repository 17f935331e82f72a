#include "hofa/linalg.hpp"

#include <stdexcept>

namespace hofa {

Rat dot(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
    Rat s;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Rat dot(const IntVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
    Rat s;
    for (size_t i = 0; i < a.size(); ++i) s += Rat(a[i]) * b[i];
    return s;
}

BigInt dot(const IntVec& a, const IntVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
    BigInt s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

namespace {

// Row echelon reduction in place; returns pivot columns.
std::vector<int> echelon(RatMat& m) {
    std::vector<int> pivots;
    size_t row = 0;
    size_t cols = m.empty() ? 0 : m[0].size();
    for (size_t col = 0; col < cols && row < m.size(); ++col) {
        size_t sel = row;
        while (sel < m.size() && m[sel][col].is_zero()) ++sel;
        if (sel == m.size()) continue;
        std::swap(m[row], m[sel]);
        Rat inv = Rat(1) / m[row][col];
        for (size_t j = col; j < cols; ++j) m[row][j] *= inv;
        for (size_t i = 0; i < m.size(); ++i) {
            if (i == row || m[i][col].is_zero()) continue;
            Rat f = m[i][col];
            for (size_t j = col; j < cols; ++j) m[i][j] -= f * m[row][j];
        }
        pivots.push_back(static_cast<int>(col));
        ++row;
    }
    return pivots;
}

}  // namespace

int rank(RatMat m) { return static_cast<int>(echelon(m).size()); }

int rank_int(const std::vector<IntVec>& rows) {
    RatMat m;
    for (const auto& r : rows) {
        RatVec v(r.size());
        for (size_t i = 0; i < r.size(); ++i) v[i] = Rat(r[i]);
        m.push_back(std::move(v));
    }
    return rank(std::move(m));
}

std::vector<int> independent_subset(const std::vector<IntVec>& rows) {
    std::vector<int> keep;
    RatMat acc;
    int r = 0;
    for (size_t i = 0; i < rows.size(); ++i) {
        RatVec v(rows[i].size());
        for (size_t j = 0; j < rows[i].size(); ++j) v[j] = Rat(rows[i][j]);
        acc.push_back(std::move(v));
        int nr = rank(acc);
        if (nr > r) {
            keep.push_back(static_cast<int>(i));
            r = nr;
        } else {
            acc.pop_back();
        }
    }
    return keep;
}

std::optional<RatVec> solve(RatMat a, RatVec b) {
    size_t rows = a.size();
    size_t cols = rows ? a[0].size() : 0;
    for (size_t i = 0; i < rows; ++i) a[i].push_back(b[i]);
    auto pivots = echelon(a);
    // Inconsistent iff a pivot lands in the appended column.
    if (!pivots.empty() && pivots.back() == static_cast<int>(cols)) return std::nullopt;
    RatVec x(cols);
    for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = a[r][cols];
    return x;
}

std::vector<RatVec> nullspace(RatMat a) {
    if (a.empty()) return {};
    size_t cols = a[0].size();
    auto pivots = echelon(a);
    std::vector<bool> is_pivot(cols, false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<RatVec> basis;
    for (size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        RatVec v(cols);
        v[free] = Rat(1);
        for (size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -a[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<IntVec> integer_kernel(const std::vector<IntVec>& a) {
    if (a.empty()) return {};
    size_t rows = a.size(), cols = a[0].size();
    // Column reduction M U = H with U unimodular; zero columns of H give the
    // kernel basis as the matching columns of U.
    std::vector<IntVec> m(a);
    std::vector<IntVec> u(cols, IntVec(cols, 0));
    for (size_t i = 0; i < cols; ++i) u[i][i] = 1;  // u stored column-major: u[c] is column c

    size_t pivot_col = 0;
    for (size_t r = 0; r < rows && pivot_col < cols; ++r) {
        // gcd-reduce columns pivot_col..cols-1 on row r
        while (true) {
            size_t best = cols;
            for (size_t c = pivot_col; c < cols; ++c) {
                if (m[r][c] != 0 && (best == cols || cmp(abs(m[r][c]), abs(m[r][best])) < 0)) best = c;
            }
            if (best == cols) break;  // row r all zero from pivot_col on
            if (best != pivot_col) {
                for (size_t i = 0; i < rows; ++i) std::swap(m[i][best], m[i][pivot_col]);
                std::swap(u[best], u[pivot_col]);
            }
            bool done = true;
            for (size_t c = pivot_col + 1; c < cols; ++c) {
                if (m[r][c] == 0) continue;
                BigInt q;
                mpz_tdiv_q(q.get_mpz_t(), m[r][c].get_mpz_t(), m[r][pivot_col].get_mpz_t());
                if (q != 0) {
                    for (size_t i = 0; i < rows; ++i) m[i][c] -= q * m[i][pivot_col];
                    for (size_t i = 0; i < cols; ++i) u[c][i] -= q * u[pivot_col][i];
                }
                if (m[r][c] != 0) done = false;
            }
            if (done) break;
        }
        if (m[r][pivot_col] != 0) ++pivot_col;
    }
    std::vector<IntVec> kernel;
    for (size_t c = pivot_col; c < cols; ++c) {
        bool zero = true;
        for (size_t i = 0; i < rows; ++i)
            if (m[i][c] != 0) { zero = false; break; }
        if (zero) kernel.push_back(u[c]);
    }
    return kernel;
}

std::vector<IntVec> saturated_basis(const std::vector<RatVec>& span) {
    if (span.empty()) return {};
    size_t n = span[0].size();
    // span ∩ Z^n = integer kernel of an integer matrix whose Q-kernel is the
    // span: rows spanning the orthogonal complement, with denominators cleared.
    RatMat m;
    for (const auto& v : span) m.push_back(v);
    auto ortho = nullspace(std::move(m));
    if (ortho.empty()) {
        // span is everything
        std::vector<IntVec> id(n, IntVec(n, 0));
        for (size_t i = 0; i < n; ++i) id[i][i] = 1;
        return id;
    }
    std::vector<IntVec> rows;
    for (const auto& v : ortho) {
        BigInt l = lcm_of_denominators(v);
        IntVec r(n);
        for (size_t i = 0; i < n; ++i) r[i] = BigInt(v[i].num() * (l / v[i].den()));
        rows.push_back(std::move(r));
    }
    return integer_kernel(rows);
}

IntVec primitive(IntVec v) {
    BigInt g = 0;
    for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g > 1)
        for (auto& x : v) x /= g;
    return v;
}

BigInt lcm_of_denominators(const RatVec& v) {
    BigInt l = 1;
    for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.den().get_mpz_t());
    return l;
}

}  // namespace hofa
