#include "adem/matrix.hpp"

#include <algorithm>

namespace adem {

namespace {

using Int = ZRing::elem;

void swap_rows(IntMatrix& M, std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < M.cols(); ++k) std::swap(M(i, k), M(j, k));
}
void swap_cols(IntMatrix& M, std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < M.rows(); ++k) std::swap(M(k, i), M(k, j));
}
// row i -= q * row j
void row_axpy(IntMatrix& M, std::size_t i, std::size_t j, const Int& q) {
    if (q == 0) return;
    for (std::size_t k = 0; k < M.cols(); ++k) M(i, k) -= q * M(j, k);
}
// col i -= q * col j
void col_axpy(IntMatrix& M, std::size_t i, std::size_t j, const Int& q) {
    if (q == 0) return;
    for (std::size_t k = 0; k < M.rows(); ++k) M(k, i) -= q * M(k, j);
}
// col j += q * col i
void col_axpy_rev(IntMatrix& M, std::size_t j, std::size_t i, const Int& q) {
    if (q == 0) return;
    for (std::size_t k = 0; k < M.rows(); ++k) M(k, j) += q * M(k, i);
}
// row j += q * row i
void row_axpy_rev(IntMatrix& M, std::size_t j, std::size_t i, const Int& q) {
    if (q == 0) return;
    for (std::size_t k = 0; k < M.cols(); ++k) M(j, k) += q * M(i, k);
}

struct SnfOps {
    SnfResult& r;
    // S row op tracked in U (and inverse in Uinv columns)
    void srow_swap(std::size_t i, std::size_t j) {
        swap_rows(r.S, i, j);
        swap_rows(r.U, i, j);
        swap_cols(r.Uinv, i, j);
    }
    void srow_axpy(std::size_t i, std::size_t j, const Int& q) {
        row_axpy(r.S, i, j, q);
        row_axpy(r.U, i, j, q);
        col_axpy_rev(r.Uinv, j, i, q);
    }
    void srow_negate(std::size_t i) {
        for (std::size_t k = 0; k < r.S.cols(); ++k) r.S(i, k) = -r.S(i, k);
        for (std::size_t k = 0; k < r.U.cols(); ++k) r.U(i, k) = -r.U(i, k);
        for (std::size_t k = 0; k < r.Uinv.rows(); ++k) r.Uinv(k, i) = -r.Uinv(k, i);
    }
    // S col op tracked in V (inverse in Vinv rows)
    void scol_swap(std::size_t i, std::size_t j) {
        swap_cols(r.S, i, j);
        swap_cols(r.V, i, j);
        swap_rows(r.Vinv, i, j);
    }
    void scol_axpy(std::size_t i, std::size_t j, const Int& q) {
        col_axpy(r.S, i, j, q);
        col_axpy(r.V, i, j, q);
        row_axpy_rev(r.Vinv, j, i, q);
    }
};

}  // namespace

SnfResult smith_normal_form(const IntMatrix& A) {
    SnfResult res;
    res.S = A;
    res.U = IntMatrix::identity(A.rows());
    res.Uinv = IntMatrix::identity(A.rows());
    res.V = IntMatrix::identity(A.cols());
    res.Vinv = IntMatrix::identity(A.cols());
    IntMatrix& S = res.S;
    SnfOps ops{res};

    const std::size_t n = std::min(A.rows(), A.cols());
    std::size_t t = 0;
    for (; t < n; ++t) {
        // pivot: nonzero entry of minimal absolute value in the submatrix
        std::size_t pi = t, pj = t;
        bool found = false;
        for (std::size_t i = t; i < S.rows(); ++i)
            for (std::size_t j = t; j < S.cols(); ++j) {
                if (S(i, j) == 0) continue;
                if (!found || abs(S(i, j)) < abs(S(pi, pj))) {
                    pi = i;
                    pj = j;
                    found = true;
                }
            }
        if (!found) break;
        ops.srow_swap(t, pi);
        ops.scol_swap(t, pj);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t i = t + 1; i < S.rows(); ++i) {
                if (S(i, t) == 0) continue;
                const Int q = S(i, t) / S(t, t);
                ops.srow_axpy(i, t, q);
                if (S(i, t) != 0) {  // remainder became the smaller pivot
                    ops.srow_swap(t, i);
                    clean = false;
                }
            }
            for (std::size_t j = t + 1; j < S.cols(); ++j) {
                if (S(t, j) == 0) continue;
                const Int q = S(t, j) / S(t, t);
                ops.scol_axpy(j, t, q);
                if (S(t, j) != 0) {
                    ops.scol_swap(t, j);
                    clean = false;
                }
            }
            if (!clean) continue;
            // divisibility: the pivot must divide every remaining entry
            for (std::size_t i = t + 1; i < S.rows() && clean; ++i)
                for (std::size_t j = t + 1; j < S.cols() && clean; ++j)
                    if (S(i, j) % S(t, t) != 0) {
                        ops.srow_axpy(t, i, Int(-1));  // fold row i into row t
                        clean = false;
                    }
        }
        if (S(t, t) < 0) ops.srow_negate(t);
    }
    res.rank = t;
    return res;
}

std::vector<std::vector<Int>> int_kernel_basis(const IntMatrix& A) {
    SnfResult r = smith_normal_form(A);
    std::vector<std::vector<Int>> basis;
    for (std::size_t j = r.rank; j < A.cols(); ++j) {
        std::vector<Int> v(A.cols());
        for (std::size_t i = 0; i < A.cols(); ++i) v[i] = r.V(i, j);
        basis.push_back(std::move(v));
    }
    return basis;
}

namespace {

// Reduced row echelon form over Z/2; returns the pivot column of each
// pivot row.
std::vector<std::size_t> mod2_echelon(Mod2Matrix& A) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < A.cols() && row < A.rows(); ++col) {
        std::size_t p = row;
        while (p < A.rows() && A(p, col) == 0) ++p;
        if (p == A.rows()) continue;
        if (p != row)
            for (std::size_t k = 0; k < A.cols(); ++k) std::swap(A(row, k), A(p, k));
        for (std::size_t i = 0; i < A.rows(); ++i) {
            if (i == row || A(i, col) == 0) continue;
            for (std::size_t k = 0; k < A.cols(); ++k) A(i, k) ^= A(row, k);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

std::size_t mod2_rank(Mod2Matrix A) { return mod2_echelon(A).size(); }

std::vector<std::vector<std::uint8_t>> mod2_kernel_basis(const Mod2Matrix& A0) {
    Mod2Matrix A = A0;
    const std::vector<std::size_t> pivots = mod2_echelon(A);
    std::vector<bool> is_pivot(A.cols(), false);
    for (std::size_t c : pivots) is_pivot[c] = true;

    std::vector<std::vector<std::uint8_t>> basis;
    for (std::size_t free = 0; free < A.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<std::uint8_t> v(A.cols(), 0);
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = A(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<std::vector<std::uint8_t>> mod2_column_space_basis(const Mod2Matrix& A) {
    Mod2Matrix E = A;
    const std::vector<std::size_t> pivots = mod2_echelon(E);
    std::vector<std::vector<std::uint8_t>> basis;
    for (std::size_t c : pivots) {
        std::vector<std::uint8_t> v(A.rows());
        for (std::size_t i = 0; i < A.rows(); ++i) v[i] = A(i, c);
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace adem
