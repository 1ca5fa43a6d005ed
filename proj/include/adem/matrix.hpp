#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "adem/rings.hpp"

namespace adem {

// Dense exact matrix over a coefficient ring.
template <class R>
class Mat {
public:
    using elem = typename R::elem;

    Mat() = default;
    Mat(std::size_t rows, std::size_t cols)
        : r_(rows), c_(cols), a_(rows * cols, R::zero()) {}

    static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = R::one();
        return m;
    }

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    elem& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
    const elem& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

    bool is_zero() const {
        for (const auto& x : a_)
            if (!R::is_zero(x)) return false;
        return true;
    }

    Mat transpose() const {
        Mat t(c_, r_);
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend Mat operator*(const Mat& x, const Mat& y) {
        if (x.c_ != y.r_) throw std::invalid_argument("matrix product shape mismatch");
        Mat z(x.r_, y.c_);
        for (std::size_t i = 0; i < x.r_; ++i)
            for (std::size_t k = 0; k < x.c_; ++k) {
                const elem& v = x(i, k);
                if (R::is_zero(v)) continue;
                for (std::size_t j = 0; j < y.c_; ++j)
                    z(i, j) = R::add(z(i, j), R::mul(v, y(k, j)));
            }
        return z;
    }

    friend Mat operator+(const Mat& x, const Mat& y) {
        if (x.r_ != y.r_ || x.c_ != y.c_)
            throw std::invalid_argument("matrix sum shape mismatch");
        Mat z(x.r_, x.c_);
        for (std::size_t i = 0; i < x.a_.size(); ++i) z.a_[i] = R::add(x.a_[i], y.a_[i]);
        return z;
    }

    friend Mat operator-(const Mat& x, const Mat& y) {
        if (x.r_ != y.r_ || x.c_ != y.c_)
            throw std::invalid_argument("matrix difference shape mismatch");
        Mat z(x.r_, x.c_);
        for (std::size_t i = 0; i < x.a_.size(); ++i)
            z.a_[i] = R::add(x.a_[i], R::neg(y.a_[i]));
        return z;
    }

    friend bool operator==(const Mat& x, const Mat& y) {
        return x.r_ == y.r_ && x.c_ == y.c_ && x.a_ == y.a_;
    }

private:
    std::size_t r_ = 0, c_ = 0;
    std::vector<elem> a_;
};

using IntMatrix = Mat<ZRing>;
using Mod2Matrix = Mat<Z2Ring>;

// Smith normal form: S = U A V with U, V unimodular, S diagonal with a
// divisibility chain of non-negative entries.  Uinv and Vinv are the
// inverse transforms, maintained alongside.
struct SnfResult {
    IntMatrix S, U, V, Uinv, Vinv;
    std::size_t rank = 0;
    // Diagonal entries > 1 (the torsion coefficients of coker A).
    std::vector<ZRing::elem> torsion() const {
        std::vector<ZRing::elem> t;
        for (std::size_t i = 0; i < rank; ++i)
            if (S(i, i) > 1) t.push_back(S(i, i));
        return t;
    }
};

SnfResult smith_normal_form(const IntMatrix& A);

// Integer kernel basis of A (columns of V past the rank).
std::vector<std::vector<ZRing::elem>> int_kernel_basis(const IntMatrix& A);

// Gaussian elimination over Z/2.
std::size_t mod2_rank(Mod2Matrix A);
std::vector<std::vector<std::uint8_t>> mod2_kernel_basis(const Mod2Matrix& A);
// A basis of the column space, as column vectors.
std::vector<std::vector<std::uint8_t>> mod2_column_space_basis(const Mod2Matrix& A);

}  // namespace adem
