#pragma once
#include <sstream>
#include <vector>
#include "fg2/errors.hpp"

namespace fg2 {

template <class F>
class Matrix {
public:
    Matrix() = default;
    Matrix(size_t rows, size_t cols, const F& fill)
        : r_(rows), c_(cols), a_(rows * cols, fill) {}

    static Matrix identity(size_t n, const F& one) {
        Matrix m(n, n, one - one);
        for (size_t i = 0; i < n; ++i) m(i, i) = one;
        return m;
    }

    size_t rows() const { return r_; }
    size_t cols() const { return c_; }
    F& operator()(size_t i, size_t j) { return a_[i * c_ + j]; }
    const F& operator()(size_t i, size_t j) const { return a_[i * c_ + j]; }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.c_ != b.r_) throw Error("Matrix: shape mismatch");
        Matrix r(a.r_, b.c_, a.a_[0] - a.a_[0]);
        for (size_t i = 0; i < a.r_; ++i)
            for (size_t k = 0; k < a.c_; ++k) {
                const F& aik = a(i, k);
                for (size_t j = 0; j < b.c_; ++j) r(i, j) = r(i, j) + aik * b(k, j);
            }
        return r;
    }
    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        Matrix r = a;
        for (size_t i = 0; i < r.a_.size(); ++i) r.a_[i] = r.a_[i] + b.a_[i];
        return r;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        Matrix r = a;
        for (size_t i = 0; i < r.a_.size(); ++i) r.a_[i] = r.a_[i] - b.a_[i];
        return r;
    }
    Matrix operator-() const {
        Matrix r = *this;
        for (auto& x : r.a_) x = (x - x) - x;
        return r;
    }
    friend bool operator==(const Matrix& a, const Matrix& b) {
        if (a.r_ != b.r_ || a.c_ != b.c_) return false;
        for (size_t i = 0; i < a.a_.size(); ++i)
            if (!(a.a_[i] == b.a_[i])) return false;
        return true;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    Matrix transpose() const {
        Matrix r(c_, r_, a_[0]);
        for (size_t i = 0; i < r_; ++i)
            for (size_t j = 0; j < c_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    Matrix scaled(const F& s) const {
        Matrix r = *this;
        for (auto& x : r.a_) x = x * s;
        return r;
    }

    // Inverse by Gauss-Jordan with "first nonzero" pivoting.
    Matrix inverse(const F& one) const {
        if (r_ != c_) throw Error("Matrix: inverse of non-square");
        size_t n = r_;
        F zero = one - one;
        Matrix m = *this;
        Matrix inv = identity(n, one);
        for (size_t col = 0; col < n; ++col) {
            size_t piv = col;
            while (piv < n && m(piv, col) == zero) ++piv;
            if (piv == n) throw ZeroMinor("Matrix: singular");
            if (piv != col) {
                for (size_t j = 0; j < n; ++j) {
                    std::swap(m(piv, j), m(col, j));
                    std::swap(inv(piv, j), inv(col, j));
                }
            }
            F s = m(col, col).inv();
            for (size_t j = 0; j < n; ++j) {
                m(col, j) = m(col, j) * s;
                inv(col, j) = inv(col, j) * s;
            }
            for (size_t i = 0; i < n; ++i) {
                if (i == col || m(i, col) == zero) continue;
                F f = m(i, col);
                for (size_t j = 0; j < n; ++j) {
                    m(i, j) = m(i, j) - f * m(col, j);
                    inv(i, j) = inv(i, j) - f * inv(col, j);
                }
            }
        }
        return inv;
    }

    template <class Fmt>
    std::string str(Fmt fmt) const {
        std::ostringstream os;
        for (size_t i = 0; i < r_; ++i) {
            os << "[";
            for (size_t j = 0; j < c_; ++j) {
                if (j) os << ", ";
                os << fmt((*this)(i, j));
            }
            os << "]\n";
        }
        return os.str();
    }

private:
    size_t r_ = 0, c_ = 0;
    std::vector<F> a_;
};

// g = Y * H * X with Y lower unitriangular, H diagonal, X upper
// unitriangular.  Exists iff all leading principal minors are nonzero;
// otherwise throws ZeroMinor (g lies outside the big cell).
template <class F>
struct YHX {
    Matrix<F> Y, H, X;
};

template <class F>
YHX<F> factorYHX(const Matrix<F>& g, const F& one) {
    if (g.rows() != g.cols()) throw Error("factorYHX: non-square");
    size_t n = g.rows();
    F zero = one - one;
    Matrix<F> Y = Matrix<F>::identity(n, one);
    Matrix<F> X = Matrix<F>::identity(n, one);
    Matrix<F> m = g;
    for (size_t k = 0; k < n; ++k) {
        if (m(k, k) == zero) throw ZeroMinor("factorYHX: vanishing principal minor");
        F d = m(k, k);
        F dinv = d.inv();
        for (size_t i = k + 1; i < n; ++i) {
            F f = m(i, k) * dinv;
            Y(i, k) = f;
            if (f == zero) continue;
            for (size_t j = k; j < n; ++j) m(i, j) = m(i, j) - f * m(k, j);
        }
        for (size_t j = k + 1; j < n; ++j) X(k, j) = m(k, j) * dinv;
    }
    Matrix<F> H(n, n, zero);
    for (size_t k = 0; k < n; ++k) H(k, k) = m(k, k);
    return {Y, H, X};
}

} // namespace fg2
