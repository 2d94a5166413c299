#pragma once
#include "fg2/groups.hpp"
#include "fg2/matrix.hpp"

namespace fg2 {

// Exact matrix models for the groups that have one here: A2 as SL(3), C2 as
// Sp(4), and B2 as Spin(5), realized as Sp(4) with the two simple-root
// indices swapped.  The Serre generators are fixed so that the factorization
// conventions match the coordinate formulas.  y_i(t) is the transpose of
// x_i(t) and h is addressed by its character coordinates (chi_1, chi_2).
template <class F>
struct MatrixModel {
    GroupId id;
    size_t n;
    F one;

    Matrix<F> x(int i, const F& t) const {
        if (id == GroupId::B2) i = 3 - i;
        Matrix<F> m = Matrix<F>::identity(n, one);
        if (id == GroupId::A2) {
            m(i - 1, i) = t;
        } else if (i == 1) {
            m(0, 1) = t;
            m(3, 2) = -t;
        } else {
            m(1, 3) = t;
        }
        return m;
    }

    Matrix<F> y(int i, const F& t) const { return x(i, t).transpose(); }

    // h with chi_1(h) = c1, chi_2(h) = c2, i.e. h = h_1^{c1} h_2^{c2}.
    Matrix<F> h(const HElt<F>& k) const {
        F c1 = k.c1, c2 = k.c2;
        if (id == GroupId::B2) std::swap(c1, c2);
        Matrix<F> m = Matrix<F>::identity(n, one);
        if (id == GroupId::A2) {
            m(0, 0) = c1;
            m(1, 1) = c2 / c1;
            m(2, 2) = one / c2;
        } else {
            m(0, 0) = c1;
            m(1, 1) = c2 / c1;
            m(2, 2) = one / c1;
            m(3, 3) = c1 / c2;
        }
        return m;
    }

    Matrix<F> hPow(int i, const F& t) const {
        return h(i == 1 ? HElt<F>{t, one} : HElt<F>{one, t});
    }

    // character coordinates of a diagonal matrix
    HElt<F> chi(const Matrix<F>& d) const {
        HElt<F> c{d(0, 0), d(0, 0) * d(1, 1)};
        if (id == GroupId::B2) return {c.c2, c.c1};
        return c;
    }

    Matrix<F> w0bar() const {
        F zero = one - one;
        Matrix<F> m(n, n, zero);
        if (id == GroupId::A2) {
            m(2, 0) = one;
            m(1, 1) = -one;
            m(0, 2) = one;
        } else {
            m(0, 2) = one;
            m(1, 3) = one;
            m(2, 0) = -one;
            m(3, 1) = -one;
        }
        return m;
    }

    Matrix<F> sG() const {
        Matrix<F> m = Matrix<F>::identity(n, one);
        if (id != GroupId::A2) m = -m;
        return m;
    }

    Matrix<F> sbar(int i) const { return x(i, -one) * y(i, one) * x(i, -one); }

    Matrix<F> xWord(const std::vector<int>& word, const std::vector<F>& t) const {
        Matrix<F> m = Matrix<F>::identity(n, one);
        for (size_t j = 0; j < word.size(); ++j) m = m * x(word[j], t[j]);
        return m;
    }

    // y_{i-bar}(s_1,...,s_m) = y_{i_m}(s_1) ... y_{i_1}(s_m)
    Matrix<F> yWord(const std::vector<int>& word, const std::vector<F>& s) const {
        Matrix<F> m = Matrix<F>::identity(n, one);
        for (size_t j = 0; j < word.size(); ++j)
            m = m * y(word[word.size() - 1 - j], s[j]);
        return m;
    }

    // Big-cell factorization g = [g]_-[g]_0[g]_+ in the model's own N_-, H,
    // N.  For C2 the simple root space of alpha_1 has a lower-triangular
    // entry at (4,3); swapping basis vectors 3 and 4 makes N upper
    // triangular, so we factor in the permuted basis and conjugate back.
    YHX<F> factorG0(const Matrix<F>& g) const {
        if (id == GroupId::A2) return factorYHX(g, one);
        Matrix<F> p = Matrix<F>::identity(n, one);
        std::swap(p(2, 2), p(2, 3));
        std::swap(p(3, 3), p(3, 2));
        YHX<F> f = factorYHX(p * g * p, one);
        return {p * f.Y * p, p * f.H * p, p * f.X * p};
    }

    // pi_-(x) = w0bar^{-1} [x w0bar^{-1}]_+ w0bar
    Matrix<F> piMinus(const Matrix<F>& xm) const {
        Matrix<F> w = w0bar();
        Matrix<F> winv = w.inverse(one);
        Matrix<F> plus = factorG0(xm * winv).X;
        return winv * plus * w;
    }

    // the i-minors Delta^{gamma_k}(y) = chi_{omega_{i_k}}([wbar_k^{-1} y]_0),
    // wbar_k = sbar_{i_m} ... sbar_{i_k}
    std::vector<F> minors(const std::vector<int>& word, const Matrix<F>& ym) const {
        int m = (int)word.size();
        std::vector<F> out(m, one);
        Matrix<F> wk = Matrix<F>::identity(n, one);
        for (int k = m; k >= 1; --k) {
            wk = wk * sbar(word[k - 1]);
            Matrix<F> d = factorG0(wk.inverse(one) * ym).H;
            HElt<F> c = chi(d);
            out[k - 1] = word[k - 1] == 1 ? c.c1 : c.c2;
        }
        return out;
    }
};

template <class F>
MatrixModel<F> matrixModel(GroupId g, const F& one) {
    switch (g) {
        case GroupId::A2: return {g, 3, one};
        case GroupId::B2:
        case GroupId::C2: return {g, 4, one};
        case GroupId::G2: throw UnsupportedMatrixModel();
    }
    throw UnknownGroup();
}

} // namespace fg2
