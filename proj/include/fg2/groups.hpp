#pragma once
#include <algorithm>
#include <array>
#include <string>
#include <vector>
#include "fg2/errors.hpp"
#include "fg2/quiver.hpp"
#include "fg2/seedtorus.hpp"

namespace fg2 {

// Constant data of a rank-2 simple group: Cartan matrix, the central element
// s_G, the action of w_0 on fundamental weights (sigmaSwap), the fixed
// reduced word for w_0 (the one starting with 1), and the monomial data
// tying face minors to quiver vertices.
struct GroupData {
    GroupId id;
    int m;                       // number of positive roots
    int cartan[2][2];            // A_ij, 1-based indices shifted down
    int sG[2];                   // coordinates of s_G, each +1 or -1
    bool sigmaSwap;              // w_0(w_i) = -w_{sigma(i)}; swap only for A2
    std::vector<int> word;       // reduced word i_1..i_m, entries 1 or 2

    // Quiver vertex number carrying face minor u_{k+3}, k = 0..m-3.
    std::vector<int> faceVertex;
    // m_G monomial on vertex v_{i+1}: exponents on (a01, a10, a12, a21).
    std::vector<std::array<int, 4>> vertexMonomial;
    // (k^{-1} u k)_i = k1^c0 k2^c1 u_i for i = 3..m.
    std::vector<std::array<int, 2>> conjExp;
};

const GroupData& groupData(GroupId g);

// Element of the Cartan torus H in the coordinates (chi_{w_1}, chi_{w_2}).
template <class F>
struct HElt {
    F c1, c2;

    friend HElt operator*(const HElt& a, const HElt& b) { return {a.c1 * b.c1, a.c2 * b.c2}; }
    HElt inv() const {
        F one = c1 / c1;
        return {one / c1, one / c2};
    }
};

template <class F>
F fpow(const F& x, int e, const F& one) {
    if (e == 0) return one;
    if (e < 0) return one / fpow(x, -e, one);
    F r = x;
    for (int i = 1; i < e; ++i) r = r * x;
    return r;
}

// w_0(h) = w_0 h w_0^{-1}: coordinate i becomes 1/h_{sigma(i)}.
template <class F>
HElt<F> w0(const GroupData& g, const HElt<F>& h) {
    HElt<F> r = h.inv();
    if (g.sigmaSwap) std::swap(r.c1, r.c2);
    return r;
}

template <class F>
HElt<F> sgElt(const GroupData& g, const F& one) {
    return {g.sG[0] > 0 ? one : -one, g.sG[1] > 0 ? one : -one};
}

// Coordinates of the reversed edge: pi_ji = w_0(h^{-1}) s_G.
template <class F>
HElt<F> reverseEdge(const GroupData& g, const HElt<F>& h) {
    F one = h.c1 / h.c1;
    return w0(g, h.inv()) * sgElt(g, one);
}

template <class F>
std::vector<F> reversed(std::vector<F> v) {
    std::reverse(v.begin(), v.end());
    return v;
}

// PsiPhiPsi: minor coordinates (Delta^{gamma_1},...,Delta^{gamma_m}) of
// u in N_- to factorization coordinates of PsiPhiPsi(u) in N.
template <class F>
std::vector<F> psiPhiPsi(const GroupData& g, const std::vector<F>& u) {
    F one = u[0] / u[0];
    switch (g.id) {
        case GroupId::A2:
            return {u[1] / (u[0] * u[2]), u[2] / u[1], one / u[2]};
        case GroupId::B2:
            return {u[1] * u[1] / (u[0] * u[2]), u[2] / (u[1] * u[3]), u[3] * u[3] / u[2],
                    one / u[3]};
        case GroupId::C2:
            return {u[1] / (u[0] * u[2]), u[2] * u[2] / (u[1] * u[3]), u[3] / u[2],
                    one / u[3]};
        case GroupId::G2:
            // second entry: the exponent of u3 is -A_12 = 3
            return {u[1] / (u[0] * u[2]),        u[2] * u[2] * u[2] / (u[1] * u[3]),
                    u[3] / (u[2] * u[4]),        u[4] * u[4] * u[4] / (u[3] * u[5]),
                    u[5] / u[4],                 one / u[5]};
    }
    throw UnknownGroup();
}

template <class F>
std::vector<F> psiPhiPsiInv(const GroupData& g, const std::vector<F>& t) {
    F one = t[0] / t[0];
    switch (g.id) {
        case GroupId::A2:
            return {one / (t[0] * t[1]), one / (t[1] * t[2]), one / t[2]};
        case GroupId::B2:
            return {one / (t[0] * t[1] * t[1] * t[2]), one / (t[1] * t[2] * t[3]),
                    one / (t[2] * t[3] * t[3]), one / t[3]};
        case GroupId::C2:
            return {one / (t[0] * t[1] * t[2]), one / (t[1] * t[2] * t[2] * t[3]),
                    one / (t[2] * t[3]), one / t[3]};
        case GroupId::G2:
            return {one / (t[0] * t[1] * t[2] * t[2] * t[3] * t[4]),
                    one / (t[1] * fpow(t[2], 3, one) * t[3] * t[3] * fpow(t[4], 3, one) * t[5]),
                    one / (t[2] * t[3] * t[4] * t[4] * t[5]),
                    one / (t[3] * fpow(t[4], 3, one) * t[5] * t[5]),
                    one / (t[4] * t[5]),
                    one / t[5]};
    }
    throw UnknownGroup();
}

// PsiPhi in factorization coordinates on N.
template <class F>
std::vector<F> psiPhi(const GroupData& g, const std::vector<F>& t) {
    F one = t[0] / t[0];
    switch (g.id) {
        case GroupId::A2:
            return {t[2] / (t[0] * t[0] + t[0] * t[2]), (t[0] + t[2]) / (t[1] * t[2]),
                    one / (t[0] + t[2])};
        case GroupId::B2: {
            F a1 = t[2] * t[3] * t[3] + t[0] * (t[1] + t[3]) * (t[1] + t[3]);
            F a2 = t[1] + t[3];
            return {t[2] * t[3] * t[3] / (t[0] * a1), a1 / (t[1] * t[2] * t[3] * a2),
                    a2 * a2 / a1, one / a2};
        }
        case GroupId::C2: {
            F a1 = t[2] * t[3] + t[0] * (t[1] + t[3]);
            F a2 = t[1] + t[3];
            return {t[2] * t[3] / (t[0] * a1), a1 * a1 / (t[1] * t[2] * t[2] * t[3] * a2),
                    a2 / a1, one / a2};
        }
        case GroupId::G2: {
            F a1 = t[3] * (t[0] * t[1] * t[2] * t[2] + t[0] * t[4] * t[4] * t[5] +
                           t[2] * t[4] * t[4] * t[5]) +
                   t[0] * t[1] * t[5] * (t[2] + t[4]) * (t[2] + t[4]);
            F a2 = t[3] * (t[1] * fpow(t[2], 3, one) * t[3] +
                           F(2) * t[1] * fpow(t[2], 3, one) * t[5] +
                           F(3) * t[1] * t[2] * t[2] * t[4] * t[5] +
                           fpow(t[4], 3, one) * t[5] * t[5]) +
                   t[1] * t[5] * t[5] * fpow(t[2] + t[4], 3, one);
            F a3 = t[0] * t[1] + t[0] * t[3] + t[2] * t[3] + t[0] * t[5] + t[2] * t[5] +
                   t[4] * t[5];
            F a4 = t[1] + t[3] + t[5];
            return {t[2] * t[3] * t[4] * t[4] * t[5] / (t[0] * a1),
                    fpow(a1, 3, one) /
                        (t[1] * fpow(t[2], 3, one) * t[3] * t[3] * fpow(t[4], 3, one) * t[5] * a2),
                    a2 / (a1 * a3), fpow(a3, 3, one) / (a2 * a4), a4 / a3, one / a4};
        }
    }
    throw UnknownGroup();
}

template <class F>
std::vector<F> psiPhiInv(const GroupData& g, const std::vector<F>& s) {
    F one = s[0] / s[0];
    switch (g.id) {
        case GroupId::A2:
            return {one / (s[0] + s[2]), (s[0] + s[2]) / (s[0] * s[1]),
                    s[0] / (s[0] * s[2] + s[2] * s[2])};
        case GroupId::B2: {
            F b1 = s[0] + s[2];
            F b2 = s[0] * s[1] + (s[0] + s[2]) * s[3];
            return {one / b1, b1 / b2, b2 * b2 / (s[0] * s[1] * s[1] * s[2] * b1),
                    s[0] * s[1] / (s[3] * b2)};
        }
        case GroupId::C2: {
            F b1 = s[0] + s[2];
            F b2 = s[0] * s[0] * s[1] + (s[0] + s[2]) * (s[0] + s[2]) * s[3];
            return {one / b1, b1 * b1 / b2, b2 / (s[0] * s[1] * s[2] * b1),
                    s[0] * s[0] * s[1] / (s[3] * b2)};
        }
        case GroupId::G2: {
            F b1 = s[0] + s[2] + s[4];
            F b2 = s[5] * fpow(s[0] + s[2] + s[4], 3, one) + s[3] * fpow(s[0] + s[2], 3, one) +
                   fpow(s[0], 3, one) * s[1];
            // last term: (s1+s3)^2 s4 s5, not (s1+s3)^2 s3 s4
            F b3 = s[0] * s[0] * s[1] * (s[2] + s[4]) +
                   (s[0] + s[2]) * (s[0] + s[2]) * s[3] * s[4];
            F b4 = s[0] * s[0] * s[1] * s[3] *
                       (s[0] * s[1] * fpow(s[2], 3, one) +
                        F(3) * s[0] * s[2] * s[4] * s[4] * s[5] +
                        F(3) * s[2] * s[2] * s[4] * s[4] * s[5] +
                        F(2) * s[0] * fpow(s[4], 3, one) * s[5] +
                        F(3) * s[2] * fpow(s[4], 3, one) * s[5]) +
                   fpow(s[0], 3, one) * s[1] * s[1] * s[5] * fpow(s[2] + s[4], 3, one) +
                   s[3] * s[3] * fpow(s[4], 3, one) * s[5] * fpow(s[0] + s[2], 3, one);
            return {one / b1,
                    fpow(b1, 3, one) / b2,
                    b2 / (b1 * b3),
                    fpow(b3, 3, one) / (b2 * b4),
                    b4 / (s[0] * s[1] * s[2] * s[2] * s[3] * s[4] * b3),
                    fpow(s[0], 3, one) * s[1] * s[1] * fpow(s[2], 3, one) * s[3] / (s[5] * b4)};
    }
    }
    throw UnknownGroup();
}

// (PhiPsi)^2 in minor coordinates, via
// (PhiPsi)^n = (PsiPhiPsi)^{-1} o (PsiPhi)^n o PsiPhiPsi.
template <class F>
std::vector<F> phiPsiSquared(const GroupData& g, const std::vector<F>& u) {
    return psiPhiPsiInv(g, psiPhi(g, psiPhi(g, psiPhiPsi(g, u))));
}

// Minor coordinates of k^{-1} u k; entries 1 and 2 are edge minors and are
// passed through (callers recompute them from the edges).
template <class F>
std::vector<F> conjugateMinors(const GroupData& g, const HElt<F>& k, const std::vector<F>& u) {
    F one = k.c1 / k.c1;
    std::vector<F> r = u;
    for (int i = 3; i <= g.m; ++i) {
        auto [e1, e2] = std::pair<int, int>{g.conjExp[i - 3][0], g.conjExp[i - 3][1]};
        r[i - 1] = r[i - 1] * fpow(k.c1, e1, one) * fpow(k.c2, e2, one);
    }
    return r;
}

// The monomial transformation m_G on the seed torus of Q_G (inverse = true
// divides instead of multiplying).  Frozen coordinates are fixed.
template <class F>
SeedAssignment<F> monomialMap(const GroupData& g, SeedAssignment<F> s, bool inverse = false) {
    static const char* slots[4] = {"a01", "a10", "a12", "a21"};
    for (size_t i = 0; i < g.vertexMonomial.size(); ++i) {
        std::string v = "v" + std::to_string(i + 1);
        F one = s.at(v) / s.at(v);
        F mon = one;
        for (int j = 0; j < 4; ++j) mon = mon * fpow(s.at(slots[j]), g.vertexMonomial[i][j], one);
        s.values[v] = inverse ? s.at(v) / mon : s.at(v) * mon;
    }
    return s;
}

// --- the refactorization map iota ------------------------------------------

// A letter of a word in the generators: x_i(val), y_i(val) or h_i^val.
template <class F>
struct Letter {
    int kind;  // 0 = X, 1 = Y, 2 = H
    int idx;   // 1 or 2
    F val;
};

template <class F>
struct Refactorization {
    std::vector<Letter<F>> xs, ys;
    HElt<F> h;
};

// Rewrite an arbitrary word in x/y/h letters into the form X-block, Y-block,
// H using the commutation relations.  Letters of equal kind never pass each
// other, so the x and y subwords keep their letter order.
template <class F>
Refactorization<F> refactorXYH(const GroupData& g, std::vector<Letter<F>> w, const F& one) {
    auto cartan = [&](int i, int j) { return g.cartan[i - 1][j - 1]; };
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t p = 0; p + 1 < w.size(); ++p) {
            Letter<F>&a = w[p], &b = w[p + 1];
            if (a.kind <= b.kind) continue;
            if (a.kind == 2) {
                // h_i^s x_j(t) = x_j(t s^{A_ij}) h_i^s; for y the sign flips
                int e = cartan(a.idx, b.idx) * (b.kind == 0 ? 1 : -1);
                b.val = b.val * fpow(a.val, e, one);
                std::swap(w[p], w[p + 1]);
            } else if (a.idx != b.idx) {
                std::swap(w[p], w[p + 1]);
            } else {
                // y_i(s) x_i(t) = x_i(tq) h_i^q y_i(sq), q = 1/(1+st)
                F q = one / (one + a.val * b.val);
                Letter<F> y{1, a.idx, a.val * q};
                w[p] = Letter<F>{0, b.idx, b.val * q};
                w[p + 1] = Letter<F>{2, b.idx, q};
                w.insert(w.begin() + p + 2, y);
            }
            changed = true;
            break;
        }
    }
    Refactorization<F> r;
    r.h = HElt<F>{one, one};
    for (auto& l : w) {
        if (l.kind == 0) r.xs.push_back(l);
        else if (l.kind == 1) r.ys.push_back(l);
        else (l.idx == 1 ? r.h.c1 : r.h.c2) = (l.idx == 1 ? r.h.c1 : r.h.c2) * l.val;
    }
    return r;
}

// PsiPhi computed from the defining relations instead of the closed-form
// table: feed x_{i_1}(t_1)...x_{i_m}(t_m) into the wall w0-bar B, converting
// x_j against the matching lift letter into y_j(1/t), commuting letters with
// the exchange relations, and absorbing H letters into the wall.  Used as an
// independent oracle for the printed formulas.
template <class F>
std::vector<F> psiPhiDerived(const GroupData& g, const std::vector<F>& t, const F& one) {
    std::vector<Letter<F>> w;
    for (int j = 0; j < g.m; ++j) w.push_back({0, g.word[j], t[j]});
    auto cartan = [&](int i, int j) { return g.cartan[i - 1][j - 1]; };
    auto rank = [](const Letter<F>& l) { return l.kind == 1 ? 0 : l.kind == 0 ? 1 : 2; };
    int consumed = 0;
    auto hasXorH = [&] {
        for (auto& l : w)
            if (l.kind != 1) return true;
        return false;
    };
    while (hasXorH()) {
        bool rewrote = false;
        for (size_t p = 0; p + 1 < w.size(); ++p) {
            Letter<F>&a = w[p], &b = w[p + 1];
            if (rank(a) <= rank(b)) continue;
            if (a.kind == 2) {  // H past X or Y, moving right
                int e = cartan(a.idx, b.idx) * (b.kind == 0 ? 1 : -1);
                b.val = b.val * fpow(a.val, e, one);
                std::swap(w[p], w[p + 1]);
            } else if (a.idx != b.idx) {  // X past Y, different index
                std::swap(w[p], w[p + 1]);
            } else {  // x_i(s) y_i(t) = y_i(t/q) h_i^q x_i(s/q), q = 1+st
                F q = one + a.val * b.val;
                Letter<F> x{0, a.idx, a.val / q};
                w[p] = Letter<F>{1, a.idx, b.val / q};
                w[p + 1] = Letter<F>{2, a.idx, q};
                w.insert(w.begin() + p + 2, x);
            }
            rewrote = true;
            break;
        }
        if (rewrote) continue;
        // sorted as Y...Y X...X H...H; the wall absorbs H and converts X
        if (w.back().kind == 2) {
            w.pop_back();
            continue;
        }
        if (w.back().kind != 0) break;
        int expect = g.word[g.m - 1 - consumed];
        if (w.back().idx != expect) throw Error("psiPhiDerived: word mismatch at the wall");
        F v = w.back().val;
        w.back() = Letter<F>{1, expect, one / v};
        ++consumed;
    }
    if (consumed != g.m || (int)w.size() != g.m)
        throw Error("psiPhiDerived: conversion incomplete");
    std::vector<F> out;
    for (int j = 0; j < g.m; ++j) {
        if (w[j].idx != g.word[g.m - 1 - j]) throw Error("psiPhiDerived: unexpected output word");
        out.push_back(w[j].val);
    }
    return reversed(out);
}

// The mirror derivation: given y in N_- with canonical factorization
// coordinates (word i-bar), build the wall up from B via
// y_j(t) w-bar B = x_j(1/t) s_j-bar w-bar B, converting the y letters in
// the order i_1, i_2, ...  The surviving X block is Phi^{-1}(y) in canonical
// word-i coordinates, so PsiPhi^{-1}(s) is this map applied to reversed(s).
template <class F>
std::vector<F> psiPhiInvDerived(const GroupData& g, const std::vector<F>& s, const F& one) {
    std::vector<F> t = reversed(s);  // Y-coordinates of Psi(z)
    std::vector<Letter<F>> w;
    for (int j = 0; j < g.m; ++j) w.push_back({1, g.word[g.m - 1 - j], t[j]});
    auto cartan = [&](int i, int j) { return g.cartan[i - 1][j - 1]; };
    auto rank = [](const Letter<F>& l) { return l.kind == 0 ? 0 : l.kind == 1 ? 1 : 2; };
    int consumed = 0;
    auto hasYorH = [&] {
        for (auto& l : w)
            if (l.kind != 0) return true;
        return false;
    };
    while (hasYorH()) {
        bool rewrote = false;
        for (size_t p = 0; p + 1 < w.size(); ++p) {
            Letter<F>&a = w[p], &b = w[p + 1];
            if (rank(a) <= rank(b)) continue;
            if (a.kind == 2) {  // H past X or Y, moving right
                int e = cartan(a.idx, b.idx) * (b.kind == 0 ? 1 : -1);
                b.val = b.val * fpow(a.val, e, one);
                std::swap(w[p], w[p + 1]);
            } else if (a.idx != b.idx) {  // Y past X, different index
                std::swap(w[p], w[p + 1]);
            } else {  // y_i(s) x_i(t) = x_i(t/q) h_i^{1/q} y_i(s/q), q = 1+st
                F q = one + a.val * b.val;
                Letter<F> y{1, a.idx, a.val / q};
                w[p] = Letter<F>{0, a.idx, b.val / q};
                w[p + 1] = Letter<F>{2, a.idx, one / q};
                w.insert(w.begin() + p + 2, y);
            }
            rewrote = true;
            break;
        }
        if (rewrote) continue;
        // sorted as X...X Y...Y H...H; the wall absorbs H and converts Y
        if (w.back().kind == 2) {
            w.pop_back();
            continue;
        }
        if (w.back().kind != 1) break;
        int expect = g.word[consumed];
        if (w.back().idx != expect) throw Error("psiPhiInvDerived: word mismatch at the wall");
        F v = w.back().val;
        w.back() = Letter<F>{0, expect, one / v};
        ++consumed;
    }
    if (consumed != g.m || (int)w.size() != g.m)
        throw Error("psiPhiInvDerived: conversion incomplete");
    std::vector<F> out;
    for (int j = 0; j < g.m; ++j) {
        if (w[j].idx != g.word[j]) throw Error("psiPhiInvDerived: unexpected output word");
        out.push_back(w[j].val);
    }
    return out;
}

template <class F>
struct IotaResult {
    std::vector<F> x, y;  // factorization coordinates of the N and N_- parts
    HElt<F> h;
};

// iota: N_- x H x N -> N x N_- x H.  Input y is in the factorization
// coordinates of N_- for the opposite word (value j sits on y_{i_{m-j}}),
// x in the factorization coordinates of N.  Uses
// iota(y, k, x) = iota_I(y, k x k^{-1}) k.
template <class F>
IotaResult<F> iota(const GroupData& g, const std::vector<F>& y, const HElt<F>& k,
                   const std::vector<F>& x, const F& one) {
    std::vector<Letter<F>> w;
    for (int j = 0; j < g.m; ++j) w.push_back({1, g.word[g.m - 1 - j], y[j]});
    for (int j = 0; j < g.m; ++j) {
        int i = g.word[j];
        F conj = fpow(k.c1, g.cartan[0][i - 1], one) * fpow(k.c2, g.cartan[1][i - 1], one);
        w.push_back({0, i, x[j] * conj});
    }
    Refactorization<F> r = refactorXYH(g, std::move(w), one);
    IotaResult<F> out;
    out.h = r.h * k;
    for (int j = 0; j < g.m; ++j) {
        if (r.xs[j].idx != g.word[j] || r.ys[j].idx != g.word[g.m - 1 - j])
            throw Error("iota: refactorization left an unexpected word");
        out.x.push_back(r.xs[j].val);
        out.y.push_back(r.ys[j].val);
    }
    return out;
}

// --- the flip driver f_{(c,d,l)} --------------------------------------------

// Gamma_1 = Psi (PsiPhi)^{-1} PsiPhiPsi: minor coordinates to opposite-word
// factorization coordinates on N_-; Psi reverses the coordinate tuple.
template <class F>
std::vector<F> gamma1(const GroupData& g, const std::vector<F>& u) {
    return reversed(psiPhiInv(g, psiPhiPsi(g, u)));
}

template <class F>
std::vector<F> gamma1Inv(const GroupData& g, const std::vector<F>& s) {
    return psiPhiPsiInv(g, psiPhi(g, reversed(s)));
}

// Gamma_2 = (PsiPhi)^{-2} PsiPhiPsi: minor coordinates to factorization
// coordinates on N.
template <class F>
std::vector<F> gamma2(const GroupData& g, const std::vector<F>& u) {
    return psiPhiInv(g, psiPhiInv(g, psiPhiPsi(g, u)));
}

template <class F>
std::vector<F> gamma2Inv(const GroupData& g, const std::vector<F>& t) {
    return psiPhiPsiInv(g, psiPhi(g, psiPhi(g, t)));
}

template <class F>
struct Fcdl {
    std::vector<F> c, d;  // minor coordinates
    HElt<F> l;
};

// (c,d,l) = (Gamma_2^{-1}, Gamma_1^{-1}, id) o iota o (Gamma_1, id, Gamma_2).
template <class F>
Fcdl<F> fcdl(const GroupData& g, const std::vector<F>& u, const HElt<F>& k,
             const std::vector<F>& v, const F& one) {
    IotaResult<F> r = iota(g, gamma1(g, u), k, gamma2(g, v), one);
    return {gamma2Inv(g, r.x), gamma1Inv(g, r.y), r.h};
}

} // namespace fg2
