#pragma once
#include <utility>
#include <vector>
#include "fg2/ratfun.hpp"

namespace fg2 {

// Rational function kept as a scalar times a product of polynomial factors
// with integer exponents.  Products and powers never expand; sums expand only
// the parts not covered by common factors and then cancel the new numerator
// against denominator factors by exact trial division.  This keeps the
// closed-form coordinate compositions (whose intermediate values all divide
// out) small enough for symbolic verification.
class Factored {
public:
    Factored() : c_(0) {}
    Factored(long v) : c_(v) {}
    Factored(const Rational& v) : c_(v) {}
    Factored(const Polynomial& p) : c_(1) { pushFactor(p, 1); }

    static Factored variable(const std::string& name) {
        return Factored(Polynomial::variable(name));
    }

    bool isZero() const { return c_.isZero(); }

    RationalFunction expand() const {
        Polynomial num(c_), den(1);
        for (auto& [p, e] : f_) {
            for (int i = 0; i < e; ++i) num = num * p;
            for (int i = 0; i > e; --i) den = den * p;
        }
        return RationalFunction(num, den);
    }

    Factored operator-() const {
        Factored r = *this;
        r.c_ = -r.c_;
        return r;
    }

    friend Factored operator*(const Factored& a, const Factored& b) {
        if (a.isZero() || b.isZero()) return Factored();
        Factored r = a;
        r.c_ = r.c_ * b.c_;
        for (auto& [p, e] : b.f_) r.mergeFactor(p, e);
        return r;
    }

    Factored inv() const {
        if (isZero()) throw DenominatorZero();
        Factored r = *this;
        r.c_ = r.c_.inv();
        for (auto& [p, e] : r.f_) e = -e;
        return r;
    }

    friend Factored operator/(const Factored& a, const Factored& b) { return a * b.inv(); }

    Factored pow(long k) const {
        if (k == 0) return Factored(1);
        if (isZero()) return Factored();
        Factored r = *this;
        r.c_ = r.c_.pow(k);
        for (auto& [p, e] : r.f_) e = int(e * k);
        return r;
    }

    friend Factored operator+(const Factored& a, const Factored& b) {
        if (a.isZero()) return b;
        if (b.isZero()) return a;
        // split off the common factor, expand the residuals, re-cancel
        Factored common;
        common.c_ = Rational(1);
        for (auto& [p, e] : a.f_) {
            int eb = b.exponentOf(p);
            int m = std::min(e, eb);
            if (m != 0) common.f_.push_back({p, m});
        }
        for (auto& [p, e] : b.f_) {
            if (e < 0 && a.exponentOf(p) == 0) common.f_.push_back({p, e});
        }
        Polynomial ra = a.residual(common), rb = b.residual(common);
        Polynomial sum = ra + rb;
        if (sum.isZero()) return Factored();
        for (auto& [p, e] : common.f_) {
            while (e < 0) {
                auto q = divideExact(sum, p);
                if (!q) break;
                sum = *q;
                ++e;
            }
        }
        Factored r;
        r.c_ = Rational(1);
        for (auto& [p, e] : common.f_)
            if (e != 0) r.f_.push_back({p, e});
        r.pushFactor(sum, 1);
        return r;
    }

    friend Factored operator-(const Factored& a, const Factored& b) { return a + (-b); }

    Factored& operator+=(const Factored& o) { return *this = *this + o; }
    Factored& operator-=(const Factored& o) { return *this = *this - o; }
    Factored& operator*=(const Factored& o) { return *this = *this * o; }
    Factored& operator/=(const Factored& o) { return *this = *this / o; }

    std::string str() const { return expand().str(); }

private:
    int exponentOf(const Polynomial& p) const {
        for (auto& [q, e] : f_)
            if (q == p) return e;
        return 0;
    }

    // this / common, which by construction is a polynomial; expanded
    Polynomial residual(const Factored& common) const {
        Polynomial r(c_);
        for (auto& [p, e] : f_) {
            int rem = e - common.exponentOf(p);
            for (int i = 0; i < rem; ++i) r = r * p;
        }
        for (auto& [p, e] : common.f_) {
            if (exponentOf(p) != 0) continue;
            for (int i = 0; i < -e; ++i) r = r * p;
        }
        return r;
    }

    // normalize and merge one factor: constants into c_, monomial content as
    // variable factors, leading coefficient 1
    void pushFactor(Polynomial p, int e) {
        if (e == 0) return;
        if (p.isZero()) { c_ = Rational(0); f_.clear(); return; }
        if (p.isConstant()) { c_ = c_ * p.constantValue().pow(e); return; }
        Monomial m = p.monomialContent();
        if (!m.isOne()) {
            p = p.divideByMonomial(m);
            for (auto& [var, k] : m.e)
                mergeFactor(Polynomial::variable(varName(var)), e * int(k));
        }
        Rational lc = p.leadingCoefficient();
        if (!lc.isOne()) {
            c_ = c_ * lc.pow(e);
            p = lc.inv() * p;
        }
        if (p.isConstant()) return;
        mergeFactor(p, e);
    }

    void mergeFactor(const Polynomial& p, int e) {
        if (e == 0) return;
        for (size_t i = 0; i < f_.size(); ++i) {
            if (f_[i].first == p) {
                f_[i].second += e;
                if (f_[i].second == 0) f_.erase(f_.begin() + i);
                return;
            }
        }
        f_.push_back({p, e});
    }

    Rational c_;
    std::vector<std::pair<Polynomial, int>> f_;
};

template <>
inline Factored fieldFromRational<Factored>(const Rational& c) {
    return Factored(c);
}

} // namespace fg2
