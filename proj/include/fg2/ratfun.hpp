#pragma once
#include <map>
#include "fg2/polynomial.hpp"

namespace fg2 {

// Quotient of polynomials over Q.  Kept lightly reduced: common monomial
// content is cancelled and exact polynomial division is attempted in both
// directions, which keeps cluster-mutation values in Laurent form
// (polynomial numerator over a monomial denominator) without a full
// multivariate gcd.
class RationalFunction {
public:
    RationalFunction() : num_(0), den_(1) {}
    RationalFunction(long c) : num_(c), den_(1) {}
    RationalFunction(const Rational& c) : num_(c), den_(1) {}
    RationalFunction(const Polynomial& p) : num_(p), den_(1) {}
    RationalFunction(Polynomial n, Polynomial d) : num_(std::move(n)), den_(std::move(d)) {
        if (den_.isZero()) throw DenominatorZero();
        reduce();
    }

    static RationalFunction variable(const std::string& name) {
        return RationalFunction(Polynomial::variable(name));
    }

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    bool isZero() const { return num_.isZero(); }

    RationalFunction operator-() const {
        RationalFunction r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        if (b.num_.isZero()) throw DenominatorZero();
        return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
    }
    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
    RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

    RationalFunction inv() const {
        if (num_.isZero()) throw DenominatorZero();
        RationalFunction r;
        r.num_ = den_;
        r.den_ = num_;
        r.normalizeLeading();
        return r;
    }

    RationalFunction pow(long k) const {
        if (k < 0) return inv().pow(-k);
        RationalFunction acc(1), base = *this;
        while (k) {
            if (k & 1) acc *= base;
            if (k >>= 1) base *= base;
        }
        return acc;
    }

    Rational eval(const std::map<uint32_t, Rational>& point) const {
        Rational d = den_.eval(point);
        if (d.isZero()) throw DenominatorZero();
        return num_.eval(point) / d;
    }

    std::string str() const {
        if (den_.isConstant() && den_.constantValue().isOne()) return num_.str();
        return "(" + num_.str() + ")/(" + den_.str() + ")";
    }

private:
    void normalizeLeading() {
        if (num_.isZero()) { den_ = Polynomial(1); return; }
        Rational lc = den_.leadingCoefficient();
        if (!lc.isOne()) {
            Rational inv = lc.inv();
            num_ = inv * num_;
            den_ = inv * den_;
        }
    }
    void reduce() {
        if (num_.isZero()) { den_ = Polynomial(1); return; }
        Monomial g = Monomial::gcd(num_.monomialContent(), den_.monomialContent());
        if (!g.isOne()) {
            num_ = num_.divideByMonomial(g);
            den_ = den_.divideByMonomial(g);
        }
        if (auto q = divideExact(num_, den_)) {
            num_ = *q;
            den_ = Polynomial(1);
            return;
        }
        if (auto q = divideExact(den_, num_)) {
            den_ = *q;
            num_ = Polynomial(1);
        }
        normalizeLeading();
    }

    Polynomial num_, den_;
};

// Deterministic probabilistic pre-check followed by exact cross
// multiplication.
bool ratfunEqual(const RationalFunction& f, const RationalFunction& g);

Rational evalRational(const RationalFunction& f, const std::map<uint32_t, Rational>& point);

template <>
inline RationalFunction fieldFromRational<RationalFunction>(const Rational& c) {
    return RationalFunction(c);
}

} // namespace fg2
