#pragma once
#include <gmpxx.h>
#include <iosfwd>
#include <string>
#include "fg2/errors.hpp"

namespace fg2 {

// Arbitrary-precision rational, canonical form enforced by GMP
// (gcd(|num|,den)=1, den>0).  Division by zero throws DenominatorZero.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long n, long d) {
        if (d == 0) throw DenominatorZero();
        v_ = mpq_class(n, d);
        v_.canonicalize();
    }
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }
    explicit Rational(const std::string& s) : v_(s) { v_.canonicalize(); }

    static Rational fromParts(const mpz_class& n, const mpz_class& d) {
        if (d == 0) throw DenominatorZero();
        Rational r;
        r.v_ = mpq_class(n) / mpq_class(d);
        return r;
    }

    const mpq_class& raw() const { return v_; }
    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    bool isZero() const { return v_ == 0; }
    bool isOne() const { return v_ == 1; }
    bool isInteger() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { Rational r; r.v_ = -v_; return r; }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.isZero()) throw DenominatorZero();
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

    Rational inv() const {
        if (isZero()) throw DenominatorZero();
        Rational r;
        r.v_ = 1 / v_;
        return r;
    }

    Rational pow(long e) const {
        if (e == 0) return Rational(1);
        if (e < 0) return inv().pow(-e);
        Rational base = *this, acc(1);
        while (e) {
            if (e & 1) acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc;
    }

    std::string str() const { return v_.get_str(); }

private:
    mpq_class v_;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.raw();
}

} // namespace fg2
