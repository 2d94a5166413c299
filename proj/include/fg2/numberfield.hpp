#pragma once
#include <memory>
#include <sstream>
#include <vector>
#include "fg2/polynomial.hpp"

namespace fg2 {

// Q[x]/(p) for a monic irreducible p.  Irreducibility is the caller's
// responsibility; a zero divisor surfaces as DenominatorZero on inversion.
struct NumberField {
    // minimal polynomial coefficients, constant term first, including the
    // leading 1: p = c0 + c1 x + ... + x^d.
    std::vector<Rational> minPoly;

    explicit NumberField(std::vector<Rational> p) : minPoly(std::move(p)) {
        if (minPoly.size() < 2 || !minPoly.back().isOne())
            throw Error("NumberField: minimal polynomial must be monic of degree >= 1");
    }
    size_t degree() const { return minPoly.size() - 1; }
};

class NumberFieldElement {
public:
    NumberFieldElement() : c_{Rational(0)} {}
    NumberFieldElement(const Rational& r) : c_{r} {}
    NumberFieldElement(long n) : c_{Rational(n)} {}
    NumberFieldElement(std::shared_ptr<const NumberField> fld, std::vector<Rational> c)
        : fld_(std::move(fld)), c_(std::move(c)) {
        reduce();
    }

    static NumberFieldElement generator(const std::shared_ptr<const NumberField>& fld) {
        if (fld->degree() == 1) return NumberFieldElement(fld, {-fld->minPoly[0]});
        std::vector<Rational> g(fld->degree(), Rational(0));
        g[1] = Rational(1);
        return NumberFieldElement(fld, std::move(g));
    }

    const std::shared_ptr<const NumberField>& field() const { return fld_; }
    const std::vector<Rational>& coefficients() const { return c_; }

    bool isZero() const {
        for (auto& x : c_)
            if (!x.isZero()) return false;
        return true;
    }
    bool isRational() const {
        for (size_t i = 1; i < c_.size(); ++i)
            if (!c_[i].isZero()) return false;
        return true;
    }
    Rational rationalValue() const {
        if (!isRational()) throw Error("NumberFieldElement: not rational");
        return c_.empty() ? Rational(0) : c_[0];
    }

    friend NumberFieldElement operator+(const NumberFieldElement& a, const NumberFieldElement& b) {
        auto fld = unify(a, b);
        std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
        for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
        return NumberFieldElement(fld, std::move(c));
    }
    friend NumberFieldElement operator-(const NumberFieldElement& a, const NumberFieldElement& b) {
        return a + (-b);
    }
    NumberFieldElement operator-() const {
        NumberFieldElement r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }
    friend NumberFieldElement operator*(const NumberFieldElement& a, const NumberFieldElement& b) {
        auto fld = unify(a, b);
        std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        return NumberFieldElement(fld, std::move(c));
    }
    friend NumberFieldElement operator/(const NumberFieldElement& a, const NumberFieldElement& b) {
        return a * b.inv();
    }
    friend bool operator==(const NumberFieldElement& a, const NumberFieldElement& b) {
        return (a - b).isZero();
    }
    friend bool operator!=(const NumberFieldElement& a, const NumberFieldElement& b) {
        return !(a == b);
    }

    NumberFieldElement inv() const;

    NumberFieldElement pow(long k) const {
        if (k < 0) return inv().pow(-k);
        NumberFieldElement acc(Rational(1)), base = *this;
        if (fld_) acc = NumberFieldElement(fld_, {Rational(1)});
        while (k) {
            if (k & 1) acc = acc * base;
            if (k >>= 1) base = base * base;
        }
        return acc;
    }

    std::string str() const {
        std::ostringstream os;
        os << "[";
        for (size_t i = 0; i < c_.size(); ++i) {
            if (i) os << ", ";
            os << c_[i].str();
        }
        os << "]";
        return os.str();
    }

private:
    // Canonical reduction modulo the minimal polynomial (degree < d).
    void reduce() {
        if (!fld_) return;
        size_t d = fld_->degree();
        while (c_.size() > d) {
            Rational lead = c_.back();
            size_t k = c_.size() - 1;
            c_.pop_back();
            if (lead.isZero()) continue;
            // x^k = x^(k-d) * (x^d) = -x^(k-d) * (c0 + ... + c_{d-1} x^{d-1})
            for (size_t i = 0; i < d; ++i) c_[k - d + i] -= lead * fld_->minPoly[i];
        }
        c_.resize(d, Rational(0));
    }

    static std::shared_ptr<const NumberField> unify(const NumberFieldElement& a,
                                                    const NumberFieldElement& b) {
        if (a.fld_ && b.fld_ && a.fld_ != b.fld_)
            throw Error("NumberFieldElement: mixed field contexts");
        return a.fld_ ? a.fld_ : b.fld_;
    }

    std::shared_ptr<const NumberField> fld_;
    std::vector<Rational> c_;
};

// nfReduce is a no-op on this representation (elements are kept reduced),
// exposed for API symmetry.
inline NumberFieldElement nfReduce(const NumberFieldElement& e) { return e; }

inline NumberFieldElement NumberFieldElement::inv() const {
    if (isZero()) throw DenominatorZero();
    if (!fld_ || isRational()) {
        NumberFieldElement r = *this;
        r.c_.assign(r.c_.size(), Rational(0));
        r.c_[0] = c_[0].inv();
        return r;
    }
    // extended Euclid in Q[x] against the minimal polynomial
    using UPoly = std::vector<Rational>;
    auto deg = [](const UPoly& p) {
        for (size_t i = p.size(); i-- > 0;)
            if (!p[i].isZero()) return static_cast<long>(i);
        return -1L;
    };
    auto trim = [&](UPoly& p) {
        while (!p.empty() && p.back().isZero()) p.pop_back();
    };
    UPoly r0 = fld_->minPoly, r1 = c_;
    trim(r1);
    UPoly s0 = {Rational(0)}, s1 = {Rational(1)};
    while (deg(r1) > 0) {
        // divide r0 by r1
        UPoly q(std::max<long>(deg(r0) - deg(r1) + 1, 1), Rational(0));
        UPoly rem = r0;
        while (deg(rem) >= deg(r1)) {
            long shift = deg(rem) - deg(r1);
            Rational f = rem[deg(rem)] / r1[deg(r1)];
            q[shift] += f;
            for (long i = 0; i <= deg(r1); ++i) rem[i + shift] -= f * r1[i];
            trim(rem);
            if (rem.empty()) break;
        }
        UPoly s2(std::max(s0.size(), q.size() + s1.size()), Rational(0));
        for (size_t i = 0; i < s0.size(); ++i) s2[i] += s0[i];
        for (size_t i = 0; i < q.size(); ++i)
            for (size_t j = 0; j < s1.size(); ++j) s2[i + j] -= q[i] * s1[j];
        trim(s2);
        r0 = r1; r1 = rem; s0 = s1; s1 = s2;
        trim(r0); trim(r1);
    }
    if (deg(r1) != 0) throw DenominatorZero("NumberFieldElement: zero divisor");
    Rational scale = r1[0].inv();
    for (auto& x : s1) x *= scale;
    return NumberFieldElement(fld_, s1);
}

template <>
inline NumberFieldElement fieldFromRational<NumberFieldElement>(const Rational& c) {
    return NumberFieldElement(c);
}

} // namespace fg2
