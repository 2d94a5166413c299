#pragma once
#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>
#include "fg2/rational.hpp"

namespace fg2 {

// Global interned symbol pool.  Ids are stable for the process lifetime.
uint32_t varId(const std::string& name);
const std::string& varName(uint32_t id);

// Sorted sparse exponent vector; exponents are nonzero and positive.
struct Monomial {
    std::vector<std::pair<uint32_t, int>> e;

    bool isOne() const { return e.empty(); }
    int degree() const {
        int d = 0;
        for (auto& [v, k] : e) d += k;
        return d;
    }
    int exponent(uint32_t v) const {
        for (auto& [w, k] : e)
            if (w == v) return k;
        return 0;
    }

    static Monomial var(uint32_t v, int k = 1) {
        Monomial m;
        if (k != 0) m.e.push_back({v, k});
        return m;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial r;
        size_t i = 0, j = 0;
        while (i < a.e.size() || j < b.e.size()) {
            if (j == b.e.size() || (i < a.e.size() && a.e[i].first < b.e[j].first))
                r.e.push_back(a.e[i++]);
            else if (i == a.e.size() || b.e[j].first < a.e[i].first)
                r.e.push_back(b.e[j++]);
            else {
                int k = a.e[i].second + b.e[j].second;
                if (k != 0) r.e.push_back({a.e[i].first, k});
                ++i, ++j;
            }
        }
        return r;
    }

    // a / b when b divides a.
    std::optional<Monomial> divideBy(const Monomial& b) const {
        Monomial r;
        size_t i = 0, j = 0;
        while (i < e.size() || j < b.e.size()) {
            if (j == b.e.size() || (i < e.size() && e[i].first < b.e[j].first))
                r.e.push_back(e[i++]);
            else if (i == e.size() || b.e[j].first < e[i].first)
                return std::nullopt;
            else {
                int k = e[i].second - b.e[j].second;
                if (k < 0) return std::nullopt;
                if (k > 0) r.e.push_back({e[i].first, k});
                ++i, ++j;
            }
        }
        return r;
    }

    static Monomial gcd(const Monomial& a, const Monomial& b) {
        Monomial r;
        size_t i = 0, j = 0;
        while (i < a.e.size() && j < b.e.size()) {
            if (a.e[i].first < b.e[j].first) ++i;
            else if (b.e[j].first < a.e[i].first) ++j;
            else {
                r.e.push_back({a.e[i].first, std::min(a.e[i].second, b.e[j].second)});
                ++i, ++j;
            }
        }
        return r;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
};

// Graded lexicographic order (total degree, then variable ids).
struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        int da = a.degree(), db = b.degree();
        if (da != db) return da < db;
        size_t i = 0, j = 0;
        while (i < a.e.size() && j < b.e.size()) {
            if (a.e[i].first != b.e[j].first) return a.e[i].first > b.e[j].first;
            if (a.e[i].second != b.e[j].second) return a.e[i].second < b.e[j].second;
            ++i, ++j;
        }
        return a.e.size() < b.e.size();
    }
};

class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, GrlexLess>;

    Polynomial() = default;
    Polynomial(long c) { if (c != 0) t_[Monomial()] = Rational(c); }
    Polynomial(const Rational& c) { if (!c.isZero()) t_[Monomial()] = c; }

    static Polynomial variable(const std::string& name) {
        return term(Rational(1), Monomial::var(varId(name)));
    }
    static Polynomial variable(uint32_t id) {
        return term(Rational(1), Monomial::var(id));
    }
    static Polynomial term(const Rational& c, const Monomial& m) {
        Polynomial p;
        if (!c.isZero()) p.t_[m] = c;
        return p;
    }

    const TermMap& terms() const { return t_; }
    bool isZero() const { return t_.empty(); }
    bool isConstant() const {
        return t_.empty() || (t_.size() == 1 && t_.begin()->first.isOne());
    }
    bool isMonomialTerm() const { return t_.size() == 1; }
    Rational constantValue() const {
        if (t_.empty()) return Rational(0);
        auto it = t_.find(Monomial());
        return it == t_.end() ? Rational(0) : it->second;
    }
    int degree() const { return t_.empty() ? -1 : t_.rbegin()->first.degree(); }
    size_t termCount() const { return t_.size(); }

    const Monomial& leadingMonomial() const { return t_.rbegin()->first; }
    const Rational& leadingCoefficient() const { return t_.rbegin()->second; }

    void addTerm(const Monomial& m, const Rational& c) {
        if (c.isZero()) return;
        auto [it, fresh] = t_.try_emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (it->second.isZero()) t_.erase(it);
        }
    }

    Polynomial operator-() const {
        Polynomial r;
        for (auto& [m, c] : t_) r.t_[m] = -c;
        return r;
    }
    Polynomial& operator+=(const Polynomial& o) {
        for (auto& [m, c] : o.t_) addTerm(m, c);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        for (auto& [m, c] : o.t_) addTerm(m, -c);
        return *this;
    }
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        Polynomial r;
        for (auto& [ma, ca] : a.t_)
            for (auto& [mb, cb] : b.t_) r.addTerm(ma * mb, ca * cb);
        return r;
    }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
    friend Polynomial operator*(const Rational& c, const Polynomial& p) {
        Polynomial r;
        if (!c.isZero())
            for (auto& [m, k] : p.t_) r.t_[m] = c * k;
        return r;
    }
    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        if (a.t_.size() != b.t_.size()) return false;
        auto i = a.t_.begin();
        for (auto& [m, c] : b.t_) {
            if (!(i->first == m) || i->second != c) return false;
            ++i;
        }
        return true;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    Polynomial pow(long k) const {
        if (k < 0) throw Error("Polynomial::pow negative exponent");
        Polynomial acc(1), base = *this;
        while (k) {
            if (k & 1) acc *= base;
            if (k >>= 1) base *= base;
        }
        return acc;
    }

    // Greatest monomial dividing every term (1 for the zero polynomial).
    Monomial monomialContent() const {
        if (t_.empty()) return Monomial();
        Monomial g = t_.begin()->first;
        for (auto& [m, c] : t_) {
            g = Monomial::gcd(g, m);
            if (g.isOne()) break;
        }
        return g;
    }

    Polynomial divideByMonomial(const Monomial& m) const {
        Polynomial r;
        for (auto& [mm, c] : t_) {
            auto q = mm.divideBy(m);
            if (!q) throw Error("divideByMonomial: not divisible");
            r.t_[*q] = c;
        }
        return r;
    }

    std::vector<uint32_t> variables() const {
        std::vector<uint32_t> vs;
        for (auto& [m, c] : t_)
            for (auto& [v, k] : m.e) vs.push_back(v);
        std::sort(vs.begin(), vs.end());
        vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
        return vs;
    }

    // Evaluate with coefficients mapped into F.  F needs +, *, and
    // construction via fg2::fieldFromRational<F>.
    template <class F, class Map>
    F evalIn(const Map& point, const F& one) const;

    Rational eval(const std::map<uint32_t, Rational>& point) const;

    std::string str() const;
    static Polynomial parse(const std::string& text);

private:
    TermMap t_;
};

// Exact division: returns f/g when the remainder is zero, nullopt otherwise.
std::optional<Polynomial> divideExact(const Polynomial& f, const Polynomial& g);

template <class F>
F fieldFromRational(const Rational& c);

template <>
inline Rational fieldFromRational<Rational>(const Rational& c) { return c; }

template <class F, class Map>
F Polynomial::evalIn(const Map& point, const F& one) const {
    F acc = one - one;
    for (auto& [m, c] : t_) {
        F t = one;
        for (auto& [v, k] : m.e) {
            auto it = point.find(v);
            if (it == point.end()) throw Error("eval: unbound variable " + varName(v));
            F p = it->second;
            for (int i = 1; i < k; ++i) p = p * it->second;
            t = t * p;
        }
        t = t * fieldFromRational<F>(c);
        acc = acc + t;
    }
    return acc;
}

} // namespace fg2
