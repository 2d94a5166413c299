#include "fg2/polynomial.hpp"
#include "fg2/ratfun.hpp"

#include <cctype>
#include <random>
#include <mutex>
#include <sstream>
#include <unordered_map>

namespace fg2 {

namespace {
struct Pool {
    std::mutex mtx;
    std::unordered_map<std::string, uint32_t> ids;
    std::vector<std::string> names;
};
Pool& pool() {
    static Pool p;
    return p;
}
} // namespace

uint32_t varId(const std::string& name) {
    Pool& p = pool();
    std::lock_guard<std::mutex> lk(p.mtx);
    auto it = p.ids.find(name);
    if (it != p.ids.end()) return it->second;
    uint32_t id = static_cast<uint32_t>(p.names.size());
    p.names.push_back(name);
    p.ids.emplace(name, id);
    return id;
}

const std::string& varName(uint32_t id) {
    Pool& p = pool();
    std::lock_guard<std::mutex> lk(p.mtx);
    return p.names.at(id);
}

Rational Polynomial::eval(const std::map<uint32_t, Rational>& point) const {
    return evalIn<Rational>(point, Rational(1));
}

std::string Polynomial::str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
        const Monomial& m = it->first;
        Rational c = it->second;
        if (first) {
            if (c.sign() < 0) { os << "-"; c = -c; }
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
            if (c.sign() < 0) c = -c;
        }
        first = false;
        bool coeffShown = false;
        if (!c.isOne() || m.isOne()) {
            os << c.str();
            coeffShown = true;
        }
        for (size_t i = 0; i < m.e.size(); ++i) {
            if (coeffShown || i > 0) os << "*";
            os << varName(m.e[i].first);
            if (m.e[i].second != 1) os << "^" << m.e[i].second;
        }
    }
    return os.str();
}

namespace {
struct Parser {
    const std::string& s;
    size_t i = 0;
    explicit Parser(const std::string& text) : s(text) {}

    void skip() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eat(char c) {
        skip();
        if (i < s.size() && s[i] == c) { ++i; return true; }
        return false;
    }
    [[noreturn]] void fail(const std::string& what) {
        throw Error("Polynomial::parse: " + what + " at position " + std::to_string(i));
    }

    Polynomial expr() {
        Polynomial r = eat('-') ? -product() : product();
        for (;;) {
            if (eat('+')) r += product();
            else if (eat('-')) r -= product();
            else break;
        }
        return r;
    }
    Polynomial product() {
        Polynomial r = power();
        for (;;) {
            if (eat('*')) { r *= power(); continue; }
            if (eat('/')) {
                Polynomial d = power();
                if (!d.isConstant() || d.isZero())
                    fail("'/' only supported for nonzero constants");
                r = d.constantValue().inv() * r;
                continue;
            }
            skip();
            // implicit product before '(' or an identifier
            if (i < s.size() && (s[i] == '(' || std::isalpha(static_cast<unsigned char>(s[i])))) {
                r *= power();
                continue;
            }
            break;
        }
        return r;
    }
    Polynomial power() {
        Polynomial b = atom();
        if (eat('^')) {
            skip();
            bool neg = eat('-');
            long k = integer();
            if (neg) fail("negative exponents are not polynomial");
            return b.pow(k);
        }
        return b;
    }
    long integer() {
        skip();
        size_t j = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (j == i) fail("expected integer");
        return std::stol(s.substr(j, i - j));
    }
    Polynomial atom() {
        skip();
        if (i >= s.size()) fail("unexpected end of input");
        if (s[i] == '(') {
            ++i;
            Polynomial r = expr();
            if (!eat(')')) fail("expected ')'");
            return r;
        }
        if (s[i] == '-') { ++i; return -atom(); }
        if (std::isdigit(static_cast<unsigned char>(s[i])))
            return Polynomial(Rational(std::to_string(integer())));
        if (std::isalpha(static_cast<unsigned char>(s[i])) || s[i] == '_') {
            size_t j = i;
            while (i < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_'))
                ++i;
            return Polynomial::variable(s.substr(j, i - j));
        }
        fail(std::string("unexpected character '") + s[i] + "'");
    }
};
} // namespace

Polynomial Polynomial::parse(const std::string& text) {
    Parser p(text);
    Polynomial r = p.expr();
    p.skip();
    if (p.i != text.size()) p.fail("trailing input");
    return r;
}

std::optional<Polynomial> divideExact(const Polynomial& f, const Polynomial& g) {
    if (g.isZero()) return std::nullopt;
    if (f.isZero()) return Polynomial();
    Polynomial r = f, q;
    const Monomial& lmg = g.leadingMonomial();
    const Rational& lcg = g.leadingCoefficient();
    while (!r.isZero()) {
        auto mq = r.leadingMonomial().divideBy(lmg);
        if (!mq) return std::nullopt;
        Rational cq = r.leadingCoefficient() / lcg;
        Polynomial t = Polynomial::term(cq, *mq);
        q += t;
        r -= t * g;
    }
    return q;
}

bool ratfunEqual(const RationalFunction& f, const RationalFunction& g) {
    Polynomial lhs = f.num() * g.den();
    Polynomial rhs = g.num() * f.den();
    if (lhs.isZero() && rhs.isZero()) return true;

    // Cheap randomized disagreement check at a few shared points before
    // committing to the exact comparison.
    std::vector<uint32_t> vars = lhs.variables();
    for (uint32_t v : rhs.variables()) vars.push_back(v);
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    std::mt19937_64 rng(0x51ab5eedULL);
    std::uniform_int_distribution<long> dist(2, 97);
    for (int trial = 0; trial < 5; ++trial) {
        std::map<uint32_t, Rational> pt;
        for (uint32_t v : vars) pt[v] = Rational(dist(rng));
        if (lhs.eval(pt) != rhs.eval(pt)) return false;
    }
    return lhs == rhs;
}

Rational evalRational(const RationalFunction& f, const std::map<uint32_t, Rational>& point) {
    return f.eval(point);
}

} // namespace fg2
