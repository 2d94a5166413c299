#pragma once
#include <functional>
#include <map>
#include <string>
#include <vector>
#include "fg2/quiver.hpp"

namespace fg2 {

// A point of the seed torus: a value of the coefficient field F at every
// vertex of a quiver.  Mutation updates the value at the mutated vertex by
// the exchange relation and the quiver shape alongside.
template <class F>
struct SeedAssignment {
    Quiver quiver;
    std::map<std::string, F> values;

    const F& at(const std::string& id) const {
        auto it = values.find(id);
        if (it == values.end()) throw Error("SeedAssignment: no value at " + id);
        return it->second;
    }
};

// Exchange monomials at vertex k: product over eps_kj > 0 (plus) and
// eps_kj < 0 (minus) of a_j^{|eps_kj|}.
template <class F>
std::pair<F, F> exchangeMonomials(const SeedAssignment<F>& s, const std::string& k, const F& one) {
    size_t kk = s.quiver.indexOf(k);
    F plus = one, minus = one;
    for (size_t j = 0; j < s.quiver.size(); ++j) {
        int e2 = s.quiver.eps2(kk, j);
        if (e2 == 0) continue;
        if (e2 & 1) throw Error("exchangeMonomials: half-integral exponent at mutable vertex");
        const F& aj = s.at(s.quiver.vertices()[j].id);
        F p = aj;
        for (int t = 1; t < std::abs(e2) / 2; ++t) p = p * aj;
        if (e2 > 0) plus = plus * p;
        else minus = minus * p;
    }
    return {plus, minus};
}

template <class F>
SeedAssignment<F> mutateCoords(const SeedAssignment<F>& s, const std::string& k, const F& one) {
    auto [plus, minus] = exchangeMonomials(s, k, one);
    SeedAssignment<F> r;
    r.quiver = s.quiver.mutated(k);
    r.values = s.values;
    r.values[k] = (plus + minus) / s.at(k);
    return r;
}

template <class F>
SeedAssignment<F> applySequence(const SeedAssignment<F>& s, const std::vector<std::string>& seq,
                                const F& one) {
    SeedAssignment<F> r = s;
    for (auto& k : seq) r = mutateCoords(r, k, one);
    return r;
}

// Relabel coordinate slots along a vertex map (iso: vertices of s.quiver ->
// vertices of target shape); value at iso(v) in the result is value at v.
template <class F>
SeedAssignment<F> relabelled(const SeedAssignment<F>& s, const Quiver& target,
                             const VertexMap& iso) {
    SeedAssignment<F> r;
    r.quiver = target;
    for (auto& [from, to] : iso) r.values[to] = s.at(from);
    if (r.values.size() != target.size()) throw Error("relabelled: map not a bijection");
    return r;
}

struct IdentityReport {
    bool pass = true;
    size_t checked = 0;
    std::vector<std::string> failures;
};

// Coordinatewise comparison of two assignments on the same vertex set.
template <class F, class Eq>
IdentityReport checkIdentity(const SeedAssignment<F>& f, const SeedAssignment<F>& g, Eq eq) {
    IdentityReport rep;
    for (auto& [id, val] : f.values) {
        ++rep.checked;
        if (!eq(val, g.at(id))) {
            rep.pass = false;
            rep.failures.push_back(id);
        }
    }
    return rep;
}

} // namespace fg2
