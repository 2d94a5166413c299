#pragma once
#include "fg2/groups.hpp"
#include "fg2/seedtorus.hpp"

namespace fg2 {

// A triple of affine flags, stored as the canonical representative
// (N, w0bar h1 N, u w0(h1) h2 sG N): the three edge coordinates and the face
// minors of u.  The edge minors u1, u2 of u are determined by the edges via
// [w0bar^{-1} u]_0 = (w0(h3 h1) h2)^{-1} and are recomputed on demand.
template <class F>
struct TriangleConfig {
    HElt<F> h1, h2, h3;
    std::vector<F> faces;  // u_3, ..., u_m
};

template <class F>
HElt<F> edgeMinors(const GroupData& g, const HElt<F>& h1, const HElt<F>& h2,
                   const HElt<F>& h3) {
    return (w0(g, h3 * h1) * h2).inv();
}

// Solve the same constraint for the third edge given the edge minors.
template <class F>
HElt<F> thirdEdgeFromMinors(const GroupData& g, const HElt<F>& h1, const HElt<F>& h2,
                            const HElt<F>& e) {
    return w0(g, e.inv() * h2.inv()) * h1.inv();
}

template <class F>
std::vector<F> fullMinors(const GroupData& g, const TriangleConfig<F>& c) {
    HElt<F> e = edgeMinors(g, c.h1, c.h2, c.h3);
    std::vector<F> u = {e.c1, e.c2};
    u.insert(u.end(), c.faces.begin(), c.faces.end());
    return u;
}

// The map M: edge coordinates into the frozen slots, face minors into the
// mutable slots (u_{k+3} at v_{faceVertex[k]}), then the monomial map m_G.
template <class F>
SeedAssignment<F> mapM(const GroupData& g, const TriangleConfig<F>& c) {
    SeedAssignment<F> s;
    s.quiver = standardQuiver(g.id);
    s.values["a01"] = c.h1.c1;
    s.values["a10"] = c.h1.c2;
    s.values["a12"] = c.h2.c1;
    s.values["a21"] = c.h2.c2;
    s.values["a20"] = c.h3.c1;
    s.values["a02"] = c.h3.c2;
    for (size_t k = 0; k < c.faces.size(); ++k)
        s.values["v" + std::to_string(g.faceVertex[k])] = c.faces[k];
    return monomialMap(g, s);
}

// rot(alpha) in coordinates: edges cycle, the face data becomes
// k^{-1} (PhiPsi)^2(u) k with k = w0(h1) h2.
template <class F>
TriangleConfig<F> rotateConfig(const GroupData& g, const TriangleConfig<F>& c) {
    HElt<F> k = w0(g, c.h1) * c.h2;
    std::vector<F> u = conjugateMinors(g, k, phiPsiSquared(g, fullMinors(g, c)));
    TriangleConfig<F> r;
    r.h1 = c.h3;
    r.h2 = c.h1;
    r.h3 = c.h2;
    r.faces.assign(u.begin() + 2, u.end());
    return r;
}

// mu_G^rot on the seed torus: the mutation sequence followed by the frozen
// rotation / mutable permutation relabeling back to the standard shape.
template <class F>
SeedAssignment<F> muRot(const GroupData& g, const SeedAssignment<F>& s, const F& one) {
    const GroupCombinatorics& gc = groupCombinatorics(g.id);
    SeedAssignment<F> r = applySequence(s, gc.rotSeq, one);
    return relabelled(r, standardQuiver(g.id), gc.rotIso);
}

// Embed the M-images of the two triangles of a split quadrilateral into the
// glued seed torus.  The shared slots v0/vinf receive the same value from
// both copies, which is asserted.
template <class F>
SeedAssignment<F> glueAssignments(const GroupData& g, const std::string& kl,
                                  const SeedAssignment<F>& top, const SeedAssignment<F>& bot) {
    const GroupCombinatorics& gc = groupCombinatorics(g.id);
    SeedAssignment<F> r;
    r.quiver = gluedQuiver(g.id, kl);
    auto put = [&](const std::string& slot, const F& v) {
        if constexpr (requires(const F& a, const F& b) { a == b; }) {
            auto it = r.values.find(slot);
            if (it != r.values.end() && !(it->second == v))
                throw NonGenericInput("glueAssignments: shared slot mismatch at " + slot);
        }
        r.values[slot] = v;
    };
    std::string tg1 = (kl == "02") ? "a01" : "a02";
    std::string tg2 = (kl == "02") ? "a10" : "a20";
    for (auto& f : {"a01", "a10", "a12", "a21", "a20", "a02"}) {
        std::string slot = f == tg1 ? "vinf" : f == tg2 ? "v0" : std::string("t") + (f + 1);
        put(slot, top.at(f));
    }
    for (int i = 1; i <= gc.k; ++i) put("v" + std::to_string(i), top.at("v" + std::to_string(i)));
    std::string bg1 = (kl == "02") ? "a02" : "a12";
    std::string bg2 = (kl == "02") ? "a20" : "a21";
    for (auto& f : {"a01", "a10", "a12", "a21", "a20", "a02"}) {
        std::string slot = f == bg1 ? (gc.glueSwap ? "v0" : "vinf")
                         : f == bg2 ? (gc.glueSwap ? "vinf" : "v0")
                                    : std::string("b") + (f + 1);
        put(slot, bot.at(f));
    }
    for (int i = 1; i <= gc.k; ++i)
        put("w" + std::to_string(gc.barPerm[i - 1]), bot.at("v" + std::to_string(i)));
    if (r.values.size() != r.quiver.size())
        throw Error("glueAssignments: slot count mismatch");
    return r;
}

// A split quadrilateral: the four sides, the diagonal (h02 for the 02-split,
// h13 for the 13-split) and the face minors of the two triangles
// (02: alpha_120 and alpha_023; 13: alpha_123 and alpha_130).
template <class F>
struct QuadConfig {
    std::string split;  // "02" or "13"
    HElt<F> h01, h12, h23, h30, diag;
    std::vector<F> facesA, facesB;
};

// The two triangles of the split, as canonical-representative data ready for
// mapM.  The twisted vertices contribute s_G factors to the edge triples.
template <class F>
std::pair<TriangleConfig<F>, TriangleConfig<F>> splitTriangles(const GroupData& g,
                                                               const QuadConfig<F>& q) {
    F one = q.h12.c1 / q.h12.c1;
    HElt<F> sg = sgElt(g, one);
    TriangleConfig<F> a, b;
    if (q.split == "02") {
        // alpha_120 = rot^{-1}(alpha_012), vertex 0 twisted by s_G
        a = {q.h12, w0(g, q.diag.inv()), q.h01 * sg, q.facesA};
        // alpha_023, untwisted
        b = {q.diag, q.h23, q.h30, q.facesB};
    } else if (q.split == "13") {
        // alpha_123, untwisted; h31 = reverse of the stored diagonal h13
        a = {q.h12, q.h23, reverseEdge(g, q.diag), q.facesA};
        // alpha_130 = rot^{-1}(alpha_013), vertex 1 twisted by s_G
        b = {sg * q.diag, q.h30, q.h01 * sg, q.facesB};
    } else {
        throw Error("splitTriangles: split must be 02 or 13");
    }
    return {a, b};
}

// The flip: 02-split data to 13-split data, Gamma maps + iota in minor
// coordinates.  The new diagonal is h13 = reverse(h30 l^{-1}).
template <class F>
QuadConfig<F> flipConfig(const GroupData& g, const QuadConfig<F>& q) {
    if (q.split != "02") throw Error("flipConfig: expects a 02-split");
    F one = q.h12.c1 / q.h12.c1;
    auto [t120, t023] = splitTriangles(g, q);
    std::vector<F> u = fullMinors(g, t120);
    std::vector<F> v = fullMinors(g, t023);
    HElt<F> k = w0(g, q.h12) * w0(g, q.diag).inv();
    Fcdl<F> f = fcdl(g, u, k, v, one);
    HElt<F> h31 = q.h30 * f.l.inv();
    QuadConfig<F> r;
    r.split = "13";
    r.h01 = q.h01;
    r.h12 = q.h12;
    r.h23 = q.h23;
    r.h30 = q.h30;
    r.diag = reverseEdge(g, h31);
    r.facesA.assign(f.c.begin() + 2, f.c.end());
    r.facesB.assign(f.d.begin() + 2, f.d.end());
    // consistency of the edge minors of c with the new diagonal
    if constexpr (requires(const F& a, const F& b) { a == b; }) {
        HElt<F> e = edgeMinors(g, q.h12, q.h23, h31);
        if (!(e.c1 == f.c[0] && e.c2 == f.c[1]))
            throw NonGenericInput("flipConfig: edge minors of c disagree with h31");
    }
    return r;
}

// Natural cocycle data for a triangle: the long edges carry w0bar h_i; the
// short edges beta^2_01, beta^1_20, beta^0_12 lie in N and are returned as
// canonical factorization coordinates.
template <class F>
struct NaturalCocycle {
    HElt<F> h1, h2, h3;             // alpha_01 = w0bar h1, etc.
    std::vector<F> beta201, beta120, beta012;
};

// x-coordinates of k^{-1} x k: t_l scales by prod_i k_i^{-A_{i, word_l}}.
template <class F>
std::vector<F> conjugateXCoords(const GroupData& g, const HElt<F>& k, std::vector<F> t) {
    F one = k.c1 / k.c1;
    for (size_t l = 0; l < t.size(); ++l) {
        int j = g.word[l];
        t[l] = t[l] * fpow(k.c1, -g.cartan[0][j - 1], one) * fpow(k.c2, -g.cartan[1][j - 1], one);
    }
    return t;
}

template <class F>
NaturalCocycle<F> naturalCocycle(const GroupData& g, const TriangleConfig<F>& c) {
    TriangleConfig<F> c1 = rotateConfig(g, c);
    TriangleConfig<F> c2 = rotateConfig(g, c1);
    NaturalCocycle<F> nc;
    nc.h1 = c.h1;
    nc.h2 = c.h2;
    nc.h3 = c.h3;
    nc.beta201 = conjugateXCoords(g, w0(g, c.h1) * c.h2, psiPhiPsi(g, fullMinors(g, c)));
    nc.beta120 = conjugateXCoords(g, w0(g, c.h3) * c.h1, psiPhiPsi(g, fullMinors(g, c1)));
    nc.beta012 = conjugateXCoords(g, w0(g, c.h2) * c.h3, psiPhiPsi(g, fullMinors(g, c2)));
    return nc;
}

} // namespace fg2
