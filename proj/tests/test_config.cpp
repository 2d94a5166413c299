#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fg2/config.hpp"
#include "fg2/factored.hpp"
#include "fg2/matmodel.hpp"
#include "fg2/ratfun.hpp"
#include "fg2/rng.hpp"

using namespace fg2;
using Q = Rational;
using FD = Factored;

static const GroupId kGroups[] = {GroupId::A2, GroupId::B2, GroupId::C2, GroupId::G2};
static const Q kOne(1);
static const FD kOneFD(1);

namespace {

HElt<Q> randH(Sampler& rng) { return {rng.next(), rng.next()}; }

TriangleConfig<Q> randomTriangle(const GroupData& g, Sampler& rng) {
    TriangleConfig<Q> c;
    c.h1 = randH(rng);
    c.h2 = randH(rng);
    c.h3 = randH(rng);
    for (int i = 0; i < g.m - 2; ++i) c.faces.push_back(rng.next());
    return c;
}

QuadConfig<Q> randomQuad(const GroupData& g, Sampler& rng) {
    QuadConfig<Q> q;
    q.split = "02";
    q.h01 = randH(rng);
    q.h12 = randH(rng);
    q.h23 = randH(rng);
    q.h30 = randH(rng);
    q.diag = randH(rng);
    for (int i = 0; i < g.m - 2; ++i) {
        q.facesA.push_back(rng.next());
        q.facesB.push_back(rng.next());
    }
    return q;
}

HElt<FD> symH(const std::string& a, const std::string& b) {
    return {FD::variable(a), FD::variable(b)};
}

TriangleConfig<FD> symTriangle(const GroupData& g) {
    TriangleConfig<FD> c;
    c.h1 = symH("a01", "a10");
    c.h2 = symH("a12", "a21");
    c.h3 = symH("a20", "a02");
    for (int i = 0; i < g.m - 2; ++i) c.faces.push_back(FD::variable("f" + std::to_string(i + 1)));
    return c;
}

bool eqFD(const FD& a, const FD& b) { return ratfunEqual(a.expand(), b.expand()); }

// the two sides of the flip square: mutations on the glued torus vs the
// coordinate formulas via Gamma maps and iota
template <class F>
SeedAssignment<F> glued02(const GroupData& g, const QuadConfig<F>& q, const F& one) {
    auto [t120, t023] = splitTriangles(g, q);
    return glueAssignments(g, "02", mapM(g, t023), muRot(g, mapM(g, t120), one));
}

template <class F>
SeedAssignment<F> glued13(const GroupData& g, const QuadConfig<F>& q, const F& one) {
    auto [t123, t130] = splitTriangles(g, q);
    return glueAssignments(g, "13", mapM(g, t123), muRot(g, mapM(g, t130), one));
}

template <class F>
SeedAssignment<F> flipViaMutation(const GroupData& g, const QuadConfig<F>& q, const F& one) {
    const GroupCombinatorics& gc = groupCombinatorics(g.id);
    SeedAssignment<F> s = applySequence(glued02(g, q, one), gc.flipSeq, one);
    return relabelled(s, gluedQuiver(g.id, "13"), gc.flipIso);
}

template <class F>
SeedAssignment<F> flipViaFormulas(const GroupData& g, const QuadConfig<F>& q, const F& one) {
    return glued13(g, flipConfig(g, q), one);
}

// relabel a 13-split quad as the 02-split of the quad with vertices shifted
// down by one; the face data of the new 120-triangle is a double rotation of
// the old 123-triangle (central twists do not change face minors)
QuadConfig<Q> quadRotate(const GroupData& g, const QuadConfig<Q>& q) {
    auto [t123, t130] = splitTriangles(g, q);
    TriangleConfig<Q> t231 = rotateConfig(g, rotateConfig(g, t123));
    return {"02", q.h12, q.h23, q.h30, q.h01, q.diag, t231.faces, q.facesB};
}

} // namespace

TEST_CASE("edge minors determine the third edge") {
    Sampler rng(0x7a11);
    for (GroupId gid : kGroups) {
        const GroupData& g = groupData(gid);
        for (int trial = 0; trial < 25; ++trial) {
            HElt<Q> h1 = randH(rng), h2 = randH(rng), h3 = randH(rng);
            HElt<Q> e = edgeMinors(g, h1, h2, h3);
            HElt<Q> back = thirdEdgeFromMinors(g, h1, h2, e);
            CHECK(back.c1 == h3.c1);
            CHECK(back.c2 == h3.c2);
        }
    }
}

TEST_CASE("rotation theorem, symbolic: mu_rot . M = M . rot for A2, B2, C2") {
    for (GroupId gid : {GroupId::A2, GroupId::B2, GroupId::C2}) {
        const GroupData& g = groupData(gid);
        TriangleConfig<FD> c = symTriangle(g);
        SeedAssignment<FD> lhs = muRot(g, mapM(g, c), kOneFD);
        SeedAssignment<FD> rhs = mapM(g, rotateConfig(g, c));
        IdentityReport rep = checkIdentity(lhs, rhs, eqFD);
        CHECK_MESSAGE(rep.pass, groupName(gid));
        CHECK(rep.checked == lhs.values.size());
    }
}

TEST_CASE("rotation theorem, G2: 100 random points") {
    Sampler rng(0x601d);
    const GroupData& g = groupData(GroupId::G2);
    for (int trial = 0; trial < 100; ++trial) {
        rng.withResampling([&] {
            TriangleConfig<Q> c = randomTriangle(g, rng);
            SeedAssignment<Q> lhs = muRot(g, mapM(g, c), kOne);
            SeedAssignment<Q> rhs = mapM(g, rotateConfig(g, c));
            IdentityReport rep = checkIdentity(lhs, rhs, [](const Q& a, const Q& b) { return a == b; });
            CHECK(rep.pass);
            return 0;
        });
    }
}

TEST_CASE("rotation of configurations has order three") {
    Sampler rng(0x3333);
    for (GroupId gid : kGroups) {
        const GroupData& g = groupData(gid);
        for (int trial = 0; trial < 25; ++trial) {
            rng.withResampling([&] {
                TriangleConfig<Q> c = randomTriangle(g, rng);
                TriangleConfig<Q> r = rotateConfig(g, rotateConfig(g, rotateConfig(g, c)));
                CHECK(r.h1.c1 == c.h1.c1);
                CHECK(r.h2.c2 == c.h2.c2);
                CHECK(r.h3.c1 == c.h3.c1);
                for (int i = 0; i < g.m - 2; ++i) CHECK(r.faces[i] == c.faces[i]);
                return 0;
            });
        }
    }
}

TEST_CASE("flip theorem, symbolic for A2") {
    const GroupData& g = groupData(GroupId::A2);
    QuadConfig<FD> q;
    q.split = "02";
    q.h01 = symH("e1", "e2");
    q.h12 = symH("e3", "e4");
    q.h23 = symH("e5", "e6");
    q.h30 = symH("e7", "e8");
    q.diag = symH("e9", "e10");
    q.facesA = {FD::variable("fa")};
    q.facesB = {FD::variable("fb")};
    SeedAssignment<FD> lhs = flipViaMutation(g, q, kOneFD);
    SeedAssignment<FD> rhs = flipViaFormulas(g, q, kOneFD);
    IdentityReport rep = checkIdentity(lhs, rhs, eqFD);
    CHECK_MESSAGE(rep.pass, [&] {
        std::string s;
        for (auto& f : rep.failures) s += f + " ";
        return s;
    }());
    CHECK(rep.checked == lhs.values.size());
}

TEST_CASE("flip theorem: 100 random points per group") {
    Sampler rng(0xf11b);
    for (GroupId gid : kGroups) {
        const GroupData& g = groupData(gid);
        for (int trial = 0; trial < 100; ++trial) {
            rng.withResampling([&] {
                QuadConfig<Q> q = randomQuad(g, rng);
                SeedAssignment<Q> lhs = flipViaMutation(g, q, kOne);
                SeedAssignment<Q> rhs = flipViaFormulas(g, q, kOne);
                IdentityReport rep =
                    checkIdentity(lhs, rhs, [](const Q& a, const Q& b) { return a == b; });
                CHECK_MESSAGE(rep.pass, groupName(gid));
                return 0;
            });
        }
    }
}

TEST_CASE("flipping both diagonals returns the original quadrilateral data") {
    Sampler rng(0x2f1f);
    for (GroupId gid : kGroups) {
        const GroupData& g = groupData(gid);
        for (int trial = 0; trial < 20; ++trial) {
            rng.withResampling([&] {
                QuadConfig<Q> q = randomQuad(g, rng);
                auto [t120, t023] = splitTriangles(g, q);
                QuadConfig<Q> back = flipConfig(g, quadRotate(g, flipConfig(g, q)));
                // back is the 13-split of the rotated quad: diagonal 20
                HElt<Q> d = reverseEdge(g, q.diag);
                CHECK(back.diag.c1 == d.c1);
                CHECK(back.diag.c2 == d.c2);
                // faces of alpha_230 and alpha_201, double rotations of the
                // original split triangles
                std::vector<Q> fa = rotateConfig(g, rotateConfig(g, t023)).faces;
                std::vector<Q> fb = rotateConfig(g, rotateConfig(g, t120)).faces;
                for (int i = 0; i < g.m - 2; ++i) {
                    CHECK(back.facesA[i] == fa[i]);
                    CHECK(back.facesB[i] == fb[i]);
                }
                return 0;
            });
        }
    }
}

TEST_CASE("natural cocycle closes around the truncated triangle, 100 configurations") {
    Sampler rng(0xc0cc);
    for (GroupId gid : {GroupId::A2, GroupId::C2}) {
        const GroupData& g = groupData(gid);
        auto mm = matrixModel(GroupId{gid}, kOne);
        Matrix<Q> id = Matrix<Q>::identity(mm.n, kOne);
        for (int trial = 0; trial < 100; ++trial) {
            rng.withResampling([&] {
                TriangleConfig<Q> c = randomTriangle(g, rng);
                NaturalCocycle<Q> nc = naturalCocycle(g, c);
                Matrix<Q> a01 = mm.w0bar() * mm.h(nc.h1);
                Matrix<Q> a12 = mm.w0bar() * mm.h(nc.h2);
                Matrix<Q> a20 = mm.w0bar() * mm.h(nc.h3);
                Matrix<Q> b201 = mm.xWord(g.word, nc.beta201);
                Matrix<Q> b120 = mm.xWord(g.word, nc.beta120);
                Matrix<Q> b012 = mm.xWord(g.word, nc.beta012);
                // hexagon v01 v10 v12 v21 v20 v02
                Matrix<Q> loop = a01 * b120.inverse(kOne) * a12 * b201.inverse(kOne) * a20 *
                                 b012.inverse(kOne);
                CHECK(loop == id);
                return 0;
            });
        }
    }
}
