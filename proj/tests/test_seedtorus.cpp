#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fg2/ratfun.hpp"
#include "fg2/rng.hpp"
#include "fg2/seedtorus.hpp"

using namespace fg2;

using RF = RationalFunction;
static const RF kOne(1);

namespace {

struct Step {
    const char* oldName;
    const char* newName;
    std::vector<std::pair<const char*, int>> plus, minus;
};

// Exchange-relation cascades for the rotation and flip sequences, used as
// independent oracles for mutateCoords (new*old = M+ + M-).
const std::vector<Step> kRotB2 = {
    {"a1", "a1p", {{"a01", 1}, {"a02", 2}, {"a12", 1}}, {{"a20", 1}, {"a2", 2}}},
    {"a2", "a2p", {{"a1p", 1}, {"a10", 1}}, {{"a01", 1}, {"a21", 1}, {"a02", 1}}},
};
const std::vector<Step> kRotC2 = {
    {"a1", "a1p", {{"a01", 1}, {"a02", 1}, {"a12", 1}}, {{"a2", 1}, {"a20", 1}}},
    {"a2", "a2p", {{"a10", 1}, {"a1p", 2}}, {{"a01", 2}, {"a02", 1}, {"a21", 1}}},
};
const std::vector<Step> kRotG2 = {
    {"a1", "z1", {{"a2", 1}, {"a20", 1}}, {{"a01", 1}, {"a02", 1}, {"a3", 1}}},
    {"a2", "z2", {{"a01", 3}, {"a02", 2}, {"a4", 1}}, {{"z1", 3}}},
    {"a3", "a1p", {{"a20", 1}, {"a4", 1}}, {{"a12", 1}, {"z1", 1}}},
    {"z1", "a3p", {{"a01", 2}, {"a02", 1}, {"a1p", 1}}, {{"z2", 1}}},
    {"a4", "a2p", {{"a10", 1}, {"a1p", 3}}, {{"a21", 1}, {"z2", 1}}},
    {"z2", "a4p", {{"a01", 3}, {"a02", 1}, {"a2p", 1}}, {{"a10", 1}, {"a3p", 3}}},
};
const std::vector<Step> kFlipA2 = {
    {"a0", "b1p", {{"a01", 1}, {"a1", 1}}, {{"a03", 1}, {"b1", 1}}},
    {"ainf", "a1p", {{"a1", 1}, {"a21", 1}}, {{"b1", 1}, {"a23", 1}}},
    {"a1", "a0p", {{"a30", 1}, {"a1p", 1}}, {{"a32", 1}, {"b1p", 1}}},
    {"b1", "ainfp", {{"a10", 1}, {"a1p", 1}}, {{"a12", 1}, {"b1p", 1}}},
};
const std::vector<Step> kFlipB2 = {
    {"a0", "z1", {{"a2", 1}, {"b2", 1}}, {{"b1", 1}, {"a32", 1}}},
    {"ainf", "b1p", {{"a01", 1}, {"a1", 1}}, {{"b1", 1}, {"a30", 1}}},
    {"a1", "z2", {{"a03", 2}, {"b1", 1}, {"a23", 1}}, {{"a2", 2}, {"b1p", 1}}},
    {"a2", "b2p", {{"a03", 1}, {"z1", 1}}, {{"z2", 1}}},
    {"b1", "z3", {{"z1", 2}}, {{"a12", 1}, {"z2", 1}}},
    {"b2", "a2p", {{"a10", 1}, {"a12", 1}, {"a32", 1}}, {{"a21", 1}, {"z1", 1}}},
    {"z1", "ainfp", {{"a2p", 1}, {"b2p", 1}}, {{"a10", 1}, {"z3", 1}}},
    {"z2", "a0p", {{"a23", 1}, {"b2p", 2}}, {{"b1p", 1}, {"z3", 1}}},
    {"z3", "a1p", {{"a0p", 1}, {"a2p", 2}}, {{"a12", 1}, {"a23", 1}, {"ainfp", 2}}},
};
const std::vector<Step> kFlipC2 = {
    {"a0", "z1", {{"a2", 1}, {"b2", 1}}, {{"b1", 2}, {"a32", 1}}},
    {"ainf", "b1p", {{"a01", 1}, {"a1", 1}}, {{"b1", 1}, {"a30", 1}}},
    {"a1", "z2", {{"a03", 1}, {"b1", 1}, {"a23", 1}}, {{"a2", 1}, {"b1p", 1}}},
    {"a2", "b2p", {{"a03", 1}, {"z1", 1}}, {{"z2", 2}}},
    {"b1", "z3", {{"z1", 1}}, {{"a12", 1}, {"z2", 1}}},
    {"b2", "a2p", {{"a10", 1}, {"a12", 2}, {"a32", 1}}, {{"a21", 1}, {"z1", 1}}},
    {"z1", "ainfp", {{"a2p", 1}, {"b2p", 1}}, {{"a10", 1}, {"z3", 2}}},
    {"z2", "a0p", {{"a23", 1}, {"b2p", 1}}, {{"b1p", 1}, {"z3", 1}}},
    {"z3", "a1p", {{"a0p", 1}, {"a2p", 1}}, {{"a12", 1}, {"a23", 1}, {"ainfp", 1}}},
};
const std::vector<Step> kFlipG2 = {
    {"a0", "z1", {{"a32", 1}, {"b3", 3}}, {{"a4", 1}, {"b4", 1}}},
    {"ainf", "b1p", {{"a01", 1}, {"a1", 1}}, {{"a30", 1}, {"b3", 1}}},
    {"a3", "z2", {{"a2", 1}, {"a23", 1}}, {{"a1", 1}, {"a4", 1}}},
    {"a2", "z3", {{"a03", 1}, {"a4", 2}}, {{"z2", 3}}},
    {"a1", "z4", {{"a03", 1}, {"a23", 1}, {"b3", 1}}, {{"b1p", 1}, {"z2", 1}}},
    {"z2", "z5", {{"b3", 1}, {"z3", 1}}, {{"a4", 1}, {"z4", 1}}},
    {"a4", "z6", {{"z1", 1}, {"z3", 1}}, {{"z5", 3}}},
    {"z3", "b2p", {{"z4", 3}}, {{"a03", 1}, {"z6", 1}}},
    {"b3", "z7", {{"z1", 1}}, {{"b1", 1}, {"z5", 1}}},
    {"b4", "z8", {{"b1", 3}, {"a32", 1}}, {{"b2", 1}, {"z1", 1}}},
    {"b2", "a4p", {{"a10", 1}, {"a12", 3}, {"a32", 1}}, {{"a21", 1}, {"z8", 1}}},
    {"z1", "z9", {{"z7", 3}}, {{"z6", 1}, {"z8", 1}}},
    {"z5", "z10", {{"z6", 1}}, {{"z4", 1}, {"z7", 1}}},
    {"z4", "b3p", {{"a23", 1}, {"b2p", 1}}, {{"b1p", 1}, {"z10", 1}}},
    {"z6", "b4p", {{"z10", 3}}, {{"b2p", 1}, {"z9", 1}}},
    {"b1", "z11", {{"a12", 1}, {"z7", 1}}, {{"z8", 1}}},
    {"z7", "z12", {{"z10", 1}, {"z11", 1}}, {{"z9", 1}}},
    {"z8", "z13", {{"a10", 1}, {"z11", 3}}, {{"a4p", 1}, {"z9", 1}}},
    {"z9", "ainfp", {{"a10", 1}, {"z12", 3}}, {{"b4p", 1}, {"z13", 1}}},
    {"z10", "a0p", {{"a23", 1}, {"b4p", 1}}, {{"b3p", 1}, {"z12", 1}}},
    {"z11", "z14", {{"a4p", 1}, {"z12", 1}}, {{"a12", 1}, {"z13", 1}}},
    {"z13", "a2p", {{"a4p", 2}, {"ainfp", 1}}, {{"z14", 3}}},
    {"z12", "a1p", {{"a12", 1}, {"a23", 1}, {"ainfp", 1}}, {{"a0p", 1}, {"z14", 1}}},
    {"z14", "a3p", {{"a23", 1}, {"a2p", 1}}, {{"a1p", 1}, {"a4p", 1}}},
};

// Initial (coordinate name -> vertex) layout for the rotation cascades.
std::map<std::string, std::string> rotLayout(GroupId g) {
    std::map<std::string, std::string> loc;
    const GroupCombinatorics& gc = groupCombinatorics(g);
    for (int i = 1; i <= gc.k; ++i)
        loc["a" + std::to_string(i)] = "v" + std::to_string(i);
    for (auto f : {"a01", "a10", "a12", "a21", "a20", "a02"}) loc[f] = f;
    return loc;
}

// Initial layout for the flip cascades on the 02-glued quiver; names are
// quadrilateral edge/face coordinates.  The bar labels of the bottom copy sit
// on the 180-degree rotated positions, which for G2 crosses the label pairs.
std::map<std::string, std::string> flipLayout(GroupId g) {
    std::map<std::string, std::string> loc;
    const GroupCombinatorics& gc = groupCombinatorics(g);
    std::vector<int> barSlot = g == GroupId::G2 ? std::vector<int>{3, 4, 1, 2}
                                                : std::vector<int>(gc.k);
    if (g != GroupId::G2)
        for (int i = 0; i < gc.k; ++i) barSlot[i] = i + 1;
    for (int i = 1; i <= gc.k; ++i) {
        loc["a" + std::to_string(i)] = "v" + std::to_string(i);
        loc["b" + std::to_string(i)] = "w" + std::to_string(barSlot[i - 1]);
    }
    loc["a0"] = "v0";
    loc["ainf"] = "vinf";
    for (auto& [label, slot] : gc.quadSlots02)
        if (label != "a02" && label != "a20") loc[label] = slot;
    return loc;
}

// Runs a cascade oracle against mutateCoords, checking each exchange
// relation exactly; generic in the field.
template <class F>
void runCascade(const Quiver& q, const std::vector<Step>& steps,
                std::map<std::string, std::string> loc, std::map<std::string, F> val,
                const F& one, const std::function<bool(const F&, const F&)>& eq) {
    SeedAssignment<F> s;
    s.quiver = q;
    for (auto& [name, vtx] : loc) s.values[vtx] = val.at(name);
    REQUIRE(s.values.size() == q.size());
    for (auto& st : steps) {
        std::string vtx = loc.at(st.oldName);
        F plus = one, minus = one;
        for (auto& [n, e] : st.plus) plus = plus * val.at(n).pow(e);
        for (auto& [n, e] : st.minus) minus = minus * val.at(n).pow(e);
        F expected = (plus + minus) / val.at(st.oldName);
        s = mutateCoords(s, vtx, one);
        CHECK_MESSAGE(eq(s.at(vtx), expected), st.newName);
        val[st.newName] = s.at(vtx);
        loc[st.newName] = vtx;
    }
}

std::function<bool(const RF&, const RF&)> rfEq = [](const RF& a, const RF& b) {
    return ratfunEqual(a, b);
};

std::map<std::string, RF> symbols(const std::map<std::string, std::string>& loc) {
    std::map<std::string, RF> val;
    for (auto& [name, vtx] : loc) val[name] = RF::variable(name);
    return val;
}

} // namespace

TEST_CASE("mutateCoords matches the B2 worked example") {
    Quiver q = standardQuiver(GroupId::B2);
    SeedAssignment<RF> s;
    s.quiver = q;
    for (auto& v : q.vertices())
        s.values[v.id] = RF::variable(v.id == "v1" ? "a1" : v.id == "v2" ? "a2" : v.id);
    SeedAssignment<RF> s1 = mutateCoords(s, "v1", kOne);
    RF a1p(Polynomial::parse("a01*a02^2*a12 + a20*a2^2"), Polynomial::parse("a1"));
    CHECK(ratfunEqual(s1.at("v1"), a1p));
    SeedAssignment<RF> s2 = mutateCoords(s1, "v2", kOne);
    RF a2pp(Polynomial::parse("a01*a02^2*a10*a12 + a10*a2^2*a20 + a01*a02*a1*a21"),
            Polynomial::parse("a1*a2"));
    CHECK(ratfunEqual(s2.at("v2"), a2pp));
}

TEST_CASE("double mutation restores coordinates") {
    for (GroupId g : {GroupId::A2, GroupId::B2, GroupId::C2, GroupId::G2}) {
        Quiver q = standardQuiver(g);
        SeedAssignment<RF> s;
        s.quiver = q;
        for (auto& v : q.vertices()) s.values[v.id] = RF::variable(groupName(g) + "_" + v.id);
        for (auto& v : q.vertices()) {
            if (v.frozen) continue;
            SeedAssignment<RF> t = mutateCoords(mutateCoords(s, v.id, kOne), v.id, kOne);
            for (auto& [id, value] : s.values) CHECK(ratfunEqual(t.at(id), value));
        }
    }
}

TEST_CASE("frozen coordinates never change") {
    const GroupCombinatorics& gc = groupCombinatorics(GroupId::C2);
    Quiver q = gluedQuiver(GroupId::C2, "02");
    SeedAssignment<RF> s;
    s.quiver = q;
    for (auto& v : q.vertices()) s.values[v.id] = RF::variable("f_" + v.id);
    SeedAssignment<RF> t = applySequence(s, gc.flipSeq, kOne);
    for (auto& v : q.vertices())
        if (v.frozen) CHECK(ratfunEqual(t.at(v.id), s.at(v.id)));
}

TEST_CASE("rotation cascades (symbolic)") {
    runCascade<RF>(standardQuiver(GroupId::B2), kRotB2, rotLayout(GroupId::B2),
                   symbols(rotLayout(GroupId::B2)), kOne, rfEq);
    runCascade<RF>(standardQuiver(GroupId::C2), kRotC2, rotLayout(GroupId::C2),
                   symbols(rotLayout(GroupId::C2)), kOne, rfEq);
    runCascade<RF>(standardQuiver(GroupId::G2), kRotG2, rotLayout(GroupId::G2),
                   symbols(rotLayout(GroupId::G2)), kOne, rfEq);
}

TEST_CASE("flip cascades (symbolic for A2/B2/C2)") {
    runCascade<RF>(gluedQuiver(GroupId::A2, "02"), kFlipA2, flipLayout(GroupId::A2),
                   symbols(flipLayout(GroupId::A2)), kOne, rfEq);
    runCascade<RF>(gluedQuiver(GroupId::B2, "02"), kFlipB2, flipLayout(GroupId::B2),
                   symbols(flipLayout(GroupId::B2)), kOne, rfEq);
    runCascade<RF>(gluedQuiver(GroupId::C2, "02"), kFlipC2, flipLayout(GroupId::C2),
                   symbols(flipLayout(GroupId::C2)), kOne, rfEq);
}

TEST_CASE("flip cascade for G2 (randomized)") {
    Sampler smp(101);
    auto layout = flipLayout(GroupId::G2);
    for (int trial = 0; trial < 5; ++trial) {
        std::map<std::string, Rational> val;
        for (auto& [name, vtx] : layout) val[name] = smp.next();
        std::function<bool(const Rational&, const Rational&)> eq =
            [](const Rational& a, const Rational& b) { return a == b; };
        runCascade<Rational>(gluedQuiver(GroupId::G2, "02"), kFlipG2, layout, val, Rational(1),
                             eq);
    }
}

TEST_CASE("checkIdentity reports") {
    Quiver q = standardQuiver(GroupId::C2);
    SeedAssignment<RF> s;
    s.quiver = q;
    for (auto& v : q.vertices()) s.values[v.id] = RF::variable("c_" + v.id);
    auto rep = checkIdentity(s, s, rfEq);
    CHECK(rep.pass);
    CHECK(rep.checked == q.size());
    SeedAssignment<RF> t = s;
    t.values["v1"] = -t.values["v1"];
    auto bad = checkIdentity(s, t, rfEq);
    CHECK(!bad.pass);
    REQUIRE(bad.failures.size() == 1);
    CHECK(bad.failures[0] == "v1");
}

TEST_CASE("sl2 ptolemy relation from the middle vertex") {
    // quadrilateral quiver: middle vertex M, frozen corners A,B,C,D with
    // eps(M,A)=eps(M,C)=+1, eps(M,B)=eps(M,D)=-1
    Quiver q(1, {{"M", false, false},
                 {"A", false, true},
                 {"B", false, true},
                 {"C", false, true},
                 {"D", false, true}});
    for (auto [x, sgn] : std::initializer_list<std::pair<const char*, int>>{
             {"A", 1}, {"B", -1}, {"C", 1}, {"D", -1}}) {
        q.setEps2("M", x, 2 * sgn);
        q.setEps2(x, "M", -2 * sgn);
    }
    SeedAssignment<RF> s;
    s.quiver = q;
    s.values["M"] = RF::variable("c02");
    s.values["A"] = -RF::variable("c01");
    s.values["B"] = RF::variable("c12");
    s.values["C"] = RF::variable("c23");
    s.values["D"] = -RF::variable("c03");
    SeedAssignment<RF> t = mutateCoords(s, "M", kOne);
    // c02 * (-c13) = c23*(-c01) + c12*(-c03)
    RF minusC13(Polynomial::parse("-(c01*c23 + c03*c12)"), Polynomial::parse("c02"));
    CHECK(ratfunEqual(t.at("M"), minusC13));
}
