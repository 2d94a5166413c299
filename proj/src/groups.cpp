#include "fg2/groups.hpp"

namespace fg2 {

namespace {

GroupData makeA2() {
    GroupData g;
    g.id = GroupId::A2;
    g.m = 3;
    int c[2][2] = {{2, -1}, {-1, 2}};
    std::copy(&c[0][0], &c[0][0] + 4, &g.cartan[0][0]);
    g.sG[0] = 1;
    g.sG[1] = 1;
    g.sigmaSwap = true;
    g.word = {1, 2, 1};
    g.faceVertex = {1};
    g.vertexMonomial = {{1, -1, 1, 0}};
    g.conjExp = {{2, -1}};
    return g;
}

GroupData makeB2() {
    GroupData g;
    g.id = GroupId::B2;
    g.m = 4;
    int c[2][2] = {{2, -1}, {-2, 2}};
    std::copy(&c[0][0], &c[0][0] + 4, &g.cartan[0][0]);
    g.sG[0] = 1;
    g.sG[1] = -1;
    g.sigmaSwap = false;
    g.word = {1, 2, 1, 2};
    g.faceVertex = {1, 2};
    g.vertexMonomial = {{0, 0, 1, 0}, {1, -1, 0, 1}};
    g.conjExp = {{0, 2}, {-1, 2}};
    return g;
}

GroupData makeC2() {
    GroupData g;
    g.id = GroupId::C2;
    g.m = 4;
    int c[2][2] = {{2, -2}, {-1, 2}};
    std::copy(&c[0][0], &c[0][0] + 4, &g.cartan[0][0]);
    g.sG[0] = -1;
    g.sG[1] = 1;
    g.sigmaSwap = false;
    g.word = {1, 2, 1, 2};
    g.faceVertex = {1, 2};
    g.vertexMonomial = {{0, 0, 1, 0}, {2, -1, 0, 1}};
    g.conjExp = {{0, 1}, {-2, 2}};
    return g;
}

GroupData makeG2() {
    GroupData g;
    g.id = GroupId::G2;
    g.m = 6;
    int c[2][2] = {{2, -3}, {-1, 2}};
    std::copy(&c[0][0], &c[0][0] + 4, &g.cartan[0][0]);
    g.sG[0] = 1;
    g.sG[1] = 1;
    g.sigmaSwap = false;
    g.word = {1, 2, 1, 2, 1, 2};
    g.faceVertex = {1, 2, 3, 4};
    g.vertexMonomial = {{0, 0, 1, 0}, {3, -1, 0, 1}, {1, 0, 1, 0}, {3, -1, 0, 1}};
    g.conjExp = {{0, 1}, {-3, 3}, {-1, 1}, {-3, 2}};
    return g;
}

} // namespace

const GroupData& groupData(GroupId g) {
    static const GroupData a2 = makeA2();
    static const GroupData b2 = makeB2();
    static const GroupData c2 = makeC2();
    static const GroupData g2 = makeG2();
    switch (g) {
        case GroupId::A2: return a2;
        case GroupId::B2: return b2;
        case GroupId::C2: return c2;
        case GroupId::G2: return g2;
    }
    throw UnknownGroup();
}

} // namespace fg2
