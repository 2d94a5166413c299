#include "fg2/quiver.hpp"

#include <algorithm>
#include <json.hpp>

namespace fg2 {

GroupId parseGroupId(const std::string& s) {
    if (s == "A2") return GroupId::A2;
    if (s == "B2") return GroupId::B2;
    if (s == "C2") return GroupId::C2;
    if (s == "G2") return GroupId::G2;
    throw UnknownGroup("UnknownGroup: " + s);
}

std::string groupName(GroupId g) {
    switch (g) {
        case GroupId::A2: return "A2";
        case GroupId::B2: return "B2";
        case GroupId::C2: return "C2";
        case GroupId::G2: return "G2";
    }
    throw UnknownGroup();
}

Quiver::Quiver(int weight, std::vector<Vertex> vertices)
    : m_(weight), verts_(std::move(vertices)) {
    for (size_t i = 0; i < verts_.size(); ++i) {
        if (!index_.emplace(verts_[i].id, i).second)
            throw Error("Quiver: duplicate vertex id " + verts_[i].id);
    }
    e_.assign(verts_.size(), std::vector<int>(verts_.size(), 0));
}

size_t Quiver::indexOf(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) throw Error("Quiver: unknown vertex " + id);
    return it->second;
}

void Quiver::setEps2(const std::string& i, const std::string& j, int v) {
    e_[indexOf(i)][indexOf(j)] = v;
}

void Quiver::validate() const {
    size_t n = verts_.size();
    for (size_t i = 0; i < n; ++i) {
        if (e_[i][i] != 0) throw Error("Quiver: loop at " + verts_[i].id);
        for (size_t j = 0; j < n; ++j) {
            // eps_ij * d_i = -eps_ji * d_j
            if (e_[i][j] * d(i) != -e_[j][i] * d(j))
                throw Error("Quiver: duality violated at (" + verts_[i].id + "," +
                            verts_[j].id + ")");
            if (e_[i][j] != 0 && e_[i][j] * e_[j][i] > 0)
                throw Error("Quiver: 2-cycle at (" + verts_[i].id + "," + verts_[j].id + ")");
            if ((e_[i][j] & 1) && !(verts_[i].frozen && verts_[j].frozen))
                throw Error("Quiver: half-edge off the frozen boundary");
        }
    }
}

Quiver Quiver::mutated(const std::string& k) const {
    size_t kk = indexOf(k);
    if (verts_[kk].frozen) throw FrozenVertexMutation("FrozenVertexMutation: " + k);
    Quiver r = *this;
    size_t n = verts_.size();
    for (size_t i = 0; i < n; ++i) {
        if (i == kk) continue;
        for (size_t j = 0; j < n; ++j) {
            if (j == kk || i == j) continue;
            long a = e_[i][kk], b = e_[kk][j];
            // eps'_ij = eps_ij + (|eps_ik| eps_kj + eps_ik |eps_kj|)/2, in 2eps units
            long delta = (std::abs(a) * b + a * std::abs(b)) / 4;
            r.e_[i][j] = e_[i][j] + static_cast<int>(delta);
        }
    }
    for (size_t i = 0; i < n; ++i) {
        r.e_[i][kk] = -e_[i][kk];
        r.e_[kk][i] = -e_[kk][i];
    }
    return r;
}

bool operator==(const Quiver& a, const Quiver& b) {
    if (a.m_ != b.m_ || a.verts_.size() != b.verts_.size()) return false;
    for (size_t i = 0; i < a.verts_.size(); ++i) {
        const auto& v = a.verts_[i];
        if (!b.hasVertex(v.id)) return false;
        const auto& w = b.vertex(v.id);
        if (v.fat != w.fat || v.frozen != w.frozen) return false;
    }
    for (size_t i = 0; i < a.verts_.size(); ++i)
        for (size_t j = 0; j < a.verts_.size(); ++j)
            if (a.e_[i][j] != b.eps2(a.verts_[i].id, a.verts_[j].id)) return false;
    return true;
}

std::string Quiver::toJson() const {
    nlohmann::json j;
    j["weight"] = m_;
    j["vertices"] = nlohmann::json::array();
    for (auto& v : verts_)
        j["vertices"].push_back({{"id", v.id}, {"fat", v.fat}, {"frozen", v.frozen}});
    j["epsilonTimes2"] = e_;
    return j.dump(1);
}

Quiver Quiver::fromJson(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    std::vector<Vertex> vs;
    for (auto& v : j.at("vertices"))
        vs.push_back({v.at("id").get<std::string>(), v.at("fat").get<bool>(),
                      v.at("frozen").get<bool>()});
    Quiver q(j.at("weight").get<int>(), std::move(vs));
    auto e = j.at("epsilonTimes2").get<std::vector<std::vector<int>>>();
    if (e.size() != q.size()) throw Error("Quiver::fromJson: shape mismatch");
    for (size_t i = 0; i < q.size(); ++i)
        for (size_t k = 0; k < q.size(); ++k)
            q.e_[i][k] = e[i][k];
    q.validate();
    return q;
}

namespace {

struct EpsEntry {
    const char* i;
    const char* j;
    int v;
};

struct StdData {
    int m;
    int k;
    std::vector<int> dv; // d of v1..vk
    int dfa, dfb;        // d of {a01,a12,a20} and {a10,a21,a02}
    std::vector<EpsEntry> eps;
};

const StdData& stdData(GroupId g) {
    static const StdData a2{
        1, 1, {1}, 1, 1,
        {{"a01", "a02", 2}, {"a01", "a10", 1},  {"a01", "v1", -2}, {"a02", "a20", -1},
         {"a02", "v1", 2},  {"a10", "a12", -2}, {"a10", "v1", 2},  {"a12", "a21", 1},
         {"a12", "v1", -2}, {"a20", "a21", 2},  {"a20", "v1", -2}, {"a21", "v1", 2},
         {"v1", "a01", 2},  {"v1", "a02", -2},  {"v1", "a10", -2}, {"v1", "a12", 2},
         {"v1", "a20", 2},  {"v1", "a21", -2},  {"a02", "a01", -2}, {"a10", "a01", -1},
         {"a12", "a10", 2}, {"a20", "a02", 1},  {"a21", "a12", -1}, {"a21", "a20", -2}}};
    static const StdData b2{
        2, 2, {1, 2}, 1, 2,
        {{"a01", "a10", 2}, {"a01", "a20", 2}, {"a01", "v1", -2}, {"a02", "a20", 1},
         {"a02", "v1", -2}, {"a02", "v2", 2},  {"a10", "a01", -1}, {"a10", "a21", -2},
         {"a10", "v2", 2},  {"a12", "a21", -2}, {"a12", "v1", -2}, {"a12", "v2", 4},
         {"a20", "a01", -2}, {"a20", "a02", -2}, {"a20", "v1", 2}, {"a21", "a10", 2},
         {"a21", "a12", 1}, {"a21", "v2", -2}, {"v1", "a01", 2},  {"v1", "a02", 4},
         {"v1", "a12", 2},  {"v1", "a20", -2}, {"v1", "v2", -4},  {"v2", "a02", -2},
         {"v2", "a10", -2}, {"v2", "a12", -2}, {"v2", "a21", 2},  {"v2", "v1", 2}}};
    static const StdData c2{
        2, 2, {2, 1}, 2, 1,
        {{"a01", "a10", 1}, {"a01", "a20", 2}, {"a01", "v1", -2}, {"a02", "a20", 2},
         {"a02", "v1", -4}, {"a02", "v2", 2},  {"a10", "a01", -2}, {"a10", "a21", -2},
         {"a10", "v2", 2},  {"a12", "a21", -1}, {"a12", "v1", -2}, {"a12", "v2", 2},
         {"a20", "a01", -2}, {"a20", "a02", -1}, {"a20", "v1", 2}, {"a21", "a10", 2},
         {"a21", "a12", 2}, {"a21", "v2", -2}, {"v1", "a01", 2},  {"v1", "a02", 2},
         {"v1", "a12", 2},  {"v1", "a20", -2}, {"v1", "v2", -2},  {"v2", "a02", -2},
         {"v2", "a10", -2}, {"v2", "a12", -4}, {"v2", "a21", 2},  {"v2", "v1", 4}}};
    static const StdData g2{
        3, 4, {3, 1, 3, 1}, 3, 1,
        {{"a01", "a10", 1}, {"a01", "a20", 2}, {"a01", "v1", -2}, {"a02", "a20", 3},
         {"a02", "v1", -6}, {"a02", "v2", 2},  {"a10", "a01", -3}, {"a10", "a21", -2},
         {"a10", "v4", 2},  {"a12", "a21", -1}, {"a12", "v3", -2}, {"a12", "v4", 2},
         {"a20", "a01", -2}, {"a20", "a02", -1}, {"a20", "v1", 2}, {"a21", "a10", 2},
         {"a21", "a12", 3}, {"a21", "v4", -2}, {"v1", "a01", 2},  {"v1", "a02", 2},
         {"v1", "a20", -2}, {"v1", "v2", -2},  {"v1", "v3", 2},   {"v2", "a02", -2},
         {"v2", "v1", 6},   {"v2", "v3", -6},  {"v2", "v4", 2},   {"v3", "a12", 2},
         {"v3", "v1", -2},  {"v3", "v2", 2},   {"v3", "v4", -2},  {"v4", "a10", -2},
         {"v4", "a12", -6}, {"v4", "a21", 2},  {"v4", "v2", -2},  {"v4", "v3", 6}}};
    switch (g) {
        case GroupId::A2: return a2;
        case GroupId::B2: return b2;
        case GroupId::C2: return c2;
        case GroupId::G2: return g2;
    }
    throw UnknownGroup();
}

const std::vector<std::string> kFrozenA = {"a01", "a12", "a20"};
const std::vector<std::string> kFrozenB = {"a10", "a21", "a02"};

} // namespace

Quiver standardQuiver(GroupId g) {
    const StdData& sd = stdData(g);
    std::vector<Quiver::Vertex> vs;
    for (int i = 0; i < sd.k; ++i)
        vs.push_back({"v" + std::to_string(i + 1), sd.dv[i] == sd.m && sd.m > 1, false});
    for (auto& f : kFrozenA) vs.push_back({f, sd.dfa == sd.m && sd.m > 1, true});
    for (auto& f : kFrozenB) vs.push_back({f, sd.dfb == sd.m && sd.m > 1, true});
    Quiver q(sd.m, std::move(vs));
    for (auto& e : sd.eps) q.setEps2(e.i, e.j, e.v);
    q.validate();
    return q;
}

Quiver glueQuivers(const Quiver& q, const Quiver& qp, const VertexMap& phi) {
    if (q.weight() != qp.weight()) throw IncompatibleGlueing("IncompatibleGlueing: weights");
    std::map<std::string, std::string> rename; // qp id -> merged id
    for (auto& v : qp.vertices()) rename[v.id] = v.id;
    for (auto& [a, b] : phi) {
        if (!q.hasVertex(a) || !qp.hasVertex(b)) throw IncompatibleGlueing();
        if (!q.vertex(a).frozen || !qp.vertex(b).frozen)
            throw IncompatibleGlueing("IncompatibleGlueing: non-frozen identification");
        if (q.vertex(a).fat != qp.vertex(b).fat)
            throw IncompatibleGlueing("IncompatibleGlueing: weight mismatch");
        rename[b] = a;
    }
    std::vector<Quiver::Vertex> vs;
    std::map<std::string, bool> glued;
    for (auto& [a, b] : phi) glued[a] = true;
    for (auto& v : q.vertices()) vs.push_back({v.id, v.fat, v.frozen && !glued.count(v.id)});
    for (auto& v : qp.vertices()) {
        if (rename[v.id] != v.id) continue; // identified with a vertex of q
        if (q.hasVertex(v.id)) throw IncompatibleGlueing("IncompatibleGlueing: id clash " + v.id);
        vs.push_back({v.id, v.fat, v.frozen});
    }
    Quiver r(q.weight(), std::move(vs));
    for (auto& vi : q.vertices())
        for (auto& vj : q.vertices())
            r.setEps2(vi.id, vj.id, q.eps2(vi.id, vj.id));
    for (auto& vi : qp.vertices())
        for (auto& vj : qp.vertices()) {
            int cur = r.eps2(rename[vi.id], rename[vj.id]);
            r.setEps2(rename[vi.id], rename[vj.id], cur + qp.eps2(vi.id, vj.id));
        }
    r.validate();
    return r;
}

namespace {

Quiver renamed(const Quiver& q, const VertexMap& map) {
    std::vector<Quiver::Vertex> vs;
    for (auto& v : q.vertices()) {
        auto it = map.find(v.id);
        vs.push_back({it == map.end() ? v.id : it->second, v.fat, v.frozen});
    }
    Quiver r(q.weight(), std::move(vs));
    auto nm = [&](const std::string& id) {
        auto it = map.find(id);
        return it == map.end() ? id : it->second;
    };
    for (auto& vi : q.vertices())
        for (auto& vj : q.vertices()) r.setEps2(nm(vi.id), nm(vj.id), q.eps2(vi.id, vj.id));
    return r;
}

} // namespace

Quiver gluedQuiver(GroupId g, const std::string& kl) {
    if (kl != "02" && kl != "13") throw Error("gluedQuiver: kl must be 02 or 13");
    const GroupCombinatorics& gc = groupCombinatorics(g);
    Quiver q = standardQuiver(g);

    VertexMap topMap, botMap;
    for (int i = 1; i <= gc.k; ++i) botMap["v" + std::to_string(i)] = "w" + std::to_string(i);
    // top copy: glue along side 01 (for the 02 split) or side 02 (for 13)
    std::string tg1 = (kl == "02") ? "a01" : "a02";
    std::string tg2 = (kl == "02") ? "a10" : "a20";
    for (auto& f : {"a01", "a10", "a12", "a21", "a20", "a02"}) {
        if (f == tg1) topMap[f] = "vinf";
        else if (f == tg2) topMap[f] = "v0";
        else topMap[f] = std::string("t") + (f + 1);
    }
    // bottom copy: glue along side 02 (for the 02 split) or side 12 (for 13)
    std::string bg1 = (kl == "02") ? "a02" : "a12"; // -> v0 when swapped
    std::string bg2 = (kl == "02") ? "a20" : "a21"; // -> vinf when swapped
    for (auto& f : {"a01", "a10", "a12", "a21", "a20", "a02"}) {
        if (f == bg1) botMap[f] = gc.glueSwap ? "v0" : "vinf";
        else if (f == bg2) botMap[f] = gc.glueSwap ? "vinf" : "v0";
        else botMap[f] = std::string("b") + (f + 1);
    }

    Quiver top = renamed(q, topMap), bot = renamed(q, botMap);
    // merge: shared ids are v0/vinf, which become mutable
    std::vector<Quiver::Vertex> vs;
    for (auto& v : top.vertices())
        vs.push_back({v.id, v.fat, v.frozen && v.id != "v0" && v.id != "vinf"});
    for (auto& v : bot.vertices())
        if (!top.hasVertex(v.id)) vs.push_back({v.id, v.fat, v.frozen});
        else if (top.vertex(v.id).fat != v.fat)
            throw IncompatibleGlueing("IncompatibleGlueing: weight mismatch at " + v.id);
    Quiver r(q.weight(), std::move(vs));
    for (auto& vi : top.vertices())
        for (auto& vj : top.vertices()) r.setEps2(vi.id, vj.id, top.eps2(vi.id, vj.id));
    for (auto& vi : bot.vertices())
        for (auto& vj : bot.vertices()) {
            int cur = r.eps2(vi.id, vj.id);
            r.setEps2(vi.id, vj.id, cur + bot.eps2(vi.id, vj.id));
        }
    r.validate();
    return r;
}

std::optional<VertexMap> quiverIsomorphism(const Quiver& a, const Quiver& b,
                                           const VertexMap& pinned) {
    if (a.weight() != b.weight() || a.size() != b.size()) return std::nullopt;
    size_t n = a.size();

    auto signature = [](const Quiver& q, size_t i) {
        std::vector<int> row, col;
        for (size_t j = 0; j < q.size(); ++j) {
            row.push_back(q.eps2(i, j));
            col.push_back(q.eps2(j, i));
        }
        std::sort(row.begin(), row.end());
        std::sort(col.begin(), col.end());
        return std::make_tuple(q.vertices()[i].fat, q.vertices()[i].frozen, row, col);
    };
    std::vector<std::vector<size_t>> cand(n);
    for (size_t i = 0; i < n; ++i) {
        auto sa = signature(a, i);
        for (size_t j = 0; j < n; ++j)
            if (sa == signature(b, j)) cand[i].push_back(j);
        if (cand[i].empty()) return std::nullopt;
    }
    for (auto& [x, y] : pinned) {
        size_t i = a.indexOf(x), j = b.indexOf(y);
        if (std::find(cand[i].begin(), cand[i].end(), j) == cand[i].end())
            return std::nullopt;
        cand[i] = {j};
    }
    std::vector<size_t> order(n);
    for (size_t i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](size_t x, size_t y) { return cand[x].size() < cand[y].size(); });

    std::vector<long> img(n, -1);
    std::vector<bool> used(n, false);
    auto dfs = [&](auto&& self, size_t pos) -> bool {
        if (pos == n) return true;
        size_t i = order[pos];
        for (size_t j : cand[i]) {
            if (used[j]) continue;
            bool ok = true;
            for (size_t p = 0; p < pos && ok; ++p) {
                size_t i2 = order[p], j2 = static_cast<size_t>(img[i2]);
                if (a.eps2(i, i2) != b.eps2(j, j2) || a.eps2(i2, i) != b.eps2(j2, j)) ok = false;
            }
            if (!ok) continue;
            img[i] = static_cast<long>(j);
            used[j] = true;
            if (self(self, pos + 1)) return true;
            img[i] = -1;
            used[j] = false;
        }
        return false;
    };
    if (!dfs(dfs, 0)) return std::nullopt;
    VertexMap out;
    for (size_t i = 0; i < n; ++i) out[a.vertices()[i].id] = b.vertices()[img[i]].id;
    return out;
}

const GroupCombinatorics& groupCombinatorics(GroupId g) {
    auto make = [](GroupId gg) {
        GroupCombinatorics c;
        const StdData& sd = stdData(gg);
        c.m = sd.m;
        c.k = sd.k;
        switch (gg) {
            case GroupId::A2:
                c.rotSeq = {};
                c.flipSeq = {"v0", "vinf", "v1", "w1"};
                c.rotPerm = {1};
                c.barPerm = {1};
                c.glueSwap = false;
                c.zswap = true;
                c.flipIso = {{"v0", "v1"},  {"v1", "v0"},  {"vinf", "w1"}, {"w1", "vinf"},
                             {"t02", "b02"}, {"t20", "b20"}, {"t12", "t12"}, {"t21", "t21"},
                             {"b01", "b01"}, {"b10", "b10"}, {"b12", "t01"}, {"b21", "t10"}};
                c.quadSlots02 = {{"a23", "t02"}, {"a32", "t20"}, {"a30", "t21"}, {"a03", "t12"},
                                 {"a12", "b10"}, {"a21", "b01"}, {"a01", "b21"}, {"a10", "b12"},
                                 {"a02", "vinf"}, {"a20", "v0"}};
                c.quadSlots13 = {{"a23", "t10"}, {"a32", "t01"}, {"a12", "t21"}, {"a21", "t12"},
                                 {"a30", "b10"}, {"a03", "b01"}, {"a01", "b02"}, {"a10", "b20"},
                                 {"a13", "vinf"}, {"a31", "v0"}};
                break;
            case GroupId::B2:
            case GroupId::C2:
                c.rotSeq = {"v1", "v2"};
                c.flipSeq = {"v0", "vinf", "v1", "v2", "w1", "w2", "v0", "v1", "w1"};
                c.rotPerm = {1, 2};
                c.barPerm = {1, 2};
                c.glueSwap = true;
                c.zswap = false;
                c.flipIso = {{"v0", "vinf"}, {"v1", "v0"},  {"w1", "v1"},  {"vinf", "w1"},
                             {"v2", "w2"},   {"w2", "v2"},  {"t20", "b20"}, {"t02", "b02"},
                             {"t12", "t12"}, {"t21", "t21"}, {"b01", "b01"}, {"b10", "b10"},
                             {"b12", "t01"}, {"b21", "t10"}};
                break;
            case GroupId::G2:
                c.rotSeq = {"v1", "v2", "v3", "v1", "v4", "v2"};
                c.flipSeq = {"v0", "vinf", "v3", "v2", "v1", "v3", "v4", "v2",
                             "w1", "w2", "w4", "v0", "v3", "v1", "v4", "w3",
                             "w1", "w2", "v0", "v3", "w3", "w2", "w1", "w3"};
                c.rotPerm = {3, 4, 1, 2};
                c.barPerm = {1, 2, 3, 4};
                c.glueSwap = true;
                c.zswap = false;
                c.flipIso = {{"vinf", "w1"}, {"v2", "w2"},  {"w4", "v4"},  {"v1", "w3"},
                             {"v4", "w4"},   {"v0", "vinf"}, {"v3", "v0"}, {"w2", "v2"},
                             {"w1", "v1"},   {"w3", "v3"},  {"t20", "b20"}, {"t02", "b02"},
                             {"t12", "t12"}, {"t21", "t21"}, {"b01", "b01"}, {"b10", "b10"},
                             {"b12", "t01"}, {"b21", "t10"}};
                break;
        }
        if (gg != GroupId::A2) {
            c.quadSlots02 = {{"a30", "t20"}, {"a03", "t02"}, {"a23", "t12"}, {"a32", "t21"},
                             {"a01", "b01"}, {"a10", "b10"}, {"a12", "b12"}, {"a21", "b21"},
                             {"a02", "vinf"}, {"a20", "v0"}};
            c.quadSlots13 = {{"a12", "t01"}, {"a21", "t10"}, {"a23", "t12"}, {"a32", "t21"},
                             {"a01", "b01"}, {"a10", "b10"}, {"a30", "b20"}, {"a03", "b02"},
                             {"a13", "vinf"}, {"a31", "v0"}};
        }
        // rotation iso mu_rot(Q) -> Q: frozen labels advance cyclically,
        // mutable vertices by the (involutive) rotation permutation
        c.rotIso = {{"a01", "a12"}, {"a12", "a20"}, {"a20", "a01"},
                    {"a10", "a21"}, {"a21", "a02"}, {"a02", "a10"}};
        for (int i = 1; i <= c.k; ++i)
            c.rotIso["v" + std::to_string(i)] = "v" + std::to_string(c.rotPerm[i - 1]);
        return c;
    };
    static const GroupCombinatorics a2 = make(GroupId::A2);
    static const GroupCombinatorics b2 = make(GroupId::B2);
    static const GroupCombinatorics c2 = make(GroupId::C2);
    static const GroupCombinatorics g2 = make(GroupId::G2);
    switch (g) {
        case GroupId::A2: return a2;
        case GroupId::B2: return b2;
        case GroupId::C2: return c2;
        case GroupId::G2: return g2;
    }
    throw UnknownGroup();
}

} // namespace fg2
