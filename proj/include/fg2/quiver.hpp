#pragma once
#include <map>
#include <optional>
#include <string>
#include <vector>
#include "fg2/errors.hpp"

namespace fg2 {

enum class GroupId { A2, B2, C2, G2 };

GroupId parseGroupId(const std::string& s);
std::string groupName(GroupId g);

// Weighted quiver.  Stores 2*eps to keep half-edges integral; d_i is 1 or
// the weight m (fat).  Duality: eps_ij * d_i = -eps_ji * d_j.
class Quiver {
public:
    struct Vertex {
        std::string id;
        bool fat = false;
        bool frozen = false;
    };

    Quiver() = default;
    Quiver(int weight, std::vector<Vertex> vertices);

    int weight() const { return m_; }
    size_t size() const { return verts_.size(); }
    const std::vector<Vertex>& vertices() const { return verts_; }
    const Vertex& vertex(const std::string& id) const { return verts_[indexOf(id)]; }
    bool hasVertex(const std::string& id) const { return index_.count(id) != 0; }
    size_t indexOf(const std::string& id) const;
    int d(size_t i) const { return verts_[i].fat ? m_ : 1; }
    int d(const std::string& id) const { return d(indexOf(id)); }

    int eps2(size_t i, size_t j) const { return e_[i][j]; }
    int eps2(const std::string& i, const std::string& j) const {
        return e_[indexOf(i)][indexOf(j)];
    }
    void setEps2(const std::string& i, const std::string& j, int v);

    // Structural consistency: duality, integrality away from frozen pairs.
    void validate() const;

    Quiver mutated(const std::string& k) const;

    std::string toJson() const;
    static Quiver fromJson(const std::string& text);

    friend bool operator==(const Quiver& a, const Quiver& b);

private:
    int m_ = 1;
    std::vector<Vertex> verts_;
    std::map<std::string, size_t> index_;
    std::vector<std::vector<int>> e_;
};

using VertexMap = std::map<std::string, std::string>;

// Union of Q and Qp with the frozen vertices listed in phi identified
// pairwise (key from Q, value from Qp).  The identified vertex keeps the
// key's id and becomes mutable; eps entries add.
Quiver glueQuivers(const Quiver& q, const Quiver& qp, const VertexMap& phi);

Quiver standardQuiver(GroupId g);
Quiver gluedQuiver(GroupId g, const std::string& kl); // kl in {"02","13"}

// Graph isomorphism respecting weight, flags and eps; `pinned` entries are
// forced.  Returns a full vertex map or nullopt.
std::optional<VertexMap> quiverIsomorphism(const Quiver& a, const Quiver& b,
                                           const VertexMap& pinned = {});

// Frozen structural data shared by quiver and higher layers.
struct GroupCombinatorics {
    int m;                              // weight
    int k;                              // number of mutable vertices of Q_G
    std::vector<std::string> rotSeq;    // rotation mutation sequence (vertex ids)
    std::vector<std::string> flipSeq;   // flip sequence on the 02-glued quiver
    VertexMap rotIso;                   // mu_rot(Q_G) -> Q_G
    VertexMap flipIso;                  // mu_flip(Q ∪02 Q) -> Q ∪13 Q
    std::vector<int> rotPerm;           // a_i' sits at v_{rotPerm[i-1]}
    std::vector<int> barPerm;           // bottom-copy input b_i sits at w_{barPerm[i-1]}
    bool glueSwap;                      // bottom glued side attaches swapped
    bool zswap;                         // flip iso exchanges v0 and vinf (A2)
    // where each quadrilateral edge coordinate lives in the glued quivers
    VertexMap quadSlots02, quadSlots13;
};

const GroupCombinatorics& groupCombinatorics(GroupId g);

} // namespace fg2
