#pragma once
#include <cstdint>
#include <vector>
#include "fg2/errors.hpp"

namespace fg2 {

// Dense matrix over GF(2); entries 0/1, acting on column vectors.
struct GF2Matrix {
    size_t rows = 0, cols = 0;
    std::vector<uint8_t> a; // row-major

    GF2Matrix() = default;
    GF2Matrix(size_t r, size_t c) : rows(r), cols(c), a(r * c, 0) {}
    uint8_t& at(size_t i, size_t j) { return a[i * cols + j]; }
    uint8_t at(size_t i, size_t j) const { return a[i * cols + j]; }
};

using GF2Vector = std::vector<uint8_t>;

inline GF2Vector gf2Apply(const GF2Matrix& m, const GF2Vector& v) {
    if (v.size() != m.cols) throw Error("gf2Apply: shape mismatch");
    GF2Vector r(m.rows, 0);
    for (size_t i = 0; i < m.rows; ++i) {
        uint8_t s = 0;
        for (size_t j = 0; j < m.cols; ++j) s ^= (m.at(i, j) & v[j]);
        r[i] = s;
    }
    return r;
}

// Basis of the kernel of m (as column vectors of length m.cols).
inline std::vector<GF2Vector> gf2Kernel(const GF2Matrix& m) {
    size_t R = m.rows, C = m.cols;
    std::vector<GF2Vector> rowsv(R, GF2Vector(C, 0));
    for (size_t i = 0; i < R; ++i)
        for (size_t j = 0; j < C; ++j) rowsv[i][j] = m.at(i, j);
    std::vector<long> pivotOfCol(C, -1);
    size_t rank = 0;
    for (size_t col = 0; col < C && rank < R; ++col) {
        size_t piv = rank;
        while (piv < R && !rowsv[piv][col]) ++piv;
        if (piv == R) continue;
        std::swap(rowsv[piv], rowsv[rank]);
        for (size_t i = 0; i < R; ++i) {
            if (i == rank || !rowsv[i][col]) continue;
            for (size_t j = 0; j < C; ++j) rowsv[i][j] ^= rowsv[rank][j];
        }
        pivotOfCol[col] = static_cast<long>(rank);
        ++rank;
    }
    std::vector<GF2Vector> basis;
    for (size_t col = 0; col < C; ++col) {
        if (pivotOfCol[col] != -1) continue;
        GF2Vector v(C, 0);
        v[col] = 1;
        for (size_t c2 = 0; c2 < C; ++c2) {
            if (pivotOfCol[c2] == -1) continue;
            v[c2] = rowsv[static_cast<size_t>(pivotOfCol[c2])][col];
        }
        basis.push_back(v);
    }
    return basis;
}

// Greedy independent subset of vecs modulo the span of modBasis.
inline std::vector<GF2Vector> gf2IndependentModulo(const std::vector<GF2Vector>& vecs,
                                                   const std::vector<GF2Vector>& modBasis) {
    std::vector<GF2Vector> echelon; // reduced rows with pivot bookkeeping
    std::vector<long> pivots;
    auto insert = [&](GF2Vector v) -> bool {
        for (size_t k = 0; k < echelon.size(); ++k) {
            if (v[static_cast<size_t>(pivots[k])]) {
                for (size_t j = 0; j < v.size(); ++j) v[j] ^= echelon[k][j];
            }
        }
        for (size_t j = 0; j < v.size(); ++j) {
            if (v[j]) {
                echelon.push_back(v);
                pivots.push_back(static_cast<long>(j));
                return true;
            }
        }
        return false;
    };
    for (auto& b : modBasis) insert(b);
    std::vector<GF2Vector> reps;
    for (auto& v : vecs)
        if (insert(v)) reps.push_back(v);
    return reps;
}

struct GF2Cohomology {
    size_t dimension = 0;
    std::vector<GF2Vector> representatives; // one per basis element of ker(d2)/im(d1)
};

// d1: C1 -> C2 and d2: C2 -> C3 with d2*d1 = 0; returns ker(d2)/im(d1).
inline GF2Cohomology gf2Cohomology(const GF2Matrix& d1, const GF2Matrix& d2) {
    if (d1.rows != d2.cols) throw Error("gf2Cohomology: incompatible boundary maps");
    for (size_t j = 0; j < d1.cols; ++j) {
        GF2Vector col(d1.rows, 0);
        for (size_t i = 0; i < d1.rows; ++i) col[i] = d1.at(i, j);
        for (uint8_t b : gf2Apply(d2, col))
            if (b) throw ChainConditionViolated();
    }
    std::vector<GF2Vector> ker = gf2Kernel(d2);
    std::vector<GF2Vector> im;
    for (size_t j = 0; j < d1.cols; ++j) {
        GF2Vector col(d1.rows, 0);
        for (size_t i = 0; i < d1.rows; ++i) col[i] = d1.at(i, j);
        im.push_back(col);
    }
    GF2Cohomology h;
    h.representatives = gf2IndependentModulo(ker, im);
    h.dimension = h.representatives.size();
    return h;
}

} // namespace fg2
