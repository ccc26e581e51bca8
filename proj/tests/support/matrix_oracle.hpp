#pragma once

// Independent BCH oracle: hand-supplied faithful upper/lower triangular
// matrix representations of the fixture algebras, with exp and log computed
// as terminating series in exact rational arithmetic. Test-only; nothing here
// touches the Dynkin-series implementation it is checking.

#include <functional>

#include "strata/algebra.hpp"
#include "strata/linalg.hpp"

namespace oracle {

using strata::GradedLieAlgebra;
using strata::RatMatrix;
using strata::Rational;
using strata::RatVec;

inline RatMatrix mat_exp(const RatMatrix& n, int nil_index) {
    RatMatrix acc = RatMatrix::identity(n.rows);
    RatMatrix pwr = RatMatrix::identity(n.rows);
    Rational fact(1);
    for (int k = 1; k <= nil_index; ++k) {
        pwr = pwr * n;
        fact *= k;
        for (int i = 0; i < n.rows; ++i)
            for (int j = 0; j < n.cols; ++j) acc.at(i, j) += pwr.at(i, j) / fact;
    }
    return acc;
}

inline RatMatrix mat_log(const RatMatrix& g, int nil_index) {
    RatMatrix p = g;
    for (int i = 0; i < g.rows; ++i) p.at(i, i) -= 1;
    RatMatrix acc(g.rows, g.cols);
    RatMatrix pwr = RatMatrix::identity(g.rows);
    for (int k = 1; k <= nil_index; ++k) {
        pwr = pwr * p;
        const Rational c = Rational(k % 2 == 1 ? 1 : -1) / Rational(k);
        for (int i = 0; i < g.rows; ++i)
            for (int j = 0; j < g.cols; ++j) acc.at(i, j) += c * pwr.at(i, j);
    }
    return acc;
}

struct FaithfulRep {
    int size = 0;
    int nil_index = 0;
    std::vector<RatMatrix> images;                  // per internal basis index
    std::function<RatVec(const RatMatrix&)> readout; // inverse of embed on the image

    RatMatrix embed(const RatVec& coords) const {
        RatMatrix m(size, size);
        for (size_t b = 0; b < images.size(); ++b) {
            if (coords[b] == 0) continue;
            for (int i = 0; i < size; ++i)
                for (int j = 0; j < size; ++j) m.at(i, j) += coords[b] * images[b].at(i, j);
        }
        return m;
    }

    // log(exp(a) exp(b)) read back into algebra coordinates
    RatVec bch(const RatVec& a, const RatVec& b) const {
        const RatMatrix g = mat_exp(embed(a), nil_index) * mat_exp(embed(b), nil_index);
        return readout(mat_log(g, nil_index));
    }
};

// H3 as strictly upper triangular 3x3: X -> E12, Y -> E23, Z -> E13.
inline FaithfulRep h3_rep(const GradedLieAlgebra& alg) {
    FaithfulRep rep;
    rep.size = 3;
    rep.nil_index = 2;
    rep.images.assign(alg.dim, RatMatrix(3, 3));
    rep.images[alg.label_index("X")].at(0, 1) = 1;
    rep.images[alg.label_index("Y")].at(1, 2) = 1;
    rep.images[alg.label_index("Z")].at(0, 2) = 1;
    const int ix = alg.label_index("X"), iy = alg.label_index("Y"), iz = alg.label_index("Z");
    rep.readout = [ix, iy, iz](const RatMatrix& m) {
        RatVec v(3, Rational(0));
        v[ix] = m.at(0, 1);
        v[iy] = m.at(1, 2);
        v[iz] = m.at(0, 2);
        return v;
    };
    return rep;
}

// Depth-4 filiform algebra [X,Y] = Z, [X,Z] = T, [X,T] = U as the affine
// action of R on R^4, shift chain Y -> Z -> T -> U.
inline FaithfulRep filiform5_rep(const GradedLieAlgebra& alg) {
    FaithfulRep rep;
    rep.size = 5;
    rep.nil_index = 4;
    rep.images.assign(alg.dim, RatMatrix(5, 5));
    auto& mx = rep.images[alg.label_index("X")];
    mx.at(1, 0) = 1;
    mx.at(2, 1) = 1;
    mx.at(3, 2) = 1;
    rep.images[alg.label_index("Y")].at(0, 4) = 1;
    rep.images[alg.label_index("Z")].at(1, 4) = 1;
    rep.images[alg.label_index("T")].at(2, 4) = 1;
    rep.images[alg.label_index("U")].at(3, 4) = 1;
    const int ix = alg.label_index("X"), iy = alg.label_index("Y");
    const int iz = alg.label_index("Z"), it = alg.label_index("T"), iu = alg.label_index("U");
    rep.readout = [ix, iy, iz, it, iu](const RatMatrix& m) {
        RatVec v(5, Rational(0));
        v[ix] = m.at(1, 0);
        v[iy] = m.at(0, 4);
        v[iz] = m.at(1, 4);
        v[it] = m.at(2, 4);
        v[iu] = m.at(3, 4);
        return v;
    };
    return rep;
}

// Engel as the affine action of R on R^3 = span(Y, Z, T):
// X -> E21 + E32 (the shift Y -> Z -> T), Y -> E14, Z -> E24, T -> E34.
inline FaithfulRep engel_rep(const GradedLieAlgebra& alg) {
    FaithfulRep rep;
    rep.size = 4;
    rep.nil_index = 3;
    rep.images.assign(alg.dim, RatMatrix(4, 4));
    auto& mx = rep.images[alg.label_index("X")];
    mx.at(1, 0) = 1;
    mx.at(2, 1) = 1;
    rep.images[alg.label_index("Y")].at(0, 3) = 1;
    rep.images[alg.label_index("Z")].at(1, 3) = 1;
    rep.images[alg.label_index("T")].at(2, 3) = 1;
    const int ix = alg.label_index("X"), iy = alg.label_index("Y");
    const int iz = alg.label_index("Z"), it = alg.label_index("T");
    rep.readout = [ix, iy, iz, it](const RatMatrix& m) {
        RatVec v(4, Rational(0));
        v[ix] = m.at(1, 0);
        v[iy] = m.at(0, 3);
        v[iz] = m.at(1, 3);
        v[it] = m.at(2, 3);
        return v;
    };
    return rep;
}

} // namespace oracle
