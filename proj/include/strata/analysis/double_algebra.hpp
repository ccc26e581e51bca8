#pragma once

#include <cmath>
#include <vector>

#include "strata/algebra.hpp"
#include "strata/group.hpp"

namespace strata {

// Double-precision shadow of a GradedLieAlgebra for the numerics layer. All
// structure-theory modules stay exact; only grid-scale evaluation goes
// through this type.
struct DoubleAlgebra {
    int dim = 0;
    int depth = 0;
    std::vector<int> weights;
    std::vector<std::vector<std::vector<std::pair<int, double>>>> table;

    static DoubleAlgebra from(const GradedLieAlgebra& alg) {
        DoubleAlgebra d;
        d.dim = alg.dim;
        d.depth = alg.depth;
        d.weights = alg.weights;
        d.table.assign(alg.dim, std::vector<std::vector<std::pair<int, double>>>(alg.dim));
        for (int i = 0; i < alg.dim; ++i)
            for (int j = 0; j < alg.dim; ++j)
                for (const auto& [k, c] : alg.basis_bracket(i, j))
                    d.table[i][j].emplace_back(k, to_double(c));
        return d;
    }

    void bracket(const double* x, const double* y, double* out) const {
        for (int k = 0; k < dim; ++k) out[k] = 0.0;
        for (int i = 0; i < dim; ++i) {
            if (x[i] == 0.0) continue;
            for (int j = 0; j < dim; ++j) {
                if (y[j] == 0.0) continue;
                const double xy = x[i] * y[j];
                for (const auto& [k, c] : table[i][j]) out[k] += xy * c;
            }
        }
    }

    // ad(x) as a dense column-major-free matrix: m[k*dim + j] = coeff of e_k in [x, e_j]
    void ad(const double* x, double* m) const {
        for (int i = 0; i < dim * dim; ++i) m[i] = 0.0;
        for (int i = 0; i < dim; ++i) {
            if (x[i] == 0.0) continue;
            for (int j = 0; j < dim; ++j)
                for (const auto& [k, c] : table[i][j]) m[k * dim + j] += x[i] * c;
        }
    }
};

// Precompiled Dynkin series for fast repeated BCH evaluation in doubles.
class DoubleBch {
public:
    explicit DoubleBch(const DoubleAlgebra& alg) : alg_(&alg) {
        for (const auto& term : dynkin_table(alg.depth))
            terms_.push_back({term.word, to_double(term.coeff)});
    }

    int dim() const { return alg_->dim; }

    // out = bch(a, b); scratch must hold 2*dim doubles
    void eval(const double* a, const double* b, double* out, double* scratch) const {
        const int m = alg_->dim;
        double* v = scratch;
        double* w = scratch + m;
        for (int k = 0; k < m; ++k) out[k] = 0.0;
        for (const auto& [word, coeff] : terms_) {
            const double* last = word.back() == 0 ? a : b;
            for (int k = 0; k < m; ++k) v[k] = last[k];
            for (int i = static_cast<int>(word.size()) - 2; i >= 0; --i) {
                alg_->bracket(word[i] == 0 ? a : b, v, w);
                std::swap(v, w);
            }
            for (int k = 0; k < m; ++k) out[k] += coeff * v[k];
        }
    }

private:
    const DoubleAlgebra* alg_;
    std::vector<std::pair<std::vector<std::uint8_t>, double>> terms_;
};

// transpose(Ad(exp(-a))) applied to xi, in doubles
inline std::vector<double> coadjoint_d(const DoubleAlgebra& alg, const std::vector<double>& a,
                                       const std::vector<double>& xi) {
    const int m = alg.dim;
    std::vector<double> neg(m);
    for (int i = 0; i < m; ++i) neg[i] = -a[i];
    std::vector<double> adm(m * m), acc(m * m, 0.0), pwr(m * m, 0.0);
    alg.ad(neg.data(), adm.data());
    for (int i = 0; i < m; ++i) acc[i * m + i] = 1.0, pwr[i * m + i] = 1.0;
    double fact = 1.0;
    std::vector<double> tmp(m * m);
    for (int k = 1; k <= alg.depth; ++k) {
        // pwr <- adm * pwr
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                double s = 0.0;
                for (int l = 0; l < m; ++l) s += adm[i * m + l] * pwr[l * m + j];
                tmp[i * m + j] = s;
            }
        pwr.swap(tmp);
        fact *= k;
        for (int i = 0; i < m * m; ++i) acc[i] += pwr[i] / fact;
    }
    std::vector<double> out(m, 0.0);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) out[i] += acc[j * m + i] * xi[j];
    return out;
}

} // namespace strata
