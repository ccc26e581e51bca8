#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "strata/errors.hpp"
#include "strata/linalg.hpp"
#include "strata/rational.hpp"

namespace strata {

enum class Frame { primal, dual };

// Coordinate vector in the internal (descending-weight) basis of an algebra,
// tagged with the frame it lives in.
struct Vec {
    Frame frame = Frame::primal;
    RatVec c;
};

inline Vec primal(RatVec coords) { return Vec{Frame::primal, std::move(coords)}; }
inline Vec dual(RatVec coords) { return Vec{Frame::dual, std::move(coords)}; }

template <class T>
using SparseVecT = std::vector<std::pair<int, T>>;

template <class T>
inline std::string coeff_str(const T& c) {
    return c.str();
}
template <>
inline std::string coeff_str<Rational>(const Rational& c) {
    return to_string(c);
}

// Structure-constant identities over any exact coefficient ring (rationals
// for a single algebra, polynomials for a one-parameter family). The table
// must hold both orientations of every bracket. Throws ValidationError with
// the first violated identity, a witness triple and the nonzero residual.
template <class T>
void validate_structure(int dim, const std::vector<int>& weights,
                        const std::vector<std::string>& labels,
                        const std::vector<std::vector<SparseVecT<T>>>& table) {
    const T zero{};
    auto dense = [&](const SparseVecT<T>& s) {
        std::vector<T> v(dim, zero);
        for (const auto& [k, c] : s) v[k] = c;
        return v;
    };

    // antisymmetry, including the diagonal
    for (int i = 0; i < dim; ++i) {
        for (int j = i; j < dim; ++j) {
            const auto lhs = dense(table[i][j]);
            const auto rhs = dense(table[j][i]);
            for (int k = 0; k < dim; ++k) {
                const T res = lhs[k] + rhs[k];
                if (!(res == zero))
                    throw ValidationError(Identity::antisymmetry, labels[i], labels[j], labels[k],
                                          coeff_str(res));
            }
        }
    }

    // graded bracket: c(i,j,k) != 0 forces q_k = q_i + q_j
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            for (const auto& [k, c] : table[i][j]) {
                if (c == zero) continue;
                if (weights[k] != weights[i] + weights[j])
                    throw ValidationError(Identity::graded, labels[i], labels[j], labels[k],
                                          coeff_str(c));
            }

    // Jacobi on basis triples, via sparse accumulation
    auto bracket_basis_vec = [&](int i, const std::vector<T>& v) {
        std::vector<T> out(dim, zero);
        for (int j = 0; j < dim; ++j) {
            if (v[j] == zero) continue;
            for (const auto& [k, c] : table[i][j]) out[k] = out[k] + v[j] * c;
        }
        return out;
    };
    for (int i = 0; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j)
            for (int l = j + 1; l < dim; ++l) {
                std::vector<T> acc = bracket_basis_vec(i, dense(table[j][l]));
                const auto t1 = bracket_basis_vec(j, dense(table[l][i]));
                const auto t2 = bracket_basis_vec(l, dense(table[i][j]));
                for (int k = 0; k < dim; ++k) {
                    const T res = acc[k] + t1[k] + t2[k];
                    if (!(res == zero))
                        throw ValidationError(Identity::jacobi, labels[i], labels[j], labels[l],
                                              coeff_str(res));
                }
            }
}

// Raw algebra description in the order the user wrote it down.
struct AlgebraSpec {
    std::string name;
    std::vector<std::string> labels;
    std::vector<int> weights;
    struct Bracket {
        int lhs = 0;
        int rhs = 0;
        SparseVec value; // coordinates in user order
    };
    std::vector<Bracket> brackets;
};

// Graded nilpotent Lie algebra over the rationals. The basis is stored in
// descending weight order (ties keep input order), so the spans of basis
// prefixes form a chain of ideals: brackets strictly raise weight, hence land
// in earlier basis directions. This is the Jordan-Holder convention every
// stratification routine relies on.
struct GradedLieAlgebra {
    std::string name;
    int dim = 0;
    int depth = 0;
    std::vector<int> weights;              // internal order, non-increasing
    std::vector<std::string> labels;       // internal order
    std::vector<int> user_of_internal;     // internal index -> user position
    std::vector<int> internal_of_user;     // user position -> internal index
    std::vector<std::vector<SparseVec>> table; // [i][j] -> coords of [e_i, e_j]

    const SparseVec& basis_bracket(int i, int j) const { return table[i][j]; }

    RatVec bracket_coords(const RatVec& x, const RatVec& y) const {
        RatVec out(dim, Rational(0));
        for (int i = 0; i < dim; ++i) {
            if (x[i] == 0) continue;
            for (int j = 0; j < dim; ++j) {
                if (y[j] == 0) continue;
                for (const auto& [k, c] : table[i][j]) out[k] += x[i] * y[j] * c;
            }
        }
        return out;
    }

    // ad(x) as a matrix: column j is [x, e_j]
    RatMatrix ad(const RatVec& x) const {
        RatMatrix m(dim, dim);
        for (int i = 0; i < dim; ++i) {
            if (x[i] == 0) continue;
            for (int j = 0; j < dim; ++j)
                for (const auto& [k, c] : table[i][j]) m.at(k, j) += x[i] * c;
        }
        return m;
    }

    RatVec user_to_internal(const RatVec& u) const {
        if (static_cast<int>(u.size()) != dim) throw DimensionMismatch("coordinate count != dim");
        RatVec v(dim);
        for (int i = 0; i < dim; ++i) v[i] = u[user_of_internal[i]];
        return v;
    }

    RatVec internal_to_user(const RatVec& v) const {
        if (static_cast<int>(v.size()) != dim) throw DimensionMismatch("coordinate count != dim");
        RatVec u(dim);
        for (int i = 0; i < dim; ++i) u[user_of_internal[i]] = v[i];
        return u;
    }

    int label_index(const std::string& label) const {
        for (int i = 0; i < dim; ++i)
            if (labels[i] == label) return i;
        throw ParseError("unknown basis label '" + label + "'");
    }

    // contiguous internal index ranges [begin, end) per weight, heaviest first
    std::vector<std::pair<int, int>> weight_blocks() const {
        std::vector<std::pair<int, int>> blocks;
        int start = 0;
        for (int i = 1; i <= dim; ++i)
            if (i == dim || weights[i] != weights[start]) {
                blocks.emplace_back(start, i);
                start = i;
            }
        return blocks;
    }
};

// Sorts the basis to descending weight, completes the bracket table by
// antisymmetry and validates every identity exactly.
inline GradedLieAlgebra build_algebra(const AlgebraSpec& spec) {
    const int m = static_cast<int>(spec.weights.size());
    if (m == 0) throw ParseError("algebra needs at least one generator");
    if (spec.labels.size() != spec.weights.size())
        throw ParseError("one label per basis vector");
    for (int w : spec.weights)
        if (w < 1) throw ParseError("weights must be positive integers");
    for (size_t i = 0; i < spec.labels.size(); ++i)
        for (size_t j = i + 1; j < spec.labels.size(); ++j)
            if (spec.labels[i] == spec.labels[j])
                throw ParseError("duplicate basis label '" + spec.labels[i] + "'");

    GradedLieAlgebra alg;
    alg.name = spec.name;
    alg.dim = m;

    std::vector<int> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return spec.weights[a] > spec.weights[b]; });
    alg.user_of_internal = order;
    alg.internal_of_user.assign(m, 0);
    for (int i = 0; i < m; ++i) alg.internal_of_user[order[i]] = i;

    alg.weights.resize(m);
    alg.labels.resize(m);
    for (int i = 0; i < m; ++i) {
        alg.weights[i] = spec.weights[order[i]];
        alg.labels[i] = spec.labels[order[i]];
    }
    alg.depth = *std::max_element(alg.weights.begin(), alg.weights.end());

    alg.table.assign(m, std::vector<SparseVec>(m));
    std::vector<std::vector<bool>> given(m, std::vector<bool>(m, false));
    for (const auto& br : spec.brackets) {
        if (br.lhs < 0 || br.lhs >= m || br.rhs < 0 || br.rhs >= m)
            throw ParseError("bracket index out of range");
        const int i = alg.internal_of_user[br.lhs];
        const int j = alg.internal_of_user[br.rhs];
        RatVec dense(m, Rational(0));
        for (const auto& [uk, c] : br.value) {
            if (uk < 0 || uk >= m) throw ParseError("bracket target index out of range");
            dense[alg.internal_of_user[uk]] += c;
        }
        if (given[i][j]) axpy(dense, Rational(1), alg.table[i][j]);
        alg.table[i][j] = to_sparse(dense);
        given[i][j] = true;
    }
    // derive the unstated orientation; stated pairs are checked by validation
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (given[i][j] && !given[j][i]) {
                SparseVec neg = alg.table[i][j];
                for (auto& [k, c] : neg) c = -c;
                alg.table[j][i] = std::move(neg);
                given[j][i] = true;
            }

    validate_structure<Rational>(m, alg.weights, alg.labels, alg.table);
    return alg;
}

inline void check_primal(const GradedLieAlgebra& alg, const Vec& v, const char* what) {
    if (v.frame != Frame::primal) throw FrameMismatch(std::string(what) + ": expected primal vector");
    if (static_cast<int>(v.c.size()) != alg.dim)
        throw DimensionMismatch(std::string(what) + ": coordinate count != dim");
}

inline void check_dual(const GradedLieAlgebra& alg, const Vec& v, const char* what) {
    if (v.frame != Frame::dual) throw FrameMismatch(std::string(what) + ": expected dual point");
    if (static_cast<int>(v.c.size()) != alg.dim)
        throw DimensionMismatch(std::string(what) + ": coordinate count != dim");
}

inline Vec bracket(const GradedLieAlgebra& alg, const Vec& a, const Vec& b) {
    check_primal(alg, a, "bracket");
    check_primal(alg, b, "bracket");
    return primal(alg.bracket_coords(a.c, b.c));
}

// delta_lambda on either frame: coordinate i scales by lambda^{q_i}. The dual
// action is the transpose of the primal one, and the transpose of a diagonal
// map has the same diagonal.
inline Vec dilate(const GradedLieAlgebra& alg, const Rational& lambda, const Vec& v) {
    if (lambda <= 0) throw NonpositiveScale("dilation scale must be positive");
    if (static_cast<int>(v.c.size()) != alg.dim)
        throw DimensionMismatch("dilate: coordinate count != dim");
    Vec out = v;
    for (int i = 0; i < alg.dim; ++i)
        if (out.c[i] != 0) out.c[i] *= pow_rational(lambda, alg.weights[i]);
    return out;
}

inline long homogeneous_dimension(const GradedLieAlgebra& alg) {
    long q = 0;
    for (int w : alg.weights) q += w;
    return q;
}

} // namespace strata
