#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "strata/algebra.hpp"

namespace strata {

// Group element of the simply connected group, in exponential coordinates of
// the first kind: g = exp(sum coords_i e_i), internal basis order.
struct GroupElement {
    RatVec coords;
};

inline GroupElement group_identity(const GradedLieAlgebra& alg) {
    return GroupElement{RatVec(alg.dim, Rational(0))};
}

inline GroupElement exp_of(const GradedLieAlgebra& alg, const Vec& a) {
    check_primal(alg, a, "exp");
    return GroupElement{a.c};
}

// One Dynkin term: a word over {0 = first argument, 1 = second argument}
// evaluated as the right-nested bracket [w1,[w2,[...,w_len]]].
struct DynkinTerm {
    std::vector<std::uint8_t> word;
    Rational coeff;
};
using DynkinTable = std::vector<DynkinTerm>;

namespace detail {

inline Rational factorial(int n) {
    Rational f(1);
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// Dynkin's explicit series for log(exp X exp Y): sum over block sequences
// (r_1,s_1),...,(r_n,s_n), each block nonzero, of
//   (-1)^{n-1}/n * [X^{r_1}Y^{s_1}...X^{r_n}Y^{s_n}] / (|w| * prod r_i! s_i!).
// Words longer than the depth are dropped: every bracket raises the weight,
// so they vanish in any algebra of that depth.
inline DynkinTable compute_dynkin(int depth) {
    std::map<std::vector<std::uint8_t>, Rational> acc;
    std::vector<std::uint8_t> word;

    auto recurse = [&](auto&& self, int nblocks, const Rational& inv_fact) -> void {
        if (!word.empty()) {
            const Rational sign = (nblocks % 2 == 1) ? Rational(1) : Rational(-1);
            acc[word] += sign / Rational(nblocks) * inv_fact / Rational(static_cast<int>(word.size()));
        }
        const int room = depth - static_cast<int>(word.size());
        for (int a = 0; a <= room; ++a)
            for (int b = (a == 0 ? 1 : 0); a + b <= room; ++b) {
                for (int t = 0; t < a; ++t) word.push_back(0);
                for (int t = 0; t < b; ++t) word.push_back(1);
                self(self, nblocks + 1, inv_fact / (factorial(a) * factorial(b)));
                word.resize(word.size() - a - b);
            }
    };
    recurse(recurse, 0, Rational(1));

    DynkinTable table;
    for (auto& [w, c] : acc)
        if (c != 0) table.push_back(DynkinTerm{w, c});
    return table;
}

} // namespace detail

// Coefficients depend only on the truncation depth; computed once and cached.
inline const DynkinTable& dynkin_table(int depth) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<DynkinTable>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[depth];
    if (!slot) slot = std::make_unique<DynkinTable>(detail::compute_dynkin(depth));
    return *slot;
}

// Baker-Campbell-Hausdorff product in exponential coordinates. Exact; the
// series terminates at the algebra depth.
inline Vec bch(const GradedLieAlgebra& alg, const Vec& a, const Vec& b) {
    check_primal(alg, a, "bch");
    check_primal(alg, b, "bch");
    const DynkinTable& table = dynkin_table(alg.depth);
    RatVec out(alg.dim, Rational(0));
    for (const auto& term : table) {
        RatVec v = term.word.back() == 0 ? a.c : b.c;
        for (int i = static_cast<int>(term.word.size()) - 2; i >= 0; --i) {
            v = alg.bracket_coords(term.word[i] == 0 ? a.c : b.c, v);
            if (is_zero(v)) break;
        }
        for (int k = 0; k < alg.dim; ++k)
            if (v[k] != 0) out[k] += term.coeff * v[k];
    }
    return primal(std::move(out));
}

inline GroupElement group_product(const GradedLieAlgebra& alg, const GroupElement& g,
                                  const GroupElement& h) {
    return GroupElement{bch(alg, primal(g.coords), primal(h.coords)).c};
}

inline GroupElement group_inverse(const GroupElement& g) {
    GroupElement inv = g;
    for (auto& x : inv.coords) x = -x;
    return inv;
}

// Square matrix with frame bookkeeping (Ad maps primal to primal, its
// transpose acts dual to dual).
struct LinearMap {
    RatMatrix m;
    Frame from = Frame::primal;
    Frame to = Frame::primal;
};

// Ad(exp a) = sum_{k <= depth} ad(a)^k / k!, a unipotent matrix.
inline LinearMap adjoint_of_exp(const GradedLieAlgebra& alg, const Vec& a) {
    check_primal(alg, a, "adjoint_of_exp");
    const RatMatrix ada = alg.ad(a.c);
    RatMatrix result = RatMatrix::identity(alg.dim);
    RatMatrix power = RatMatrix::identity(alg.dim);
    for (int k = 1; k <= alg.depth; ++k) {
        power = ada * power;
        const Rational inv_kfact = Rational(1) / detail::factorial(k);
        bool all_zero = true;
        for (int i = 0; i < alg.dim; ++i)
            for (int j = 0; j < alg.dim; ++j)
                if (power.at(i, j) != 0) {
                    result.at(i, j) += inv_kfact * power.at(i, j);
                    all_zero = false;
                }
        if (all_zero) break;
    }
    return LinearMap{std::move(result), Frame::primal, Frame::primal};
}

// xi . Ad(g^{-1}): the transpose of Ad(exp(-a)) applied to the dual point.
inline Vec coadjoint(const GradedLieAlgebra& alg, const GroupElement& g, const Vec& xi) {
    check_dual(alg, xi, "coadjoint");
    RatVec neg = g.coords;
    for (auto& x : neg) x = -x;
    const LinearMap ad = adjoint_of_exp(alg, primal(std::move(neg)));
    return dual(ad.m.transposed().apply(xi.c));
}

} // namespace strata
