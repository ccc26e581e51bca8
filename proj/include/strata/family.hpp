#pragma once

#include <string>
#include <vector>

#include "strata/algebra.hpp"
#include "strata/polynomial.hpp"

namespace strata {

// One-parameter family of graded algebras: structure constants are
// polynomials in t over a closed rational interval. The grading data is
// shared by every fiber; identities hold as polynomial identities, so each
// rational t in the domain evaluates to a valid GradedLieAlgebra.
struct AlgebraFamily {
    std::string name;
    std::string param = "t";
    Rational lo, hi;
    std::vector<std::string> labels; // user order
    std::vector<int> weights;        // user order
    std::vector<std::vector<SparseVecT<Polynomial>>> table; // user-order indices

    bool contains(const Rational& t) const { return lo <= t && t <= hi; }
};

struct FamilySpec {
    std::string name;
    std::string param = "t";
    Rational lo, hi;
    std::vector<std::string> labels;
    std::vector<int> weights;
    struct Bracket {
        int lhs = 0;
        int rhs = 0;
        SparseVecT<Polynomial> value;
    };
    std::vector<Bracket> brackets;
};

inline AlgebraFamily build_family(const FamilySpec& spec) {
    const int m = static_cast<int>(spec.weights.size());
    if (m == 0) throw ParseError("family needs at least one generator");
    if (spec.lo > spec.hi) throw ParseError("empty family parameter domain");

    AlgebraFamily fam;
    fam.name = spec.name;
    fam.param = spec.param;
    fam.lo = spec.lo;
    fam.hi = spec.hi;
    fam.labels = spec.labels;
    fam.weights = spec.weights;
    fam.table.assign(m, std::vector<SparseVecT<Polynomial>>(m));

    std::vector<std::vector<bool>> given(m, std::vector<bool>(m, false));
    for (const auto& br : spec.brackets) {
        if (br.lhs < 0 || br.lhs >= m || br.rhs < 0 || br.rhs >= m)
            throw ParseError("bracket index out of range");
        std::vector<Polynomial> dense(m);
        for (const auto& [k, p] : br.value) {
            if (k < 0 || k >= m) throw ParseError("bracket target index out of range");
            dense[k] += p;
        }
        if (given[br.lhs][br.rhs])
            for (const auto& [k, p] : fam.table[br.lhs][br.rhs]) dense[k] += p;
        SparseVecT<Polynomial> sparse;
        for (int k = 0; k < m; ++k)
            if (!dense[k].is_zero()) sparse.emplace_back(k, dense[k]);
        fam.table[br.lhs][br.rhs] = std::move(sparse);
        given[br.lhs][br.rhs] = true;
    }
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (given[i][j] && !given[j][i]) {
                SparseVecT<Polynomial> neg = fam.table[i][j];
                for (auto& [k, p] : neg) p = -p;
                fam.table[j][i] = std::move(neg);
                given[j][i] = true;
            }

    validate_structure<Polynomial>(m, fam.weights, fam.labels, fam.table);
    return fam;
}

inline GradedLieAlgebra evaluate_family(const AlgebraFamily& fam, const Rational& t) {
    if (!fam.contains(t))
        throw OutOfDomain("family parameter " + to_string(t) + " outside [" + to_string(fam.lo) +
                          ", " + to_string(fam.hi) + "]");
    AlgebraSpec spec;
    spec.name = fam.name + "@" + fam.param + "=" + to_string(t);
    spec.labels = fam.labels;
    spec.weights = fam.weights;
    const int m = static_cast<int>(fam.weights.size());
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            if (fam.table[i][j].empty()) continue;
            AlgebraSpec::Bracket br;
            br.lhs = i;
            br.rhs = j;
            for (const auto& [k, p] : fam.table[i][j]) {
                const Rational c = p.evaluate(t);
                if (c != 0) br.value.emplace_back(k, c);
            }
            spec.brackets.push_back(std::move(br));
        }
    return build_algebra(spec);
}

} // namespace strata
