#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "strata/algebra.hpp"
#include "strata/group.hpp"
#include "strata/rng.hpp"
#include "strata/threads.hpp"

namespace strata {

// Jump-index tuple (J^1,...,J^m): J^k records which flag directions j <= k
// leave F_{j-1} + g_k(xi). Sets hold 1-based internal basis indices.
struct StratumSignature {
    std::vector<std::vector<int>> sets;

    bool operator==(const StratumSignature& o) const { return sets == o.sets; }
    bool all_empty() const {
        for (const auto& s : sets)
            if (!s.empty()) return false;
        return true;
    }
};

// Stratum order: scan k from m down to 1; earlier stratum has the larger
// |J^k|, ties broken by the lexicographically smaller sorted index list.
// This is a documented convention; only the induced partition is contractual.
inline int signature_cmp(const StratumSignature& a, const StratumSignature& b) {
    const int m = static_cast<int>(a.sets.size());
    for (int k = m - 1; k >= 0; --k) {
        const auto& x = a.sets[k];
        const auto& y = b.sets[k];
        if (x.size() != y.size()) return x.size() > y.size() ? -1 : 1;
        if (x != y) return x < y ? -1 : 1;
    }
    return 0;
}

struct SignatureBefore {
    bool operator()(const StratumSignature& a, const StratumSignature& b) const {
        return signature_cmp(a, b) < 0;
    }
};

inline std::string signature_str(const StratumSignature& sig) {
    std::string s = "(";
    for (size_t k = 0; k < sig.sets.size(); ++k) {
        if (k) s += ", ";
        if (sig.sets[k].empty()) {
            s += "{}";
            continue;
        }
        s += "{";
        for (size_t i = 0; i < sig.sets[k].size(); ++i) {
            if (i) s += ",";
            s += std::to_string(sig.sets[k][i]);
        }
        s += "}";
    }
    return s + ")";
}

// Skew form B_xi(x, y) = <xi, [x, y]> restricted to the flag ideal spanned by
// the first k basis vectors.
inline RatMatrix skew_form(const GradedLieAlgebra& alg, const RatVec& xi, int k) {
    RatMatrix s(k, k);
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b) {
            Rational v(0);
            for (const auto& [c, coef] : alg.basis_bracket(a, b))
                if (xi[c] != 0) v += coef * xi[c];
            if (v != 0) {
                s.at(a, b) = v;
                s.at(b, a) = -v;
            }
        }
    return s;
}

// Exact basis of g_k(xi) = radical of B_xi on the flag ideal F_k, returned as
// primal vectors of the full algebra (coordinates beyond k vanish).
inline std::vector<Vec> radical(const GradedLieAlgebra& alg, const Vec& xi, int k) {
    check_dual(alg, xi, "radical");
    if (k < 1 || k > alg.dim) throw DimensionMismatch("radical: flag index out of range");
    const auto kernel = kernel_basis(skew_form(alg, xi.c, k));
    std::vector<Vec> out;
    out.reserve(kernel.size());
    for (const auto& v : kernel) {
        RatVec full(alg.dim, Rational(0));
        for (int i = 0; i < k; ++i) full[i] = v[i];
        out.push_back(primal(std::move(full)));
    }
    return out;
}

inline int radical_dim(const GradedLieAlgebra& alg, const Vec& xi, int k) {
    check_dual(alg, xi, "radical_dim");
    return k - rank(skew_form(alg, xi.c, k));
}

// dim of the coadjoint orbit through xi: m - dim g_m(xi). Always even, the
// skew form has even rank.
inline int orbit_dimension(const GradedLieAlgebra& alg, const Vec& xi) {
    return alg.dim - radical_dim(alg, xi, alg.dim);
}

// The definition, decided by exact rank tests: j lies in J^k iff e_j is not
// in span(e_1..e_{j-1}) + g_k(xi). Quotienting by the leading coordinates
// reduces each test to a rank comparison on trailing columns.
inline StratumSignature jump_indices(const GradedLieAlgebra& alg, const Vec& xi) {
    check_dual(alg, xi, "jump_indices");
    const int m = alg.dim;
    StratumSignature sig;
    sig.sets.resize(m);
    for (int k = 1; k <= m; ++k) {
        const auto rad = kernel_basis(skew_form(alg, xi.c, k));
        const int rdim = static_cast<int>(rad.size());
        for (int j = 1; j <= k; ++j) {
            // columns j..k of the radical, i.e. the image modulo F_{j-1}
            RatMatrix sub(rdim, k - j + 1);
            for (int r = 0; r < rdim; ++r)
                for (int c = j - 1; c < k; ++c) sub.at(r, c - (j - 1)) = rad[r][c];
            const int r0 = rank(sub);
            RatMatrix ext(rdim + 1, k - j + 1);
            ext.a.assign(sub.a.begin(), sub.a.end());
            ext.a.resize(static_cast<size_t>(rdim + 1) * (k - j + 1), Rational(0));
            ext.at(rdim, 0) = 1; // e_j modulo F_{j-1}
            if (rank(ext) > r0) sig.sets[k - 1].push_back(j);
        }
    }
    return sig;
}

struct StratumTable {
    struct Entry {
        StratumSignature signature;
        RatVec representative; // internal dual coordinates
        std::int64_t samples = 0;
        int orbit_dim = 0;
    };
    std::vector<Entry> entries; // in stratum order
    std::int64_t origin_samples = 0;
    std::int64_t total_samples = 0;
    std::uint64_t seed = 0;
    std::int64_t height = 0;

    std::optional<int> index_of(const StratumSignature& sig) const {
        for (size_t i = 0; i < entries.size(); ++i)
            if (entries[i].signature == sig) return static_cast<int>(i) + 1;
        return std::nullopt;
    }
};

struct Classification {
    StratumSignature signature;
    bool origin = false;         // xi = 0 is excluded from the stratification
    std::optional<int> stratum;  // 1-based position in the table, if known
    int orbit_dim = 0;
};

inline Classification classify(const GradedLieAlgebra& alg, const Vec& xi,
                               const StratumTable* table = nullptr) {
    check_dual(alg, xi, "classify");
    Classification out;
    out.signature = jump_indices(alg, xi);
    out.orbit_dim = orbit_dimension(alg, xi);
    if (is_zero(xi.c)) {
        out.origin = true;
        return out;
    }
    if (table) {
        out.stratum = table->index_of(out.signature);
        if (!out.stratum)
            throw UnknownSignature("signature " + signature_str(out.signature) +
                                   " not present in the supplied stratum table (under-sampled "
                                   "enumeration)");
    }
    return out;
}

// Deterministic probe points: coordinate axes plus all 0/1 patterns (the
// latter only while 2^m stays small). These hit every stratum of the fixture
// algebras without relying on the random samples.
inline std::vector<RatVec> structured_probes(int dim) {
    std::vector<RatVec> probes;
    for (int i = 0; i < dim; ++i) {
        RatVec v(dim, Rational(0));
        v[i] = 1;
        probes.push_back(std::move(v));
    }
    if (dim <= 16) {
        for (std::uint32_t mask = 1; mask < (1u << dim); ++mask) {
            std::uint32_t bits = mask;
            if ((bits & (bits - 1)) == 0) continue; // axes already listed
            RatVec v(dim, Rational(0));
            for (int i = 0; i < dim; ++i)
                if (mask & (1u << i)) v[i] = 1;
            probes.push_back(std::move(v));
        }
    }
    return probes;
}

// Classifies seeded random rational points plus the structured probes and
// aggregates distinct signatures in stratum order. Sampling is a lower bound
// on the true stratum count; deterministic given the seed.
inline StratumTable enumerate_strata(const GradedLieAlgebra& alg, std::int64_t samples,
                                     std::uint64_t seed, std::int64_t height = 10) {
    if (samples < 1) throw OutOfDomain("enumerate_strata: samples must be >= 1");
    if (height < 1) throw OutOfDomain("enumerate_strata: height must be >= 1");

    std::vector<RatVec> points = structured_probes(alg.dim);
    SeededRng rng(seed);
    for (std::int64_t s = 0; s < samples; ++s)
        points.push_back(rng.nonzero_rational_vector(alg.dim, height));

    std::vector<StratumSignature> sigs(points.size());
    parallel_for(static_cast<std::int64_t>(points.size()), [&](std::int64_t i) {
        sigs[i] = jump_indices(alg, dual(points[i]));
    });

    StratumTable table;
    table.seed = seed;
    table.height = height;
    table.total_samples = static_cast<std::int64_t>(points.size());
    std::map<StratumSignature, StratumTable::Entry, SignatureBefore> agg;
    for (size_t i = 0; i < points.size(); ++i) {
        if (is_zero(points[i])) {
            ++table.origin_samples;
            continue;
        }
        auto it = agg.find(sigs[i]);
        if (it == agg.end()) {
            StratumTable::Entry e;
            e.signature = sigs[i];
            e.representative = points[i];
            e.samples = 1;
            e.orbit_dim = orbit_dimension(alg, dual(points[i]));
            agg.emplace(sigs[i], std::move(e));
        } else {
            ++it->second.samples;
        }
    }
    for (auto& [sig, entry] : agg) table.entries.push_back(std::move(entry));
    return table;
}

// n coadjoint translates of xi by seeded random group elements. Every output
// carries the signature of xi (signatures are constant along orbits).
inline std::vector<Vec> orbit_sample(const GradedLieAlgebra& alg, const Vec& xi, std::int64_t n,
                                     std::uint64_t seed, std::int64_t height = 10) {
    check_dual(alg, xi, "orbit_sample");
    if (n < 1) throw OutOfDomain("orbit_sample: need n >= 1");
    SeededRng rng(seed);
    std::vector<Vec> out;
    out.reserve(n);
    for (std::int64_t i = 0; i < n; ++i) {
        const GroupElement g{rng.rational_vector(alg.dim, height)};
        out.push_back(coadjoint(alg, g, xi));
    }
    return out;
}

} // namespace strata
