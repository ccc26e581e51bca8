#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "strata/algebra.hpp"
#include "strata/linalg.hpp"
#include "strata/rng.hpp"
#include "strata/stratification.hpp"
#include "strata/threads.hpp"

namespace strata {

// Node of a Hall word: a generator leaf or a bracket of two earlier words.
struct HallTree {
    int gen = -1; // >= 0 for leaves
    int left = -1;
    int right = -1;
    int weight = 0;
    bool is_leaf() const { return gen >= 0; }
};

// Free graded Lie algebra on weighted generators, truncated at the given
// depth, presented by a classical Hall family. The basis order is fixed:
// weight first, then generators before composites, then recursive subtree
// comparison. Determinism of this order is what the tests rely on; any Hall
// family would span the same algebra.
struct HallBasis {
    std::vector<std::string> gen_labels;
    std::vector<int> gen_weights;
    int depth = 0;

    std::vector<HallTree> arena;
    std::vector<int> elements;           // arena ids, ascending weight
    std::vector<int> generator_elements; // generator -> position in elements

    GradedLieAlgebra algebra;            // descending-weight presentation
    std::vector<int> internal_of_element;
    std::vector<int> element_of_internal;
};

namespace hall_detail {

inline int cmp_tree(const std::vector<HallTree>& arena, int a, int b) {
    const HallTree& x = arena[a];
    const HallTree& y = arena[b];
    if (x.weight != y.weight) return x.weight < y.weight ? -1 : 1;
    if (x.is_leaf() != y.is_leaf()) return x.is_leaf() ? -1 : 1;
    if (x.is_leaf()) return x.gen == y.gen ? 0 : (x.gen < y.gen ? -1 : 1);
    if (int c = cmp_tree(arena, x.left, y.left)) return c;
    return cmp_tree(arena, x.right, y.right);
}

inline std::string render_tree(const std::vector<HallTree>& arena,
                               const std::vector<std::string>& gen_labels, int id) {
    const HallTree& t = arena[id];
    if (t.is_leaf()) return gen_labels[t.gen];
    return "[" + render_tree(arena, gen_labels, t.left) + "," +
           render_tree(arena, gen_labels, t.right) + "]";
}

using Word = std::vector<int>;
using WordPoly = std::map<Word, Rational>;

inline WordPoly word_mul(const WordPoly& a, const WordPoly& b) {
    WordPoly out;
    for (const auto& [wa, ca] : a)
        for (const auto& [wb, cb] : b) {
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            out[w] += ca * cb;
        }
    return out;
}

inline WordPoly word_sub(WordPoly a, const WordPoly& b) {
    for (const auto& [w, c] : b) a[w] -= c;
    for (auto it = a.begin(); it != a.end();)
        it = (it->second == 0) ? a.erase(it) : std::next(it);
    return a;
}

// Expansion of a Hall word in the free associative algebra on the generators;
// brackets become commutators. Hall elements are linearly independent there,
// which turns "rewrite a bracket in the Hall basis" into exact linear algebra.
inline const WordPoly& expansion(const std::vector<HallTree>& arena, int id,
                                 std::vector<std::optional<WordPoly>>& memo) {
    if (memo[id]) return *memo[id];
    const HallTree& t = arena[id];
    WordPoly p;
    if (t.is_leaf()) {
        p[Word{t.gen}] = 1;
    } else {
        const WordPoly& l = expansion(arena, t.left, memo);
        const WordPoly& r = expansion(arena, t.right, memo);
        p = word_sub(word_mul(l, r), word_mul(r, l));
    }
    memo[id] = std::move(p);
    return *memo[id];
}

} // namespace hall_detail

inline HallBasis hall_basis(const std::vector<int>& gen_weights, int depth,
                            std::vector<std::string> gen_labels = {}) {
    using namespace hall_detail;
    const int ngen = static_cast<int>(gen_weights.size());
    if (ngen == 0) throw ParseError("hall_basis: need at least one generator");
    for (int w : gen_weights)
        if (w < 1) throw ParseError("hall_basis: generator weights must be positive");
    if (depth < *std::max_element(gen_weights.begin(), gen_weights.end()))
        throw OutOfDomain("hall_basis: depth below the largest generator weight");
    if (gen_labels.empty()) {
        for (int i = 0; i < ngen; ++i) gen_labels.push_back("x" + std::to_string(i + 1));
    }
    if (static_cast<int>(gen_labels.size()) != ngen)
        throw ParseError("hall_basis: one label per generator");
    for (int i = 0; i < ngen; ++i)
        for (int j = i + 1; j < ngen; ++j)
            if (gen_labels[i] == gen_labels[j])
                throw ParseError("hall_basis: duplicate generator label '" + gen_labels[i] + "'");

    HallBasis hb;
    hb.gen_labels = gen_labels;
    hb.gen_weights = gen_weights;
    hb.depth = depth;

    std::vector<int> gen_arena(ngen, -1);
    for (int w = 1; w <= depth; ++w) {
        std::vector<int> block;
        for (int g = 0; g < ngen; ++g)
            if (gen_weights[g] == w) {
                hb.arena.push_back(HallTree{g, -1, -1, w});
                gen_arena[g] = static_cast<int>(hb.arena.size()) - 1;
                block.push_back(gen_arena[g]);
            }
        // Hall condition for [u, v]: u > v, and when u = [x, y], y <= v.
        const size_t prior = hb.elements.size();
        for (size_t iu = 0; iu < prior; ++iu)
            for (size_t iv = 0; iv < prior; ++iv) {
                const int u = hb.elements[iu];
                const int v = hb.elements[iv];
                if (hb.arena[u].weight + hb.arena[v].weight != w) continue;
                if (cmp_tree(hb.arena, u, v) <= 0) continue;
                if (!hb.arena[u].is_leaf() && cmp_tree(hb.arena, hb.arena[u].right, v) > 0)
                    continue;
                hb.arena.push_back(HallTree{-1, u, v, w});
                block.push_back(static_cast<int>(hb.arena.size()) - 1);
            }
        std::sort(block.begin(), block.end(),
                  [&](int a, int b) { return cmp_tree(hb.arena, a, b) < 0; });
        hb.elements.insert(hb.elements.end(), block.begin(), block.end());
    }

    hb.generator_elements.assign(ngen, -1);
    for (size_t pos = 0; pos < hb.elements.size(); ++pos) {
        const HallTree& t = hb.arena[hb.elements[pos]];
        if (t.is_leaf()) hb.generator_elements[t.gen] = static_cast<int>(pos);
    }

    // associative expansions, grouped by weight for the rewriting solves
    std::vector<std::optional<WordPoly>> memo(hb.arena.size());
    const int nel = static_cast<int>(hb.elements.size());
    struct WeightData {
        std::vector<int> positions;  // element positions of this weight
        std::map<Word, int> word_row;
        RatMatrix m; // rows = words, cols = positions
    };
    std::map<int, WeightData> per_weight;
    for (int pos = 0; pos < nel; ++pos)
        per_weight[hb.arena[hb.elements[pos]].weight].positions.push_back(pos);
    for (auto& [w, wd] : per_weight) {
        for (int pos : wd.positions)
            for (const auto& [word, c] : expansion(hb.arena, hb.elements[pos], memo))
                wd.word_row.emplace(word, 0);
        int r = 0;
        for (auto& [word, row] : wd.word_row) row = r++;
        wd.m = RatMatrix(r, static_cast<int>(wd.positions.size()));
        for (size_t col = 0; col < wd.positions.size(); ++col)
            for (const auto& [word, c] : expansion(hb.arena, hb.elements[wd.positions[col]], memo))
                wd.m.at(wd.word_row.at(word), static_cast<int>(col)) = c;
    }

    AlgebraSpec spec;
    spec.name = "free";
    for (int pos = 0; pos < nel; ++pos) {
        spec.labels.push_back(render_tree(hb.arena, gen_labels, hb.elements[pos]));
        spec.weights.push_back(hb.arena[hb.elements[pos]].weight);
    }
    for (int a = 0; a < nel; ++a)
        for (int b = a + 1; b < nel; ++b) {
            const int w = hb.arena[hb.elements[a]].weight + hb.arena[hb.elements[b]].weight;
            if (w > depth) continue; // truncation: bracket vanishes
            const WordPoly& ea = expansion(hb.arena, hb.elements[a], memo);
            const WordPoly& eb = expansion(hb.arena, hb.elements[b], memo);
            const WordPoly comm = word_sub(word_mul(ea, eb), word_mul(eb, ea));
            if (comm.empty()) continue;
            WeightData& wd = per_weight.at(w);
            RatVec rhs(wd.m.rows, Rational(0));
            for (const auto& [word, c] : comm) {
                auto it = wd.word_row.find(word);
                if (it == wd.word_row.end())
                    throw Error("hall rewriting: commutator leaves the Hall span");
                rhs[it->second] = c;
            }
            auto x = solve(wd.m, rhs);
            if (!x) throw Error("hall rewriting: inconsistent solve");
            AlgebraSpec::Bracket br;
            br.lhs = a;
            br.rhs = b;
            for (size_t col = 0; col < wd.positions.size(); ++col)
                if ((*x)[col] != 0) br.value.emplace_back(wd.positions[col], (*x)[col]);
            if (!br.value.empty()) spec.brackets.push_back(std::move(br));
        }

    hb.algebra = build_algebra(spec); // re-validates antisymmetry/Jacobi/graded
    // element positions are the user order fed to build_algebra
    hb.internal_of_element = hb.algebra.internal_of_user;
    hb.element_of_internal = hb.algebra.user_of_internal;
    return hb;
}

// Graded surjection f -> g with the Jordan-Holder bases aligned: the source
// basis is reordered so that within each weight block the phi-preimages of
// the target basis vectors come first (in target order) and a kernel basis
// follows. Z_{u(j)} maps exactly to the j-th target basis vector.
struct GradedSurjection {
    GradedLieAlgebra target;
    GradedLieAlgebra source;      // reordered free algebra
    RatMatrix phi;                // target.dim x source.dim, reordered basis
    std::vector<int> u;           // 1-based: u[j-1] = position of X_j's preimage
    int kernel_dim = 0;
    RatMatrix phi_hall;           // phi on the Hall-internal basis
    RatMatrix basis_change;       // reordered basis vectors in Hall-internal coords
};

inline GradedSurjection canonical_surjection(const HallBasis& hall, const GradedLieAlgebra& target,
                                             const std::vector<Vec>& images) {
    const int ngen = static_cast<int>(hall.gen_weights.size());
    if (static_cast<int>(images.size()) != ngen)
        throw DimensionMismatch("canonical_surjection: one image per generator");
    for (int g = 0; g < ngen; ++g) {
        check_primal(target, images[g], "canonical_surjection image");
        for (int i = 0; i < target.dim; ++i)
            if (images[g].c[i] != 0 && target.weights[i] != hall.gen_weights[g])
                throw WeightMismatch("image of generator '" + hall.gen_labels[g] +
                                     "' is not homogeneous of weight " +
                                     std::to_string(hall.gen_weights[g]));
    }

    const GradedLieAlgebra& src = hall.algebra;
    const int M = src.dim;
    const int m = target.dim;

    // phi on Hall elements by structural recursion
    std::vector<std::optional<RatVec>> phi_of_element(hall.elements.size());
    auto phi_elem = [&](auto&& self, int pos) -> const RatVec& {
        if (phi_of_element[pos]) return *phi_of_element[pos];
        const HallTree& t = hall.arena[hall.elements[pos]];
        RatVec v;
        if (t.is_leaf()) {
            v = images[t.gen].c;
        } else {
            // children of a Hall element are Hall elements; find their positions
            const auto find_pos = [&](int arena_id) {
                for (size_t p = 0; p < hall.elements.size(); ++p)
                    if (hall.elements[p] == arena_id) return static_cast<int>(p);
                throw Error("canonical_surjection: dangling Hall subtree");
            };
            const RatVec& l = self(self, find_pos(t.left));
            const RatVec& r = self(self, find_pos(t.right));
            v = target.bracket_coords(l, r);
        }
        phi_of_element[pos] = std::move(v);
        return *phi_of_element[pos];
    };

    RatMatrix phi_hall(m, M);
    for (int s = 0; s < M; ++s) {
        const RatVec& v = phi_elem(phi_elem, hall.element_of_internal[s]);
        for (int i = 0; i < m; ++i) phi_hall.at(i, s) = v[i];
    }

    if (rank(phi_hall) != m)
        throw NotGenerating("images do not generate the target algebra");

    // homomorphism identity on every source basis pair, exact
    for (int a = 0; a < M; ++a)
        for (int b = a + 1; b < M; ++b) {
            RatVec lhs(m, Rational(0));
            for (const auto& [k, c] : src.basis_bracket(a, b))
                for (int i = 0; i < m; ++i) lhs[i] += c * phi_hall.at(i, k);
            RatVec xa(m), xb(m);
            for (int i = 0; i < m; ++i) {
                xa[i] = phi_hall.at(i, a);
                xb[i] = phi_hall.at(i, b);
            }
            if (lhs != target.bracket_coords(xa, xb))
                throw Error("canonical_surjection: homomorphism identity failed");
        }

    // Jordan-Holder alignment, block by block (weights descend in both)
    GradedSurjection out;
    out.target = target;
    out.phi_hall = phi_hall;
    out.u.assign(m, 0);

    std::vector<RatVec> new_basis; // in Hall-internal coordinates
    std::vector<int> new_weights;
    std::vector<std::string> new_labels;
    int kernel_count = 0;

    const int wmax = std::max(src.weights[0], target.weights[0]);
    for (int w = wmax; w >= 1; --w) {
        std::vector<int> scols, trows;
        for (int s = 0; s < M; ++s)
            if (src.weights[s] == w) scols.push_back(s);
        for (int t = 0; t < m; ++t)
            if (target.weights[t] == w) trows.push_back(t);
        if (scols.empty()) {
            if (!trows.empty())
                throw NotGenerating("target has weight-" + std::to_string(w) +
                                    " directions outside the image");
            continue;
        }
        RatMatrix a(static_cast<int>(trows.size()), static_cast<int>(scols.size()));
        for (size_t r = 0; r < trows.size(); ++r)
            for (size_t c = 0; c < scols.size(); ++c) a.at(static_cast<int>(r), static_cast<int>(c)) = phi_hall.at(trows[r], scols[c]);
        for (size_t r = 0; r < trows.size(); ++r) {
            RatVec e(trows.size(), Rational(0));
            e[r] = 1;
            auto x = solve(a, e);
            if (!x) throw NotGenerating("no homogeneous preimage for target basis vector");
            RatVec full(M, Rational(0));
            for (size_t c = 0; c < scols.size(); ++c) full[scols[c]] = (*x)[c];
            out.u[trows[r]] = static_cast<int>(new_basis.size()) + 1;
            new_basis.push_back(std::move(full));
            new_weights.push_back(w);
            new_labels.push_back("p_" + target.labels[trows[r]]);
        }
        for (const auto& kv : kernel_basis(a)) {
            RatVec full(M, Rational(0));
            for (size_t c = 0; c < scols.size(); ++c) full[scols[c]] = kv[c];
            new_basis.push_back(std::move(full));
            new_weights.push_back(w);
            new_labels.push_back("k" + std::to_string(++kernel_count));
        }
    }
    if (static_cast<int>(new_basis.size()) != M)
        throw Error("canonical_surjection: reordered basis has wrong size");
    out.kernel_dim = kernel_count;

    RatMatrix p(M, M);
    for (int col = 0; col < M; ++col)
        for (int row = 0; row < M; ++row) p.at(row, col) = new_basis[col][row];
    auto p_inv = inverse(p);
    if (!p_inv) throw Error("canonical_surjection: basis change is singular");
    out.basis_change = p;

    // structure constants of the reordered source
    AlgebraSpec rspec;
    rspec.name = src.name + "-aligned";
    rspec.labels = new_labels;
    rspec.weights = new_weights;
    for (int a = 0; a < M; ++a)
        for (int b = a + 1; b < M; ++b) {
            const RatVec br = src.bracket_coords(new_basis[a], new_basis[b]);
            if (is_zero(br)) continue;
            const RatVec coords = p_inv->apply(br);
            AlgebraSpec::Bracket entry;
            entry.lhs = a;
            entry.rhs = b;
            entry.value = to_sparse(coords);
            rspec.brackets.push_back(std::move(entry));
        }
    out.source = build_algebra(rspec);
    // new basis is already weight-descending, so user order == internal order
    for (int i = 0; i < M; ++i)
        if (out.source.internal_of_user[i] != i)
            throw Error("canonical_surjection: unexpected basis resort");

    out.phi = phi_hall * p;
    return out;
}

// Convention required by the transfer formula; violations mean the supplied
// surjection was not built (or rebuilt) with aligned bases.
inline void validate_surjection(const GradedSurjection& surj) {
    const int m = surj.target.dim;
    const int M = surj.source.dim;
    if (surj.phi.rows != m || surj.phi.cols != M)
        throw ConventionMismatch("phi has wrong shape");
    std::vector<bool> is_preimage(M, false);
    int prev = 0;
    for (int j = 0; j < m; ++j) {
        const int uj = surj.u[j];
        if (uj <= prev || uj > M)
            throw ConventionMismatch("u is not strictly increasing into the source basis");
        prev = uj;
        is_preimage[uj - 1] = true;
        if (surj.source.weights[uj - 1] != surj.target.weights[j])
            throw ConventionMismatch("u misaligns weights");
    }
    for (int s = 0; s < M; ++s)
        for (int i = 0; i < m; ++i) {
            const Rational expected = is_preimage[s] && surj.u[i] == s + 1 ? 1 : 0;
            if (surj.phi.at(i, s) != expected)
                throw ConventionMismatch(
                    "phi does not send preimage vectors to basis vectors and kernel vectors to 0");
        }
}

struct TransferCheck {
    struct PerFlag {
        int k = 0;
        int kbar = 0; // 0 when no valid index exists ("vacuous")
        std::vector<int> lhs;
        std::vector<int> rhs;
        bool vacuous = false;
        bool ok = true;
    };
    StratumSignature source_signature;
    StratumSignature target_signature;
    std::vector<PerFlag> flags;
    int violations = 0;
    bool all_ok() const { return violations == 0; }
};

// Verifies J^k_{t phi(xi)} = u(J^{kbar}_xi) for every flag index k of the
// source. Indices k below u(1) have no valid kbar; both sides are empty there
// and the row is flagged vacuous rather than asserted through the formula.
inline TransferCheck transfer_check(const GradedSurjection& surj, const Vec& xi) {
    validate_surjection(surj);
    check_dual(surj.target, xi, "transfer_check");

    const int m = surj.target.dim;
    const int M = surj.source.dim;

    RatVec eta(M, Rational(0));
    for (int s = 0; s < M; ++s)
        for (int i = 0; i < m; ++i)
            if (surj.phi.at(i, s) != 0) eta[s] += surj.phi.at(i, s) * xi.c[i];

    TransferCheck out;
    out.source_signature = jump_indices(surj.source, dual(eta));
    out.target_signature = jump_indices(surj.target, xi);

    for (int k = 1; k <= M; ++k) {
        TransferCheck::PerFlag row;
        row.k = k;
        int kbar = 0;
        for (int j = 1; j <= m; ++j)
            if (surj.u[j - 1] <= k) kbar = j;
        row.kbar = kbar;
        row.vacuous = (kbar == 0);
        row.lhs = out.source_signature.sets[k - 1];
        if (!row.vacuous)
            for (int j : out.target_signature.sets[kbar - 1]) row.rhs.push_back(surj.u[j - 1]);
        std::sort(row.rhs.begin(), row.rhs.end());
        row.ok = (row.lhs == row.rhs);
        if (!row.ok) ++out.violations;
        out.flags.push_back(std::move(row));
    }
    return out;
}

struct TransferBatch {
    std::int64_t checked = 0;
    std::int64_t violations = 0;
    std::optional<RatVec> first_failure; // target dual coordinates
};

inline TransferBatch transfer_check_batch(const GradedSurjection& surj, std::int64_t n,
                                          std::uint64_t seed, std::int64_t height = 10) {
    validate_surjection(surj);
    SeededRng rng(seed);
    std::vector<RatVec> xis;
    xis.reserve(n);
    for (std::int64_t i = 0; i < n; ++i)
        xis.push_back(rng.rational_vector(surj.target.dim, height));

    std::vector<int> bad(n, 0);
    parallel_for(n, [&](std::int64_t i) {
        bad[i] = transfer_check(surj, dual(xis[i])).violations;
    });

    TransferBatch out;
    out.checked = n;
    for (std::int64_t i = 0; i < n; ++i)
        if (bad[i]) {
            out.violations += bad[i];
            if (!out.first_failure) out.first_failure = xis[i];
        }
    return out;
}

} // namespace strata
