#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "strata/family.hpp"
#include "strata/freelie.hpp"
#include "strata/stratification.hpp"

namespace strata {

// Fiberwise stratification of a one-parameter family, aligned across fibers
// through the free cover: every fiber receives the canonical surjection from
// the free graded algebra on its basis, and fiber signatures are transported
// to the cover side, where they are comparable. A stratum of the family is a
// cover-side signature; fibers where it captured no sample are flagged empty.
struct FamilyStrata {
    struct Fiber {
        Rational t;
        StratumTable table;
        std::vector<StratumSignature> lifted; // per table entry, cover side
    };
    struct MergedEntry {
        StratumSignature cover_signature;
        std::vector<bool> present;          // per fiber
        std::vector<std::int64_t> samples;  // per fiber
    };
    std::vector<Rational> t_values;
    std::vector<Fiber> fibers;
    std::vector<MergedEntry> merged; // in cover stratum order
    std::int64_t transfer_violations = 0;
    int cover_dim = 0;
};

inline FamilyStrata stratify_family(const AlgebraFamily& fam, const std::vector<Rational>& ts,
                                    std::int64_t xi_samples, std::uint64_t seed,
                                    std::int64_t height = 10) {
    FamilyStrata out;
    out.t_values = ts;

    std::vector<GradedLieAlgebra> fibers;
    fibers.reserve(ts.size());
    for (const auto& t : ts) fibers.push_back(evaluate_family(fam, t));
    if (fibers.empty()) return out;

    // all fibers share dim, weights and internal order, hence one cover
    const GradedLieAlgebra& model = fibers.front();
    HallBasis cover = hall_basis(model.weights, model.depth, model.labels);
    out.cover_dim = cover.algebra.dim;

    std::map<StratumSignature, FamilyStrata::MergedEntry, SignatureBefore> merged;
    for (size_t f = 0; f < fibers.size(); ++f) {
        FamilyStrata::Fiber fiber;
        fiber.t = ts[f];
        // identical seed per fiber: the same dual sample points probe each fiber
        fiber.table = enumerate_strata(fibers[f], xi_samples, seed, height);

        std::vector<Vec> images;
        for (int g = 0; g < model.dim; ++g) {
            RatVec e(model.dim, Rational(0));
            e[g] = 1;
            images.push_back(primal(std::move(e)));
        }
        const GradedSurjection surj = canonical_surjection(cover, fibers[f], images);

        for (const auto& entry : fiber.table.entries) {
            const TransferCheck check = transfer_check(surj, dual(entry.representative));
            out.transfer_violations += check.violations;
            fiber.lifted.push_back(check.source_signature);

            auto [it, fresh] = merged.try_emplace(check.source_signature);
            if (fresh) {
                it->second.cover_signature = check.source_signature;
                it->second.present.assign(fibers.size(), false);
                it->second.samples.assign(fibers.size(), 0);
            }
            it->second.present[f] = true;
            it->second.samples[f] += entry.samples;
        }
        out.fibers.push_back(std::move(fiber));
    }
    for (auto& [sig, entry] : merged) out.merged.push_back(std::move(entry));
    return out;
}

} // namespace strata
