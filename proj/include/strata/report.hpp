#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "strata/family_strata.hpp"
#include "strata/freelie.hpp"
#include "strata/stratification.hpp"

namespace strata {

// Structured reports are versioned JSON with deterministic field order; tests
// and downstream tools parse them back into the library types.
inline constexpr int kSchemaVersion = 1;

using Json = nlohmann::ordered_json;

inline Json signature_to_json(const StratumSignature& sig) {
    Json out = Json::array();
    for (const auto& s : sig.sets) out.push_back(s);
    return out;
}

inline StratumSignature signature_from_json(const Json& j) {
    StratumSignature sig;
    for (const auto& s : j) sig.sets.push_back(s.get<std::vector<int>>());
    return sig;
}

inline Json ratvec_to_json(const RatVec& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(to_string(x));
    return out;
}

inline RatVec ratvec_from_json(const Json& j) {
    RatVec v;
    for (const auto& s : j) v.push_back(parse_rational(s.get<std::string>()));
    return v;
}

inline Json stratum_table_to_json(const GradedLieAlgebra& alg, const StratumTable& table) {
    Json out;
    out["schema_version"] = kSchemaVersion;
    out["kind"] = "stratum_table";
    out["algebra"] = alg.name;
    out["dim"] = alg.dim;
    out["basis"] = alg.labels; // Jordan-Holder order the signatures refer to
    out["weights"] = alg.weights;
    out["seed"] = table.seed;
    out["height"] = table.height;
    out["total_samples"] = table.total_samples;
    out["origin_samples"] = table.origin_samples;
    Json strata = Json::array();
    for (size_t i = 0; i < table.entries.size(); ++i) {
        const auto& e = table.entries[i];
        Json row;
        row["index"] = static_cast<int>(i) + 1;
        row["signature"] = signature_to_json(e.signature);
        row["representative"] = ratvec_to_json(e.representative);
        row["orbit_dimension"] = e.orbit_dim;
        row["samples"] = e.samples;
        strata.push_back(std::move(row));
    }
    out["strata"] = std::move(strata);
    return out;
}

inline StratumTable stratum_table_from_json(const Json& j) {
    if (j.at("kind") != "stratum_table") throw ParseError("not a stratum_table report");
    StratumTable table;
    table.seed = j.at("seed").get<std::uint64_t>();
    table.height = j.at("height").get<std::int64_t>();
    table.total_samples = j.at("total_samples").get<std::int64_t>();
    table.origin_samples = j.at("origin_samples").get<std::int64_t>();
    for (const auto& row : j.at("strata")) {
        StratumTable::Entry e;
        e.signature = signature_from_json(row.at("signature"));
        e.representative = ratvec_from_json(row.at("representative"));
        e.orbit_dim = row.at("orbit_dimension").get<int>();
        e.samples = row.at("samples").get<std::int64_t>();
        table.entries.push_back(std::move(e));
    }
    return table;
}

inline Json family_strata_to_json(const AlgebraFamily& fam,
                                  const std::vector<GradedLieAlgebra>& fibers,
                                  const FamilyStrata& fs) {
    Json out;
    out["schema_version"] = kSchemaVersion;
    out["kind"] = "family_strata";
    out["family"] = fam.name;
    out["param"] = fam.param;
    out["cover_dim"] = fs.cover_dim;
    out["transfer_violations"] = fs.transfer_violations;
    Json jf = Json::array();
    for (size_t i = 0; i < fs.fibers.size(); ++i) {
        Json row;
        row["t"] = to_string(fs.fibers[i].t);
        row["table"] = stratum_table_to_json(fibers[i], fs.fibers[i].table);
        Json lifted = Json::array();
        for (const auto& sig : fs.fibers[i].lifted) lifted.push_back(signature_to_json(sig));
        row["lifted_signatures"] = std::move(lifted);
        jf.push_back(std::move(row));
    }
    out["fibers"] = std::move(jf);
    Json merged = Json::array();
    for (size_t i = 0; i < fs.merged.size(); ++i) {
        const auto& e = fs.merged[i];
        Json row;
        row["index"] = static_cast<int>(i) + 1;
        row["cover_signature"] = signature_to_json(e.cover_signature);
        Json present = Json::array(), samples = Json::array();
        for (size_t f = 0; f < fs.fibers.size(); ++f) {
            present.push_back(e.present[f]);
            samples.push_back(e.samples[f]);
        }
        row["present"] = std::move(present);
        row["samples"] = std::move(samples);
        Json empty_at = Json::array();
        for (size_t f = 0; f < fs.fibers.size(); ++f)
            if (!e.present[f]) empty_at.push_back(to_string(fs.fibers[f].t));
        row["empty_fibers"] = std::move(empty_at);
        merged.push_back(std::move(row));
    }
    out["merged"] = std::move(merged);
    return out;
}

inline FamilyStrata family_strata_from_json(const Json& j) {
    if (j.at("kind") != "family_strata") throw ParseError("not a family_strata report");
    FamilyStrata fs;
    fs.cover_dim = j.at("cover_dim").get<int>();
    fs.transfer_violations = j.at("transfer_violations").get<std::int64_t>();
    for (const auto& row : j.at("fibers")) {
        FamilyStrata::Fiber fiber;
        fiber.t = parse_rational(row.at("t").get<std::string>());
        fiber.table = stratum_table_from_json(row.at("table"));
        for (const auto& sig : row.at("lifted_signatures"))
            fiber.lifted.push_back(signature_from_json(sig));
        fs.t_values.push_back(fiber.t);
        fs.fibers.push_back(std::move(fiber));
    }
    for (const auto& row : j.at("merged")) {
        FamilyStrata::MergedEntry e;
        e.cover_signature = signature_from_json(row.at("cover_signature"));
        e.present = row.at("present").get<std::vector<bool>>();
        e.samples = row.at("samples").get<std::vector<std::int64_t>>();
        fs.merged.push_back(std::move(e));
    }
    return fs;
}

inline Json transfer_check_to_json(const TransferCheck& tc) {
    Json out;
    out["schema_version"] = kSchemaVersion;
    out["kind"] = "transfer_check";
    out["source_signature"] = signature_to_json(tc.source_signature);
    out["target_signature"] = signature_to_json(tc.target_signature);
    out["violations"] = tc.violations;
    Json rows = Json::array();
    for (const auto& f : tc.flags) {
        Json row;
        row["k"] = f.k;
        row["kbar"] = f.kbar;
        row["lhs"] = f.lhs;
        row["rhs"] = f.rhs;
        row["vacuous"] = f.vacuous;
        row["ok"] = f.ok;
        rows.push_back(std::move(row));
    }
    out["flags"] = std::move(rows);
    return out;
}

} // namespace strata
