// stratakit: structure theory of graded nilpotent Lie groups from the command
// line. Exact rational computations for validation, BCH, coadjoint orbits and
// Pedersen-style stratification; double precision for the grid numerics.
//
// Exit codes: 0 success, 1 domain failure (validation, assertion), 2 usage/IO.

#include <CLI11.hpp>

#include <cmath>
#include <complex>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "strata/analysis/convolve.hpp"
#include "strata/analysis/dilation.hpp"
#include "strata/analysis/fourier.hpp"
#include "strata/analysis/homogenize.hpp"
#include "strata/analysis/quasinorm.hpp"
#include "strata/family_strata.hpp"
#include "strata/freelie.hpp"
#include "strata/report.hpp"
#include "strata/specfile.hpp"

using namespace strata;

namespace {

struct Output {
    std::string format = "structured"; // or "table"
    std::string out_path;

    void emit(const Json& structured, const std::string& table) const {
        const std::string text = format == "table" ? table : structured.dump(2) + "\n";
        if (out_path.empty()) {
            std::cout << text;
        } else {
            std::ofstream f(out_path, std::ios::binary);
            if (!f) throw IoError("cannot write '" + out_path + "'");
            f << text;
        }
    }
};

RatVec parse_rational_csv(const std::string& s) {
    RatVec v;
    std::stringstream ss(s);
    std::string piece;
    while (std::getline(ss, piece, ',')) v.push_back(parse_rational(piece));
    return v;
}

std::vector<int> parse_int_csv(const std::string& s) {
    std::vector<int> v;
    std::stringstream ss(s);
    std::string piece;
    while (std::getline(ss, piece, ',')) {
        try {
            v.push_back(std::stoi(piece));
        } catch (...) {
            throw ParseError("bad integer '" + piece + "'");
        }
    }
    return v;
}

std::vector<std::string> parse_str_csv(const std::string& s) {
    std::vector<std::string> v;
    std::stringstream ss(s);
    std::string piece;
    while (std::getline(ss, piece, ',')) v.push_back(piece);
    return v;
}

std::string ratvec_str(const RatVec& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += to_string(v[i]);
    }
    return s + ")";
}

Json params_json(std::initializer_list<std::pair<std::string, Json>> kv) {
    Json p;
    for (const auto& [k, v] : kv) p[k] = v;
    return p;
}

GradedLieAlgebra load_single(const std::string& path) {
    LoadedSpec spec = load_spec_file(path);
    if (spec.is_family)
        throw ParseError("'" + path + "' is a family spec; this command needs a single algebra");
    return spec.algebra;
}

Vec dual_from_user(const GradedLieAlgebra& alg, const std::string& csv) {
    return dual(alg.user_to_internal(parse_rational_csv(csv)));
}

std::string table_header(const GradedLieAlgebra& alg) {
    std::string s = "basis (descending weight):";
    for (int i = 0; i < alg.dim; ++i)
        s += " " + alg.labels[i] + "(" + std::to_string(alg.weights[i]) + ")";
    return s + "\n";
}

// ---------------------------------------------------------------------------

int cmd_validate(const std::string& path, const Output& out) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["kind"] = "validation";
    j["command"] = "validate";
    j["params"] = params_json({{"input", path}});
    std::string table;
    try {
        LoadedSpec spec = load_spec_file(path);
        j["valid"] = true;
        if (spec.is_family) {
            j["family"] = true;
            j["name"] = spec.family.name;
            j["dim"] = static_cast<int>(spec.family.weights.size());
            j["param"] = spec.family.param;
            j["domain"] = {to_string(spec.family.lo), to_string(spec.family.hi)};
            table = "pass: family '" + spec.family.name + "', dim " +
                    std::to_string(spec.family.weights.size()) + ", " + spec.family.param + " in [" +
                    to_string(spec.family.lo) + ", " + to_string(spec.family.hi) + "]\n";
        } else {
            const auto& alg = spec.algebra;
            j["family"] = false;
            j["name"] = alg.name;
            j["dim"] = alg.dim;
            j["depth"] = alg.depth;
            j["homogeneous_dimension"] = homogeneous_dimension(alg);
            j["basis"] = alg.labels;
            j["weights"] = alg.weights;
            table = "pass: algebra '" + alg.name + "', dim " + std::to_string(alg.dim) +
                    ", depth " + std::to_string(alg.depth) + ", homogeneous dimension " +
                    std::to_string(homogeneous_dimension(alg)) + "\n" + table_header(alg);
        }
        out.emit(j, table);
        return 0;
    } catch (const ValidationError& e) {
        j["valid"] = false;
        j["identity"] = identity_name(e.identity);
        j["witness"] = {e.witness[0], e.witness[1], e.witness[2]};
        j["residual"] = e.residual;
        table = std::string("FAIL [") + identity_name(e.identity) + "] witness (" + e.witness[0] +
                ", " + e.witness[1] + ", " + e.witness[2] + ") residual " + e.residual + "\n";
        out.emit(j, table);
        return 1;
    }
}

int cmd_stratify(const std::string& path, std::int64_t samples, std::uint64_t seed,
                 std::int64_t height, bool family_flag, const std::string& t_values,
                 const Output& out) {
    LoadedSpec spec = load_spec_file(path);
    if (family_flag && !spec.is_family)
        throw ParseError("--family given but '" + path + "' is a single algebra");

    if (spec.is_family) {
        if (t_values.empty()) throw ParseError("family spec needs --t-values");
        std::vector<Rational> ts;
        for (const auto& r : parse_rational_csv(t_values)) ts.push_back(r);
        FamilyStrata fs = stratify_family(spec.family, ts, samples, seed, height);
        std::vector<GradedLieAlgebra> fibers;
        for (const auto& t : ts) fibers.push_back(evaluate_family(spec.family, t));
        Json j = family_strata_to_json(spec.family, fibers, fs);
        j["command"] = "stratify";
        j["params"] = params_json({{"input", path},
                                   {"samples", samples},
                                   {"seed", seed},
                                   {"height", height},
                                   {"t_values", t_values}});
        std::string table = "family '" + spec.family.name + "' over " +
                            std::to_string(ts.size()) + " fibers; cover dim " +
                            std::to_string(fs.cover_dim) + "; transfer violations " +
                            std::to_string(fs.transfer_violations) + "\n";
        for (size_t f = 0; f < fs.fibers.size(); ++f) {
            table += " fiber " + spec.family.param + "=" + to_string(ts[f]) + ": " +
                     std::to_string(fs.fibers[f].table.entries.size()) + " strata\n";
            for (size_t i = 0; i < fs.fibers[f].table.entries.size(); ++i) {
                const auto& e = fs.fibers[f].table.entries[i];
                table += "   [" + std::to_string(i + 1) + "] " + signature_str(e.signature) +
                         "  orbit-dim " + std::to_string(e.orbit_dim) + "  samples " +
                         std::to_string(e.samples) + "\n";
            }
        }
        table += " merged strata (cover side): " + std::to_string(fs.merged.size()) + "\n";
        for (size_t i = 0; i < fs.merged.size(); ++i) {
            table += "   [" + std::to_string(i + 1) + "] " +
                     signature_str(fs.merged[i].cover_signature) + "  present:";
            for (size_t f = 0; f < fs.fibers.size(); ++f)
                table += std::string(" ") + (fs.merged[i].present[f] ? "yes" : "EMPTY");
            table += "\n";
        }
        out.emit(j, table);
        return 0;
    }

    const auto& alg = spec.algebra;
    StratumTable st = enumerate_strata(alg, samples, seed, height);
    Json j = stratum_table_to_json(alg, st);
    j["command"] = "stratify";
    j["params"] =
        params_json({{"input", path}, {"samples", samples}, {"seed", seed}, {"height", height}});
    std::string table = "algebra '" + alg.name + "': " + std::to_string(st.entries.size()) +
                        " strata from " + std::to_string(st.total_samples) + " samples\n" +
                        table_header(alg);
    for (size_t i = 0; i < st.entries.size(); ++i) {
        const auto& e = st.entries[i];
        table += " [" + std::to_string(i + 1) + "] " + signature_str(e.signature) + "  orbit-dim " +
                 std::to_string(e.orbit_dim) + "  samples " + std::to_string(e.samples) +
                 "  rep " + ratvec_str(alg.internal_to_user(e.representative)) + "\n";
    }
    out.emit(j, table);
    return 0;
}

int cmd_classify(const std::string& path, const std::string& xi_csv, std::int64_t samples,
                 std::uint64_t seed, std::int64_t height, const Output& out) {
    const auto alg = load_single(path);
    const Vec xi = dual_from_user(alg, xi_csv);
    const Classification cls = classify(alg, xi);
    const StratumTable st = enumerate_strata(alg, samples, seed, height);

    Json j;
    j["schema_version"] = kSchemaVersion;
    j["kind"] = "classification";
    j["command"] = "classify";
    j["params"] = params_json({{"input", path},
                               {"xi", xi_csv},
                               {"samples", samples},
                               {"seed", seed},
                               {"height", height}});
    j["basis"] = alg.labels;
    j["xi_user"] = ratvec_to_json(parse_rational_csv(xi_csv));
    j["origin"] = cls.origin;
    j["signature"] = signature_to_json(cls.signature);
    j["orbit_dimension"] = cls.orbit_dim;
    const auto idx = st.index_of(cls.signature);
    if (cls.origin)
        j["stratum"] = nullptr;
    else if (idx)
        j["stratum"] = *idx;
    else
        j["stratum"] = nullptr;

    std::string table;
    if (cls.origin) {
        table = "xi = 0: origin (excluded from the stratification)\n";
    } else {
        table = "signature " + signature_str(cls.signature) + "\norbit dimension " +
                std::to_string(cls.orbit_dim) + "\n";
        table += idx ? "stratum " + std::to_string(*idx) + " of " +
                           std::to_string(st.entries.size()) + "\n"
                     : "stratum not present in the sampled table\n";
    }
    out.emit(j, table);
    return 0;
}

int cmd_orbit_dim(const std::string& path, const std::string& xi_csv, const Output& out) {
    const auto alg = load_single(path);
    const int dim = orbit_dimension(alg, dual_from_user(alg, xi_csv));
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["kind"] = "orbit_dimension";
    j["command"] = "orbit-dim";
    j["params"] = params_json({{"input", path}, {"xi", xi_csv}});
    j["orbit_dimension"] = dim;
    out.emit(j, std::to_string(dim) + "\n");
    return 0;
}

int cmd_orbit_sample(const std::string& path, const std::string& xi_csv, std::int64_t samples,
                     std::uint64_t seed, std::int64_t height, const Output& out) {
    const auto alg = load_single(path);
    const Vec xi = dual_from_user(alg, xi_csv);
    const auto pts = orbit_sample(alg, xi, samples, seed, height);
    const StratumSignature sig = jump_indices(alg, xi);
    bool all_match = true;
    Json jpts = Json::array();
    std::string table = "signature " + signature_str(sig) + "\n";
    for (const auto& p : pts) {
        const bool match = jump_indices(alg, p) == sig;
        all_match = all_match && match;
        jpts.push_back(ratvec_to_json(alg.internal_to_user(p.c)));
        table += " " + ratvec_str(alg.internal_to_user(p.c)) + (match ? "" : "  SIGNATURE DRIFT") +
                 "\n";
    }
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["kind"] = "orbit_sample";
    j["command"] = "orbit-sample";
    j["params"] = params_json(
        {{"input", path}, {"xi", xi_csv}, {"samples", samples}, {"seed", seed}, {"height", height}});
    j["signature"] = signature_to_json(sig);
    j["points_user"] = std::move(jpts);
    j["all_same_signature"] = all_match;
    out.emit(j, table);
    return all_match ? 0 : 1;
}

int cmd_free(const std::string& weights_csv, int depth, const std::string& labels_csv,
             const std::string& out_spec, const Output& out) {
    const std::vector<int> weights = parse_int_csv(weights_csv);
    std::vector<std::string> labels;
    if (!labels_csv.empty()) labels = parse_str_csv(labels_csv);
    const HallBasis hb = hall_basis(weights, depth, labels);

    std::map<int, int> dim_per_weight;
    for (int i = 0; i < hb.algebra.dim; ++i) ++dim_per_weight[hb.algebra.weights[i]];

    Json j;
    j["schema_version"] = kSchemaVersion;
    j["kind"] = "free_algebra";
    j["command"] = "free";
    j["params"] = params_json({{"weights", weights_csv}, {"depth", depth}, {"labels", labels_csv}});
    j["dim"] = hb.algebra.dim;
    Json per = Json::array();
    for (const auto& [w, n] : dim_per_weight) per.push_back(Json{{"weight", w}, {"dim", n}});
    j["dim_per_weight"] = std::move(per);
    j["basis"] = hb.algebra.labels;
    j["weights_internal"] = hb.algebra.weights;

    std::string table = "free graded Lie algebra: dim " + std::to_string(hb.algebra.dim) +
                        ", depth " + std::to_string(depth) + "\n";
    for (const auto& [w, n] : dim_per_weight)
        table += " weight " + std::to_string(w) + ": dim " + std::to_string(n) + "\n";
    table += table_header(hb.algebra);

    if (!out_spec.empty()) {
        save_spec_file(out_spec, serialize(hb.algebra));
        j["written"] = out_spec;
        table += "written " + out_spec + "\n";
    }
    out.emit(j, table);
    return 0;
}

int cmd_cover_check(const std::string& path, int free_depth, const std::string& images_csv,
                    std::int64_t samples, std::uint64_t seed, std::int64_t height,
                    const Output& out) {
    const auto target = load_single(path);
    std::vector<std::string> image_labels;
    if (images_csv.empty()) {
        for (int u = 0; u < target.dim; ++u)
            image_labels.push_back(target.labels[target.internal_of_user[u]]);
    } else {
        image_labels = parse_str_csv(images_csv);
    }
    if (free_depth <= 0) free_depth = target.depth;

    std::vector<int> gen_weights;
    std::vector<Vec> images;
    for (const auto& label : image_labels) {
        const int idx = target.label_index(label);
        gen_weights.push_back(target.weights[idx]);
        RatVec e(target.dim, Rational(0));
        e[idx] = 1;
        images.push_back(primal(std::move(e)));
    }

    const HallBasis hb = hall_basis(gen_weights, free_depth, image_labels);
    const GradedSurjection surj = canonical_surjection(hb, target, images);
    const TransferBatch batch = transfer_check_batch(surj, samples, seed, height);

    Json j;
    j["schema_version"] = kSchemaVersion;
    j["kind"] = "cover_check";
    j["command"] = "cover-check";
    j["params"] = params_json({{"input", path},
                               {"free_depth", free_depth},
                               {"images", images_csv},
                               {"samples", samples},
                               {"seed", seed},
                               {"height", height}});
    j["source_dim"] = surj.source.dim;
    j["target_dim"] = target.dim;
    j["kernel_dim"] = surj.kernel_dim;
    j["u"] = surj.u;
    j["checked"] = batch.checked;
    j["violations"] = batch.violations;
    if (batch.first_failure) j["first_failure_xi"] = ratvec_to_json(*batch.first_failure);

    std::string table = "free cover dim " + std::to_string(surj.source.dim) + " -> target dim " +
                        std::to_string(target.dim) + ", kernel dim " +
                        std::to_string(surj.kernel_dim) + "\n" + std::to_string(batch.violations) +
                        " violations / " + std::to_string(batch.checked) + " sampled points\n";
    out.emit(j, table);
    return batch.violations == 0 ? 0 : 1;
}

int cmd_bch(const std::string& path, const std::string& a_csv, const std::string& b_csv,
            const Output& out) {
    const auto alg = load_single(path);
    const Vec a = primal(alg.user_to_internal(parse_rational_csv(a_csv)));
    const Vec b = primal(alg.user_to_internal(parse_rational_csv(b_csv)));
    const RatVec user = alg.internal_to_user(bch(alg, a, b).c);
    std::string csv;
    for (size_t i = 0; i < user.size(); ++i) {
        if (i) csv += ",";
        csv += to_string(user[i]);
    }
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["kind"] = "bch";
    j["command"] = "bch";
    j["params"] = params_json({{"input", path}, {"a", a_csv}, {"b", b_csv}});
    j["result_user"] = ratvec_to_json(user);
    out.emit(j, csv + "\n");
    return 0;
}

int cmd_fourier_check(const std::string& path, const std::string& lambdas_csv, int npoints,
                      double sigma, double half, double tol, const Output& out) {
    const auto alg = load_single(path);
    const GridSpec base = grid_spec_for(alg, Frame::primal, half, npoints);
    const GridFunction f = sample_grid(base, [&](const std::vector<double>& x) {
        double s = 0;
        for (double v : x) s += v * v;
        return Complex(std::exp(-s / (2.0 * sigma * sigma)));
    });

    bool pass = true;
    Json rows = Json::array();
    std::string table = table_header(alg);
    for (const auto& lr : parse_rational_csv(lambdas_csv)) {
        const double lambda = to_double(lr);
        // matched grids: the pushforward lives on the dilated box, node to node
        const GridSpec pushed = dilated_spec(base, lambda);
        const GridFunction pf = pushforward_dilate(f, lambda, &pushed);
        const GridSpec dual_pushed = dual_spec_for(pushed, 1.0);
        const GridFunction lhs = fourier(pf, dual_pushed);
        GridSpec dual_scaled = dual_pushed;
        for (int a = 0; a < base.dim(); ++a)
            dual_scaled.axes[a].half *= std::pow(lambda, base.weights[a]);
        const GridFunction rhs = fourier(f, dual_scaled); // fhat(tdelta_lambda eta), node for node
        double err = 0, ref = 0;
        for (size_t i = 0; i < lhs.data.size(); ++i) {
            err += std::norm(lhs.data[i] - rhs.data[i]);
            ref += std::norm(rhs.data[i]);
        }
        const double rel = std::sqrt(err / ref);
        pass = pass && rel <= tol;
        rows.push_back(Json{{"lambda", to_string(lr)}, {"relative_error", rel}});
        table += " lambda " + to_string(lr) + ": rel err " + std::to_string(rel) +
                 (rel <= tol ? "  ok" : "  FAIL") + "\n";
    }

    Json j;
    j["schema_version"] = kSchemaVersion;
    j["kind"] = "fourier_equivariance";
    j["command"] = "fourier-check";
    j["params"] = params_json({{"input", path},
                               {"lambda", lambdas_csv},
                               {"n", npoints},
                               {"sigma", sigma},
                               {"half", half},
                               {"tol", tol}});
    j["checks"] = std::move(rows);
    j["pass"] = pass;
    out.emit(j, table);
    return pass ? 0 : 1;
}

int cmd_convolve(const std::string& path, const std::string& f_path, const std::string& g_path,
                 const std::string& out_grid, double cutoff, const Output& out) {
    const auto alg = load_single(path);
    const GridFunction f = load_grid(f_path);
    const GridFunction g = load_grid(g_path);
    const GridFunction c = convolve(alg, f, g, cutoff);
    save_grid(out_grid, c);
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["kind"] = "convolution";
    j["command"] = "convolve";
    j["params"] = params_json(
        {{"input", path}, {"f", f_path}, {"g", g_path}, {"out", out_grid}, {"cutoff", cutoff}});
    j["samples"] = static_cast<std::int64_t>(c.data.size());
    j["max_abs"] = c.max_abs();
    out.emit(j, "written " + out_grid + " (" + std::to_string(c.data.size()) + " samples)\n");
    return 0;
}

int cmd_homogenize(const std::string& path, const std::string& grid_path, double order_m,
                   double rho, double lambda_min, double lambda_max, double origin_tol,
                   const Output& out) {
    const auto alg = load_single(path);
    const GridFunction fhat = load_grid(grid_path);
    HomogenizeSpec spec;
    spec.rho = rho;
    spec.lambda_min = lambda_min;
    spec.lambda_max = lambda_max;
    spec.origin_tol = origin_tol;
    const Homogenized v = homogenize(fhat, order_m, spec);

    // self-check: degree-m homogeneity under one node-ratio dilation
    std::vector<double> eta(alg.dim, 0.0);
    for (int a = 0; a < alg.dim; ++a) eta[a] = 0.3 + 0.2 * a;
    std::vector<double> eta2 = eta;
    for (int a = 0; a < alg.dim; ++a) eta2[a] *= std::pow(rho, alg.weights[a]);
    const Complex v1 = v(eta);
    const Complex v2 = v(eta2);
    const double expected = std::pow(rho, order_m);
    const double drift =
        std::abs(v1) > 0 ? std::abs(v2 / v1 - Complex(expected)) / expected : 0.0;

    Json j;
    j["schema_version"] = kSchemaVersion;
    j["kind"] = "homogenize";
    j["command"] = "homogenize";
    j["params"] = params_json({{"input", path},
                               {"grid", grid_path},
                               {"m", order_m},
                               {"rho", rho},
                               {"lambda_min", lambda_min},
                               {"lambda_max", lambda_max},
                               {"origin_tol", origin_tol}});
    j["nodes"] = v.node_count();
    j["probe_value"] = Json{{"re", v1.real()}, {"im", v1.imag()}};
    j["node_dilation_drift"] = drift;
    out.emit(j, "nodes " + std::to_string(v.node_count()) + ", homogeneity drift " +
                    std::to_string(drift) + "\n");
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"stratakit: graded nilpotent Lie groups, coadjoint strata, homogeneous calculus"};
    app.require_subcommand(1);

    Output output;
    std::uint64_t seed = 1;
    std::int64_t samples = 1000;
    std::int64_t height = 10;
    double tol = 1e-6;

    auto add_common = [&](CLI::App* cmd, bool sampling) {
        cmd->add_option("--format", output.format, "output format")
            ->check(CLI::IsMember({"table", "structured"}));
        cmd->add_option("--out", output.out_path, "write the report to a file");
        if (sampling) {
            cmd->add_option("--seed", seed, "RNG seed");
            cmd->add_option("--samples", samples, "sample count");
            cmd->add_option("--height", height, "rational height bound");
        }
    };

    std::function<int()> run;

    // validate
    {
        auto* c = app.add_subcommand("validate", "check an algebra or family spec");
        auto path = std::make_shared<std::string>();
        c->add_option("spec", *path, "spec file")->required();
        add_common(c, false);
        c->callback([&, path] { run = [&, path] { return cmd_validate(*path, output); }; });
    }
    // stratify
    {
        auto* c = app.add_subcommand("stratify", "enumerate jump-index strata");
        auto path = std::make_shared<std::string>();
        auto tvals = std::make_shared<std::string>();
        auto family = std::make_shared<bool>(false);
        c->add_option("spec", *path, "spec file")->required();
        c->add_flag("--family", *family, "treat the spec as a family");
        c->add_option("--t-values", *tvals, "comma separated rational fiber parameters");
        add_common(c, true);
        c->callback([&, path, tvals, family] {
            run = [&, path, tvals, family] {
                return cmd_stratify(*path, samples, seed, height, *family, *tvals, output);
            };
        });
    }
    // classify
    {
        auto* c = app.add_subcommand("classify", "signature and stratum of one dual point");
        auto path = std::make_shared<std::string>();
        auto xi = std::make_shared<std::string>();
        c->add_option("spec", *path, "spec file")->required();
        c->add_option("xi", *xi, "dual point, comma separated rationals (file order)")->required();
        add_common(c, true);
        c->callback([&, path, xi] {
            run = [&, path, xi] { return cmd_classify(*path, *xi, samples, seed, height, output); };
        });
    }
    // orbit-dim
    {
        auto* c = app.add_subcommand("orbit-dim", "coadjoint orbit dimension");
        auto path = std::make_shared<std::string>();
        auto xi = std::make_shared<std::string>();
        c->add_option("spec", *path, "spec file")->required();
        c->add_option("xi", *xi, "dual point (file order)")->required();
        add_common(c, false);
        c->callback([&, path, xi] { run = [&, path, xi] { return cmd_orbit_dim(*path, *xi, output); }; });
    }
    // orbit-sample
    {
        auto* c = app.add_subcommand("orbit-sample", "sample the coadjoint orbit of a dual point");
        auto path = std::make_shared<std::string>();
        auto xi = std::make_shared<std::string>();
        c->add_option("spec", *path, "spec file")->required();
        c->add_option("xi", *xi, "dual point (file order)")->required();
        add_common(c, true);
        c->callback([&, path, xi] {
            run = [&, path, xi] {
                return cmd_orbit_sample(*path, *xi, samples, seed, height, output);
            };
        });
    }
    // free
    {
        auto* c = app.add_subcommand("free", "free graded Lie algebra via a Hall basis");
        auto weights = std::make_shared<std::string>();
        auto labels = std::make_shared<std::string>();
        auto outspec = std::make_shared<std::string>();
        auto depth = std::make_shared<int>(0);
        c->add_option("--weights", *weights, "generator weights, e.g. 1,1,2")->required();
        c->add_option("--depth", *depth, "truncation depth")->required();
        c->add_option("--labels", *labels, "generator labels");
        c->add_option("--write-spec", *outspec, "serialize the algebra to a spec file");
        add_common(c, false);
        c->callback([&, weights, labels, outspec, depth] {
            run = [&, weights, labels, outspec, depth] {
                return cmd_free(*weights, *depth, *labels, *outspec, output);
            };
        });
    }
    // cover-check
    {
        auto* c = app.add_subcommand("cover-check", "verify the jump-index transfer formula");
        auto path = std::make_shared<std::string>();
        auto images = std::make_shared<std::string>();
        auto depth = std::make_shared<int>(0);
        c->add_option("spec", *path, "target algebra spec")->required();
        c->add_option("--free-depth", *depth, "depth of the free cover (default: target depth)");
        c->add_option("--images", *images,
                      "generator image labels (default: every basis vector)");
        add_common(c, true);
        c->callback([&, path, images, depth] {
            run = [&, path, images, depth] {
                return cmd_cover_check(*path, *depth, *images, samples, seed, height, output);
            };
        });
    }
    // bch
    {
        auto* c = app.add_subcommand("bch", "Baker-Campbell-Hausdorff product");
        auto path = std::make_shared<std::string>();
        auto a = std::make_shared<std::string>();
        auto b = std::make_shared<std::string>();
        c->add_option("spec", *path, "spec file")->required();
        c->add_option("a", *a, "first factor, comma separated rationals (file order)")->required();
        c->add_option("b", *b, "second factor (file order)")->required();
        add_common(c, false);
        c->callback([&, path, a, b] { run = [&, path, a, b] { return cmd_bch(*path, *a, *b, output); }; });
    }
    // fourier-check
    {
        auto* c = app.add_subcommand("fourier-check", "Fourier/dilation equivariance on Gaussians");
        auto path = std::make_shared<std::string>();
        auto lambdas = std::make_shared<std::string>("1/2,2,3");
        auto n = std::make_shared<int>(32);
        auto sigma = std::make_shared<double>(1.0);
        auto half = std::make_shared<double>(7.0);
        c->add_option("spec", *path, "spec file")->required();
        c->add_option("--lambda", *lambdas, "dilation scales, comma separated rationals");
        c->add_option("--n", *n, "samples per axis");
        c->add_option("--sigma", *sigma, "Gaussian width");
        c->add_option("--half", *half, "half width of the base box");
        c->add_option("--tol", tol, "relative error tolerance");
        add_common(c, false);
        c->callback([&, path, lambdas, n, sigma, half] {
            run = [&, path, lambdas, n, sigma, half] {
                return cmd_fourier_check(*path, *lambdas, *n, *sigma, *half, tol, output);
            };
        });
    }
    // convolve
    {
        auto* c = app.add_subcommand("convolve", "group convolution of two grid dumps");
        auto path = std::make_shared<std::string>();
        auto fpath = std::make_shared<std::string>();
        auto gpath = std::make_shared<std::string>();
        auto opath = std::make_shared<std::string>();
        auto cutoff = std::make_shared<double>(0.0);
        c->add_option("spec", *path, "spec file")->required();
        c->add_option("--f", *fpath, "left factor grid dump")->required();
        c->add_option("--g", *gpath, "right factor grid dump")->required();
        c->add_option("--out-grid", *opath, "output grid dump")->required();
        c->add_option("--cutoff", *cutoff, "relative support cutoff on f");
        add_common(c, false);
        c->callback([&, path, fpath, gpath, opath, cutoff] {
            run = [&, path, fpath, gpath, opath, cutoff] {
                return cmd_convolve(*path, *fpath, *gpath, *opath, *cutoff, output);
            };
        });
    }
    // homogenize
    {
        auto* c = app.add_subcommand("homogenize", "homogenization integral of a dual grid dump");
        auto path = std::make_shared<std::string>();
        auto gpath = std::make_shared<std::string>();
        auto m = std::make_shared<double>(0.0);
        auto rho = std::make_shared<double>(std::pow(2.0, 1.0 / 16.0));
        auto lmin = std::make_shared<double>(1e-5);
        auto lmax = std::make_shared<double>(1e3);
        auto otol = std::make_shared<double>(1e-8);
        c->add_option("spec", *path, "spec file")->required();
        c->add_option("--grid", *gpath, "dual frame grid dump")->required();
        c->add_option("--m", *m, "homogeneity order");
        c->add_option("--rho", *rho, "quadrature node ratio");
        c->add_option("--lambda-min", *lmin, "lower quadrature cutoff");
        c->add_option("--lambda-max", *lmax, "upper quadrature cutoff");
        c->add_option("--origin-tol", *otol, "S_0 vanishing tolerance at the origin");
        add_common(c, false);
        c->callback([&, path, gpath, m, rho, lmin, lmax, otol] {
            run = [&, path, gpath, m, rho, lmin, lmax, otol] {
                return cmd_homogenize(*path, *gpath, *m, *rho, *lmin, *lmax, *otol, output);
            };
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        return run();
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const DimensionMismatch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const FrameMismatch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const GridMismatch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
