// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Runs the worked examples exactly (rational arithmetic) and the
// numerics at their pinned tolerances.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numbers>
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
#include "strata/specfile.hpp"

#include "../support/fixtures.hpp"
#include "../support/matrix_oracle.hpp"
#include "../support/witt_oracle.hpp"

using namespace strata;

namespace {

struct Checker {
    std::vector<std::string> failures;
    void require(bool ok, const std::string& what) {
        if (!ok) failures.push_back(what);
    }
};

double seconds_since(const std::chrono::steady_clock::time_point& t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string run_cli_capture(const std::string& args, int& exit_code) {
    const std::string cmd = std::string(STRATA_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
        exit_code = -1;
        return {};
    }
    std::string out;
    std::array<char, 4096> buf{};
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    const int status = pclose(pipe);
    exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return out;
}

double rel_l2(const GridFunction& got, const GridFunction& want) {
    double err = 0, ref = 0;
    for (size_t i = 0; i < got.data.size(); ++i) {
        err += std::norm(got.data[i] - want.data[i]);
        ref += std::norm(want.data[i]);
    }
    return std::sqrt(err / ref);
}

// ---------------------------------------------------------------------------

void criterion_1(Checker& c) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto alg = fixtures::heisenberg();
    const std::uint64_t seed = 2026;
    const auto table = enumerate_strata(alg, 1000, seed);
    c.require(table.entries.size() == 2, "expected exactly 2 signatures, got " +
                                             std::to_string(table.entries.size()));

    const auto generic = jump_indices(alg, fixtures::dual_axis(alg, "Z"));
    c.require(table.entries[0].signature == generic, "stratum 1 is not the z != 0 stratum");

    // replay the exact sampling: membership is decided by the z coordinate
    const int zidx = alg.label_index("Z");
    std::vector<RatVec> points = structured_probes(alg.dim);
    SeededRng rng(seed);
    for (int s = 0; s < 1000; ++s) points.push_back(rng.nonzero_rational_vector(alg.dim, 10));
    long bad = 0;
    for (const auto& p : points) {
        const bool is_generic = jump_indices(alg, dual(p)) == generic;
        if (is_generic != (p[zidx] != 0)) ++bad;
    }
    c.require(bad == 0, std::to_string(bad) + " samples landed in the wrong stratum");
    const double dt = seconds_since(t0);
    c.require(dt < 1.0, "runtime " + std::to_string(dt) + "s exceeds 1s");
}

void criterion_2(Checker& c) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto alg = fixtures::engel();
    const auto table = enumerate_strata(alg, 1000, 2026);
    c.require(table.entries.size() == 3, "expected exactly 3 signatures, got " +
                                             std::to_string(table.entries.size()));

    const StratumTable* tp = &table;
    const auto ct = classify(alg, fixtures::dual_axis(alg, "T"), tp);
    const auto cz = classify(alg, fixtures::dual_axis(alg, "Z"), tp);
    const auto cx = classify(alg, fixtures::dual_axis(alg, "X"), tp);
    c.require(ct.stratum == 1 && cz.stratum == 2 && cx.stratum == 3,
              "representatives T*, Z*, X* do not classify to strata 1, 2, 3");
    c.require(ct.orbit_dim == 2 && cz.orbit_dim == 2 && cx.orbit_dim == 0,
              "orbit dimensions are not (2, 2, 0)");
    const double dt = seconds_since(t0);
    c.require(dt < 2.0, "runtime " + std::to_string(dt) + "s exceeds 2s");
}

void criterion_3(Checker& c) {
    const auto fam = fixtures::heis_family();
    const std::vector<Rational> ts{Rational(0), Rational(1, 4), Rational(1, 2), Rational(1)};
    const auto fs = stratify_family(fam, ts, 400, 2026);
    c.require(fs.transfer_violations == 0, "transfer violations while aligning fibers");
    c.require(fs.merged.size() == 2, "expected 2 merged strata, got " +
                                         std::to_string(fs.merged.size()));
    if (fs.merged.size() == 2) {
        c.require(!fs.merged[0].present[0], "generic stratum should be empty at t = 0");
        for (size_t f = 1; f < ts.size(); ++f)
            c.require(fs.merged[0].present[f],
                      "generic stratum missing at t = " + to_string(ts[f]));
        for (size_t f = 0; f < ts.size(); ++f)
            c.require(fs.merged[1].present[f], "top stratum missing at t = " + to_string(ts[f]));
    }
    // the generic fiber stratum is the z != 0 locus, so zt != 0 overall
    for (size_t f = 0; f < ts.size(); ++f) {
        const auto fiber = evaluate_family(fam, ts[f]);
        const Vec probe = dual(fiber.user_to_internal({Rational(1), Rational(1), Rational(1)}));
        const bool top = jump_indices(fiber, probe).all_empty();
        c.require(top == (ts[f] == 0), "zt = 0 locus misclassified at t = " + to_string(ts[f]));
    }
}

void criterion_4(Checker& c) {
    const std::vector<GradedLieAlgebra> fixtures_list = {
        fixtures::heisenberg(), fixtures::engel(), hall_basis({1, 1}, 3, {"X", "Y"}).algebra,
        fixtures::h3_plus_r()};
    for (const auto& alg : fixtures_list) {
        SeededRng rng(404 + alg.dim);
        long violations = 0;
        for (int i = 0; i < 20; ++i) {
            const Vec xi = dual(rng.rational_vector(alg.dim, 10));
            const auto sig = jump_indices(alg, xi);
            for (int move = 0; move < 10; ++move) {
                const GroupElement g{rng.rational_vector(alg.dim, 10)};
                if (!(jump_indices(alg, coadjoint(alg, g, xi)) == sig)) ++violations;
            }
        }
        for (int i = 0; i < 10; ++i) {
            const Vec xi = dual(rng.rational_vector(alg.dim, 10));
            const auto sig = jump_indices(alg, xi);
            for (int move = 0; move < 5; ++move) {
                Rational lambda = rng.rational(10);
                if (lambda <= 0) lambda = Rational(1) - lambda;
                if (!(jump_indices(alg, dilate(alg, lambda, xi)) == sig)) ++violations;
            }
        }
        c.require(violations == 0, alg.name + ": " + std::to_string(violations) +
                                       " invariance violations");
    }
}

void criterion_5(Checker& c) {
    const std::vector<GradedLieAlgebra> fixtures_list = {
        fixtures::heisenberg(), fixtures::engel(), hall_basis({1, 1}, 3, {"X", "Y"}).algebra,
        fixtures::h3_plus_r()};
    for (const auto& alg : fixtures_list) {
        SeededRng rng(505 + alg.dim);
        long violations = 0;
        for (int i = 0; i < 500; ++i) {
            const Vec xi = dual(rng.rational_vector(alg.dim, 10));
            const int jm = static_cast<int>(jump_indices(alg, xi).sets[alg.dim - 1].size());
            const int od = alg.dim - radical_dim(alg, xi, alg.dim);
            if (jm != od || od % 2 != 0) ++violations;
        }
        c.require(violations == 0,
                  alg.name + ": " + std::to_string(violations) + " orbit-dimension violations");
    }
}

void criterion_6(Checker& c) {
    const auto h3 = fixtures::heisenberg();
    const auto engel = fixtures::engel();
    const auto rep3 = oracle::h3_rep(h3);
    const auto rep4 = oracle::engel_rep(engel);
    SeededRng rng(606);
    long mismatches = 0;
    for (int i = 0; i < 200; ++i) {
        const RatVec a3 = rng.rational_vector(3, 8), b3 = rng.rational_vector(3, 8);
        if (bch(h3, primal(a3), primal(b3)).c != rep3.bch(a3, b3)) ++mismatches;
        const RatVec a4 = rng.rational_vector(4, 8), b4 = rng.rational_vector(4, 8);
        if (bch(engel, primal(a4), primal(b4)).c != rep4.bch(a4, b4)) ++mismatches;
    }
    c.require(mismatches == 0, std::to_string(mismatches) + " BCH oracle mismatches");

    long assoc_bad = 0;
    for (int i = 0; i < 200; ++i) {
        for (const auto* alg : {&h3, &engel}) {
            const Vec a = primal(rng.rational_vector(alg->dim, 8));
            const Vec b = primal(rng.rational_vector(alg->dim, 8));
            const Vec cc = primal(rng.rational_vector(alg->dim, 8));
            if (bch(*alg, bch(*alg, a, b), cc).c != bch(*alg, a, bch(*alg, b, cc)).c) ++assoc_bad;
        }
    }
    c.require(assoc_bad == 0, std::to_string(assoc_bad) + " associativity violations");
}

void criterion_7(Checker& c) {
    c.require(hall_basis({1, 1}, 2).algebra.dim == 3, "free(1,1,2) should have dim 3");
    c.require(hall_basis({1, 1, 2}, 2).algebra.dim == 4, "free((1,1,2),2) should have dim 4");
    for (int depth = 1; depth <= 6; ++depth) {
        const auto hb = hall_basis({1, 1}, depth);
        const auto dims = oracle::witt_dims({1, 1}, depth);
        for (int w = 1; w <= depth; ++w) {
            long got = 0;
            for (int i = 0; i < hb.algebra.dim; ++i)
                if (hb.algebra.weights[i] == w) ++got;
            c.require(got == dims[w], "free(1,1," + std::to_string(depth) + ") weight " +
                                          std::to_string(w) + ": dim " + std::to_string(got) +
                                          " != Witt " + std::to_string(dims[w]));
        }
    }
}

void criterion_8(Checker& c) {
    const auto t0 = std::chrono::steady_clock::now();

    const auto engel = fixtures::engel();
    const auto hb1 = hall_basis({1, 1}, 3, {"X", "Y"});
    const auto surj1 = canonical_surjection(
        hb1, engel, {fixtures::primal_axis(engel, "X"), fixtures::primal_axis(engel, "Y")});
    const auto b1 = transfer_check_batch(surj1, 100, 2026);
    c.require(b1.violations == 0,
              "engel cover: " + std::to_string(b1.violations) + " violations / 100");

    const auto h3r = fixtures::h3_plus_r();
    const auto hb2 = hall_basis({1, 1, 2}, 2, {"X", "Y", "Z"});
    const auto surj2 = canonical_surjection(hb2, h3r,
                                            {fixtures::primal_axis(h3r, "X"),
                                             fixtures::primal_axis(h3r, "Y"),
                                             fixtures::primal_axis(h3r, "Z")});
    const auto b2 = transfer_check_batch(surj2, 100, 2026);
    c.require(b2.violations == 0,
              "h3+R cover: " + std::to_string(b2.violations) + " violations / 100");

    // paper-style cover with every basis vector as a generator
    const auto hb3 = hall_basis({1, 1, 2, 2}, 2, {"X", "Y", "W", "Z"});
    const auto surj3 = canonical_surjection(
        hb3, h3r, {fixtures::primal_axis(h3r, "X"), fixtures::primal_axis(h3r, "Y"),
                   fixtures::primal_axis(h3r, "W"), fixtures::primal_axis(h3r, "Z")});
    const auto b3 = transfer_check_batch(surj3, 100, 2026);
    c.require(b3.violations == 0,
              "h3+R full cover: " + std::to_string(b3.violations) + " violations / 100");

    const double dt = seconds_since(t0);
    c.require(dt < 5.0, "runtime " + std::to_string(dt) + "s exceeds 5s");
}

void criterion_9(Checker& c) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto h3 = fixtures::heisenberg();
    const GridSpec base = grid_spec_for(h3, Frame::primal, 7.0, 32);
    const auto f = sample_grid(base, [](const std::vector<double>& x) {
        double s = 0;
        for (double v : x) s += v * v;
        return Complex(std::exp(-s / 2.0));
    });
    for (const double lambda : {0.5, 2.0, 3.0}) {
        const GridSpec pushed_spec = dilated_spec(base, lambda);
        const auto pushed = pushforward_dilate(f, lambda, &pushed_spec);
        const GridSpec dspec = dual_spec_for(pushed_spec, 1.0);
        const auto lhs = fourier(pushed, dspec);
        GridSpec scaled = dspec;
        for (int a = 0; a < 3; ++a) scaled.axes[a].half *= std::pow(lambda, base.weights[a]);
        const auto rhs = fourier(f, scaled);
        const double rel = rel_l2(lhs, rhs);
        c.require(rel <= 1e-6, "lambda " + std::to_string(lambda) + ": relative error " +
                                   std::to_string(rel) + " exceeds 1e-6");
    }
    const double dt = seconds_since(t0);
    c.require(dt < 10.0, "runtime " + std::to_string(dt) + "s exceeds 10s");
}

void criterion_10(Checker& c) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto h3 = fixtures::heisenberg();
    const auto qn = make_quasi_norm(h3);
    const auto profile = [qn](const std::vector<double>& eta) {
        const double r = dual_quasi_norm(qn, eta);
        return Complex(r * r * std::exp(-r * r));
    };
    HomogenizeSpec spec;
    const auto v = homogenize(h3.weights, profile, 0.0, spec);

    const std::vector<double> eta{0.3, 1.1, -0.4};
    std::vector<double> eta_rho = eta;
    for (int a = 0; a < 3; ++a) eta_rho[a] *= std::pow(spec.rho, h3.weights[a]);
    const double drift = std::abs(v(eta_rho) / v(eta) - 1.0);
    c.require(drift <= 1e-10,
              "grid-ratio homogeneity drift " + std::to_string(drift) + " exceeds 1e-10");

    const double r0 = dual_quasi_norm(qn, eta);
    const double lnrho = std::log(spec.rho);
    const int jmin = static_cast<int>(std::ceil(std::log(spec.lambda_min) / lnrho));
    const int jmax = static_cast<int>(std::floor(std::log(spec.lambda_max) / lnrho));
    double oracle_value = 0.0;
    for (int j = jmin; j <= jmax; ++j) {
        const double s = std::pow(spec.rho, j) * r0;
        oracle_value += s * s * std::exp(-s * s) * lnrho;
    }
    const double rel = std::abs(v(eta).real() - oracle_value) / oracle_value;
    c.require(rel <= 1e-8, "1-d quadrature oracle mismatch " + std::to_string(rel));

    bool rejected = false;
    try {
        homogenize(
            h3.weights,
            [](const std::vector<double>& eta_in) {
                double s = 0;
                for (double u : eta_in) s += u * u;
                return Complex(std::exp(-s));
            },
            0.0, spec);
    } catch (const NotVanishingAtOrigin&) {
        rejected = true;
    }
    c.require(rejected, "non-vanishing input was not rejected");
    const double dt = seconds_since(t0);
    c.require(dt < 5.0, "runtime " + std::to_string(dt) + "s exceeds 5s");
}

void criterion_11(Checker& c) {
    // abelian closed form on R^2, 64 points per axis
    const auto r2 = fixtures::abelian(2);
    const GridSpec plane = grid_spec_for(r2, Frame::primal, 8.0, 64);
    const double s1 = 0.8, s2 = 0.6;
    auto gauss2 = [](double s) {
        return [s](const std::vector<double>& x) {
            return Complex(std::exp(-(x[0] * x[0] + x[1] * x[1]) / (2.0 * s * s)));
        };
    };
    const auto f2 = sample_grid(plane, gauss2(s1));
    const auto g2 = sample_grid(plane, gauss2(s2));
    const auto conv = convolve(r2, f2, g2, 1e-15);
    const double sc = std::sqrt(s1 * s1 + s2 * s2);
    const double amp = 2.0 * std::numbers::pi * s1 * s1 * s2 * s2 / (sc * sc);
    const auto want = sample_grid(plane, [&](const std::vector<double>& x) {
        return Complex(amp * std::exp(-(x[0] * x[0] + x[1] * x[1]) / (2.0 * sc * sc)));
    });
    const double rel_ab = rel_l2(conv, want);
    c.require(rel_ab <= 1e-3,
              "abelian gaussian convolution error " + std::to_string(rel_ab) + " exceeds 1e-3");

    // dilation automorphism on H3 at 32 samples per axis
    const auto h3 = fixtures::heisenberg();
    const GridSpec spec = grid_spec_for(h3, Frame::primal, 6.0, 32);
    auto gauss3 = [](double s) {
        return [s](const std::vector<double>& x) {
            return Complex(std::exp(-(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]) / (2.0 * s * s)));
        };
    };
    const auto a = sample_grid(spec, gauss3(0.55));
    const auto b = sample_grid(spec, [](const std::vector<double>& x) {
        return Complex(x[1] * std::exp(-(x[0] * x[0] + x[1] * x[1] + x[2] * x[2])));
    });
    const double lambda = 2.0;
    const GridSpec big = dilated_spec(spec, lambda);
    const auto lhs = pushforward_dilate(convolve(h3, a, b, 1e-15), lambda, &big);
    const auto rhs = convolve(h3, pushforward_dilate(a, lambda, &big),
                              pushforward_dilate(b, lambda, &big), 1e-15);
    const double rel_h3 = rel_l2(lhs, rhs);
    c.require(rel_h3 <= 1e-2,
              "H3 dilation-automorphism error " + std::to_string(rel_h3) + " exceeds 1e-2");
}

void criterion_12(Checker& c) {
    const std::string spec = fixtures::data_path("engel.alg");
    for (const std::string& args :
         {"stratify " + spec + " --samples 300 --seed 42",
          "classify " + spec + " 1,2/3,-1,5 --samples 100 --seed 9",
          "cover-check " + spec + " --free-depth 3 --images X,Y --samples 50 --seed 7"}) {
        int code1 = 0, code2 = 0;
        const std::string out1 = run_cli_capture(args, code1);
        const std::string out2 = run_cli_capture(args, code2);
        c.require(code1 == 0 && code2 == 0, "CLI run failed: " + args);
        c.require(!out1.empty() && out1 == out2, "outputs differ between runs: " + args);
    }
}

} // namespace

int main() {
    struct Entry {
        int id;
        const char* label;
        std::function<void(Checker&)> body;
    };
    const std::vector<Entry> criteria = {
        {1, "Heisenberg stratification: 2 strata, z != 0 generic, < 1 s", criterion_1},
        {2, "Engel stratification: 3 strata, orbit dims (2,2,0), < 2 s", criterion_2},
        {3, "family degeneration: generic stratum empty exactly at t = 0", criterion_3},
        {4, "signature invariance under coadjoint moves and dilations", criterion_4},
        {5, "orbit dimension law |J^m| = m - dim g_m(xi), even", criterion_5},
        {6, "BCH matrix oracle and associativity, exact", criterion_6},
        {7, "free Lie dimensions against the Witt oracle", criterion_7},
        {8, "jump-index transfer formula on free covers, < 5 s", criterion_8},
        {9, "Fourier/dilation equivariance <= 1e-6, < 10 s", criterion_9},
        {10, "homogenization: exact node homogeneity, oracle, S_0 gate, < 5 s", criterion_10},
        {11, "convolution: abelian closed form 1e-3, H3 automorphism 1e-2", criterion_11},
        {12, "byte-identical structured reports for identical seeds", criterion_12},
    };

    int failed = 0;
    for (const auto& entry : criteria) {
        Checker checker;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            entry.body(checker);
        } catch (const std::exception& e) {
            checker.failures.push_back(std::string("exception: ") + e.what());
        }
        const double dt = seconds_since(t0);
        char line[512];
        std::snprintf(line, sizeof(line), "%s [%2d] %s (%.2fs)",
                      checker.failures.empty() ? "PASS" : "FAIL", entry.id, entry.label, dt);
        std::cout << line << "\n";
        for (const auto& f : checker.failures) std::cout << "       - " << f << "\n";
        if (!checker.failures.empty()) ++failed;
    }
    if (failed) std::cout << failed << " criteria failed\n";
    return failed;
}
