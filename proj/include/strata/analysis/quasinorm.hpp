#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "strata/analysis/double_algebra.hpp"
#include "strata/rng.hpp"

namespace strata {

// Homogeneous quasi-norm |x| = (sum_i |x_i|^{2N/q_i})^{1/(2N)} with N the lcm
// of the weights. Smooth away from 0 and exactly 1-homogeneous under the
// dilations; any other choice is equivalent. The dual norm uses the same
// weights because the transpose dilation has the same diagonal.
struct QuasiNorm {
    std::vector<int> weights;
    long exponent_lcm = 1; // N
};

inline QuasiNorm make_quasi_norm(const std::vector<int>& weights) {
    QuasiNorm qn;
    qn.weights = weights;
    long n = 1;
    for (int w : weights) n = std::lcm(n, static_cast<long>(w));
    qn.exponent_lcm = n;
    return qn;
}

inline QuasiNorm make_quasi_norm(const GradedLieAlgebra& alg) {
    return make_quasi_norm(alg.weights);
}

inline double quasi_norm(const QuasiNorm& qn, const double* x, size_t n) {
    const double twoN = 2.0 * static_cast<double>(qn.exponent_lcm);
    double sum = 0.0;
    for (size_t i = 0; i < n; ++i)
        sum += std::pow(std::abs(x[i]), twoN / qn.weights[i]);
    return std::pow(sum, 1.0 / twoN);
}

inline double quasi_norm(const QuasiNorm& qn, const std::vector<double>& x) {
    return quasi_norm(qn, x.data(), x.size());
}

inline double dual_quasi_norm(const QuasiNorm& qn, const std::vector<double>& xi) {
    return quasi_norm(qn, xi.data(), xi.size());
}

struct OrbitNormResult {
    double value = 0.0;
    std::vector<double> minimizer; // Lie algebra coordinates of the best exp(A)
};

struct OrbitNormOptions {
    int iterations_per_start = 400;
    double step = 1.0;                               // initial simplex edge
    std::vector<double> per_coordinate_step;         // overrides step when set
    std::vector<std::vector<double>> starts;         // extra deterministic starts
};

// Upper bound on inf_g |Ad*(g) xi| by multi-start Nelder-Mead over
// exponential coordinates. The identity start makes the result <= |xi|, and a
// larger budget only prepends the same evaluations, so the value is monotone
// non-increasing in the budget. Simplex updates are affine combinations of
// vertices, so supplying dilated starts and steps reproduces the search path
// of the undilated problem exactly, up to rounding.
inline OrbitNormResult orbit_quasi_norm(const GradedLieAlgebra& alg, const QuasiNorm& qn,
                                        const std::vector<double>& xi, int budget,
                                        std::uint64_t seed = 1,
                                        const OrbitNormOptions& opts = {}) {
    if (budget < 1) throw OutOfDomain("orbit_quasi_norm: budget must be >= 1");
    const DoubleAlgebra d = DoubleAlgebra::from(alg);
    const int m = alg.dim;

    auto objective = [&](const std::vector<double>& a) {
        return quasi_norm(qn, coadjoint_d(d, a, xi));
    };

    std::vector<std::vector<double>> starts;
    starts.push_back(std::vector<double>(m, 0.0)); // identity
    for (const auto& s : opts.starts) starts.push_back(s);
    SeededRng rng(seed);
    while (static_cast<int>(starts.size()) < budget) {
        std::vector<double> s(m);
        for (auto& v : s) v = 2.0 * rng.real01() - 1.0;
        starts.push_back(std::move(s));
    }
    starts.resize(budget);

    OrbitNormResult best;
    best.value = std::numeric_limits<double>::infinity();

    for (const auto& s0 : starts) {
        // Nelder-Mead with standard coefficients
        struct Vertex {
            std::vector<double> x;
            double f;
        };
        std::vector<Vertex> simplex;
        simplex.push_back({s0, objective(s0)});
        for (int i = 0; i < m; ++i) {
            std::vector<double> x = s0;
            x[i] += opts.per_coordinate_step.empty() ? opts.step : opts.per_coordinate_step[i];
            simplex.push_back({x, objective(x)});
        }
        auto order = [&] {
            std::stable_sort(simplex.begin(), simplex.end(),
                             [](const Vertex& a, const Vertex& b) { return a.f < b.f; });
        };
        order();
        for (int it = 0; it < opts.iterations_per_start; ++it) {
            std::vector<double> centroid(m, 0.0);
            for (int v = 0; v < m; ++v)
                for (int i = 0; i < m; ++i) centroid[i] += simplex[v].x[i] / m;
            auto blend = [&](double t) {
                std::vector<double> x(m);
                for (int i = 0; i < m; ++i)
                    x[i] = centroid[i] + t * (centroid[i] - simplex[m].x[i]);
                return x;
            };
            std::vector<double> xr = blend(1.0);
            const double fr = objective(xr);
            if (fr < simplex[0].f) {
                std::vector<double> xe = blend(2.0);
                const double fe = objective(xe);
                simplex[m] = fe < fr ? Vertex{xe, fe} : Vertex{xr, fr};
            } else if (fr < simplex[m - 1].f) {
                simplex[m] = {xr, fr};
            } else {
                std::vector<double> xc = blend(fr < simplex[m].f ? 0.5 : -0.5);
                const double fc = objective(xc);
                if (fc < std::min(fr, simplex[m].f)) {
                    simplex[m] = {xc, fc};
                } else {
                    for (int v = 1; v <= m; ++v) {
                        for (int i = 0; i < m; ++i)
                            simplex[v].x[i] = 0.5 * (simplex[v].x[i] + simplex[0].x[i]);
                        simplex[v].f = objective(simplex[v].x);
                    }
                }
            }
            order();
        }
        if (simplex[0].f < best.value) {
            best.value = simplex[0].f;
            best.minimizer = simplex[0].x;
        }
    }
    return best;
}

} // namespace strata
