#pragma once

#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "strata/analysis/grid.hpp"
#include "strata/errors.hpp"

namespace strata {

using DualFunction = std::function<Complex(const std::vector<double>&)>;

// Log-uniform quadrature of the homogenization integral. Nodes are geometric,
// lambda_j = rho^j, so dilating the argument by a power of rho shifts the sum
// by whole nodes: homogeneity of the output is exact up to the truncated
// tails for such dilations.
struct HomogenizeSpec {
    double rho = std::pow(2.0, 1.0 / 16.0);
    double lambda_min = 1e-5;
    double lambda_max = 1e3;
    double origin_tol = 1e-8; // S_0 gate, relative to the largest probed value
};

// v(eta) = int_0^inf lambda^{-m} fhat(tdelta_lambda eta) dlambda / lambda,
// realized as a callable on the dual space minus the origin. Requires the
// Fourier-side S_0 condition: fhat must vanish beyond tolerance towards the
// origin, otherwise the integral diverges for m >= 0 and the constructor
// refuses the input.
class Homogenized {
public:
    Homogenized(std::vector<int> weights, DualFunction fhat, double order_m, HomogenizeSpec spec,
                std::vector<std::vector<double>> probes = {})
        : weights_(std::move(weights)), fhat_(std::move(fhat)), m_(order_m), spec_(spec) {
        if (!(spec_.rho > 1.0)) throw OutOfDomain("homogenize: rho must exceed 1");
        if (!(spec_.lambda_min > 0.0) || !(spec_.lambda_min < spec_.lambda_max))
            throw OutOfDomain("homogenize: need 0 < lambda_min < lambda_max");
        j_min_ = static_cast<int>(std::ceil(std::log(spec_.lambda_min) / std::log(spec_.rho)));
        j_max_ = static_cast<int>(std::floor(std::log(spec_.lambda_max) / std::log(spec_.rho)));
        if (probes.empty()) probes = default_probes(static_cast<int>(weights_.size()));
        check_origin_vanishing(probes);
    }

    int node_count() const { return j_max_ - j_min_ + 1; }
    double node_ratio() const { return spec_.rho; }
    double order() const { return m_; }

    Complex operator()(const std::vector<double>& eta) const {
        const int d = static_cast<int>(weights_.size());
        const double lnrho = std::log(spec_.rho);
        std::vector<double> scale(d), step(d), point(d);
        for (int a = 0; a < d; ++a) {
            scale[a] = std::pow(spec_.rho, static_cast<double>(j_min_) * weights_[a]);
            step[a] = std::pow(spec_.rho, weights_[a]);
        }
        double wfactor = std::pow(spec_.rho, -static_cast<double>(j_min_) * m_);
        const double wstep = std::pow(spec_.rho, -m_);
        Complex acc = 0.0;
        for (int j = j_min_; j <= j_max_; ++j) {
            for (int a = 0; a < d; ++a) point[a] = eta[a] * scale[a];
            acc += wfactor * fhat_(point);
            for (int a = 0; a < d; ++a) scale[a] *= step[a];
            wfactor *= wstep;
        }
        return acc * lnrho;
    }

private:
    static std::vector<std::vector<double>> default_probes(int d) {
        std::vector<std::vector<double>> probes;
        for (int a = 0; a < d; ++a) {
            std::vector<double> p(d, 0.0);
            p[a] = 1.0;
            probes.push_back(std::move(p));
        }
        probes.push_back(std::vector<double>(d, 1.0));
        return probes;
    }

    void check_origin_vanishing(const std::vector<std::vector<double>>& probes) const {
        const int d = static_cast<int>(weights_.size());
        double worst = 0.0;
        double scale_max = 0.0;
        std::vector<double> point(d);
        for (const auto& p : probes) {
            double lambda = std::pow(spec_.rho, j_min_);
            double near_origin = 0.0;
            for (int j = j_min_; j <= j_max_; ++j) {
                for (int a = 0; a < d; ++a) point[a] = p[a] * std::pow(lambda, weights_[a]);
                const double v = std::abs(fhat_(point));
                if (j == j_min_) near_origin = v;
                scale_max = std::max(scale_max, v);
                lambda *= spec_.rho;
            }
            worst = std::max(worst, near_origin);
        }
        if (scale_max > 0.0 && worst > spec_.origin_tol * scale_max)
            throw NotVanishingAtOrigin(
                "fhat does not vanish at the origin: |fhat| near 0 is " + std::to_string(worst) +
                " against scale " + std::to_string(scale_max) +
                " (S_0 condition; the homogenization integral would diverge for m >= 0)");
    }

    std::vector<int> weights_;
    DualFunction fhat_;
    double m_ = 0.0;
    HomogenizeSpec spec_;
    int j_min_ = 0;
    int j_max_ = 0;
};

inline Homogenized homogenize(const std::vector<int>& weights, DualFunction fhat, double order_m,
                              const HomogenizeSpec& spec = {},
                              std::vector<std::vector<double>> probes = {}) {
    return Homogenized(weights, std::move(fhat), order_m, spec, std::move(probes));
}

// GridFunction front end: values outside the dump's box read as zero.
inline Homogenized homogenize(const GridFunction& fhat, double order_m,
                              const HomogenizeSpec& spec = {},
                              std::vector<std::vector<double>> probes = {}) {
    if (fhat.spec.frame != Frame::dual) throw FrameMismatch("homogenize: grid must be dual");
    GridFunction copy = fhat;
    auto fn = [copy = std::move(copy)](const std::vector<double>& eta) {
        return copy.interp(eta);
    };
    return Homogenized(fhat.spec.weights, std::move(fn), order_m, spec, std::move(probes));
}

} // namespace strata
