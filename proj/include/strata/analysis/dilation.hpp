#pragma once

#include <cmath>

#include "strata/analysis/grid.hpp"

namespace strata {

// Pushforward of a function under delta_lambda:
//   (delta_{lambda *} f)(x) = lambda^{-Q} f(delta_{1/lambda} x),
// Q the homogeneous dimension. Resampled onto `target` (the input grid by
// default) with multilinear interpolation; the support scales by delta_lambda.
inline GridFunction pushforward_dilate(const GridFunction& f, double lambda,
                                       const GridSpec* target = nullptr) {
    if (f.spec.frame != Frame::primal)
        throw FrameMismatch("pushforward_dilate: input must be primal");
    if (!(lambda > 0.0)) throw NonpositiveScale("pushforward_dilate: lambda must be positive");
    const GridSpec& out_spec = target ? *target : f.spec;
    if (out_spec.frame != Frame::primal)
        throw FrameMismatch("pushforward_dilate: target must be primal");
    if (out_spec.dim() != f.spec.dim()) throw GridMismatch("pushforward_dilate: axis mismatch");

    long q = 0;
    for (int w : f.spec.weights) q += w;
    const double jac = std::pow(lambda, -static_cast<double>(q));

    GridFunction out;
    out.spec = out_spec;
    out.spec.weights = f.spec.weights;
    out.data.resize(out_spec.size());
    std::vector<int> idx;
    std::vector<double> x;
    std::vector<double> y(f.spec.dim());
    for (std::int64_t i = 0; i < out_spec.size(); ++i) {
        out.unflatten(i, idx);
        out.point(idx, x);
        for (int a = 0; a < f.spec.dim(); ++a)
            x[a] *= std::pow(lambda, -f.spec.weights[a]);
        out.data[i] = jac * f.interp(x);
    }
    return out;
}

// Pullback on the dual side: g(eta) = fhat(tdelta_lambda eta). This is what
// the Fourier transform turns a primal pushforward into.
inline GridFunction pullback_dilate_dual(const GridFunction& fhat, double lambda,
                                         const GridSpec* target = nullptr) {
    if (fhat.spec.frame != Frame::dual)
        throw FrameMismatch("pullback_dilate_dual: input must be dual");
    if (!(lambda > 0.0)) throw NonpositiveScale("pullback_dilate_dual: lambda must be positive");
    const GridSpec& out_spec = target ? *target : fhat.spec;
    if (out_spec.frame != Frame::dual)
        throw FrameMismatch("pullback_dilate_dual: target must be dual");
    if (out_spec.dim() != fhat.spec.dim())
        throw GridMismatch("pullback_dilate_dual: axis mismatch");

    GridFunction out;
    out.spec = out_spec;
    out.spec.weights = fhat.spec.weights;
    out.data.resize(out_spec.size());
    std::vector<int> idx;
    std::vector<double> x;
    for (std::int64_t i = 0; i < out_spec.size(); ++i) {
        out.unflatten(i, idx);
        out.point(idx, x);
        for (int a = 0; a < fhat.spec.dim(); ++a)
            x[a] *= std::pow(lambda, fhat.spec.weights[a]);
        out.data[i] = fhat.interp(x);
    }
    return out;
}

// Target box scaled by lambda^{q_a} per axis; node-to-node image of the grid
// under the dilation.
inline GridSpec dilated_spec(const GridSpec& s, double lambda) {
    GridSpec out = s;
    for (int a = 0; a < s.dim(); ++a) out.axes[a].half *= std::pow(lambda, s.weights[a]);
    return out;
}

} // namespace strata
