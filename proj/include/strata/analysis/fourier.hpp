#pragma once

#include <cmath>
#include <numbers>

#include "strata/analysis/grid.hpp"

namespace strata {

namespace fourier_detail {

// out[a, rest] = sum_b kernel(a, b) * in[b, rest], applied along one axis of
// a row-major tensor. rows may differ from cols (resampling onto a new axis).
inline void apply_axis(const std::vector<Complex>& in, std::vector<Complex>& out,
                       const std::vector<int>& shape, int axis, int rows,
                       const std::vector<Complex>& kernel) {
    std::int64_t outer = 1, inner = 1;
    for (int a = 0; a < axis; ++a) outer *= shape[a];
    for (size_t a = axis + 1; a < shape.size(); ++a) inner *= shape[a];
    const int cols = shape[axis];
    out.assign(outer * static_cast<std::int64_t>(rows) * inner, Complex(0.0));
    for (std::int64_t o = 0; o < outer; ++o)
        for (int r = 0; r < rows; ++r) {
            Complex* dst = out.data() + (o * rows + r) * inner;
            for (int b = 0; b < cols; ++b) {
                const Complex k = kernel[static_cast<size_t>(r) * cols + b];
                const Complex* src = in.data() + (o * cols + b) * inner;
                for (std::int64_t i = 0; i < inner; ++i) dst[i] += k * src[i];
            }
        }
}

} // namespace fourier_detail

// Discrete approximation of F f(eta) = int e^{i<eta, xi>} f(xi) dxi as a
// Riemann sum on the primal grid, evaluated on the dual grid. The pairing is
// the coordinate pairing, so the kernel factorizes per axis.
inline GridFunction fourier(const GridFunction& f, const GridSpec& dual_spec) {
    if (f.spec.frame != Frame::primal) throw FrameMismatch("fourier: input must be primal");
    if (dual_spec.frame != Frame::dual) throw FrameMismatch("fourier: target spec must be dual");
    if (dual_spec.dim() != f.spec.dim()) throw GridMismatch("fourier: axis count mismatch");

    std::vector<Complex> cur = f.data;
    std::vector<int> shape(f.spec.dim());
    for (int a = 0; a < f.spec.dim(); ++a) shape[a] = f.spec.axes[a].count;

    std::vector<Complex> next;
    for (int a = 0; a < f.spec.dim(); ++a) {
        const AxisSpec& pa = f.spec.axes[a];
        const AxisSpec& da = dual_spec.axes[a];
        std::vector<Complex> kernel(static_cast<size_t>(da.count) * pa.count);
        for (int r = 0; r < da.count; ++r)
            for (int b = 0; b < pa.count; ++b)
                kernel[static_cast<size_t>(r) * pa.count + b] =
                    std::polar(pa.step(), da.coord(r) * pa.coord(b));
        fourier_detail::apply_axis(cur, next, shape, a, da.count, kernel);
        shape[a] = da.count;
        cur.swap(next);
    }

    GridFunction out;
    out.spec = dual_spec;
    out.spec.weights = f.spec.weights;
    out.data = std::move(cur);
    return out;
}

// Inverse transform with the Plancherel-consistent normalization
// f(xi) = (2 pi)^{-m} int e^{-i<eta, xi>} F(eta) deta.
inline GridFunction inverse_fourier(const GridFunction& fhat, const GridSpec& primal_spec) {
    if (fhat.spec.frame != Frame::dual) throw FrameMismatch("inverse_fourier: input must be dual");
    if (primal_spec.frame != Frame::primal)
        throw FrameMismatch("inverse_fourier: target spec must be primal");
    if (primal_spec.dim() != fhat.spec.dim())
        throw GridMismatch("inverse_fourier: axis count mismatch");

    std::vector<Complex> cur = fhat.data;
    std::vector<int> shape(fhat.spec.dim());
    for (int a = 0; a < fhat.spec.dim(); ++a) shape[a] = fhat.spec.axes[a].count;

    std::vector<Complex> next;
    for (int a = 0; a < fhat.spec.dim(); ++a) {
        const AxisSpec& da = fhat.spec.axes[a];
        const AxisSpec& pa = primal_spec.axes[a];
        const double scale = da.step() / (2.0 * std::numbers::pi);
        std::vector<Complex> kernel(static_cast<size_t>(pa.count) * da.count);
        for (int r = 0; r < pa.count; ++r)
            for (int b = 0; b < da.count; ++b)
                kernel[static_cast<size_t>(r) * da.count + b] =
                    std::polar(scale, -pa.coord(r) * da.coord(b));
        fourier_detail::apply_axis(cur, next, shape, a, pa.count, kernel);
        shape[a] = pa.count;
        cur.swap(next);
    }

    GridFunction out;
    out.spec = primal_spec;
    out.spec.weights = fhat.spec.weights;
    out.data = std::move(cur);
    return out;
}

// Same quadrature, evaluated at one arbitrary dual point.
inline Complex fourier_at(const GridFunction& f, const std::vector<double>& eta) {
    if (f.spec.frame != Frame::primal) throw FrameMismatch("fourier_at: input must be primal");
    Complex acc = 0.0;
    std::vector<int> idx;
    std::vector<double> x;
    for (std::int64_t i = 0; i < f.spec.size(); ++i) {
        f.unflatten(i, idx);
        f.point(idx, x);
        double phase = 0.0;
        for (int a = 0; a < f.spec.dim(); ++a) phase += eta[a] * x[a];
        acc += f.data[i] * std::polar(1.0, phase);
    }
    return acc * f.spec.cell_volume();
}

// Dual box covering `band` of the Nyquist range of the primal grid.
inline GridSpec dual_spec_for(const GridSpec& primal, double band = 0.5) {
    GridSpec d = primal;
    d.frame = Frame::dual;
    for (auto& a : d.axes) a.half = band * std::numbers::pi / a.step();
    return d;
}

} // namespace strata
