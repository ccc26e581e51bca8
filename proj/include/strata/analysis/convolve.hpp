#pragma once

#include "strata/analysis/double_algebra.hpp"
#include "strata/analysis/grid.hpp"
#include "strata/threads.hpp"

namespace strata {

// Group convolution in exponential coordinates,
//   (f * g)(x) = int f(y) g(bch(-y, x)) dy,
// with Haar measure = Lebesgue measure (graded groups are unimodular and BCH
// has unit Jacobian in each argument). Riemann-sum quadrature on the shared
// grid. BCH corrections are brackets and so never touch weight-1 axes; those
// coordinates of bch(-y, x) stay on the lattice and are resolved by index
// arithmetic, leaving interpolation to the higher-weight axes only.
//
// support_cutoff (relative to max |f|) drops negligible f samples before the
// quadrature; 0 keeps the sum exact.
inline GridFunction convolve(const GradedLieAlgebra& alg, const GridFunction& f,
                             const GridFunction& g, double support_cutoff = 0.0) {
    if (f.spec.frame != Frame::primal || g.spec.frame != Frame::primal)
        throw FrameMismatch("convolve: both inputs must be primal");
    if (!f.spec.same_geometry(g.spec)) throw GridMismatch("convolve: grids differ");
    if (f.spec.dim() != alg.dim) throw GridMismatch("convolve: grid does not match the algebra");
    for (int a = 0; a < alg.dim; ++a)
        if (f.spec.weights[a] != alg.weights[a])
            throw GridMismatch("convolve: grid weights do not match the algebra");

    const DoubleAlgebra d = DoubleAlgebra::from(alg);
    const DoubleBch bch(d);
    const int m = alg.dim;
    const std::int64_t n = f.spec.size();
    const double vol = f.spec.cell_volume();

    // step <= 2: bch(-y, x) = x - y - (1/2)[y, x], one bilinear correction
    // per higher-weight coordinate
    struct BilinearTerm {
        int i, j;
        double c;
    };
    std::vector<std::vector<BilinearTerm>> correction;
    if (alg.depth <= 2) {
        correction.assign(m, {});
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                for (const auto& [k, c] : d.table[i][j])
                    correction[k].push_back(BilinearTerm{i, j, -0.5 * c});
    }

    // odd counts have no exact half-turn shift; fall back to interpolation
    std::vector<int> lattice_axes, interp_axes;
    for (int a = 0; a < m; ++a)
        (alg.weights[a] == 1 && f.spec.axes[a].count % 2 == 0 ? lattice_axes : interp_axes)
            .push_back(a);
    if (interp_axes.size() > 8) throw GridMismatch("convolve: too many interpolation axes");

    std::vector<std::int64_t> stride(m);
    {
        std::int64_t s = 1;
        for (int a = m - 1; a >= 0; --a) {
            stride[a] = s;
            s *= f.spec.axes[a].count;
        }
    }

    // f support, index tuples and coordinates gathered once
    const double cutoff = support_cutoff > 0.0 ? support_cutoff * f.max_abs() : 0.0;
    std::vector<std::int64_t> ylist;
    std::vector<double> coords(static_cast<size_t>(n) * m);
    std::vector<int> indices(static_cast<size_t>(n) * m);
    {
        std::vector<int> idx;
        std::vector<double> x;
        for (std::int64_t i = 0; i < n; ++i) {
            f.unflatten(i, idx);
            f.point(idx, x);
            for (int a = 0; a < m; ++a) {
                coords[i * m + a] = x[a];
                indices[i * m + a] = idx[a];
            }
            if (std::abs(f.data[i]) > cutoff) ylist.push_back(i);
        }
    }

    GridFunction out;
    out.spec = f.spec;
    out.data.assign(n, Complex(0.0));

    parallel_for(n, [&](std::int64_t xi) {
        thread_local std::vector<double> neg, z, scratch;
        neg.resize(m);
        z.resize(m);
        scratch.resize(2 * m);
        const double* x = coords.data() + xi * m;
        const int* xidx = indices.data() + xi * m;
        Complex acc = 0.0;
        for (const std::int64_t yi : ylist) {
            const int* yidx = indices.data() + yi * m;
            // lattice part of bch(-y, x): pure translation on weight-1 axes
            std::int64_t base = 0;
            bool inside = true;
            for (const int a : lattice_axes) {
                const int j = xidx[a] - yidx[a] + f.spec.axes[a].count / 2;
                if (j < 0 || j >= f.spec.axes[a].count) {
                    inside = false;
                    break;
                }
                base += stride[a] * j;
            }
            if (!inside) continue;

            const double* y = coords.data() + yi * m;
            if (!correction.empty()) {
                for (const int a : interp_axes) {
                    double corr = 0.0;
                    for (const auto& t : correction[a]) corr += t.c * y[t.i] * x[t.j];
                    z[a] = x[a] - y[a] + corr;
                }
            } else {
                for (int a = 0; a < m; ++a) neg[a] = -y[a];
                bch.eval(neg.data(), x, z.data(), scratch.data());
            }

            // multilinear only across the higher-weight axes
            Complex val = 0.0;
            const int ni = static_cast<int>(interp_axes.size());
            if (ni == 0) {
                val = g.data[base];
            } else {
                int ibase[8];
                double frac[8];
                bool any = true;
                for (int t = 0; t < ni; ++t) {
                    const int a = interp_axes[t];
                    const double u = (z[a] + f.spec.axes[a].half) / f.spec.axes[a].step();
                    const double fl = std::floor(u);
                    ibase[t] = static_cast<int>(fl);
                    frac[t] = u - fl;
                    if (ibase[t] < -1 || ibase[t] > f.spec.axes[a].count - 1) {
                        any = false;
                        break;
                    }
                }
                if (!any) continue;
                for (int corner = 0; corner < (1 << ni); ++corner) {
                    double w = 1.0;
                    std::int64_t off = base;
                    bool ok = true;
                    for (int t = 0; t < ni; ++t) {
                        const int bit = (corner >> t) & 1;
                        const int idx = ibase[t] + bit;
                        const int a = interp_axes[t];
                        if (idx < 0 || idx >= f.spec.axes[a].count) {
                            ok = false;
                            break;
                        }
                        w *= bit ? frac[t] : 1.0 - frac[t];
                        off += stride[a] * idx;
                    }
                    if (ok && w != 0.0) val += w * g.data[off];
                }
            }
            acc += f.data[yi] * val;
        }
        out.data[xi] = acc * vol;
    });
    return out;
}

} // namespace strata
