#pragma once

#include <complex>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <functional>
#include <string>
#include <vector>

#include "strata/algebra.hpp"
#include "strata/errors.hpp"

#include <nlohmann/json.hpp>

namespace strata {

using Complex = std::complex<double>;

// Uniform axis [-half, half), left endpoints, count samples. For even counts
// the lattice contains 0, and scaling by a power of the step keeps lattice
// points on lattice points, which several dilation tests exploit.
struct AxisSpec {
    double half = 1.0;
    int count = 2;
    double step() const { return 2.0 * half / count; }
    double coord(int i) const { return -half + i * step(); }
    bool operator==(const AxisSpec& o) const { return half == o.half && count == o.count; }
};

struct GridSpec {
    Frame frame = Frame::primal;
    std::vector<AxisSpec> axes;
    std::vector<int> weights; // dilation weight per axis

    void validate() const {
        if (axes.empty() || axes.size() != weights.size())
            throw GridMismatch("grid needs one weight per axis");
        for (const auto& a : axes) {
            if (a.count < 2) throw GridMismatch("grid axes need at least 2 samples");
            if (!(a.half > 0.0)) throw GridMismatch("grid axes need a positive range");
        }
        for (int w : weights)
            if (w < 1) throw GridMismatch("grid weights must be positive");
    }

    int dim() const { return static_cast<int>(axes.size()); }
    std::int64_t size() const {
        std::int64_t n = 1;
        for (const auto& a : axes) n *= a.count;
        return n;
    }
    double cell_volume() const {
        double v = 1.0;
        for (const auto& a : axes) v *= a.step();
        return v;
    }
    bool same_geometry(const GridSpec& o) const {
        return axes == o.axes && weights == o.weights;
    }
};

// Sampled complex function on an axis-aligned box, row-major with axis 0
// slowest. Frame tag decides which dilation acts.
struct GridFunction {
    GridSpec spec;
    std::vector<Complex> data;

    std::int64_t flatten(const std::vector<int>& idx) const {
        std::int64_t f = 0;
        for (int a = 0; a < spec.dim(); ++a) f = f * spec.axes[a].count + idx[a];
        return f;
    }

    void unflatten(std::int64_t f, std::vector<int>& idx) const {
        idx.resize(spec.dim());
        for (int a = spec.dim() - 1; a >= 0; --a) {
            idx[a] = static_cast<int>(f % spec.axes[a].count);
            f /= spec.axes[a].count;
        }
    }

    void point(const std::vector<int>& idx, std::vector<double>& x) const {
        x.resize(spec.dim());
        for (int a = 0; a < spec.dim(); ++a) x[a] = spec.axes[a].coord(idx[a]);
    }

    // multilinear interpolation, zero outside the box
    Complex interp(const double* p) const {
        const int d = spec.dim();
        int base[8];
        double frac[8];
        if (d > 8) throw GridMismatch("grids support up to 8 axes");
        for (int a = 0; a < d; ++a) {
            const double u = (p[a] + spec.axes[a].half) / spec.axes[a].step();
            const double fl = std::floor(u);
            base[a] = static_cast<int>(fl);
            frac[a] = u - fl;
        }
        Complex acc = 0.0;
        const int corners = 1 << d;
        for (int c = 0; c < corners; ++c) {
            double w = 1.0;
            std::int64_t flat = 0;
            bool inside = true;
            for (int a = 0; a < d; ++a) {
                const int bit = (c >> a) & 1;
                const int i = base[a] + bit;
                w *= bit ? frac[a] : 1.0 - frac[a];
                if (i < 0 || i >= spec.axes[a].count) {
                    inside = false;
                    break;
                }
                flat = flat * spec.axes[a].count + i;
            }
            if (inside && w != 0.0) acc += w * data[flat];
        }
        return acc;
    }

    Complex interp(const std::vector<double>& p) const { return interp(p.data()); }

    Complex integral() const {
        Complex s = 0.0;
        for (const auto& v : data) s += v;
        return s * spec.cell_volume();
    }

    double max_abs() const {
        double m = 0.0;
        for (const auto& v : data) m = std::max(m, std::abs(v));
        return m;
    }
};

inline GridFunction sample_grid(const GridSpec& spec,
                                const std::function<Complex(const std::vector<double>&)>& fn) {
    spec.validate();
    GridFunction g;
    g.spec = spec;
    g.data.resize(spec.size());
    std::vector<int> idx;
    std::vector<double> x;
    for (std::int64_t f = 0; f < spec.size(); ++f) {
        g.unflatten(f, idx);
        g.point(idx, x);
        g.data[f] = fn(x);
    }
    return g;
}

inline GridSpec grid_spec_for(const GradedLieAlgebra& alg, Frame frame, double half, int count) {
    GridSpec s;
    s.frame = frame;
    s.axes.assign(alg.dim, AxisSpec{half, count});
    s.weights = alg.weights;
    return s;
}

// --- binary dump -----------------------------------------------------------
// line 1: "STRATAGRID 1"
// line 2: JSON header {"frame","axes":[{"half","count"}...],"weights":[...]}
// then size*2 IEEE-754 doubles, little endian, row major, re then im.

namespace grid_io {

inline void put_le_double(std::string& out, double v) {
    std::uint64_t bits;
    std::memcpy(&bits, &v, 8);
    for (int b = 0; b < 8; ++b) out.push_back(static_cast<char>((bits >> (8 * b)) & 0xff));
}

inline double get_le_double(const unsigned char* p) {
    std::uint64_t bits = 0;
    for (int b = 0; b < 8; ++b) bits |= static_cast<std::uint64_t>(p[b]) << (8 * b);
    double v;
    std::memcpy(&v, &bits, 8);
    return v;
}

} // namespace grid_io

inline void save_grid(const std::string& path, const GridFunction& g) {
    nlohmann::ordered_json header;
    header["frame"] = g.spec.frame == Frame::primal ? "primal" : "dual";
    header["axes"] = nlohmann::json::array();
    for (const auto& a : g.spec.axes)
        header["axes"].push_back(nlohmann::ordered_json{{"half", a.half}, {"count", a.count}});
    header["weights"] = g.spec.weights;

    std::string body;
    body.reserve(g.data.size() * 16);
    for (const auto& v : g.data) {
        grid_io::put_le_double(body, v.real());
        grid_io::put_le_double(body, v.imag());
    }

    std::ofstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot write '" + path + "'");
    f << "STRATAGRID 1\n" << header.dump() << "\n" << body;
}

inline GridFunction load_grid(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open '" + path + "'");
    std::string magic, header_line;
    if (!std::getline(f, magic) || magic != "STRATAGRID 1")
        throw ParseError("'" + path + "': not a STRATAGRID 1 dump");
    if (!std::getline(f, header_line)) throw ParseError("'" + path + "': missing grid header");

    GridFunction g;
    try {
        const auto header = nlohmann::json::parse(header_line);
        g.spec.frame = header.at("frame") == "primal" ? Frame::primal : Frame::dual;
        for (const auto& a : header.at("axes"))
            g.spec.axes.push_back(AxisSpec{a.at("half").get<double>(), a.at("count").get<int>()});
        g.spec.weights = header.at("weights").get<std::vector<int>>();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("'" + path + "': bad grid header: " + e.what());
    }
    try {
        g.spec.validate();
    } catch (const GridMismatch& e) {
        throw ParseError("'" + path + "': " + e.what());
    }

    const std::int64_t n = g.spec.size();
    std::string body(static_cast<size_t>(n) * 16, '\0');
    f.read(body.data(), static_cast<std::streamsize>(body.size()));
    if (f.gcount() != static_cast<std::streamsize>(body.size()))
        throw ParseError("'" + path + "': truncated sample block");
    g.data.resize(n);
    const auto* p = reinterpret_cast<const unsigned char*>(body.data());
    for (std::int64_t i = 0; i < n; ++i)
        g.data[i] = Complex(grid_io::get_le_double(p + 16 * i), grid_io::get_le_double(p + 16 * i + 8));
    return g;
}

} // namespace strata
