#pragma once

#include <cstdint>
#include <random>

#include "strata/rational.hpp"

namespace strata {

// Seeded random source with portable derived draws. std::mt19937_64 produces
// an implementation-independent stream; the bounded mappings below avoid
// std::uniform_int_distribution, whose output is not pinned by the standard,
// so identical seeds give identical samples on every platform.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    // uniform in [0, n), n >= 1, via rejection
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x;
        do {
            x = gen_();
        } while (x >= limit);
        return x % n;
    }

    // uniform integer in [lo, hi]
    std::int64_t between(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

    // numerator uniform in [-height, height], denominator in [1, height]
    Rational rational(std::int64_t height) {
        const std::int64_t num = between(-height, height);
        const std::int64_t den = between(1, height);
        return Rational(num, den);
    }

    RatVec rational_vector(int dim, std::int64_t height) {
        RatVec v(dim);
        for (auto& x : v) x = rational(height);
        return v;
    }

    // never the zero vector
    RatVec nonzero_rational_vector(int dim, std::int64_t height) {
        for (;;) {
            RatVec v = rational_vector(dim, height);
            if (!is_zero(v)) return v;
        }
    }

    double real01() {
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }

private:
    std::mt19937_64 gen_;
};

} // namespace strata
