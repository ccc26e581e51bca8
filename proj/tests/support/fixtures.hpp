#pragma once

#include <string>

#include "strata/family.hpp"
#include "strata/freelie.hpp"
#include "strata/specfile.hpp"

namespace fixtures {

inline std::string data_path(const std::string& name) {
    return std::string(STRATA_DATA_DIR) + "/" + name;
}

inline strata::GradedLieAlgebra heisenberg() {
    return strata::load_algebra(R"(name heisenberg
generator X 1
generator Y 1
generator Z 2
bracket X Y = 1 Z
)");
}

inline strata::GradedLieAlgebra engel() {
    return strata::load_algebra(R"(name engel
generator X 1
generator Y 1
generator Z 2
generator T 3
bracket X Y = 1 Z
bracket X Z = 1 T
)");
}

inline strata::GradedLieAlgebra abelian(int n) {
    std::string spec = "name abelian\n";
    for (int i = 1; i <= n; ++i) spec += "generator E" + std::to_string(i) + " 1\n";
    return strata::load_algebra(spec);
}

inline strata::GradedLieAlgebra h3_plus_r() {
    return strata::load_algebra(R"(name h3-plus-r
generator X 1
generator Y 1
generator W 2
generator Z 2
bracket X Y = 1 W
)");
}

inline strata::AlgebraFamily heis_family() {
    auto spec = strata::load_spec_text(R"(name heis-family
param t 0 1
generator X 1
generator Y 1
generator Z 2
bracket X Y = poly(0,1) Z
)");
    return spec.family;
}

// dual point with a single nonzero user coordinate
inline strata::Vec dual_axis(const strata::GradedLieAlgebra& alg, const std::string& label,
                             strata::Rational value = strata::Rational(1)) {
    strata::RatVec v(alg.dim, strata::Rational(0));
    v[alg.label_index(label)] = value;
    return strata::dual(std::move(v));
}

inline strata::Vec primal_axis(const strata::GradedLieAlgebra& alg, const std::string& label,
                               strata::Rational value = strata::Rational(1)) {
    strata::RatVec v(alg.dim, strata::Rational(0));
    v[alg.label_index(label)] = value;
    return strata::primal(std::move(v));
}

} // namespace fixtures
