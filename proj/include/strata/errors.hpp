#pragma once

#include <stdexcept>
#include <string>

namespace strata {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input file / CLI argument could not be read or parsed.
struct ParseError : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

// Which structural identity an algebra spec violates.
enum class Identity { antisymmetry, jacobi, graded };

inline const char* identity_name(Identity id) {
    switch (id) {
        case Identity::antisymmetry: return "antisymmetry";
        case Identity::jacobi: return "jacobi";
        case Identity::graded: return "graded";
    }
    return "?";
}

// Carries the first violated identity, the witness triple (basis labels)
// and the nonzero residual, serialized as a string.
struct ValidationError : Error {
    Identity identity;
    std::string witness[3];
    std::string residual;

    ValidationError(Identity id, std::string a, std::string b, std::string c,
                    std::string res)
        : Error(std::string("validation failed [") + identity_name(id) + "] witness (" +
                a + ", " + b + ", " + c + ") residual " + res),
          identity(id), witness{std::move(a), std::move(b), std::move(c)},
          residual(std::move(res)) {}
};

struct DimensionMismatch : Error {
    using Error::Error;
};

struct FrameMismatch : Error {
    using Error::Error;
};

struct GridMismatch : Error {
    using Error::Error;
};

struct NonpositiveScale : Error {
    using Error::Error;
};

struct OutOfDomain : Error {
    using Error::Error;
};

struct UnknownSignature : Error {
    using Error::Error;
};

struct NotGenerating : Error {
    using Error::Error;
};

struct WeightMismatch : Error {
    using Error::Error;
};

struct ConventionMismatch : Error {
    using Error::Error;
};

struct NotVanishingAtOrigin : Error {
    using Error::Error;
};

} // namespace strata
