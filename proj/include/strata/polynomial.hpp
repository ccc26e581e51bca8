#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "strata/rational.hpp"

namespace strata {

// Univariate polynomial with rational coefficients, ascending powers.
// Used for structure constants of one-parameter algebra families.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(Rational constant) {
        if (constant != 0) coeffs_.push_back(std::move(constant));
    }
    explicit Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static Polynomial variable() { return Polynomial(std::vector<Rational>{Rational(0), Rational(1)}); }

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    Rational evaluate(const Rational& t) const {
        Rational acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
        return acc;
    }

    Polynomial& operator+=(const Polynomial& o) {
        if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
        for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }

    Polynomial operator+(const Polynomial& o) const {
        Polynomial r = *this;
        r += o;
        return r;
    }

    Polynomial operator-() const {
        Polynomial r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    Polynomial operator-(const Polynomial& o) const { return *this + (-o); }

    Polynomial operator*(const Polynomial& o) const {
        if (is_zero() || o.is_zero()) return Polynomial();
        std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
        for (size_t i = 0; i < coeffs_.size(); ++i)
            for (size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
        return Polynomial(std::move(out));
    }

    bool operator==(const Polynomial& o) const { return coeffs_ == o.coeffs_; }

    // "poly(c0,c1,...)" for nonconstant, plain rational otherwise
    std::string str() const {
        if (coeffs_.empty()) return "0";
        if (coeffs_.size() == 1) return to_string(coeffs_[0]);
        std::string s = "poly(";
        for (size_t i = 0; i < coeffs_.size(); ++i) {
            if (i) s += ',';
            s += to_string(coeffs_[i]);
        }
        return s + ")";
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_;
};

} // namespace strata
