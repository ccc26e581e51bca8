#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "strata/algebra.hpp"
#include "strata/family.hpp"

namespace strata {

// Algebra spec files, one directive per line:
//
//   name heisenberg
//   generator X 1
//   generator Y 1
//   generator Z 2
//   bracket X Y = 1 Z
//
// Bracket values are '+'-separated (coefficient, label) pairs; coefficients
// are rationals "p/q" or, in families, "poly(c0,c1,...)" in the parameter
// declared by "param t <lo> <hi>". '#' starts a comment.

struct LoadedSpec {
    bool is_family = false;
    GradedLieAlgebra algebra; // valid when !is_family
    AlgebraFamily family;     // valid when is_family
};

namespace detail {

inline std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> toks;
    std::string cur;
    for (char ch : line) {
        if (ch == '#') break;
        if (std::isspace(static_cast<unsigned char>(ch))) {
            if (!cur.empty()) toks.push_back(std::move(cur)), cur.clear();
        } else {
            cur += ch;
        }
    }
    if (!cur.empty()) toks.push_back(std::move(cur));
    return toks;
}

inline Polynomial parse_coefficient(const std::string& tok, bool family_allowed) {
    if (tok.rfind("poly(", 0) == 0) {
        if (!family_allowed) throw ParseError("poly(...) coefficient outside a family spec");
        if (tok.back() != ')') throw ParseError("unterminated poly(...) in '" + tok + "'");
        std::vector<Rational> cs;
        std::string inner = tok.substr(5, tok.size() - 6);
        std::stringstream ss(inner);
        std::string piece;
        while (std::getline(ss, piece, ',')) cs.push_back(parse_rational(piece));
        if (cs.empty()) throw ParseError("empty poly(...) coefficient");
        return Polynomial(std::move(cs));
    }
    return Polynomial(parse_rational(tok));
}

} // namespace detail

inline LoadedSpec load_spec_text(const std::string& text) {
    FamilySpec spec;
    bool has_param = false;
    bool any_generator = false;
    std::vector<std::string> labels;

    auto label_pos = [&](const std::string& l) {
        for (size_t i = 0; i < labels.size(); ++i)
            if (labels[i] == l) return static_cast<int>(i);
        throw ParseError("unknown label '" + l + "'");
    };

    std::stringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto toks = detail::tokenize(line);
        if (toks.empty()) continue;
        const std::string& kw = toks[0];
        try {
            if (kw == "name") {
                if (toks.size() != 2) throw ParseError("name takes one token");
                spec.name = toks[1];
            } else if (kw == "param") {
                if (toks.size() != 4) throw ParseError("param takes: name lo hi");
                spec.param = toks[1];
                spec.lo = parse_rational(toks[2]);
                spec.hi = parse_rational(toks[3]);
                has_param = true;
            } else if (kw == "generator") {
                if (toks.size() != 3) throw ParseError("generator takes: label weight");
                for (const auto& l : labels)
                    if (l == toks[1]) throw ParseError("duplicate label '" + toks[1] + "'");
                labels.push_back(toks[1]);
                int w = 0;
                try {
                    w = std::stoi(toks[2]);
                } catch (...) {
                    throw ParseError("bad weight '" + toks[2] + "'");
                }
                spec.weights.push_back(w);
                any_generator = true;
            } else if (kw == "bracket") {
                if (toks.size() < 6 || toks[3] != "=")
                    throw ParseError("bracket syntax: bracket A B = c T [+ c T]...");
                FamilySpec::Bracket br;
                br.lhs = label_pos(toks[1]);
                br.rhs = label_pos(toks[2]);
                size_t i = 4;
                while (i < toks.size()) {
                    if (i + 1 >= toks.size()) throw ParseError("dangling bracket term");
                    Polynomial c = detail::parse_coefficient(toks[i], true);
                    br.value.emplace_back(label_pos(toks[i + 1]), std::move(c));
                    i += 2;
                    if (i < toks.size()) {
                        if (toks[i] != "+") throw ParseError("expected '+' between bracket terms");
                        ++i;
                    }
                }
                spec.brackets.push_back(std::move(br));
            } else {
                throw ParseError("unknown directive '" + kw + "'");
            }
        } catch (ParseError& e) {
            throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    if (!any_generator) throw ParseError("spec declares no generators");
    spec.labels = labels;

    if (!has_param) {
        AlgebraSpec aspec;
        aspec.name = spec.name;
        aspec.labels = spec.labels;
        aspec.weights = spec.weights;
        for (const auto& br : spec.brackets) {
            AlgebraSpec::Bracket ab;
            ab.lhs = br.lhs;
            ab.rhs = br.rhs;
            for (const auto& [k, p] : br.value) {
                if (p.degree() > 0)
                    throw ParseError("poly(...) coefficient requires a param line");
                if (!p.is_zero()) ab.value.emplace_back(k, p.coefficients()[0]);
            }
            aspec.brackets.push_back(std::move(ab));
        }
        LoadedSpec out;
        out.is_family = false;
        out.algebra = build_algebra(aspec);
        return out;
    }

    LoadedSpec out;
    out.is_family = true;
    out.family = build_family(spec);
    return out;
}

inline LoadedSpec load_spec_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open '" + path + "'");
    std::stringstream ss;
    ss << f.rdbuf();
    return load_spec_text(ss.str());
}

inline GradedLieAlgebra load_algebra(const std::string& text) {
    LoadedSpec s = load_spec_text(text);
    if (s.is_family) throw ParseError("expected a single algebra, got a family spec");
    return s.algebra;
}

// Canonical text form; loading it back reproduces the algebra bit-exactly.
inline std::string serialize(const GradedLieAlgebra& alg) {
    std::ostringstream out;
    if (!alg.name.empty()) out << "name " << alg.name << "\n";
    for (int u = 0; u < alg.dim; ++u) {
        const int i = alg.internal_of_user[u];
        out << "generator " << alg.labels[i] << " " << alg.weights[i] << "\n";
    }
    for (int ua = 0; ua < alg.dim; ++ua)
        for (int ub = ua + 1; ub < alg.dim; ++ub) {
            const int i = alg.internal_of_user[ua];
            const int j = alg.internal_of_user[ub];
            const SparseVec& val = alg.table[i][j];
            if (val.empty()) continue;
            out << "bracket " << alg.labels[i] << " " << alg.labels[j] << " =";
            // emit targets in user order
            std::vector<std::pair<int, Rational>> terms;
            for (const auto& [k, c] : val) terms.emplace_back(alg.user_of_internal[k], c);
            std::sort(terms.begin(), terms.end(),
                      [](const auto& x, const auto& y) { return x.first < y.first; });
            bool first = true;
            for (const auto& [uk, c] : terms) {
                out << (first ? " " : " + ") << to_string(c) << " "
                    << alg.labels[alg.internal_of_user[uk]];
                first = false;
            }
            out << "\n";
        }
    return out.str();
}

inline std::string serialize(const AlgebraFamily& fam) {
    std::ostringstream out;
    if (!fam.name.empty()) out << "name " << fam.name << "\n";
    out << "param " << fam.param << " " << to_string(fam.lo) << " " << to_string(fam.hi) << "\n";
    const int m = static_cast<int>(fam.weights.size());
    for (int i = 0; i < m; ++i)
        out << "generator " << fam.labels[i] << " " << fam.weights[i] << "\n";
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            if (fam.table[i][j].empty()) continue;
            out << "bracket " << fam.labels[i] << " " << fam.labels[j] << " =";
            bool first = true;
            for (const auto& [k, p] : fam.table[i][j]) {
                out << (first ? " " : " + ") << p.str() << " " << fam.labels[k];
                first = false;
            }
            out << "\n";
        }
    return out.str();
}

inline void save_spec_file(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot write '" + path + "'");
    f << text;
}

} // namespace strata
