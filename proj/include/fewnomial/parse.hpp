#ifndef FEWNOMIAL_PARSE_HPP
#define FEWNOMIAL_PARSE_HPP

// Text format for fewnomial systems: one polynomial per line, a polynomial is
// a signed sequence of terms joined by + or -, a term is a decimal coefficient
// followed by whitespace-separated factors x<index>^<decimal-exponent>.
// '#' starts a comment; '#:' lines carry named metadata (label,
// expected_count, vars, ...). The variable count is the largest index seen,
// or the explicit '#: vars k' directive if that is larger.
//
//     #: label haas
//     1 x1^108 + 1.1 x2^54 - 1.1 x2^1
//     1 x2^108 + 1.1 x1^54 - 1.1 x1^1

#include <cctype>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fewnomial.hpp"

namespace fewnomial {

struct ParseError : std::runtime_error {
    int line;
    int col;
    ParseError(int line_, int col_, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line_) + ", col " +
                             std::to_string(col_) + ": " + msg),
          line(line_),
          col(col_) {}
};

struct SystemFile {
    FewnomialSystem system;
    std::vector<std::pair<std::string, std::string>> metadata;

    const std::string* find_meta(const std::string& key) const {
        for (const auto& [k, v] : metadata)
            if (k == key) return &v;
        return nullptr;
    }
};

namespace detail {

struct SparseTerm {
    double coeff = 0;
    std::vector<std::pair<int, double>> factors;  // (variable index, exponent)
};

inline double parse_number(const std::string& line, std::size_t& pos, int lineno,
                           const char* what) {
    const char* start = line.c_str() + pos;
    char* end = nullptr;
    double v = std::strtod(start, &end);
    if (end == start)
        throw ParseError(lineno, static_cast<int>(pos) + 1, std::string("expected ") + what);
    if (!std::isfinite(v))
        throw ParseError(lineno, static_cast<int>(pos) + 1, "non-finite number");
    pos += static_cast<std::size_t>(end - start);
    return v;
}

inline void skip_ws(const std::string& line, std::size_t& pos) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
}

} // namespace detail

inline SystemFile parse_system(const std::string& text) {
    std::vector<std::vector<detail::SparseTerm>> polys;
    std::vector<std::pair<std::string, std::string>> metadata;
    int max_index = 0;
    long long vars_directive = 0;

    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t pos = 0;
        detail::skip_ws(line, pos);
        if (pos < line.size() && line[pos] == '#') {
            if (pos + 1 < line.size() && line[pos + 1] == ':') {
                std::istringstream meta(line.substr(pos + 2));
                std::string key, value;
                meta >> key;
                std::getline(meta, value);
                std::size_t s = value.find_first_not_of(" \t");
                value = s == std::string::npos ? "" : value.substr(s);
                if (key == "vars") {
                    vars_directive = std::atoll(value.c_str());
                } else if (!key.empty()) {
                    metadata.emplace_back(key, value);
                }
            }
            continue;
        }
        if (pos >= line.size()) continue;

        std::vector<detail::SparseTerm> terms;
        bool first = true;
        for (;;) {
            detail::skip_ws(line, pos);
            if (pos >= line.size() || line[pos] == '#') break;
            double sign = 1;
            if (line[pos] == '+' || line[pos] == '-') {
                sign = line[pos] == '-' ? -1 : 1;
                ++pos;
                detail::skip_ws(line, pos);
            } else if (!first) {
                throw ParseError(lineno, static_cast<int>(pos) + 1,
                                 "expected '+' or '-' between terms");
            }
            detail::SparseTerm term;
            term.coeff = sign * detail::parse_number(line, pos, lineno, "coefficient");
            for (;;) {
                detail::skip_ws(line, pos);
                if (pos >= line.size() || line[pos] != 'x') break;
                std::size_t xcol = pos;
                ++pos;
                if (pos >= line.size() || !std::isdigit(static_cast<unsigned char>(line[pos])))
                    throw ParseError(lineno, static_cast<int>(xcol) + 1,
                                     "expected variable index after 'x'");
                int idx = 0;
                while (pos < line.size() && std::isdigit(static_cast<unsigned char>(line[pos])))
                    idx = idx * 10 + (line[pos++] - '0');
                if (idx < 1)
                    throw ParseError(lineno, static_cast<int>(xcol) + 1,
                                     "variable index must be >= 1");
                if (pos >= line.size() || line[pos] != '^')
                    throw ParseError(lineno, static_cast<int>(pos) + 1,
                                     "expected '^' after variable");
                ++pos;
                double e = detail::parse_number(line, pos, lineno, "exponent");
                term.factors.emplace_back(idx, e);
                max_index = std::max(max_index, idx);
            }
            terms.push_back(std::move(term));
            first = false;
        }
        polys.push_back(std::move(terms));
    }

    const int n = std::max<long long>({1, max_index, vars_directive});
    std::vector<Fewnomial> built;
    built.reserve(polys.size());
    for (const auto& sp : polys) {
        std::vector<Term> ts;
        for (const auto& t : sp) {
            Term nt{t.coeff, ExponentVector(n, 0.0)};
            for (const auto& [idx, e] : t.factors) nt.exponent[idx - 1] += e;
            ts.push_back(std::move(nt));
        }
        built.emplace_back(n, std::move(ts));
    }
    SystemFile out;
    out.system = FewnomialSystem(n, std::move(built));
    out.metadata = std::move(metadata);
    return out;
}

namespace detail {

inline std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace detail

inline std::string print_system(const SystemFile& sf) {
    std::ostringstream out;
    out << "#: vars " << sf.system.n << "\n";
    for (const auto& [k, v] : sf.metadata) out << "#: " << k << " " << v << "\n";
    for (const auto& f : sf.system.polys) {
        if (f.is_zero()) {
            out << "0\n";
            continue;
        }
        bool first = true;
        for (const Term& t : f.terms()) {
            if (first) {
                out << detail::fmt(t.coeff);
                first = false;
            } else {
                out << (t.coeff < 0 ? " - " : " + ") << detail::fmt(std::abs(t.coeff));
            }
            for (int j = 0; j < f.n(); ++j)
                if (t.exponent[j] != 0)
                    out << " x" << (j + 1) << "^" << detail::fmt(t.exponent[j]);
        }
        out << "\n";
    }
    return out.str();
}

} // namespace fewnomial

#endif
