// Parsers and printers: one-line and cycle notation, JSON serialization,
// and the cosmetic ASCII arc diagrams.
#pragma once

#include <cctype>
#include <cstdint>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "fpf/involution.hpp"
#include "fpf/laurent.hpp"
#include "fpf/permutation.hpp"
#include "fpf/pfaffian.hpp"
#include "fpf/symfunc.hpp"

namespace fpf {

using Json = nlohmann::ordered_json;

namespace detail {

inline std::vector<std::vector<int>> parse_cycle_lists(const std::string& s) {
    std::vector<std::vector<int>> cycles;
    std::size_t k = 0;
    auto skip_ws = [&] { while (k < s.size() && std::isspace(static_cast<unsigned char>(s[k]))) ++k; };
    skip_ws();
    while (k < s.size()) {
        if (s[k] != '(') throw std::invalid_argument("expected '(' in cycle notation");
        ++k;
        std::vector<int> cyc;
        skip_ws();
        while (k < s.size() && s[k] != ')') {
            bool neg = false;
            if (s[k] == '-') {
                neg = true;
                ++k;
            }
            if (k >= s.size() || !std::isdigit(static_cast<unsigned char>(s[k])))
                throw std::invalid_argument("expected integer in cycle notation");
            int v = 0;
            while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k])))
                v = v * 10 + (s[k++] - '0');
            cyc.push_back(neg ? -v : v);
            skip_ws();
            if (k < s.size() && s[k] == ',') {
                ++k;
                skip_ws();
            }
        }
        if (k >= s.size()) throw std::invalid_argument("unbalanced cycle notation");
        ++k;  // ')'
        if (!cyc.empty()) cycles.push_back(std::move(cyc));
        skip_ws();
    }
    return cycles;
}

inline std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    if (s.find(',') == std::string::npos && s.find(' ') == std::string::npos) {
        for (char c : s) {
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw std::invalid_argument("bad one-line digit string");
            out.push_back(c - '0');
        }
        return out;
    }
    std::string tmp(s);
    for (char& c : tmp)
        if (c == ',') c = ' ';
    std::istringstream is(tmp);
    int v;
    while (is >> v) out.push_back(v);
    return out;
}

}  // namespace detail

inline Permutation parse_permutation(const std::string& s) {
    if (s.find('(') != std::string::npos)
        return Permutation::from_cycles(detail::parse_cycle_lists(s));
    return Permutation::from_one_line(detail::parse_int_list(s), 1);
}

// An FPF involution given as a perfect matching of [n]: cycle notation
// "(1,4)(2,3)", a self-inverse one-line word "4321", or "()" for Theta.
inline FpfInvolution parse_involution(const std::string& s) {
    if (s == "()" || s == "theta" || s == "Theta") return FpfInvolution::theta();
    std::vector<std::pair<int, int>> pairs;
    if (s.find('(') != std::string::npos) {
        for (auto& c : detail::parse_cycle_lists(s)) {
            if (c.size() != 2) throw std::invalid_argument("matchings need 2-cycles");
            pairs.push_back({c[0], c[1]});
        }
    } else {
        std::vector<int> line = detail::parse_int_list(s);
        Permutation w = Permutation::from_one_line(line, 1);
        for (int i = 1; i <= static_cast<int>(line.size()); ++i) {
            int j = w(i);
            if (w(j) != i) throw std::invalid_argument("one-line word is not an involution");
            if (j == i) throw std::invalid_argument("involution has a fixed point in [n]");
            if (i < j) pairs.push_back({i, j});
        }
    }
    return FpfInvolution::embed(pairs);
}

inline std::string one_line_string(const Permutation& w) {
    int lo = std::min(1, w.min_moved());
    int hi = std::max(w.max_moved(), lo);
    bool digits = (lo >= 1 && hi <= 9);
    std::string s;
    for (int i = lo; i <= hi; ++i) {
        int v = w(i);
        if (digits) s += static_cast<char>('0' + v);
        else {
            if (!s.empty()) s += ',';
            s += std::to_string(v);
        }
    }
    return s.empty() ? "1" : s;
}

// ---------------------------------------------------------------------------
// JSON
// ---------------------------------------------------------------------------

inline Json involution_to_json(const FpfInvolution& z) {
    Json j;
    j["offset"] = z.offset();
    Json pairs = Json::array();
    for (auto& [a, b] : z.window_cycles()) pairs.push_back(Json::array({a, b}));
    j["pairs"] = pairs;
    return j;
}

inline FpfInvolution involution_from_json(const Json& j) {
    int offset = j.at("offset").get<int>();
    std::vector<std::pair<int, int>> pairs;
    for (auto& p : j.at("pairs")) pairs.push_back({p.at(0).get<int>(), p.at(1).get<int>()});
    if (pairs.empty()) return FpfInvolution::theta();
    int lo = offset + 1, hi = offset;
    for (auto& [a, b] : pairs) hi = std::max({hi, a, b});
    if ((hi - offset) % 2) ++hi;
    std::vector<int> img(hi - lo + 1);
    for (int i = lo; i <= hi; ++i) img[i - lo] = theta_of(i);
    for (auto& [a, b] : pairs) {
        img[a - lo] = b;
        img[b - lo] = a;
    }
    return FpfInvolution::from_window(offset, std::move(img));
}

inline Json expansion_to_json(const SymExpansion& e) {
    Json j;
    j["basis"] = basis_name(e.basis);
    Json coeffs = Json::object();
    for (auto& [lam, c] : e.coeffs) {
        if (c >= std::numeric_limits<std::int64_t>::min() &&
            c <= std::numeric_limits<std::int64_t>::max())
            coeffs[lam.to_string()] = static_cast<std::int64_t>(c);
        else
            coeffs[lam.to_string()] = c.str();
    }
    j["coeffs"] = coeffs;
    return j;
}

inline Json poly_to_json(const Poly& f) {
    Json j = Json::object();
    for (auto& [m, c] : f.sorted_terms()) {
        std::string key;
        int last = m.max_var();
        for (int i = 1; i <= last; ++i) {
            if (i > 1) key += ',';
            key += std::to_string(m.exp(i));
        }
        if (c >= std::numeric_limits<std::int64_t>::min() &&
            c <= std::numeric_limits<std::int64_t>::max())
            j[key] = static_cast<std::int64_t>(c);
        else
            j[key] = c.str();
    }
    return j;
}

inline Json skew_matrix_to_json(const SkewMatrix<Poly>& M) {
    Json j;
    j["dim"] = M.dim();
    Json rows = Json::array();
    for (int i = 1; i < M.dim(); ++i) {
        Json row = Json::array();
        for (int k = i + 1; k <= M.dim(); ++k) row.push_back(M.at(i, k).to_string());
        rows.push_back(row);
    }
    j["upper"] = rows;
    return j;
}

// ---------------------------------------------------------------------------
// ASCII arcs (documentation cosmetics)
// ---------------------------------------------------------------------------

inline std::string ascii_arcs(const FpfInvolution& z) {
    if (z.is_theta()) return "(theta)\n";
    auto cycles = z.window_cycles();
    int lo = z.window_start(), hi = z.window_end();
    int width = 2 * (hi - lo) + 1;
    auto col = [&](int v) { return 2 * (v - lo); };
    // arc depth = nesting level
    std::vector<int> depth(cycles.size(), 1);
    for (std::size_t i = 0; i < cycles.size(); ++i) {
        int d = 1;
        for (std::size_t j = 0; j < cycles.size(); ++j)
            if (cycles[i].first < cycles[j].first && cycles[j].second < cycles[i].second) ++d;
        depth[i] = d;
    }
    int maxd = 1;
    for (int d : depth) maxd = std::max(maxd, d);
    std::vector<std::string> rows(maxd, std::string(width, ' '));
    for (std::size_t i = 0; i < cycles.size(); ++i) {
        int r = maxd - depth[i];
        int a = col(cycles[i].first), b = col(cycles[i].second);
        rows[r][a] = '.';
        rows[r][b] = '.';
        for (int c = a + 1; c < b; ++c) rows[r][c] = '_';
    }
    std::string out;
    for (auto& r : rows) out += r + "\n";
    std::string pts(width, ' ');
    for (int v = lo; v <= hi; ++v) pts[col(v)] = '*';
    out += pts + "\n";
    return out;
}

}  // namespace fpf
