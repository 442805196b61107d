// Sparse multivariate Laurent polynomials over arbitrary-precision integers,
// with the divided difference operators that drive Schubert calculus.
#pragma once

#include <array>
#include <cstdint>
#include <cstring>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "fpf/bigint.hpp"

namespace fpf {

// Exponent vectors are fixed-width: variables x_1..x_16, signed exponents.
// Everything in this project lives comfortably inside that box; index
// overflows throw rather than wrap.
inline constexpr int kMaxVars = 16;

struct Monomial {
    alignas(8) std::array<int8_t, kMaxVars> e{};

    int8_t exp(int i) const { return e[i - 1]; }
    void set_exp(int i, int v) {
        if (i < 1 || i > kMaxVars) throw std::out_of_range("variable index out of range");
        if (v < -127 || v > 127) throw std::overflow_error("exponent out of range");
        e[i - 1] = static_cast<int8_t>(v);
    }

    int degree() const {
        int d = 0;
        for (int8_t v : e) d += v;
        return d;
    }

    int max_var() const {
        for (int i = kMaxVars; i >= 1; --i)
            if (e[i - 1] != 0) return i;
        return 0;
    }

    bool operator==(const Monomial& o) const { return e == o.e; }

    // lexicographic on (e_1, e_2, ...)
    bool lex_less(const Monomial& o) const {
        for (int i = 0; i < kMaxVars; ++i)
            if (e[i] != o.e[i]) return e[i] < o.e[i];
        return false;
    }

    Monomial operator*(const Monomial& o) const {
        Monomial r;
        for (int i = 0; i < kMaxVars; ++i) {
            int v = e[i] + o.e[i];
            if (v < -127 || v > 127) throw std::overflow_error("exponent out of range");
            r.e[i] = static_cast<int8_t>(v);
        }
        return r;
    }
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const {
        std::uint64_t a, b;
        std::memcpy(&a, m.e.data(), 8);
        std::memcpy(&b, m.e.data() + 8, 8);
        std::uint64_t h = a * 0x9e3779b97f4a7c15ull;
        h ^= (b + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2));
        return static_cast<std::size_t>(h * 0xff51afd7ed558ccdull);
    }
};

class Poly {
public:
    using TermMap = std::unordered_map<Monomial, BigInt, MonomialHash>;

    Poly() = default;
    explicit Poly(BigInt c) {
        if (c != 0) terms_[Monomial{}] = std::move(c);
    }
    explicit Poly(long c) : Poly(BigInt(c)) {}

    static Poly one() { return Poly(BigInt(1)); }

    static Poly var(int i, int exp = 1) {
        Poly p;
        Monomial m;
        m.set_exp(i, exp);
        p.terms_[m] = 1;
        return p;
    }

    static Poly monomial(const Monomial& m, BigInt c = BigInt(1)) {
        Poly p;
        if (c != 0) p.terms_[m] = std::move(c);
        return p;
    }

    // x^lambda = x_1^{l_1} x_2^{l_2} ...
    static Poly x_to(const std::vector<int>& exps) {
        Monomial m;
        for (std::size_t i = 0; i < exps.size(); ++i) m.set_exp(static_cast<int>(i) + 1, exps[i]);
        return monomial(m);
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    BigInt coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? BigInt(0) : it->second;
    }

    void add_term(const Monomial& m, const BigInt& c) {
        if (c == 0) return;
        auto [it, fresh] = terms_.try_emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Poly& operator+=(const Poly& o) {
        for (auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        for (auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

    Poly operator-() const {
        Poly r(*this);
        for (auto& [m, c] : r.terms_) c = -c;
        return r;
    }

    friend Poly operator*(const Poly& a, const Poly& b) {
        const Poly& small = a.size() <= b.size() ? a : b;
        const Poly& large = a.size() <= b.size() ? b : a;
        Poly r;
        r.terms_.reserve(large.size());
        for (auto& [ms, cs] : small.terms_)
            for (auto& [ml, cl] : large.terms_) r.add_term(ms * ml, cs * cl);
        return r;
    }

    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    Poly& scale(const BigInt& c) {
        if (c == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, v] : terms_) v *= c;
        return *this;
    }

    Poly mul_monomial(const Monomial& m, const BigInt& c = BigInt(1)) const {
        Poly r;
        r.terms_.reserve(size());
        for (auto& [mm, cc] : terms_) r.terms_.emplace(mm * m, cc * c);
        return r;
    }

    bool operator==(const Poly& o) const { return terms_ == o.terms_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    // Kill all terms involving x_i for i > N.
    Poly restricted(int N) const {
        Poly r;
        for (auto& [m, c] : terms_)
            if (m.max_var() <= N) r.terms_.emplace(m, c);
        return r;
    }

    int degree() const {  // total degree of any term; -1 for 0
        int d = -1;
        for (auto& [m, c] : terms_) d = std::max(d, m.degree());
        return d;
    }

    bool is_homogeneous() const {
        int d = -1;
        for (auto& [m, c] : terms_) {
            if (d < 0) d = m.degree();
            else if (m.degree() != d) return false;
        }
        return true;
    }

    int max_var() const {
        int v = 0;
        for (auto& [m, c] : terms_) v = std::max(v, m.max_var());
        return v;
    }

    // Least term in the lexicographic order on exponent vectors.
    std::pair<Monomial, BigInt> least_term() const {
        if (terms_.empty()) return {Monomial{}, BigInt(0)};
        auto best = terms_.begin();
        for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
            if (it->first.lex_less(best->first)) best = it;
        return {best->first, best->second};
    }

    // Graded lexicographic term order, deterministic output.
    std::vector<std::pair<Monomial, BigInt>> sorted_terms() const {
        std::vector<std::pair<Monomial, BigInt>> v(terms_.begin(), terms_.end());
        std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
            int da = a.first.degree(), db = b.first.degree();
            if (da != db) return da < db;
            return a.first.lex_less(b.first);
        });
        return v;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        bool first = true;
        for (auto& [m, c] : sorted_terms()) {
            BigInt a = c;
            if (first) {
                if (a < 0) {
                    s += "-";
                    a = -a;
                }
            } else {
                s += (a < 0) ? " - " : " + ";
                if (a < 0) a = -a;
            }
            first = false;
            std::string vars;
            for (int i = 1; i <= kMaxVars; ++i) {
                int e = m.exp(i);
                if (e == 0) continue;
                if (!vars.empty()) vars += "*";
                vars += "x" + std::to_string(i);
                if (e != 1) vars += "^" + std::to_string(e);
            }
            if (vars.empty()) {
                s += a.str();
            } else {
                if (a != 1) s += a.str() + "*";
                s += vars;
            }
        }
        return s;
    }

    BigInt evaluate(const std::vector<long>& point) const {
        BigInt total = 0;
        for (auto& [m, c] : terms_) {
            BigInt t = c;
            for (int i = 1; i <= kMaxVars; ++i) {
                int e = m.exp(i);
                if (e == 0) continue;
                if (e < 0) throw std::domain_error("integer evaluation needs nonnegative exponents");
                if (static_cast<std::size_t>(i) > point.size())
                    throw std::invalid_argument("evaluation point too short");
                for (int k = 0; k < e; ++k) t *= point[i - 1];
            }
            total += t;
        }
        return total;
    }

    void reserve(std::size_t n) { terms_.reserve(n); }

private:
    TermMap terms_;
};

// ---------------------------------------------------------------------------
// divided difference operators
// ---------------------------------------------------------------------------

// d_i f = (f - s_i f)/(x_i - x_{i+1}); division is always exact, realized
// monomial-by-monomial as a geometric sum, valid for negative exponents too.
inline Poly divided_difference(const Poly& f, int i) {
    if (i < 1 || i + 1 > kMaxVars) throw std::out_of_range("divided difference index");
    Poly r;
    r.reserve(f.size());
    for (auto& [m, c] : f.terms()) {
        int p = m.exp(i), q = m.exp(i + 1);
        if (p == q) continue;
        Monomial base = m;
        if (p > q) {
            for (int u = q; u < p; ++u) {
                base.set_exp(i, u);
                base.set_exp(i + 1, p + q - 1 - u);
                r.add_term(base, c);
            }
        } else {
            for (int u = p; u < q; ++u) {
                base.set_exp(i, u);
                base.set_exp(i + 1, p + q - 1 - u);
                r.add_term(base, -c);
            }
        }
    }
    return r;
}

// pi_i f = d_i(x_i f); fixes s_i-symmetric input.
inline Poly isobaric_divided_difference(const Poly& f, int i) {
    if (i < 1 || i + 1 > kMaxVars) throw std::out_of_range("divided difference index");
    Poly r;
    r.reserve(f.size());
    for (auto& [m, c] : f.terms()) {
        int p = m.exp(i) + 1, q = m.exp(i + 1);  // exponents of x_i * x^m
        if (p == q) continue;
        Monomial base = m;
        if (p > q) {
            for (int u = q; u < p; ++u) {
                base.set_exp(i, u);
                base.set_exp(i + 1, p + q - 1 - u);
                r.add_term(base, c);
            }
        } else {
            for (int u = p; u < q; ++u) {
                base.set_exp(i, u);
                base.set_exp(i + 1, p + q - 1 - u);
                r.add_term(base, -c);
            }
        }
    }
    return r;
}

// d_{b,a} = d_{b-1} d_{b-2} ... d_a (rightmost acts first); identity for a >= b.
inline Poly divided_difference_chain(Poly f, int b, int a) {
    for (int i = a; i < b; ++i) f = divided_difference(f, i);
    return f;
}

inline Poly isobaric_chain(Poly f, int b, int a) {
    for (int i = a; i < b; ++i) f = isobaric_divided_difference(f, i);
    return f;
}

// pi_{w_n} along the staircase reduced word.
inline Poly isobaric_wn(Poly f, int n) {
    for (int b = 2; b <= n; ++b)
        for (int i = b - 1; i >= 1; --i) f = isobaric_divided_difference(f, i);
    return f;
}

inline Poly swap_vars(const Poly& f, int i, int j) {
    Poly r;
    r.reserve(f.size());
    for (auto& [m, c] : f.terms()) {
        Monomial mm = m;
        int a = mm.exp(i), b = mm.exp(j);
        mm.set_exp(i, b);
        mm.set_exp(j, a);
        r.add_term(mm, c);
    }
    return r;
}

}  // namespace fpf
