// Symmetric polynomial kernels: Schur and Schur-P polynomials by strip DP,
// the word series f_a, truncated Stanley symmetric functions, and basis
// expansion by leading-monomial elimination.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "fpf/atoms.hpp"
#include "fpf/laurent.hpp"
#include "fpf/partition.hpp"
#include "fpf/schubert.hpp"

namespace fpf {

enum class Basis { monomial, schur, schurP };

inline const char* basis_name(Basis b) {
    switch (b) {
        case Basis::monomial: return "monomial";
        case Basis::schur: return "schur";
        default: return "schurP";
    }
}

struct PartitionLexDesc {
    bool operator()(const Partition& a, const Partition& b) const { return b < a; }
};

// Coefficient map over partitions in a named basis.  trunc_vars == 0 means the
// expansion is exact in the ring of symmetric functions.
struct SymExpansion {
    Basis basis = Basis::schurP;
    std::map<Partition, BigInt, PartitionLexDesc> coeffs;
    long degree = 0;
    int trunc_vars = 0;

    void add(const Partition& p, const BigInt& c) {
        auto [it, fresh] = coeffs.try_emplace(p, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) coeffs.erase(it);
        }
    }

    bool operator==(const SymExpansion& o) const {
        return basis == o.basis && coeffs == o.coeffs;
    }
};

// m_lambda in N variables: one term per distinct rearrangement.
inline Poly monomial_sym_poly(const Partition& lam, int N) {
    if (static_cast<int>(lam.num_parts()) > N) return Poly{};
    std::vector<int> exps(N, 0);
    for (std::size_t i = 0; i < lam.num_parts(); ++i) exps[i] = lam.parts()[i];
    std::sort(exps.begin(), exps.end());
    Poly out;
    do {
        Monomial m;
        for (int i = 0; i < N; ++i)
            if (exps[i]) m.set_exp(i + 1, exps[i]);
        out.add_term(m, 1);
    } while (std::next_permutation(exps.begin(), exps.end()));
    return out;
}

namespace detail {

inline std::vector<std::vector<int>> strict_subpartitions(const std::vector<int>& lam) {
    if (lam.empty()) return {{}};
    std::vector<std::vector<int>> res;
    std::vector<int> cur;
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int prev) {
        res.push_back(cur);  // stop here: remaining rows zero
        if (i == lam.size()) return;
        for (int v = std::min(lam[i], prev - 1); v >= 1; --v) {
            cur.push_back(v);
            rec(i + 1, v);
            cur.pop_back();
        }
    };
    rec(0, lam[0] + 1);
    std::sort(res.begin(), res.end());
    res.erase(std::unique(res.begin(), res.end()), res.end());
    return res;
}

// Number of legal {k',k} fillings of the shifted skew strip nu/mu: one primed
// letter per row (its leftmost cell only), one unprimed per column (a cell
// with a strip cell below it must be primed), diagonal unprimed.
inline long strip_fill_count_shifted(const std::vector<int>& mu, const std::vector<int>& nu) {
    long free_cells = 0;
    for (std::size_t i0 = 0; i0 < nu.size(); ++i0) {
        int i = static_cast<int>(i0) + 1;
        int mi = i0 < mu.size() ? mu[i0] : 0;
        if (mi > nu[i0]) return 0;
        int lo = i + mi, hi = i + nu[i0] - 1;
        int below_lo = 0, below_hi = -1;
        if (i0 + 1 < nu.size()) {
            int mnext = i0 + 1 < mu.size() ? mu[i0 + 1] : 0;
            below_lo = i + 1 + mnext;
            below_hi = i + 1 + nu[i0 + 1] - 1;
        }
        for (int col = lo; col <= hi; ++col) {
            bool leftmost = (col == lo);
            bool has_below = (col >= below_lo && col <= below_hi);
            bool diag = (col == i);
            bool forced_prime = has_below;
            bool forced_unprime = !leftmost || diag;
            if (forced_prime && forced_unprime) return 0;
            if (!forced_prime && !forced_unprime) ++free_cells;
        }
    }
    if (free_cells > 60) throw std::overflow_error("strip multiplicity overflow");
    return 1L << free_cells;
}

inline bool contains(const std::vector<int>& mu, const std::vector<int>& nu) {
    if (mu.size() > nu.size()) return false;
    for (std::size_t i = 0; i < mu.size(); ++i)
        if (mu[i] > nu[i]) return false;
    return true;
}

}  // namespace detail

// Schur P polynomial in N variables via the level DP over primed strips.
inline Poly schur_p_poly(const Partition& lam, int N) {
    if (!lam.is_strict()) throw std::invalid_argument("Schur P needs a strict partition");
    if (lam.empty()) return Poly::one();
    if (static_cast<int>(lam.num_parts()) > N) return Poly{};
    auto subs = detail::strict_subpartitions(lam.parts());
    std::map<std::vector<int>, Poly> dp;
    dp[{}] = Poly::one();
    for (int k = 1; k <= N; ++k) {
        std::map<std::vector<int>, Poly> ndp;
        for (auto& [mu, poly] : dp) {
            for (auto& nu : subs) {
                if (!detail::contains(mu, nu)) continue;
                long mult = detail::strip_fill_count_shifted(mu, nu);
                if (mult == 0) continue;
                int d = 0;
                for (int v : nu) d += v;
                for (int v : mu) d -= v;
                Monomial xk;
                if (d) xk.set_exp(k, d);
                Poly add = poly.mul_monomial(xk, BigInt(mult));
                auto it = ndp.find(nu);
                if (it == ndp.end()) ndp.emplace(nu, std::move(add));
                else it->second += add;
            }
        }
        dp = std::move(ndp);
    }
    auto it = dp.find(lam.parts());
    return it == dp.end() ? Poly{} : it->second;
}

// Classical Schur polynomial via the horizontal-strip DP.
inline Poly schur_poly(const Partition& lam, int N) {
    if (lam.empty()) return Poly::one();
    if (static_cast<int>(lam.num_parts()) > N) return Poly{};
    // all partitions contained in lam
    std::vector<std::vector<int>> subs;
    {
        std::vector<int> cur;
        std::function<void(std::size_t, int)> rec = [&](std::size_t i, int prev) {
            subs.push_back(cur);
            if (i == lam.num_parts()) return;
            for (int v = std::min(lam.parts()[i], prev); v >= 1; --v) {
                cur.push_back(v);
                rec(i + 1, v);
                cur.pop_back();
            }
        };
        rec(0, lam.parts()[0]);
        std::sort(subs.begin(), subs.end());
        subs.erase(std::unique(subs.begin(), subs.end()), subs.end());
    }
    auto horizontal = [](const std::vector<int>& mu, const std::vector<int>& nu) {
        // nu/mu horizontal strip: nu_i >= mu_i >= nu_{i+1}
        if (mu.size() > nu.size()) return false;
        for (std::size_t i = 0; i < nu.size(); ++i) {
            int mi = i < mu.size() ? mu[i] : 0;
            if (mi > nu[i]) return false;
            if (i + 1 < nu.size() && mi < nu[i + 1]) return false;
        }
        return true;
    };
    std::map<std::vector<int>, Poly> dp;
    dp[{}] = Poly::one();
    for (int k = 1; k <= N; ++k) {
        std::map<std::vector<int>, Poly> ndp;
        for (auto& [mu, poly] : dp) {
            for (auto& nu : subs) {
                if (!horizontal(mu, nu)) continue;
                int d = 0;
                for (int v : nu) d += v;
                for (int v : mu) d -= v;
                Monomial xk;
                if (d) xk.set_exp(k, d);
                auto [it, fresh] = ndp.try_emplace(nu, Poly{});
                it->second += poly.mul_monomial(xk);
            }
        }
        dp = std::move(ndp);
    }
    auto it = dp.find(lam.parts());
    return it == dp.end() ? Poly{} : it->second;
}

// f_a in N variables: sum of x_{i_1}...x_{i_l} over weakly increasing
// sequences, strictly increasing across ascents of the word.
inline Poly word_series(const std::vector<int>& word, int N) {
    Poly out;
    std::vector<int> exps(static_cast<std::size_t>(N), 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t j, int lastvar) {
        if (j == word.size()) {
            Monomial m;
            for (int i = 0; i < N; ++i)
                if (exps[i]) m.set_exp(i + 1, exps[i]);
            out.add_term(m, 1);
            return;
        }
        int lo = lastvar;
        if (j > 0 && word[j - 1] < word[j]) lo = lastvar + 1;
        for (int v = std::max(lo, 1); v <= N; ++v) {
            ++exps[v - 1];
            rec(j + 1, v);
            --exps[v - 1];
        }
    };
    rec(0, 1);
    return out;
}

// F_w in x_1..x_N as the stabilized isobaric image of S_w.
inline Poly stanley_trunc(const Permutation& w, int N) {
    if (N < 1) throw std::invalid_argument("need at least one variable");
    int M = std::max(N, w.max_moved());
    return isobaric_wn(schubert(w), M).restricted(N);
}

enum class StanleyMode { atoms, words };

// FPF Stanley symmetric function of z in x_1..x_N.  Mode `atoms` pushes
// S^fpf_z through pi_{w_M}; mode `words` sums f_a over all FPF reduced words,
// aggregated by ascent sets and reassembled through monomial symmetric
// polynomials.  Both are exact truncations.
inline Poly fpf_stanley_trunc(const FpfInvolution& z, int N,
                              StanleyMode mode = StanleyMode::atoms) {
    if (z.offset() < 0)
        throw std::invalid_argument("shift z into positive positions first");
    if (N < 1) throw std::invalid_argument("need at least one variable");
    long d = ell_fpf(z);
    if (d == 0) return Poly::one();
    if (mode == StanleyMode::atoms) {
        int M = std::max(N, z.window_end());
        return isobaric_wn(fpf_schubert(z), M).restricted(N);
    }
    if (d >= 32) throw std::invalid_argument("word mode limited to length < 32");
    std::map<std::uint32_t, BigInt> ascent_count;
    for_each_fpf_reduced_word(z, [&](const std::vector<int>& w) {
        std::uint32_t mask = 0;
        for (std::size_t j = 0; j + 1 < w.size(); ++j)
            if (w[j] < w[j + 1]) mask |= (1u << j);
        ++ascent_count[mask];
    });
    Poly out;
    for (const Partition& lam : partitions_of(static_cast<int>(d), N)) {
        std::uint32_t allowed = 0;
        long acc = 0;
        for (std::size_t i = 0; i + 1 < lam.num_parts(); ++i) {
            acc += lam.parts()[i];
            allowed |= (1u << (acc - 1));
        }
        BigInt c = 0;
        for (auto& [mask, cnt] : ascent_count)
            if ((mask & ~allowed) == 0) c += cnt;
        if (c != 0) out += monomial_sym_poly(lam, N).mul_monomial(Monomial{}, c);
    }
    return out;
}

// ---------------------------------------------------------------------------
// basis expansion
// ---------------------------------------------------------------------------

namespace detail {

inline Poly basis_poly(Basis b, const Partition& lam, int N) {
    switch (b) {
        case Basis::monomial: return monomial_sym_poly(lam, N);
        case Basis::schur: return schur_poly(lam, N);
        default: return schur_p_poly(lam, N);
    }
}

}  // namespace detail

// Expand a symmetric homogeneous polynomial in x_1..x_N over the chosen basis
// by eliminating the lexicographically leading monomial.  Errors if f is not
// in the span (non-partition leading exponent, or a non-strict key for the
// Schur-P basis, or a residual that will not clear).
inline SymExpansion expand_symmetric(Poly f, Basis basis, int N) {
    SymExpansion out;
    out.basis = basis;
    out.trunc_vars = N;
    if (f.is_zero()) return out;
    if (!f.is_homogeneous()) throw std::invalid_argument("expansion needs a homogeneous input");
    out.degree = f.degree();
    if (N < out.degree)
        throw std::invalid_argument("truncation too small for a faithful expansion (need N >= degree)");
    long guard = 0;
    while (!f.is_zero()) {
        auto lead = f.terms().begin();
        for (auto it = std::next(f.terms().begin()); it != f.terms().end(); ++it)
            if (lead->first.lex_less(it->first)) lead = it;
        std::vector<int> exps;
        for (int i = 1; i <= kMaxVars; ++i) {
            int e = lead->first.exp(i);
            if (e < 0) throw std::invalid_argument("not a polynomial in the basis span");
            exps.push_back(e);
        }
        while (!exps.empty() && exps.back() == 0) exps.pop_back();
        for (std::size_t i = 0; i + 1 < exps.size(); ++i)
            if (exps[i] < exps[i + 1])
                throw std::invalid_argument("not symmetric: leading monomial is not a partition");
        Partition lam(exps);
        if (basis == Basis::schurP && !lam.is_strict())
            throw std::invalid_argument("not in the Schur-P span: non-strict leading partition");
        BigInt c = lead->second;
        out.add(lam, c);
        Poly b = detail::basis_poly(basis, lam, N);
        b.scale(c);
        f -= b;
        if (++guard > 100000) throw std::logic_error("expansion failed to terminate");
    }
    return out;
}

// Synthesize a polynomial from an expansion (for round trips and comparisons).
inline Poly synthesize(const SymExpansion& e, int N) {
    Poly f;
    for (auto& [lam, c] : e.coeffs) {
        Poly b = detail::basis_poly(e.basis, lam, N);
        b.scale(c);
        f += b;
    }
    return f;
}

}  // namespace fpf
