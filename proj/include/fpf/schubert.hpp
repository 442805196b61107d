// Schubert polynomials, their FPF-involution analogues, the dominant product
// formula, and the G_{r,n} kernel with its isobaric raising operators.
#pragma once

#include <mutex>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "fpf/atoms.hpp"
#include "fpf/involution.hpp"
#include "fpf/laurent.hpp"
#include "fpf/permutation.hpp"

namespace fpf {

// Memoized S_w, computed by the raising recursion d_i S_{w s_i} = S_w toward
// the dominant monomial x^{delta_n}.  Safe for concurrent callers.
class SchubertCache {
public:
    Poly schubert(const Permutation& w) {
        if (w.min_moved() < 1 && !w.is_identity())
            throw std::invalid_argument("Schubert polynomials need support in positive positions");
        {
            std::lock_guard<std::mutex> lk(mu_);
            auto it = memo_.find(w);
            if (it != memo_.end()) return it->second;
        }
        Poly result = compute(w);
        std::lock_guard<std::mutex> lk(mu_);
        memo_.emplace(w, result);
        return result;
    }

    std::size_t size() const { return memo_.size(); }

private:
    Poly compute(const Permutation& w) {
        if (w.is_identity()) return Poly::one();
        int n = w.max_moved();
        int asc = 0;
        for (int i = 1; i < n; ++i)
            if (w(i) < w(i + 1)) {
                asc = i;
                break;
            }
        if (asc == 0) {  // w = w_n
            std::vector<int> delta(n - 1);
            for (int i = 0; i < n - 1; ++i) delta[i] = n - 1 - i;
            return Poly::x_to(delta);
        }
        Permutation ws = w * Permutation::simple(asc);
        return divided_difference(schubert(ws), asc);
    }

    std::mutex mu_;
    std::unordered_map<Permutation, Poly, PermutationHash> memo_;
};

inline SchubertCache& global_schubert_cache() {
    static SchubertCache cache;
    return cache;
}

inline Poly schubert(const Permutation& w) { return global_schubert_cache().schubert(w); }

// S^fpf_z = sum of S_w over the atoms of z.
inline Poly fpf_schubert(const FpfInvolution& z) {
    Poly f;
    for (const Permutation& w : atoms(z).atoms) f += schubert(w);
    return f;
}

// Product formula for FPF-dominant z.
inline Poly fpf_dominant_product(const FpfInvolution& z) {
    Poly f = Poly::one();
    for (auto& [i, j] : fpf_diagram_code_shape(z).diagram) f *= Poly::var(j) + Poly::var(i);
    return f;
}

// G_{r,n} = prod_{i<=r} prod_{j<=n-i} (1 + x_i^{-1} x_{i+j}).
inline Poly schur_p_kernel(int r, int n) {
    Poly f = Poly::one();
    for (int i = 1; i <= r; ++i)
        for (int j = 1; j <= n - i; ++j)
            f *= Poly::one() + Poly::var(i, -1) * Poly::var(i + j);
    return f;
}

// pi_{phi_1,1} pi_{phi_2,2} ... pi_{phi_r,r} (x^nu G_{r,n}) for the
// FPF-Grassmannian involution of the given data; rightmost chain acts first.
inline Poly grassmannian_schubert_via_pi(const std::vector<int>& phi, int n) {
    int r = static_cast<int>(phi.size());
    if (r == 0) return Poly::one();
    for (int i = 0; i < r; ++i)
        if (phi[i] < 1 || phi[i] > n || (i > 0 && phi[i] <= phi[i - 1]))
            throw std::invalid_argument("phi must be strictly increasing in [1,n]");
    std::vector<int> nu(r);
    for (int i = 0; i < r; ++i) nu[i] = n - phi[i];
    Poly f = Poly::x_to(nu) * schur_p_kernel(r, n);
    for (int i = r; i >= 1; --i) f = isobaric_chain(std::move(f), phi[i - 1], i);
    return f;
}

}  // namespace fpf
