// Pfaffians of skew-symmetric matrices over a commutative ring, and the
// Grassmannian Pfaffian identities for FPF Schubert polynomials and Stanley
// symmetric functions.
#pragma once

#include <stdexcept>
#include <vector>

#include "fpf/involution.hpp"
#include "fpf/laurent.hpp"
#include "fpf/schubert.hpp"
#include "fpf/symfunc.hpp"

namespace fpf {

// Skew-symmetric matrix stored by its upper triangle; a(j,i) = -a(i,j).
template <typename Ring>
class SkewMatrix {
public:
    explicit SkewMatrix(int n) : n_(n), upper_(static_cast<std::size_t>(n) * n) {}

    int dim() const { return n_; }

    Ring& at(int i, int j) {
        if (!(1 <= i && i < j && j <= n_)) throw std::out_of_range("need 1 <= i < j <= n");
        return upper_[idx(i, j)];
    }
    const Ring& at(int i, int j) const {
        if (!(1 <= i && i < j && j <= n_)) throw std::out_of_range("need 1 <= i < j <= n");
        return upper_[idx(i, j)];
    }

    Ring entry(int i, int j) const {  // signed lookup
        if (i == j) return Ring{};
        if (i < j) return upper_[idx(i, j)];
        return -upper_[idx(j, i)];
    }

private:
    std::size_t idx(int i, int j) const {
        return static_cast<std::size_t>(i - 1) * n_ + (j - 1);
    }
    int n_;
    std::vector<Ring> upper_;
};

enum class PfaffianMethod { matching_sum, row_expansion };

namespace detail {

template <typename Ring>
Ring pf_rows(const SkewMatrix<Ring>& A, std::vector<int>& rows) {
    if (rows.empty()) return Ring(BigInt(1));
    Ring total{};
    int i0 = rows[0];
    for (std::size_t jj = 1; jj < rows.size(); ++jj) {
        int j0 = rows[jj];
        std::vector<int> rest;
        rest.reserve(rows.size() - 2);
        for (int r : rows)
            if (r != i0 && r != j0) rest.push_back(r);
        Ring term = A.entry(i0, j0) * pf_rows(A, rest);
        if (jj % 2 == 1) total += term;   // sign (-1)^{j} with j the 1-based column
        else total -= term;
    }
    return total;
}

}  // namespace detail

// pf A = sum over perfect matchings z of [n] of (-1)^{ell_fpf(z)} prod A_{z(i),i}.
template <typename Ring>
Ring pfaffian(const SkewMatrix<Ring>& A, PfaffianMethod method = PfaffianMethod::row_expansion) {
    int n = A.dim();
    if (n % 2 != 0) throw std::invalid_argument("Pfaffian needs even dimension");
    if (n == 0) return Ring(BigInt(1));
    if (method == PfaffianMethod::row_expansion) {
        std::vector<int> rows(n);
        for (int i = 0; i < n; ++i) rows[i] = i + 1;
        return detail::pf_rows(A, rows);
    }
    Ring total{};
    for_each_fpf(n, [&](const FpfInvolution& z) {
        Ring term(BigInt(1));
        for (auto& [a, b] : z.cycles_on(n)) term = term * A.entry(a, b);
        if (ell_fpf(z) % 2 == 0) total += term;
        else total -= term;
    });
    return total;
}

// ---------------------------------------------------------------------------
// Grassmannian Pfaffian identities
// ---------------------------------------------------------------------------

// S^fpf[phi_1..phi_k; n] for 0 <= k <= 2 entries (trailing zeros dropped):
// the FPF Schubert polynomial of F((phi_1,n+1)(phi_2,n+2)).
inline Poly fpf_schubert_bracket(std::vector<int> phi, int n) {
    phi.erase(std::remove(phi.begin(), phi.end(), 0), phi.end());
    return fpf_schubert(grassmannian_involution(phi, n));
}

inline Poly fpf_stanley_bracket(std::vector<int> phi, int n, int N) {
    phi.erase(std::remove(phi.begin(), phi.end(), 0), phi.end());
    FpfInvolution z = grassmannian_involution(phi, n).to_positive();
    if (ell_fpf(z) == 0) return Poly::one();
    return fpf_stanley_trunc(z, N);
}

struct PfaffianCheckReport {
    bool matches = false;
    int matrix_dim = 0;
    long weight = 0;  // degree of both sides
};

enum class PfaffianTarget { schubert, stanley };

// Verifies S^fpf[phi;n] = pf [S^fpf[phi_i,phi_j;n]] (exact), or the same for
// the Stanley series at truncation N (default: the weight).
inline PfaffianCheckReport grassmannian_pfaffian_check(const std::vector<int>& phi, int n,
                                                       PfaffianTarget which, int N = 0) {
    int r = static_cast<int>(phi.size());
    if (r < 1 || n < 2) throw std::invalid_argument("need r >= 1 and n >= 2");
    for (int i = 0; i < r; ++i)
        if (phi[i] <= (i ? phi[i - 1] : 0) || phi[i] >= n)
            throw std::invalid_argument("need 0 < phi_1 < ... < phi_r < n");
    PfaffianCheckReport rep;
    long weight = 0;
    for (int p : phi) weight += n - p;
    rep.weight = weight;
    int lp = (r % 2 == 0) ? r : r + 1;
    rep.matrix_dim = lp;
    std::vector<int> ext(phi);
    ext.resize(lp, 0);

    if (which == PfaffianTarget::schubert) {
        SkewMatrix<Poly> M(lp);
        for (int i = 1; i <= lp; ++i)
            for (int j = i + 1; j <= lp; ++j)
                M.at(i, j) = fpf_schubert_bracket({ext[i - 1], ext[j - 1]}, n);
        Poly lhs = fpf_schubert_bracket(phi, n);
        Poly rhs = pfaffian(M, PfaffianMethod::row_expansion);
        rep.matches = (lhs == rhs);
    } else {
        if (N <= 0) N = static_cast<int>(weight);
        SkewMatrix<Poly> M(lp);
        for (int i = 1; i <= lp; ++i)
            for (int j = i + 1; j <= lp; ++j)
                M.at(i, j) = fpf_stanley_bracket({ext[i - 1], ext[j - 1]}, n, N);
        Poly lhs = fpf_stanley_bracket(phi, n, N);
        Poly rhs = pfaffian(M, PfaffianMethod::row_expansion);
        rep.matches = (lhs == rhs);
    }
    return rep;
}

}  // namespace fpf
