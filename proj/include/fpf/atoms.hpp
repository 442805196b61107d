// Minimal-length conjugators of Theta: the atom set A_fpf(z), its minimal
// element beta_min, and FPF reduced words with exact counts.
#pragma once

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "fpf/involution.hpp"
#include "fpf/permutation.hpp"

namespace fpf {

namespace detail {

// One-line word of beta_min(z)^{-1} over the window: cycles (a_1,b_1)(a_2,b_2)...
// sorted by a_i, concatenated as a_1 b_1 a_2 b_2 ...
inline std::vector<int> beta_min_inv_word(const FpfInvolution& z) {
    if (z.offset() < 0)
        throw std::invalid_argument("beta_min requires a positive window; shift first");
    std::vector<int> word;
    for (auto& [a, b] : z.window_cycles()) {
        word.push_back(a);
        word.push_back(b);
    }
    return word;
}

struct VecHash {
    std::size_t operator()(const std::vector<int>& v) const {
        std::size_t h = 1469598103934665603ull;
        for (int x : v) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
        return h;
    }
};

}  // namespace detail

inline Permutation beta_min(const FpfInvolution& z) {
    auto word = detail::beta_min_inv_word(z);
    if (word.empty()) return Permutation{};
    return Permutation::from_one_line(word, z.window_start()).inverse();
}

// w^{-1} Theta w as an element of F_Z, for finite-support w.
inline FpfInvolution conjugate_theta_by(const Permutation& w) {
    if (w.is_identity()) return FpfInvolution::theta();
    int lo = w.min_moved(), hi = w.max_moved();
    int off = lo - 1;
    if (((off % 2) + 2) % 2 != 0) --off;
    int end = hi;
    if ((end - off) % 2 != 0) ++end;
    Permutation wi = w.inverse();
    std::vector<int> img(end - off);
    for (int i = off + 1; i <= end; ++i) img[i - off - 1] = wi(theta_of(w(i)));
    return FpfInvolution::from_window(off, std::move(img));
}

enum class AtomMode { closure, bruteforce };

struct AtomSet {
    FpfInvolution base;
    std::vector<Permutation> atoms;  // sorted lexicographically by one-line form
    Permutation beta_min;
};

// Upward closure of beta_min under the cover move of the atom order: in the
// one-line word of w^{-1}, replace a consecutive a d b c (a<b<c<d) starting at
// an odd position by b c a d.  Every generated word is checked to be an atom.
inline AtomSet atoms(const FpfInvolution& z, AtomMode mode = AtomMode::closure) {
    AtomSet result;
    result.base = z;
    result.beta_min = beta_min(z);
    long lz = ell_fpf(z);

    if (mode == AtomMode::bruteforce) {
        int n = z.window_end();
        if (z.offset() < 0 || n > 10)
            throw std::invalid_argument("bruteforce atom mode needs a small positive window");
        std::vector<int> line(n);
        for (int i = 0; i < n; ++i) line[i] = i + 1;
        do {
            Permutation w = Permutation::from_one_line(line, 1);
            if (w.length() != lz) continue;
            if (conjugate_theta_by(w) == z) result.atoms.push_back(w);
        } while (std::next_permutation(line.begin(), line.end()));
    } else {
        auto w0 = detail::beta_min_inv_word(z);
        int start = z.window_start();
        std::unordered_set<std::vector<int>, detail::VecHash> seen{w0};
        std::vector<std::vector<int>> work{w0};
        while (!work.empty()) {
            std::vector<int> u = std::move(work.back());
            work.pop_back();
            for (std::size_t k = 0; k + 3 < u.size(); k += 1) {
                if ((start + static_cast<int>(k)) % 2 == 0) continue;  // odd positions only
                int a = u[k], d = u[k + 1], b = u[k + 2], c = u[k + 3];
                if (a < b && b < c && c < d) {
                    std::vector<int> v(u);
                    v[k] = b;
                    v[k + 1] = c;
                    v[k + 2] = a;
                    v[k + 3] = d;
                    if (seen.insert(v).second) work.push_back(v);
                }
            }
            Permutation w = Permutation::from_one_line(u, start).inverse();
            if (w.length() != lz || conjugate_theta_by(w) != z)
                throw std::logic_error("atom closure produced a non-atom");
            result.atoms.push_back(std::move(w));
        }
    }
    std::sort(result.atoms.begin(), result.atoms.end(),
              [](const Permutation& a, const Permutation& b) { return a.lex_less(b); });
    if (result.atoms.empty() || result.atoms.front() != result.beta_min)
        throw std::logic_error("beta_min is not the minimal atom");
    return result;
}

// FPF reduced words: the disjoint union of R(w) over atoms, streamed atom by
// atom (atoms in lexicographic order, words in lexicographic order).
inline void for_each_fpf_reduced_word(const FpfInvolution& z,
                                      const std::function<void(const std::vector<int>&)>& fn) {
    for (const Permutation& w : atoms(z).atoms) for_each_reduced_word(w, fn);
}

inline BigInt fpf_reduced_word_count(const FpfInvolution& z, ReducedWordCounter& counter) {
    BigInt total = 0;
    for (const Permutation& w : atoms(z).atoms) total += counter.count(w);
    return total;
}

}  // namespace fpf
