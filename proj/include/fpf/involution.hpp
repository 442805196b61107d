// Fixed-point-free involutions of Z that agree with Theta: i -> i - (-1)^i
// outside a finite window, plus their combinatorial statistics.
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fpf/partition.hpp"
#include "fpf/permutation.hpp"

namespace fpf {

inline int theta_of(int i) {
    return (i & 1) ? i + 1 : i - 1;  // i - (-1)^i
}

// Window [offset+1, offset+2m] with even offset; Theta outside.  Canonical form
// trims boundary Theta-cycles; the empty window is Theta itself (offset 0).
class FpfInvolution {
public:
    FpfInvolution() : offset_(0) {}

    static FpfInvolution theta() { return FpfInvolution{}; }

    // Perfect matching of [n] (n even), extended by Theta outside: the iota embedding.
    static FpfInvolution embed(const std::vector<std::pair<int, int>>& pairs) {
        int n = 0;
        for (auto& [a, b] : pairs) n = std::max({n, a, b});
        if (n % 2 != 0) throw std::invalid_argument("matching must cover an even interval [n]");
        std::vector<int> img(n, 0);
        for (auto& [a, b] : pairs) {
            if (a == b || a < 1 || b < 1) throw std::invalid_argument("bad matching pair");
            if (img[a - 1] || img[b - 1]) throw std::invalid_argument("point matched twice");
            img[a - 1] = b;
            img[b - 1] = a;
        }
        for (int v : img)
            if (v == 0) throw std::invalid_argument("fixed point present: not fixed-point-free on [n]");
        return from_window(0, std::move(img));
    }

    static FpfInvolution from_window(int offset, std::vector<int> img) {
        if (offset % 2 != 0) throw std::invalid_argument("window offset must be even");
        if (img.size() % 2 != 0) throw std::invalid_argument("window length must be even");
        FpfInvolution z;
        z.offset_ = offset;
        z.img_ = std::move(img);
        int lo = z.offset_ + 1, hi = z.offset_ + static_cast<int>(z.img_.size());
        for (int i = lo; i <= hi; ++i) {
            int v = z.img_[i - lo];
            if (v < lo || v > hi || v == i || z.img_[v - lo] != i)
                throw std::invalid_argument("window values are not a fixed-point-free involution");
        }
        z.canonicalize();
        return z;
    }

    int offset() const { return offset_; }
    int window_start() const { return offset_ + 1; }
    int window_end() const { return offset_ + static_cast<int>(img_.size()); }
    int window_size() const { return static_cast<int>(img_.size()); }
    bool is_theta() const { return img_.empty(); }

    int operator()(int i) const {
        if (i >= window_start() && i <= window_end()) return img_[i - window_start()];
        return theta_of(i);
    }

    bool operator==(const FpfInvolution& o) const {
        return offset_ == o.offset_ && img_ == o.img_;
    }
    bool operator!=(const FpfInvolution& o) const { return !(*this == o); }
    bool operator<(const FpfInvolution& o) const {  // arbitrary total order for sets
        if (offset_ != o.offset_) return offset_ < o.offset_;
        return img_ < o.img_;
    }

    // z >> N: i -> z(i-N)+N, legal for even N only.
    FpfInvolution shifted(int N) const {
        if (N % 2 != 0) throw std::invalid_argument("FPF involutions only shift by even amounts");
        if (is_theta()) return *this;
        FpfInvolution z;
        z.offset_ = offset_ + N;
        z.img_ = img_;
        for (int& v : z.img_) v += N;
        return z;
    }

    // Smallest even shift into positive positions (member of iota(F_n)).
    FpfInvolution to_positive() const {
        if (offset_ >= 0) return *this;
        return shifted(-offset_);
    }

    // (i,j) z (i,j)
    FpfInvolution conjugated(int i, int j) const {
        if (i == j) return *this;
        int lo = std::min({i, j, window_start()});
        int hi = std::max({i, j, window_end()});
        int noff = lo - 1;
        if (((noff % 2) + 2) % 2 != 0) --noff;
        if ((hi - noff) % 2 != 0) ++hi;
        std::vector<int> img(hi - noff);
        auto t = [&](int k) { return k == i ? j : (k == j ? i : k); };
        for (int k = noff + 1; k <= hi; ++k) img[k - noff - 1] = t((*this)(t(k)));
        FpfInvolution z;
        z.offset_ = noff;
        z.img_ = std::move(img);
        z.canonicalize();
        return z;
    }

    std::vector<std::pair<int, int>> window_cycles() const {
        std::vector<std::pair<int, int>> c;
        for (int i = window_start(); i <= window_end(); ++i)
            if (img_[i - window_start()] > i) c.push_back({i, img_[i - window_start()]});
        return c;
    }

    // All cycles of the matching on [n] (window cycles plus Theta cycles inside [n]).
    std::vector<std::pair<int, int>> cycles_on(int n) const {
        std::vector<std::pair<int, int>> c;
        for (int i = 1; i <= n; ++i) {
            int j = (*this)(i);
            if (i < j) c.push_back({i, j});
        }
        return c;
    }

    std::size_t hash() const {
        std::size_t h = std::hash<int>()(offset_) * 31u;
        for (int v : img_) h = h * 1099511628211ull + static_cast<std::size_t>(v + 977);
        return h;
    }

private:
    void canonicalize() {
        std::size_t lo = 0, n = img_.size();
        while (n - lo >= 2 && img_[lo] == offset_ + static_cast<int>(lo) + 2 &&
               img_[lo + 1] == offset_ + static_cast<int>(lo) + 1)
            lo += 2;
        while (n - lo >= 2 && img_[n - 2] == offset_ + static_cast<int>(n) &&
               img_[n - 1] == offset_ + static_cast<int>(n) - 1)
            n -= 2;
        if (lo > 0 || n < img_.size()) {
            img_ = std::vector<int>(img_.begin() + lo, img_.begin() + n);
            offset_ += static_cast<int>(lo);
        }
        if (img_.empty()) offset_ = 0;  // Theta is Theta wherever the window collapsed
    }

    int offset_;
    std::vector<int> img_;
};

struct FpfInvolutionHash {
    std::size_t operator()(const FpfInvolution& z) const { return z.hash(); }
};

inline bool shift_equivalent(const FpfInvolution& a, const FpfInvolution& b) {
    if (a.window_size() != b.window_size()) return false;
    int d = b.offset() - a.offset();
    if (d % 2 != 0) return false;
    return a.shifted(d) == b;
}

// ---------------------------------------------------------------------------
// statistics
// ---------------------------------------------------------------------------

struct FpfStats {
    long ell_fpf = 0;
    std::set<std::pair<int, int>> inv_fpf;       // Inv(z) - Cyc(z)
    std::set<int> des_R_fpf;                     // i with (i,i+1) in inv_fpf
    std::vector<std::pair<int, int>> cycles;     // window cycles (a,b), a<b
};

inline FpfStats fpf_stats(const FpfInvolution& z) {
    FpfStats s;
    int lo = z.window_start(), hi = z.window_end();
    for (int i = lo; i <= hi; ++i)
        for (int j = i + 1; j <= hi; ++j)
            if (z(i) > z(j) && z(i) != j) s.inv_fpf.insert({i, j});
    s.ell_fpf = static_cast<long>(s.inv_fpf.size()) / 2;
    for (auto& [i, j] : s.inv_fpf)
        if (j == i + 1) s.des_R_fpf.insert(i);
    s.cycles = z.window_cycles();
    return s;
}

inline long ell_fpf(const FpfInvolution& z) {
    long inv = 0;
    int lo = z.window_start(), hi = z.window_end();
    for (int i = lo; i <= hi; ++i)
        for (int j = i + 1; j <= hi; ++j)
            if (z(i) > z(j) && z(i) != j) ++inv;
    return inv / 2;
}

struct VisibleData {
    std::set<std::pair<int, int>> inversions;  // (i,j), i<j, z(j) < min(i, z(i))
    std::set<int> descents;
    std::optional<std::pair<int, int>> max_inversion;  // lexicographic maximum
};

inline VisibleData visible_data(const FpfInvolution& z) {
    VisibleData v;
    int lo = z.window_start(), hi = z.window_end();
    for (int i = lo; i <= hi; ++i)
        for (int j = i + 1; j <= hi; ++j)
            if (z(j) < std::min(i, z(i))) v.inversions.insert({i, j});
    for (auto& [i, j] : v.inversions)
        if (j == i + 1) v.descents.insert(i);
    if (!v.inversions.empty()) v.max_inversion = *v.inversions.rbegin();
    return v;
}

// ---------------------------------------------------------------------------
// diagram / code / shape
// ---------------------------------------------------------------------------

struct FpfDiagramData {
    std::set<std::pair<int, int>> diagram;  // {(i,j) : j < i < z(j), j < z(i)}
    std::vector<int> code;                  // rows 1..last nonzero
    Partition nu;                           // transpose of sorted code
};

inline FpfDiagramData fpf_diagram_code_shape(const FpfInvolution& z) {
    if (z.offset() < 0)
        throw std::invalid_argument("fpf diagram requires a positive window; shift first");
    FpfDiagramData d;
    int hi = z.window_end();
    for (int j = 1; j <= hi; ++j)
        for (int i = j + 1; i < std::min(z(j), hi + 1); ++i)
            if (j < z(i)) d.diagram.insert({i, j});
    int last = 0;
    std::vector<int> code(hi, 0);
    for (auto& [i, j] : d.diagram) {
        ++code[i - 1];
        last = std::max(last, i);
    }
    code.resize(last);
    d.code = code;
    d.nu = Partition::sorted_from(std::move(code)).transpose();
    return d;
}

inline Partition nu_shape(const FpfInvolution& z) {
    return fpf_diagram_code_shape(z.to_positive()).nu;
}

inline std::set<std::pair<int, int>> essential_set(const std::set<std::pair<int, int>>& D) {
    std::set<std::pair<int, int>> e;
    for (auto& [i, j] : D)
        if (!D.count({i + 1, j}) && !D.count({i, j + 1})) e.insert({i, j});
    return e;
}

// FPF-dominant: {(i-1,j) : (i,j) in diagram} is the transpose of the shifted
// shape of a strict partition, i.e. column j holds exactly rows j..j+mu_j-1
// with mu strictly decreasing.
inline bool is_fpf_dominant(const FpfInvolution& z) {
    auto D = fpf_diagram_code_shape(z.to_positive()).diagram;
    if (D.empty()) return true;
    std::vector<std::vector<int>> cols;
    for (auto& [i, j] : D) {
        if (static_cast<std::size_t>(j) > cols.size()) cols.resize(j);
        cols[j - 1].push_back(i - 1);  // shifted up one row
    }
    std::vector<int> mu;
    for (std::size_t j = 1; j <= cols.size(); ++j) {
        auto& rows = cols[j - 1];
        if (rows.empty()) return false;
        std::sort(rows.begin(), rows.end());
        for (std::size_t k = 0; k < rows.size(); ++k)
            if (rows[k] != static_cast<int>(j + k)) return false;
        mu.push_back(static_cast<int>(rows.size()));
    }
    for (std::size_t k = 0; k + 1 < mu.size(); ++k)
        if (mu[k] <= mu[k + 1]) return false;
    return true;
}

// ---------------------------------------------------------------------------
// the maps I and F
// ---------------------------------------------------------------------------

// I(z): keep exactly the cycles (p,q) for which some cycle (a,b) has p < b < q.
inline Permutation map_I(const FpfInvolution& z) {
    auto cyc = z.window_cycles();
    std::vector<std::vector<int>> kept;
    for (auto& [p, q] : cyc) {
        bool witness = false;
        for (auto& [a, b] : cyc)
            if (p < b && b < q) {
                witness = true;
                break;
            }
        if (witness) kept.push_back({p, q});
    }
    return Permutation::from_cycles(kept);
}

// F(y) for a finite-support involution y: fill the non-support points with the
// order-preserving copy of Theta anchored at an even point below the support.
inline FpfInvolution map_F(const Permutation& y) {
    if (y * y != Permutation{}) throw std::invalid_argument("map_F input must be an involution");
    if (y.is_identity()) return FpfInvolution::theta();
    int lo = y.min_moved(), hi = y.max_moved();
    int m = lo - 1;
    if (((m % 2) + 2) % 2 != 0) --m;  // even, below the support
    std::vector<int> gaps;
    for (int i = m + 1; i <= hi; ++i)
        if (y(i) == i) gaps.push_back(i);
    if (gaps.size() % 2 != 0) gaps.push_back(hi + 1);
    int end = std::max(hi, gaps.empty() ? hi : gaps.back());
    if ((end - m) % 2 != 0) ++end;  // keep the window even
    std::vector<int> img(end - m);
    for (int i = m + 1; i <= end; ++i) img[i - m - 1] = theta_of(i);
    auto set_pair = [&](int a, int b) {
        img[a - m - 1] = b;
        img[b - m - 1] = a;
    };
    for (int i = lo; i <= hi; ++i)
        if (y(i) != i) img[i - m - 1] = y(i);
    for (std::size_t k = 0; k + 1 < gaps.size(); k += 2) set_pair(gaps[k], gaps[k + 1]);
    return FpfInvolution::from_window(m, std::move(img));
}

// ---------------------------------------------------------------------------
// classification
// ---------------------------------------------------------------------------

// The involution that keeps exactly the non-adjacent cycles of z; it satisfies
// z = F(y) and shares the FPF-visible descents of z.
inline Permutation adjacent_free_part(const FpfInvolution& z) {
    std::vector<std::vector<int>> cyc;
    for (auto& [a, b] : z.window_cycles())
        if (b != a + 1) cyc.push_back({a, b});
    return Permutation::from_cycles(cyc);
}

struct IGrassmannianData {
    std::vector<int> phi;  // increasing, phi_r <= n
    int n = 0;
};

// The presentation y = (phi_1,n+1)(phi_2,n+2)...(phi_r,n+r), if y has one.
// The identity is I-Grassmannian with an empty presentation.
inline std::optional<IGrassmannianData> i_grassmannian_presentation(const Permutation& y) {
    if (y.is_identity()) return IGrassmannianData{{}, 0};
    std::vector<std::pair<int, int>> cyc;
    for (int i = y.min_moved(); i <= y.max_moved(); ++i) {
        if (y(y(i)) != i) return std::nullopt;  // not an involution
        if (y(i) > i) cyc.push_back({i, y(i)});
    }
    std::sort(cyc.begin(), cyc.end());
    int r = static_cast<int>(cyc.size());
    for (int k = 0; k < r; ++k) {
        if (cyc[k].second != cyc[0].second + k) return std::nullopt;
        if (k > 0 && cyc[k].first <= cyc[k - 1].first) return std::nullopt;
    }
    int n = cyc[0].second - 1;
    if (cyc[r - 1].first > n) return std::nullopt;
    IGrassmannianData d;
    d.n = n;
    for (auto& [c, dd] : cyc) d.phi.push_back(c);
    return d;
}

struct GrassmannianData {
    std::vector<int> phi;  // strictly increasing, phi_r < n; empty encodes Theta
    int n = 1;
    Partition nu;          // (n-phi_1, ..., n-phi_r)
};

struct ClassifyResult {
    bool is_dominant = false;
    bool is_grassmannian = false;
    std::optional<GrassmannianData> data;
    // untrimmed I(z)-presentation (phi may end with phi_r = n); empty for Theta
    std::vector<int> phi_untrimmed;
    int n_untrimmed = 1;
};

inline ClassifyResult classify(const FpfInvolution& z) {
    ClassifyResult r;
    r.is_dominant = is_fpf_dominant(z);
    Permutation y = map_I(z);
    if (y.is_identity()) {
        r.is_grassmannian = true;
        r.data = GrassmannianData{};
        return r;
    }
    auto pres = i_grassmannian_presentation(y);
    if (!pres) return r;
    r.is_grassmannian = true;
    GrassmannianData g;
    g.n = pres->n;
    g.phi = pres->phi;
    r.phi_untrimmed = g.phi;
    r.n_untrimmed = g.n;
    if (!g.phi.empty() && g.phi.back() == g.n) g.phi.pop_back();  // zero part of nu
    std::vector<int> nu;
    for (int p : g.phi) nu.push_back(g.n - p);
    g.nu = Partition(std::move(nu));
    r.data = std::move(g);
    return r;
}

// z = F((phi_1,n+1)(phi_2,n+2)...(phi_r,n+r)); the Grassmannian of given data.
inline FpfInvolution grassmannian_involution(const std::vector<int>& phi, int n) {
    if (phi.empty()) return FpfInvolution::theta();
    std::vector<std::vector<int>> cyc;
    for (std::size_t i = 0; i < phi.size(); ++i) {
        if (phi[i] < 1 || phi[i] > n || (i > 0 && phi[i] <= phi[i - 1]))
            throw std::invalid_argument("phi must be strictly increasing in [1,n]");
        cyc.push_back({phi[i], n + 1 + static_cast<int>(i)});
    }
    return map_F(Permutation::from_cycles(cyc));
}

// ---------------------------------------------------------------------------
// pattern restriction
// ---------------------------------------------------------------------------

// [z]_E = psi_{z(E)} o z o phi_E for a z-invariant finite set E.
inline Permutation pattern_restrict(const FpfInvolution& z, const std::vector<int>& E_in) {
    std::vector<int> E(E_in);
    std::sort(E.begin(), E.end());
    E.erase(std::unique(E.begin(), E.end()), E.end());
    for (int e : E)
        if (std::find(E.begin(), E.end(), z(e)) == E.end())
            throw std::invalid_argument("set is not z-invariant");
    std::vector<int> img(E.size());
    for (std::size_t k = 0; k < E.size(); ++k) {
        int v = z(E[k]);
        img[k] = static_cast<int>(std::lower_bound(E.begin(), E.end(), v) - E.begin()) + 1;
    }
    return Permutation::from_one_line(std::move(img), 1);
}

// [[z]]_E = iota([z]_E); requires [z]_E fixed-point-free (true when E is a
// union of cycles).
inline FpfInvolution pattern_restrict_fpf(const FpfInvolution& z, const std::vector<int>& E_in) {
    Permutation p = pattern_restrict(z, E_in);
    int n = static_cast<int>(E_in.size());
    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i <= n; ++i) {
        int j = p(i);
        if (j == i) throw std::invalid_argument("restriction has a fixed point");
        if (i < j) pairs.push_back({i, j});
    }
    return FpfInvolution::embed(pairs);
}

// ---------------------------------------------------------------------------
// Bruhat covers
// ---------------------------------------------------------------------------

// True iff (i,j)y(i,j) covers y in the FPF Bruhat order, decided by the
// two cover conditions: no witness e strictly between with y(i)<y(e)<y(j),
// and the 4-point restriction moving (1,2)(3,4) -> (1,3)(2,4) or
// (1,3)(2,4) -> (1,4)(2,3).
inline bool bruhat_cover_check(const FpfInvolution& y, int i, int j) {
    if (i >= j) throw std::invalid_argument("need i < j");
    int yi = y(i), yj = y(j);
    if (yi >= yj) return false;
    for (int e = i + 1; e < j; ++e) {
        int ye = y(e);
        if (yi < ye && ye < yj) return false;
    }
    std::vector<int> A{i, j, yi, yj};
    std::sort(A.begin(), A.end());
    A.erase(std::unique(A.begin(), A.end()), A.end());
    if (A.size() != 4) return false;
    auto pat = [&](auto val) {
        std::vector<std::pair<int, int>> c;
        for (int k = 0; k < 4; ++k) {
            int img = val(A[k]);
            int r = static_cast<int>(std::lower_bound(A.begin(), A.end(), img) - A.begin());
            if (k < r) c.push_back({k + 1, r + 1});
        }
        return c;
    };
    auto py = pat([&](int v) { return y(v); });
    auto pz = pat([&](int v) {
        auto t = [&](int k) { return k == i ? j : (k == j ? i : k); };
        return t(y(t(v)));
    });
    using P = std::vector<std::pair<int, int>>;
    static const P theta4{{1, 2}, {3, 4}}, mid{{1, 3}, {2, 4}}, top{{1, 4}, {2, 3}};
    return (py == theta4 && pz == mid) || (py == mid && pz == top);
}

// ---------------------------------------------------------------------------
// enumeration of F_n
// ---------------------------------------------------------------------------

inline BigInt double_factorial_odd(int n) {  // |F_n| = (n-1)!!
    BigInt r = 1;
    for (int k = n - 1; k > 1; k -= 2) r *= k;
    return r;
}

inline void for_each_fpf(int n, const std::function<void(const FpfInvolution&)>& fn) {
    if (n % 2 != 0) throw std::invalid_argument("F_n is empty for odd n");
    std::vector<int> img(n, 0);
    std::function<void()> rec = [&]() {
        int a = -1;
        for (int k = 0; k < n; ++k)
            if (img[k] == 0) {
                a = k;
                break;
            }
        if (a < 0) {
            fn(FpfInvolution::from_window(0, img));
            return;
        }
        for (int b = a + 1; b < n; ++b) {
            if (img[b] != 0) continue;
            img[a] = b + 1;
            img[b] = a + 1;
            rec();
            img[a] = img[b] = 0;
        }
    };
    rec();
}

inline std::string cycle_notation(const FpfInvolution& z) {
    if (z.is_theta()) return "()";
    std::string s;
    for (auto& [a, b] : z.window_cycles())
        s += "(" + std::to_string(a) + "," + std::to_string(b) + ")";
    return s;
}

// Matching number `rank` in the same lexicographic order as for_each_fpf.
inline FpfInvolution fpf_unrank(int n, BigInt rank) {
    std::vector<int> img(n, 0);
    int remaining = n;
    while (remaining > 0) {
        int a = -1;
        for (int k = 0; k < n; ++k)
            if (img[k] == 0) {
                a = k;
                break;
            }
        // completions once a partner of `a` is fixed: (remaining-3)!!
        BigInt sub = 1;
        for (int k = remaining - 3; k > 1; k -= 2) sub *= k;
        int choice = static_cast<int>(rank / sub);
        rank %= sub;
        int b = -1, seen = -1;
        for (int k = a + 1; k < n; ++k)
            if (img[k] == 0 && ++seen == choice) {
                b = k;
                break;
            }
        if (b < 0) throw std::out_of_range("rank exceeds |F_n|");
        img[a] = b + 1;
        img[b] = a + 1;
        remaining -= 2;
    }
    return FpfInvolution::from_window(0, std::move(img));
}

}  // namespace fpf
