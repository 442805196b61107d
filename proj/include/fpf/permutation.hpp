// Finite-support permutations of the integers: one-line window representation,
// length/descent statistics, Rothe diagrams and codes, reduced-word machinery.
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <mutex>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

#include "fpf/bigint.hpp"

namespace fpf {

// Permutation of Z fixing everything outside a finite window.  The window is
// the minimal interval containing the support; an empty window is the identity.
class Permutation {
public:
    Permutation() : start_(1) {}

    // One-line values w(start), w(start+1), ... ; must permute the window.
    static Permutation from_one_line(std::vector<int> img, int start = 1) {
        std::vector<int> sorted(img);
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t k = 0; k < sorted.size(); ++k)
            if (sorted[k] != start + static_cast<int>(k))
                throw std::invalid_argument("one-line word is not a permutation of its window");
        Permutation w;
        w.start_ = start;
        w.img_ = std::move(img);
        w.normalize();
        return w;
    }

    static Permutation from_cycles(const std::vector<std::vector<int>>& cycles) {
        int lo = 1, hi = 0;
        for (const auto& c : cycles)
            for (int v : c) {
                lo = std::min(lo, v);
                hi = std::max(hi, v);
            }
        if (hi < lo) return Permutation{};
        std::vector<int> img(hi - lo + 1);
        for (int i = lo; i <= hi; ++i) img[i - lo] = i;
        for (const auto& c : cycles)
            for (std::size_t k = 0; k < c.size(); ++k) {
                int from = c[k], to = c[(k + 1) % c.size()];
                if (img[from - lo] != from)
                    throw std::invalid_argument("cycles are not disjoint");
                img[from - lo] = to;
            }
        return from_one_line(std::move(img), lo);
    }

    static Permutation simple(int i) { return from_one_line({i + 1, i}, i); }

    bool is_identity() const { return img_.empty(); }
    int window_start() const { return start_; }
    int window_end() const { return start_ + static_cast<int>(img_.size()) - 1; }
    // Smallest/largest moved point; identity reports an empty [1,0] range.
    int min_moved() const { return img_.empty() ? 1 : start_; }
    int max_moved() const { return img_.empty() ? 0 : window_end(); }

    int operator()(int i) const {
        if (i < start_ || i > window_end()) return i;
        return img_[i - start_];
    }

    Permutation inverse() const {
        Permutation w;
        w.start_ = start_;
        w.img_.resize(img_.size());
        for (std::size_t k = 0; k < img_.size(); ++k)
            w.img_[img_[k] - start_] = start_ + static_cast<int>(k);
        return w;  // already normalized: support of w^{-1} = support of w
    }

    // Composition (w*v)(i) = w(v(i)).
    friend Permutation operator*(const Permutation& w, const Permutation& v) {
        if (w.is_identity()) return v;
        if (v.is_identity()) return w;
        int lo = std::min(w.start_, v.start_);
        int hi = std::max(w.window_end(), v.window_end());
        std::vector<int> img(hi - lo + 1);
        for (int i = lo; i <= hi; ++i) img[i - lo] = w(v(i));
        Permutation r;
        r.start_ = lo;
        r.img_ = std::move(img);
        r.normalize();
        return r;
    }

    bool operator==(const Permutation& o) const {
        return start_ == o.start_ && img_ == o.img_;
    }
    bool operator!=(const Permutation& o) const { return !(*this == o); }

    // Lexicographic order on one-line representations ...w(i)w(i+1)...
    bool lex_less(const Permutation& o) const {
        int lo = std::min(min_moved(), o.min_moved());
        int hi = std::max(max_moved(), o.max_moved());
        for (int i = lo; i <= hi; ++i) {
            int a = (*this)(i), b = o(i);
            if (a != b) return a < b;
        }
        return false;
    }

    long length() const {
        long inv = 0;
        for (std::size_t a = 0; a < img_.size(); ++a)
            for (std::size_t b = a + 1; b < img_.size(); ++b)
                if (img_[a] > img_[b]) ++inv;
        return inv;
    }

    // Right descents {i : w(i) > w(i+1)}; all lie inside the window.
    std::vector<int> right_descents() const {
        std::vector<int> d;
        for (std::size_t k = 0; k + 1 < img_.size(); ++k)
            if (img_[k] > img_[k + 1]) d.push_back(start_ + static_cast<int>(k));
        return d;
    }

    std::vector<int> left_descents() const { return inverse().right_descents(); }

    std::vector<int> one_line() const { return img_; }

    std::size_t hash() const {
        std::size_t h = std::hash<int>()(start_) * 1000003u;
        for (int v : img_) h = h * 1099511628211ull + static_cast<std::size_t>(v + 7);
        return h;
    }

private:
    void normalize() {
        std::size_t lo = 0, hi = img_.size();
        while (lo < hi && img_[lo] == start_ + static_cast<int>(lo)) ++lo;
        while (hi > lo && img_[hi - 1] == start_ + static_cast<int>(hi - 1)) --hi;
        if (lo > 0 || hi < img_.size()) {
            img_ = std::vector<int>(img_.begin() + lo, img_.begin() + hi);
            start_ += static_cast<int>(lo);
        }
        if (img_.empty()) start_ = 1;
    }

    int start_;
    std::vector<int> img_;
};

struct PermutationHash {
    std::size_t operator()(const Permutation& w) const { return w.hash(); }
};

struct PermStats {
    long length = 0;
    std::set<int> des_left;
    std::set<int> des_right;
};

inline PermStats perm_stats(const Permutation& w) {
    PermStats s;
    s.length = w.length();
    for (int i : w.right_descents()) s.des_right.insert(i);
    for (int i : w.left_descents()) s.des_left.insert(i);
    return s;
}

// D(w) = {(i, w(j)) : (i,j) an inversion}; code(i) = row-i count; shape = sorted code.
struct DiagramData {
    std::set<std::pair<int, int>> diagram;
    std::vector<int> code;   // rows 1..max nonzero row (positive-support w)
    std::vector<int> shape;  // code sorted decreasingly, zeros dropped
};

inline DiagramData diagram_code_shape(const Permutation& w) {
    if (w.min_moved() < 1)
        throw std::invalid_argument("diagram requires support in positive positions");
    DiagramData d;
    int n = w.max_moved();
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (w(i) > w(j)) d.diagram.insert({i, w(j)});
    int last = 0;
    std::vector<int> code(n, 0);
    for (auto& [i, j] : d.diagram) {
        ++code[i - 1];
        last = std::max(last, i);
    }
    code.resize(last);
    d.code = code;
    std::sort(code.begin(), code.end(), std::greater<int>());
    while (!code.empty() && code.back() == 0) code.pop_back();
    d.shape = std::move(code);
    return d;
}

inline std::vector<int> shape_of(const Permutation& w) { return diagram_code_shape(w).shape; }

namespace detail {

// Mutable one-line + inverse tables over a fixed window, for word search.
struct PermTable {
    int start;
    std::vector<int> val;  // val[k] = w(start+k)
    std::vector<int> pos;  // pos[k] = w^{-1}(start+k)

    explicit PermTable(const Permutation& w) {
        start = w.min_moved();
        int n = std::max(w.max_moved() - start + 1, 0);
        val.resize(n);
        pos.resize(n);
        for (int k = 0; k < n; ++k) val[k] = w(start + k);
        for (int k = 0; k < n; ++k) pos[val[k] - start] = start + k;
    }

    // left-multiply by s_i: swap the values i and i+1
    void left_mult(int i) {
        int a = pos[i - start], b = pos[i + 1 - start];
        std::swap(val[a - start], val[b - start]);
        std::swap(pos[i - start], pos[i + 1 - start]);
    }

    bool left_descent(int i) const {  // ell(s_i w) < ell(w)
        return pos[i - start] > pos[i + 1 - start];
    }
};

}  // namespace detail

// Streams the reduced words of w in lexicographic order.  A word (i_1,...,i_l)
// satisfies w = s_{i_1}...s_{i_l}.
inline void for_each_reduced_word(const Permutation& w,
                                  const std::function<void(const std::vector<int>&)>& fn) {
    if (w.is_identity()) {
        std::vector<int> empty;
        fn(empty);
        return;
    }
    detail::PermTable t(w);
    int lo = t.start, hi = t.start + static_cast<int>(t.val.size()) - 1;
    std::vector<int> word;
    long remaining = w.length();
    auto rec = [&](auto&& self) -> void {
        if (remaining == 0) {
            fn(word);
            return;
        }
        for (int i = lo; i < hi; ++i) {
            if (t.left_descent(i)) {
                t.left_mult(i);
                word.push_back(i);
                --remaining;
                self(self);
                ++remaining;
                word.pop_back();
                t.left_mult(i);
            }
        }
    };
    rec(rec);
}

// Memoized count |R(w)| = sum over right descents of |R(ws_i)|.  Keys are
// shift-normalized one-line words, so counts are shared across shifts.
class ReducedWordCounter {
public:
    explicit ReducedWordCounter(std::size_t max_entries = 0) : budget_(max_entries) {}

    BigInt count(const Permutation& w) {
        std::vector<int> key = normal_key(w);
        return count_key(key);
    }

    std::size_t cache_size() const { return memo_.size(); }

private:
    static std::vector<int> normal_key(const Permutation& w) {
        std::vector<int> key = w.one_line();
        int shift = w.window_start() - 1;
        for (int& v : key) v -= shift;
        return key;
    }

    struct VecHash {
        std::size_t operator()(const std::vector<int>& v) const {
            std::size_t h = 1469598103934665603ull;
            for (int x : v) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
            return h;
        }
    };

    BigInt count_key(std::vector<int>& key) {
        if (key.size() <= 1) return 1;
        {
            std::lock_guard<std::mutex> lk(mu_);
            auto it = memo_.find(key);
            if (it != memo_.end()) return it->second;
        }
        BigInt total = 0;
        for (std::size_t k = 0; k + 1 < key.size(); ++k) {
            if (key[k] > key[k + 1]) {
                std::swap(key[k], key[k + 1]);
                // renormalize the trimmed window of the child
                std::size_t lo = 0, hi = key.size();
                while (lo < hi && key[lo] == static_cast<int>(lo) + 1) ++lo;
                while (hi > lo && key[hi - 1] == static_cast<int>(hi)) --hi;
                std::vector<int> child(key.begin() + lo, key.begin() + hi);
                for (int& v : child) v -= static_cast<int>(lo);
                total += count_key(child);
                std::swap(key[k], key[k + 1]);
            }
        }
        std::lock_guard<std::mutex> lk(mu_);
        if (budget_ == 0 || memo_.size() < budget_) memo_.emplace(key, total);
        return total;
    }

    std::size_t budget_;
    std::mutex mu_;
    std::unordered_map<std::vector<int>, BigInt, VecHash> memo_;
};

}  // namespace fpf
