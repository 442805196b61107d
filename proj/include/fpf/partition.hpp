// Integer partitions, transposition, strictness, dominance order.
#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace fpf {

// Weakly decreasing nonnegative parts, trailing zeros trimmed.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts) : parts_(parts) { normalize(); }
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) { normalize(); }

    static Partition sorted_from(std::vector<int> values) {
        std::sort(values.begin(), values.end(), std::greater<int>());
        return Partition(std::move(values));
    }

    const std::vector<int>& parts() const { return parts_; }
    int part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
    std::size_t num_parts() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }
    long weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0L); }

    bool is_strict() const {
        for (std::size_t i = 0; i + 1 < parts_.size(); ++i)
            if (parts_[i] == parts_[i + 1]) return false;
        return true;
    }

    Partition transpose() const {
        if (parts_.empty()) return {};
        std::vector<int> t(parts_[0]);
        for (int i = 0; i < parts_[0]; ++i)
            t[i] = static_cast<int>(std::count_if(parts_.begin(), parts_.end(),
                                                  [&](int p) { return p > i; }));
        return Partition(std::move(t));
    }

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return parts_ != o.parts_; }
    bool operator<(const Partition& o) const { return parts_ < o.parts_; }  // lex

    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(parts_[i]);
        }
        return s;
    }

private:
    void normalize() {
        for (std::size_t i = 0; i + 1 < parts_.size(); ++i)
            if (parts_[i] < parts_[i + 1])
                throw std::invalid_argument("partition parts must weakly decrease");
        for (int p : parts_)
            if (p < 0) throw std::invalid_argument("negative part");
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    }

    std::vector<int> parts_;
};

// Dominance: lambda <= mu iff equal weight and all partial sums of lambda are <=.
inline bool dominance_leq(const Partition& lam, const Partition& mu) {
    if (lam.weight() != mu.weight()) return false;
    long a = 0, b = 0;
    std::size_t n = std::max(lam.num_parts(), mu.num_parts());
    for (std::size_t k = 0; k < n; ++k) {
        a += lam.part(k);
        b += mu.part(k);
        if (a > b) return false;
    }
    return true;
}

inline bool dominance_lt(const Partition& lam, const Partition& mu) {
    return lam != mu && dominance_leq(lam, mu);
}

inline std::vector<Partition> partitions_of(int d, int max_parts = -1, int max_part = -1) {
    if (max_parts < 0) max_parts = d;
    if (max_part < 0) max_part = d;
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rem, int mx) {
        if (rem == 0) {
            out.emplace_back(cur);
            return;
        }
        if (static_cast<int>(cur.size()) == max_parts) return;
        for (int v = std::min(rem, mx); v >= 1; --v) {
            cur.push_back(v);
            rec(rem - v, v);
            cur.pop_back();
        }
    };
    rec(d, max_part);
    return out;
}

inline std::vector<Partition> strict_partitions_of(int d) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rem, int mx) {
        if (rem == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int v = std::min(rem, mx); v >= 1; --v) {
            cur.push_back(v);
            rec(rem - v, v - 1);
            cur.pop_back();
        }
    };
    rec(d, d);
    return out;
}

}  // namespace fpf
