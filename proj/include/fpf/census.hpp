// Census sweeps over F_n: Grassmannian / visible-descent / vexillary counts
// and the reduced-word counts of reverse permutations, with optional
// data-parallel evaluation (results independent of the split).
#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "fpf/atoms.hpp"
#include "fpf/involution.hpp"
#include "fpf/transition.hpp"
#include "fpf/vexillary.hpp"

namespace fpf {

// Applies `fn` to every element of F_n, splitting the (n-1)!! matchings into
// contiguous rank ranges per worker.
inline BigInt parallel_fpf_count(int n, int threads,
                                 const std::function<bool(const FpfInvolution&)>& pred) {
    BigInt total_elems = double_factorial_odd(n);
    if (threads <= 1 || total_elems < 1024) {
        BigInt count = 0;
        for_each_fpf(n, [&](const FpfInvolution& z) {
            if (pred(z)) ++count;
        });
        return count;
    }
    long total = static_cast<long>(total_elems);
    std::vector<BigInt> partial(threads, BigInt(0));
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) {
        long lo = total * t / threads, hi = total * (t + 1) / threads;
        pool.emplace_back([&, t, lo, hi] {
            BigInt c = 0;
            for (long r = lo; r < hi; ++r)
                if (pred(fpf_unrank(n, BigInt(r)))) ++c;
            partial[t] = c;
        });
    }
    for (auto& th : pool) th.join();
    BigInt count = 0;
    for (auto& c : partial) count += c;
    return count;
}

inline BigInt count_grassmannian(int n, int threads = 1) {
    return parallel_fpf_count(n, threads,
                              [](const FpfInvolution& z) { return classify(z).is_grassmannian; });
}

inline BigInt count_visible_descents_le1(int n, int threads = 1) {
    return parallel_fpf_count(n, threads, [](const FpfInvolution& z) {
        return visible_data(z).descents.size() <= 1;
    });
}

inline BigInt count_vexillary(int n, VexMode mode = VexMode::oracle, int threads = 1) {
    return parallel_fpf_count(n, threads, [mode](const FpfInvolution& z) {
        return is_fpf_vexillary(z, mode).vexillary;
    });
}

// The reverse permutation w_n = n...321 in F_n (n even).
inline FpfInvolution reverse_involution(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i <= n / 2; ++i) pairs.push_back({i, n + 1 - i});
    return FpfInvolution::embed(pairs);
}

// |R^fpf(w_n)|: the r-hat numbers 1, 2, 80, 236544, ...
inline BigInt rhat_count(int n, ReducedWordCounter& counter) {
    return fpf_reduced_word_count(reverse_involution(n), counter);
}

}  // namespace fpf
