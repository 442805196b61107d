// FPF-vexillary classification: the sixteen-pattern criterion with the
// LS-tree expansion as ground truth.
#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "fpf/involution.hpp"
#include "fpf/transition.hpp"

namespace fpf {

// The sixteen minimal non-FPF-vexillary involutions: thirteen on 8 points,
// two on 10, one on 12.
inline const std::vector<std::vector<std::pair<int, int>>>& bad_fpf_patterns() {
    static const std::vector<std::vector<std::pair<int, int>>> patterns = {
        {{1, 3}, {2, 4}, {5, 8}, {6, 7}},
        {{1, 3}, {2, 5}, {4, 7}, {6, 8}},
        {{1, 3}, {2, 5}, {4, 8}, {6, 7}},
        {{1, 3}, {2, 6}, {4, 8}, {5, 7}},
        {{1, 4}, {2, 3}, {5, 7}, {6, 8}},
        {{1, 4}, {2, 3}, {5, 8}, {6, 7}},
        {{1, 5}, {2, 3}, {4, 7}, {6, 8}},
        {{1, 5}, {2, 3}, {4, 8}, {6, 7}},
        {{1, 5}, {2, 4}, {3, 7}, {6, 8}},
        {{1, 5}, {2, 4}, {3, 8}, {6, 7}},
        {{1, 6}, {2, 3}, {4, 8}, {5, 7}},
        {{1, 6}, {2, 4}, {3, 8}, {5, 7}},
        {{1, 6}, {2, 5}, {3, 8}, {4, 7}},
        {{1, 3}, {2, 4}, {5, 7}, {6, 9}, {8, 10}},
        {{1, 3}, {2, 5}, {4, 6}, {7, 9}, {8, 10}},
        {{1, 3}, {2, 4}, {5, 7}, {6, 8}, {9, 11}, {10, 12}},
    };
    return patterns;
}

enum class VexMode { pattern, oracle };

struct VexResult {
    bool vexillary = false;
    std::optional<std::vector<int>> witness;  // a bad set E (pattern mode)
    std::optional<Partition> shape;           // nu when vexillary
    SymExpansion expansion;                   // filled in oracle mode
};

// Pattern mode scans unions of 4/5/6 cycles drawn from the window cycles plus
// `theta_margin` Theta-cycles on each side.
inline VexResult is_fpf_vexillary(const FpfInvolution& z, VexMode mode = VexMode::pattern,
                                  int theta_margin = 6) {
    VexResult res;
    if (mode == VexMode::oracle) {
        res.expansion = expand_fpf_stanley(z.to_positive());
        res.vexillary = res.expansion.coeffs.size() == 1 &&
                        res.expansion.coeffs.begin()->second == 1;
        if (res.vexillary) res.shape = res.expansion.coeffs.begin()->first;
        return res;
    }

    std::vector<std::pair<int, int>> cyc = z.window_cycles();
    for (int t = 1; t <= theta_margin; ++t) {
        int a = z.window_start() - 2 * t;
        cyc.push_back({a, a + 1});
        int b = z.window_end() + 2 * t - 1;
        cyc.push_back({b, b + 1});
    }
    std::sort(cyc.begin(), cyc.end());

    // bad patterns grouped by cycle count, as sorted pair lists
    static const auto by_size = [] {
        std::vector<std::vector<std::vector<std::pair<int, int>>>> g(7);
        for (auto p : bad_fpf_patterns()) {
            std::sort(p.begin(), p.end());
            g[p.size()].push_back(p);
        }
        return g;
    }();

    int m = static_cast<int>(cyc.size());
    std::vector<int> pick;
    std::vector<std::pair<int, int>> chosen;
    bool found = false;
    std::vector<int> witness;

    std::function<void(int, int)> search = [&](int next, int want) {
        if (found) return;
        if (static_cast<int>(pick.size()) == want) {
            std::vector<int> pts;
            for (int k : pick) {
                pts.push_back(cyc[k].first);
                pts.push_back(cyc[k].second);
            }
            std::sort(pts.begin(), pts.end());
            std::vector<std::pair<int, int>> std_cycles;
            for (int k : pick) {
                int a = static_cast<int>(std::lower_bound(pts.begin(), pts.end(), cyc[k].first) -
                                         pts.begin()) + 1;
                int b = static_cast<int>(std::lower_bound(pts.begin(), pts.end(), cyc[k].second) -
                                         pts.begin()) + 1;
                std_cycles.push_back({a, b});
            }
            std::sort(std_cycles.begin(), std_cycles.end());
            for (auto& bad : by_size[want])
                if (std_cycles == bad) {
                    found = true;
                    witness = pts;
                    return;
                }
            return;
        }
        if (m - next < want - static_cast<int>(pick.size())) return;
        for (int k = next; k < m && !found; ++k) {
            pick.push_back(k);
            search(k + 1, want);
            pick.pop_back();
        }
    };
    for (int want : {4, 5, 6}) {
        search(0, want);
        if (found) break;
    }
    res.vexillary = !found;
    if (found) res.witness = witness;
    if (res.vexillary) res.shape = nu_shape(z.to_positive());
    return res;
}

}  // namespace fpf
