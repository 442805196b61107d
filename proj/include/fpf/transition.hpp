// The covering sets Psi+/Psi-, the map eta, the FPF Lascoux-Schutzenberger
// tree, exact Schur-P expansion of FPF Stanley symmetric functions, and the
// transition / triangularity verification reports.
#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "fpf/involution.hpp"
#include "fpf/schubert.hpp"
#include "fpf/symfunc.hpp"

namespace fpf {

// Psi+(y,r): covers (r,j)y(r,j) with j > r.  Candidates concentrate near the
// window; the scan extends one Theta-cycle at a time and stops after two
// consecutive fruitless extensions.
inline std::vector<FpfInvolution> psi_plus(const FpfInvolution& y, int r) {
    std::vector<FpfInvolution> out;
    int j = r + 1;
    int hi = std::max(y.window_end(), r) + 2;
    int misses = 0;
    while (true) {
        bool found = false;
        for (; j <= hi; ++j)
            if (bruhat_cover_check(y, r, j)) {
                out.push_back(y.conjugated(r, j));
                found = true;
            }
        if (found) misses = 0;
        else if (++misses >= 2) break;
        hi += 2;
    }
    return out;  // ordered by increasing j
}

// Psi-(y,r): covers (i,r)y(i,r) with i < r, ordered by increasing i.
inline std::vector<FpfInvolution> psi_minus(const FpfInvolution& y, int r) {
    std::vector<std::pair<int, FpfInvolution>> found;
    int lo = std::min(y.window_start(), r) - 2;
    int i = r - 1;
    int misses = 0;
    while (true) {
        bool hit = false;
        for (; i >= lo; --i)
            if (bruhat_cover_check(y, i, r)) {
                found.push_back({i, y.conjugated(i, r)});
                hit = true;
            }
        if (hit) misses = 0;
        else if (++misses >= 2) break;
        lo -= 2;
    }
    std::sort(found.begin(), found.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<FpfInvolution> out;
    for (auto& [ii, z] : found) out.push_back(std::move(z));
    return out;
}

struct EtaData {
    FpfInvolution y;  // (q,r) z (q,r)
    int q = 0, r = 0, p = 0;  // (q,r) maximal FPF-visible inversion, p = y(q)
};

inline EtaData eta(const FpfInvolution& z) {
    if (z.is_theta()) throw std::invalid_argument("eta is undefined at Theta");
    auto vis = visible_data(z);
    EtaData e;
    e.q = vis.max_inversion->first;
    e.r = vis.max_inversion->second;
    e.y = z.conjugated(e.q, e.r);
    e.p = e.y(e.q);
    return e;
}

// Children in the LS tree: empty for FPF-Grassmannian z, else Psi-(eta(z).y, p).
inline std::vector<FpfInvolution> tree_children(const FpfInvolution& z) {
    if (classify(z).is_grassmannian) return {};
    EtaData e = eta(z);
    return psi_minus(e.y, e.p);
}

struct LSTree {
    struct Node {
        FpfInvolution z;
        int parent = -1;
        std::vector<int> children;
        bool grassmannian = false;
        Partition shape;  // nu(z) for leaves
    };
    std::vector<Node> nodes;  // preorder; node 0 is the root
    bool depth_limit_hit = false;

    std::map<Partition, BigInt, PartitionLexDesc> leaf_shapes() const {
        std::map<Partition, BigInt, PartitionLexDesc> m;
        for (auto& n : nodes)
            if (n.grassmannian) {
                auto [it, fresh] = m.try_emplace(n.shape, 1);
                if (!fresh) ++it->second;
            }
        return m;
    }

    std::size_t leaf_count() const {
        std::size_t c = 0;
        for (auto& n : nodes) c += n.grassmannian ? 1 : 0;
        return c;
    }
};

inline LSTree build_ls_tree(const FpfInvolution& root, int depth_limit = 256) {
    LSTree t;
    std::function<void(const FpfInvolution&, int, int)> rec = [&](const FpfInvolution& z,
                                                                  int parent, int depth) {
        int me = static_cast<int>(t.nodes.size());
        t.nodes.push_back({});
        t.nodes[me].z = z;
        t.nodes[me].parent = parent;
        auto cls = classify(z);
        if (cls.is_grassmannian) {
            t.nodes[me].grassmannian = true;
            t.nodes[me].shape = cls.data->nu;
            return;
        }
        if (depth >= depth_limit) {
            t.depth_limit_hit = true;
            return;
        }
        EtaData e = eta(z);
        for (const FpfInvolution& c : psi_minus(e.y, e.p)) {
            int idx = static_cast<int>(t.nodes.size());
            t.nodes[me].children.push_back(idx);
            rec(c, me, depth + 1);
        }
    };
    rec(root, -1, 0);
    return t;
}

// Exact Schur-P expansion of F^fpf_z: multiset of leaf shapes of the LS tree.
inline SymExpansion expand_fpf_stanley(const FpfInvolution& z, int depth_limit = 256) {
    LSTree t = build_ls_tree(z, depth_limit);
    if (t.depth_limit_hit) throw std::runtime_error("LS tree hit the depth limit");
    SymExpansion e;
    e.basis = Basis::schurP;
    e.coeffs = t.leaf_shapes();
    e.degree = ell_fpf(z);
    e.trunc_vars = 0;  // exact
    return e;
}

// ---------------------------------------------------------------------------
// verification: transition identities
// ---------------------------------------------------------------------------

struct TransitionReport {
    bool poly_identity = false;    // (x_p+x_q) S_y = sum Psi+ - sum Psi-
    bool series_identity = false;  // sum Psi- F = sum Psi+ F
    bool series_literal = false;   // literal truncated-polynomial comparison ran
    int psi_plus_size = 0;
    int psi_minus_size = 0;
};

// Degree bound below which the series identity is additionally compared as
// literal truncated polynomials at N = ell+1 (above it the expansion
// comparison is equivalent and far cheaper).
inline constexpr int kSeriesLiteralDegreeLimit = 10;

inline TransitionReport verify_transition(const FpfInvolution& y, int p, int q) {
    if (y(p) != q || p >= q) throw std::invalid_argument("(p,q) must be a cycle of y");
    if (y.offset() < 0)
        throw std::invalid_argument("polynomial identity needs y in positive positions");
    TransitionReport rep;
    auto plus = psi_plus(y, q);
    auto minus = psi_minus(y, p);
    rep.psi_plus_size = static_cast<int>(plus.size());
    rep.psi_minus_size = static_cast<int>(minus.size());

    // Thm: (x_p + x_q) S^fpf_y = sum_{Psi+} S^fpf_z - sum_{Psi-} S^fpf_z,
    // with S^fpf of anything outside F_infinity read as 0.
    Poly lhs = (Poly::var(p) + Poly::var(q)) * fpf_schubert(y);
    Poly rhs;
    for (const auto& z : plus)
        if (z.offset() >= 0) rhs += fpf_schubert(z);
    for (const auto& z : minus)
        if (z.offset() >= 0) rhs -= fpf_schubert(z);
    rep.poly_identity = (lhs == rhs);

    // Series identity: compare exact Schur-P expansions of both sides; the
    // P_lambda truncations at N >= degree are independent, so this is the
    // same as comparing truncations term by term.
    SymExpansion sum_plus, sum_minus;
    sum_plus.basis = sum_minus.basis = Basis::schurP;
    for (const auto& z : plus)
        for (auto& [lam, c] : expand_fpf_stanley(z).coeffs) sum_plus.add(lam, c);
    for (const auto& z : minus)
        for (auto& [lam, c] : expand_fpf_stanley(z).coeffs) sum_minus.add(lam, c);
    rep.series_identity = (sum_plus.coeffs == sum_minus.coeffs);

    long d = ell_fpf(y) + 1;
    if (d <= kSeriesLiteralDegreeLimit) {
        int N = static_cast<int>(d);
        Poly a, b;
        for (const auto& z : plus) a += fpf_stanley_trunc(z.to_positive(), N);
        for (const auto& z : minus) b += fpf_stanley_trunc(z.to_positive(), N);
        rep.series_literal = true;
        rep.series_identity = rep.series_identity && (a == b);
    }
    return rep;
}

// ---------------------------------------------------------------------------
// verification: dominance triangularity
// ---------------------------------------------------------------------------

struct TriangularityReport {
    Partition nu;
    bool nu_strict = false;
    bool lead_coeff_one = false;
    bool others_below = false;       // every other key < nu in dominance
    bool transpose_leq = false;      // nu^T <= nu
    bool self_transpose = false;
    bool schur_single_checked = false;
    bool schur_single_ok = true;     // F = s_nu when nu^T = nu
    SymExpansion expansion;

    bool pass() const {
        return nu_strict && lead_coeff_one && others_below && transpose_leq &&
               (!schur_single_checked || schur_single_ok);
    }
};

inline TriangularityReport triangularity_report(const FpfInvolution& z) {
    TriangularityReport r;
    FpfInvolution zp = z.to_positive();
    r.nu = nu_shape(zp);
    r.nu_strict = r.nu.is_strict();
    r.expansion = expand_fpf_stanley(zp);
    r.lead_coeff_one = (r.expansion.coeffs.count(r.nu) &&
                        r.expansion.coeffs.at(r.nu) == 1);
    r.others_below = true;
    for (auto& [lam, c] : r.expansion.coeffs)
        if (lam != r.nu && !dominance_lt(lam, r.nu)) r.others_below = false;
    Partition nt = r.nu.transpose();
    r.transpose_leq = dominance_leq(nt, r.nu) || r.nu.empty();
    r.self_transpose = (nt == r.nu);
    if (r.self_transpose && !r.nu.empty()) {
        // F = s_nu exactly.  All Schur supports involved have at most
        // max(len(nu), max leaf part-1 count) parts, so that many variables
        // decide equality.
        int N = static_cast<int>(r.nu.num_parts());
        for (auto& [lam, c] : r.expansion.coeffs)
            N = std::max(N, lam.empty() ? 1 : lam.parts()[0]);
        Poly f = synthesize(r.expansion, N);
        r.schur_single_checked = true;
        r.schur_single_ok = (f == schur_poly(r.nu, N));
    }
    return r;
}

// ---------------------------------------------------------------------------
// DOT rendering of the tree
// ---------------------------------------------------------------------------

inline std::string tree_to_dot(const LSTree& t) {
    std::ostringstream os;
    os << "digraph lstree {\n  node [shape=box, fontname=\"monospace\"];\n";
    for (std::size_t k = 0; k < t.nodes.size(); ++k) {
        os << "  n" << k << " [label=\"" << cycle_notation(t.nodes[k].z) << "\"";
        if (t.nodes[k].grassmannian)
            os << ", color=blue, xlabel=\"" << t.nodes[k].shape.to_string() << "\"";
        os << "];\n";
    }
    for (std::size_t k = 0; k < t.nodes.size(); ++k)
        for (int c : t.nodes[k].children) os << "  n" << k << " -> n" << c << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace fpf
