#include <catch2/catch_amalgamated.hpp>

#include "fpf/fpf.hpp"
#include "oracles.hpp"

using namespace fpf;

TEST_CASE("beta_min", "[atoms]") {
    CHECK(one_line_string(beta_min(parse_involution("(1,4)(2,3)"))) == "1342");
    CHECK(beta_min(FpfInvolution::theta()).is_identity());
    Permutation s2 = beta_min(parse_involution("(1,3)(2,4)"));
    CHECK(s2 == Permutation::simple(2));
    CHECK(conjugate_theta_by(s2) == parse_involution("(1,3)(2,4)"));
    // length of beta_min is the FPF length
    for_each_fpf(8, [&](const FpfInvolution& z) {
        REQUIRE(beta_min(z).length() == ell_fpf(z));
    });
}

TEST_CASE("atom sets", "[atoms]") {
    AtomSet a = atoms(parse_involution("(1,4)(2,3)"));
    REQUIRE(a.atoms.size() == 2);
    CHECK(one_line_string(a.atoms[0]) == "1342");
    CHECK(one_line_string(a.atoms[1]) == "312");

    CHECK(atoms(FpfInvolution::theta()).atoms == std::vector<Permutation>{Permutation{}});
    CHECK(atoms(parse_involution("(1,3)(2,4)")).atoms.size() == 1);
}

TEST_CASE("closure equals bruteforce through F8", "[atoms]") {
    for (int n : {2, 4, 6, 8})
        for_each_fpf(n, [&](const FpfInvolution& z) {
            REQUIRE(atoms(z, AtomMode::closure).atoms == atoms(z, AtomMode::bruteforce).atoms);
        });
}

TEST_CASE("atom covers increase the shape in dominance", "[atoms]") {
    // walk the closure moves explicitly and compare shapes across each cover
    for (int n : {4, 6, 8})
        for_each_fpf(n, [&](const FpfInvolution& z) {
            auto a = atoms(z);
            for (const Permutation& w : a.atoms) {
                std::vector<int> u;
                for (int i = 1; i <= n; ++i) u.push_back(w.inverse()(i));
                for (int k = 0; k + 3 < static_cast<int>(u.size()); ++k) {
                    if ((1 + k) % 2 == 0) continue;  // odd one-line positions only
                    int aa = u[k], dd = u[k + 1], bb = u[k + 2], cc = u[k + 3];
                    if (aa < bb && bb < cc && cc < dd) {
                        std::vector<int> v(u);
                        v[k] = bb;
                        v[k + 1] = cc;
                        v[k + 2] = aa;
                        v[k + 3] = dd;
                        Permutation higher = Permutation::from_one_line(v, 1).inverse();
                        Partition lo = Partition::sorted_from(shape_of(w));
                        Partition hi = Partition::sorted_from(shape_of(higher));
                        REQUIRE(dominance_lt(lo, hi));
                    }
                }
            }
        });
}

TEST_CASE("visible descents are the right descents of beta_min", "[atoms]") {
    for (int n : {4, 6, 8})
        for_each_fpf(n, [&](const FpfInvolution& z) {
            auto vis = visible_data(z);
            auto des = beta_min(z).right_descents();
            REQUIRE(vis.descents == std::set<int>(des.begin(), des.end()));
        });
}

TEST_CASE("shape of beta_min is the transposed nu", "[atoms]") {
    for (int n : {4, 6, 8})
        for_each_fpf(n, [&](const FpfInvolution& z) {
            Partition shape = Partition::sorted_from(shape_of(beta_min(z)));
            REQUIRE(shape == nu_shape(z).transpose());
        });
}

TEST_CASE("fpf reduced words", "[atoms]") {
    std::vector<std::vector<int>> words;
    for_each_fpf_reduced_word(FpfInvolution::theta(),
                              [&](const std::vector<int>& w) { words.push_back(w); });
    CHECK(words == std::vector<std::vector<int>>{{}});

    words.clear();
    for_each_fpf_reduced_word(parse_involution("(1,4)(2,3)"),
                              [&](const std::vector<int>& w) { words.push_back(w); });
    CHECK(words == std::vector<std::vector<int>>{{2, 3}, {2, 1}});

    ReducedWordCounter counter;
    CHECK(fpf_reduced_word_count(parse_involution("(1,2)(3,4)"), counter) == 1);
    CHECK(fpf_reduced_word_count(reverse_involution(4), counter) == 2);
    CHECK(fpf_reduced_word_count(reverse_involution(6), counter) == 80);
}

TEST_CASE("every word conjugates Theta to z, counts match enumeration", "[atoms]") {
    ReducedWordCounter counter;
    for (int n : {4, 6})
        for_each_fpf(n, [&](const FpfInvolution& z) {
            long seen = 0;
            long lz = ell_fpf(z);
            for_each_fpf_reduced_word(z, [&](const std::vector<int>& word) {
                ++seen;
                REQUIRE(static_cast<long>(word.size()) == lz);
                Permutation w;
                for (int i : word) w = w * Permutation::simple(i);
                REQUIRE(conjugate_theta_by(w) == z);
            });
            REQUIRE(fpf_reduced_word_count(z, counter) == seen);
        });
}
