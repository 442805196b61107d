#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "fpf/fpf.hpp"
#include "oracles.hpp"

using namespace fpf;

TEST_CASE("tiny pfaffians", "[pfaffian]") {
    SkewMatrix<BigInt> A0(0);
    CHECK(pfaffian(A0) == 1);

    SkewMatrix<BigInt> A2(2);
    A2.at(1, 2) = 7;
    CHECK(pfaffian(A2) == 7);
    CHECK(A2.entry(2, 1) == -7);

    SkewMatrix<BigInt> A3(3);
    CHECK_THROWS_AS(pfaffian(A3), std::invalid_argument);

    // pf = a12 a34 - a13 a24 + a14 a23
    SkewMatrix<BigInt> A4(4);
    A4.at(1, 2) = 2;
    A4.at(1, 3) = 3;
    A4.at(1, 4) = 5;
    A4.at(2, 3) = 7;
    A4.at(2, 4) = 11;
    A4.at(3, 4) = 13;
    CHECK(pfaffian(A4) == 2 * 13 - 3 * 11 + 5 * 7);
    CHECK(pfaffian(A4, PfaffianMethod::matching_sum) == pfaffian(A4));
}

TEST_CASE("methods agree and pf^2 = det", "[pfaffian]") {
    std::mt19937 rng(31337);
    for (int n : {2, 4, 6, 8}) {
        SkewMatrix<BigInt> A(n);
        std::vector<std::vector<BigInt>> M(n, std::vector<BigInt>(n, 0));
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                long v = static_cast<long>(rng() % 19) - 9;
                A.at(i, j) = v;
                M[i - 1][j - 1] = v;
                M[j - 1][i - 1] = -v;
            }
        BigInt a = pfaffian(A, PfaffianMethod::matching_sum);
        BigInt b = pfaffian(A, PfaffianMethod::row_expansion);
        REQUIRE(a == b);
        REQUIRE(a * a == oracle::bareiss_det(M));
    }
    // and over the Laurent ring
    for (int n : {4, 6, 8}) {
        SkewMatrix<Poly> A(n);
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                Poly e(static_cast<long>(rng() % 5) - 2);
                if (rng() % 2) e += Poly::var(1 + static_cast<int>(rng() % 3),
                                              1 - static_cast<int>(rng() % 2) * 2);
                A.at(i, j) = e;
            }
        REQUIRE(pfaffian(A, PfaffianMethod::matching_sum) ==
                pfaffian(A, PfaffianMethod::row_expansion));
    }
}

TEST_CASE("worked grassmannian example", "[pfaffian]") {
    // phi = (1,2,3), n = 4: both sides equal prod_{i<j<=4} (x_i + x_j)
    Poly prod = Poly::one();
    for (int i = 1; i <= 4; ++i)
        for (int j = i + 1; j <= 4; ++j) prod *= Poly::var(i) + Poly::var(j);
    CHECK(fpf_schubert_bracket({1, 2, 3}, 4) == prod);
    auto rep = grassmannian_pfaffian_check({1, 2, 3}, 4, PfaffianTarget::schubert);
    CHECK(rep.matches);
    CHECK(rep.matrix_dim == 4);
}

TEST_CASE("r=1 padding means a 1x1 bracket", "[pfaffian]") {
    for (int n = 2; n <= 5; ++n)
        for (int a = 1; a < n; ++a) {
            SkewMatrix<Poly> M(2);
            M.at(1, 2) = fpf_schubert_bracket({a, 0}, n);
            CHECK(pfaffian(M) == fpf_schubert_bracket({a}, n));
        }
}

TEST_CASE("grassmannian identities for all phi with n <= 4", "[pfaffian]") {
    for (int n = 2; n <= 4; ++n)
        for (int mask = 1; mask < (1 << (n - 1)); ++mask) {
            std::vector<int> phi;
            for (int b = 1; b < n; ++b)
                if (mask & (1 << (b - 1))) phi.push_back(b);
            REQUIRE(grassmannian_pfaffian_check(phi, n, PfaffianTarget::schubert).matches);
            REQUIRE(grassmannian_pfaffian_check(phi, n, PfaffianTarget::stanley).matches);
        }
    CHECK_THROWS_AS(grassmannian_pfaffian_check({2, 2}, 4, PfaffianTarget::schubert),
                    std::invalid_argument);
    CHECK_THROWS_AS(grassmannian_pfaffian_check({4}, 4, PfaffianTarget::schubert),
                    std::invalid_argument);
}

namespace {

Poly pf_of_phi(const std::vector<int>& phi, int n) {
    int r = static_cast<int>(phi.size());
    int lp = (r % 2 == 0) ? r : r + 1;
    std::vector<int> ext(phi);
    ext.resize(lp, 0);
    SkewMatrix<Poly> M(lp);
    for (int i = 1; i <= lp; ++i)
        for (int j = i + 1; j <= lp; ++j)
            M.at(i, j) = fpf_schubert_bracket({ext[i - 1], ext[j - 1]}, n);
    return pfaffian(M);
}

}  // namespace

TEST_CASE("divided differences of the bracket pfaffian", "[pfaffian]") {
    // d_p pf M[phi;n] = pf M[phi+e_i;n] for p = phi_i with p+1 not in phi and
    // p <= n-2; at the boundary p = phi_r = n-1 the filler parity decides:
    // zero when n-r is odd, the conjugated Schubert polynomial when even.
    for (int n = 3; n <= 5; ++n)
        for (int mask = 1; mask < (1 << (n - 1)); ++mask) {
            std::vector<int> phi;
            for (int b = 1; b < n; ++b)
                if (mask & (1 << (b - 1))) phi.push_back(b);
            Poly f = pf_of_phi(phi, n);
            for (int p = 1; p < n; ++p) {
                Poly d = divided_difference(f, p);
                bool in_phi = std::find(phi.begin(), phi.end(), p) != phi.end();
                bool succ_in_phi = std::find(phi.begin(), phi.end(), p + 1) != phi.end();
                Poly want;
                if (in_phi && !succ_in_phi) {
                    if (p <= n - 2) {
                        std::vector<int> up(phi);
                        *std::find(up.begin(), up.end(), p) = p + 1;
                        want = pf_of_phi(up, n);
                    } else if ((n - static_cast<int>(phi.size())) % 2 == 0) {
                        FpfInvolution z = grassmannian_involution(phi, n);
                        want = fpf_schubert(z.conjugated(p, p + 1));
                    }
                }
                REQUIRE(d == want);
            }
        }
}

TEST_CASE("least terms of the staircase brackets match", "[pfaffian]") {
    for (int n = 2; n <= 5; ++n)
        for (int r = 1; r < n; ++r) {
            std::vector<int> phi(r);
            for (int i = 0; i < r; ++i) phi[i] = i + 1;
            auto a = pf_of_phi(phi, n).least_term();
            auto b = fpf_schubert_bracket(phi, n).least_term();
            REQUIRE(a.first == b.first);
            REQUIRE(a.second == b.second);
        }
}

TEST_CASE("matrix json serialization", "[pfaffian]") {
    SkewMatrix<Poly> M(2);
    M.at(1, 2) = Poly::var(1) + Poly::var(2);
    Json j = skew_matrix_to_json(M);
    CHECK(j["dim"] == 2);
    CHECK(j["upper"][0][0].get<std::string>() == "x2 + x1");
}
