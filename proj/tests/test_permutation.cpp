#include <catch2/catch_amalgamated.hpp>

#include "fpf/fpf.hpp"
#include "oracles.hpp"

using namespace fpf;

TEST_CASE("stats of small permutations", "[permutation]") {
    CHECK(perm_stats(Permutation{}).length == 0);
    CHECK(perm_stats(Permutation{}).des_right.empty());

    Permutation w4321 = parse_permutation("4321");
    auto s = perm_stats(w4321);
    CHECK(s.length == 6);
    CHECK(s.des_right == std::set<int>{1, 2, 3});

    Permutation w = parse_permutation("1342");
    auto t = perm_stats(w);
    CHECK(t.length == oracle::brute_length(w));
    CHECK(t.length == 2);
    CHECK(t.des_right == std::set<int>{3});
    CHECK(perm_stats(w.inverse()).length == t.length);
}

TEST_CASE("composition, inverse and windows", "[permutation]") {
    Permutation a = parse_permutation("312");
    Permutation b = parse_permutation("1342");
    CHECK((a * a.inverse()).is_identity());
    CHECK((a * b)(1) == a(b(1)));
    CHECK(Permutation::simple(3)(3) == 4);
    CHECK(Permutation::simple(-2)(-2) == -1);
    CHECK(parse_permutation("(1,4)(2,3)") == parse_permutation("4321"));
    CHECK_THROWS_AS(Permutation::from_one_line({1, 3}, 1), std::invalid_argument);
}

TEST_CASE("reduced words: base cases", "[permutation]") {
    std::vector<std::vector<int>> words;
    for_each_reduced_word(Permutation{}, [&](const std::vector<int>& w) { words.push_back(w); });
    CHECK(words == std::vector<std::vector<int>>{{}});

    words.clear();
    for_each_reduced_word(parse_permutation("312"),
                          [&](const std::vector<int>& w) { words.push_back(w); });
    CHECK(words == std::vector<std::vector<int>>{{2, 1}});
    CHECK(oracle::brute_reduced_words(parse_permutation("312"), 2) ==
          std::vector<std::vector<int>>{{2, 1}});
}

TEST_CASE("reduced words multiply back and count correctly on S4", "[permutation]") {
    std::vector<int> line{1, 2, 3, 4};
    ReducedWordCounter counter;
    do {
        Permutation w = Permutation::from_one_line(line, 1);
        long len = w.length();
        BigInt n = 0;
        std::vector<int> prev;
        bool first = true;
        for_each_reduced_word(w, [&](const std::vector<int>& word) {
            ++n;
            REQUIRE(static_cast<long>(word.size()) == len);
            Permutation prod;
            for (int i : word) prod = prod * Permutation::simple(i);
            REQUIRE(prod == w);
            if (!first) REQUIRE(prev < word);  // lexicographic streaming order
            prev = word;
            first = false;
        });
        CHECK(n == counter.count(w));
    } while (std::next_permutation(line.begin(), line.end()));
}

TEST_CASE("count DP matches iterator cardinality on S5", "[permutation]") {
    std::vector<int> line{1, 2, 3, 4, 5};
    ReducedWordCounter counter;
    do {
        Permutation w = Permutation::from_one_line(line, 1);
        long n = 0;
        for_each_reduced_word(w, [&](const std::vector<int>&) { ++n; });
        REQUIRE(counter.count(w) == n);
    } while (std::next_permutation(line.begin(), line.end()));
}

TEST_CASE("reverse permutation counts match the staircase tableau product", "[permutation]") {
    ReducedWordCounter counter;
    for (int n = 2; n <= 6; ++n) {
        std::vector<int> line(n);
        for (int i = 0; i < n; ++i) line[i] = n - i;
        CHECK(counter.count(Permutation::from_one_line(line, 1)) == oracle::stanley_rn(n));
    }
    CHECK(oracle::stanley_rn(4) == 16);
}

TEST_CASE("diagram, code and shape", "[permutation]") {
    auto d0 = diagram_code_shape(Permutation{});
    CHECK(d0.diagram.empty());
    CHECK(d0.code.empty());
    CHECK(d0.shape.empty());

    // frozen from the Rothe-diagram oracle: D(1342) = {(2,2),(3,2)}
    auto d = diagram_code_shape(parse_permutation("1342"));
    CHECK(d.diagram == std::set<std::pair<int, int>>{{2, 2}, {3, 2}});
    CHECK(d.code == std::vector<int>{0, 1, 1});
    CHECK(d.shape == std::vector<int>{1, 1});
}

TEST_CASE("code/shape properties on S5", "[permutation]") {
    std::vector<int> line{1, 2, 3, 4, 5};
    do {
        Permutation w = Permutation::from_one_line(line, 1);
        auto d = diagram_code_shape(w);
        REQUIRE(static_cast<long>(d.diagram.size()) == w.length());
        long sum = 0;
        for (int c : d.code) sum += c;
        REQUIRE(sum == w.length());
        auto sorted = d.code;
        std::sort(sorted.begin(), sorted.end(), std::greater<int>());
        while (!sorted.empty() && sorted.back() == 0) sorted.pop_back();
        REQUIRE(sorted == d.shape);
    } while (std::next_permutation(line.begin(), line.end()));
}

TEST_CASE("shift-normalized word counting shares cache entries", "[permutation]") {
    ReducedWordCounter counter;
    Permutation w = parse_permutation("321");
    BigInt a = counter.count(w);
    std::size_t entries = counter.cache_size();
    // same pattern shifted right: no new cache entries needed
    Permutation ws = Permutation::from_one_line({7, 6, 5}, 5);
    CHECK(counter.count(ws) == a);
    CHECK(counter.cache_size() == entries);
}
