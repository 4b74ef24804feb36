#include "doctest.h"

#include "klrw/word.hpp"

using namespace klrw;

TEST_CASE("totalization") {
    Word w({{3, 1}, {2, 2}, {3, 1}, {1, 1}, {3, 1}});
    CHECK(w.str() == "3,2^2,3,1,3");
    CHECK(w.totalization() == Word::total({3, 2, 2, 3, 1, 3}));
    Word t = Word::total({1, 2});
    CHECK(t.totalization() == t);
    CHECK(Word({{1, 3}}).totalization() == Word::total({1, 1, 1}));
}

TEST_CASE("word parsing round-trips") {
    for (const char* s : {"3,2^2,3,1,3", "2,1", "1^3", "2"}) {
        CHECK(Word::parse(s).str() == s);
    }
    CHECK_THROWS(Word::parse(""));
    CHECK_THROWS(Word::parse("1,,2"));
    CHECK_THROWS(Word::parse("a"));
}

TEST_CASE("violating words") {
    CHECK_FALSE(is_violating(Word::total({2, 1}), 2));
    CHECK(is_violating(Word::total({1, 2}), 2));
    CHECK_FALSE(is_violating(Word({{2, 2}, {1, 1}}), 2));
}

TEST_CASE("chi-parabolic words") {
    Problem grouped(2, 2, {1}, {0, 0});
    CHECK(is_chi_parabolic(Word({{2, 2}, {1, 1}}), grouped));
    CHECK_FALSE(is_chi_parabolic(Word::total({2, 1, 2}), grouped));
    Problem distinct(2, 2, {1}, {0, 1});
    CHECK(is_chi_parabolic(Word::total({2, 1, 2}), distinct));
}

TEST_CASE("enumerate chi-parabolic words") {
    Problem p1(2, 1, {0}, {0});
    auto w1 = enumerate_chi_parabolic_words(p1);
    REQUIRE(w1.size() == 1);
    CHECK(w1[0] == Word::total({2}));

    Problem p2(2, 1, {1}, {0});
    auto w2 = enumerate_chi_parabolic_words(p2);
    REQUIRE(w2.size() == 2);
    CHECK(w2[0] == Word::total({1, 2}));
    CHECK(w2[1] == Word::total({2, 1}));

    Problem p3(2, 2, {1}, {0, 0});
    auto w3 = enumerate_chi_parabolic_words(p3);
    REQUIRE(w3.size() == 2); // reds grouped: (1,2,2) and (2,2,1)
    CHECK(w3[0] == Word::total({1, 2, 2}));
    CHECK(w3[1] == Word::total({2, 2, 1}));
}

TEST_CASE("problem validation") {
    CHECK_THROWS(Problem(2, 2, {1}, {1, 0})); // chi not sorted
    CHECK_THROWS(Problem(2, 1, {}, {0}));     // v must have m-1 entries
    CHECK(Problem(3, 1, {2, 1}, {5}).total_strands() == 4);
    CHECK(Problem(2, 3, {0}, {0, 0, 1}).chi_block_sizes() == std::vector<int>{2, 1});
}
