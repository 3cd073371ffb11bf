#include "doctest.h"
#include "qcrystal/fpf.hpp"
#include "qcrystal/words.hpp"

using namespace qcrystal;

TEST_CASE("three-letter moves") {
    CHECK(ck_neighbors({1, 3, 2}) == std::set<Word>{{3, 1, 2}});
    CHECK(ck_neighbors({}).empty());
    // braid on the last three letters of 26434
    CHECK(ck_neighbors({2, 6, 4, 3, 4}).count({2, 6, 3, 4, 3}) == 1);
    // moves are involutive: each neighbour lists the original among its own
    const Word w{2, 6, 4, 3, 4};
    for (const Word& v : ck_neighbors(w)) CHECK(ck_neighbors(v).count(w) == 1);
}

TEST_CASE("commutations, braids and the leading flip") {
    CHECK(sp_neighbors({2, 1, 4, 3}).count({2, 3, 4, 3}) == 1);  // 21.. ~ 23..
    CHECK(sp_neighbors({2, 3, 4, 3}).count({2, 1, 4, 3}) == 1);
    CHECK(sp_neighbors({2, 4, 1}) == std::set<Word>{{2, 1, 4}, {4, 2, 1}});
    // the flip never drops the second letter below 1
    CHECK(sp_neighbors({1, 2}).empty());
}

TEST_CASE("equivalence queries") {
    CHECK(sp_equivalent({2, 6, 4, 3, 4}, {4, 2, 3, 4, 6}));
    CHECK(sp_equivalent({2, 1, 4, 3}, {2, 1, 4, 3}));
    CHECK(sp_equivalent({2, 1, 4, 3}, {2, 3, 4, 3}));
    CHECK(word_to_involution({2, 1, 4, 3}) == word_to_involution({2, 3, 4, 3}));
    CHECK_FALSE(sp_equivalent({2, 1, 4, 3}, {2, 1}));
    CHECK(ck_equivalent({1, 3, 2}, {3, 1, 2}));
    CHECK(o_equivalent({1, 3, 2}, {3, 1, 2}));
}

TEST_CASE("orthogonal relations swap the first two letters") {
    CHECK(o_neighbors({1, 3, 2}).count({3, 1, 2}) == 1);
    CHECK(o_neighbors({1, 1}).empty());  // equal letters do not swap
}

TEST_CASE("word parsing") {
    CHECK(parse_word("6 2 4 1") == Word{6, 2, 4, 1});
    CHECK(parse_word("6241") == Word{6, 2, 4, 1});
    CHECK(parse_word("10 12") == Word{10, 12});
    CHECK(word_to_string({6, 2, 4, 1}) == "6 2 4 1");
    CHECK_THROWS_AS(parse_word("2 0 1"), std::invalid_argument);
}
