#include <set>

#include "doctest.h"
#include "qcrystal/fpf.hpp"

using namespace qcrystal;

TEST_CASE("theta") {
    CHECK(FpfInvolution::theta(4).one_line() == std::vector<int>{2, 1, 4, 3});
    CHECK(FpfInvolution::theta(2).one_line() == std::vector<int>{2, 1});
    CHECK_THROWS_AS(FpfInvolution::theta(5), std::invalid_argument);
    CHECK_THROWS_AS(FpfInvolution::theta(0), std::invalid_argument);
    const FpfInvolution t = FpfInvolution::theta(6);
    for (int i = 1; i <= 8; ++i) CHECK(t(t(i)) == i);
}

TEST_CASE("from_oneline") {
    const FpfInvolution z = FpfInvolution::from_oneline({5, 4, 6, 2, 1, 3});
    CHECK(z(1) == 5);
    CHECK(z(7) == 8);  // theta beyond the window
    CHECK(FpfInvolution::from_oneline({2, 1}) == FpfInvolution::theta(2));
    CHECK_THROWS_AS(FpfInvolution::from_oneline({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(FpfInvolution::from_oneline({2, 3, 1, 4}), std::invalid_argument);
    CHECK_THROWS_AS(FpfInvolution::from_oneline({2, 1, 4}), std::invalid_argument);
}

TEST_CASE("window equality") {
    CHECK(FpfInvolution::theta(6) == FpfInvolution::theta(2));
    const FpfInvolution a = FpfInvolution::from_oneline({3, 4, 1, 2});
    const FpfInvolution b = FpfInvolution::from_oneline({3, 4, 1, 2, 6, 5});
    CHECK(a == b);
    CHECK(b.normalized().window() == 4);
}

TEST_CASE("single ascent steps") {
    const FpfInvolution t4 = FpfInvolution::theta(4);
    CHECK(t4.apply_letter(2).one_line() == std::vector<int>{3, 4, 1, 2});
    CHECK_THROWS_AS(t4.apply_letter(1), DescentError);
    CHECK_FALSE(t4.try_apply_letter(1).has_value());
    // the window grows on demand
    CHECK(FpfInvolution::theta(2).apply_letter(4).window() >= 6);
}

TEST_CASE("folding words") {
    CHECK(word_to_involution({}) == FpfInvolution::theta(2));
    CHECK(word_to_involution({6, 2, 4, 1}) ==
          FpfInvolution::from_oneline({5, 3, 2, 7, 1, 8, 4, 6}));
    CHECK(word_to_involution({2, 1, 4, 3}) == FpfInvolution::from_oneline({5, 4, 6, 2, 1, 3}));
    try {
        word_to_involution({2, 2});
        CHECK(false);
    } catch (const DescentError& e) {
        CHECK(e.position == 2);
    }
    CHECK(is_fpf_involution_word({6, 2, 4, 1}));
    CHECK_FALSE(is_fpf_involution_word({1, 1}));
    CHECK(is_fpf_involution_word({2, 1, 4, 3}));
    CHECK_FALSE(is_fpf_involution_word({1}));  // words start with an even letter
}

TEST_CASE("word enumeration") {
    const FpfInvolution z = FpfInvolution::from_oneline({5, 4, 6, 2, 1, 3});
    const std::vector<Word> words = enumerate_words(z);
    const std::vector<Word> expected = {{2, 1, 4, 3}, {2, 3, 4, 3}, {2, 4, 1, 3}, {2, 4, 3, 1},
                                        {2, 4, 3, 4}, {4, 2, 1, 3}, {4, 2, 3, 1}, {4, 2, 3, 4}};
    CHECK(words == expected);
    CHECK(enumerate_words(FpfInvolution::theta(2)) == std::vector<Word>{Word{}});
    CHECK(enumerate_words(FpfInvolution::theta(6).apply_letter(2)) == std::vector<Word>{Word{2}});
}

TEST_CASE("word enumeration invariants at small windows") {
    for (const FpfInvolution& z : all_fpf_involutions(6)) {
        const std::vector<Word> words = enumerate_words(z);
        REQUIRE(!words.empty());
        const std::size_t len = words.front().size();
        for (const Word& w : words) {
            CHECK(w.size() == len);
            if (!w.empty()) CHECK(w.front() % 2 == 0);
            CHECK(word_to_involution(w) == z);
        }
    }
}

TEST_CASE("ascent steps stay involutive and fixed-point-free") {
    for (const FpfInvolution& z : all_fpf_involutions(6)) {
        for (int u = 1; u <= z.window() + 1; ++u) {
            const auto next = z.try_apply_letter(u);
            if (!next) continue;
            for (int i = 1; i <= next->window(); ++i) {
                CHECK((*next)((*next)(i)) == i);
                CHECK((*next)(i) != i);
            }
        }
    }
}

TEST_CASE("factorizations") {
    CHECK(parse_factorization("(24)(13)()").to_string() == "(24)(13)()");
    CHECK(parse_factorization("(2)(14)(3)").word() == Word{2, 1, 4, 3});
    CHECK(parse_factorization("(24) (13) ()").to_string() == "(24)(13)()");
    CHECK(parse_factorization("(10 12)(11)").to_string() == "(10 12)(11)");
    CHECK(parse_factorization("(10 12)(11)").word() == Word{10, 12, 11});
    // singleton blocks of wide letters keep an explicit separator
    const Factorization wide(std::vector<Word>{Word{12}});
    CHECK(wide.to_string() == "(12 )");
    CHECK(parse_factorization(wide.to_string()) == wide);
    CHECK(parse_factorization("(10,12)(11)") == parse_factorization("(10 12)(11)"));
    CHECK_THROWS_AS(parse_factorization("(21)(3)"), std::invalid_argument);
    CHECK_THROWS_AS(parse_factorization("24)(13"), std::invalid_argument);
    CHECK_THROWS_AS(parse_factorization(""), std::invalid_argument);

    const FpfInvolution z = FpfInvolution::from_oneline({5, 4, 6, 2, 1, 3});
    CHECK(enumerate_factorizations(z, 3).size() == 24);
    CHECK(enumerate_factorizations(z, 2).size() == 4);
    CHECK(enumerate_factorizations(FpfInvolution::theta(2), 3) ==
          std::vector<Factorization>{parse_factorization("()()()")});
    CHECK(increasing_cuts({2, 1, 4, 3}, 3) ==
          std::vector<Factorization>{parse_factorization("(2)(14)(3)")});
}

TEST_CASE("all involutions at a window") {
    CHECK(all_fpf_involutions(2).size() == 1);
    CHECK(all_fpf_involutions(4).size() == 3);
    CHECK(all_fpf_involutions(6).size() == 15);
}
