#include "doctest.h"
#include "qcrystal/insertion.hpp"
#include "qcrystal/verify.hpp"
#include "qcrystal/words.hpp"

using namespace qcrystal;

namespace {

PrimedEntry up(int v) { return PrimedEntry{v, false}; }
PrimedEntry pr(int v) { return PrimedEntry{v, true}; }

}  // namespace

TEST_CASE("single-letter bumping") {
    // worked examples: terminal cell (1,3), created by column insertion
    auto r = insert_letter_sp(IncreasingShiftedTableau({{2, 5}, {6}}), 3);
    REQUIRE(r.has_value());
    CHECK(r->tableau.rows() == std::vector<std::vector<int>>{{2, 3, 7}, {6}});
    CHECK(r->terminal_row == 1);
    CHECK(r->terminal_col == 3);
    CHECK(r->column_terminal);

    r = insert_letter_sp(IncreasingShiftedTableau({{2, 3}, {4}}), 2);
    REQUIRE(r.has_value());
    CHECK(r->tableau.rows() == std::vector<std::vector<int>>{{2, 3, 5}, {4}});
    CHECK(r->terminal_col == 3);
    CHECK(r->column_terminal);

    r = insert_letter_sp(IncreasingShiftedTableau({{4, 5}, {6}}), 2);
    REQUIRE(r.has_value());
    CHECK(r->tableau.rows() == std::vector<std::vector<int>>{{2, 4, 5}, {6}});
    CHECK(r->terminal_col == 3);
    CHECK(r->column_terminal);
}

TEST_CASE("word insertion") {
    const InsertionPair pq = insert_word_sp({6, 2, 4, 1});
    CHECK(pq.insertion.rows() == std::vector<std::vector<int>>{{2, 3, 4}, {6}});
    CHECK(pq.recording == PrimedTableau({{up(1), pr(2), pr(4)}, {up(3)}}));

    CHECK(insert_word_sp({2, 6, 4, 3, 4}).insertion.rows() ==
          std::vector<std::vector<int>>{{2, 3, 4}, {4, 6}});
    CHECK(insert_word_sp({4, 2, 3, 4, 6}).insertion.rows() ==
          std::vector<std::vector<int>>{{2, 3, 4, 6}, {4}});

    // equivalent words, distinct insertion tableaux
    CHECK(sp_equivalent({2, 6, 4, 3, 4}, {4, 2, 3, 4, 6}));
    CHECK(insert_word_sp({2, 6, 4, 3, 4}).insertion != insert_word_sp({4, 2, 3, 4, 6}).insertion);

    CHECK_THROWS_AS(insert_word_sp({1, 1}), InvalidWordError);
    try {
        insert_word_sp({2, 2});
        CHECK(false);
    } catch (const InvalidWordError& e) {
        CHECK(e.position == 2);
    }
}

TEST_CASE("each letter adds one box") {
    IncreasingShiftedTableau t;
    const Word w{2, 6, 4, 3, 4};
    for (std::size_t k = 0; k < w.size(); ++k) {
        auto r = insert_letter_sp(t, w[k]);
        REQUIRE(r.has_value());
        CHECK(r->tableau.cell_count() == static_cast<int>(k) + 1);
        t = r->tableau;
    }
}

TEST_CASE("reverse insertion") {
    const InsertionPair pq = insert_word_sp({6, 2, 4, 1});
    CHECK(reverse_insert_sp(pq.insertion, pq.recording) == Word{6, 2, 4, 1});

    CHECK(reverse_insert_sp(IncreasingShiftedTableau({{2}}), PrimedTableau({{up(1)}})) == Word{2});

    const FpfInvolution z = FpfInvolution::from_oneline({5, 4, 6, 2, 1, 3});
    for (const Word& w : enumerate_words(z)) {
        const InsertionPair p = insert_word_sp(w);
        CHECK(reverse_insert_sp(p.insertion, p.recording) == w);
    }

    // outside the image: a standard Q whose shape mismatches
    CHECK_THROWS_AS(reverse_insert_sp(IncreasingShiftedTableau({{2, 4}}),
                                      PrimedTableau({{up(1)}, {}})),
                    NotInImageError);
    // non-standard recording tableau
    CHECK_THROWS_AS(reverse_insert_sp(IncreasingShiftedTableau({{2, 4}}),
                                      PrimedTableau({{up(1), up(3)}})),
                    NotInImageError);
    // structurally extractable, but the letters do not form a valid word
    CHECK_THROWS_AS(reverse_insert_sp(IncreasingShiftedTableau({{1, 2}}),
                                      PrimedTableau({{up(1), up(2)}})),
                    NotInImageError);
}

TEST_CASE("factorization insertion") {
    const Factorization f = parse_factorization("(6)(24)(1)");
    const InsertionPair pq = insert_factorization_sp(f);
    CHECK(pq.insertion.rows() == std::vector<std::vector<int>>{{2, 3, 4}, {6}});
    CHECK(pq.recording == PrimedTableau({{up(1), pr(2), pr(3)}, {up(2)}}));
    CHECK(reverse_factorization_sp(pq.insertion, pq.recording, 3) == f);

    const Factorization g = parse_factorization("(4)(2)(34)");
    const InsertionPair pq2 = insert_factorization_sp(g);
    CHECK(pq2.insertion == insert_word_sp({4, 2, 3, 4}).insertion);
    CHECK(pq2.recording.validate().empty());
    CHECK(pq2.recording == PrimedTableau({{up(1), pr(2), up(3)}, {up(3)}}));

    // a one-block factorization must be strictly increasing
    CHECK_THROWS_AS(parse_factorization("(6241)"), std::invalid_argument);
    // the all-equal relabelling of the recording tableau of 6241 is not a
    // valid primed tableau (two 1' in the first row)
    const PrimedTableau q1({{up(1), pr(1), pr(1)}, {up(1)}});
    CHECK_FALSE(q1.validate().empty());

    // empty factorization of theta
    const Factorization empty3 = parse_factorization("()()()");
    const InsertionPair pq3 = insert_factorization_sp(empty3);
    CHECK(pq3.insertion.empty());
    CHECK(reverse_factorization_sp(pq3.insertion, pq3.recording, 3) == empty3);
}

TEST_CASE("row word stays equivalent through insertion") {
    const FpfInvolution z = FpfInvolution::from_oneline({5, 4, 6, 2, 1, 3});
    for (const Word& w : enumerate_words(z)) {
        IncreasingShiftedTableau t;
        Word prefix;
        for (Letter a : w) {
            auto r = insert_letter_sp(t, a);
            REQUIRE(r.has_value());
            prefix.push_back(a);
            Word lhs = row_reading_word(r->tableau);
            Word rhs = row_reading_word(t);
            rhs.push_back(a);
            CHECK(sp_equivalent(lhs, rhs));
            t = r->tableau;
        }
    }
}

TEST_CASE("insertion tableau constant across three-letter moves") {
    const FpfInvolution z = FpfInvolution::from_oneline({5, 4, 6, 2, 1, 3});
    for (const Word& w : enumerate_words(z)) {
        const auto p = insert_word_sp(w).insertion;
        for (const Word& v : ck_neighbors(w)) {
            REQUIRE(is_fpf_involution_word(v));
            CHECK(insert_word_sp(v).insertion == p);
        }
    }
}

TEST_CASE("single-box case tables hold for letters up to 12") {
    long checks = 0;
    const auto bad = verify::check_single_box_tables(12, &checks);
    CHECK(bad.empty());
    CHECK(checks > 500);
}

TEST_CASE("round trips across all small windows") {
    long checks = 0;
    CHECK(verify::check_roundtrips(6, {2, 3}, &checks).empty());
}
