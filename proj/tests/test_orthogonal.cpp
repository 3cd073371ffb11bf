#include <map>
#include <set>

#include "doctest.h"
#include "qcrystal/crystal.hpp"
#include "qcrystal/insertion.hpp"
#include "qcrystal/orthogonal.hpp"
#include "qcrystal/verify.hpp"

using namespace qcrystal;

TEST_CASE("orthogonal ascent steps") {
    const Involution id = Involution::identity();
    CHECK(id.apply_letter(1).one_line() == std::vector<int>{2, 1});
    CHECK_THROWS_AS(Involution::from_oneline({2, 1}).apply_letter(1), DescentError);
    try {
        word_to_involution_o({1, 2, 1});
        CHECK(false);
    } catch (const DescentError& e) {
        CHECK(e.position == 3);
    }
    CHECK(word_to_involution_o({2, 4, 3, 2}) == Involution::from_oneline({1, 5, 4, 3, 2}));
    CHECK(is_involution_word({1}));
    CHECK_FALSE(is_involution_word({1, 1}));
}

TEST_CASE("orthogonal word enumeration") {
    CHECK(enumerate_words_o(Involution::identity()) == std::vector<Word>{Word{}});
    CHECK(enumerate_words_o(Involution::from_oneline({3, 2, 1})) ==
          std::vector<Word>{{1, 2}, {2, 1}});
    CHECK(enumerate_words_o(Involution::from_oneline({1, 5, 4, 3, 2})).size() == 8);
    CHECK(all_involutions(4).size() == 10);
    CHECK(all_involutions(5).size() == 26);
}

TEST_CASE("classes are closed and free of equal adjacent letters") {
    for (const Involution& z : all_involutions(4)) {
        const std::vector<Word> words = enumerate_words_o(z);
        const std::set<Word> wordset(words.begin(), words.end());
        if (words.front().empty()) continue;
        CHECK(word_closure(words.front(), &o_neighbors) == wordset);
        for (const Word& w : wordset)
            for (std::size_t i = 0; i + 1 < w.size(); ++i) CHECK(w[i] != w[i + 1]);
    }
}

TEST_CASE("orthogonal single-letter bumping") {
    auto r = insert_letter_o(IncreasingShiftedTableau{}, 1);
    REQUIRE(r.has_value());
    CHECK(r->tableau.rows() == std::vector<std::vector<int>>{{1}});
    CHECK_FALSE(r->column_terminal);

    r = insert_letter_o(IncreasingShiftedTableau({{1}}), 2);
    REQUIRE(r.has_value());
    CHECK(r->tableau.rows() == std::vector<std::vector<int>>{{1, 2}});

    // equal entry on the diagonal: the carried successor moves along columns
    r = insert_letter_o(IncreasingShiftedTableau({{1, 2}}), 1);
    REQUIRE(r.has_value());
    CHECK(r->tableau.rows() == std::vector<std::vector<int>>{{1, 2, 3}});
    CHECK(r->terminal_row == 1);
    CHECK(r->terminal_col == 3);
    CHECK(r->column_terminal);

    // the word that once broke the row-only reading of the rules
    const InsertionPair pq = insert_word_o({2, 4, 3, 2});
    CHECK(pq.insertion.validate().empty());
    CHECK(pq.insertion.rows() == std::vector<std::vector<int>>{{2, 3, 4}, {4}});
}

TEST_CASE("orthogonal insertion pairs") {
    const InsertionPair empty = insert_word_o({});
    CHECK(empty.insertion.empty());
    CHECK(empty.recording.empty());

    // injectivity across every involution word at window 4
    std::map<std::pair<std::string, std::string>, Word> seen;
    for (const Involution& z : all_involutions(4)) {
        for (const Word& w : enumerate_words_o(z)) {
            const InsertionPair pq = insert_word_o(w);
            CHECK(pq.recording.validate().empty());
            CHECK(is_standard(pq.recording));
            auto key = std::make_pair(pq.insertion.to_json(), pq.recording.to_json());
            auto [it, fresh] = seen.emplace(key, w);
            CHECK(fresh);
        }
    }
}

TEST_CASE("orthogonal odd operators") {
    const Factorization f = parse_factorization("(13)(2)");
    CHECK(f_odd_o(f) == parse_factorization("(3)(12)"));
    CHECK_FALSE(f_odd_o(parse_factorization("()(12)")).has_value());
    CHECK(e_odd_o(parse_factorization("(3)(12)")) == f);
    CHECK_FALSE(e_odd_o(parse_factorization("(13)()")).has_value());

    // adjunction across an enumerated graph
    FactorizationCrystal c(Involution::from_oneline({3, 2, 1}), 3);
    for (int v = 0; v < c.size(); ++v) {
        if (auto w = c.apply_f_odd(v)) CHECK(c.apply_e_odd(*w) == std::optional<int>(v));
        if (auto w = c.apply_e_odd(v)) CHECK(c.apply_f_odd(*w) == std::optional<int>(v));
    }
}

TEST_CASE("orthogonal crystal graphs") {
    const CrystalGraph id = build_graph_o(Involution::identity(), 3);
    CHECK(id.vertices == std::vector<std::string>{"()()()"});
    CHECK(id.edges.empty());

    for (const Involution& z : all_involutions(4)) {
        for (int m : {2, 3}) {
            FactorizationCrystal c(z, m);
            CHECK(verify_gl_axioms(c).empty());
            CHECK(verify_q_axioms(c).empty());
            for (const auto& comp : gl_components(c)) {
                const auto p0 = insert_word_o(c.vertex(comp.front()).word()).insertion;
                for (int v : comp) CHECK(insert_word_o(c.vertex(v).word()).insertion == p0);
            }
        }
    }
}

TEST_CASE("brute-force agreement on small windows") {
    long checks = 0;
    CHECK(verify::check_bruteforce_agreement_o(4, &checks).empty());
    CHECK(verify::check_bruteforce_agreement_sp(4, &checks).empty());
}
