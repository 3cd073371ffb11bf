#pragma once

#include <cstdint>
#include <functional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace qcrystal {

// A word is a finite sequence of positive letters, letter i standing for the
// simple transposition s_i.
using Letter = int;
using Word = std::vector<Letter>;

std::string word_to_string(const Word& w);
Word parse_word(const std::string& s);  // "6 2 4 1", "6,2,4,1" or compact "6241"

struct WordHash {
    std::size_t operator()(const Word& w) const noexcept {
        std::size_t h = 0x9e3779b97f4a7c15ull;
        for (Letter x : w) h = h * 1099511628211ull + static_cast<std::size_t>(x);
        return h;
    }
};

// One-step neighbours under the Coxeter-Knuth relations on three consecutive
// letters: (a+1)a(a+1) ~ a(a+1)a, bac ~ bca, acb ~ cab with a < b < c.
std::set<Word> ck_neighbors(const Word& w);

// One-step neighbours under the symplectic relations: commutations ab ~ ba
// (|a-b| > 1) and braids a(a+1)a ~ (a+1)a(a+1) anywhere, plus the flip of the
// second letter i1(i1-1)... ~ i1(i1+1)... at the front of the word (i1 >= 2).
std::set<Word> sp_neighbors(const Word& w);

// Orthogonal relations: commutations and braids anywhere, plus swapping the
// first two letters.
std::set<Word> o_neighbors(const Word& w);

// Full closure of w under a neighbour map. Throws std::runtime_error if the
// class exceeds `cap` words (guards against pathological inputs).
std::set<Word> word_closure(const Word& w, std::set<Word> (*neighbors)(const Word&),
                            std::size_t cap = 1u << 22);

// Equivalence tests via memoized canonical representatives (lexicographically
// least word of the closure). The caches are internally synchronized.
bool ck_equivalent(const Word& a, const Word& b);
bool sp_equivalent(const Word& a, const Word& b);
bool o_equivalent(const Word& a, const Word& b);

}  // namespace qcrystal
