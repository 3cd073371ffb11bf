#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "qcrystal/fpf.hpp"
#include "qcrystal/tableaux.hpp"

namespace qcrystal {

// Raised by the word-level insertions on input that is not a (FPF-)involution
// word; carries the 1-based position of the offending letter.
struct InvalidWordError : std::runtime_error {
    int position;
    InvalidWordError(int pos, const std::string& what)
        : std::runtime_error(what + " at position " + std::to_string(pos)), position(pos) {}
};

// Raised by the reverse insertions on a (P, Q) pair outside the forward image.
struct NotInImageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InsertionOutcome {
    IncreasingShiftedTableau tableau;
    int terminal_row = 0;
    int terminal_col = 0;
    bool column_terminal = false;  // true: the box was created by a column insertion
};

struct InsertionPair {
    IncreasingShiftedTableau insertion;  // P
    PrimedTableau recording;             // Q
};

// One letter of the symplectic insertion. Validity of the input word is
// checked post hoc: nullopt means the bumping ran into a structurally
// impossible placement, which only happens when row_reading_word(t)·a is not
// an FPF-involution word.
std::optional<InsertionOutcome> insert_letter_sp(const IncreasingShiftedTableau& t, Letter a);

// Orthogonal variant: no parity rule; an equal entry met on the main diagonal
// sends the carried successor into column insertion.
std::optional<InsertionOutcome> insert_letter_o(const IncreasingShiftedTableau& t, Letter a);

// Insert a whole word from the empty tableau. Recording entry at step k is k,
// primed iff the step was column-terminal. Throws InvalidWordError.
InsertionPair insert_word_sp(const Word& w);
InsertionPair insert_word_o(const Word& w);

// Inverse of insert_word_sp: extracts the letters of w from (P, Q).
// Q must be standard and of the same shape as P. Throws NotInImageError.
Word reverse_insert_sp(const IncreasingShiftedTableau& p, const PrimedTableau& q);

// Semistandard level: P as for the concatenated word, recording entries
// relabelled by block index (primes kept).
InsertionPair insert_factorization_sp(const Factorization& f);
InsertionPair insert_factorization_o(const Factorization& f);

// Inverse of insert_factorization_sp: standardizes Q, reverses, and re-cuts
// the word into m blocks by the original Q values.
Factorization reverse_factorization_sp(const IncreasingShiftedTableau& p, const PrimedTableau& q,
                                       int m);

}  // namespace qcrystal
