#include "qcrystal/insertion.hpp"

#include <algorithm>

#include "qcrystal/orthogonal.hpp"
#include "qcrystal/tableaux.hpp"

namespace qcrystal {

namespace {

struct ColumnCell {
    int row;
    int value;
};

// Cells of column j, top to bottom.
std::vector<ColumnCell> column_cells(const std::vector<std::vector<int>>& rows, int j) {
    std::vector<ColumnCell> out;
    for (int i = 1; i <= static_cast<int>(rows.size()); ++i) {
        const int k = j - i;
        if (k >= 0 && k < static_cast<int>(rows[static_cast<std::size_t>(i - 1)].size()))
            out.push_back({i, rows[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(k)]});
    }
    return out;
}

// The bumping loop shared by the symplectic and orthogonal variants.
std::optional<InsertionOutcome> insert_letter_impl(const IncreasingShiftedTableau& t, Letter a,
                                                   bool parity_rule) {
    auto rows = t.rows();
    bool in_row = true;
    int idx = 1;  // current row when in_row, current column otherwise
    int cur = a;
    for (;;) {
        if (in_row) {
            const int i = idx;
            if (i > static_cast<int>(rows.size()) + 1) return std::nullopt;
            if (i == static_cast<int>(rows.size()) + 1) rows.emplace_back();
            auto& row = rows[static_cast<std::size_t>(i - 1)];
            std::size_t pos = 0;
            while (pos < row.size() && row[pos] < cur) ++pos;
            if (pos == row.size()) {  // nothing >= cur: append, done
                row.push_back(cur);
                if (row.size() == 1 && i > 1 &&
                    static_cast<int>(rows[static_cast<std::size_t>(i - 2)].size()) < 2)
                    return std::nullopt;  // new row would stick out of the staircase
                InsertionOutcome out{IncreasingShiftedTableau(std::move(rows)), i,
                                     i - 1 + static_cast<int>(row.size()), false};
                return out;
            }
            const int b = row[pos];
            if (b == cur) {
                // equal entry: pass the successor along
                if (!parity_rule && pos == 0) {
                    cur = cur + 1;
                    in_row = false;
                    idx = i + 1;  // diagonal hit switches to columns in the orthogonal variant
                } else {
                    cur = cur + 1;
                    idx = i + 1;
                }
            } else if (parity_rule && pos == 0 && (cur - b) % 2 != 0) {
                // odd-parity meeting with the diagonal: skip the row, carry cur+2 rightwards
                cur = cur + 2;
                in_row = false;
                idx = i + 1;
            } else {
                row[pos] = cur;
                if (pos + 1 < row.size() && row[pos + 1] <= cur) return std::nullopt;
                cur = b;
                if (pos == 0) {  // bumped the diagonal: continue in columns
                    in_row = false;
                    idx = i + 1;
                } else {
                    idx = i + 1;
                }
            }
        } else {
            const int j = idx;
            auto cells = column_cells(rows, j);
            std::size_t pos = 0;
            while (pos < cells.size() && cells[pos].value < cur) ++pos;
            if (pos == cells.size()) {  // append at the end of the column
                if (cells.empty()) {
                    if (static_cast<int>(rows[0].size()) != j - 1) return std::nullopt;
                    rows[0].push_back(cur);
                    InsertionOutcome out{IncreasingShiftedTableau(std::move(rows)), 1, j, true};
                    return out;
                }
                const int last_row = cells.back().row;
                if (last_row + 1 > static_cast<int>(rows.size())) {
                    if (j != last_row + 1) return std::nullopt;
                    rows.push_back({cur});
                    InsertionOutcome out{IncreasingShiftedTableau(std::move(rows)), last_row + 1, j,
                                         true};
                    return out;
                }
                auto& below = rows[static_cast<std::size_t>(last_row)];
                if (static_cast<int>(below.size()) != j - (last_row + 1)) return std::nullopt;
                below.push_back(cur);
                InsertionOutcome out{IncreasingShiftedTableau(std::move(rows)), last_row + 1, j, true};
                return out;
            }
            const int b = cells[pos].value;
            if (b == cur) {
                cur = cur + 1;
                idx = j + 1;
            } else {
                rows[static_cast<std::size_t>(cells[pos].row - 1)]
                    [static_cast<std::size_t>(j - cells[pos].row)] = cur;
                cur = b;
                idx = j + 1;
            }
        }
    }
}

InsertionPair insert_word_impl(const Word& w, bool parity_rule) {
    // validate the word first so errors carry the exact failing position
    if (parity_rule) {
        FpfInvolution z = FpfInvolution::theta(2);
        for (std::size_t k = 0; k < w.size(); ++k) {
            auto next = z.try_apply_letter(w[k]);
            if (!next) throw InvalidWordError(static_cast<int>(k) + 1, "not a valid word");
            z = std::move(*next);
        }
    } else {
        Involution z = Involution::identity();
        for (std::size_t k = 0; k < w.size(); ++k) {
            auto next = z.try_apply_letter(w[k]);
            if (!next) throw InvalidWordError(static_cast<int>(k) + 1, "not a valid word");
            z = std::move(*next);
        }
    }
    IncreasingShiftedTableau p;
    std::vector<std::vector<PrimedEntry>> q;
    for (std::size_t k = 0; k < w.size(); ++k) {
        auto step = parity_rule ? insert_letter_sp(p, w[k]) : insert_letter_o(p, w[k]);
        const int pos = static_cast<int>(k) + 1;
        if (!step) throw InvalidWordError(pos, "insertion failed; input is not a valid word");
        if (!step->tableau.validate().empty())
            throw InvalidWordError(pos, "insertion produced an invalid tableau");
        if (step->tableau.cell_count() != p.cell_count() + 1)
            throw InvalidWordError(pos, "insertion did not add exactly one box");
        p = std::move(step->tableau);
        while (static_cast<int>(q.size()) < static_cast<int>(p.rows().size())) q.emplace_back();
        q[static_cast<std::size_t>(step->terminal_row - 1)].push_back(
            PrimedEntry{pos, step->column_terminal});
    }
    InsertionPair out{std::move(p), PrimedTableau(std::move(q))};
    if (!out.recording.validate().empty())
        throw InvalidWordError(static_cast<int>(w.size()), "recording tableau invalid");
    return out;
}

PrimedTableau relabel_by_blocks(const PrimedTableau& q, const Factorization& f) {
    std::vector<int> block_of;  // step (0-based) -> block index (1-based)
    for (int bi = 0; bi < f.block_count(); ++bi)
        for (std::size_t k = 0; k < f.block(bi).size(); ++k) block_of.push_back(bi + 1);
    auto rows = q.rows();
    for (auto& row : rows)
        for (auto& e : row) e = PrimedEntry{block_of[static_cast<std::size_t>(e.value - 1)], e.primed};
    return PrimedTableau(std::move(rows));
}

}  // namespace

std::optional<InsertionOutcome> insert_letter_sp(const IncreasingShiftedTableau& t, Letter a) {
    return insert_letter_impl(t, a, /*parity_rule=*/true);
}

std::optional<InsertionOutcome> insert_letter_o(const IncreasingShiftedTableau& t, Letter a) {
    return insert_letter_impl(t, a, /*parity_rule=*/false);
}

InsertionPair insert_word_sp(const Word& w) { return insert_word_impl(w, true); }
InsertionPair insert_word_o(const Word& w) { return insert_word_impl(w, false); }

InsertionPair insert_factorization_sp(const Factorization& f) {
    InsertionPair pair = insert_word_sp(f.word());
    pair.recording = relabel_by_blocks(pair.recording, f);
    return pair;
}

InsertionPair insert_factorization_o(const Factorization& f) {
    InsertionPair pair = insert_word_o(f.word());
    pair.recording = relabel_by_blocks(pair.recording, f);
    return pair;
}

Word reverse_insert_sp(const IncreasingShiftedTableau& p, const PrimedTableau& q) {
    if (p.shape() != q.shape()) throw NotInImageError("P and Q have different shapes");
    if (!is_standard(q)) throw NotInImageError("recording tableau is not standard");
    if (!p.validate().empty()) throw NotInImageError("insertion tableau invalid");

    auto rows = p.rows();
    auto qrows = q.rows();
    const int steps = p.cell_count();
    Word letters(static_cast<std::size_t>(steps));

    for (int step = steps; step >= 1; --step) {
        int ti = 0, tj = 0;
        bool primed = false;
        for (std::size_t i = 0; i < qrows.size(); ++i)
            for (std::size_t j = 0; j < qrows[i].size(); ++j)
                if (qrows[i][j].value == step) {
                    ti = static_cast<int>(i) + 1;
                    tj = static_cast<int>(i) + 1 + static_cast<int>(j);
                    primed = qrows[i][j].primed;
                }
        // the largest entry must sit at the end of its row (a removable corner)
        auto& prow = rows[static_cast<std::size_t>(ti - 1)];
        if (tj != ti + static_cast<int>(prow.size()) - 1)
            throw NotInImageError("largest recording entry is not at a removable cell");
        int cur = prow.back();
        prow.pop_back();
        qrows[static_cast<std::size_t>(ti - 1)].pop_back();
        if (prow.empty()) rows.pop_back();
        if (qrows[static_cast<std::size_t>(ti - 1)].empty()) qrows.pop_back();

        bool in_row = !primed;
        int idx = primed ? tj - 1 : ti - 1;
        for (;;) {
            if (in_row) {
                if (idx == 0) {
                    letters[static_cast<std::size_t>(step - 1)] = cur;
                    break;
                }
                auto& row = rows[static_cast<std::size_t>(idx - 1)];
                int pos = static_cast<int>(row.size()) - 1;
                while (pos >= 0 && row[static_cast<std::size_t>(pos)] >= cur) --pos;
                if (pos < 0) throw NotInImageError("reverse row insertion found no smaller entry");
                const int x = row[static_cast<std::size_t>(pos)];
                const bool successor_present =
                    pos + 1 < static_cast<int>(row.size()) &&
                    row[static_cast<std::size_t>(pos + 1)] == cur;
                if (successor_present) {
                    cur = x;  // the forward step left the row unchanged
                } else {
                    row[static_cast<std::size_t>(pos)] = cur;
                    cur = x;
                }
                idx -= 1;
            } else {
                const int j = idx;
                if (j == 0) throw NotInImageError("reverse column insertion ran off the tableau");
                auto cells = column_cells(rows, j);
                int pos = static_cast<int>(cells.size()) - 1;
                while (pos >= 0 && cells[static_cast<std::size_t>(pos)].value >= cur) --pos;
                if (pos < 0) throw NotInImageError("reverse column insertion found no smaller entry");
                const int x = cells[static_cast<std::size_t>(pos)].value;
                const int xrow = cells[static_cast<std::size_t>(pos)].row;
                const bool successor_present =
                    pos + 1 < static_cast<int>(cells.size()) &&
                    cells[static_cast<std::size_t>(pos + 1)].value == cur;
                const bool diagonal = (xrow == j);
                if (successor_present) {
                    cur = x;
                    idx = j - 1;
                } else if (diagonal && (x - cur) % 2 != 0) {
                    // undo of the odd-parity rule: the row itself was left unchanged
                    cur = cur - 2;
                    in_row = true;
                    idx = xrow - 1;
                } else if (diagonal) {
                    rows[static_cast<std::size_t>(xrow - 1)][static_cast<std::size_t>(j - xrow)] = cur;
                    cur = x;
                    in_row = true;
                    idx = xrow - 1;
                } else {
                    rows[static_cast<std::size_t>(xrow - 1)][static_cast<std::size_t>(j - xrow)] = cur;
                    cur = x;
                    idx = j - 1;
                }
            }
        }
        IncreasingShiftedTableau check{rows};
        if (!check.validate().empty()) throw NotInImageError("reverse step left an invalid tableau");
    }
    // definitive image test: re-inserting the extracted word must reproduce (P, Q)
    try {
        const InsertionPair again = insert_word_sp(letters);
        if (again.insertion != p || again.recording != q)
            throw NotInImageError("extracted word does not re-insert to the given pair");
    } catch (const InvalidWordError&) {
        throw NotInImageError("extracted letters do not form a valid word");
    }
    return letters;
}

Factorization reverse_factorization_sp(const IncreasingShiftedTableau& p, const PrimedTableau& q,
                                       int m) {
    if (m < 1) throw std::invalid_argument("block count must be >= 1");
    const std::string err = q.validate();
    if (!err.empty()) throw NotInImageError("recording tableau invalid: " + err);
    for (const auto& row : q.rows())
        for (const auto& e : row)
            if (e.value > m) throw NotInImageError("recording entry exceeds block count");

    const PrimedTableau st = standardize(q);
    const Word w = reverse_insert_sp(p, st);

    // standardized entry k sits where the original block label lives
    std::vector<int> block_of(w.size());
    for (std::size_t i = 0; i < st.rows().size(); ++i)
        for (std::size_t j = 0; j < st.rows()[i].size(); ++j)
            block_of[static_cast<std::size_t>(st.rows()[i][j].value - 1)] = q.rows()[i][j].value;

    std::vector<Word> blocks(static_cast<std::size_t>(m));
    for (std::size_t k = 0; k < w.size(); ++k)
        blocks[static_cast<std::size_t>(block_of[k] - 1)].push_back(w[k]);
    try {
        return Factorization(std::move(blocks));
    } catch (const std::invalid_argument&) {
        throw NotInImageError("recovered blocks are not strictly increasing");
    }
}

}  // namespace qcrystal
