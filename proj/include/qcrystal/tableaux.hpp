#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qcrystal/words.hpp"

namespace qcrystal {

// Shifted shapes are carried implicitly by the row lists: row i (1-based)
// occupies columns i .. i + lambda_i - 1, so rows strictly shorten by at
// least one cell going down.

// Strictly increasing filling of a shifted shape.
class IncreasingShiftedTableau {
  public:
    IncreasingShiftedTableau() = default;
    explicit IncreasingShiftedTableau(std::vector<std::vector<int>> rows)
        : rows_(std::move(rows)) {}
    IncreasingShiftedTableau(std::initializer_list<std::vector<int>> rows) : rows_(rows) {}

    const std::vector<std::vector<int>>& rows() const { return rows_; }
    std::vector<std::vector<int>>& rows() { return rows_; }
    std::vector<int> shape() const;
    int cell_count() const;
    bool empty() const { return rows_.empty(); }

    // Entry at 1-based (row, col); nullopt if the cell is outside the shape.
    std::optional<int> cell(int row, int col) const;
    void set_cell(int row, int col, int value);

    // Empty string when valid, otherwise a description of the first violation.
    std::string validate() const;

    bool operator==(const IncreasingShiftedTableau& o) const { return rows_ == o.rows_; }
    bool operator!=(const IncreasingShiftedTableau& o) const { return rows_ != o.rows_; }

    std::string to_json() const;
    std::string to_text() const;
    static IncreasingShiftedTableau from_json(const std::string& json);

  private:
    std::vector<std::vector<int>> rows_;
};

// Rows bottom-to-top, each left-to-right.
Word row_reading_word(const IncreasingShiftedTableau& t);

// A letter of the ordered alphabet 1' < 1 < 2' < 2 < ...
struct PrimedEntry {
    int value = 0;
    bool primed = false;

    int order_key() const { return 2 * value - (primed ? 1 : 0); }
    bool operator==(const PrimedEntry& o) const = default;
    bool operator<(const PrimedEntry& o) const { return order_key() < o.order_key(); }
    std::string to_string() const { return std::to_string(value) + (primed ? "'" : ""); }
};

// Weakly increasing filling over the primed alphabet with at most one k' per
// row, at most one unprimed k per column, and no primes on the main diagonal.
class PrimedTableau {
  public:
    PrimedTableau() = default;
    explicit PrimedTableau(std::vector<std::vector<PrimedEntry>> rows)
        : rows_(std::move(rows)) {}
    PrimedTableau(std::initializer_list<std::vector<PrimedEntry>> rows) : rows_(rows) {}

    const std::vector<std::vector<PrimedEntry>>& rows() const { return rows_; }
    std::vector<std::vector<PrimedEntry>>& rows() { return rows_; }
    std::vector<int> shape() const;
    int cell_count() const;
    bool empty() const { return rows_.empty(); }

    std::optional<PrimedEntry> cell(int row, int col) const;

    std::string validate() const;  // empty when valid

    bool operator==(const PrimedTableau& o) const { return rows_ == o.rows_; }
    bool operator!=(const PrimedTableau& o) const { return rows_ != o.rows_; }

    std::string to_json() const;
    std::string to_text() const;
    static PrimedTableau from_json(const std::string& json);

  private:
    std::vector<std::vector<PrimedEntry>> rows_;
};

// Entries are exactly 1..n, each appearing once, primed or not.
bool is_standard(const PrimedTableau& q);

// Relabels to a standard primed tableau: for each value k, first the cells
// holding k' top-to-bottom, then the cells holding k left-to-right, receive
// consecutive numbers (primes kept).
PrimedTableau standardize(const PrimedTableau& q);

}  // namespace qcrystal
