#include "qcrystal/tableaux.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace qcrystal {

using nlohmann::json;

std::vector<int> IncreasingShiftedTableau::shape() const {
    std::vector<int> s;
    s.reserve(rows_.size());
    for (const auto& r : rows_) s.push_back(static_cast<int>(r.size()));
    return s;
}

int IncreasingShiftedTableau::cell_count() const {
    int n = 0;
    for (const auto& r : rows_) n += static_cast<int>(r.size());
    return n;
}

std::optional<int> IncreasingShiftedTableau::cell(int row, int col) const {
    if (row < 1 || row > static_cast<int>(rows_.size())) return std::nullopt;
    const auto& r = rows_[static_cast<std::size_t>(row - 1)];
    const int k = col - row;
    if (k < 0 || k >= static_cast<int>(r.size())) return std::nullopt;
    return r[static_cast<std::size_t>(k)];
}

void IncreasingShiftedTableau::set_cell(int row, int col, int value) {
    rows_[static_cast<std::size_t>(row - 1)][static_cast<std::size_t>(col - row)] = value;
}

std::string IncreasingShiftedTableau::validate() const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const auto& r = rows_[i];
        if (r.empty()) return "row " + std::to_string(i + 1) + " is empty";
        if (i > 0 && static_cast<int>(rows_[i - 1].size()) < static_cast<int>(r.size()) + 1)
            return "shape is not a strict partition at row " + std::to_string(i + 1);
        for (std::size_t j = 0; j < r.size(); ++j) {
            if (r[j] < 1) return "entries must be positive";
            if (j + 1 < r.size() && r[j] >= r[j + 1])
                return "row " + std::to_string(i + 1) + " not strictly increasing at column offset " +
                       std::to_string(j + 1);
            if (i > 0 && rows_[i - 1][j + 1] >= r[j])
                return "column " + std::to_string(i + 1 + j) + " not strictly increasing at row " +
                       std::to_string(i + 1);
        }
    }
    return "";
}

Word row_reading_word(const IncreasingShiftedTableau& t) {
    Word w;
    const auto& rows = t.rows();
    for (auto it = rows.rbegin(); it != rows.rend(); ++it)
        w.insert(w.end(), it->begin(), it->end());
    return w;
}

std::vector<int> PrimedTableau::shape() const {
    std::vector<int> s;
    s.reserve(rows_.size());
    for (const auto& r : rows_) s.push_back(static_cast<int>(r.size()));
    return s;
}

int PrimedTableau::cell_count() const {
    int n = 0;
    for (const auto& r : rows_) n += static_cast<int>(r.size());
    return n;
}

std::optional<PrimedEntry> PrimedTableau::cell(int row, int col) const {
    if (row < 1 || row > static_cast<int>(rows_.size())) return std::nullopt;
    const auto& r = rows_[static_cast<std::size_t>(row - 1)];
    const int k = col - row;
    if (k < 0 || k >= static_cast<int>(r.size())) return std::nullopt;
    return r[static_cast<std::size_t>(k)];
}

std::string PrimedTableau::validate() const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const auto& r = rows_[i];
        if (r.empty()) return "row " + std::to_string(i + 1) + " is empty";
        if (i > 0 && static_cast<int>(rows_[i - 1].size()) < static_cast<int>(r.size()) + 1)
            return "shape is not a strict partition at row " + std::to_string(i + 1);
        if (r[0].primed)
            return "primed entry on the main diagonal at row " + std::to_string(i + 1);
        for (std::size_t j = 0; j < r.size(); ++j) {
            if (r[j].value < 1) return "entries must be positive";
            if (j + 1 < r.size() && !(r[j].order_key() <= r[j + 1].order_key()))
                return "row " + std::to_string(i + 1) + " not weakly increasing";
            if (i > 0 && !(rows_[i - 1][j + 1].order_key() <= r[j].order_key()))
                return "column " + std::to_string(i + 1 + j) + " not weakly increasing";
        }
        // at most one k' per row
        for (std::size_t j = 0; j + 1 < r.size(); ++j)
            if (r[j].primed && r[j + 1].primed && r[j].value == r[j + 1].value)
                return "row " + std::to_string(i + 1) + " has two " + r[j].to_string();
    }
    // at most one unprimed k per column
    if (!rows_.empty()) {
        const int ncols = static_cast<int>(rows_[0].size());
        for (int col = 1; col <= ncols; ++col) {
            int prev = 0;
            for (int row = 1; row <= static_cast<int>(rows_.size()); ++row) {
                auto e = cell(row, col);
                if (!e || e->primed) continue;
                if (e->value == prev)
                    return "column " + std::to_string(col) + " has two " + e->to_string();
                prev = e->value;
            }
        }
    }
    return "";
}

bool is_standard(const PrimedTableau& q) {
    std::vector<int> vals;
    for (const auto& r : q.rows())
        for (const auto& e : r) vals.push_back(e.value);
    std::sort(vals.begin(), vals.end());
    for (std::size_t i = 0; i < vals.size(); ++i)
        if (vals[i] != static_cast<int>(i) + 1) return false;
    return true;
}

PrimedTableau standardize(const PrimedTableau& q) {
    const std::string err = q.validate();
    if (!err.empty()) throw std::invalid_argument("invalid primed tableau: " + err);
    auto rows = q.rows();
    int maxv = 0;
    for (const auto& r : rows)
        for (const auto& e : r) maxv = std::max(maxv, e.value);
    int counter = 0;
    for (int k = 1; k <= maxv; ++k) {
        // primed k, top to bottom (equal primed values never share a row)
        std::vector<std::pair<int, int>> cells;
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < rows[i].size(); ++j)
                if (q.rows()[i][j] == PrimedEntry{k, true})
                    cells.emplace_back(static_cast<int>(i), static_cast<int>(j));
        std::sort(cells.begin(), cells.end());
        for (auto [i, j] : cells)
            rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = PrimedEntry{++counter, true};
        // unprimed k, left to right (equal unprimed values never share a column)
        cells.clear();
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < rows[i].size(); ++j)
                if (q.rows()[i][j] == PrimedEntry{k, false})
                    cells.emplace_back(static_cast<int>(i) + 1 + static_cast<int>(j),
                                       static_cast<int>(i));  // (column, row)
        std::sort(cells.begin(), cells.end());
        for (auto [col, i] : cells)
            rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(col - i - 1)] =
                PrimedEntry{++counter, false};
    }
    return PrimedTableau(std::move(rows));
}

// ---- serialization ----

std::string IncreasingShiftedTableau::to_json() const {
    json j;
    j["shape"] = shape();
    json rows = json::array();
    for (const auto& r : rows_) {
        json row = json::array();
        for (int v : r) row.push_back(std::to_string(v));
        rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    return j.dump();
}

std::string IncreasingShiftedTableau::to_text() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        out << std::string(2 * i, ' ');
        for (std::size_t j = 0; j < rows_[i].size(); ++j) {
            if (j) out << ' ';
            out << rows_[i][j];
        }
        out << '\n';
    }
    return out.str();
}

namespace {

PrimedEntry parse_entry(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty tableau entry");
    bool primed = s.back() == '\'';
    const std::string num = primed ? s.substr(0, s.size() - 1) : s;
    return PrimedEntry{std::stoi(num), primed};
}

json parse_tableau_json(const std::string& text) {
    json j = json::parse(text);
    if (!j.contains("rows") || !j["rows"].is_array())
        throw std::invalid_argument("tableau JSON needs a \"rows\" array");
    return j;
}

}  // namespace

IncreasingShiftedTableau IncreasingShiftedTableau::from_json(const std::string& text) {
    json j = parse_tableau_json(text);
    std::vector<std::vector<int>> rows;
    for (const auto& row : j["rows"]) {
        std::vector<int> r;
        for (const auto& e : row) {
            PrimedEntry p = parse_entry(e.get<std::string>());
            if (p.primed) throw std::invalid_argument("primed entry in an increasing tableau");
            r.push_back(p.value);
        }
        rows.push_back(std::move(r));
    }
    return IncreasingShiftedTableau(std::move(rows));
}

std::string PrimedTableau::to_json() const {
    json j;
    j["shape"] = shape();
    json rows = json::array();
    for (const auto& r : rows_) {
        json row = json::array();
        for (const auto& e : r) row.push_back(e.to_string());
        rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    return j.dump();
}

std::string PrimedTableau::to_text() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        out << std::string(2 * i, ' ');
        for (std::size_t j = 0; j < rows_[i].size(); ++j) {
            if (j) out << ' ';
            out << rows_[i][j].to_string();
        }
        out << '\n';
    }
    return out.str();
}

PrimedTableau PrimedTableau::from_json(const std::string& text) {
    json j = parse_tableau_json(text);
    std::vector<std::vector<PrimedEntry>> rows;
    for (const auto& row : j["rows"]) {
        std::vector<PrimedEntry> r;
        for (const auto& e : row) r.push_back(parse_entry(e.get<std::string>()));
        rows.push_back(std::move(r));
    }
    return PrimedTableau(std::move(rows));
}

}  // namespace qcrystal
