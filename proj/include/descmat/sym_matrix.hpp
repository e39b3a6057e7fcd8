#pragma once

/*
 * Dense symmetric matrices with non-negative integer entries, and the
 * family predicate: a k x k symmetric matrix belongs to the family for
 * entry sum n when its entries sum to n and no row (hence no column)
 * is all zeros. The zero_diagonal flag selects the subfamily whose main
 * diagonal is all zeros.
 *
 * Interchange formats: plain text (k lines of k space-separated entries)
 * and JSON ({"entries": [[...], ...]}).
 */

#include <cctype>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "descmat/checked.hpp"

namespace descmat {

class sym_matrix {
public:
    sym_matrix(int dim, std::vector<std::int64_t> cells)
        : dim_(dim), cells_(std::move(cells)) {
        if (dim_ < 1) throw std::invalid_argument("sym_matrix: dimension must be >= 1");
        if (cells_.size() != static_cast<std::size_t>(dim_) * static_cast<std::size_t>(dim_))
            throw std::invalid_argument("sym_matrix: cell count does not match dimension");
        for (int i = 0; i < dim_; ++i) {
            for (int j = 0; j < dim_; ++j) {
                if (at(i, j) < 0)
                    throw std::invalid_argument("sym_matrix: negative entry");
                if (at(i, j) != at(j, i))
                    throw std::invalid_argument("sym_matrix: not symmetric");
            }
        }
    }

    static sym_matrix from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
        const int k = static_cast<int>(rows.size());
        std::vector<std::int64_t> cells;
        cells.reserve(static_cast<std::size_t>(k) * static_cast<std::size_t>(k));
        for (const auto& row : rows) {
            if (static_cast<int>(row.size()) != k)
                throw std::invalid_argument("sym_matrix: ragged rows");
            cells.insert(cells.end(), row.begin(), row.end());
        }
        return sym_matrix(k, std::move(cells));
    }

    int dim() const { return dim_; }

    // 0-based access
    std::int64_t at(int i, int j) const {
        return cells_[static_cast<std::size_t>(i) * static_cast<std::size_t>(dim_) +
                      static_cast<std::size_t>(j)];
    }

    std::int64_t entry_sum() const {
        std::int64_t s = 0;
        for (auto v : cells_) s = checked_add(s, v);
        return s;
    }

    bool row_has_nonzero(int i) const {
        for (int j = 0; j < dim_; ++j)
            if (at(i, j) != 0) return true;
        return false;
    }

    bool diagonal_is_zero() const {
        for (int i = 0; i < dim_; ++i)
            if (at(i, i) != 0) return false;
        return true;
    }

    const std::vector<std::int64_t>& cells() const { return cells_; }

    bool operator==(const sym_matrix&) const = default;

private:
    int dim_;
    std::vector<std::int64_t> cells_;
};

// Selects the family with entry sum n and dimension k; zero_diagonal
// narrows to the all-zero-diagonal subfamily.
struct family_key {
    int n;
    int k;
    bool zero_diagonal = false;

    family_key(int n_, int k_, bool zero_diagonal_ = false)
        : n(n_), k(k_), zero_diagonal(zero_diagonal_) {
        if (k < 1 || n < 1 || k > n)
            throw std::invalid_argument("family_key: requires 1 <= k <= n");
    }
};

inline bool validate_membership(const sym_matrix& x, const family_key& key) {
    if (x.dim() != key.k) return false;
    if (x.entry_sum() != key.n) return false;
    for (int i = 0; i < x.dim(); ++i)
        if (!x.row_has_nonzero(i)) return false;
    if (key.zero_diagonal && !x.diagonal_is_zero()) return false;
    return true;
}

// Membership in the union over k, i.e. in the family for its own
// dimension and entry sum.
inline bool is_family_member(const sym_matrix& x) {
    if (x.entry_sum() < x.dim()) return false;
    for (int i = 0; i < x.dim(); ++i)
        if (!x.row_has_nonzero(i)) return false;
    return true;
}

class matrix_parse_error : public std::runtime_error {
public:
    enum class reason { empty_input, ragged_rows, negative_entry, asymmetric, bad_token };

    matrix_parse_error(reason r, const std::string& message)
        : std::runtime_error(message), reason_(r) {}

    reason why() const { return reason_; }

private:
    reason reason_;
};

enum class matrix_format { plain, json };

namespace detail {

inline std::int64_t parse_entry_token(const std::string& tok) {
    if (!tok.empty() && tok[0] == '-')
        throw matrix_parse_error(matrix_parse_error::reason::negative_entry,
                                 "negative entry: " + tok);
    std::size_t pos = 0;
    std::int64_t v = 0;
    try {
        v = std::stoll(tok, &pos);
    } catch (const std::out_of_range&) {
        throw std::overflow_error("entry does not fit in 64 bits: " + tok);
    } catch (const std::invalid_argument&) {
        throw matrix_parse_error(matrix_parse_error::reason::bad_token,
                                 "not an integer: " + tok);
    }
    if (pos != tok.size())
        throw matrix_parse_error(matrix_parse_error::reason::bad_token,
                                 "not an integer: " + tok);
    return v;
}

inline sym_matrix rows_to_matrix(const std::vector<std::vector<std::int64_t>>& rows) {
    const int k = static_cast<int>(rows.size());
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != k)
            throw matrix_parse_error(matrix_parse_error::reason::ragged_rows,
                                     "expected a square matrix");
        for (auto v : row)
            if (v < 0)
                throw matrix_parse_error(matrix_parse_error::reason::negative_entry,
                                         "negative entry");
    }
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] !=
                rows[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)])
                throw matrix_parse_error(matrix_parse_error::reason::asymmetric,
                                         "matrix is not symmetric");
    return sym_matrix::from_rows(rows);
}

inline sym_matrix parse_matrix_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw matrix_parse_error(matrix_parse_error::reason::bad_token,
                                 std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("entries") || !doc["entries"].is_array())
        throw matrix_parse_error(matrix_parse_error::reason::bad_token,
                                 "JSON matrix must be an object with an \"entries\" array");
    std::vector<std::vector<std::int64_t>> rows;
    for (const auto& jrow : doc["entries"]) {
        if (!jrow.is_array())
            throw matrix_parse_error(matrix_parse_error::reason::ragged_rows,
                                     "\"entries\" must be an array of arrays");
        std::vector<std::int64_t> row;
        for (const auto& cell : jrow) {
            if (!cell.is_number_integer())
                throw matrix_parse_error(matrix_parse_error::reason::bad_token,
                                         "matrix entries must be integers");
            row.push_back(cell.get<std::int64_t>());
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty())
        throw matrix_parse_error(matrix_parse_error::reason::empty_input,
                                 "empty matrix");
    return rows_to_matrix(rows);
}

} // namespace detail

// Accepts either interchange format; JSON is detected by a leading '{'.
inline sym_matrix parse_matrix(const std::string& text) {
    std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos)
        throw matrix_parse_error(matrix_parse_error::reason::empty_input, "empty input");
    if (text[first] == '{') return detail::parse_matrix_json(text);

    std::vector<std::vector<std::int64_t>> rows;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string line = text.substr(pos, eol == std::string::npos ? eol : eol - pos);
        pos = (eol == std::string::npos) ? text.size() : eol + 1;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.find_first_not_of(" \t") == std::string::npos) continue;
        std::vector<std::int64_t> row;
        std::size_t tpos = 0;
        while (tpos < line.size()) {
            while (tpos < line.size() && (line[tpos] == ' ' || line[tpos] == '\t')) ++tpos;
            if (tpos >= line.size()) break;
            std::size_t tend = tpos;
            while (tend < line.size() && line[tend] != ' ' && line[tend] != '\t') ++tend;
            row.push_back(detail::parse_entry_token(line.substr(tpos, tend - tpos)));
            tpos = tend;
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty())
        throw matrix_parse_error(matrix_parse_error::reason::empty_input, "empty input");
    return detail::rows_to_matrix(rows);
}

inline nlohmann::json matrix_entries_json(const sym_matrix& x) {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < x.dim(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j < x.dim(); ++j) row.push_back(x.at(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline std::string render_matrix(const sym_matrix& x,
                                 matrix_format format = matrix_format::plain) {
    if (format == matrix_format::json) {
        nlohmann::json doc;
        doc["entries"] = matrix_entries_json(x);
        return doc.dump();
    }
    std::string out;
    for (int i = 0; i < x.dim(); ++i) {
        for (int j = 0; j < x.dim(); ++j) {
            if (j > 0) out += ' ';
            out += std::to_string(x.at(i, j));
        }
        out += '\n';
    }
    return out;
}

} // namespace descmat
