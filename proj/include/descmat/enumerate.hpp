#pragma once

/*
 * Streaming enumeration of the symmetric-matrix families.
 *
 * The upper triangle is filled recursively in row-major order with
 * remaining-sum pruning (an off-diagonal entry spends twice its value).
 * Choosing a cell completes full row i once its last upper-triangle
 * cell (i, k-1) is placed; a completed all-zero row aborts the branch.
 * When the remaining budget hits zero the only completion is the
 * all-zero tail, which survives iff every row already has a non-zero
 * entry. Values are tried in increasing order, so matrices stream in
 * lexicographic order of the upper triangle read row by row.
 */

#include <cstdint>
#include <utility>
#include <vector>

#include "descmat/permutation.hpp"
#include "descmat/sym_matrix.hpp"

namespace descmat {

namespace detail {

struct family_enum_state {
    int k = 0;
    bool zero_diagonal = false;
    std::vector<std::pair<int, int>> cells; // upper-triangle positions, row-major
    std::vector<std::int64_t> grid;         // k*k working buffer
    std::vector<int> row_nonzero;           // per-row count of non-zero cells

    explicit family_enum_state(const family_key& key)
        : k(key.k), zero_diagonal(key.zero_diagonal),
          grid(static_cast<std::size_t>(key.k) * static_cast<std::size_t>(key.k), 0),
          row_nonzero(static_cast<std::size_t>(key.k), 0) {
        for (int i = 0; i < k; ++i)
            for (int j = i; j < k; ++j) cells.emplace_back(i, j);
    }

    void place(int i, int j, std::int64_t v) {
        grid[static_cast<std::size_t>(i) * k + j] = v;
        grid[static_cast<std::size_t>(j) * k + i] = v;
        if (v != 0) {
            ++row_nonzero[static_cast<std::size_t>(i)];
            if (i != j) ++row_nonzero[static_cast<std::size_t>(j)];
        }
    }

    void unplace(int i, int j) {
        std::int64_t v = grid[static_cast<std::size_t>(i) * k + j];
        if (v != 0) {
            --row_nonzero[static_cast<std::size_t>(i)];
            if (i != j) --row_nonzero[static_cast<std::size_t>(j)];
        }
        grid[static_cast<std::size_t>(i) * k + j] = 0;
        grid[static_cast<std::size_t>(j) * k + i] = 0;
    }

    bool all_rows_nonzero() const {
        for (int c : row_nonzero)
            if (c == 0) return false;
        return true;
    }
};

template <typename OnComplete>
void family_rec(family_enum_state& st, std::size_t idx, std::int64_t remaining,
                OnComplete&& done) {
    if (remaining == 0) {
        // all-zero tail is the unique completion
        if (st.all_rows_nonzero()) done();
        return;
    }
    if (idx == st.cells.size()) return; // budget left over
    const auto [i, j] = st.cells[idx];
    const std::int64_t weight = (i == j) ? 1 : 2;
    const std::int64_t max_v = (i == j && st.zero_diagonal) ? 0 : remaining / weight;
    const bool completes_row = (j == st.k - 1);
    for (std::int64_t v = 0; v <= max_v; ++v) {
        st.place(i, j, v);
        if (!(completes_row && st.row_nonzero[static_cast<std::size_t>(i)] == 0))
            family_rec(st, idx + 1, remaining - weight * v, done);
        st.unplace(i, j);
    }
}

} // namespace detail

// Visits every member of the family exactly once, in lexicographic
// order of the upper triangle read row by row.
template <typename Visitor>
void for_each_in_family(const family_key& key, Visitor&& visit,
                        int bound = default_enumeration_bound) {
    require_within_bound(key.n, bound, "for_each_in_family");
    detail::family_enum_state st(key);
    detail::family_rec(st, 0, key.n,
                       [&] { visit(sym_matrix(st.k, st.grid)); });
}

inline std::vector<sym_matrix> family_members(const family_key& key,
                                              int bound = default_enumeration_bound) {
    std::vector<sym_matrix> out;
    for_each_in_family(key, [&](const sym_matrix& x) { out.push_back(x); }, bound);
    return out;
}

// Streaming counter: same recursion, nothing materialized.
inline std::int64_t count_family(const family_key& key,
                                 int bound = default_enumeration_bound) {
    require_within_bound(key.n, bound, "count_family");
    detail::family_enum_state st(key);
    std::int64_t count = 0;
    detail::family_rec(st, 0, key.n, [&] { ++count; });
    return count;
}

// Counts for k = 1..n; index 0 holds k = 1.
inline std::vector<std::int64_t> count_table(int n, bool zero_diagonal = false,
                                             int bound = default_enumeration_bound) {
    require_within_bound(n, bound, "count_table");
    std::vector<std::int64_t> row;
    row.reserve(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k)
        row.push_back(count_family(family_key(n, k, zero_diagonal), bound));
    return row;
}

// The signed set: the union of the families for k = 1..n, visited in
// k-then-lexicographic order. The sign of a member is (-1)^dim.
template <typename Visitor>
void for_each_in_signed_set(int n, Visitor&& visit,
                            int bound = default_enumeration_bound,
                            bool zero_diagonal = false) {
    require_within_bound(n, bound, "for_each_in_signed_set");
    for (int k = 1; k <= n; ++k)
        for_each_in_family(family_key(n, k, zero_diagonal), visit, bound);
}

} // namespace descmat
