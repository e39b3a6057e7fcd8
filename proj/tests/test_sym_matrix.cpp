#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "descmat/enumerate.hpp"
#include "descmat/sym_matrix.hpp"

using descmat::count_family;
using descmat::count_table;
using descmat::family_key;
using descmat::family_members;
using descmat::for_each_in_family;
using descmat::matrix_format;
using descmat::matrix_parse_error;
using descmat::parse_matrix;
using descmat::render_matrix;
using descmat::sym_matrix;
using descmat::validate_membership;

namespace {

// Independent completeness oracle: assign every upper-triangle cell by
// plain composition of the entry sum, no pruning, and filter the zero
// rows at the end.
void oracle_rec(int k, std::size_t idx,
                const std::vector<std::pair<int, int>>& cells, std::int64_t remaining,
                std::vector<std::int64_t>& grid,
                std::vector<std::vector<std::int64_t>>& out) {
    if (idx == cells.size()) {
        if (remaining == 0) out.push_back(grid);
        return;
    }
    const auto [i, j] = cells[idx];
    const std::int64_t w = (i == j) ? 1 : 2;
    for (std::int64_t v = 0; v * w <= remaining; ++v) {
        grid[static_cast<std::size_t>(i) * k + j] = v;
        grid[static_cast<std::size_t>(j) * k + i] = v;
        oracle_rec(k, idx + 1, cells, remaining - v * w, grid, out);
    }
    grid[static_cast<std::size_t>(i) * k + j] = 0;
    grid[static_cast<std::size_t>(j) * k + i] = 0;
}

std::vector<std::vector<std::int64_t>> oracle_family(int n, int k, bool zero_diag) {
    std::vector<std::pair<int, int>> cells;
    for (int i = 0; i < k; ++i)
        for (int j = i; j < k; ++j) cells.emplace_back(i, j);
    std::vector<std::int64_t> grid(static_cast<std::size_t>(k) * k, 0);
    std::vector<std::vector<std::int64_t>> all;
    oracle_rec(k, 0, cells, n, grid, all);
    std::vector<std::vector<std::int64_t>> kept;
    for (const auto& g : all) {
        bool ok = true;
        for (int i = 0; i < k && ok; ++i) {
            bool nonzero = false;
            for (int j = 0; j < k; ++j) nonzero |= g[static_cast<std::size_t>(i) * k + j] != 0;
            ok = nonzero;
        }
        if (ok && zero_diag)
            for (int i = 0; i < k && ok; ++i) ok = g[static_cast<std::size_t>(i) * k + i] == 0;
        if (ok) kept.push_back(g);
    }
    return kept;
}

} // namespace

TEST_CASE("construction validates symmetry and sign") {
    CHECK_THROWS_AS(sym_matrix(2, {1, 2, 3, 4}), std::invalid_argument);
    CHECK_THROWS_AS(sym_matrix(2, {1, -1, -1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(sym_matrix(2, {1, 0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(sym_matrix(0, {}), std::invalid_argument);
    const sym_matrix x(2, {0, 1, 1, 0});
    CHECK(x.entry_sum() == 2);
    CHECK(x.diagonal_is_zero());
}

TEST_CASE("family key invariant") {
    CHECK_THROWS_AS(family_key(2, 3), std::invalid_argument);
    CHECK_THROWS_AS(family_key(2, 0), std::invalid_argument);
    CHECK_THROWS_AS(family_key(0, 1), std::invalid_argument);
    CHECK_NOTHROW(family_key(3, 3));
}

TEST_CASE("membership predicate") {
    CHECK(validate_membership(sym_matrix(1, {2}), family_key(2, 1)));
    CHECK_FALSE(validate_membership(sym_matrix(2, {2, 0, 0, 0}), family_key(2, 2)));
    CHECK(validate_membership(sym_matrix(2, {0, 1, 1, 0}), family_key(2, 2, true)));
    CHECK_FALSE(validate_membership(sym_matrix(1, {2}), family_key(2, 1, true)));
    CHECK_FALSE(validate_membership(sym_matrix(1, {2}), family_key(3, 1)));
    CHECK_FALSE(validate_membership(sym_matrix(1, {3}), family_key(3, 2)));
}

TEST_CASE("plain parse and render") {
    const sym_matrix anti = parse_matrix("0 1\n1 0\n");
    CHECK(anti == sym_matrix(2, {0, 1, 1, 0}));
    CHECK(parse_matrix("1\n") == sym_matrix(1, {1}));
    CHECK(parse_matrix("  2 ") == sym_matrix(1, {2}));
    CHECK(render_matrix(anti) == "0 1\n1 0\n");
}

TEST_CASE("parse failure reasons are distinct") {
    const auto reason_of = [](const std::string& text) {
        try {
            parse_matrix(text);
        } catch (const matrix_parse_error& e) {
            return e.why();
        }
        throw std::runtime_error("expected a parse error");
    };
    CHECK(reason_of("") == matrix_parse_error::reason::empty_input);
    CHECK(reason_of("  \n \n") == matrix_parse_error::reason::empty_input);
    CHECK(reason_of("1 2\n3\n") == matrix_parse_error::reason::ragged_rows);
    CHECK(reason_of("1 2\n") == matrix_parse_error::reason::ragged_rows);
    CHECK(reason_of("1 -2\n-2 1\n") == matrix_parse_error::reason::negative_entry);
    CHECK(reason_of("1 2\n3 4\n") == matrix_parse_error::reason::asymmetric);
    CHECK(reason_of("a b\nb a\n") == matrix_parse_error::reason::bad_token);
    CHECK(reason_of("{\"entries\": 3}") == matrix_parse_error::reason::bad_token);
    CHECK(reason_of("{\"entries\": []}") == matrix_parse_error::reason::empty_input);
    CHECK(reason_of("{\"entries\": [[1,2],[2,-1]]}") ==
          matrix_parse_error::reason::negative_entry);
    CHECK(reason_of("{\"entries\": [[1,2],[3,4]]}") ==
          matrix_parse_error::reason::asymmetric);
}

TEST_CASE("json parse and render round trip") {
    const sym_matrix x(2, {0, 2, 2, 0});
    const std::string j = render_matrix(x, matrix_format::json);
    CHECK(j == "{\"entries\":[[0,2],[2,0]]}");
    CHECK(parse_matrix(j) == x);
}

TEST_CASE("round trip over enumerated members, both formats") {
    for (int n = 1; n <= 4; ++n) {
        for (int k = 1; k <= n; ++k) {
            for (const auto& x : family_members(family_key(n, k))) {
                CHECK(parse_matrix(render_matrix(x, matrix_format::plain)) == x);
                CHECK(parse_matrix(render_matrix(x, matrix_format::json)) == x);
            }
        }
    }
}

TEST_CASE("enumeration, small exact sets") {
    const auto t11 = family_members(family_key(1, 1));
    REQUIRE(t11.size() == 1);
    CHECK(t11[0] == sym_matrix(1, {1}));

    const auto t22 = family_members(family_key(2, 2));
    REQUIRE(t22.size() == 2);
    CHECK(t22[0] == sym_matrix(2, {0, 1, 1, 0}));
    CHECK(t22[1] == sym_matrix(2, {1, 0, 0, 1}));

    CHECK(family_members(family_key(3, 3)).size() == 4);
}

TEST_CASE("every emitted matrix passes membership") {
    for (int n = 1; n <= 6; ++n)
        for (int k = 1; k <= n; ++k)
            for_each_in_family(family_key(n, k), [&](const sym_matrix& x) {
                CHECK(validate_membership(x, family_key(n, k)));
            });
}

TEST_CASE("enumeration matches the no-pruning filter oracle") {
    for (int n = 1; n <= 5; ++n) {
        for (int k = 1; k <= n; ++k) {
            for (bool zd : {false, true}) {
                std::set<std::vector<std::int64_t>> got;
                for_each_in_family(family_key(n, k, zd), [&](const sym_matrix& x) {
                    CHECK(got.insert(x.cells()).second); // no duplicates
                });
                const auto oracle = oracle_family(n, k, zd);
                const std::set<std::vector<std::int64_t>> expected(oracle.begin(),
                                                                   oracle.end());
                CHECK(got == expected);
            }
        }
    }
}

TEST_CASE("deterministic lexicographic stream") {
    const auto run = [] {
        std::string all;
        for (int k = 1; k <= 4; ++k)
            for_each_in_family(family_key(4, k),
                               [&](const sym_matrix& x) { all += render_matrix(x); });
        return all;
    };
    CHECK(run() == run());

    // upper triangles appear in increasing lexicographic order
    std::vector<std::vector<std::int64_t>> uppers;
    for_each_in_family(family_key(5, 3), [&](const sym_matrix& x) {
        std::vector<std::int64_t> u;
        for (int i = 0; i < 3; ++i)
            for (int j = i; j < 3; ++j) u.push_back(x.at(i, j));
        uppers.push_back(u);
    });
    CHECK(std::is_sorted(uppers.begin(), uppers.end()));
}

TEST_CASE("count tables") {
    CHECK(count_table(2, false) == std::vector<std::int64_t>{1, 2});
    CHECK(count_table(3, false) == std::vector<std::int64_t>{1, 4, 4});
    CHECK(count_table(2, true) == std::vector<std::int64_t>{0, 1});
    CHECK(count_table(4, true) == std::vector<std::int64_t>{0, 1, 3, 3});

    for (int n : {1, 3, 5}) {
        const auto w = count_table(n, true);
        for (auto c : w) CHECK(c == 0);
    }
    for (int n = 1; n <= 8; ++n) CHECK(count_table(n, false)[0] == 1);
}

TEST_CASE("streaming counter agrees with generation") {
    for (int n = 1; n <= 6; ++n)
        for (int k = 1; k <= n; ++k)
            for (bool zd : {false, true})
                CHECK(count_family(family_key(n, k, zd)) ==
                      static_cast<std::int64_t>(family_members(family_key(n, k, zd)).size()));
}

TEST_CASE("resource bound is enforced before any output") {
    CHECK_THROWS_AS(count_table(descmat::default_enumeration_bound + 1, false),
                    std::invalid_argument);
    CHECK_THROWS_AS(for_each_in_family(family_key(13, 2), [](const sym_matrix&) {}),
                    std::invalid_argument);
    CHECK_NOTHROW(for_each_in_family(family_key(13, 1), [](const sym_matrix&) {}, 13));
}
