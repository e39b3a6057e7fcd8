#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "descmat/permutation.hpp"

using descmat::all_involutions;
using descmat::descent_count;
using descmat::descent_set;
using descmat::for_each_involution;
using descmat::involution;
using descmat::involution_descent_table;
using descmat::involution_polynomial;
using descmat::permutation;
using descmat::telephone_number;

namespace {

// Independent oracle: filter all n! permutations by the self-inverse
// test. next_permutation from the identity yields lexicographic order.
std::vector<std::vector<int>> involutions_by_filter(int n) {
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 1);
    std::vector<std::vector<int>> out;
    do {
        bool self_inverse = true;
        for (int i = 1; i <= n && self_inverse; ++i)
            self_inverse = (p[static_cast<std::size_t>(p[static_cast<std::size_t>(i - 1)] - 1)] == i);
        if (self_inverse) out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

} // namespace

TEST_CASE("permutation validation") {
    CHECK_THROWS_AS(permutation({1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(permutation({0, 2}), std::invalid_argument);
    CHECK_THROWS_AS(permutation({1, 3}), std::invalid_argument);
    CHECK_THROWS_AS(permutation({}), std::invalid_argument);
    CHECK(permutation::identity(3).images() == std::vector<int>{1, 2, 3});
}

TEST_CASE("involution validation") {
    CHECK_NOTHROW(involution({2, 1, 3}));
    CHECK_THROWS_AS(involution({2, 3, 1}), std::invalid_argument);
}

TEST_CASE("descent set by definition") {
    CHECK(descent_set(permutation({1, 2, 3})).empty());
    CHECK(descent_set(permutation({3, 2, 1})) == std::vector<int>{1, 2});
    CHECK(descent_set(permutation({1, 3, 2})) == std::vector<int>{2});
    CHECK(descent_count(permutation({3, 2, 1})) == 2);
}

TEST_CASE("descent set characterizes every adjacent pair") {
    for (const auto& iv : all_involutions(6)) {
        const permutation& p = iv.perm();
        const auto des = descent_set(p);
        for (int i = 1; i < p.size(); ++i) {
            const bool in_set = std::find(des.begin(), des.end(), i) != des.end();
            if (in_set)
                CHECK(p(i) > p(i + 1));
            else
                CHECK(p(i) < p(i + 1));
        }
    }
}

TEST_CASE("involution enumeration, small cases") {
    const auto one = all_involutions(1);
    REQUIRE(one.size() == 1);
    CHECK(one[0].perm().images() == std::vector<int>{1});

    const auto two = all_involutions(2);
    REQUIRE(two.size() == 2);
    CHECK(two[0].perm().images() == std::vector<int>{1, 2});
    CHECK(two[1].perm().images() == std::vector<int>{2, 1});

    CHECK(all_involutions(4).size() == 10);
}

TEST_CASE("involution enumeration matches the filter oracle exactly") {
    for (int n = 1; n <= 7; ++n) {
        const auto oracle = involutions_by_filter(n);
        std::vector<std::vector<int>> got;
        for_each_involution(n, [&](const involution& iv) {
            got.push_back(iv.perm().images());
        });
        CHECK(got == oracle); // same set, same lexicographic order
    }
}

TEST_CASE("involution enumeration rejects n = 0 and bound violations") {
    CHECK_THROWS_AS(for_each_involution(0, [](const involution&) {}),
                    std::invalid_argument);
    CHECK_THROWS_AS(for_each_involution(5, [](const involution&) {}, 4),
                    std::invalid_argument);
    CHECK_NOTHROW(for_each_involution(5, [](const involution&) {}, 5));
    CHECK_THROWS_AS(for_each_involution(descmat::default_enumeration_bound + 1,
                                        [](const involution&) {}),
                    std::invalid_argument);
}

TEST_CASE("telephone numbers") {
    const std::vector<std::int64_t> expected{1,   1,    2,    4,     10,    26,   76,
                                             232, 764,  2620, 9496,  35696, 140152};
    for (int n = 0; n < static_cast<int>(expected.size()); ++n)
        CHECK(telephone_number(n) == expected[static_cast<std::size_t>(n)]);
    for (int n = 1; n <= 9; ++n)
        CHECK(static_cast<std::int64_t>(all_involutions(n).size()) == telephone_number(n));
}

TEST_CASE("descent tables") {
    CHECK(involution_descent_table(1) == std::vector<std::int64_t>{1});
    CHECK(involution_descent_table(2) == std::vector<std::int64_t>{1, 1});
    CHECK(involution_descent_table(3) == std::vector<std::int64_t>{1, 2, 1});

    for (int n = 1; n <= 10; ++n) {
        const auto row = involution_descent_table(n);
        std::int64_t total = 0;
        for (auto c : row) total += c;
        CHECK(total == telephone_number(n));
        // symmetric: I(n,k) = I(n, n-1-k)
        for (std::size_t k = 0; k < row.size(); ++k)
            CHECK(row[k] == row[row.size() - 1 - k]);
        // unimodal
        std::size_t i = 0;
        while (i + 1 < row.size() && row[i] <= row[i + 1]) ++i;
        while (i + 1 < row.size() && row[i] >= row[i + 1]) ++i;
        CHECK(i + 1 >= row.size());
    }
}

TEST_CASE("involution polynomial") {
    CHECK(involution_polynomial(1) == descmat::int_polynomial({1}));
    CHECK(involution_polynomial(2) == descmat::int_polynomial({1, 1}));
    CHECK(involution_polynomial(3) == descmat::int_polynomial({1, 2, 1}));
}
