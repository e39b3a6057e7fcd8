#pragma once

/*
 * Permutations of {1..n} in one-line notation, involutions, and the
 * descent statistic.
 *
 * All positions and values are 1-based. I(n,k) counts involutions of
 * the symmetric group on n letters with exactly k descents; the row
 * sums are the telephone numbers a(n) = a(n-1) + (n-1)*a(n-2).
 *
 * Involutions are generated recursively: the smallest unassigned
 * position is either a fixed point or swapped with a larger unassigned
 * position. Trying images in increasing order yields the involutions in
 * lexicographic order of their one-line notation.
 */

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "descmat/checked.hpp"
#include "descmat/polynomial.hpp"

namespace descmat {

// Resource guard for every exhaustive enumeration in the library.
inline constexpr int default_enumeration_bound = 12;

inline void require_within_bound(int n, int bound, const char* what) {
    if (n < 1)
        throw std::invalid_argument(std::string(what) + ": n must be >= 1");
    if (bound < 1)
        throw std::invalid_argument(std::string(what) + ": bound must be >= 1");
    if (n > bound)
        throw std::invalid_argument(std::string(what) + ": n=" + std::to_string(n) +
                                    " exceeds enumeration bound " + std::to_string(bound));
}

class permutation {
public:
    explicit permutation(std::vector<int> images) : images_(std::move(images)) {
        const int n = static_cast<int>(images_.size());
        if (n == 0) throw std::invalid_argument("permutation: empty");
        std::vector<bool> seen(static_cast<std::size_t>(n), false);
        for (int v : images_) {
            if (v < 1 || v > n)
                throw std::invalid_argument("permutation: image out of range 1..n");
            if (seen[static_cast<std::size_t>(v - 1)])
                throw std::invalid_argument("permutation: repeated image");
            seen[static_cast<std::size_t>(v - 1)] = true;
        }
    }

    static permutation identity(int n) {
        std::vector<int> v(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i + 1;
        return permutation(std::move(v));
    }

    int size() const { return static_cast<int>(images_.size()); }

    // 1-based application
    int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }

    const std::vector<int>& images() const { return images_; }

    bool operator==(const permutation&) const = default;

private:
    std::vector<int> images_;
};

class involution {
public:
    explicit involution(permutation p) : perm_(std::move(p)) {
        for (int i = 1; i <= perm_.size(); ++i)
            if (perm_(perm_(i)) != i)
                throw std::invalid_argument("involution: permutation is not self-inverse");
    }

    explicit involution(std::vector<int> images)
        : involution(permutation(std::move(images))) {}

    const permutation& perm() const { return perm_; }
    int size() const { return perm_.size(); }
    int operator()(int i) const { return perm_(i); }

    bool operator==(const involution&) const = default;

private:
    permutation perm_;
};

// Strictly increasing 1-based positions i with p(i) > p(i+1).
using descent_positions = std::vector<int>;

inline descent_positions descent_set(const permutation& p) {
    descent_positions des;
    for (int i = 1; i < p.size(); ++i)
        if (p(i) > p(i + 1)) des.push_back(i);
    return des;
}

inline int descent_count(const permutation& p) {
    int k = 0;
    for (int i = 1; i < p.size(); ++i)
        if (p(i) > p(i + 1)) ++k;
    return k;
}

// Total number of involutions of the symmetric group on n letters.
inline std::int64_t telephone_number(int n) {
    if (n < 0) throw std::invalid_argument("telephone_number: n must be >= 0");
    std::int64_t prev2 = 1, prev1 = 1; // a(0), a(1)
    if (n <= 1) return 1;
    for (int i = 2; i <= n; ++i) {
        std::int64_t cur = checked_add(prev1, checked_mul(i - 1, prev2));
        prev2 = prev1;
        prev1 = cur;
    }
    return prev1;
}

namespace detail {

template <typename Visitor>
void involutions_rec(std::vector<int>& images, std::vector<bool>& assigned,
                     int next, Visitor&& visit) {
    const int n = static_cast<int>(images.size());
    while (next <= n && assigned[static_cast<std::size_t>(next - 1)]) ++next;
    if (next > n) {
        visit(images);
        return;
    }
    const auto idx = [](int i) { return static_cast<std::size_t>(i - 1); };
    // fixed point first, then swaps with larger positions in increasing order
    images[idx(next)] = next;
    assigned[idx(next)] = true;
    involutions_rec(images, assigned, next + 1, visit);
    assigned[idx(next)] = false;
    for (int j = next + 1; j <= n; ++j) {
        if (assigned[idx(j)]) continue;
        images[idx(next)] = j;
        images[idx(j)] = next;
        assigned[idx(next)] = assigned[idx(j)] = true;
        involutions_rec(images, assigned, next + 1, visit);
        assigned[idx(next)] = assigned[idx(j)] = false;
    }
}

} // namespace detail

// Visits every involution of the symmetric group on n letters exactly
// once, in lexicographic order of one-line notation.
template <typename Visitor>
void for_each_involution(int n, Visitor&& visit,
                         int bound = default_enumeration_bound) {
    require_within_bound(n, bound, "for_each_involution");
    std::vector<int> images(static_cast<std::size_t>(n), 0);
    std::vector<bool> assigned(static_cast<std::size_t>(n), false);
    detail::involutions_rec(images, assigned, 1,
                            [&](const std::vector<int>& one_line) {
                                visit(involution(one_line));
                            });
}

inline std::vector<involution> all_involutions(int n,
                                               int bound = default_enumeration_bound) {
    std::vector<involution> out;
    for_each_involution(n, [&](const involution& iv) { out.push_back(iv); }, bound);
    return out;
}

// I(n,k) for k = 0..n-1
inline std::vector<std::int64_t> involution_descent_table(
    int n, int bound = default_enumeration_bound) {
    std::vector<std::int64_t> row(static_cast<std::size_t>(n), 0);
    for_each_involution(
        n, [&](const involution& iv) { ++row[static_cast<std::size_t>(descent_count(iv.perm()))]; },
        bound);
    return row;
}

// Generating polynomial of the descent statistic over involutions:
// coefficient of t^k is I(n,k).
inline int_polynomial involution_polynomial(int n,
                                            int bound = default_enumeration_bound) {
    return int_polynomial(involution_descent_table(n, bound));
}

} // namespace descmat
