#pragma once

/*
 * The sign-reversing involution phi on the signed set S, the union over
 * k of the symmetric-matrix families with entry sum n. Every member X
 * falls into exactly one of four cases, determined by its leading index
 * m (the largest column with a non-zero entry in the first row, 1-based)
 * and the pivot entry x = X(1,m):
 *
 *   Case 1:  n > 1, m != 1, and column m is not the last column with x
 *            as its only non-zero entry. Pi1 (x alone in column m) pairs
 *            with Pi2 (column m has further non-zero entries) by
 *            deleting/inserting the interior row and column m; x stays
 *            at (1,m).
 *   Case 2:  n > 1, m = dim(X), x alone in column m. Pi1 (first row
 *            otherwise zero) pairs with Pi2 by deleting/inserting the
 *            first row and column; x moves between (1,m) and (1,m-1).
 *            The 2x2 member of Pi1 is the fixed point for even n.
 *   Case 3:  n > 1, m = 1. Pi1 (x = 1, second row zero past column 2)
 *            merges the corner into the next diagonal entry; Pi2
 *            (x > 1) splits it back out. Dimension changes by one.
 *   Case 4:  everything else: the 1x1 matrix for n = 1 (fixed), or
 *            m = 1, x = 1 with the second row alive past column 2. The
 *            first row and column are stripped, the Case 1/2 map is
 *            applied to the residue A, and the border is re-attached;
 *            if A is the Case 2 fixed point, X itself is fixed.
 *
 * Every non-fixed member maps to a member of opposite dimension parity
 * with the same entry sum, and phi(phi(X)) = X.
 */

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "descmat/enumerate.hpp"
#include "descmat/sym_matrix.hpp"

namespace descmat {

enum class case_label {
    case1_pi1,
    case1_pi2,
    case2_pi1,
    case2_pi2,
    case2_fixed,
    case3_pi1,
    case3_pi2,
    case4_recurse,
    case4_fixed,
    case4_f1,
};

inline const char* to_string(case_label label) {
    switch (label) {
        case case_label::case1_pi1: return "Case1_Pi1";
        case case_label::case1_pi2: return "Case1_Pi2";
        case case_label::case2_pi1: return "Case2_Pi1";
        case case_label::case2_pi2: return "Case2_Pi2";
        case case_label::case2_fixed: return "Case2_Fixed";
        case case_label::case3_pi1: return "Case3_Pi1";
        case case_label::case3_pi2: return "Case3_Pi2";
        case case_label::case4_recurse: return "Case4_Recurse";
        case case_label::case4_fixed: return "Case4_Fixed";
        case case_label::case4_f1: return "Case4_F1";
    }
    throw std::logic_error("to_string: bad case_label");
}

inline bool is_fixed(case_label label) {
    return label == case_label::case2_fixed || label == case_label::case4_fixed ||
           label == case_label::case4_f1;
}

// m is 1-based: the largest column index with X(1,m) != 0.
struct pivot {
    int m;
    std::int64_t x;
};

inline pivot leading_index(const sym_matrix& x) {
    for (int j = x.dim() - 1; j >= 0; --j)
        if (x.at(0, j) != 0) return {j + 1, x.at(0, j)};
    throw std::invalid_argument("leading_index: first row is all zeros");
}

struct classification {
    case_label label;
    int m;
    std::int64_t x;
    std::optional<case_label> inner; // Case 1/2 label of the residue in Case 4
};

struct phi_result {
    sym_matrix image;
    case_label label;
    int m;
    std::int64_t x;
    std::optional<case_label> inner;

    bool fixed() const { return is_fixed(label); }
};

// The unique fixed point for entry sum n.
inline sym_matrix fixed_point(int n) {
    if (n < 1) throw std::invalid_argument("fixed_point: n must be >= 1");
    if (n == 1) return sym_matrix(1, {1});
    if (n % 2 == 0) {
        const std::int64_t h = n / 2;
        return sym_matrix(2, {0, h, h, 0});
    }
    const std::int64_t h = (n - 1) / 2;
    return sym_matrix(3, {1, 0, 0, 0, 0, h, 0, h, 0});
}

namespace detail {

inline void require_member(const sym_matrix& x, const char* what) {
    if (!is_family_member(x))
        throw std::invalid_argument(std::string(what) +
                                    ": matrix has an all-zero row or zero entry sum");
}

// All indices below are 1-based to match the case formulas.
inline std::int64_t get(const sym_matrix& x, int i, int j) {
    return x.at(i - 1, j - 1);
}

inline sym_matrix build(int dim, const std::vector<std::int64_t>& cells) {
    return sym_matrix(dim, cells);
}

inline sym_matrix interior(const sym_matrix& x) {
    const int k = x.dim();
    std::vector<std::int64_t> cells;
    cells.reserve(static_cast<std::size_t>(k - 1) * (k - 1));
    for (int i = 2; i <= k; ++i)
        for (int j = 2; j <= k; ++j) cells.push_back(get(x, i, j));
    return build(k - 1, cells);
}

// corner 1, residue at rows/columns >= 2, zeros in the rest of the border
inline sym_matrix attach_border(const sym_matrix& a) {
    const int k = a.dim() + 1;
    std::vector<std::int64_t> cells(static_cast<std::size_t>(k) * k, 0);
    cells[0] = 1;
    for (int i = 1; i < k; ++i)
        for (int j = 1; j < k; ++j)
            cells[static_cast<std::size_t>(i) * k + j] = a.at(i - 1, j - 1);
    return sym_matrix(k, std::move(cells));
}

// Case 1, Pi1 -> Pi2: delete the interior row and column m. The first
// row and column only lose a trailing zero; x stays at (1,m) and (m,1).
inline sym_matrix case1_shrink(const sym_matrix& x, int m) {
    const int k = x.dim();
    std::vector<std::int64_t> cells;
    cells.reserve(static_cast<std::size_t>(k - 1) * (k - 1));
    for (int i = 1; i <= k - 1; ++i) {
        for (int j = 1; j <= k - 1; ++j) {
            std::int64_t v;
            if ((i < m && j < m) || i == 1 || j == 1)
                v = get(x, i, j);
            else if (i >= m && j < m)
                v = get(x, i + 1, j);
            else if (j >= m && i < m)
                v = get(x, i, j + 1);
            else
                v = get(x, i + 1, j + 1);
            cells.push_back(v);
        }
    }
    return build(k - 1, cells);
}

// Case 1, Pi2 -> Pi1: insert an all-zero interior row and column at m.
inline sym_matrix case1_grow(const sym_matrix& x, int m) {
    const int k = x.dim();
    std::vector<std::int64_t> cells;
    cells.reserve(static_cast<std::size_t>(k + 1) * (k + 1));
    for (int i = 1; i <= k + 1; ++i) {
        for (int j = 1; j <= k + 1; ++j) {
            std::int64_t v;
            if (i == 1)
                v = (j <= k) ? get(x, 1, j) : 0;
            else if (j == 1)
                v = (i <= k) ? get(x, i, 1) : 0;
            else if (i == m || j == m)
                v = 0;
            else
                v = get(x, i > m ? i - 1 : i, j > m ? j - 1 : j);
            cells.push_back(v);
        }
    }
    return build(k + 1, cells);
}

// Case 2, Pi1 -> Pi2: the interior block moves to the top left and x
// moves to (1, m-1).
inline sym_matrix case2_shrink(const sym_matrix& x, std::int64_t pivot_x) {
    const int k = x.dim(); // k = m >= 3
    std::vector<std::int64_t> cells;
    cells.reserve(static_cast<std::size_t>(k - 1) * (k - 1));
    for (int i = 1; i <= k - 1; ++i) {
        for (int j = 1; j <= k - 1; ++j) {
            std::int64_t v;
            if (i <= k - 2 && j <= k - 2)
                v = get(x, i + 1, j + 1);
            else if ((i == 1 && j == k - 1) || (i == k - 1 && j == 1))
                v = pivot_x;
            else
                v = 0;
            cells.push_back(v);
        }
    }
    return build(k - 1, cells);
}

// Case 2, Pi2 -> Pi1: re-insert an all-zero first row and column; x
// moves out to the new last column.
inline sym_matrix case2_grow(const sym_matrix& x, std::int64_t pivot_x) {
    const int k = x.dim(); // k = m
    std::vector<std::int64_t> cells;
    cells.reserve(static_cast<std::size_t>(k + 1) * (k + 1));
    for (int i = 1; i <= k + 1; ++i) {
        for (int j = 1; j <= k + 1; ++j) {
            std::int64_t v;
            if ((i == 1 && j == k + 1) || (i == k + 1 && j == 1))
                v = pivot_x;
            else if (i == 1 || j == 1 || i == k + 1 || j == k + 1)
                v = 0;
            else
                v = get(x, i - 1, j - 1);
            cells.push_back(v);
        }
    }
    return build(k + 1, cells);
}

// Case 3, Pi1 -> Pi2: fold the corner 1 into the next diagonal entry.
inline sym_matrix case3_shrink(const sym_matrix& x) {
    const int k = x.dim(); // k >= 2
    std::vector<std::int64_t> cells;
    cells.reserve(static_cast<std::size_t>(k - 1) * (k - 1));
    for (int i = 1; i <= k - 1; ++i)
        for (int j = 1; j <= k - 1; ++j)
            cells.push_back((i == 1 && j == 1) ? get(x, 1, 1) + get(x, 2, 2)
                                               : get(x, i + 1, j + 1));
    return build(k - 1, cells);
}

// Case 3, Pi2 -> Pi1: subtract 1 from the corner and prepend a first
// row and column that are zero except for 1 at (1,1).
inline sym_matrix case3_grow(const sym_matrix& x) {
    const int k = x.dim();
    std::vector<std::int64_t> cells(static_cast<std::size_t>(k + 1) * (k + 1), 0);
    cells[0] = 1;
    for (int i = 2; i <= k + 1; ++i)
        for (int j = 2; j <= k + 1; ++j)
            cells[static_cast<std::size_t>(i - 1) * (k + 1) + (j - 1)] =
                get(x, i - 1, j - 1);
    cells[static_cast<std::size_t>(k + 1) + 1] = get(x, 1, 1) - 1; // position (2,2)
    return sym_matrix(k + 1, std::move(cells));
}

} // namespace detail

inline classification classify(const sym_matrix& x);

namespace detail {

inline bool column_has_only_pivot(const sym_matrix& x, int m) {
    for (int i = 2; i <= x.dim(); ++i)
        if (get(x, i, m) != 0) return false;
    return true;
}

inline bool second_row_clean(const sym_matrix& x) {
    for (int j = 3; j <= x.dim(); ++j)
        if (get(x, 2, j) != 0) return false;
    return true;
}

inline bool first_row_zero_except_last(const sym_matrix& x) {
    for (int j = 1; j < x.dim(); ++j)
        if (get(x, 1, j) != 0) return false;
    return true;
}

} // namespace detail

// Assigns the unique case of the four-way partition. The predicates are
// evaluated independently and exactly one must fire; anything else is a
// defect, not an input error.
inline classification classify(const sym_matrix& x) {
    detail::require_member(x, "classify");
    const std::int64_t n = x.entry_sum();
    const int k = x.dim();
    const auto [m, px] = leading_index(x);

    const bool col_only = detail::column_has_only_pivot(x, m);
    const bool row2_clean = detail::second_row_clean(x);

    const bool c1 = n > 1 && m != 1 && !(m == k && col_only);
    const bool c2 = n > 1 && m != 1 && m == k && col_only;
    const bool c3 = n > 1 && m == 1 && (px > 1 || row2_clean);
    const bool c4 = n == 1 || (n > 1 && m == 1 && px == 1 && !row2_clean);
    if (int(c1) + int(c2) + int(c3) + int(c4) != 1)
        throw std::logic_error("classify: case predicates do not partition");

    if (c1)
        return {col_only ? case_label::case1_pi1 : case_label::case1_pi2, m, px, {}};
    if (c2) {
        if (!detail::first_row_zero_except_last(x))
            return {case_label::case2_pi2, m, px, {}};
        return {k == 2 ? case_label::case2_fixed : case_label::case2_pi1, m, px, {}};
    }
    if (c3)
        return {px > 1 ? case_label::case3_pi2 : case_label::case3_pi1, m, px, {}};

    if (n == 1) return {case_label::case4_f1, m, px, {}};
    const classification inner = classify(detail::interior(x));
    switch (inner.label) {
        case case_label::case2_fixed:
            return {case_label::case4_fixed, m, px, inner.label};
        case case_label::case1_pi1:
        case case_label::case1_pi2:
        case case_label::case2_pi1:
        case case_label::case2_pi2:
            return {case_label::case4_recurse, m, px, inner.label};
        default:
            throw std::logic_error("classify: residue fell outside Cases 1 and 2");
    }
}

namespace detail {

// The Case 1 and Case 2 maps, dispatched on a classification. Case 4
// re-uses this for its residue, which never lands anywhere else.
inline sym_matrix apply_case_1_2(const sym_matrix& x, const classification& c) {
    switch (c.label) {
        case case_label::case1_pi1: return case1_shrink(x, c.m);
        case case_label::case1_pi2: return case1_grow(x, c.m);
        case case_label::case2_pi1: return case2_shrink(x, c.x);
        case case_label::case2_pi2: return case2_grow(x, c.x);
        default:
            throw std::logic_error("apply_case_1_2: label outside Cases 1 and 2");
    }
}

} // namespace detail

inline phi_result phi(const sym_matrix& x) {
    const classification c = classify(x);
    const std::int64_t n = x.entry_sum();

    sym_matrix image = [&]() -> sym_matrix {
        switch (c.label) {
            case case_label::case1_pi1: return detail::case1_shrink(x, c.m);
            case case_label::case1_pi2: return detail::case1_grow(x, c.m);
            case case_label::case2_pi1: return detail::case2_shrink(x, c.x);
            case case_label::case2_pi2: return detail::case2_grow(x, c.x);
            case case_label::case3_pi1: return detail::case3_shrink(x);
            case case_label::case3_pi2: return detail::case3_grow(x);
            case case_label::case4_recurse: {
                // strip the border, apply the inner map once, re-attach
                const sym_matrix residue = detail::interior(x);
                return detail::attach_border(
                    detail::apply_case_1_2(residue, classify(residue)));
            }
            case case_label::case2_fixed:
            case case_label::case4_fixed:
            case case_label::case4_f1: return x;
        }
        throw std::logic_error("phi: bad case_label");
    }();

    // postcondition: same entry sum, still a member of the union
    if (image.entry_sum() != n || !is_family_member(image))
        throw std::logic_error("phi: image left the family");
    if (is_fixed(c.label)) {
        if (!(image == x)) throw std::logic_error("phi: fixed label with a moved image");
    } else {
        const int delta = image.dim() - x.dim();
        if (delta != 1 && delta != -1)
            throw std::logic_error("phi: non-fixed image must change dimension by one");
    }

    return {std::move(image), c.label, c.m, c.x, c.inner};
}

// Visits every member of the signed set with its image and trace, in
// k-then-lexicographic order. Exactly one member is fixed.
template <typename Visitor>
void pair_all(int n, Visitor&& visit, int bound = default_enumeration_bound) {
    for_each_in_signed_set(
        n, [&](const sym_matrix& x) { visit(x, phi(x)); }, bound);
}

} // namespace descmat
