#pragma once

// Index lists, window enumerators and signed minors. All index lists are
// 1-based (matching the usual [n] conventions of the geometry); matrix
// storage stays 0-based. Enumerators emit in a fixed lexicographic order so
// downstream reports are byte-reproducible.

#include "ampli/errors.hpp"
#include "ampli/matrix.hpp"

#include <algorithm>
#include <vector>

namespace ampli {

using IndexList = std::vector<int>;

inline Integer binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Integer out = 1;
    for (long long i = 1; i <= k; ++i) {
        out *= Integer(n - k + i);
        out /= Integer(i);
    }
    return out;
}

/// Sign of the permutation sorting `list` ascending; 0 if any repeats.
inline int sort_sign(const IndexList& list) {
    int sign = 1;
    for (size_t i = 0; i < list.size(); ++i)
        for (size_t j = i + 1; j < list.size(); ++j) {
            if (list[i] == list[j]) return 0;
            if (list[i] > list[j]) sign = -sign;
        }
    return sign;
}

inline bool strictly_ascending(const IndexList& list) {
    for (size_t i = 0; i + 1 < list.size(); ++i)
        if (list[i] >= list[i + 1]) return false;
    return true;
}

inline bool in_range(const IndexList& list, int n) {
    return std::all_of(list.begin(), list.end(), [n](int i) { return i >= 1 && i <= n; });
}

/// All ascending k-element subsets of [n], lexicographic.
inline std::vector<IndexList> subsets(int n, int k) {
    std::vector<IndexList> out;
    if (k < 0 || k > n) return out;
    IndexList cur(k);
    for (int i = 0; i < k; ++i) cur[i] = i + 1;
    while (true) {
        out.push_back(cur);
        int pos = k - 1;
        while (pos >= 0 && cur[pos] == n - (k - 1 - pos)) --pos;
        if (pos < 0) break;
        ++cur[pos];
        for (int i = pos + 1; i < k; ++i) cur[i] = cur[i - 1] + 1;
    }
    if (k == 0) out.assign(1, IndexList{});
    return out;
}

/// All lists (i_1, i_1+1, ..., i_p, i_p+1) of p disjoint adjacent pairs with
/// lo <= i_1 and i_p+1 <= hi, lexicographic by the start indices.
inline std::vector<IndexList> pair_windows(int p, int lo, int hi) {
    std::vector<IndexList> out;
    if (p < 0) throw ContractError("negative pair count");
    if (p == 0) {
        out.push_back({});
        return out;
    }
    IndexList starts(p);
    auto emit = [&]() {
        IndexList w;
        w.reserve(2 * p);
        for (int s : starts) {
            w.push_back(s);
            w.push_back(s + 1);
        }
        out.push_back(std::move(w));
    };
    // starts[j] >= starts[j-1] + 2 keeps the pairs disjoint; the combined
    // list is then strictly ascending.
    auto rec = [&](auto&& self, int j, int min_start) -> void {
        for (int s = min_start; s + 1 <= hi - 2 * (p - 1 - j); ++s) {
            starts[j] = s;
            if (j + 1 == p)
                emit();
            else
                self(self, j + 1, s + 2);
        }
    };
    rec(rec, 0, lo);
    return out;
}

/// Windows indexing the polytope simplices for even m: type (a) full windows
/// in [n], then type (b) wrap lists (J, n, 1) with J a window inside [2, n-1].
inline std::vector<IndexList> window_lists_even(int n, int m) {
    if (m < 2 || m % 2 != 0) throw ContractError("window_lists_even needs even m >= 2");
    if (n < m) throw ContractError("window_lists_even needs n >= m");
    std::vector<IndexList> out = pair_windows(m / 2, 1, n);
    for (IndexList j : pair_windows((m - 2) / 2, 2, n - 1)) {
        j.push_back(n);
        j.push_back(1);
        out.push_back(std::move(j));
    }
    return out;
}

/// Windows indexing the crossing simplices for odd m: (i_1, i_1+1, ..., i_r, i_r+1).
inline std::vector<IndexList> window_lists_odd(int n, int m) {
    if (m < 1 || m % 2 != 1) throw ContractError("window_lists_odd needs odd m >= 1");
    if (n < m + 1) throw ContractError("window_lists_odd needs n >= m + 1");
    return pair_windows((m + 1) / 2, 1, n);
}

/// The B lists of the sign-flip statements for odd m: (m-1)/2 adjacent pairs.
inline std::vector<IndexList> b_windows_odd(int n, int m) {
    if (m % 2 != 1) throw ContractError("b_windows_odd needs odd m");
    return pair_windows((m - 1) / 2, 1, n);
}

/// Boundary-anchored B lists for even m: (1, pairs) and (pairs, n).
inline std::vector<IndexList> b_windows_even_anchored(int n, int m) {
    if (m % 2 != 0 || m < 2) throw ContractError("b_windows_even_anchored needs even m >= 2");
    std::vector<IndexList> out;
    for (IndexList j : pair_windows((m - 2) / 2, 2, n)) {
        IndexList w{1};
        w.insert(w.end(), j.begin(), j.end());
        out.push_back(std::move(w));
    }
    for (IndexList j : pair_windows((m - 2) / 2, 1, n - 1)) {
        j.push_back(n);
        out.push_back(std::move(j));
    }
    return out;
}

/// Plücker coordinate p_cols: minor on strictly ascending columns, |cols| = row count.
inline Rational plucker(const Matrix& m, const IndexList& cols) {
    if (static_cast<int>(cols.size()) != m.rows())
        throw ContractError("plucker: column list length must equal row count");
    if (!strictly_ascending(cols)) throw ContractError("plucker: columns must strictly ascend");
    if (!in_range(cols, m.cols())) throw ContractError("plucker: column index out of range");
    std::vector<int> zero_based(cols.size());
    for (size_t i = 0; i < cols.size(); ++i) zero_based[i] = cols[i] - 1;
    return determinant(m.select_cols(zero_based));
}

/// Antisymmetric extension of plucker: 0 on repeats, otherwise the sign of
/// the sorting permutation times the sorted minor.
inline Rational plucker_signed(const Matrix& m, const IndexList& cols) {
    if (static_cast<int>(cols.size()) != m.rows())
        throw ContractError("plucker_signed: column list length must equal row count");
    if (!in_range(cols, m.cols())) throw ContractError("plucker_signed: column index out of range");
    const int s = sort_sign(cols);
    if (s == 0) return 0;
    IndexList sorted = cols;
    std::sort(sorted.begin(), sorted.end());
    Rational v = plucker(m, sorted);
    return s > 0 ? v : Rational(-v);
}

}  // namespace ampli
