#pragma once

// Twistor coordinates <Y, i_1, ..., i_m> and everything built directly from
// their signs: the Cauchy-Binet expansion, coarse boundary conditions, sign
// flip counting, the forbidden vanishing patterns, and the C- and Z-equation
// residuals. All values are exact; a sign is 0 exactly when the determinant
// vanishes.

#include "ampli/combinatorics.hpp"
#include "ampli/errors.hpp"
#include "ampli/positivity.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ampli {

struct TwistorContext {
    PositiveZ z;
    YPoint y;
    std::optional<GrassmannC> c;

    int n() const { return z.n; }
    int k() const { return z.k; }
    int m() const { return z.m; }
};

inline TwistorContext make_context(PositiveZ z, GrassmannC c) {
    YPoint y = apply_map(c, z);
    return TwistorContext{std::move(z), std::move(y), std::move(c)};
}

inline TwistorContext make_context(PositiveZ z, YPoint y) {
    if (y.k != z.k || y.m != z.m) throw ContractError("Y and Z dimensions disagree");
    return TwistorContext{std::move(z), std::move(y), std::nullopt};
}

/// Determinant of the selected Z rows, in the given order (antisymmetric;
/// repeats give 0). Row list length must be k+m.
inline Rational z_bracket(const PositiveZ& z, const IndexList& rows) {
    if (static_cast<int>(rows.size()) != z.k + z.m)
        throw ContractError("z_bracket: need k+m row indices");
    if (!in_range(rows, z.n)) throw ContractError("z_bracket: row index out of range");
    std::vector<int> zero_based(rows.size());
    for (size_t i = 0; i < rows.size(); ++i) zero_based[i] = rows[i] - 1;
    return determinant(z.matrix.select_rows(zero_based));
}

/// <Y, i_1, ..., i_m>: determinant of the k Y rows stacked over the m chosen
/// Z rows. Fixed by the stored Y representative up to one global factor.
inline Rational twistor(const TwistorContext& ctx, const IndexList& list) {
    const int k = ctx.k(), m = ctx.m();
    if (static_cast<int>(list.size()) != m) throw ContractError("twistor: need m indices");
    if (!in_range(list, ctx.n())) throw ContractError("twistor: index out of range");
    if (sort_sign(list) == 0 && !list.empty()) return 0;  // repeated rows
    Matrix stacked(k + m, k + m);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k + m; ++j) stacked(i, j) = ctx.y.matrix(i, j);
    for (int r = 0; r < m; ++r)
        for (int j = 0; j < k + m; ++j) stacked(k + r, j) = ctx.z.matrix(list[r] - 1, j);
    return determinant(stacked);
}

/// Same twistor with one extra generic row inserted between Y and the Z rows;
/// `list` then has m-1 indices. Used by the ray tests.
inline Rational twistor_with_row(const TwistorContext& ctx, const std::vector<Rational>& row,
                                 const IndexList& list) {
    const int k = ctx.k(), m = ctx.m();
    if (static_cast<int>(list.size()) != m - 1)
        throw ContractError("twistor_with_row: need m-1 indices");
    Matrix stacked(k + m, k + m);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k + m; ++j) stacked(i, j) = ctx.y.matrix(i, j);
    for (int j = 0; j < k + m; ++j) stacked(k, j) = row[j];
    for (int r = 0; r + 1 < m; ++r)
        for (int j = 0; j < k + m; ++j) stacked(k + 1 + r, j) = ctx.z.matrix(list[r] - 1, j);
    return determinant(stacked);
}

/// Cauchy-Binet route: sum over all k-subsets J of p_J(C) <J, list>. Must
/// agree with twistor() exactly; the two code paths share nothing past the
/// determinant kernel.
inline Rational twistor_via_cauchy_binet(const TwistorContext& ctx, const IndexList& list) {
    if (!ctx.c) throw ContractError("cauchy-binet route needs C");
    if (static_cast<int>(list.size()) != ctx.m())
        throw ContractError("twistor_via_cauchy_binet: need m indices");
    Rational sum = 0;
    for (const IndexList& j : subsets(ctx.n(), ctx.k())) {
        Rational p = plucker(ctx.c->matrix, j);
        if (p == 0) continue;
        IndexList rows = j;
        rows.insert(rows.end(), list.begin(), list.end());
        sum += p * z_bracket(ctx.z, rows);
    }
    return sum;
}

// ---------------------------------------------------------------------------
// Coarse boundary conditions
// ---------------------------------------------------------------------------

struct CoarseEntry {
    IndexList window;
    Rational value;
    int required_sign = 1;  // condition is required_sign * value >= 0
    bool zero = false;
    bool ok_nonstrict = false;
    bool ok_strict = false;
};

struct CoarseReport {
    std::vector<CoarseEntry> entries;
    bool wcb = false;           // no coarse twistor vanishes
    bool all_nonstrict = false;
    bool all_strict = false;
};

/// The coarse windows with their required sign multiplier, in report order.
inline std::vector<std::pair<IndexList, int>> coarse_windows(int n, int k, int m) {
    std::vector<std::pair<IndexList, int>> out;
    if (m % 2 == 0) {
        for (IndexList w : pair_windows(m / 2, 1, n)) out.emplace_back(std::move(w), 1);
        const int wrap_sign = (k % 2 == 0) ? -1 : 1;  // (-1)^(k+1)
        for (IndexList j : pair_windows((m - 2) / 2, 2, n - 1)) {
            j.push_back(n);
            j.push_back(1);
            out.emplace_back(std::move(j), wrap_sign);
        }
    } else {
        const int front_sign = (k % 2 == 0) ? 1 : -1;  // (-1)^k
        for (IndexList j : pair_windows((m - 1) / 2, 2, n)) {
            IndexList w{1};
            w.insert(w.end(), j.begin(), j.end());
            out.emplace_back(std::move(w), front_sign);
        }
        for (IndexList j : pair_windows((m - 1) / 2, 1, n - 1)) {
            j.push_back(n);
            out.emplace_back(std::move(j), 1);
        }
    }
    return out;
}

inline CoarseReport coarse_boundary_report(const TwistorContext& ctx) {
    CoarseReport report;
    report.wcb = true;
    report.all_nonstrict = true;
    report.all_strict = true;
    for (auto& [window, required] : coarse_windows(ctx.n(), ctx.k(), ctx.m())) {
        CoarseEntry e;
        e.window = window;
        e.value = twistor(ctx, window);
        e.required_sign = required;
        const int s = sign_of(e.value) * required;
        e.zero = (s == 0);
        e.ok_nonstrict = (s >= 0);
        e.ok_strict = (s > 0);
        report.wcb = report.wcb && !e.zero;
        report.all_nonstrict = report.all_nonstrict && e.ok_nonstrict;
        report.all_strict = report.all_strict && e.ok_strict;
        report.entries.push_back(std::move(e));
    }
    return report;
}

// ---------------------------------------------------------------------------
// Sign sequences over a fixed window B
// ---------------------------------------------------------------------------

struct SignSequence {
    std::vector<int> signs;   // length n, indexed by i-1; zeros recorded, never dropped
    IndexList source_window;  // the B list
};

/// True when `b` is a disjoint union of adjacent pairs (i, i+1), forming a
/// strictly ascending list (touching pairs like (2,3,4,5) are allowed).
inline bool is_pair_window(const IndexList& b, int lo, int hi) {
    if (b.size() % 2 != 0) return false;
    for (size_t t = 0; t < b.size(); t += 2) {
        if (b[t] < lo || b[t] + 1 > hi) return false;
        if (b[t + 1] != b[t] + 1) return false;
        if (t > 0 && b[t] <= b[t - 1]) return false;
    }
    return true;
}

inline void validate_b_window(const IndexList& b, int n, int m) {
    if (static_cast<int>(b.size()) != m - 1) throw ContractError("B must have m-1 entries");
    if (m % 2 == 1) {
        if (!is_pair_window(b, 1, n)) throw ContractError("B must be a union of adjacent pairs");
        return;
    }
    // Even m: boundary-anchored forms (1, pairs) or (pairs, n).
    const bool front = !b.empty() && b.front() == 1 &&
                       is_pair_window(IndexList(b.begin() + 1, b.end()), 2, n);
    const bool back = !b.empty() && b.back() == n &&
                      is_pair_window(IndexList(b.begin(), b.end() - 1), 1, n - 1);
    if (!front && !back) throw ContractError("even-m B must be anchored at 1 or at n");
}

/// Signs of <Y, B, i> for i = 1..n. Entries at i in B are 0 (repeated row).
inline SignSequence window_twistor_sequence(const TwistorContext& ctx, const IndexList& b) {
    validate_b_window(b, ctx.n(), ctx.m());
    SignSequence seq;
    seq.source_window = b;
    seq.signs.resize(ctx.n());
    IndexList list = b;
    list.push_back(0);
    for (int i = 1; i <= ctx.n(); ++i) {
        list.back() = i;
        seq.signs[i - 1] = sign_of(twistor(ctx, list));
    }
    return seq;
}

/// Number of sign changes along the sequence, ignoring the zeros.
inline int sign_flip_count(const std::vector<int>& signs) {
    int flips = 0;
    int last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++flips;
        last = s;
    }
    return flips;
}

inline int sign_flip_count(const SignSequence& seq) { return sign_flip_count(seq.signs); }

struct ForbiddenCheck {
    bool ok = true;
    std::string violation;  // empty when ok
    int at = 0;             // offending index i0 (1-based)
};

/// Checks the two impossible vanishing patterns on the sequence restricted to
/// i outside B: a zero flanked by equal nonzero signs (neighbors resolved
/// within the complement of B), and two consecutive zeros.
inline ForbiddenCheck forbidden_vanishing_check(const SignSequence& seq) {
    const int n = static_cast<int>(seq.signs.size());
    std::vector<bool> in_b(n + 1, false);
    for (int b : seq.source_window) in_b[b] = true;
    std::vector<int> positions;  // the complement of B, ascending
    for (int i = 1; i <= n; ++i)
        if (!in_b[i]) positions.push_back(i);
    for (size_t t = 0; t < positions.size(); ++t) {
        const int i0 = positions[t];
        if (seq.signs[i0 - 1] != 0) continue;
        if (t + 1 < positions.size() && seq.signs[positions[t + 1] - 1] == 0)
            return {false, "two consecutive zeros", i0};
        if (t > 0 && t + 1 < positions.size()) {
            const int before = seq.signs[positions[t - 1] - 1];
            const int after = seq.signs[positions[t + 1] - 1];
            if (before != 0 && before == after)
                return {false, "zero flanked by equal nonzero signs", i0};
        }
    }
    return {};
}

// ---------------------------------------------------------------------------
// C- and Z-equations
// ---------------------------------------------------------------------------

/// sum_i p_{A,i}(C) <Y, B, i>; exactly 0 for every C, Z of compatible shape.
inline Rational c_equation_residual(const TwistorContext& ctx, const IndexList& a,
                                    const IndexList& b) {
    if (!ctx.c) throw ContractError("C-equation needs C");
    if (ctx.k() < 1) throw ContractError("C-equation needs k >= 1");
    if (static_cast<int>(a.size()) != ctx.k() - 1) throw ContractError("A must have k-1 entries");
    if (static_cast<int>(b.size()) != ctx.m() - 1) throw ContractError("B must have m-1 entries");
    Rational sum = 0;
    IndexList cols = a;
    cols.push_back(0);
    IndexList list = b;
    list.push_back(0);
    for (int i = 1; i <= ctx.n(); ++i) {
        cols.back() = i;
        Rational p = plucker_signed(ctx.c->matrix, cols);
        if (p == 0) continue;
        list.back() = i;
        sum += p * twistor(ctx, list);
    }
    return sum;
}

/// sum_{i in A} (-1)^{#i} p_{A\i}(W) <Y, B, i> with W = Z^T; exactly 0.
inline Rational z_equation_residual(const TwistorContext& ctx, const IndexList& a,
                                    const IndexList& b) {
    if (static_cast<int>(a.size()) != ctx.k() + ctx.m() + 1)
        throw ContractError("A must have k+m+1 entries");
    if (!strictly_ascending(a)) throw ContractError("A must strictly ascend");
    if (static_cast<int>(b.size()) != ctx.m() - 1) throw ContractError("B must have m-1 entries");
    Rational sum = 0;
    IndexList list = b;
    list.push_back(0);
    for (size_t pos = 0; pos < a.size(); ++pos) {
        IndexList rest;
        rest.reserve(a.size() - 1);
        for (size_t q = 0; q < a.size(); ++q)
            if (q != pos) rest.push_back(a[q]);
        Rational p = z_bracket(ctx.z, rest);
        if (p == 0) continue;
        list.back() = a[pos];
        Rational t = twistor(ctx, list);
        if (t == 0) continue;
        const int term_sign = (pos % 2 == 0) ? -1 : 1;  // (-1)^{#i}, #i 1-based
        sum += term_sign * p * t;
    }
    return sum;
}

}  // namespace ampli
