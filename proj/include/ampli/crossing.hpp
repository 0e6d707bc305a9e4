#pragma once

// Crossing number for odd m: the number of distinct cells, across all window
// simplices, whose relative interior contains the origin of V_Y. The generic
// case is a pure sign test (alternating twistor signs); degenerate positions
// fall back to an exact minimal-cell search that solves the affine containment
// system for every vertex subset. Cells are identified by their sorted index
// sets, so a cell shared by several simplices is counted once.

#include "ampli/combinatorics.hpp"
#include "ampli/errors.hpp"
#include "ampli/twistor.hpp"
#include "ampli/winding.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

namespace ampli {

struct CrossingResult {
    long long count = 0;
    std::vector<IndexList> cells_hit;      // sorted index sets, ascending order
    std::vector<IndexList> simplices_hit;  // windows owning at least one hit cell
    bool degenerate = false;               // origin met a cell of dimension < m
};

/// Explicit constant value of the crossing number on the open amplituhedron.
inline Integer crossing_formula(int k, int m) {
    if (m < 1 || m % 2 != 1) throw ContractError("crossing_formula needs odd m >= 1");
    if (k < 1) throw ContractError("crossing_formula needs k >= 1");
    if (k % 2 == 1) {
        Integer b = binomial((k + m - 2) / 2, (m - 1) / 2);
        Integer num = Integer(2 * k + m - 1) * b;
        if (num % (m + 1) != 0) throw ContractError("crossing_formula: non-integer value");
        return num / (m + 1);
    }
    return 2 * binomial((k + m - 1) / 2, (m + 1) / 2);
}

/// Cramer numerators of the origin's barycentric coordinates in the window
/// simplex, up to one common factor: the a-th value is (-1)^{a+1} <Y, I\{a}>.
/// All zero exactly when the projected vertices span less than m dimensions.
inline std::vector<Rational> barycentric_signs(const TwistorContext& ctx, const IndexList& window) {
    const int m = ctx.m();
    if (m % 2 != 1) throw ContractError("barycentric_signs needs odd m");
    if (static_cast<int>(window.size()) != m + 1)
        throw ContractError("crossing window must have m+1 indices");
    std::vector<Rational> values(m + 1);
    IndexList rest(m);
    for (int a = 0; a < m + 1; ++a) {
        for (int q = 0, t = 0; q < m + 1; ++q)
            if (q != a) rest[t++] = window[q];
        Rational v = twistor(ctx, rest);
        values[a] = (a % 2 == 0) ? v : Rational(-v);
    }
    return values;
}

enum class SimplexTest { Inside, Outside, Degenerate };

/// Generic-position test: the origin lies in the open window simplex iff the
/// sequence (sign <Y, I\{i}>)_i alternates, i.e. all Cramer numerators share
/// one strict sign. Any zero is a Degenerate signal for the caller.
inline SimplexTest origin_in_simplex_alternating(const TwistorContext& ctx,
                                                 const IndexList& window) {
    const std::vector<Rational> values = barycentric_signs(ctx, window);
    int common = 0;
    for (const Rational& v : values) {
        const int s = sign_of(v);
        if (s == 0) return SimplexTest::Degenerate;
        if (common == 0) common = s;
        if (s != common) return SimplexTest::Outside;
    }
    return SimplexTest::Inside;
}

namespace detail {

/// Affine independence of the projected vertices, through Y-stacked ranks:
/// rank [Y; Z_{t_2}-Z_{t_1}; ...] must be k + |T| - 1.
inline bool affinely_independent(const TwistorContext& ctx, const IndexList& t) {
    const int k = ctx.k();
    const int d = ctx.k() + ctx.m();
    Matrix stacked(k + static_cast<int>(t.size()) - 1, d);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < d; ++j) stacked(i, j) = ctx.y.matrix(i, j);
    for (size_t r = 1; r < t.size(); ++r)
        for (int j = 0; j < d; ++j)
            stacked(k + static_cast<int>(r) - 1, j) =
                ctx.z.matrix(t[r] - 1, j) - ctx.z.matrix(t[0] - 1, j);
    return rank(stacked) == k + static_cast<int>(t.size()) - 1;
}

/// Solves for barycentric coordinates of the origin over the vertex subset T:
/// sum l_t Z_t + sum e_a Y_a = 0 and sum l_t = 1. Returns the l part when the
/// system has a unique solution, which affine independence guarantees.
inline std::optional<std::vector<Rational>> barycentric_over(const TwistorContext& ctx,
                                                             const IndexList& t) {
    const int k = ctx.k();
    const int d = ctx.k() + ctx.m();
    const int nt = static_cast<int>(t.size());
    Matrix a(d + 1, nt + k);
    std::vector<Rational> rhs(d + 1, Rational(0));
    for (int col = 0; col < nt; ++col)
        for (int row = 0; row < d; ++row) a(row, col) = ctx.z.matrix(t[col] - 1, row);
    for (int col = 0; col < k; ++col)
        for (int row = 0; row < d; ++row) a(row, nt + col) = ctx.y.matrix(col, row);
    for (int col = 0; col < nt; ++col) a(d, col) = 1;
    rhs[d] = 1;
    auto solution = solve_unique(std::move(a), std::move(rhs));
    if (!solution) return std::nullopt;
    return std::vector<Rational>(solution->begin(), solution->begin() + nt);
}

}  // namespace detail

/// Every subset T of the window whose projected vertices are affinely
/// independent and whose relative interior contains the origin of V_Y
/// (strictly positive barycentric solution summing to 1).
inline std::vector<IndexList> minimal_cells_containing_origin(const TwistorContext& ctx,
                                                              const IndexList& window) {
    if (ctx.m() % 2 != 1) throw ContractError("crossing cells need odd m");
    const int sz = static_cast<int>(window.size());
    std::vector<IndexList> found;
    for (unsigned mask = 1; mask < (1u << sz); ++mask) {
        IndexList t;
        for (int q = 0; q < sz; ++q)
            if (mask & (1u << q)) t.push_back(window[q]);
        if (!detail::affinely_independent(ctx, t)) continue;
        auto coords = detail::barycentric_over(ctx, t);
        if (!coords) continue;
        bool strict = true;
        for (const Rational& l : *coords)
            if (l <= 0) {
                strict = false;
                break;
            }
        if (strict) found.push_back(t);
    }
    return found;
}

/// Crossing number over all odd windows, deduplicated by sorted index set.
/// Fast path: windows with no vanishing Cramer numerator resolve with the
/// alternating-sign test alone; a Degenerate signal routes that window
/// through the minimal-cell search. `force_general` runs the search on every
/// window (used to cross-check the fast path).
inline CrossingResult crossing_number(const TwistorContext& ctx, bool force_general = false) {
    if (ctx.m() % 2 != 1) throw ContractError("crossing_number needs odd m");
    CrossingResult result;
    std::set<IndexList> cells;
    for (const IndexList& window : window_lists_odd(ctx.n(), ctx.m())) {
        std::vector<IndexList> here;
        if (!force_general) {
            const SimplexTest test = origin_in_simplex_alternating(ctx, window);
            if (test == SimplexTest::Inside) {
                here.push_back(window);
            } else if (test == SimplexTest::Degenerate) {
                here = minimal_cells_containing_origin(ctx, window);
            }
        } else {
            here = minimal_cells_containing_origin(ctx, window);
        }
        if (!here.empty()) result.simplices_hit.push_back(window);
        for (IndexList& cell : here) {
            if (static_cast<int>(cell.size()) < ctx.m() + 1) result.degenerate = true;
            cells.insert(std::move(cell));
        }
    }
    result.cells_hit.assign(cells.begin(), cells.end());
    result.count = static_cast<long long>(result.cells_hit.size());
    return result;
}

// ---------------------------------------------------------------------------
// Cell combinatorics: boundary test, conjugate vertex, half-space diagnostic
// ---------------------------------------------------------------------------

/// Boundary cells are descendants of a top cell anchored at 1 or at n:
/// {1} with (m-1)/2 pairs, or (m-1)/2 pairs with {n}. The pair ranges allow
/// pairs touching the opposite anchor ({1,2,n} and {1,n-1,n} are boundary:
/// they have a single ancestor simplex and a coarse window excludes them).
inline bool is_boundary_cell(const IndexList& cell, int n, int m) {
    if (m % 2 != 1) throw ContractError("cell terminology needs odd m");
    const int pairs = (m - 1) / 2;
    IndexList sorted = cell;
    std::sort(sorted.begin(), sorted.end());
    for (const IndexList& p : pair_windows(pairs, 2, n)) {
        std::set<int> anchor_front(p.begin(), p.end());
        anchor_front.insert(1);
        if (std::includes(anchor_front.begin(), anchor_front.end(), sorted.begin(), sorted.end()))
            return true;
    }
    for (const IndexList& p : pair_windows(pairs, 1, n - 1)) {
        std::set<int> anchor_back(p.begin(), p.end());
        anchor_back.insert(n);
        if (std::includes(anchor_back.begin(), anchor_back.end(), sorted.begin(), sorted.end()))
            return true;
    }
    return false;
}

/// True when `list` is a valid crossing window (disjoint adjacent pairs).
inline bool is_crossing_window(const IndexList& list, int n) {
    IndexList sorted = list;
    std::sort(sorted.begin(), sorted.end());
    return in_range(sorted, n) && is_pair_window(sorted, 1, n);
}

/// The unique other vertex completing the internal (m-1)-cell to a second
/// ancestor window simplex: min of the complement above the removed pair for
/// a lower vertex, max of the complement below it for an upper vertex.
inline int conjugate_vertex(const IndexList& cell, int i, int n) {
    IndexList sorted = cell;
    std::sort(sorted.begin(), sorted.end());
    const int m = static_cast<int>(sorted.size());  // cell has m vertices
    if (std::find(sorted.begin(), sorted.end(), i) != sorted.end())
        throw ContractError("vertex i must lie outside the cell");
    IndexList simplex = sorted;
    simplex.push_back(i);
    std::sort(simplex.begin(), simplex.end());
    if (!is_crossing_window(simplex, n)) throw ContractError("S(I,i) is not a window simplex");
    if (is_boundary_cell(sorted, n, m)) throw ContractError("cell is not internal");
    std::vector<bool> in_cell(n + 1, false);
    for (int v : sorted) in_cell[v] = true;
    // Locate i's pair in the simplex: lower member iff i+1 is in the simplex
    // and i's pair is (i, i+1) under the unique pair decomposition.
    const auto pos = std::find(simplex.begin(), simplex.end(), i) - simplex.begin();
    const bool lower = (pos % 2 == 0);
    if (lower) {
        for (int v = i + 2; v <= n; ++v)
            if (!in_cell[v]) return v;
    } else {
        const int pair_low = i - 1;
        for (int v = pair_low - 1; v >= 1; --v)
            if (!in_cell[v]) return v;
    }
    throw ContractError("no conjugate vertex: cell is not internal");
}

struct HalfSpaceDiagnostic {
    bool opposite_sides = false;
    int vertex = 0;            // i
    int conjugate = 0;         // i-bar
    int separator = 0;         // the chosen i0 inside the cell
};

/// For an internal (m-1)-cell through the origin with ancestor simplices
/// S(I,i) and S(I,i-bar): tests whether Z_i and Z_{i-bar} lie in different
/// open half spaces of the hyperplane through the cell. The side functional
/// is the twistor with B = I minus one index between i and i-bar.
inline HalfSpaceDiagnostic half_space_diagnostic(const TwistorContext& ctx,
                                                 const IndexList& cell) {
    const int n = ctx.n();
    const int m = ctx.m();
    if (static_cast<int>(cell.size()) != m)
        throw ContractError("half_space_diagnostic needs an (m-1)-cell (m vertices)");
    IndexList sorted = cell;
    std::sort(sorted.begin(), sorted.end());
    if (is_boundary_cell(sorted, n, m)) throw ContractError("cell is not internal");
    std::vector<bool> in_cell(n + 1, false);
    for (int v : sorted) in_cell[v] = true;
    std::vector<int> ancestors;
    for (int v = 1; v <= n && ancestors.size() < 3; ++v) {
        if (in_cell[v]) continue;
        IndexList simplex = sorted;
        simplex.push_back(v);
        std::sort(simplex.begin(), simplex.end());
        if (is_pair_window(simplex, 1, n)) ancestors.push_back(v);
    }
    if (ancestors.size() != 2)
        throw ContractError("internal (m-1)-cell must have exactly two ancestor simplices");
    HalfSpaceDiagnostic diag;
    diag.vertex = ancestors[0];
    diag.conjugate = ancestors[1];
    const int lo = std::min(diag.vertex, diag.conjugate);
    const int hi = std::max(diag.vertex, diag.conjugate);
    for (int v = lo + 1; v < hi; ++v)
        if (in_cell[v]) {
            diag.separator = v;
            break;
        }
    if (diag.separator == 0)
        throw ContractError("no cell vertex between the two ancestors");
    IndexList b;
    for (int v : sorted)
        if (v != diag.separator) b.push_back(v);
    IndexList list_i = b;
    list_i.push_back(diag.vertex);
    IndexList list_bar = b;
    list_bar.push_back(diag.conjugate);
    const int s1 = sign_of(twistor(ctx, list_i));
    const int s2 = sign_of(twistor(ctx, list_bar));
    if (s1 == 0 || s2 == 0)
        throw FlatConfigurationError("an ancestor simplex is flat at the cell hyperplane");
    diag.opposite_sides = (s1 != s2);
    return diag;
}

struct CrossingWindingRelation {
    long long crossing = 0;
    long long winding_plus = 0;
    long long winding_minus = 0;  // only meaningful for odd k
    long long relation_value = 0;
    bool consistent = false;
};

/// c_{n,k,m} = 2 w_{n,k,m+1} - w_{n,k,m-1} for odd k, 2 w_{n,k,m+1} for even
/// k, with all three numbers computed independently on contexts built from
/// the same C and node data. The odd-k branch needs m >= 3 (no m = 0 winding).
inline CrossingWindingRelation crossing_winding_relation(const TwistorContext* ctx_m_minus,
                                                         const TwistorContext& ctx_m,
                                                         const TwistorContext& ctx_m_plus,
                                                         std::uint64_t seed = 0) {
    const int k = ctx_m.k();
    const int m = ctx_m.m();
    if (m % 2 != 1) throw ContractError("relation needs odd m");
    if (ctx_m_plus.m() != m + 1 || ctx_m_plus.k() != k)
        throw ContractError("m+1 context has wrong shape");
    CrossingWindingRelation rel;
    rel.crossing = crossing_number(ctx_m).count;
    rel.winding_plus = winding_number(ctx_m_plus, seed).magnitude;
    if (k % 2 == 1) {
        if (m < 3) throw ContractError("odd-k relation needs m >= 3");
        if (!ctx_m_minus || ctx_m_minus->m() != m - 1 || ctx_m_minus->k() != k)
            throw ContractError("m-1 context missing or wrong shape");
        rel.winding_minus = winding_number(*ctx_m_minus, seed).magnitude;
        rel.relation_value = 2 * rel.winding_plus - rel.winding_minus;
    } else {
        rel.relation_value = 2 * rel.winding_plus;
    }
    rel.consistent = (rel.crossing == rel.relation_value);
    return rel;
}

}  // namespace ampli
