#pragma once

// The m = 2 membership oracle, labeled sample construction (inside points
// from strictly positive C, outside points by targeted sign violation), and
// the batch verification harness that reproduces the constancy theorems and
// identity suites over a seeded grid.

#include "ampli/combinatorics.hpp"
#include "ampli/crossing.hpp"
#include "ampli/errors.hpp"
#include "ampli/positivity.hpp"
#include "ampli/prng.hpp"
#include "ampli/twistor.hpp"
#include "ampli/winding.hpp"

#include <cstdint>
#include <future>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace ampli {

// ---------------------------------------------------------------------------
// m = 2 membership
// ---------------------------------------------------------------------------

enum class Verdict { Inside, Outside, CoarseBoundaryHit, Unproven };

struct MembershipVerdict {
    Verdict verdict = Verdict::Unproven;
    long long winding_magnitude = -1;  // -1 when undefined (coarse boundary hit)
    bool coarse_ok = false;
    int flips_of_first_row = -1;
};

inline const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Inside: return "Inside";
        case Verdict::Outside: return "Outside";
        case Verdict::CoarseBoundaryHit: return "CoarseBoundaryHit";
        default: return "Unproven";
    }
}

/// Y is in the m=2 amplituhedron iff it satisfies the strict coarse boundary
/// conditions and the winding is maximal, floor((k+1)/2). Points with a
/// vanishing coarse twistor get CoarseBoundaryHit: the winding is not defined
/// there and the criterion does not speak about them.
inline MembershipVerdict membership_m2(const TwistorContext& ctx, std::uint64_t seed = 0) {
    if (ctx.m() != 2) throw ContractError("membership oracle is for m = 2");
    MembershipVerdict out;
    const CoarseReport coarse = coarse_boundary_report(ctx);
    out.flips_of_first_row = sign_flip_count(window_twistor_sequence(ctx, IndexList{1}));
    if (!coarse.wcb) {
        out.verdict = Verdict::CoarseBoundaryHit;
        out.coarse_ok = false;
        return out;
    }
    out.coarse_ok = coarse.all_strict;
    out.winding_magnitude = winding_number(ctx, seed).magnitude;
    const long long maximal = (ctx.k() + 1) / 2;
    out.verdict = (out.coarse_ok && out.winding_magnitude == maximal) ? Verdict::Inside
                                                                      : Verdict::Outside;
    return out;
}

struct SignFlipMembership {
    int flips = 0;
    bool maximal = false;  // flips == k
};

inline SignFlipMembership signflip_membership_m2(const TwistorContext& ctx) {
    if (ctx.m() != 2) throw ContractError("sign-flip criterion is for m = 2");
    SignFlipMembership out;
    out.flips = sign_flip_count(window_twistor_sequence(ctx, IndexList{1}));
    out.maximal = (out.flips == ctx.k());
    return out;
}

// ---------------------------------------------------------------------------
// Seeded context sampling
// ---------------------------------------------------------------------------

/// `count` strictly increasing positive rationals i + r/8; the small jitter
/// denominators keep Bareiss intermediate growth modest.
inline std::vector<Rational> jittered_nodes(int count, Prng& prng) {
    std::vector<Rational> nodes(count);
    for (int i = 0; i < count; ++i)
        nodes[i] = Rational(i + 1) + Rational(prng.int_in(0, 7), 8);
    return nodes;
}

struct SampledContext {
    TwistorContext ctx;
    std::vector<Rational> z_nodes;
    std::vector<Rational> c_nodes;
};

inline SampledContext sample_context(int n, int k, int m, std::uint64_t seed) {
    Prng prng(Prng::derive(seed, static_cast<std::uint64_t>(n),
                           static_cast<std::uint64_t>(k), static_cast<std::uint64_t>(m)));
    SampledContext out;
    out.z_nodes = jittered_nodes(n, prng);
    out.c_nodes = jittered_nodes(k, prng);
    PositiveZ z = sample_vandermonde_z(n, k, m, out.z_nodes);
    GrassmannC c = sample_positive_c(k, n, out.c_nodes);
    out.ctx = make_context(std::move(z), std::move(c));
    return out;
}

/// The padding construction: C gains a zero column, Z one extra Vandermonde
/// row; the Y point is unchanged and every count must be too.
inline TwistorContext pad_context(const SampledContext& sampled) {
    const TwistorContext& ctx = sampled.ctx;
    Rational extra_node = sampled.z_nodes.back() + 1;
    std::vector<Rational> row(ctx.k() + ctx.m());
    Rational p = 1;
    for (int j = 0; j < ctx.k() + ctx.m(); ++j) {
        row[j] = p;
        p *= extra_node;
    }
    PositiveZ z_padded = append_z_row(ctx.z, row);
    GrassmannC c_padded = pad_with_zero_column(*ctx.c);
    return make_context(std::move(z_padded), std::move(c_padded));
}

// ---------------------------------------------------------------------------
// Labeled m = 2 sample construction
// ---------------------------------------------------------------------------

namespace detail {

/// det(Y rows 1..k-1, candidate, Z rows of `window`): the twistor of the
/// modified point as a linear function of the replaced last row.
inline Rational window_functional(const TwistorContext& base, const std::vector<Rational>& cand,
                                  const IndexList& window) {
    const int k = base.k(), m = base.m();
    Matrix stacked(k + m, k + m);
    for (int i = 0; i + 1 < k; ++i)
        for (int j = 0; j < k + m; ++j) stacked(i, j) = base.y.matrix(i, j);
    for (int j = 0; j < k + m; ++j) stacked(k - 1, j) = cand[j];
    for (int r = 0; r < m; ++r)
        for (int j = 0; j < k + m; ++j) stacked(k + r, j) = base.z.matrix(window[r] - 1, j);
    return determinant(stacked);
}

inline std::optional<TwistorContext> try_outside_candidate(const SampledContext& base,
                                                           const std::vector<Rational>& cand,
                                                           const IndexList& window) {
    const TwistorContext& ctx = base.ctx;
    const int k = ctx.k(), m = ctx.m();
    Rational f = window_functional(ctx, cand, window);
    if (f == 0) return std::nullopt;
    Matrix y(k, k + m);
    for (int i = 0; i + 1 < k; ++i)
        for (int j = 0; j < k + m; ++j) y(i, j) = ctx.y.matrix(i, j);
    for (int j = 0; j < k + m; ++j) y(k - 1, j) = -cand[j] / f;
    if (rank(y) != k) return std::nullopt;
    TwistorContext out = make_context(ctx.z, YPoint{k, m, std::move(y)});
    if (!coarse_boundary_report(out).wcb) return std::nullopt;
    return out;
}

}  // namespace detail

/// A labeled outside point of the m = 2 amplituhedron: the last Y row is
/// solved so that the first coarse window twistor is exactly -1. A negative
/// coarse twistor certifies non-membership, and the point is kept only if it
/// stays off the coarse boundary, so the label is ground truth.
inline TwistorContext construct_outside_m2(int n, int k, std::uint64_t seed) {
    SampledContext base = sample_context(n, k, 2, Prng::derive(seed, 0x0075));
    const IndexList window{1, 2};
    const int d = k + 2;
    Prng prng(Prng::derive(seed, 0xBAD5EED));
    for (int attempt = 0; attempt < 256; ++attempt) {
        std::vector<Rational> cand(d);
        if (attempt < d) {
            cand[attempt] = 1;  // coordinate vectors first, then random draws
        } else {
            for (int j = 0; j < d; ++j) cand[j] = Rational(prng.int_in(-5, 5));
        }
        bool nonzero = false;
        for (const Rational& v : cand) nonzero = nonzero || v != 0;
        if (!nonzero) continue;
        auto out = detail::try_outside_candidate(base, cand, window);
        if (out) return std::move(*out);
    }
    throw DegenerateInputError("could not construct an outside sample");
}

/// A labeled coarse-boundary point: the last Y row is a combination of Z_1
/// and Z_2, forcing <Y,1,2> = 0 exactly.
inline TwistorContext construct_coarse_hit_m2(int n, int k, std::uint64_t seed) {
    SampledContext base = sample_context(n, k, 2, Prng::derive(seed, 0x00CB));
    const TwistorContext& ctx = base.ctx;
    const int d = k + 2;
    for (int weight = 1; weight < 16; ++weight) {
        Matrix y(k, d);
        for (int i = 0; i + 1 < k; ++i)
            for (int j = 0; j < d; ++j) y(i, j) = ctx.y.matrix(i, j);
        for (int j = 0; j < d; ++j)
            y(k - 1, j) = ctx.z.matrix(0, j) + Rational(weight) * ctx.z.matrix(1, j);
        if (rank(y) != k) continue;
        return make_context(ctx.z, YPoint{k, 2, std::move(y)});
    }
    throw DegenerateInputError("could not construct a coarse-boundary sample");
}

// ---------------------------------------------------------------------------
// Identity suite (cached evaluation of all C-/Z-equations and Cauchy-Binet)
// ---------------------------------------------------------------------------

struct IdentityCheckResult {
    bool c_equations_ok = true;
    bool z_equations_ok = true;
    bool cauchy_binet_ok = true;
    long long c_equations_checked = 0;
    long long z_equations_checked = 0;
    std::string failure;
};

namespace detail {

/// Signed lookup table over a cached family of ascending-set values: the
/// value of an arbitrary list is 0 on repeats, else sorting sign times the
/// stored value.
class SignedMinorTable {
public:
    void insert(const IndexList& sorted_key, Rational value) {
        table_[sorted_key] = std::move(value);
    }
    Rational lookup(IndexList list) const {
        const int s = sort_sign(list);
        if (s == 0) return 0;
        std::sort(list.begin(), list.end());
        const auto it = table_.find(list);
        if (it == table_.end()) throw ContractError("minor table miss");
        return s > 0 ? it->second : Rational(-it->second);
    }

private:
    std::map<IndexList, Rational> table_;
};

}  // namespace detail

/// Runs every C-equation (all A, B), every Z-equation (all ascending A of
/// size k+m+1, all B) and the Cauchy-Binet cross-check on all coarse windows,
/// all with exact-zero / exact-equality expectations.
inline IdentityCheckResult run_identity_checks(const TwistorContext& ctx) {
    const int n = ctx.n(), k = ctx.k(), m = ctx.m();
    IdentityCheckResult out;

    detail::SignedMinorTable twistors;  // <Y, list> for |list| = m
    for (const IndexList& s : subsets(n, m)) twistors.insert(s, twistor(ctx, s));
    detail::SignedMinorTable pluckers;  // p_J(C) for |J| = k
    if (ctx.c)
        for (const IndexList& s : subsets(n, k)) pluckers.insert(s, plucker(ctx.c->matrix, s));
    detail::SignedMinorTable brackets;  // Z maximal minors
    for (const IndexList& s : subsets(n, k + m)) brackets.insert(s, z_bracket(ctx.z, s));

    const std::vector<IndexList> bs = subsets(n, m - 1);

    if (ctx.c && k >= 1) {
        for (const IndexList& a : subsets(n, k - 1)) {
            for (const IndexList& b : bs) {
                Rational sum = 0;
                IndexList cols = a;
                cols.push_back(0);
                IndexList list = b;
                list.push_back(0);
                for (int i = 1; i <= n; ++i) {
                    cols.back() = i;
                    Rational p = pluckers.lookup(cols);
                    if (p == 0) continue;
                    list.back() = i;
                    sum += p * twistors.lookup(list);
                }
                ++out.c_equations_checked;
                if (sum != 0) {
                    out.c_equations_ok = false;
                    std::ostringstream os;
                    os << "C-equation residual nonzero at A index set size " << a.size();
                    out.failure = os.str();
                    return out;
                }
            }
        }
    }

    if (k + m + 1 <= n) {
        for (const IndexList& a : subsets(n, k + m + 1)) {
            for (const IndexList& b : bs) {
                Rational sum = 0;
                IndexList list = b;
                list.push_back(0);
                for (size_t pos = 0; pos < a.size(); ++pos) {
                    IndexList rest;
                    rest.reserve(a.size() - 1);
                    for (size_t q = 0; q < a.size(); ++q)
                        if (q != pos) rest.push_back(a[q]);
                    Rational p = brackets.lookup(rest);
                    if (p == 0) continue;
                    list.back() = a[pos];
                    Rational t = twistors.lookup(list);
                    if (t == 0) continue;
                    sum += (pos % 2 == 0 ? -1 : 1) * p * t;
                }
                ++out.z_equations_checked;
                if (sum != 0) {
                    out.z_equations_ok = false;
                    out.failure = "Z-equation residual nonzero";
                    return out;
                }
            }
        }
    }

    if (ctx.c) {
        for (auto& [window, required] : coarse_windows(n, k, m)) {
            (void)required;
            if (twistor(ctx, window) != twistor_via_cauchy_binet(ctx, window)) {
                out.cauchy_binet_ok = false;
                out.failure = "Cauchy-Binet route disagrees";
                return out;
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Grid verification harness
// ---------------------------------------------------------------------------

struct GridCell {
    int n = 0, k = 0, m = 0;
};

struct GridSpec {
    std::vector<GridCell> cells;
    int seeds = 25;
    bool identities = true;    // full identity suite on cells with n <= identity_max_n
    int identity_max_n = 7;
};

/// The default grid: the theorem-reproduction cells for m in {1..4},
/// k in 1..4, n from k+m to k+m+3, plus the m = 5, k <= 2 stretch cells.
inline GridSpec default_grid(int seeds) {
    GridSpec grid;
    grid.seeds = seeds;
    for (int m = 1; m <= 4; ++m)
        for (int k = 1; k <= 4; ++k)
            for (int n = k + m; n <= k + m + 3; ++n) {
                if (m % 2 == 1 && n < m + 1) continue;  // crossing windows need n > m
                grid.cells.push_back({n, k, m});
            }
    for (int k = 1; k <= 2; ++k)
        for (int n = k + 5; n <= k + 5 + 1; ++n) grid.cells.push_back({n, k, 5});
    return grid;
}

struct CaseReport {
    GridCell cell;
    std::uint64_t seed = 0;
    std::string quantity;      // "winding" or "crossing"
    long long computed = -1;
    long long formula = -1;
    bool theorem_ok = false;
    bool padding_ok = false;
    bool cross_method_ok = false;  // mu-ray (even m) / alternating fast path (odd m)
    bool sign_flips_ok = false;
    bool coarse_strict_ok = false;
    bool identities_ok = true;
    bool identities_ran = false;
    bool pass = false;
    std::string failure;
};

struct VerificationReport {
    GridSpec grid;
    std::vector<CaseReport> cases;
    long long passed = 0;
    long long failed = 0;
    bool all_pass = false;
    // Minimized dump of the first failing case, if any.
    std::optional<SampledContext> failing_context;
};

inline CaseReport run_grid_case(const GridCell& cell, std::uint64_t seed,
                                const GridSpec& grid, SampledContext& sampled_out) {
    CaseReport report;
    report.cell = cell;
    report.seed = seed;
    sampled_out = sample_context(cell.n, cell.k, cell.m, seed);
    const TwistorContext& ctx = sampled_out.ctx;

    const CoarseReport coarse = coarse_boundary_report(ctx);
    report.coarse_strict_ok = coarse.all_strict;

    // Sign flips: every valid B window sequence must flip exactly k times.
    report.sign_flips_ok = true;
    const std::vector<IndexList> b_lists = (cell.m % 2 == 1)
                                               ? b_windows_odd(cell.n, cell.m)
                                               : b_windows_even_anchored(cell.n, cell.m);
    for (const IndexList& b : b_lists) {
        if (sign_flip_count(window_twistor_sequence(ctx, b)) != cell.k) {
            report.sign_flips_ok = false;
            report.failure = "sign flip count differs from k";
            break;
        }
    }

    const TwistorContext padded = pad_context(sampled_out);
    if (cell.m % 2 == 0) {
        report.quantity = "winding";
        const WindingResult w = winding_number(ctx, seed);
        report.computed = w.magnitude;
        report.formula = static_cast<long long>(winding_formula(cell.k, cell.m));
        report.theorem_ok = (report.computed == report.formula);
        report.padding_ok = (winding_number(padded, seed).magnitude == report.computed);
        report.cross_method_ok = (mu_ray_winding(ctx).signed_sum == w.signed_sum);
    } else {
        report.quantity = "crossing";
        const CrossingResult c = crossing_number(ctx);
        report.computed = c.count;
        report.formula = static_cast<long long>(crossing_formula(cell.k, cell.m));
        report.theorem_ok = (report.computed == report.formula);
        report.padding_ok = (crossing_number(padded).count == report.computed);
        report.cross_method_ok = (crossing_number(ctx, /*force_general=*/true).count == c.count);
    }

    if (grid.identities && cell.n <= grid.identity_max_n) {
        const IdentityCheckResult identities = run_identity_checks(ctx);
        report.identities_ran = true;
        report.identities_ok =
            identities.c_equations_ok && identities.z_equations_ok && identities.cauchy_binet_ok;
        if (!report.identities_ok) report.failure = identities.failure;
    }

    report.pass = report.theorem_ok && report.padding_ok && report.cross_method_ok &&
                  report.sign_flips_ok && report.coarse_strict_ok && report.identities_ok;
    if (!report.pass && report.failure.empty()) {
        if (!report.theorem_ok)
            report.failure = "computed value differs from formula";
        else if (!report.padding_ok)
            report.failure = "padding changed the value";
        else if (!report.cross_method_ok)
            report.failure = "cross-method disagreement";
        else
            report.failure = "coarse boundary not strict";
    }
    return report;
}

/// Runs the whole grid, cells in parallel. Deterministic regardless of
/// scheduling: per-cell work is seed-driven and results merge in grid order,
/// so identical grid and seeds produce an identical report.
inline VerificationReport verify_theorems(const GridSpec& grid) {
    struct CellOutcome {
        std::vector<CaseReport> cases;
        std::optional<SampledContext> first_failure;
    };
    auto run_cell = [&grid](const GridCell& cell) {
        CellOutcome outcome;
        for (int s = 0; s < grid.seeds; ++s) {
            SampledContext sampled;
            CaseReport c = run_grid_case(cell, static_cast<std::uint64_t>(s), grid, sampled);
            if (!c.pass && !outcome.first_failure) outcome.first_failure = std::move(sampled);
            outcome.cases.push_back(std::move(c));
        }
        return outcome;
    };
    std::vector<std::future<CellOutcome>> futures;
    futures.reserve(grid.cells.size());
    for (const GridCell& cell : grid.cells)
        futures.push_back(std::async(std::launch::async | std::launch::deferred, run_cell, cell));
    VerificationReport report;
    report.grid = grid;
    for (auto& future : futures) {
        CellOutcome outcome = future.get();
        for (CaseReport& c : outcome.cases) {
            if (c.pass)
                ++report.passed;
            else
                ++report.failed;
            report.cases.push_back(std::move(c));
        }
        if (!report.failing_context && outcome.first_failure)
            report.failing_context = std::move(*outcome.first_failure);
    }
    report.all_pass = (report.failed == 0);
    return report;
}

}  // namespace ampli
