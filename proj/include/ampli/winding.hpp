#pragma once

// Winding number for even m, computed by exact ray casting: a window simplex
// is hit when every Cramer coefficient of the ray direction against the
// simplex vertices is strictly positive, and each hit is weighted by the sign
// of the window twistor. Two ray modes: random generic directions (seeded,
// resampled on any vanishing test determinant) and the infinitesimal ray
// Z_n + mu Z_{n-1} + ... + mu^{m-1} Z_{n-m+1} evaluated symbolically in mu.

#include "ampli/combinatorics.hpp"
#include "ampli/errors.hpp"
#include "ampli/prng.hpp"
#include "ampli/twistor.hpp"

#include <cstdint>
#include <cstdlib>
#include <vector>

namespace ampli {

struct RayDirection {
    enum class Mode { RandomGeneric, MuInfinitesimal };
    Mode mode = Mode::RandomGeneric;
    // Coefficients of the direction sum c_i * Z_i. In MuInfinitesimal mode the
    // coefficients are implicit (c_{n-l} = mu^l for l = 0..m-1).
    std::vector<Rational> coefficients;
};

struct WindingHit {
    IndexList window;
    int orientation = 0;  // sign <Y, I>
};

struct WindingResult {
    long long signed_sum = 0;
    long long magnitude = 0;
    std::vector<WindingHit> hits;
    RayDirection ray_used;
};

/// floor((k+m-1)/2) choose m/2 - the constant value on the amplituhedron.
inline Integer winding_formula(int k, int m) {
    if (m < 2 || m % 2 != 0) throw ContractError("winding_formula needs even m >= 2");
    if (k < 1) throw ContractError("winding_formula needs k >= 1");
    return binomial((k + m - 1) / 2, m / 2);
}

namespace detail {

/// Sign of a polynomial in mu as mu -> 0+: the sign of the lowest-order
/// nonzero coefficient; 0 if all coefficients vanish.
inline int mu_limit_sign(const std::vector<Rational>& coeffs) {
    for (const Rational& c : coeffs)
        if (c != 0) return sign_of(c);
    return 0;
}

/// Replacement twistor signs for one window against a concrete ray row.
/// Returns false (non-generic) when some replacement twistor vanishes.
inline bool replacement_signs(const TwistorContext& ctx, const IndexList& window,
                              const std::vector<Rational>& ray_row, std::vector<int>& out) {
    const int m = ctx.m();
    out.resize(m);
    IndexList rest(m - 1);
    for (int p = 0; p < m; ++p) {
        for (int q = 0, t = 0; q < m; ++q)
            if (q != p) rest[t++] = window[q];
        const int s = sign_of(twistor_with_row(ctx, ray_row, rest));
        if (s == 0) return false;
        out[p] = s;
    }
    return true;
}

/// Same with the symbolic mu-ray.
inline bool replacement_signs_mu(const TwistorContext& ctx, const IndexList& window,
                                 std::vector<int>& out) {
    const int m = ctx.m();
    const int n = ctx.n();
    out.resize(m);
    IndexList rest(m - 1);
    std::vector<Rational> coeffs(m);
    for (int p = 0; p < m; ++p) {
        for (int q = 0, t = 0; q < m; ++q)
            if (q != p) rest[t++] = window[q];
        for (int l = 0; l < m; ++l) {
            std::vector<Rational> row(ctx.k() + m);
            for (int j = 0; j < ctx.k() + m; ++j) row[j] = ctx.z.matrix(n - 1 - l, j);
            coeffs[l] = twistor_with_row(ctx, row, rest);
        }
        const int s = mu_limit_sign(coeffs);
        if (s == 0)
            throw DegenerateInputError("mu-ray: all replacement coefficients vanish");
        out[p] = s;
    }
    return true;
}

}  // namespace detail

/// Elementary winding of one window: sign <Y, I> when the ray passes through
/// the open simplex S(I) (all Cramer coefficients strictly positive), else 0.
/// The p-th Cramer numerator is (-1)^{p-1} <Y, ray, I minus its p-th entry>.
inline int elementary_winding(const TwistorContext& ctx, const IndexList& window,
                              const std::vector<Rational>& ray_row) {
    const int base = sign_of(twistor(ctx, window));
    if (base == 0) throw WindingUndefinedError("window twistor vanishes");
    std::vector<int> signs;
    if (!detail::replacement_signs(ctx, window, ray_row, signs))
        throw NonGenericRayError("replacement twistor vanished");
    for (size_t p = 0; p < signs.size(); ++p) {
        const int wanted = (p % 2 == 0) ? base : -base;
        if (signs[p] != wanted) return 0;
    }
    return base;
}

/// Lift of the ray direction to R^{k+m}: sum of c_i times the Z rows.
inline std::vector<Rational> lift_ray(const PositiveZ& z, const std::vector<Rational>& coeffs) {
    if (static_cast<int>(coeffs.size()) != z.n) throw ContractError("need n ray coefficients");
    std::vector<Rational> row(z.k + z.m, Rational(0));
    for (int i = 0; i < z.n; ++i) {
        if (coeffs[i] == 0) continue;
        for (int j = 0; j < z.k + z.m; ++j) row[j] += coeffs[i] * z.matrix(i, j);
    }
    return row;
}

namespace detail {

inline void require_wcb_even(const TwistorContext& ctx) {
    if (ctx.m() % 2 != 0 || ctx.m() < 2) throw ContractError("winding needs even m >= 2");
    const CoarseReport report = coarse_boundary_report(ctx);
    if (!report.wcb)
        throw WindingUndefinedError(
            "Y lies on the coarse boundary: the origin of V_Y meets the polytope");
}

inline WindingResult collect(const TwistorContext& ctx,
                             const std::vector<std::vector<int>>& signs_per_window,
                             const std::vector<IndexList>& windows, RayDirection ray) {
    WindingResult result;
    long long sum = 0;
    for (size_t w = 0; w < windows.size(); ++w) {
        const int base = sign_of(twistor(ctx, windows[w]));
        bool hit = true;
        for (size_t p = 0; p < signs_per_window[w].size(); ++p) {
            const int wanted = (p % 2 == 0) ? base : -base;
            if (signs_per_window[w][p] != wanted) {
                hit = false;
                break;
            }
        }
        if (hit) {
            result.hits.push_back(WindingHit{windows[w], base});
            sum += base;
        }
    }
    result.signed_sum = sum;
    result.magnitude = std::llabs(sum);
    result.ray_used = std::move(ray);
    return result;
}

}  // namespace detail

/// Winding number via a random generic ray. Deterministic in (ctx, seed):
/// rays are drawn from the seeded generator and resampled (up to 64 tries)
/// whenever some test determinant vanishes.
inline WindingResult winding_number(const TwistorContext& ctx, std::uint64_t seed) {
    detail::require_wcb_even(ctx);
    const std::vector<IndexList> windows = window_lists_even(ctx.n(), ctx.m());
    Prng prng(Prng::derive(seed, 0x5EED));
    for (int attempt = 0; attempt < 64; ++attempt) {
        RayDirection ray;
        ray.mode = RayDirection::Mode::RandomGeneric;
        ray.coefficients.resize(ctx.n());
        bool nonzero = false;
        for (int i = 0; i < ctx.n(); ++i) {
            ray.coefficients[i] = Rational(prng.int_in(-9, 9));
            nonzero = nonzero || ray.coefficients[i] != 0;
        }
        if (!nonzero) continue;
        const std::vector<Rational> row = lift_ray(ctx.z, ray.coefficients);
        std::vector<std::vector<int>> signs(windows.size());
        bool generic = true;
        for (size_t w = 0; w < windows.size() && generic; ++w)
            generic = detail::replacement_signs(ctx, windows[w], row, signs[w]);
        if (!generic) continue;
        return detail::collect(ctx, signs, windows, std::move(ray));
    }
    throw NonGenericRayError("no generic ray found in 64 attempts");
}

/// Winding number along the infinitesimal ray Z_n + mu Z_{n-1} + ...; each
/// replacement twistor is a polynomial in mu and its sign as mu -> 0+ is read
/// off the lowest-order nonzero coefficient. Agrees with winding_number.
inline WindingResult mu_ray_winding(const TwistorContext& ctx) {
    detail::require_wcb_even(ctx);
    const std::vector<IndexList> windows = window_lists_even(ctx.n(), ctx.m());
    std::vector<std::vector<int>> signs(windows.size());
    for (size_t w = 0; w < windows.size(); ++w)
        detail::replacement_signs_mu(ctx, windows[w], signs[w]);
    RayDirection ray;
    ray.mode = RayDirection::Mode::MuInfinitesimal;
    return detail::collect(ctx, signs, windows, std::move(ray));
}

struct WindingFlipRelation {
    long long w_doubled = 0;
    int s = 0;
    bool consistent = false;
};

/// m = 2 relation between the winding and the sign flips of (<Y,1,i>)_i:
/// 2w = s + 1 for odd k, 2w = s for even k.
inline WindingFlipRelation winding_flip_relation_m2(const TwistorContext& ctx,
                                                    std::uint64_t seed = 0) {
    if (ctx.m() != 2) throw ContractError("relation is for m = 2");
    const WindingResult w = winding_number(ctx, seed);
    SignSequence seq = window_twistor_sequence(ctx, IndexList{1});
    WindingFlipRelation rel;
    rel.s = sign_flip_count(seq);
    rel.w_doubled = 2 * w.magnitude;
    rel.consistent = (ctx.k() % 2 == 1) ? (rel.w_doubled == rel.s + 1) : (rel.w_doubled == rel.s);
    return rel;
}

}  // namespace ampli
