#include "ampli/membership.hpp"
#include "ampli/twistor.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace ampli;

namespace {

std::vector<Rational> nodes(std::initializer_list<int> vals) {
    std::vector<Rational> out;
    for (int v : vals) out.emplace_back(v);
    return out;
}

// The running example: n=3, k=1, m=1, Z Vandermonde(1,2,3), C = (1 1 1),
// Y = (3, 6). Twistors <Y,1> = -3, <Y,2> = 0, <Y,3> = 3.
TwistorContext line_context() {
    return make_context(sample_vandermonde_z(3, 1, 1, nodes({1, 2, 3})),
                        sample_positive_c(1, 3, nodes({1})));
}

}  // namespace

TEST(Twistor, RunningLineExample) {
    TwistorContext ctx = line_context();
    EXPECT_EQ(ctx.y.matrix(0, 0), Rational(3));
    EXPECT_EQ(ctx.y.matrix(0, 1), Rational(6));
    EXPECT_EQ(twistor(ctx, {1}), Rational(-3));
    EXPECT_EQ(twistor(ctx, {2}), Rational(0));
    EXPECT_EQ(twistor(ctx, {3}), Rational(3));
}

TEST(Twistor, ContractViolations) {
    SampledContext s = sample_context(5, 2, 2, 0);
    EXPECT_THROW(twistor(s.ctx, {1}), ContractError);          // wrong length
    EXPECT_THROW(twistor(s.ctx, {1, 6}), ContractError);       // out of range
    EXPECT_THROW(window_twistor_sequence(s.ctx, {2}), ContractError);  // not anchored
    TwistorContext no_c = make_context(s.ctx.z, s.ctx.y);
    EXPECT_THROW(twistor_via_cauchy_binet(no_c, {1, 2}), ContractError);
    EXPECT_THROW(c_equation_residual(no_c, {1}, {1}), ContractError);
}

TEST(Twistor, RepeatedIndexGivesZero) {
    SampledContext s = sample_context(6, 2, 3, 1);
    EXPECT_EQ(twistor(s.ctx, {2, 2, 5}), Rational(0));
    EXPECT_EQ(twistor(s.ctx, {4, 1, 4}), Rational(0));
}

TEST(Twistor, AntisymmetryUnderPermutations) {
    SampledContext s = sample_context(6, 2, 3, 2);
    Prng prng(99);
    for (int trial = 0; trial < 30; ++trial) {
        IndexList list(3);
        for (int& v : list) v = 1 + static_cast<int>(prng.below(6));
        IndexList shuffled = list;
        for (int i = 2; i > 0; --i)
            std::swap(shuffled[i], shuffled[prng.below(static_cast<std::uint64_t>(i) + 1)]);
        const int s_orig = sort_sign(list);
        const int s_shuf = sort_sign(shuffled);
        if (s_orig == 0) {
            EXPECT_EQ(twistor(s.ctx, shuffled), Rational(0));
        } else {
            Rational lhs = twistor(s.ctx, shuffled);
            Rational rhs = twistor(s.ctx, list);
            EXPECT_EQ(lhs, s_orig == s_shuf ? rhs : Rational(-rhs));
        }
    }
}

TEST(Twistor, KZeroEdgeIsZMaximalMinor) {
    // k = 0: <i_1,...,i_m> is just the maximal minor of Z, positive ascending.
    PositiveZ z = sample_vandermonde_z(5, 0, 3, nodes({1, 2, 3, 4, 5}));
    TwistorContext ctx = make_context(z, YPoint{0, 3, Matrix(0, 3)});
    for (const IndexList& rows : subsets(5, 3)) {
        EXPECT_EQ(twistor(ctx, rows), z_bracket(z, rows));
        EXPECT_GT(twistor(ctx, rows), 0);
    }
}

TEST(CauchyBinet, MatchesDirectRouteOnLineExample) {
    TwistorContext ctx = line_context();
    for (int i = 1; i <= 3; ++i)
        EXPECT_EQ(twistor_via_cauchy_binet(ctx, {i}), twistor(ctx, {i}));
}

TEST(CauchyBinet, KZeroSingleTerm) {
    PositiveZ z = sample_vandermonde_z(4, 0, 2, nodes({1, 2, 3, 4}));
    GrassmannC c{0, 4, Matrix(0, 4), PositivityClass::StrictlyPositive};
    TwistorContext ctx{z, YPoint{0, 2, Matrix(0, 2)}, c};
    EXPECT_EQ(twistor_via_cauchy_binet(ctx, {2, 4}), z_bracket(z, {2, 4}));
}

TEST(CauchyBinet, ExactEqualityOnRandomCertifiedContexts) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        SampledContext s = sample_context(6, 2, 2, seed);
        for (auto& [window, required] : coarse_windows(6, 2, 2)) {
            (void)required;
            EXPECT_EQ(twistor(s.ctx, window), twistor_via_cauchy_binet(s.ctx, window));
        }
    }
}

TEST(CoarseBoundary, StrictlyPositiveCGivesStrictInequalities) {
    for (auto [n, k, m] : {std::tuple{5, 2, 2}, {6, 3, 2}, {5, 1, 3}, {6, 2, 3}}) {
        SampledContext s = sample_context(n, k, m, 3);
        const CoarseReport report = coarse_boundary_report(s.ctx);
        EXPECT_TRUE(report.all_strict) << "n=" << n << " k=" << k << " m=" << m;
        EXPECT_TRUE(report.wcb);
    }
}

TEST(CoarseBoundary, LineExampleSignsAndWindows) {
    TwistorContext ctx = line_context();
    const CoarseReport report = coarse_boundary_report(ctx);
    // m=1 coarse windows: (-1)^k <Y,1> >= 0 and <Y,n> >= 0.
    ASSERT_EQ(report.entries.size(), 2u);
    EXPECT_EQ(report.entries[0].window, IndexList{1});
    EXPECT_EQ(report.entries[0].required_sign, -1);  // k = 1
    EXPECT_EQ(report.entries[0].value, Rational(-3));
    EXPECT_TRUE(report.entries[0].ok_strict);
    EXPECT_EQ(report.entries[1].window, IndexList{3});
    EXPECT_EQ(report.entries[1].value, Rational(3));
    EXPECT_TRUE(report.entries[1].ok_strict);
    EXPECT_TRUE(report.all_strict);
}

TEST(CoarseBoundary, ViolationIsFlagged) {
    TwistorContext bad = construct_outside_m2(4, 1, 5);
    const CoarseReport report = coarse_boundary_report(bad);
    EXPECT_TRUE(report.wcb);
    EXPECT_FALSE(report.all_nonstrict);
}

TEST(SignFlips, CountingSkipsZeros) {
    EXPECT_EQ(sign_flip_count(std::vector<int>{1, 1, 1}), 0);
    EXPECT_EQ(sign_flip_count(std::vector<int>{1, 0, -1, 1}), 2);
    EXPECT_EQ(sign_flip_count(std::vector<int>{0, 0}), 0);
    EXPECT_EQ(sign_flip_count(std::vector<int>{-1, 0, 1}), 1);
}

TEST(SignFlips, LineExampleHasExactlyK) {
    TwistorContext ctx = line_context();
    SignSequence seq = window_twistor_sequence(ctx, IndexList{});
    EXPECT_EQ(seq.signs, (std::vector<int>{-1, 0, 1}));
    EXPECT_EQ(sign_flip_count(seq), 1);
}

TEST(SignFlips, WindowSequencesOnInteriorSamplesFlipExactlyK) {
    for (auto [n, k, m] : {std::tuple{6, 1, 3}, {6, 2, 3}, {7, 3, 3}, {5, 2, 1}, {6, 4, 1}}) {
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            SampledContext s = sample_context(n, k, m, seed);
            for (const IndexList& b : b_windows_odd(n, m))
                EXPECT_EQ(sign_flip_count(window_twistor_sequence(s.ctx, b)), k)
                    << "n=" << n << " k=" << k << " m=" << m << " seed=" << seed;
        }
    }
}

TEST(SignFlips, EvenMAnchoredSequencesFlipExactlyK) {
    // The even-m flip count statement needs boundary-anchored B lists; spot
    // check a few shapes.
    for (auto [n, k] : {std::pair{5, 1}, {6, 2}, {6, 3}}) {
        SampledContext s = sample_context(n, k, 2, 11);
        for (const IndexList& b : b_windows_even_anchored(n, 2))
            EXPECT_EQ(sign_flip_count(window_twistor_sequence(s.ctx, b)), k);
    }
}

TEST(SignFlips, SequenceZerosSitAtWindowIndices) {
    SampledContext s = sample_context(6, 1, 3, 4);
    SignSequence seq = window_twistor_sequence(s.ctx, IndexList{2, 3});
    EXPECT_EQ(seq.signs[1], 0);
    EXPECT_EQ(seq.signs[2], 0);
    EXPECT_EQ(seq.signs.size(), 6u);
}

TEST(SignFlips, UpperBoundOnArbitraryPoints) {
    // Flips <= k for any Y, sampled over unconstrained representatives.
    Prng prng(321);
    int checked = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const int k = 1 + static_cast<int>(prng.below(3));
        const int m = 1 + 2 * static_cast<int>(prng.below(2));  // 1 or 3
        const int n = k + m + 1 + static_cast<int>(prng.below(2));
        SampledContext s = sample_context(n, k, m, trial);
        Matrix y(k, k + m);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k + m; ++j) y(i, j) = Rational(prng.int_in(-9, 9));
        if (rank(y) != k) continue;
        TwistorContext ctx = make_context(s.ctx.z, YPoint{k, m, std::move(y)});
        for (const IndexList& b : b_windows_odd(n, m))
            EXPECT_LE(sign_flip_count(window_twistor_sequence(ctx, b)), k);
        ++checked;
    }
    EXPECT_GT(checked, 150);
}

TEST(ForbiddenVanishing, PatternsOnHandSequences) {
    SignSequence ok;
    ok.signs = {1, 0, -1};
    EXPECT_TRUE(forbidden_vanishing_check(ok).ok);

    SignSequence flanked;
    flanked.signs = {1, 0, 1};
    const ForbiddenCheck c1 = forbidden_vanishing_check(flanked);
    EXPECT_FALSE(c1.ok);
    EXPECT_EQ(c1.violation, "zero flanked by equal nonzero signs");

    SignSequence double_zero;
    double_zero.signs = {1, 0, 0, -1};
    const ForbiddenCheck c2 = forbidden_vanishing_check(double_zero);
    EXPECT_FALSE(c2.ok);
    EXPECT_EQ(c2.violation, "two consecutive zeros");
}

TEST(ForbiddenVanishing, NeighborResolutionSkipsWindowIndices) {
    // B = (2,3): restricted positions are 1, 4, 5; a zero at 4 flanked by
    // equal signs at 1 and 5 is the forbidden pattern even though 2, 3 sit in
    // between in [n].
    SignSequence seq;
    seq.source_window = {2, 3};
    seq.signs = {1, 0, 0, 0, 1};
    const ForbiddenCheck check = forbidden_vanishing_check(seq);
    EXPECT_FALSE(check.ok);
    EXPECT_EQ(check.at, 4);
    EXPECT_EQ(check.violation, "zero flanked by equal nonzero signs");
}

TEST(ForbiddenVanishing, SupportCollapseZerosAreBenign) {
    // Boundary points whose column support collapses to {1,2,a,b} with a, b
    // non-adjacent: the B = (1,2) sequence vanishes exactly at a and b with a
    // sign change through each zero. Both patterns must stay absent, and the
    // suite must actually see the zeros.
    int zero_bearing = 0;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const int k = 2, m = 3, n = 7;
        GrassmannC c = sample_tnn_support_collapse_c(k, n, {1, 2, 4, 6}, seed);
        Prng p(Prng::derive(seed, 0xA11CE));
        PositiveZ z = sample_vandermonde_z(n, k, m, jittered_nodes(n, p));
        TwistorContext ctx = make_context(z, c);
        bool saw_zero = false;
        for (const IndexList& b : b_windows_odd(n, m)) {
            SignSequence seq = window_twistor_sequence(ctx, b);
            EXPECT_TRUE(forbidden_vanishing_check(seq).ok);
            std::vector<bool> in_b(n + 1, false);
            for (int v : b) in_b[v] = true;
            for (int i = 1; i <= n; ++i)
                if (!in_b[i] && seq.signs[i - 1] == 0) saw_zero = true;
        }
        if (saw_zero) ++zero_bearing;
    }
    EXPECT_EQ(zero_bearing, 10);
}

TEST(ForbiddenVanishing, CheckerFlagsAdjacentSelectionStratum) {
    // The literal closed-amplituhedron phrasing fails on deep strata: the
    // k=2 point spanned by Z_3, Z_4 has <Y,j> = <3,4,j>, zero exactly at the
    // adjacent positions 3 and 4. The checker must detect the pattern.
    GrassmannC c = sample_tnn_support_collapse_c(2, 6, {3, 4}, 0);
    Prng p(Prng::derive(0, 0xA11CE));
    PositiveZ z = sample_vandermonde_z(6, 2, 1, jittered_nodes(6, p));
    TwistorContext ctx = make_context(z, c);
    SignSequence seq = window_twistor_sequence(ctx, IndexList{});
    EXPECT_EQ(seq.signs[2], 0);
    EXPECT_EQ(seq.signs[3], 0);
    const ForbiddenCheck check = forbidden_vanishing_check(seq);
    EXPECT_FALSE(check.ok);
    EXPECT_EQ(check.violation, "two consecutive zeros");
    // The k-flip structure that rules these patterns out elsewhere is gone.
    EXPECT_LT(sign_flip_count(seq), 2);
}

TEST(ForbiddenVanishing, HoldsOnInteriorSamplesWithZeros) {
    // Interior points can have vanishing middle twistors; the patterns still
    // cannot occur.
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        SampledContext s = sample_context(6, 2, 1, seed);
        SignSequence seq = window_twistor_sequence(s.ctx, IndexList{});
        EXPECT_TRUE(forbidden_vanishing_check(seq).ok);
    }
}

TEST(CEquations, LineExampleAndTermSkips) {
    TwistorContext ctx = line_context();
    EXPECT_EQ(c_equation_residual(ctx, {}, {}), Rational(0));  // 1*(-3)+1*0+1*3
}

TEST(CEquations, ExactlyZeroOnSampledGrid) {
    for (auto [n, k, m] : {std::tuple{5, 2, 2}, {6, 2, 3}, {6, 3, 2}, {5, 1, 3}}) {
        for (std::uint64_t seed = 0; seed < 3; ++seed) {
            SampledContext s = sample_context(n, k, m, seed);
            for (const IndexList& a : subsets(n, k - 1))
                for (const IndexList& b : subsets(n, m - 1))
                    ASSERT_EQ(c_equation_residual(s.ctx, a, b), Rational(0));
        }
    }
}

TEST(ZEquations, LineExampleExpansion) {
    TwistorContext ctx = line_context();
    // A=(1,2,3), B empty: p_23 <Y,1> - p_13 <Y,2> + p_12 <Y,3> = -3 - 0 + 3.
    EXPECT_EQ(z_equation_residual(ctx, {1, 2, 3}, {}), Rational(0));
    EXPECT_EQ(z_bracket(ctx.z, {2, 3}), Rational(1));
    EXPECT_EQ(z_bracket(ctx.z, {1, 3}), Rational(2));
    EXPECT_EQ(z_bracket(ctx.z, {1, 2}), Rational(1));
}

TEST(ZEquations, ExactlyZeroOnSampledGrid) {
    for (auto [n, k, m] : {std::tuple{5, 2, 2}, {6, 2, 3}, {5, 1, 3}}) {
        for (std::uint64_t seed = 0; seed < 3; ++seed) {
            SampledContext s = sample_context(n, k, m, seed);
            if (k + m + 1 > n) continue;
            for (const IndexList& a : subsets(n, k + m + 1))
                for (const IndexList& b : subsets(n, m - 1))
                    ASSERT_EQ(z_equation_residual(s.ctx, a, b), Rational(0));
        }
    }
}

TEST(ZEquations, NoValidAWhenNEqualsKPlusM) {
    SampledContext s = sample_context(4, 2, 2, 0);
    EXPECT_TRUE(subsets(4, 5).empty());
    EXPECT_THROW(z_equation_residual(s.ctx, {1, 2, 3, 4}, {1}), ContractError);
}

TEST(RepresentativeIndependence, TwistorsScaleByDetM) {
    SampledContext s = sample_context(6, 2, 2, 9);
    Prng prng(5);
    for (int trial = 0; trial < 10; ++trial) {
        Matrix mix(2, 2);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) mix(i, j) = Rational(prng.int_in(-4, 4));
        Rational det_mix = determinant(mix);
        if (det_mix == 0) continue;
        TwistorContext mixed =
            make_context(s.ctx.z, YPoint{2, 2, multiply(mix, s.ctx.y.matrix)});
        for (auto& [window, required] : coarse_windows(6, 2, 2)) {
            (void)required;
            EXPECT_EQ(twistor(mixed, window), det_mix * twistor(s.ctx, window));
        }
    }
}

TEST(IdentitySuite, CachedRunnerAgreesAndPasses) {
    SampledContext s = sample_context(6, 2, 2, 13);
    const IdentityCheckResult result = run_identity_checks(s.ctx);
    EXPECT_TRUE(result.c_equations_ok);
    EXPECT_TRUE(result.z_equations_ok);
    EXPECT_TRUE(result.cauchy_binet_ok);
    EXPECT_EQ(result.c_equations_checked,
              static_cast<long long>(subsets(6, 1).size() * subsets(6, 1).size()));
    EXPECT_EQ(result.z_equations_checked,
              static_cast<long long>(subsets(6, 5).size() * subsets(6, 1).size()));
}
