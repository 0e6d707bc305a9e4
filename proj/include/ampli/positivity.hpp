#pragma once

// Positive inputs: the n x (k+m) matrix Z with all maximal minors positive,
// k x n representatives of points of the (strictly) positive or totally
// nonnegative Grassmannian, the zero-column padding construction, and the
// map C -> Y = C*Z. Every sampler certifies its output exhaustively; nothing
// here is probabilistic.

#include "ampli/combinatorics.hpp"
#include "ampli/errors.hpp"
#include "ampli/matrix.hpp"
#include "ampli/prng.hpp"

#include <string>
#include <vector>

namespace ampli {

enum class PositivityClass { StrictlyPositive, Nonnegative, Unconstrained };

struct PositiveZ {
    int n = 0, k = 0, m = 0;
    Matrix matrix;  // n x (k+m)
    bool certified = false;
};

struct GrassmannC {
    int k = 0, n = 0;
    Matrix matrix;  // k x n
    PositivityClass positivity_class = PositivityClass::Unconstrained;
};

struct YPoint {
    int k = 0, m = 0;
    Matrix matrix;  // k x (k+m), rank k
};

/// Exhaustive check that every maximal minor on ascending row sets is > 0.
inline bool all_maximal_row_minors_positive(const Matrix& z) {
    const int n = z.rows();
    const int d = z.cols();
    if (n < d) return false;
    for (const IndexList& rows : subsets(n, d)) {
        std::vector<int> zero_based(rows.size());
        for (size_t i = 0; i < rows.size(); ++i) zero_based[i] = rows[i] - 1;
        if (determinant(z.select_rows(zero_based)) <= 0) return false;
    }
    return true;
}

/// Exhaustive scan of the C(n,k) column minors. Returns the sign summary:
/// +1 all positive, 0 all nonnegative with at least one zero, -1 some negative.
inline int minor_sign_summary(const Matrix& c) {
    bool saw_zero = false;
    for (const IndexList& cols : subsets(c.cols(), c.rows())) {
        const int s = sign_of(plucker(c, cols));
        if (s < 0) return -1;
        if (s == 0) saw_zero = true;
    }
    return saw_zero ? 0 : 1;
}

inline PositiveZ make_positive_z(int n, int k, int m, Matrix matrix) {
    if (matrix.rows() != n || matrix.cols() != k + m)
        throw ContractError("Z must be n x (k+m)");
    PositiveZ z{n, k, m, std::move(matrix), false};
    if (!all_maximal_row_minors_positive(z.matrix))
        throw PositivityError("Z failed maximal-minor certification");
    z.certified = true;
    return z;
}

/// Row i = (1, x_i, x_i^2, ...): generalized Vandermonde, totally positive
/// for strictly increasing positive nodes. Still certified exhaustively.
inline PositiveZ sample_vandermonde_z(int n, int k, int m, const std::vector<Rational>& nodes) {
    if (static_cast<int>(nodes.size()) != n) throw ContractError("need n nodes");
    if (n < k + m) throw ContractError("need n >= k + m");
    for (int i = 0; i < n; ++i) {
        if (nodes[i] <= 0) throw ContractError("nodes must be positive");
        if (i + 1 < n && nodes[i] >= nodes[i + 1])
            throw ContractError("nodes must strictly increase");
    }
    Matrix z(n, k + m);
    for (int i = 0; i < n; ++i) {
        Rational p = 1;
        for (int j = 0; j < k + m; ++j) {
            z(i, j) = p;
            p *= nodes[i];
        }
    }
    return make_positive_z(n, k, m, std::move(z));
}

inline GrassmannC certify_c(Matrix matrix, int k, int n) {
    if (matrix.rows() != k || matrix.cols() != n) throw ContractError("C must be k x n");
    GrassmannC c{k, n, std::move(matrix), PositivityClass::Unconstrained};
    const int summary = minor_sign_summary(c.matrix);
    if (summary < 0) throw PositivityError("C has a negative minor");
    c.positivity_class =
        summary > 0 ? PositivityClass::StrictlyPositive : PositivityClass::Nonnegative;
    return c;
}

/// Row a = (1, t_a, ..., t_a^{n-1}); all k x k column minors are generalized
/// Vandermonde determinants, positive for increasing positive nodes.
inline GrassmannC sample_positive_c(int k, int n, const std::vector<Rational>& nodes) {
    if (static_cast<int>(nodes.size()) != k) throw ContractError("need k nodes");
    for (int a = 0; a < k; ++a) {
        if (nodes[a] <= 0) throw ContractError("nodes must be positive");
        if (a + 1 < k && nodes[a] >= nodes[a + 1])
            throw ContractError("nodes must strictly increase");
    }
    Matrix c(k, n);
    for (int a = 0; a < k; ++a) {
        Rational p = 1;
        for (int j = 0; j < n; ++j) {
            c(a, j) = p;
            p *= nodes[a];
        }
    }
    GrassmannC out = certify_c(std::move(c), k, n);
    if (out.positivity_class != PositivityClass::StrictlyPositive)
        throw PositivityError("Vandermonde C failed strict certification");
    return out;
}

/// Number of elementary factors in the planar-network word for size n.
inline int tnn_weight_count(int n) { return n * (n - 1) / 2; }

/// Totally nonnegative boundary sampler (planar network). Builds a unipotent
/// upper-triangular product of elementary bidiagonal factors
/// x_i(w) = I + w*E_{i,i+1} along the reduced word (1)(21)(321)..., takes the
/// top k rows, and optionally scales columns by a nonnegative diagonal (the
/// vertical edge weights of the network). Weight layout: the first n(n-1)/2
/// entries are the word weights, an optional further n entries are the column
/// scalings (default 1). All weights positive lands strictly inside; zeroed
/// word weights land on boundary cells; zeroed column scalings collapse the
/// column support. Missing word weights are drawn from the seeded generator.
inline GrassmannC sample_tnn_boundary_c(int k, int n, std::vector<Rational> path_weights,
                                        std::uint64_t seed) {
    for (const Rational& w : path_weights)
        if (w < 0) throw ContractError("path weights must be nonnegative");
    const int word = tnn_weight_count(n);
    if (static_cast<int>(path_weights.size()) > word + n)
        throw ContractError("too many path weights");
    const bool has_scalings = static_cast<int>(path_weights.size()) > word;
    if (has_scalings && static_cast<int>(path_weights.size()) != word + n)
        throw ContractError("column scalings must be all n or none");
    Prng prng(Prng::derive(seed, 0xC0FFEE));
    while (static_cast<int>(path_weights.size()) < word)
        path_weights.push_back(Rational(prng.int_in(1, 4)));
    Matrix u = Matrix::identity(n);
    int t = 0;
    for (int b = 1; b <= n - 1; ++b) {
        for (int a = b; a >= 1; --a) {
            const Rational& w = path_weights[t++];
            if (w != 0) {
                // u <- u * (I + w E_{a,a+1}): adds w * col a to col a+1.
                for (int r = 0; r < n; ++r) u(r, a) += w * u(r, a - 1);
            }
        }
    }
    std::vector<int> top(k);
    for (int i = 0; i < k; ++i) top[i] = i;
    Matrix c = u.select_rows(top);
    if (has_scalings)
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < k; ++i) c(i, j) *= path_weights[word + j];
    return certify_c(std::move(c), k, n);
}

/// Boundary sample whose column support collapses to `support` (ascending):
/// positive word weights, column scalings 1 on the support and 0 off it. The
/// surviving block is strictly positive, so the Plücker coordinates are
/// positive exactly on subsets of the support.
inline GrassmannC sample_tnn_support_collapse_c(int k, int n, const std::vector<int>& support,
                                                std::uint64_t seed) {
    if (static_cast<int>(support.size()) < k) throw ContractError("support smaller than k");
    std::vector<Rational> weights;
    Prng prng(Prng::derive(seed, 0x5A5A));
    for (int t = 0; t < tnn_weight_count(n); ++t) weights.push_back(Rational(prng.int_in(1, 4)));
    std::vector<Rational> scalings(n, Rational(0));
    for (int s : support) {
        if (s < 1 || s > n) throw ContractError("support index out of range");
        scalings[s - 1] = 1;
    }
    weights.insert(weights.end(), scalings.begin(), scalings.end());
    return sample_tnn_boundary_c(k, n, std::move(weights), seed);
}

/// Appends a zero column: same point of the Grassmannian under any Z extended
/// by one extra row. The class drops to Nonnegative (minors using the new
/// column vanish).
inline GrassmannC pad_with_zero_column(const GrassmannC& c) {
    Matrix out(c.k, c.n + 1);
    for (int i = 0; i < c.k; ++i)
        for (int j = 0; j < c.n; ++j) out(i, j) = c.matrix(i, j);
    PositivityClass cls = c.positivity_class == PositivityClass::Unconstrained
                              ? PositivityClass::Unconstrained
                              : PositivityClass::Nonnegative;
    return GrassmannC{c.k, c.n + 1, std::move(out), cls};
}

/// Extends a Vandermonde-like Z by one more row for the padding construction.
inline PositiveZ append_z_row(const PositiveZ& z, const std::vector<Rational>& row) {
    if (static_cast<int>(row.size()) != z.k + z.m) throw ContractError("row length must be k+m");
    Matrix out(z.n + 1, z.k + z.m);
    for (int i = 0; i < z.n; ++i)
        for (int j = 0; j < z.k + z.m; ++j) out(i, j) = z.matrix(i, j);
    for (int j = 0; j < z.k + z.m; ++j) out(z.n, j) = row[j];
    return make_positive_z(z.n + 1, z.k, z.m, std::move(out));
}

/// Y = C * Z, the image of C under the map induced by Z.
inline YPoint apply_map(const GrassmannC& c, const PositiveZ& z) {
    if (c.n != z.n || c.k != z.k) throw ContractError("apply_map: dimension mismatch");
    Matrix y = multiply(c.matrix, z.matrix);
    if (rank(y) != c.k) throw DegenerateInputError("C*Z is rank deficient");
    return YPoint{z.k, z.m, std::move(y)};
}

inline YPoint make_y_point(int k, int m, Matrix matrix) {
    if (matrix.rows() != k || matrix.cols() != k + m) throw ContractError("Y must be k x (k+m)");
    if (rank(matrix) != k) throw DegenerateInputError("Y representative is rank deficient");
    return YPoint{k, m, std::move(matrix)};
}

}  // namespace ampli
