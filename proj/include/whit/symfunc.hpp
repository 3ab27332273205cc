#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "whit/rational.hpp"
#include "whit/satake.hpp"
#include "whit/signature.hpp"

namespace whit {

namespace detail {

// Exact determinant by Gaussian elimination (division is exact over Q).
inline Rational det(std::vector<std::vector<Rational>> m) {
    const int n = static_cast<int>(m.size());
    Rational out(1);
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (m[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) return Rational(0);
        if (piv != col) {
            std::swap(m[piv], m[col]);
            out = -out;
        }
        out *= m[col][col];
        for (int r = col + 1; r < n; ++r) {
            if (m[r][col] == 0) continue;
            const Rational factor = m[r][col] / m[col][col];
            for (int c = col + 1; c < n; ++c) m[r][c] -= factor * m[col][c];
            m[r][col] = 0;
        }
    }
    return out;
}

// h_0..h_kmax of the given values, by the one-variable-at-a-time recurrence
// h_t(x_1..x_j) = h_t(x_1..x_{j-1}) + x_j h_{t-1}(x_1..x_j).
inline std::vector<Rational> h_prefix(const std::vector<Rational>& a, int kmax) {
    std::vector<Rational> h(static_cast<std::size_t>(kmax) + 1);
    h[0] = 1;
    for (const Rational& x : a) {
        if (x == 0) continue;
        for (int t = 1; t <= kmax; ++t) h[t] += x * h[t - 1];
    }
    return h;
}

// Visits every strictly increasing index tuple of length i drawn from [0, m).
template <typename Fn>
void for_each_combination(int m, int i, Fn&& fn) {
    if (i < 0 || i > m) return;
    std::vector<int> pos(static_cast<std::size_t>(i));
    std::iota(pos.begin(), pos.end(), 0);
    if (i == 0) {
        fn(pos);
        return;
    }
    for (;;) {
        fn(pos);
        int t = i - 1;
        while (t >= 0 && pos[t] == m - i + t) --t;
        if (t < 0) break;
        ++pos[t];
        for (int u = t + 1; u < i; ++u) pos[u] = pos[u - 1] + 1;
    }
}

inline bool pairwise_distinct(const std::vector<Rational>& a) {
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j)
            if (a[i] == a[j]) return false;
    return true;
}

// Shape of f padded to length n: nonzero parts only (trailing zeros dropped).
inline std::vector<int> nonzero_shape(const Signature& f) {
    std::vector<int> shape;
    for (int x : f.parts())
        if (x > 0) shape.push_back(x);
    return shape;
}

}  // namespace detail

// e_i: the sum over i-element subsets of products of the alphas; e_0 = 1.
inline Rational elementary(int i, const SatakeParams& alpha) {
    const int n = alpha.rank();
    if (i < 0 || i > n) throw std::invalid_argument("elementary: index out of range");
    std::vector<Rational> e(static_cast<std::size_t>(i) + 1);
    e[0] = 1;
    for (const Rational& x : alpha.alphas())
        for (int t = i; t >= 1; --t) e[t] += x * e[t - 1];
    return e[static_cast<std::size_t>(i)];
}

// h_k: the sum of all monomials of total degree k in the alphas; h_0 = 1.
inline Rational complete_homogeneous(int k, const SatakeParams& alpha) {
    if (k < 0) throw std::invalid_argument("complete_homogeneous: negative degree");
    return detail::h_prefix(alpha.alphas(), k)[static_cast<std::size_t>(k)];
}

// Bialternant evaluation det(a_j^{f_i + n - i}) / prod_{i<j}(a_i - a_j) of the
// Schur polynomial at f padded with a trailing zero. Requires pairwise
// distinct parameters (nonzero Vandermonde).
inline Rational schur_bialternant(const Signature& f, const SatakeParams& alpha) {
    if (f.rank() != alpha.rank()) throw std::invalid_argument("schur_bialternant: rank mismatch");
    if (!f.dominant()) throw std::invalid_argument("schur_bialternant: non-dominant signature");
    const auto& a = alpha.alphas();
    const int n = alpha.rank();
    if (!detail::pairwise_distinct(a))
        throw std::domain_error("schur_bialternant: repeated parameters (zero Vandermonde)");
    std::vector<int> shape = f.parts();
    shape.push_back(0);
    std::vector<std::vector<Rational>> m(static_cast<std::size_t>(n),
                                         std::vector<Rational>(static_cast<std::size_t>(n)));
    for (int r = 0; r < n; ++r) {
        const unsigned long e = static_cast<unsigned long>(shape[static_cast<std::size_t>(r)] + n - 1 - r);
        for (int c = 0; c < n; ++c) m[r][c] = rat_pow(a[static_cast<std::size_t>(c)], e);
    }
    Rational num = detail::det(std::move(m));
    Rational van(1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j) van *= a[i] - a[j];
    return num / van;
}

// Jacobi-Trudi evaluation det(h_{f_i - i + j}) over the nonzero parts of f.
// Defined for any parameter values, repeated entries included.
inline Rational schur_jacobi_trudi(const Signature& f, const SatakeParams& alpha) {
    if (f.rank() != alpha.rank()) throw std::invalid_argument("schur_jacobi_trudi: rank mismatch");
    if (!f.dominant()) throw std::invalid_argument("schur_jacobi_trudi: non-dominant signature");
    const std::vector<int> lam = detail::nonzero_shape(f);
    const int l = static_cast<int>(lam.size());
    if (l == 0) return Rational(1);
    const auto h = detail::h_prefix(alpha.alphas(), lam[0] + l - 1);
    std::vector<std::vector<Rational>> m(static_cast<std::size_t>(l),
                                         std::vector<Rational>(static_cast<std::size_t>(l)));
    for (int r = 0; r < l; ++r)
        for (int c = 0; c < l; ++c) {
            const int idx = lam[static_cast<std::size_t>(r)] - r + c;
            m[r][c] = idx < 0 ? Rational(0) : h[static_cast<std::size_t>(idx)];
        }
    return detail::det(std::move(m));
}

// s_f(alpha) for dominant f, padded with a trailing zero to length n. Uses
// the bialternant when the parameters are pairwise distinct and falls back
// to Jacobi-Trudi when the Vandermonde vanishes; the routes agree wherever
// both are defined.
inline Rational schur(const Signature& f, const SatakeParams& alpha) {
    if (f.rank() != alpha.rank()) throw std::invalid_argument("schur: rank mismatch");
    if (!f.dominant()) throw std::invalid_argument("schur: non-dominant signature");
    if (detail::pairwise_distinct(alpha.alphas())) return schur_bialternant(f, alpha);
    return schur_jacobi_trudi(f, alpha);
}

// Combinatorial oracle: the sum over semistandard Young tableaux of shape f
// (entries in {1..n}, rows weakly increasing, columns strictly increasing)
// of the product of alphas indexed by the entries. Brute force by design;
// the budget guards against combinatorial blowup.
inline Rational schur_ssyt(const Signature& f, const SatakeParams& alpha, long weight_budget = 12) {
    if (f.rank() != alpha.rank()) throw std::invalid_argument("schur_ssyt: rank mismatch");
    if (!f.dominant()) throw std::invalid_argument("schur_ssyt: non-dominant signature");
    if (f.weight() > weight_budget)
        throw std::invalid_argument("schur_ssyt: weight exceeds enumeration budget");
    const std::vector<int> shape = detail::nonzero_shape(f);
    const int l = static_cast<int>(shape.size());
    if (l == 0) return Rational(1);
    const auto& a = alpha.alphas();
    const int n = alpha.rank();
    const int ncols = shape[0];
    // column c has one cell per row whose length exceeds c
    std::vector<int> col_height(static_cast<std::size_t>(ncols), 0);
    for (int c = 0; c < ncols; ++c)
        for (int r = 0; r < l; ++r)
            if (shape[static_cast<std::size_t>(r)] > c) ++col_height[static_cast<std::size_t>(c)];
    std::vector<std::vector<int>> t(static_cast<std::size_t>(l));
    for (int r = 0; r < l; ++r)
        t[static_cast<std::size_t>(r)].resize(static_cast<std::size_t>(shape[static_cast<std::size_t>(r)]));
    Rational total(0);
    // Depth-first column-by-column fill; both constrained neighbors (above,
    // left) are already placed. A zero parameter kills the branch.
    std::function<void(int, int, const Rational&)> fill = [&](int c, int r, const Rational& prod) {
        if (c == ncols) {
            total += prod;
            return;
        }
        const bool last_in_col = r + 1 == col_height[static_cast<std::size_t>(c)];
        const int nc = last_in_col ? c + 1 : c;
        const int nr = last_in_col ? 0 : r + 1;
        int lo = 1;
        if (r > 0) lo = std::max(lo, t[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)] + 1);
        if (c > 0) lo = std::max(lo, t[static_cast<std::size_t>(r)][static_cast<std::size_t>(c - 1)]);
        for (int val = lo; val <= n; ++val) {
            const Rational& x = a[static_cast<std::size_t>(val - 1)];
            if (x == 0) continue;
            t[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = val;
            fill(nc, nr, Rational(prod * x));
        }
    };
    fill(0, 0, Rational(1));
    return total;
}

// All f + eps that stay dominant, eps running over 0/1 vectors with i ones:
// the index set of the Hecke recursion, equivalently the vertical strips of
// the Pieri rule e_i * s_f = sum s_{f+eps}.
inline std::vector<Signature> pieri_expand(const Signature& f, int i) {
    const int m = f.length();
    if (!f.dominant()) throw std::invalid_argument("pieri_expand: non-dominant signature");
    if (i < 1 || i > m) throw std::invalid_argument("pieri_expand: index out of range");
    std::vector<Signature> out;
    detail::for_each_combination(m, i, [&](const std::vector<int>& pos) {
        std::vector<int> g = f.parts();
        for (int p : pos) ++g[static_cast<std::size_t>(p)];
        Signature cand(std::move(g));
        if (cand.dominant()) out.push_back(std::move(cand));
    });
    return out;
}

}  // namespace whit
