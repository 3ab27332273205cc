#pragma once

#include <gmpxx.h>

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace whit {

inline bool is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

inline long pow_long(long base, int e) {
    long out = 1;
    for (int t = 0; t < e; ++t) {
        if (out > (1L << 40) / base) throw std::overflow_error("pow_long: overflow");
        out *= base;
    }
    return out;
}

// Inverse of a unit modulo mod, by the extended Euclidean algorithm.
inline long mod_inverse(long a, long mod) {
    a %= mod;
    if (a < 0) a += mod;
    long r0 = a, r1 = mod, s0 = 1, s1 = 0;
    while (r1 != 0) {
        const long q = r0 / r1;
        const long r2 = r0 - q * r1;
        const long s2 = s0 - q * s1;
        r0 = r1;
        r1 = r2;
        s0 = s1;
        s1 = s2;
    }
    if (r0 != 1) throw std::domain_error("mod_inverse: not a unit");
    return ((s0 % mod) + mod) % mod;
}

// Gaussian binomial C(m, i)_q: the number of i-dimensional subspaces of an
// m-dimensional space over a field with q elements.
inline long gaussian_binomial(int m, int i, long q) {
    if (q < 2) throw std::invalid_argument("gaussian_binomial: q >= 2");
    if (i < 0 || i > m) return 0;
    mpz_class num(1), den(1);
    for (int t = 1; t <= i; ++t) {
        mpz_class qa, qb;
        mpz_ui_pow_ui(qa.get_mpz_t(), static_cast<unsigned long>(q),
                      static_cast<unsigned long>(m - i + t));
        mpz_ui_pow_ui(qb.get_mpz_t(), static_cast<unsigned long>(q),
                      static_cast<unsigned long>(t));
        num *= qa - 1;
        den *= qb - 1;
    }
    const mpz_class g = num / den;
    return g.get_si();
}

namespace detail {

inline long det_flat(const long* a, int n, long mod) {
    if (n == 1) return ((a[0] % mod) + mod) % mod;
    if (n == 2) return (((a[0] * a[3] - a[1] * a[2]) % mod) + mod) % mod;
    if (n == 3) {
        const long d = a[0] * (a[4] * a[8] - a[5] * a[7]) - a[1] * (a[3] * a[8] - a[5] * a[6]) +
                       a[2] * (a[3] * a[7] - a[4] * a[6]);
        return ((d % mod) + mod) % mod;
    }
    long out = 0;
    std::vector<long> minor(static_cast<std::size_t>((n - 1) * (n - 1)));
    for (int c = 0; c < n; ++c) {
        if (a[c] != 0) {
            int t = 0;
            for (int r = 1; r < n; ++r)
                for (int cc = 0; cc < n; ++cc)
                    if (cc != c) minor[static_cast<std::size_t>(t++)] = a[r * n + cc];
            const long sub = det_flat(minor.data(), n - 1, mod);
            out += (c % 2 ? mod - a[c] % mod : a[c] % mod) * sub % mod;
        }
    }
    return out % mod;
}

// Membership conditions for K_m intersected with its conjugate by
// diag(p,...,p,1,...,1) (i copies of p), on an element already known to be
// invertible: bottom row congruent to (0,...,0,1) mod p^m, the lower-left
// i-columns of the upper (n-1)-block divisible by p, and the first i entries
// of the last column divisible by p. Entries must be reduced (non-negative).
inline bool subgroup_conditions(const long* g, int n, int i, long p, long pm) {
    const long* bottom = g + static_cast<std::ptrdiff_t>(n - 1) * n;
    for (int c = 0; c < n - 1; ++c)
        if (bottom[c] % pm != 0) return false;
    if (bottom[n - 1] % pm != 1) return false;
    for (int r = i; r < n - 1; ++r)
        for (int c = 0; c < i; ++c)
            if (g[r * n + c] % p != 0) return false;
    for (int r = 0; r < i; ++r)
        if (g[r * n + (n - 1)] % p != 0) return false;
    return true;
}

}  // namespace detail

// Square matrix over the truncated ring Z/p^level; invertible iff the
// determinant is a unit mod p.
class ResidueMatrix {
public:
    ResidueMatrix(int n, long p, int level)
        : n_(n), p_(p), lvl_(level), mod_(pow_long(p, level)),
          e_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0) {
        if (n < 1) throw std::invalid_argument("ResidueMatrix: dimension >= 1");
        if (!is_prime(p)) throw std::invalid_argument("ResidueMatrix: p must be prime");
        if (level < 1) throw std::invalid_argument("ResidueMatrix: level >= 1");
    }

    static ResidueMatrix identity(int n, long p, int level) {
        ResidueMatrix m(n, p, level);
        for (int r = 0; r < n; ++r) m.set(r, r, 1);
        return m;
    }

    static ResidueMatrix from_rows(const std::vector<std::vector<long>>& rows, long p, int level) {
        ResidueMatrix m(static_cast<int>(rows.size()), p, level);
        for (int r = 0; r < m.n_; ++r) {
            if (static_cast<int>(rows[static_cast<std::size_t>(r)].size()) != m.n_)
                throw std::invalid_argument("ResidueMatrix: ragged rows");
            for (int c = 0; c < m.n_; ++c) m.set(r, c, rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);
        }
        return m;
    }

    int dim() const { return n_; }
    long prime() const { return p_; }
    int level() const { return lvl_; }
    long modulus() const { return mod_; }
    const long* data() const { return e_.data(); }

    long at(int r, int c) const { return e_[idx(r, c)]; }
    void set(int r, int c, long v) {
        v %= mod_;
        if (v < 0) v += mod_;
        e_[idx(r, c)] = v;
    }

    ResidueMatrix operator*(const ResidueMatrix& o) const {
        require_same(o);
        ResidueMatrix out(n_, p_, lvl_);
        for (int r = 0; r < n_; ++r)
            for (int c = 0; c < n_; ++c) {
                long acc = 0;
                for (int k = 0; k < n_; ++k) acc += e_[idx(r, k)] * o.e_[idx(k, c)];
                out.e_[idx(r, c)] = acc % mod_;
            }
        return out;
    }

    long det() const { return detail::det_flat(e_.data(), n_, mod_); }
    bool invertible() const { return det() % p_ != 0; }

    // Adjugate divided by the determinant; requires a unit determinant.
    ResidueMatrix inverse() const {
        const long d = det();
        if (d % p_ == 0) throw std::domain_error("ResidueMatrix::inverse: determinant not a unit");
        const long dinv = mod_inverse(d, mod_);
        ResidueMatrix out(n_, p_, lvl_);
        if (n_ == 1) {
            out.set(0, 0, dinv);
            return out;
        }
        std::vector<long> minor(static_cast<std::size_t>((n_ - 1) * (n_ - 1)));
        for (int r = 0; r < n_; ++r)
            for (int c = 0; c < n_; ++c) {
                int t = 0;
                for (int rr = 0; rr < n_; ++rr) {
                    if (rr == r) continue;
                    for (int cc = 0; cc < n_; ++cc)
                        if (cc != c) minor[static_cast<std::size_t>(t++)] = e_[idx(rr, cc)];
                }
                long cof = detail::det_flat(minor.data(), n_ - 1, mod_);
                if ((r + c) % 2) cof = (mod_ - cof) % mod_;
                out.e_[idx(c, r)] = cof * dinv % mod_;
            }
        return out;
    }

    bool operator==(const ResidueMatrix&) const = default;

private:
    int n_;
    long p_;
    int lvl_;
    long mod_;
    std::vector<long> e_;

    std::size_t idx(int r, int c) const {
        return static_cast<std::size_t>(r) * static_cast<std::size_t>(n_) +
               static_cast<std::size_t>(c);
    }
    void require_same(const ResidueMatrix& o) const {
        if (n_ != o.n_ || p_ != o.p_ || lvl_ != o.lvl_)
            throw std::invalid_argument("ResidueMatrix: incompatible operands");
    }
};

// Parameters of one coset laboratory run: the congruence level m, the Hecke
// index i with its 0/1 exponent vector (1,...,1,0,...,0), and the truncation
// level of the ring. One digit above m suffices because every membership
// condition is a congruence mod p^m or a divisibility by p.
struct CosetSpec {
    int n;
    long p;
    int i;
    int m;
    int level;

    CosetSpec(int n_, long p_, int i_, int m_, int level_ = -1)
        : n(n_), p(p_), i(i_), m(m_), level(level_ < 0 ? m_ + 1 : level_) {
        if (n < 2) throw std::invalid_argument("CosetSpec: n >= 2");
        if (!is_prime(p)) throw std::invalid_argument("CosetSpec: p must be prime");
        if (i < 1 || i > n - 1) throw std::invalid_argument("CosetSpec: 1 <= i <= n-1");
        if (m < 1) throw std::invalid_argument("CosetSpec: m >= 1");
        if (level < m + 1) throw std::invalid_argument("CosetSpec: level >= m+1");
    }
};

// Bottom row congruent to (0, ..., 0, 1) mod p^m, together with
// invertibility: membership in K_m at the matrix's truncation level.
inline bool km_membership(const ResidueMatrix& M, int m) {
    if (m < 1) throw std::invalid_argument("km_membership: m >= 1");
    if (M.level() < m) throw std::invalid_argument("km_membership: level < m");
    if (!M.invertible()) return false;
    const long pm = pow_long(M.prime(), m);
    const int n = M.dim();
    for (int c = 0; c < n - 1; ++c)
        if (M.at(n - 1, c) % pm != 0) return false;
    return M.at(n - 1, n - 1) % pm == 1;
}

// Membership in K_m intersected with its conjugate by w^{(1,..,1,0,..,0)}:
// K_m membership plus the block conditions of the coset decomposition.
inline bool subgroup_membership(const ResidueMatrix& M, const CosetSpec& spec) {
    if (M.dim() != spec.n || M.prime() != spec.p || M.level() != spec.level)
        throw std::invalid_argument("subgroup_membership: matrix does not match spec");
    if (!km_membership(M, spec.m)) return false;
    return detail::subgroup_conditions(M.data(), spec.n, spec.i, spec.p,
                                       pow_long(spec.p, spec.m));
}

// Left-coset representatives of the block parabolic subgroup
// P_i = {lower-left (m-i) x i block divisible by p} in GL_m over Z/p: one
// matrix per i-dimensional subspace of F_p^m, built from the reduced column
// echelon basis completed by standard vectors. Count is C(m, i)_p.
inline std::vector<ResidueMatrix> parabolic_transversal(int n_minus_1, int i, long p) {
    const int m = n_minus_1;
    if (m < 1) throw std::invalid_argument("parabolic_transversal: size >= 1");
    if (i < 1 || i > m) throw std::invalid_argument("parabolic_transversal: 1 <= i <= size");
    if (!is_prime(p)) throw std::invalid_argument("parabolic_transversal: p must be prime");

    std::vector<ResidueMatrix> out;
    std::vector<int> pivots(static_cast<std::size_t>(i));
    for (int t = 0; t < i; ++t) pivots[static_cast<std::size_t>(t)] = t;
    for (;;) {
        // free cells of the reduced echelon form: (r, c) with c > pivot_r and
        // c not itself a pivot column
        std::vector<std::pair<int, int>> free_cells;
        for (int r = 0; r < i; ++r)
            for (int c = pivots[static_cast<std::size_t>(r)] + 1; c < m; ++c) {
                bool is_pivot = false;
                for (int t = 0; t < i; ++t)
                    if (pivots[static_cast<std::size_t>(t)] == c) is_pivot = true;
                if (!is_pivot) free_cells.emplace_back(r, c);
            }
        std::vector<long> fill(free_cells.size(), 0);
        for (;;) {
            // echelon basis rows -> first i columns; standard vectors at the
            // non-pivot coordinates complete an invertible matrix
            ResidueMatrix rep(m, p, 1);
            for (int r = 0; r < i; ++r) rep.set(pivots[static_cast<std::size_t>(r)], r, 1);
            for (std::size_t t = 0; t < free_cells.size(); ++t)
                rep.set(free_cells[t].second, free_cells[t].first, fill[t]);
            int col = i;
            for (int c = 0; c < m; ++c) {
                bool is_pivot = false;
                for (int t = 0; t < i; ++t)
                    if (pivots[static_cast<std::size_t>(t)] == c) is_pivot = true;
                if (!is_pivot) rep.set(c, col++, 1);
            }
            out.push_back(std::move(rep));
            // advance the free-cell odometer
            std::size_t t = 0;
            while (t < fill.size() && ++fill[t] == p) fill[t++] = 0;
            if (t == fill.size()) break;
        }
        // next pivot combination
        int t = i - 1;
        while (t >= 0 && pivots[static_cast<std::size_t>(t)] == m - i + t) --t;
        if (t < 0) break;
        ++pivots[static_cast<std::size_t>(t)];
        for (int u = t + 1; u < i; ++u)
            pivots[static_cast<std::size_t>(u)] = pivots[static_cast<std::size_t>(u - 1)] + 1;
    }
    return out;
}

struct CosetReport {
    int n = 0;
    long p = 0;
    int i = 0;
    int m = 0;
    int level = 0;
    long rep_count = 0;
    long expected_count = 0;
    long km_size = 0;
    long subgroup_size = 0;
    long coverage_failures = 0;
    bool count_ok = false;
    bool distinct_ok = false;
    bool coverage_ok = false;
    bool index_ok = false;
    bool partition_ok = false;

    bool ok() const { return count_ok && distinct_ok && coverage_ok && index_ok && partition_ok; }
};

// Exhaustive validation of the coset decomposition of K_m modulo
// K_m n w^{f^i} K_m w^{-f^i} at truncation level p^{m+1}:
//   (1) the candidates (a x; 0 1), a over the parabolic transversal,
//       x over a L_0/L_i, are pairwise in distinct left cosets,
//   (2) their number is q^i * C(n-1, i)_q,
//   (3) every element of K_m mod p^level lies in exactly one of the cosets,
//   (4) [L_0 : aL_i] = q^i independently of the representative a.
inline CosetReport verify_coset_transversal(const CosetSpec& spec) {
    const int n = spec.n, i = spec.i, m = spec.m, N = spec.level;
    const long p = spec.p;
    const long pm = pow_long(p, m), pN = pow_long(p, N);
    const int nn = n * n;
    const int h = n - 1;  // block size

    // K_m mod p^N has p^{N n (n-1)} * p^{(N-m) n} bottom-row candidates
    const double log2_cands =
        std::log2(static_cast<double>(p)) * (static_cast<double>(N) * n * (n - 1) + static_cast<double>(N - m) * n);
    if (log2_cands > 25.0)
        throw std::invalid_argument(
            "verify_coset_transversal: enumeration budget exceeded (supported range is n <= 3, p <= 3, m = 1)");

    CosetReport rep;
    rep.n = n;
    rep.p = p;
    rep.i = i;
    rep.m = m;
    rep.level = N;

    const auto in_subgroup = [&](const long* g) {
        return detail::subgroup_conditions(g, n, i, p, pm);
    };

    // representatives (a x; 0 1): a lifted from the residue field, x = a t
    // with t over the standard transversal of L_0/L_i
    const auto para = parabolic_transversal(h, i, p);
    std::vector<std::vector<long>> reps;
    std::vector<ResidueMatrix> ablocks;
    for (const auto& a0 : para) {
        ResidueMatrix a(h, p, N);
        for (int r = 0; r < h; ++r)
            for (int c = 0; c < h; ++c) a.set(r, c, a0.at(r, c));
        std::vector<long> t(static_cast<std::size_t>(i), 0);
        for (;;) {
            std::vector<long> g(static_cast<std::size_t>(nn), 0);
            for (int r = 0; r < h; ++r) {
                for (int c = 0; c < h; ++c) g[static_cast<std::size_t>(r * n + c)] = a.at(r, c);
                long acc = 0;
                for (int c = 0; c < i; ++c) acc += a.at(r, c) * t[static_cast<std::size_t>(c)];
                g[static_cast<std::size_t>(r * n + h)] = acc % pN;  // x = a t
            }
            g[static_cast<std::size_t>(nn - 1)] = 1;
            reps.push_back(std::move(g));
            std::size_t d = 0;
            while (d < t.size() && ++t[d] == p) t[d++] = 0;
            if (d == t.size()) break;
        }
        ablocks.push_back(std::move(a));
    }
    rep.rep_count = static_cast<long>(reps.size());
    rep.expected_count = gaussian_binomial(h, i, p) * pow_long(p, i);
    rep.count_ok = rep.rep_count == rep.expected_count;

    std::vector<std::vector<long>> rep_inv;
    for (const auto& g : reps) {
        ResidueMatrix M(n, p, N);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) M.set(r, c, g[static_cast<std::size_t>(r * n + c)]);
        const ResidueMatrix inv = M.inverse();
        std::vector<long> flat(static_cast<std::size_t>(nn));
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) flat[static_cast<std::size_t>(r * n + c)] = inv.at(r, c);
        rep_inv.push_back(std::move(flat));
    }

    const auto mul_flat = [&](const long* A, const long* B, long* C) {
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) {
                long acc = 0;
                for (int k = 0; k < n; ++k) acc += A[r * n + k] * B[k * n + c];
                C[r * n + c] = acc % pN;
            }
    };

    // (1) pairwise distinct left cosets: r^{-1} r' never lands in the subgroup
    rep.distinct_ok = true;
    std::vector<long> prod(static_cast<std::size_t>(nn));
    for (std::size_t r1 = 0; r1 < reps.size(); ++r1)
        for (std::size_t r2 = r1 + 1; r2 < reps.size(); ++r2) {
            mul_flat(rep_inv[r1].data(), reps[r2].data(), prod.data());
            if (in_subgroup(prod.data())) rep.distinct_ok = false;
        }

    // (4) [L_0 : aL_i] = q^i for every a: count the classes of L_0 mod a L_i
    // by enumerating all of (Z/p^N)^{n-1}
    rep.index_ok = true;
    const long qi = pow_long(p, i);
    for (const auto& a : ablocks) {
        const ResidueMatrix ainv = a.inverse();
        std::vector<char> seen(static_cast<std::size_t>(qi), 0);
        long classes = 0;
        std::vector<long> z(static_cast<std::size_t>(h), 0);
        for (;;) {
            long key = 0;
            for (int r = 0; r < i; ++r) {
                long acc = 0;
                for (int c = 0; c < h; ++c) acc += ainv.at(r, c) * z[static_cast<std::size_t>(c)];
                key = key * p + acc % pN % p;
            }
            if (!seen[static_cast<std::size_t>(key)]) {
                seen[static_cast<std::size_t>(key)] = 1;
                ++classes;
            }
            std::size_t d = 0;
            while (d < z.size() && ++z[d] == pN) z[d++] = 0;
            if (d == z.size()) break;
        }
        if (classes != qi) rep.index_ok = false;
    }

    // (3) full coverage: every element of K_m mod p^N equivalent to exactly
    // one representative
    std::vector<std::vector<long>> choices(static_cast<std::size_t>(nn));
    for (int r = 0; r < h; ++r)
        for (int c = 0; c < n; ++c) {
            auto& ch = choices[static_cast<std::size_t>(r * n + c)];
            for (long v = 0; v < pN; ++v) ch.push_back(v);
        }
    for (int c = 0; c < h; ++c) {
        auto& ch = choices[static_cast<std::size_t>(h * n + c)];
        for (long v = 0; v < pN; v += pm) ch.push_back(v);
    }
    for (long v = 1; v < pN; v += pm) choices[static_cast<std::size_t>(nn - 1)].push_back(v);

    rep.coverage_ok = true;
    std::vector<std::size_t> digit(static_cast<std::size_t>(nn), 0);
    std::vector<long> K(static_cast<std::size_t>(nn));
    for (int t = 0; t < nn; ++t) K[static_cast<std::size_t>(t)] = choices[static_cast<std::size_t>(t)][0];
    for (;;) {
        if (detail::det_flat(K.data(), n, pN) % p != 0) {
            ++rep.km_size;
            if (in_subgroup(K.data())) ++rep.subgroup_size;
            int matches = 0;
            for (const auto& ri : rep_inv) {
                mul_flat(ri.data(), K.data(), prod.data());
                if (in_subgroup(prod.data())) ++matches;
            }
            if (matches != 1) {
                ++rep.coverage_failures;
                rep.coverage_ok = false;
            }
        }
        int t = 0;
        while (t < nn) {
            auto& d = digit[static_cast<std::size_t>(t)];
            if (++d < choices[static_cast<std::size_t>(t)].size()) {
                K[static_cast<std::size_t>(t)] = choices[static_cast<std::size_t>(t)][d];
                break;
            }
            d = 0;
            K[static_cast<std::size_t>(t)] = choices[static_cast<std::size_t>(t)][0];
            ++t;
        }
        if (t == nn) break;
    }

    // cosets partition K_m, so the counts must tie out
    rep.partition_ok = rep.km_size == rep.rep_count * rep.subgroup_size;
    return rep;
}

}  // namespace whit
