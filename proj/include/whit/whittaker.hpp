#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "whit/laurent.hpp"
#include "whit/linsolve.hpp"
#include "whit/satake.hpp"
#include "whit/series.hpp"
#include "whit/signature.hpp"
#include "whit/symfunc.hpp"

namespace whit {

// Eigenvalues lambda_1..lambda_{n-1} of the standard Hecke operators
// T_1..T_{n-1} acting on the one-dimensional newform space.
struct HeckeEigenvalues {
    int n = 0;
    std::vector<Laurent> lambda;  // lambda[i-1] = lambda_i
};

// v-exponent of the square root of the Borel modulus character at w^f:
// delta_B(w^f) = q^{-sum_j (n+1-2j) f_j}, so the exponent is half of that
// power of q, taken with the positive branch.
inline long modulus_sqrt_exponent(const Signature& f) {
    const int n = f.rank();
    long e = 0;
    for (int j = 1; j <= n - 1; ++j) e -= static_cast<long>(n + 1 - 2 * j) * f.part(j - 1);
    return e;
}

inline Laurent modulus_sqrt(const Signature& f) {
    return Laurent::v_pow(modulus_sqrt_exponent(f));
}

// W(w^f) with the normalization W(1) = 1: the closed form
// delta_B^{1/2}(w^f) s_f(alpha) on dominant f, and 0 off the dominant cone.
inline Laurent whittaker_value(const Signature& f, const SatakeParams& alpha) {
    if (f.rank() != alpha.rank()) throw std::invalid_argument("whittaker_value: rank mismatch");
    if (!f.dominant()) return {};
    return Laurent::v_pow(modulus_sqrt_exponent(f), schur(f, alpha));
}

// lambda_i = v^{i(n-1) - i(i-1)} e_i(alpha): the elementary symmetric values
// of mu = v^{n-3} alpha, rescaled by q^{i - i(i-1)/2}. This is the positive
// conductor dictionary between Hecke eigenvalues and Satake parameters.
inline HeckeEigenvalues eigen_from_satake(const SatakeParams& alpha) {
    const int n = alpha.rank();
    HeckeEigenvalues ev{n, {}};
    for (int i = 1; i <= n - 1; ++i) {
        const long e = static_cast<long>(i) * (n - 1) - static_cast<long>(i) * (i - 1);
        ev.lambda.push_back(Laurent::v_pow(e, elementary(i, alpha)));
    }
    return ev;
}

// Denominator of the L-factor recovered from the eigenvalues: the coefficient
// of X^i is (-1)^i lambda_i v^{i(i-1) - i(n-1)}. Each coefficient must come
// out as a plain rational; a residual v-power means the eigenvalues are not
// consistent with any Satake parameter set.
inline RatPoly lfactor_denominator(const HeckeEigenvalues& ev) {
    const int n = ev.n;
    if (n < 2 || static_cast<int>(ev.lambda.size()) != n - 1)
        throw std::invalid_argument("lfactor_denominator: need n-1 eigenvalues");
    RatPoly den{Rational(1)};
    for (int i = 1; i <= n - 1; ++i) {
        const long e = static_cast<long>(i) * (i - 1) - static_cast<long>(i) * (n - 1);
        const Laurent scaled = ev.lambda[static_cast<std::size_t>(i - 1)] * Laurent::v_pow(e);
        const auto r = scaled.as_rational();
        if (!r)
            throw std::invalid_argument("lfactor_denominator: residual v-power in eigenvalue " +
                                        std::to_string(i));
        den.push_back(i % 2 ? Rational(-*r) : *r);
    }
    poly_trim(den);
    return den;
}

struct RecursionCheck {
    Signature f;
    int i;
    bool ok;
};

struct RecursionReport {
    int weight_bound = 0;
    int failures = 0;
    bool all_ok = true;
    std::vector<RecursionCheck> checks;
};

// Checks the Hecke difference equations
//   q^{i(i-1)/2 - i} lambda_i wt(f) = sum_{eps in I_i} wt(f + eps),
// wt(f) = q^{sum_j (n-1-j) f_j} W(w^f), exactly, for every dominant f of
// weight <= weight_bound and every 1 <= i <= n-1, with W from the closed form
// and lambda from eigen_from_satake. I_i runs over all 0/1 vectors with i
// ones; off-dominant terms contribute 0. The system encodes the positive
// conductor Hecke action, so fully nonzero (unramified) parameter vectors are
// accepted but expected to produce failure entries.
inline RecursionReport verify_recursion(const SatakeParams& alpha, int weight_bound) {
    if (weight_bound < 1) throw std::invalid_argument("verify_recursion: weight_bound >= 1");
    const int n = alpha.rank();
    const HeckeEigenvalues ev = eigen_from_satake(alpha);
    const auto wtilde = [&](const Signature& g) {
        long e = 0;
        for (int j = 1; j <= n - 1; ++j) e += 2L * (n - 1 - j) * g.part(j - 1);
        return Laurent::v_pow(e) * whittaker_value(g, alpha);
    };
    RecursionReport rep;
    rep.weight_bound = weight_bound;
    for (const Signature& f : dominant_signatures(n, weight_bound)) {
        for (int i = 1; i <= n - 1; ++i) {
            const long e = static_cast<long>(i) * (i - 1) - 2L * i;
            const Laurent lhs = Laurent::v_pow(e) * ev.lambda[static_cast<std::size_t>(i - 1)] * wtilde(f);
            Laurent rhs;
            detail::for_each_combination(n - 1, i, [&](const std::vector<int>& pos) {
                std::vector<int> g = f.parts();
                for (int p : pos) ++g[static_cast<std::size_t>(p)];
                rhs += wtilde(Signature(std::move(g)));
            });
            const bool ok = lhs == rhs;
            if (!ok) {
                ++rep.failures;
                rep.all_ok = false;
            }
            rep.checks.push_back({f, i, ok});
        }
    }
    return rep;
}

// Table of W(w^f) values on the dominant cone up to a weight bound.
// Non-dominant signatures are never stored; value_at reports 0 there.
class WhittakerTable {
public:
    WhittakerTable(SatakeParams alpha, std::map<Signature, Laurent> entries)
        : alpha_(std::move(alpha)), entries_(std::move(entries)) {}

    int rank() const { return alpha_.rank(); }
    const SatakeParams& params() const { return alpha_; }
    const std::map<Signature, Laurent>& entries() const { return entries_; }

    Laurent value_at(const Signature& f) const {
        const auto it = entries_.find(f);
        return it == entries_.end() ? Laurent() : it->second;
    }

private:
    SatakeParams alpha_;
    std::map<Signature, Laurent> entries_;
};

// Reconstructs the table independently of the Schur evaluation: solves the
// v-normalized system u(f) e_i(alpha) = sum_{g in pieri_expand(f,i)} u(g)
// with u(0) = 1 by exact sparse elimination over all dominant f of weight
// <= weight_bound, requires the solution to be unique, and converts back via
// W(w^f) = delta_B^{1/2}(w^f) u(f). Cross-checks whittaker_value through a
// route that never evaluates a Schur polynomial.
inline WhittakerTable solve_recursion(const SatakeParams& alpha, int weight_bound) {
    if (weight_bound < 1) throw std::invalid_argument("solve_recursion: weight_bound >= 1");
    const int n = alpha.rank();
    const std::vector<Signature> sigs = dominant_signatures(n, weight_bound);
    std::map<Signature, int> index;
    for (const Signature& s : sigs) index.emplace(s, static_cast<int>(index.size()));

    std::vector<std::map<int, Rational>> rows;
    std::vector<Rational> rhs;
    rows.push_back({{index.at(Signature::zero(n)), Rational(1)}});
    rhs.push_back(Rational(1));
    for (const Signature& f : sigs) {
        for (int i = 1; i <= n - 1 && f.weight() + i <= weight_bound; ++i) {
            std::map<int, Rational> row;
            const Rational ei = elementary(i, alpha);
            if (ei != 0) row.emplace(index.at(f), ei);
            for (const Signature& g : pieri_expand(f, i)) {
                auto [it, fresh] = row.try_emplace(index.at(g), Rational(-1));
                if (!fresh) {
                    it->second -= 1;
                    if (it->second == 0) row.erase(it);
                }
            }
            rows.push_back(std::move(row));
            rhs.push_back(Rational(0));
        }
    }

    const SolveResult res = solve_sparse(std::move(rows), std::move(rhs),
                                         static_cast<int>(sigs.size()));
    if (res.status != SolveStatus::unique)
        throw std::runtime_error(res.status == SolveStatus::inconsistent
                                     ? "solve_recursion: inconsistent system"
                                     : "solve_recursion: system not uniquely solvable");

    std::map<Signature, Laurent> entries;
    for (const Signature& f : sigs)
        entries.emplace(f, Laurent::v_pow(modulus_sqrt_exponent(f),
                                          res.solution[static_cast<std::size_t>(index.at(f))]));
    return WhittakerTable(alpha, std::move(entries));
}

}  // namespace whit
