#pragma once

// Test-only brute-force oracles and random input generators. These stay
// independent of the library's computation paths on purpose: the library
// evaluates e_i and h_k by prefix recurrences, the oracles here by direct
// subset / composition enumeration.

#include <functional>
#include <random>
#include <vector>

#include "whit/laurent.hpp"
#include "whit/rational.hpp"
#include "whit/satake.hpp"
#include "whit/signature.hpp"

namespace testutil {

inline whit::Rational e_oracle(int i, const std::vector<whit::Rational>& a) {
    const int n = static_cast<int>(a.size());
    whit::Rational sum(0);
    for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
        if (__builtin_popcountl(mask) != i) continue;
        whit::Rational prod(1);
        for (int b = 0; b < n; ++b)
            if (mask & (1ul << b)) prod *= a[static_cast<std::size_t>(b)];
        sum += prod;
    }
    return sum;
}

inline whit::Rational h_oracle(int k, const std::vector<whit::Rational>& a) {
    const int n = static_cast<int>(a.size());
    whit::Rational sum(0);
    std::function<void(int, int, const whit::Rational&)> rec =
        [&](int idx, int remaining, const whit::Rational& prod) {
            if (idx == n - 1) {
                sum += prod * whit::rat_pow(a[static_cast<std::size_t>(idx)],
                                            static_cast<unsigned long>(remaining));
                return;
            }
            for (int t = 0; t <= remaining; ++t)
                rec(idx + 1, remaining - t,
                    whit::Rational(prod * whit::rat_pow(a[static_cast<std::size_t>(idx)],
                                                        static_cast<unsigned long>(t))));
        };
    rec(0, k, whit::Rational(1));
    return sum;
}

inline whit::Rational random_rational(std::mt19937_64& g, bool nonzero = false) {
    std::uniform_int_distribution<long> num(-6, 6), den(1, 6);
    for (;;) {
        const whit::Rational r = whit::rational(num(g), den(g));
        if (!nonzero || r != 0) return r;
    }
}

// ramified = true pads with a trailing zero (positive conductor shape);
// otherwise every entry is nonzero.
inline whit::SatakeParams random_alpha(std::mt19937_64& g, int n, bool ramified) {
    std::vector<whit::Rational> a;
    for (int t = 0; t < n - 1; ++t) a.push_back(random_rational(g, !ramified));
    a.push_back(ramified ? whit::Rational(0) : random_rational(g, true));
    return whit::SatakeParams(std::move(a));
}

inline whit::Laurent random_laurent(std::mt19937_64& g) {
    std::uniform_int_distribution<int> nterms(0, 4), expo(-5, 5);
    whit::Laurent out;
    const int k = nterms(g);
    for (int t = 0; t < k; ++t) out += whit::Laurent::v_pow(expo(g), random_rational(g));
    return out;
}

// A signature violating dominance (some descent broken or a negative tail).
inline whit::Signature random_non_dominant(std::mt19937_64& g, int n) {
    std::uniform_int_distribution<int> part(-4, 7);
    for (;;) {
        std::vector<int> parts;
        for (int t = 0; t < n - 1; ++t) parts.push_back(part(g));
        whit::Signature f(std::move(parts));
        if (!f.dominant()) return f;
    }
}

}  // namespace testutil
