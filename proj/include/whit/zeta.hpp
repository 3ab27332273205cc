#pragma once

#include <stdexcept>
#include <string>

#include "whit/series.hpp"
#include "whit/whittaker.hpp"

namespace whit {

// Z(s, W) for the normalized newform, as a truncated series in X = q^{-s}.
// The coefficient of X^k is W(w^{(k,0,...,0)}) with the measure factor
// v^{k(n-1)} restored; the v-powers must cancel to a plain rational, and a
// failure of that cancellation is an internal error, not an input error.
inline TruncSeries zeta_series(const SatakeParams& alpha, int order) {
    if (order < 0) throw std::invalid_argument("zeta_series: negative order");
    const int n = alpha.rank();
    TruncSeries z(order);
    for (int k = 0; k <= order; ++k) {
        std::vector<int> parts(static_cast<std::size_t>(n - 1), 0);
        parts[0] = k;
        const Laurent w = whittaker_value(Signature(std::move(parts)), alpha);
        const Laurent c = Laurent::v_pow(static_cast<long>(k) * (n - 1)) * w;
        const auto r = c.as_rational();
        if (!r) throw std::logic_error("zeta_series: residual v-power at X^" + std::to_string(k));
        z.set_coeff(k, *r);
    }
    return z;
}

// L(s, pi) = prod (1 - a_i q^{-s})^{-1} as a truncated series: geometric
// inversion of the expanded denominator.
inline TruncSeries lfactor_series(const SatakeParams& alpha, int order) {
    return series_invert(product_one_minus(alpha.alphas()), order);
}

struct ZetaReport {
    int order = 0;
    bool equal = false;
    int first_mismatch = -1;  // -1 when equal
    Rational zeta_coeff;
    Rational lfactor_coeff;
};

// Coefficientwise comparison of the zeta integral against the L-factor
// through the given order, exactly.
inline ZetaReport zeta_equals_lfactor(const SatakeParams& alpha, int order) {
    if (order < 1) throw std::invalid_argument("zeta_equals_lfactor: order >= 1");
    const TruncSeries z = zeta_series(alpha, order);
    const TruncSeries l = lfactor_series(alpha, order);
    for (int k = 0; k <= order; ++k)
        if (z.coeff(k) != l.coeff(k)) return {order, false, k, z.coeff(k), l.coeff(k)};
    return {order, true, -1, {}, {}};
}

}  // namespace whit
