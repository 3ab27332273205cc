#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "whit/rational.hpp"

namespace whit {

// Dense polynomial in X with rational coefficients; index = degree.
using RatPoly = std::vector<Rational>;

inline RatPoly poly_mul(const RatPoly& a, const RatPoly& b) {
    if (a.empty() || b.empty()) return {};
    RatPoly out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

inline void poly_trim(RatPoly& p) {
    while (p.size() > 1 && p.back() == 0) p.pop_back();
}

// Expanded product of (1 - r X) over the given values; zero values contribute
// the factor 1, so the result carries no structural trailing zeros.
inline RatPoly product_one_minus(const std::vector<Rational>& roots) {
    RatPoly p{Rational(1)};
    for (const Rational& r : roots) {
        if (r == 0) continue;
        p.push_back(Rational(0));
        for (std::size_t k = p.size() - 1; k >= 1; --k) p[k] -= r * p[k - 1];
    }
    return p;
}

inline std::string poly_str(const RatPoly& p, const std::string& var = "X") {
    std::string out;
    bool first = true;
    for (std::size_t k = 0; k < p.size(); ++k) {
        if (p[k] == 0) continue;
        const bool neg = p[k] < 0;
        if (first) {
            if (neg) out += '-';
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        const Rational mag = neg ? Rational(-p[k]) : p[k];
        out += mag.get_str();
        if (k == 1) out += "*" + var;
        if (k > 1) out += "*" + var + "^" + std::to_string(k);
    }
    return first ? "0" : out;
}

// Power series in X = q^{-s} truncated at a fixed order; coefficients exact.
// Arithmetic is closed at the truncation order, so orders must agree.
class TruncSeries {
public:
    explicit TruncSeries(int order) : c_(static_cast<std::size_t>(check_order(order)) + 1) {}

    static TruncSeries from_poly(const RatPoly& p, int order) {
        TruncSeries s(order);
        for (std::size_t k = 0; k < p.size() && k <= static_cast<std::size_t>(order); ++k)
            s.c_[k] = p[k];
        return s;
    }

    int order() const { return static_cast<int>(c_.size()) - 1; }

    const Rational& coeff(int k) const { return c_.at(static_cast<std::size_t>(k)); }
    void set_coeff(int k, Rational value) { c_.at(static_cast<std::size_t>(k)) = std::move(value); }
    const std::vector<Rational>& coeffs() const { return c_; }

    TruncSeries& operator+=(const TruncSeries& o) {
        match(o);
        for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
        return *this;
    }
    TruncSeries& operator-=(const TruncSeries& o) {
        match(o);
        for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
        return *this;
    }
    friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
    friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }

    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
        a.match(b);
        TruncSeries out(a.order());
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; i + j < b.c_.size(); ++j) out.c_[i + j] += a.c_[i] * b.c_[j];
        }
        return out;
    }

    bool operator==(const TruncSeries&) const = default;

    std::string str(const std::string& var = "X") const {
        std::string body = poly_str(c_, var);
        return body + " + O(" + var + "^" + std::to_string(order() + 1) + ")";
    }

private:
    std::vector<Rational> c_;

    static int check_order(int order) {
        if (order < 0) throw std::invalid_argument("TruncSeries: negative order");
        return order;
    }
    void match(const TruncSeries& o) const {
        if (c_.size() != o.c_.size())
            throw std::invalid_argument("TruncSeries: truncation orders differ");
    }
};

// Multiplicative inverse of p mod X^{order+1}. The constant term must be 1
// (the normalization of an L-factor denominator).
inline TruncSeries series_invert(const RatPoly& p, int order) {
    if (p.empty() || p[0] != 1)
        throw std::invalid_argument("series_invert: constant term must be 1");
    TruncSeries t(order);
    t.set_coeff(0, Rational(1));
    for (int k = 1; k <= order; ++k) {
        Rational acc(0);
        for (int j = 1; j <= k && j < static_cast<int>(p.size()); ++j) acc += p[j] * t.coeff(k - j);
        t.set_coeff(k, Rational(-acc));
    }
    return t;
}

}  // namespace whit
