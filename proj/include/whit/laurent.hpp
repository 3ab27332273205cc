#pragma once

#include <cmath>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "whit/rational.hpp"

namespace whit {

// Laurent polynomial in v, the formal positive square root of q (v^2 = q).
// Half-integral powers of q are exact in this ring: q^{k/2} = v^k.
//
// Terms are stored as exponent -> coefficient with zero coefficients never
// kept, so the empty map is the canonical zero and operator== is exact.
class Laurent {
public:
    Laurent() = default;
    Laurent(const Rational& c) {
        if (c != 0) c_.emplace(0, c);
    }
    Laurent(long c) : Laurent(Rational(c)) {}

    // coeff * v^e as a one-term value.
    static Laurent v_pow(long e, Rational coeff = Rational(1)) {
        Laurent x;
        if (coeff != 0) x.c_.emplace(e, std::move(coeff));
        return x;
    }

    bool is_zero() const { return c_.empty(); }

    Rational coeff(long e) const {
        const auto it = c_.find(e);
        return it == c_.end() ? Rational(0) : it->second;
    }

    const std::map<long, Rational>& terms() const { return c_; }

    // Engaged only when the value is supported on v^0 alone (or is zero).
    std::optional<Rational> as_rational() const {
        if (c_.empty()) return Rational(0);
        if (c_.size() == 1 && c_.begin()->first == 0) return c_.begin()->second;
        return std::nullopt;
    }

    Laurent& operator+=(const Laurent& o) {
        for (const auto& [e, c] : o.c_) add_term(e, c);
        return *this;
    }
    Laurent& operator-=(const Laurent& o) {
        for (const auto& [e, c] : o.c_) add_term(e, Rational(-c));
        return *this;
    }

    friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
    friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
    Laurent operator-() const {
        Laurent out;
        for (const auto& [e, c] : c_) out.c_.emplace(e, Rational(-c));
        return out;
    }

    friend Laurent operator*(const Laurent& a, const Laurent& b) {
        Laurent out;
        for (const auto& [ea, ca] : a.c_)
            for (const auto& [eb, cb] : b.c_) out.add_term(ea + eb, Rational(ca * cb));
        return out;
    }
    friend Laurent operator*(const Laurent& a, const Rational& r) { return a * Laurent(r); }
    friend Laurent operator*(const Rational& r, const Laurent& a) { return a * Laurent(r); }

    bool operator==(const Laurent&) const = default;

    // Substitutes v = +sqrt(q) and sums in double precision. Display only;
    // never part of any verification path.
    double eval_at(unsigned long q) const {
        if (q < 2) throw std::invalid_argument("Laurent::eval_at: q must be >= 2");
        const double sq = std::sqrt(static_cast<double>(q));
        double sum = 0.0;
        for (const auto& [e, c] : c_) sum += c.get_d() * std::pow(sq, static_cast<double>(e));
        return sum;
    }

    // Canonical text form: terms "c" or "c*v^e" with exponents strictly
    // descending, joined by " + " / " - "; "0" for zero.
    std::string str() const {
        if (c_.empty()) return "0";
        std::string out;
        bool first = true;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            const bool neg = it->second < 0;
            if (first) {
                if (neg) out += '-';
                first = false;
            } else {
                out += neg ? " - " : " + ";
            }
            const Rational mag = neg ? Rational(-it->second) : it->second;
            out += mag.get_str();
            if (it->first != 0) {
                out += "*v^";
                out += std::to_string(it->first);
            }
        }
        return out;
    }

    // Inverse of str(); also accepts non-canonical term order or repeats.
    static Laurent parse(const std::string& text) {
        if (text.empty()) throw std::invalid_argument("Laurent::parse: empty string");
        if (text == "0") return {};
        Laurent out;
        std::size_t pos = 0;
        bool negative = false;
        if (text[0] == '-') {
            negative = true;
            pos = 1;
        }
        for (;;) {
            const std::size_t end = text.find(' ', pos);
            const std::string term =
                text.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
            if (term.empty()) throw std::invalid_argument("Laurent::parse: malformed '" + text + "'");
            const std::size_t star = term.find("*v^");
            Rational c = parse_rational(term.substr(0, star));
            long e = 0;
            if (star != std::string::npos) {
                const std::string es = term.substr(star + 3);
                std::size_t used = 0;
                e = std::stol(es, &used);
                if (used != es.size()) throw std::invalid_argument("Laurent::parse: bad exponent in '" + term + "'");
            }
            out.add_term(e, negative ? Rational(-c) : c);
            if (end == std::string::npos) break;
            if (end + 3 > text.size() || (text[end + 1] != '+' && text[end + 1] != '-') ||
                text[end + 2] != ' ')
                throw std::invalid_argument("Laurent::parse: malformed separator in '" + text + "'");
            negative = text[end + 1] == '-';
            pos = end + 3;
        }
        return out;
    }

private:
    std::map<long, Rational> c_;

    void add_term(long e, const Rational& c) {
        if (c == 0) return;
        auto [it, fresh] = c_.try_emplace(e, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) c_.erase(it);
        }
    }
};

}  // namespace whit
