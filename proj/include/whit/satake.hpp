#pragma once

#include <stdexcept>
#include <vector>

#include "whit/rational.hpp"

namespace whit {

// Inverse roots a_1..a_n of the local L-factor L(s,pi) = prod (1 - a_i q^{-s})^{-1}.
// When the L-factor degree drops below n (positive conductor) the vector is
// padded with a trailing zero; every downstream value is symmetric in the
// entries, so their order never matters.
class SatakeParams {
public:
    explicit SatakeParams(std::vector<Rational> alphas) : a_(std::move(alphas)) {
        if (a_.size() < 2) throw std::invalid_argument("SatakeParams: need n >= 2 entries");
    }

    int rank() const { return static_cast<int>(a_.size()); }  // n
    const std::vector<Rational>& alphas() const { return a_; }
    const Rational& alpha(int i) const { return a_.at(static_cast<std::size_t>(i)); }  // 0-based

    bool conductor_positive() const { return a_.back() == 0; }

private:
    std::vector<Rational> a_;
};

}  // namespace whit
