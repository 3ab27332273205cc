#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

namespace whit {

// Exponent vector f in Z^{n-1} indexing the torus point
// diag(w^{f_1}, ..., w^{f_{n-1}}, 1) of GL_n, w a uniformizer.
class Signature {
public:
    explicit Signature(std::vector<int> parts) : p_(std::move(parts)) {
        if (p_.empty()) throw std::invalid_argument("Signature: need at least one part (n >= 2)");
    }

    static Signature zero(int n) {
        if (n < 2) throw std::invalid_argument("Signature: n >= 2 required");
        return Signature(std::vector<int>(static_cast<std::size_t>(n - 1), 0));
    }

    int rank() const { return static_cast<int>(p_.size()) + 1; }  // n
    int length() const { return static_cast<int>(p_.size()); }    // n - 1
    const std::vector<int>& parts() const { return p_; }
    int part(int j) const { return p_.at(static_cast<std::size_t>(j)); }  // 0-based

    long weight() const {
        long w = 0;
        for (int x : p_) w += x;
        return w;
    }

    // f_1 >= f_2 >= ... >= f_{n-1} >= 0: the support of the newform
    // Whittaker function on the torus.
    bool dominant() const {
        for (std::size_t j = 1; j < p_.size(); ++j)
            if (p_[j - 1] < p_[j]) return false;
        return p_.back() >= 0;
    }

    std::string str() const {
        std::string out;
        for (std::size_t j = 0; j < p_.size(); ++j) {
            if (j) out += ',';
            out += std::to_string(p_[j]);
        }
        return out;
    }

    auto operator<=>(const Signature&) const = default;

private:
    std::vector<int> p_;
};

namespace detail {

inline void gen_partitions(int remaining, int max_part, int slots_left, std::vector<int>& cur,
                           int total_slots, std::vector<Signature>& out) {
    if (remaining == 0) {
        std::vector<int> padded = cur;
        padded.resize(static_cast<std::size_t>(total_slots), 0);
        out.emplace_back(std::move(padded));
        return;
    }
    if (slots_left == 0) return;
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        cur.push_back(part);
        gen_partitions(remaining - part, part, slots_left - 1, cur, total_slots, out);
        cur.pop_back();
    }
}

}  // namespace detail

// All dominant signatures for GL_n with weight <= max_weight, in graded order
// (weight ascending, lexicographically descending within a weight).
inline std::vector<Signature> dominant_signatures(int n, int max_weight) {
    if (n < 2) throw std::invalid_argument("dominant_signatures: n >= 2 required");
    if (max_weight < 0) throw std::invalid_argument("dominant_signatures: negative weight bound");
    std::vector<Signature> out;
    std::vector<int> cur;
    for (int w = 0; w <= max_weight; ++w)
        detail::gen_partitions(w, w, n - 1, cur, n - 1, out);
    return out;
}

}  // namespace whit
