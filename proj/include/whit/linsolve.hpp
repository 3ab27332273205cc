#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "whit/rational.hpp"

namespace whit {

enum class SolveStatus { unique, underdetermined, inconsistent };

struct SolveResult {
    SolveStatus status = SolveStatus::underdetermined;
    std::vector<Rational> solution;  // populated only when status == unique
};

// Exact Gaussian elimination on sparse rows over Q. Redundant rows are fine;
// the outcome is `unique` iff the system is consistent with full column rank.
inline SolveResult solve_sparse(std::vector<std::map<int, Rational>> rows,
                                std::vector<Rational> rhs, int unknowns) {
    if (rows.size() != rhs.size())
        throw std::invalid_argument("solve_sparse: row/rhs size mismatch");
    std::map<int, int> pivot_row;  // leading column -> index into piv/prhs
    std::vector<std::map<int, Rational>> piv;
    std::vector<Rational> prhs;

    for (std::size_t k = 0; k < rows.size(); ++k) {
        auto& row = rows[k];
        Rational b = rhs[k];
        while (!row.empty()) {
            const int lead = row.begin()->first;
            if (lead < 0 || lead >= unknowns)
                throw std::invalid_argument("solve_sparse: column index out of range");
            const auto hit = pivot_row.find(lead);
            if (hit == pivot_row.end()) {
                // becomes a new pivot row, normalized to leading coefficient 1
                const Rational lc = row.begin()->second;
                for (auto& [c, v] : row) v /= lc;
                b /= lc;
                pivot_row.emplace(lead, static_cast<int>(piv.size()));
                piv.push_back(std::move(row));
                prhs.push_back(std::move(b));
                break;
            }
            const auto& pr = piv[static_cast<std::size_t>(hit->second)];
            const Rational factor = row.begin()->second;
            for (const auto& [c, v] : pr) {
                auto it = row.find(c);
                if (it == row.end()) {
                    Rational nv = -factor * v;
                    if (nv != 0) row.emplace(c, std::move(nv));
                } else {
                    it->second -= factor * v;
                    if (it->second == 0) row.erase(it);
                }
            }
            b -= factor * prhs[static_cast<std::size_t>(hit->second)];
        }
        if (row.empty() && b != 0) return {SolveStatus::inconsistent, {}};
    }

    if (static_cast<int>(pivot_row.size()) < unknowns) return {SolveStatus::underdetermined, {}};

    std::vector<Rational> x(static_cast<std::size_t>(unknowns));
    for (auto it = pivot_row.rbegin(); it != pivot_row.rend(); ++it) {
        const auto& pr = piv[static_cast<std::size_t>(it->second)];
        Rational val = prhs[static_cast<std::size_t>(it->second)];
        for (const auto& [c, v] : pr)
            if (c > it->first) val -= v * x[static_cast<std::size_t>(c)];
        x[static_cast<std::size_t>(it->first)] = std::move(val);
    }
    return {SolveStatus::unique, std::move(x)};
}

}  // namespace whit
