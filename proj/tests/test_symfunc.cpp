#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "whit/symfunc.hpp"

using namespace whit;

namespace {

SatakeParams abc() { return SatakeParams({rational(1, 2), rational(1, 3), rational(0)}); }

}  // namespace

TEST(Elementary, Examples) {
    EXPECT_EQ(elementary(0, abc()), rational(1));
    EXPECT_EQ(elementary(1, abc()), rational(5, 6));
    EXPECT_EQ(elementary(2, abc()), rational(1, 6));
    EXPECT_EQ(elementary(3, abc()), rational(0));  // the zero entry kills e_3
    EXPECT_THROW(elementary(-1, abc()), std::invalid_argument);
    EXPECT_THROW(elementary(4, abc()), std::invalid_argument);
}

TEST(Elementary, MatchesSubsetEnumeration) {
    std::mt19937_64 g(11u);
    for (int t = 0; t < 20; ++t) {
        const int n = 2 + static_cast<int>(g() % 4);
        const SatakeParams a = testutil::random_alpha(g, n, t % 2 == 0);
        for (int i = 0; i <= n; ++i) EXPECT_EQ(elementary(i, a), testutil::e_oracle(i, a.alphas()));
    }
}

TEST(CompleteHomogeneous, Examples) {
    EXPECT_EQ(complete_homogeneous(0, abc()), rational(1));
    EXPECT_EQ(complete_homogeneous(1, abc()), rational(5, 6));
    EXPECT_EQ(complete_homogeneous(2, abc()), rational(19, 36));
    EXPECT_THROW(complete_homogeneous(-1, abc()), std::invalid_argument);
}

TEST(CompleteHomogeneous, MatchesCompositionEnumeration) {
    std::mt19937_64 g(12u);
    for (int t = 0; t < 20; ++t) {
        const int n = 2 + static_cast<int>(g() % 4);
        const SatakeParams a = testutil::random_alpha(g, n, t % 2 == 0);
        for (int k = 0; k <= 6; ++k)
            EXPECT_EQ(complete_homogeneous(k, a), testutil::h_oracle(k, a.alphas()));
    }
}

TEST(Schur, Examples) {
    EXPECT_EQ(schur(Signature({0, 0}), abc()), rational(1));  // empty partition
    for (int k = 0; k <= 6; ++k)
        EXPECT_EQ(schur(Signature({k, 0}), abc()), complete_homogeneous(k, abc()));
    EXPECT_EQ(schur(Signature({2, 1}), abc()), rational(5, 36));
    EXPECT_THROW(schur(Signature({0, 1}), abc()), std::invalid_argument);
    EXPECT_THROW(schur(Signature({1, 0}), SatakeParams({rational(1), rational(2)})),
                 std::invalid_argument);  // rank mismatch
}

TEST(Schur, SsytExamples) {
    EXPECT_EQ(schur_ssyt(Signature({1, 0}), abc()), rational(5, 6));   // single cells = e_1
    EXPECT_EQ(schur_ssyt(Signature({1, 1}), abc()), rational(1, 6));   // one column = e_2
    const SatakeParams ones({rational(1), rational(1), rational(1)});
    EXPECT_EQ(schur_ssyt(Signature({2, 1}), ones), rational(8));       // tableau count
    EXPECT_EQ(schur_ssyt(Signature({2, 1}), abc()), rational(5, 36));
    EXPECT_THROW(schur_ssyt(Signature({13, 0}), abc()), std::invalid_argument);  // over budget
    EXPECT_EQ(schur_ssyt(Signature({13, 0}), abc(), 20),
              complete_homogeneous(13, abc()));  // raised budget
}

TEST(Schur, BialternantRejectsRepeatedParameters) {
    const SatakeParams rep({rational(1, 2), rational(1, 2), rational(0)});
    EXPECT_THROW(schur_bialternant(Signature({1, 0}), rep), std::domain_error);
    // the dispatching evaluator falls back to Jacobi-Trudi
    EXPECT_EQ(schur(Signature({1, 0}), rep), rational(1));
    EXPECT_EQ(schur(Signature({1, 1}), rep), rational(1, 4));  // e_2(1/2,1/2) = 1/4
}

TEST(Schur, OracleTriangle) {
    // bialternant = Jacobi-Trudi = tableau enumeration on all dominant f of
    // weight <= 5 for n <= 4, with distinct, repeated and zero entries
    std::mt19937_64 g(13u);
    for (int n = 2; n <= 4; ++n) {
        std::vector<SatakeParams> alphas;
        alphas.push_back(testutil::random_alpha(g, n, true));
        alphas.push_back(testutil::random_alpha(g, n, false));
        {
            std::vector<Rational> rep;
            const Rational x = testutil::random_rational(g, true);
            for (int t = 0; t < n; ++t) rep.push_back(t < 2 ? x : testutil::random_rational(g));
            alphas.emplace_back(std::move(rep));
        }
        alphas.emplace_back(std::vector<Rational>(static_cast<std::size_t>(n), rational(1)));
        alphas.emplace_back(std::vector<Rational>(static_cast<std::size_t>(n), rational(0)));
        for (const SatakeParams& a : alphas) {
            const bool distinct = [&] {
                for (std::size_t x = 0; x < a.alphas().size(); ++x)
                    for (std::size_t y = x + 1; y < a.alphas().size(); ++y)
                        if (a.alpha(static_cast<int>(x)) == a.alpha(static_cast<int>(y))) return false;
                return true;
            }();
            for (const Signature& f : dominant_signatures(n, 5)) {
                const Rational jt = schur_jacobi_trudi(f, a);
                EXPECT_EQ(jt, schur_ssyt(f, a)) << "f=(" << f.str() << ")";
                if (distinct) {
                    EXPECT_EQ(jt, schur_bialternant(f, a)) << "f=(" << f.str() << ")";
                }
                EXPECT_EQ(jt, schur(f, a));
            }
        }
    }
}

TEST(Schur, SymmetricUnderPermutation) {
    std::mt19937_64 g(14u);
    const SatakeParams a = abc();
    std::vector<Rational> perm = a.alphas();
    std::sort(perm.begin(), perm.end());
    do {
        const SatakeParams b{std::vector<Rational>(perm)};
        for (int i = 0; i <= 3; ++i) EXPECT_EQ(elementary(i, a), elementary(i, b));
        for (int k = 0; k <= 4; ++k) EXPECT_EQ(complete_homogeneous(k, a), complete_homogeneous(k, b));
        for (const Signature& f : dominant_signatures(3, 4)) EXPECT_EQ(schur(f, a), schur(f, b));
    } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST(Schur, SingleColumnIsElementary) {
    std::mt19937_64 g(15u);
    for (int n = 2; n <= 5; ++n) {
        const SatakeParams a = testutil::random_alpha(g, n, true);
        for (int i = 1; i <= n - 1; ++i) {
            std::vector<int> col(static_cast<std::size_t>(n - 1), 0);
            for (int t = 0; t < i; ++t) col[static_cast<std::size_t>(t)] = 1;
            EXPECT_EQ(schur(Signature(col), a), elementary(i, a));
        }
    }
}

TEST(Pieri, ExpandExamples) {
    const auto strs = [](const std::vector<Signature>& v) {
        std::vector<std::string> out;
        for (const auto& s : v) out.push_back(s.str());
        return out;
    };
    EXPECT_EQ(strs(pieri_expand(Signature({0, 0}), 1)), (std::vector<std::string>{"1,0"}));
    EXPECT_EQ(strs(pieri_expand(Signature({1, 0}), 1)), (std::vector<std::string>{"2,0", "1,1"}));
    EXPECT_EQ(strs(pieri_expand(Signature({1, 1}), 2)), (std::vector<std::string>{"2,2"}));
    EXPECT_THROW(pieri_expand(Signature({0, 1}), 1), std::invalid_argument);
    EXPECT_THROW(pieri_expand(Signature({1, 0}), 0), std::invalid_argument);
    EXPECT_THROW(pieri_expand(Signature({1, 0}), 3), std::invalid_argument);
}

TEST(Pieri, IdentityOnRandomParameters) {
    // e_i(alpha) s_f(alpha) = sum of s_g over the dominant expansions, for
    // ramified-shape alpha (trailing zero)
    std::mt19937_64 g(16u);
    for (int n = 2; n <= 5; ++n) {
        for (int rep = 0; rep < 3; ++rep) {
            const SatakeParams a = testutil::random_alpha(g, n, true);
            for (const Signature& f : dominant_signatures(n, 5)) {
                for (int i = 1; i <= n - 1; ++i) {
                    Rational rhs(0);
                    for (const Signature& gg : pieri_expand(f, i)) rhs += schur(gg, a);
                    EXPECT_EQ(elementary(i, a) * schur(f, a), rhs)
                        << "n=" << n << " f=(" << f.str() << ") i=" << i;
                }
            }
        }
    }
}

TEST(Signatures, DominanceAndEnumeration) {
    EXPECT_TRUE(Signature({2, 1}).dominant());
    EXPECT_TRUE(Signature({0, 0}).dominant());
    EXPECT_FALSE(Signature({0, 1}).dominant());
    EXPECT_FALSE(Signature({1, -1}).dominant());
    EXPECT_EQ(Signature({2, 1}).weight(), 3);
    EXPECT_EQ(Signature({2, 1}).rank(), 3);

    const auto sigs = dominant_signatures(3, 2);
    ASSERT_EQ(sigs.size(), 4u);  // (0,0), (1,0), (2,0), (1,1)
    EXPECT_EQ(sigs[0].str(), "0,0");
    EXPECT_EQ(sigs[1].str(), "1,0");
    EXPECT_EQ(sigs[2].str(), "2,0");
    EXPECT_EQ(sigs[3].str(), "1,1");
    for (const auto& s : sigs) EXPECT_TRUE(s.dominant());
    EXPECT_EQ(dominant_signatures(2, 4).size(), 5u);
}
