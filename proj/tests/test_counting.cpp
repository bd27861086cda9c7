#include <gtest/gtest.h>

#include <random>

#include "support/helpers.hpp"

using namespace wvg;
using testing_support::big;
using testing_support::canonical_ints;
using testing_support::canonical_oracle;
using testing_support::game;
using testing_support::int_quota;

namespace {

struct Frozen {
    std::int64_t q;
    std::vector<std::int64_t> w;  // canonical
    std::vector<long long> eta;
    long long winning;
};

// Swing and winning counts obtained by hand enumeration.
const std::vector<Frozen> frozen{
    {6, {5, 4, 1}, {3, 1, 1}, 3},
    {5, {3, 3, 1, 1}, {4, 4, 2, 2}, 6},
    {4, {3, 2, 2, 2}, {3, 3, 3, 3}, 11},
    {6, {5, 4, 4}, {2, 2, 2}, 4},
    {22, {18, 9, 4, 2, 1}, {12, 4, 4, 0, 0}, 12},
    {3, {2, 1}, {1, 1}, 1},
    {1, {3, 2, 1}, {1, 1, 1}, 7},
    {5, {6, 3, 1}, {4, 0, 0}, 4},
    {32, {20, 10, 10, 5, 1, 1, 1}, {40, 16, 16, 8, 4, 4, 4}, 40},
};

std::vector<BigInt> eta_of(const Frozen& f) { return {f.eta.begin(), f.eta.end()}; }

} // namespace

TEST(Oracle, FrozenValues)
{
    for (const auto& f : frozen) {
        const auto o = oracle::enumerate(f.q, f.w);
        EXPECT_EQ(big(o.swings), eta_of(f));
        EXPECT_EQ(o.winning, static_cast<std::uint64_t>(f.winning));
    }
}

TEST(BruteForce, Examples)
{
    for (const auto& f : frozen) {
        const auto r = brute_force_swings(game(f.q, f.w));
        EXPECT_EQ(r.swings.swings, eta_of(f));
        EXPECT_EQ(r.winning_count, f.winning);
    }
    const auto r = brute_force_swings(game(1, {1}));
    EXPECT_EQ(r.swings.swings, big({1}));
    EXPECT_EQ(r.winning_count, 1);
}

TEST(BruteForce, CapIsEnforced)
{
    EXPECT_THROW(brute_force_swings(game(3, std::vector<std::int64_t>(30, 1))), no_backend);
    EXPECT_THROW(brute_force_swings(game(3, {1, 1, 1, 1}), 3), no_backend);
}

TEST(BruteForce, RationalWeights)
{
    const auto g = parse_game("3.5; 2.5, 1.5, 1, 0.5");
    EXPECT_EQ(brute_force_swings(g).swings, brute_force_swings(integer_rescale(g)).swings);
    const auto o = canonical_oracle(7, {5, 3, 2, 1});
    EXPECT_EQ(brute_force_swings(g).swings.swings, big(o.swings));
}

TEST(TwoValue, Examples)
{
    EXPECT_EQ(two_value_swings(CompressedGame(Rational(4), {{1, 3}, {3, 2}})).swings, big({3, 3, 3, 3}));
    EXPECT_EQ(two_value_swings(CompressedGame(Rational(5), {{2, 3}, {2, 1}})).swings,
              big(canonical_oracle(5, {3, 3, 1, 1}).swings));
    EXPECT_THROW(two_value_swings(CompressedGame(Rational(5), {{2, 3}, {2, 1}, {1, Weight(1, 2)}})),
                 precondition_error);
}

TEST(TwoValue, ExhaustiveSmallGames)
{
    for (std::int64_t a = 2; a <= 7; ++a)
        for (std::int64_t b = 1; b < a; ++b)
            for (std::size_t na = 1; na <= 4; ++na)
                for (std::size_t nb = 1; nb <= 5; ++nb) {
                    std::vector<std::int64_t> w(na, a);
                    w.insert(w.end(), nb, b);
                    const std::int64_t total = a * static_cast<std::int64_t>(na) + b * static_cast<std::int64_t>(nb);
                    for (std::int64_t q = 1; q <= total; ++q) {
                        const auto c = compress(game(q, w));
                        const auto o = oracle::enumerate(q, w);
                        ASSERT_EQ(two_value_swings(c).swings, big(o.swings));
                        ASSERT_EQ(k_value_winning_count(c), o.winning);
                    }
                }
}

TEST(KValue, Examples)
{
    const CompressedGame g(Rational(6), {{1, 5}, {1, 4}, {1, 1}});
    EXPECT_EQ(k_value_swings(g).swings, big({3, 1, 1}));
    EXPECT_EQ(k_value_winning_count(g), 3);
    const auto seq = compress(game(32, {20, 10, 10, 5, 1, 1, 1}));
    EXPECT_EQ(k_value_swings(seq).swings, big({40, 16, 16, 8, 4, 4, 4}));
    EXPECT_EQ(k_value_winning_count(seq), 40);
}

TEST(KValue, RandomThreeClassGames)
{
    for (std::uint64_t seed = 0; seed < 400; ++seed) {
        const auto g = random_game(3 + seed % 13, 25, seed, GameShape::k_value(3));
        const auto o = canonical_oracle(int_quota(g), canonical_ints(g));
        const auto c = compress(g);
        ASSERT_EQ(k_value_swings(c).swings, big(o.swings)) << to_text(g);
        ASSERT_EQ(k_value_winning_count(c), o.winning);
    }
}

TEST(KValue, ManyClasses)
{
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const std::size_t k = 1 + seed % 6;
        const auto g = random_game(k + seed % 8, 40, seed, GameShape::k_value(k));
        const auto o = canonical_oracle(int_quota(g), canonical_ints(g));
        ASSERT_EQ(k_value_swings(compress(g)).swings, big(o.swings)) << to_text(g);
    }
}

TEST(KValue, RationalWeightsAndHugeWeights)
{
    const auto g = parse_game("3.5; 2.5, 2.5, 1.5, 1.5, 0.5");
    EXPECT_EQ(k_value_swings(compress(g)), brute_force_swings(g).swings);
    // weights beyond 64 bits take the big-integer path
    const auto huge = scale_game(game(32, {20, 10, 10, 5, 1, 1, 1}), Rational(pow2(100)));
    EXPECT_EQ(k_value_swings(compress(huge)).swings, big({40, 16, 16, 8, 4, 4, 4}));
    EXPECT_EQ(k_value_winning_count(compress(huge)), 40);
}

TEST(KValue, ClassReplicationMatchesExpansion)
{
    // doubling every class size equals the oracle on the expanded game
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const std::size_t k = 2 + seed % 2;
        const auto g = random_game(k + seed % 4, 12, seed, GameShape::k_value(k));
        const auto c = compress(g);
        std::vector<WeightClass> doubled(c.classes().begin(), c.classes().end());
        for (auto& cls : doubled)
            cls.count *= 2;
        const CompressedGame d(c.quota(), doubled);
        const auto e = d.expand();
        const auto o = oracle::enumerate(int_quota(e), canonical_ints(e));
        ASSERT_EQ(k_value_swings(d).swings, big(o.swings));
        ASSERT_EQ(k_value_winning_count(d), o.winning);
    }
}

TEST(KValue, ZeroWeightRejected)
{
    EXPECT_THROW(k_value_swings(compress(game(2, {2, 1, 0}))), precondition_error);
}

TEST(Dp, Examples)
{
    EXPECT_EQ(dp_swings(game(6, {5, 4, 1})).swings, big({3, 1, 1}));
    EXPECT_EQ(dp_swings(game(10, {10})).swings, big({1}));
    EXPECT_EQ(dp_swings(game(34, {18, 9, 4, 2, 1})).swings, big({1, 1, 1, 1, 1}));
    EXPECT_EQ(dp_winning_count(game(6, {5, 4, 1})), 3);
}

TEST(Dp, TableInvariant)
{
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const auto g = random_game(1 + seed % 12, 20, seed);
        for (std::size_t i = 0; i < g.size(); ++i) {
            const auto t = dp_table(g, i);
            const BigInt sum = std::accumulate(t.counts.begin(), t.counts.end(), t.overflow_count);
            EXPECT_EQ(sum, pow2(g.size() - 1));
        }
        const auto full = dp_table(g);
        EXPECT_EQ(std::accumulate(full.counts.begin(), full.counts.end(), full.overflow_count), pow2(g.size()));
        EXPECT_EQ(full.overflow_count, dp_winning_count(g));
    }
}

TEST(Dp, Preconditions)
{
    EXPECT_THROW(dp_swings(parse_game("1.5; 1, 1")), precondition_error);
    EXPECT_THROW(dp_swings(game(1000, {600, 600}), DpOptions{DpMode::recompute, 100}), no_backend);
}

TEST(Dp, ModesAgree)
{
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const auto g = random_game(1 + seed % 14, 30, seed);
        const auto base = dp_swings(g);
        EXPECT_EQ(dp_swings(g, {DpMode::downdate}), base);
        EXPECT_EQ(dp_swings(g, {DpMode::self_check}), base);
        const auto o = canonical_oracle(int_quota(g), canonical_ints(g));
        ASSERT_EQ(base.swings, big(o.swings));
        ASSERT_EQ(dp_winning_count(g), o.winning);
    }
}

TEST(Gf, PlayerPolynomialsOfWorkedExample)
{
    const auto g = game(6, {5, 4, 1});
    using P = SparsePolynomial<BigInt>;
    EXPECT_EQ(gf_player_polynomial(g, 0), P({{0, 1}, {1, 1}, {4, 1}, {5, 1}}));
    EXPECT_EQ(gf_player_polynomial(g, 1), P({{0, 1}, {1, 1}, {5, 1}, {6, 1}}));
    EXPECT_EQ(gf_player_polynomial(g, 2), P({{0, 1}, {4, 1}, {5, 1}, {9, 1}}));
    EXPECT_EQ(gf_player_polynomial(game(1, {1}), 0), P());
    EXPECT_THROW(gf_player_polynomial(g, 3), precondition_error);
}

TEST(Gf, Examples)
{
    const auto r = gf_swings(game(6, {5, 4, 1}));
    EXPECT_EQ(r.swings.swings, big({3, 1, 1}));
    EXPECT_EQ(r.winning_count, 3);
    EXPECT_EQ(assemble_report(r).banzhaf, (std::vector<Rational>{Rational(3, 5), Rational(1, 5), Rational(1, 5)}));
    EXPECT_EQ(gf_full_polynomial(gen_3game(2)).coefficient(4), 4);
    EXPECT_EQ(gf_term_count(game(6, {5, 4, 1})), 7u);
}

TEST(Gf, Normalization)
{
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const auto g = random_game(1 + seed % 12, 50, seed);
        const auto f = integer_form(g);
        for (std::size_t i = 0; i < g.size(); ++i) {
            const auto p = gf_player_polynomial(g, i);
            EXPECT_EQ(p.sum(), pow2(g.size() - 1));
            EXPECT_EQ(p.max_exponent(), f.total - f.weights[i]);
            for (const auto& [e, c] : p.terms())
                EXPECT_GT(c, 0);
        }
    }
}

TEST(Gf, ModesAgreeWithDp)
{
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const auto g = random_game(1 + seed % 14, 30, seed);
        const auto r = gf_swings(g);
        EXPECT_EQ(r.swings, dp_swings(g));
        EXPECT_EQ(r.winning_count, dp_winning_count(g));
        EXPECT_EQ(gf_swings(g, {GfMode::divide}).swings, r.swings);
        EXPECT_EQ(gf_swings(g, {GfMode::self_check}).swings, r.swings);
    }
}

TEST(Gf, ZeroWeights)
{
    for (const auto& w : std::vector<std::vector<std::int64_t>>{{2, 1, 0}, {3, 0, 0, 2}, {5, 4, 1, 0, 0, 0}}) {
        std::int64_t total = 0;
        for (auto x : w)
            total += x;
        for (std::int64_t q = 1; q <= total; ++q) {
            const auto g = game(q, w);
            const auto o = canonical_oracle(q, w);
            EXPECT_EQ(gf_swings(g).swings.swings, big(o.swings));
            EXPECT_EQ(gf_swings(g).winning_count, o.winning);
            EXPECT_EQ(gf_swings(g, {GfMode::self_check}).swings.swings, big(o.swings));
            EXPECT_EQ(dp_swings(g, {DpMode::self_check}).swings, big(o.swings));
            EXPECT_EQ(dp_winning_count(g), o.winning);
            EXPECT_EQ(brute_force_swings(g).swings.swings, big(o.swings));
        }
    }
}

TEST(SparsePolynomial, MultiplyAndDivide)
{
    using P = SparsePolynomial<BigInt>;
    P p;
    p.multiply_binomial(2).multiply_binomial(3).multiply_binomial(2);
    EXPECT_EQ(p, P({{0, 1}, {2, 2}, {3, 1}, {4, 1}, {5, 2}, {7, 1}}));
    EXPECT_EQ(p.range_sum(2, 4), 4);
    EXPECT_EQ(p.coefficient(6), 0);
    P q = p;
    q.divide_binomial(3);
    EXPECT_EQ(q, P({{0, 1}, {2, 2}, {4, 1}}));
    q.divide_binomial(2).divide_binomial(2);
    EXPECT_EQ(q, P());
    EXPECT_THROW(P().divide_binomial(1), precondition_error);
    P z;
    z.multiply_binomial(0);
    EXPECT_EQ(z, P({{0, 2}}));
    z.divide_binomial(0);
    EXPECT_EQ(z, P());
    EXPECT_EQ(P({{3, 1}, {3, 2}, {1, 0}}), P({{3, 3}}));
}

TEST(WinningCount, Examples)
{
    EXPECT_EQ(winning_coalition_count(game(6, {5, 4, 1})), 3);
    EXPECT_EQ(winning_coalition_count(game(34, {18, 9, 4, 2, 1})), 1);
    EXPECT_EQ(winning_coalition_count(game(1, {3, 2, 1})), 7);
    const auto big_game = game(40, std::vector<std::int64_t>(80, 1));
    EXPECT_EQ(winning_coalition_count(big_game), *equal_weight_swings(80, Weight(1), Rational(40)).winning_count);
}

TEST(CountingProperties, TotalSwingsConsistent)
{
    // sum_i eta_i = sum over winning S of the number of critical players in S
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const auto g = random_game(1 + seed % 10, 20, seed);
        const auto w = canonical_ints(g);
        const auto q = int_quota(g);
        std::uint64_t critical = 0;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << w.size()); ++mask) {
            std::int64_t s = 0;
            for (std::size_t i = 0; i < w.size(); ++i)
                if (mask >> i & 1)
                    s += w[i];
            if (s < q)
                continue;
            for (std::size_t i = 0; i < w.size(); ++i)
                critical += (mask >> i & 1) && s - w[i] < q;
        }
        EXPECT_EQ(gf_swings(g).swings.total(), critical);
    }
}

TEST(CountingProperties, SwingsMonotoneInWeight)
{
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        const auto g = random_game(1 + seed % 14, 25, seed);
        const auto s = dp_swings(g);
        for (std::size_t i = 0; i + 1 < g.size(); ++i)
            EXPECT_GE(s[i], s[i + 1]) << to_text(g);
    }
}

TEST(CountingProperties, AllBackendsMatchOracle)
{
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        const auto g = random_game(1 + seed % 12, 1 + seed % 30, seed);
        const auto o = canonical_oracle(int_quota(g), canonical_ints(g));
        const auto expected = big(o.swings);
        ASSERT_EQ(brute_force_swings(g).swings.swings, expected);
        ASSERT_EQ(dp_swings(g).swings, expected);
        ASSERT_EQ(gf_swings(g).swings.swings, expected);
        ASSERT_EQ(k_value_swings(compress(g)).swings, expected);
        ASSERT_EQ(winning_coalition_count(g), o.winning);
    }
}
