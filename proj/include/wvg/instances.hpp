#ifndef WVG_INSTANCES_HPP
#define WVG_INSTANCES_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "wvg/classifier.hpp"
#include "wvg/game.hpp"

namespace wvg {

/// SUBSET SUM: is there a subset of z summing to exactly `target`?
/// The reduction needs target < Z = 1 + sum(z).
struct SubsetSumInstance {
    std::vector<std::int64_t> z;
    std::int64_t target = 0;

    BigInt big_z() const
    {
        BigInt s = 1;
        for (auto v : z)
            s += v;
        return s;
    }

    void validate() const
    {
        for (auto v : z)
            if (v <= 0)
                throw invalid_game("subset-sum items must be positive");
        if (target < 0)
            throw invalid_game("subset-sum target must be nonnegative");
        if (target >= big_z())
            throw invalid_game("subset-sum target must be below Z = 1 + sum(z)");
    }
};

inline constexpr std::size_t default_subset_sum_cap = 20;

/// Exhaustive decision over all 2^m subsets.
inline bool subset_sum_oracle(const SubsetSumInstance& inst, std::size_t cap = default_subset_sum_cap)
{
    if (inst.z.size() > cap)
        throw precondition_error("subset-sum oracle limited to " + std::to_string(cap) + " items");
    const std::uint64_t subsets = std::uint64_t{1} << inst.z.size();
    for (std::uint64_t mask = 0; mask < subsets; ++mask) {
        std::int64_t s = 0;
        for (std::size_t j = 0; j < inst.z.size(); ++j)
            if (mask >> j & 1)
                s += inst.z[j];
        if (s == inst.target)
            return true;
    }
    return false;
}

/// 2m players with weights 3^{m-1}, 3^{m-1}, ..., 3, 3, 1, 1 and quota
/// (3^m - 1)/2 + 1, so a coalition of weight exactly (3^m - 1)/2 just loses.
inline WeightedGame gen_3game(std::size_t m)
{
    if (m == 0)
        throw precondition_error("3game needs m >= 1");
    std::vector<Weight> w;
    w.reserve(2 * m);
    for (std::size_t j = m; j-- > 0;) {
        const BigInt p = ipow(3, j);
        w.emplace_back(p);
        w.emplace_back(p);
    }
    const BigInt target = (ipow(3, m) - 1) / 2;
    return WeightedGame::from_canonical(Rational(target + 1), std::move(w));
}

/// Caller index of the unit player in gen_reduction games.
inline constexpr std::size_t reduction_unit_player = 0;

/// Weight the non-unit players must hit exactly: (3^m - 1)/2 Z + T.
inline BigInt reduction_target(const SubsetSumInstance& inst)
{
    return (ipow(3, inst.z.size()) - 1) / 2 * inst.big_z() + inst.target;
}

/**
 * 2m + 1 players: the unit player (weight 1, caller index 0), then for
 * j = 0..m-1 the pair 3^j Z + z_{j+1}, 3^j Z. Quota is reduction_target + 1,
 * so the unit player swings iff some coalition of the others weighs exactly
 * reduction_target, iff the instance is a YES instance.
 */
inline WeightedGame gen_reduction(const SubsetSumInstance& inst)
{
    inst.validate();
    const BigInt z_total = inst.big_z();
    std::vector<Weight> w{Weight(1)};
    for (std::size_t j = 0; j < inst.z.size(); ++j) {
        const BigInt base = ipow(3, j) * z_total;
        w.emplace_back(base + inst.z[j]);
        w.emplace_back(base);
    }
    return WeightedGame::from_weights(Rational(reduction_target(inst) + 1), std::move(w));
}

/// Requested structure of a random game.
struct GameShape {
    enum class Kind { general, two_value, k_value, geometric, unbalanced };
    Kind kind = Kind::general;
    std::size_t k = 0;
    Rational ratio = 0;

    static GameShape general() { return {}; }
    static GameShape two_value() { return {Kind::two_value, 2, 0}; }
    static GameShape k_value(std::size_t k) { return {Kind::k_value, k, 0}; }
    static GameShape geometric(Rational r) { return {Kind::geometric, 0, std::move(r)}; }
    static GameShape unbalanced() { return {Kind::unbalanced, 0, 0}; }
};

namespace detail {

/// Uniform integer in [lo, hi] by rejection over 64-bit chunks.
inline BigInt uniform_bigint(std::mt19937_64& rng, const BigInt& lo, const BigInt& hi)
{
    const BigInt span = hi - lo + 1;
    const std::size_t bits = boost::multiprecision::msb(span) + 1;
    for (;;) {
        BigInt x = 0;
        for (std::size_t got = 0; got < bits; got += 64)
            x = (x << 64) | BigInt(rng());
        x &= pow2(bits) - 1;
        if (x < span)
            return lo + x;
    }
}

inline std::int64_t uniform_int(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi)
{
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

/// Largest b >= floor such that worst(b) <= cap; -1 when even worst(floor) overflows.
template <class Worst>
std::int64_t largest_slack(std::int64_t floor, const BigInt& cap, Worst worst)
{
    if (worst(floor) > cap)
        return -1;
    std::int64_t lo = floor, hi = floor + 1;
    while (hi < (std::int64_t{1} << 61) && worst(hi) <= cap) {
        lo = hi;
        hi *= 2;
    }
    while (hi - lo > 1) {
        std::int64_t mid = lo + (hi - lo) / 2;
        (worst(mid) <= cap ? lo : hi) = mid;
    }
    return lo;
}

} // namespace detail

/// Deterministic (for a fixed seed) integer game of the requested shape with
/// quota uniform in [1, sum(w)]. The shape is re-checked with detect_classes.
inline WeightedGame random_game(std::size_t n, std::int64_t max_weight, std::uint64_t seed,
                                const GameShape& shape = GameShape::general())
{
    using Kind = GameShape::Kind;
    if (n == 0)
        throw precondition_error("random game needs n >= 1");
    if (max_weight < 1)
        throw precondition_error("max_weight must be at least 1");
    std::mt19937_64 rng(seed);
    std::vector<BigInt> w;
    w.reserve(n);

    switch (shape.kind) {
    case Kind::general:
        for (std::size_t i = 0; i < n; ++i)
            w.emplace_back(detail::uniform_int(rng, 1, max_weight));
        break;
    case Kind::two_value:
    case Kind::k_value: {
        const std::size_t k = shape.kind == Kind::two_value ? 2 : shape.k;
        if (k == 0 || k > n || static_cast<std::int64_t>(k) > max_weight)
            throw precondition_error("cannot draw " + std::to_string(k) + " distinct weights for n = "
                                     + std::to_string(n) + " with max_weight " + std::to_string(max_weight));
        std::set<std::int64_t> values;
        while (values.size() < k)
            values.insert(detail::uniform_int(rng, 1, max_weight));
        std::vector<std::size_t> counts(k, 1);
        for (std::size_t extra = n - k; extra > 0; --extra)
            ++counts[static_cast<std::size_t>(detail::uniform_int(rng, 0, static_cast<std::int64_t>(k) - 1))];
        std::size_t c = 0;
        for (auto v : values)
            w.insert(w.end(), counts[c++], BigInt(v));
        break;
    }
    case Kind::geometric: {
        if (shape.ratio <= 0)
            throw precondition_error("geometric ratio must be positive");
        // Back to front: w_i = ceil(r w_{i+1}) + increment, increments in [0, b].
        auto build = [&](std::int64_t b, auto&& draw) {
            std::vector<BigInt> out(n);
            out[n - 1] = draw(1, std::max<std::int64_t>(b, 1));
            for (std::size_t i = n - 1; i-- > 0;)
                out[i] = ceil(shape.ratio * out[i + 1]) + draw(0, b);
            return out;
        };
        auto worst = [&](std::int64_t b) {
            return build(b, [](std::int64_t, std::int64_t hi) { return BigInt(hi); }).front();
        };
        const std::int64_t b = detail::largest_slack(0, max_weight, worst);
        if (b < 0)
            throw precondition_error("no " + to_fraction_string(shape.ratio) + "-geometric game with "
                                     + std::to_string(n) + " players fits max_weight " + std::to_string(max_weight));
        w = build(b, [&](std::int64_t lo, std::int64_t hi) { return BigInt(detail::uniform_int(rng, lo, hi)); });
        break;
    }
    case Kind::unbalanced: {
        // Back to front: w_j = (sum of later weights) + increment, increments in [1, b].
        auto build = [&](std::int64_t b, auto&& draw) {
            std::vector<BigInt> out(n);
            BigInt suffix = 0;
            for (std::size_t i = n; i-- > 0;) {
                out[i] = suffix + draw(1, b);
                suffix += out[i];
            }
            return out;
        };
        auto worst = [&](std::int64_t b) {
            return build(b, [](std::int64_t, std::int64_t hi) { return BigInt(hi); }).front();
        };
        const std::int64_t b = detail::largest_slack(1, max_weight, worst);
        if (b < 0)
            throw precondition_error("no unbalanced game with " + std::to_string(n) + " players fits max_weight "
                                     + std::to_string(max_weight));
        w = build(b, [&](std::int64_t lo, std::int64_t hi) { return BigInt(detail::uniform_int(rng, lo, hi)); });
        break;
    }
    }

    BigInt total = 0;
    for (const auto& x : w)
        total += x;
    const BigInt quota = detail::uniform_bigint(rng, 1, total);
    std::shuffle(w.begin(), w.end(), rng);
    std::vector<Weight> weights(w.begin(), w.end());
    WeightedGame game = WeightedGame::from_weights(Rational(quota), std::move(weights));

    const ClassProfile p = detect_classes(game);
    bool ok = true;
    switch (shape.kind) {
    case Kind::general: break;
    case Kind::two_value: ok = p.distinct_value_count == 2; break;
    case Kind::k_value: ok = p.distinct_value_count == shape.k; break;
    case Kind::geometric: ok = n < 2 || (p.max_geometric_ratio && *p.max_geometric_ratio >= shape.ratio); break;
    case Kind::unbalanced: ok = p.unbalanced(); break;
    }
    if (!ok)
        throw std::logic_error("random game generator produced a game outside the requested shape");
    return game;
}

} // namespace wvg

#endif // WVG_INSTANCES_HPP
