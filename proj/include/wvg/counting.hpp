#ifndef WVG_COUNTING_HPP
#define WVG_COUNTING_HPP

#include "wvg/bounded_values.hpp"
#include "wvg/brute_force.hpp"
#include "wvg/dynamic_programming.hpp"
#include "wvg/generating_function.hpp"

namespace wvg {

struct WinningCountOptions {
    std::size_t brute_force_cap = default_brute_force_cap;
    std::int64_t max_dp_quota = 100'000'000;
    BigInt max_work = BigInt(100'000'000'000LL);
};

/// Number of coalitions with weight >= q, from the cheapest exact counter
/// that applies: class-size enumeration, the DP table, or enumeration.
inline BigInt winning_coalition_count(const WeightedGame& game, const WinningCountOptions& opts = {})
{
    const std::size_t n = game.size();
    std::optional<BigInt> class_work, dp_work, brute_work;

    const CompressedGame compressed = compress(game);
    if (!game.has_zero_weight()) {
        BigInt work = 1;
        const auto classes = compressed.classes();
        for (std::size_t c = 0; c + 1 < classes.size(); ++c)
            work *= classes[c].count + 1;
        if (work <= opts.max_work)
            class_work = work;
    }
    const WeightedGame scaled = integer_rescale(game);
    const BigInt scaled_quota = numerator_of(scaled.quota());
    if (scaled_quota <= opts.max_dp_quota && numerator_of(scaled.total_weight()) < (BigInt(1) << 61))
        dp_work = scaled_quota * n;
    if (n <= opts.brute_force_cap)
        brute_work = pow2(n) * n;

    auto cheaper = [](const std::optional<BigInt>& a, const std::optional<BigInt>& b) {
        return a && (!b || *a <= *b);
    };
    if (cheaper(class_work, dp_work) && cheaper(class_work, brute_work))
        return k_value_winning_count(compressed);
    if (cheaper(dp_work, brute_work))
        return dp_winning_count(scaled, DpOptions{DpMode::recompute, opts.max_dp_quota});
    if (brute_work)
        return *brute_force_swings(game, opts.brute_force_cap).winning_count;
    throw no_backend("no exact winning-coalition counter applies",
                     "rescale to moderate integer weights or raise the brute-force cap");
}

} // namespace wvg

#endif // WVG_COUNTING_HPP
