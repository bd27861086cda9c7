#ifndef WVG_DYNAMIC_PROGRAMMING_HPP
#define WVG_DYNAMIC_PROGRAMMING_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "wvg/detail/count_types.hpp"
#include "wvg/game.hpp"
#include "wvg/report.hpp"

namespace wvg {

/// Subset-weight counts of a player set: counts[k] coalitions weigh exactly
/// k < q, overflow_count weigh q or more. Sum = 2^|set|.
struct DpTable {
    std::vector<BigInt> counts;
    BigInt overflow_count;
};

enum class DpMode {
    recompute,   // one table per player, O(n^2 q)
    downdate,    // one full table, divided by (1 + x^w_i) per player, O(n q)
    self_check,  // both, compared entry by entry
};

struct DpOptions {
    DpMode mode = DpMode::recompute;
    /// Upper bound on the quota (table length).
    std::int64_t max_quota = 100'000'000;
};

namespace detail {

inline IntegerForm<std::int64_t> dp_form(const WeightedGame& game, const DpOptions& opts)
{
    const auto big = integer_form(game);
    if (!fits_machine_words(big))
        throw no_backend("weights too large for the dynamic-programming table", "use the generating-function backend");
    if (big.quota > opts.max_quota)
        throw no_backend("quota " + big.quota.str() + " exceeds the dynamic-programming budget",
                         "raise the quota budget or use another backend");
    return narrow_form(big);
}

/// counts[k] for k < q over all players except `skip`.
template <class Count>
std::vector<Count> subset_counts(const IntegerForm<std::int64_t>& f, std::optional<std::size_t> skip)
{
    const std::int64_t q = f.quota;
    std::vector<Count> t(static_cast<std::size_t>(q), Count(0));
    t[0] = 1;
    for (std::size_t j = 0; j < f.weights.size(); ++j) {
        if (skip && *skip == j)
            continue;
        const std::int64_t w = f.weights[j];
        if (w == 0) {
            for (auto& c : t)
                c += c;
            continue;
        }
        for (std::int64_t k = q - 1; k >= w; --k)
            t[static_cast<std::size_t>(k)] += t[static_cast<std::size_t>(k - w)];
    }
    return t;
}

/// Removes one factor (1 + x^w) from a truncated table, in place.
template <class Count>
void divide_out(std::vector<Count>& t, std::int64_t w)
{
    if (w == 0) {
        for (auto& c : t)
            c /= 2;
        return;
    }
    for (std::size_t k = static_cast<std::size_t>(w); k < t.size(); ++k)
        t[k] -= t[k - static_cast<std::size_t>(w)];
}

/// eta_i = sum of counts[k] for max(q - w_i, 0) <= k < q.
template <class Count>
BigInt critical_sum(const std::vector<Count>& t, std::int64_t q, std::int64_t w)
{
    Count s = 0;
    for (std::int64_t k = std::max<std::int64_t>(q - w, 0); k < q; ++k)
        s += t[static_cast<std::size_t>(k)];
    return to_bigint(s);
}

template <class Count>
SwingVector dp_swings_typed(const IntegerForm<std::int64_t>& f, DpMode mode)
{
    const std::size_t n = f.weights.size();
    SwingVector out;
    out.swings.resize(n);
    std::vector<Count> full;
    if (mode != DpMode::recompute)
        full = subset_counts<Count>(f, std::nullopt);
    for (std::size_t i = 0; i < n; ++i) {
        if (f.weights[i] == 0) {
            out.swings[i] = 0;
            continue;
        }
        if (mode == DpMode::recompute) {
            out.swings[i] = critical_sum(subset_counts<Count>(f, i), f.quota, f.weights[i]);
            continue;
        }
        std::vector<Count> excl = full;
        divide_out(excl, f.weights[i]);
        if (mode == DpMode::self_check && excl != subset_counts<Count>(f, i))
            throw crosscheck_mismatch("downdated DP table differs from recomputed table for player "
                                      + std::to_string(i));
        out.swings[i] = critical_sum(excl, f.quota, f.weights[i]);
    }
    return out;
}

} // namespace detail

/// DpTable over every player except `excluded` (or over all players).
inline DpTable dp_table(const WeightedGame& game, std::optional<std::size_t> excluded = std::nullopt,
                        const DpOptions& opts = {})
{
    const auto f = detail::dp_form(game, opts);
    if (excluded && *excluded >= game.size())
        throw precondition_error("player index out of range");
    const auto t = detail::subset_counts<BigInt>(f, excluded);
    DpTable table{t, 0};
    BigInt below = 0;
    for (const auto& c : t)
        below += c;
    table.overflow_count = pow2(game.size() - (excluded ? 1 : 0)) - below;
    return table;
}

/// Pseudo-polynomial swing counts for integer games.
inline SwingVector dp_swings(const WeightedGame& game, const DpOptions& opts = {})
{
    const auto f = detail::dp_form(game, opts);
    return detail::with_count_type(game.size(), [&](auto tag) {
        return detail::dp_swings_typed<typename decltype(tag)::type>(f, opts.mode);
    });
}

/// Winning coalitions from the full table: 2^n minus those weighing < q.
inline BigInt dp_winning_count(const WeightedGame& game, const DpOptions& opts = {})
{
    const auto f = detail::dp_form(game, opts);
    BigInt below = detail::with_count_type(game.size(), [&](auto tag) {
        using Count = typename decltype(tag)::type;
        Count s = 0;
        for (const auto& c : detail::subset_counts<Count>(f, std::nullopt))
            s += c;
        return to_bigint(s);
    });
    return pow2(game.size()) - below;
}

} // namespace wvg

#endif // WVG_DYNAMIC_PROGRAMMING_HPP
