#ifndef WVG_CLASSIFIER_HPP
#define WVG_CLASSIFIER_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "wvg/game.hpp"

namespace wvg {

/**
 * Structural classes a game belongs to, with their parameters.
 *
 * Fields that need strictly positive weights (max_geometric_ratio,
 * min_unbalance_order) are empty when a zero weight is present.
 * Player indices are canonical (0-based).
 */
struct ClassProfile {
    bool all_equal = false;
    std::optional<std::size_t> dictator_index;
    bool singleton_region = false;  // 0 < q <= w_n
    bool unanimity_region = false;  // q > sum(w) - w_n
    std::size_t distinct_value_count = 0;
    std::optional<Rational> max_geometric_ratio;
    std::optional<std::size_t> min_unbalance_order;
    bool is_sequential = false;
    bool dominance = false;
    bool alt_dominance = false;
    bool all_integer = false;
    bool is_proper = false;

    bool unbalanced() const { return min_unbalance_order == std::size_t{1}; }

    friend bool operator==(const ClassProfile&, const ClassProfile&) = default;
};

namespace detail {

/// suffix[j] = w_j + ... + w_{n-1}; suffix[n] = 0.
inline std::vector<Rational> suffix_sums(const WeightedGame& game)
{
    const auto w = game.weights();
    std::vector<Rational> s(w.size() + 1, Rational(0));
    for (std::size_t j = w.size(); j-- > 0;)
        s[j] = s[j + 1] + w[j];
    return s;
}

inline bool k_unbalanced(std::span<const Weight> w, std::span<const Rational> suffix, std::size_t k)
{
    const std::size_t n = w.size();
    for (std::size_t j = 0; j < n; ++j) {
        const std::size_t from = std::min(n, j + k);
        if (!(w[j] > suffix[from]))
            return false;
    }
    return true;
}

} // namespace detail

/// w_j > w_{j+k} + ... + w_n for every j.
inline bool is_k_unbalanced(const WeightedGame& game, std::size_t k)
{
    if (k == 0)
        throw precondition_error("unbalance order must be positive");
    auto suffix = detail::suffix_sums(game);
    return detail::k_unbalanced(game.weights(), suffix, k);
}

inline bool is_unbalanced(const WeightedGame& game) { return is_k_unbalanced(game, 1); }

/// Canonical player 0 when w_1 >= q and w_2 + ... + w_n < q.
inline std::optional<std::size_t> is_dictator(const WeightedGame& game)
{
    const auto& w1 = game.weight(0);
    if (w1 >= game.quota() && game.total_weight() - w1 < game.quota())
        return std::size_t{0};
    return std::nullopt;
}

/// w_i >= r w_{i+1} for all i. Requires r > 0 and strictly positive weights.
inline bool geometric_for(const WeightedGame& game, const Rational& r)
{
    if (r <= 0)
        throw precondition_error("geometric ratio must be positive");
    if (game.has_zero_weight())
        throw precondition_error("geometric test needs strictly positive weights");
    const auto w = game.weights();
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] < r * w[i + 1])
            return false;
    return true;
}

inline ClassProfile detect_classes(const WeightedGame& game)
{
    ClassProfile p;
    const auto w = game.weights();
    const std::size_t n = w.size();
    const Rational& q = game.quota();
    const bool positive = !game.has_zero_weight();

    p.all_equal = w.front() == w.back();
    p.dictator_index = is_dictator(game);
    p.singleton_region = q <= w.back();
    p.unanimity_region = q > game.total_weight() - w.back();
    p.all_integer = game.all_integer();
    p.is_proper = 2 * q >= game.total_weight();

    const CompressedGame compressed = compress(game);
    const auto classes = compressed.classes();
    p.distinct_value_count = classes.size();

    if (positive) {
        if (n >= 2) {
            Rational ratio = w[0] / w[1];
            for (std::size_t i = 1; i + 1 < n; ++i) {
                Rational r = w[i] / w[i + 1];
                if (r < ratio)
                    ratio = r;
            }
            p.max_geometric_ratio = ratio;
        }
        // k-unbalancedness is monotone in k; k = n always holds for positive weights.
        const auto suffix = detail::suffix_sums(game);
        std::size_t lo = 1, hi = n;
        while (lo < hi) {
            std::size_t mid = lo + (hi - lo) / 2;
            if (detail::k_unbalanced(w, suffix, mid))
                hi = mid;
            else
                lo = mid + 1;
        }
        p.min_unbalance_order = lo;

        p.is_sequential = true;
        for (std::size_t i = 0; i + 1 < n; ++i) {
            if (!is_integer(w[i] / w[i + 1])) {
                p.is_sequential = false;
                break;
            }
        }
    }

    if (p.is_sequential) {
        p.dominance = true;
        for (std::size_t k = 0; k + 1 < classes.size(); ++k) {
            Rational multiplier = classes[k].weight / classes[k + 1].weight;
            if (!(multiplier > classes[k + 1].count)) {
                p.dominance = false;
                break;
            }
        }
    }

    // Read on any weight multiset grouped by distinct value.
    p.alt_dominance = true;
    Rational later = 0;
    for (std::size_t k = classes.size(); k-- > 0;) {
        if (k + 1 < classes.size() && !(classes[k].weight > later)) {
            p.alt_dominance = false;
            break;
        }
        later += classes[k].weight * classes[k].count;
    }
    return p;
}

} // namespace wvg

#endif // WVG_CLASSIFIER_HPP
