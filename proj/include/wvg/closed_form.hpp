#ifndef WVG_CLOSED_FORM_HPP
#define WVG_CLOSED_FORM_HPP

#include <algorithm>
#include <optional>
#include <vector>

#include "wvg/binomial.hpp"
#include "wvg/classifier.hpp"
#include "wvg/game.hpp"
#include "wvg/report.hpp"

namespace wvg {

/// n players of weight u: everyone swings in C(n-1, ceil(q/u) - 1) coalitions,
/// and sum_{i >= ceil(q/u)} C(n, i) coalitions win.
inline SwingResult equal_weight_swings(std::size_t n, const Weight& u, const Rational& q)
{
    if (n == 0)
        throw precondition_error("equal-weight game needs at least one player");
    if (u <= 0)
        throw precondition_error("equal weight must be positive");
    if (q <= 0)
        throw invalid_game("quota must be positive");
    if (q > u * n)
        throw invalid_game("quota exceeds total weight: no winning coalition exists");
    const auto nn = static_cast<std::int64_t>(n);
    const std::int64_t needed = detail::clamp_index(ceil(q / u), 0, nn);
    const BinomialRow row(nn);
    SwingResult r;
    r.swings.swings.assign(n, binomial(nn - 1, needed - 1));
    r.winning_count = row.range_sum(needed, nn);
    return r;
}

/// 0 < q <= w_n: the singletons are the minimal winning coalitions.
inline SwingResult singleton_region_swings(const WeightedGame& game)
{
    if (!(game.quota() <= game.weights().back()))
        throw precondition_error("quota is above the smallest weight");
    return {SwingVector{std::vector<BigInt>(game.size(), BigInt(1))}, pow2(game.size()) - 1};
}

/// q > sum(w) - w_n: only the grand coalition wins.
inline SwingResult unanimity_region_swings(const WeightedGame& game)
{
    if (!(game.quota() > game.total_weight() - game.weights().back()))
        throw precondition_error("quota is not in the unanimity region");
    return {SwingVector{std::vector<BigInt>(game.size(), BigInt(1))}, BigInt(1)};
}

inline SwingResult dictator_swings(const WeightedGame& game)
{
    if (!is_dictator(game))
        throw precondition_error("game has no dictator");
    std::vector<BigInt> s(game.size(), BigInt(0));
    s[0] = pow2(game.size() - 1);
    BigInt winning = s[0];
    return {SwingVector{std::move(s)}, std::move(winning)};
}

inline PowerReport singleton_region_report(const WeightedGame& game)
{
    return assemble_report(singleton_region_swings(game), game.label_map());
}

inline PowerReport unanimity_region_report(const WeightedGame& game)
{
    return assemble_report(unanimity_region_swings(game), game.label_map());
}

inline PowerReport dictator_report(const WeightedGame& game)
{
    return assemble_report(dictator_swings(game), game.label_map());
}

/**
 * [q; w_a, w_b x m] with w_a > w_b and w_b < q.
 *
 * With y = ceil(q / w_b) and x = ceil((q - w_a) / w_b):
 *   eta_a = sum_{i = max(x,0)}^{min(y-1, m)} C(m, i)
 *   eta_b = C(m-1, y-1) + C(m-1, x-1)
 * The second term of eta_b counts coalitions {a} + x b-players; a b-player is
 * one of the x, which leaves C(m-1, x-1) choices.
 */
inline SwingResult one_distinct_swings(const CompressedGame& game)
{
    const auto classes = game.classes();
    if (classes.size() != 2 || classes[0].count != 1)
        throw precondition_error("one-distinct backend needs classes ((1, w_a), (m, w_b))");
    const Weight& wa = classes[0].weight;
    const Weight& wb = classes[1].weight;
    const Rational& q = game.quota();
    if (wb <= 0)
        throw precondition_error("one-distinct backend needs w_b > 0");
    if (!(wb < q))
        throw precondition_error("one-distinct backend needs w_b < q");

    const auto m = static_cast<std::int64_t>(classes[1].count);
    const std::int64_t y = detail::clamp_index(ceil(q / wb), -1, m + 2);
    const std::int64_t x = detail::clamp_index(ceil((q - wa) / wb), -1, m + 2);
    const BinomialRow row_m(m);

    BigInt eta_a = row_m.range_sum(std::max<std::int64_t>(x, 0), std::min(y - 1, m));
    BigInt eta_b = binomial(m - 1, y - 1) + binomial(m - 1, x - 1);

    SwingResult r;
    r.swings.swings.reserve(game.size());
    r.swings.swings.push_back(eta_a);
    r.swings.swings.insert(r.swings.swings.end(), classes[1].count, eta_b);
    // Winning: i >= y b-players alone, or a plus i >= max(x, 0) b-players.
    r.winning_count = row_m.range_sum(y, m) + row_m.range_sum(std::max<std::int64_t>(x, 0), m);
    return r;
}

/**
 * Lexicographically minimal winning bit vector of an unbalanced game.
 *
 * bits[p] marks canonical player p; suffix_values[p] is the value of the bits
 * strictly after p read as a binary number (player p carries 2^(n-1-p)).
 */
struct ThresholdVector {
    std::vector<bool> bits;
    std::vector<BigInt> suffix_values;

    /// Value of the whole vector; coalitions at or above it win.
    BigInt value() const
    {
        const std::size_t n = bits.size();
        return suffix_values.front() + (bits.front() ? pow2(n - 1) : BigInt(0));
    }
};

namespace detail {

inline void require_unbalanced(const WeightedGame& game)
{
    if (game.has_zero_weight())
        throw precondition_error("unbalanced backend needs strictly positive weights");
    if (!is_unbalanced(game))
        throw precondition_error("game is not unbalanced");
}

} // namespace detail

/// Greedy from the largest weight: take player j iff the weights after j
/// cannot cover the residual quota on their own.
inline ThresholdVector unbalanced_threshold(const WeightedGame& game)
{
    detail::require_unbalanced(game);
    const auto w = game.weights();
    const std::size_t n = w.size();
    const auto suffix = detail::suffix_sums(game);

    ThresholdVector t;
    t.bits.assign(n, false);
    Rational residual = game.quota();
    for (std::size_t j = 0; j < n; ++j) {
        if (suffix[j + 1] < residual) {
            t.bits[j] = true;
            residual -= w[j];
        }
    }
    t.suffix_values.assign(n, BigInt(0));
    for (std::size_t j = n - 1; j-- > 0;)
        t.suffix_values[j] = t.suffix_values[j + 1] + (t.bits[j + 1] ? pow2(n - 2 - j) : BigInt(0));
    return t;
}

namespace detail {

/// Same computation in machine words, for integer games with n <= 62.
inline std::optional<SwingResult> unbalanced_swings_narrow(const WeightedGame& game)
{
    const std::size_t n = game.size();
    if (n > 62 || !game.all_integer())
        return std::nullopt;
    const auto big = integer_form(game);
    if (!fits_machine_words(big))
        return std::nullopt;
    const auto f = narrow_form(big);
    if (f.weights.back() == 0)
        throw precondition_error("unbalanced backend needs strictly positive weights");
    std::vector<std::int64_t> suffix(n + 1, 0);
    for (std::size_t j = n; j-- > 0;)
        suffix[j] = suffix[j + 1] + f.weights[j];
    for (std::size_t j = 0; j + 1 < n; ++j)
        if (f.weights[j] <= suffix[j + 1])
            throw precondition_error("game is not unbalanced");

    std::vector<bool> bits(n, false);
    std::int64_t residual = f.quota;
    for (std::size_t j = 0; j < n; ++j)
        if (suffix[j + 1] < residual) {
            bits[j] = true;
            residual -= f.weights[j];
        }
    SwingResult r;
    r.swings.swings.resize(n);
    std::uint64_t tail = 0;  // T_j
    for (std::size_t j = n; j-- > 0;) {
        const std::uint64_t half = std::uint64_t{1} << (n - 1 - j);
        r.swings.swings[j] = bits[j] ? half - tail : tail;
        if (bits[j])
            tail += half;
    }
    r.winning_count = pow2(n) - tail;
    return r;
}

} // namespace detail

/// In an unbalanced game the weight order of coalitions is the lexicographic
/// order of their bit vectors, so S wins iff bits(S) >= t. Hence
/// eta_j = 2^(n-j) - T_j when t_j = 1 and eta_j = T_j otherwise.
inline SwingResult unbalanced_swings(const WeightedGame& game)
{
    if (auto narrow = detail::unbalanced_swings_narrow(game))
        return std::move(*narrow);
    const ThresholdVector t = unbalanced_threshold(game);
    const std::size_t n = game.size();
    SwingResult r;
    r.swings.swings.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
        const BigInt& tail = t.suffix_values[j];
        r.swings.swings.push_back(t.bits[j] ? BigInt(pow2(n - 1 - j) - tail) : tail);
    }
    r.winning_count = pow2(n) - t.value();
    return r;
}

} // namespace wvg

#endif // WVG_CLOSED_FORM_HPP
