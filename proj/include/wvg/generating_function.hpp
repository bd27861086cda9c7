#ifndef WVG_GENERATING_FUNCTION_HPP
#define WVG_GENERATING_FUNCTION_HPP

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "wvg/detail/count_types.hpp"
#include "wvg/game.hpp"
#include "wvg/report.hpp"
#include "wvg/sparse_polynomial.hpp"

namespace wvg {

enum class GfMode {
    recompute,   // product over j != i for every i, O(n^2 C)
    divide,      // full product divided by (1 + x^w_i), O(n C)
    self_check,  // both, compared term by term
};

struct GfOptions {
    GfMode mode = GfMode::recompute;
};

namespace detail {

inline IntegerForm<std::int64_t> gf_form(const WeightedGame& game)
{
    if (!game.all_integer())
        throw precondition_error("generating functions need integer weights; rescale first");
    const auto big = integer_form(game);
    if (!fits_machine_words(big))
        throw no_backend("total weight too large for generating-function exponents", "use another backend");
    return narrow_form(big);
}

template <class Coeff>
SparsePolynomial<Coeff> product_excluding(const IntegerForm<std::int64_t>& f, std::optional<std::size_t> skip,
                                          bool skip_zero_weights)
{
    SparsePolynomial<Coeff> p;
    for (std::size_t j = 0; j < f.weights.size(); ++j) {
        if ((skip && *skip == j) || (skip_zero_weights && f.weights[j] == 0))
            continue;
        p.multiply_binomial(f.weights[j]);
    }
    return p;
}

/// b_i = sum of coefficients with max(q - w_i, 0) <= k <= q - 1.
template <class Coeff>
Coeff critical_coefficients(const SparsePolynomial<Coeff>& b, std::int64_t q, std::int64_t w)
{
    return b.range_sum(std::max<std::int64_t>(q - w, 0), q - 1);
}

template <class Coeff>
SwingResult gf_swings_typed(const IntegerForm<std::int64_t>& f, GfMode mode, std::size_t zero_players)
{
    // Zero-weight players are dropped from the products; each doubles every count.
    const BigInt zero_factor = pow2(zero_players);
    const std::size_t n = f.weights.size();
    const auto full = product_excluding<Coeff>(f, std::nullopt, true);

    SwingResult r;
    r.swings.swings.assign(n, BigInt(0));
    for (std::size_t i = 0; i < n; ++i) {
        if (f.weights[i] == 0)
            continue;
        SparsePolynomial<Coeff> b;
        if (mode == GfMode::recompute) {
            b = product_excluding<Coeff>(f, i, true);
        } else {
            b = full;
            b.divide_binomial(f.weights[i]);
            if (mode == GfMode::self_check && b != product_excluding<Coeff>(f, i, true))
                throw crosscheck_mismatch("divided generating function differs from recomputed product for player "
                                          + std::to_string(i));
        }
        r.swings.swings[i] = to_bigint(critical_coefficients(b, f.quota, f.weights[i])) * zero_factor;
    }
    r.winning_count = to_bigint(full.range_sum(f.quota, std::numeric_limits<std::int64_t>::max())) * zero_factor;
    return r;
}

} // namespace detail

/// B_i(x) = prod_{j != i} (1 + x^{w_j}); the coefficient of x^k counts the
/// coalitions without i that weigh exactly k.
inline SparsePolynomial<BigInt> gf_player_polynomial(const WeightedGame& game, std::size_t player)
{
    const auto f = detail::gf_form(game);
    if (player >= game.size())
        throw precondition_error("player index out of range");
    return detail::product_excluding<BigInt>(f, player, false);
}

/// prod_j (1 + x^{w_j}) over all players.
inline SparsePolynomial<BigInt> gf_full_polynomial(const WeightedGame& game)
{
    return detail::product_excluding<BigInt>(detail::gf_form(game), std::nullopt, false);
}

/// eta_i read off a player polynomial B_i for quota q and weight w_i.
inline BigInt gf_player_swings(const SparsePolynomial<BigInt>& b, const BigInt& quota, const BigInt& weight)
{
    if (quota <= 0)
        return 0;
    // exponents lie in [0, max_exponent]; clamp before narrowing
    const std::int64_t top = b.max_exponent();
    const std::int64_t hi = detail::clamp_index(quota - 1, -1, top);
    const std::int64_t lo = detail::clamp_index(quota - weight, 0, top + 1);
    return lo > hi ? BigInt(0) : b.range_sum(lo, hi);
}

/// Swings and winning count from generating functions, for integer games.
inline SwingResult gf_swings(const WeightedGame& game, const GfOptions& opts = {})
{
    const auto f = detail::gf_form(game);
    std::size_t zeros = 0;
    for (auto w : f.weights)
        zeros += (w == 0);
    return detail::with_count_type(game.size() - zeros, [&](auto tag) {
        return detail::gf_swings_typed<typename decltype(tag)::type>(f, opts.mode, zeros);
    });
}

/// C: nonzero coefficients of the full product.
inline std::size_t gf_term_count(const WeightedGame& game)
{
    const auto f = detail::gf_form(game);
    return detail::with_count_type(game.size(), [&](auto tag) {
        return detail::product_excluding<typename decltype(tag)::type>(f, std::nullopt, true).size();
    });
}

} // namespace wvg

#endif // WVG_GENERATING_FUNCTION_HPP
