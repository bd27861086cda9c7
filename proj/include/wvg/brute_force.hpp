#ifndef WVG_BRUTE_FORCE_HPP
#define WVG_BRUTE_FORCE_HPP

#include <bit>
#include <cstdint>
#include <vector>

#include "wvg/game.hpp"
#include "wvg/report.hpp"

namespace wvg {

inline constexpr std::size_t default_brute_force_cap = 25;

namespace detail {

/// Walks all 2^n coalitions in Gray-code order, so each step adds or removes
/// one weight.
template <class Int>
SwingResult enumerate_coalitions(const IntegerForm<Int>& f)
{
    const std::size_t n = f.weights.size();
    std::vector<std::uint64_t> eta(n, 0);
    std::uint64_t winning = 0;
    Int sum = 0;
    std::uint64_t members = 0;
    const std::uint64_t steps = std::uint64_t{1} << n;
    for (std::uint64_t step = 0;; ) {
        if (sum >= f.quota) {
            ++winning;
            for (std::uint64_t rest = members; rest != 0; rest &= rest - 1) {
                const auto i = static_cast<std::size_t>(std::countr_zero(rest));
                if (sum - f.weights[i] < f.quota)
                    ++eta[i];
            }
        }
        if (++step == steps)
            break;
        const auto flip = static_cast<std::size_t>(std::countr_zero(step));
        members ^= std::uint64_t{1} << flip;
        if (members >> flip & 1)
            sum += f.weights[flip];
        else
            sum -= f.weights[flip];
    }
    SwingResult r;
    r.swings.swings.reserve(n);
    for (auto e : eta)
        r.swings.swings.emplace_back(e);
    r.winning_count = BigInt(winning);
    return r;
}

} // namespace detail

/// Direct count of critical players over every coalition. Exponential; the
/// reference every other backend is checked against.
inline SwingResult brute_force_swings(const WeightedGame& game, std::size_t cap = default_brute_force_cap)
{
    if (game.size() > cap)
        throw no_backend("brute force limited to " + std::to_string(cap) + " players, game has "
                             + std::to_string(game.size()),
                         "raise the brute-force cap or use a counting backend");
    if (game.size() > 62)
        throw no_backend("brute force cannot exceed 62 players", "use a counting backend");
    const auto f = integer_form(integer_rescale(game));
    if (fits_machine_words(f))
        return detail::enumerate_coalitions(narrow_form(f));
    return detail::enumerate_coalitions(f);
}

} // namespace wvg

#endif // WVG_BRUTE_FORCE_HPP
