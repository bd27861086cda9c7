#ifndef WVG_REPORT_HPP
#define WVG_REPORT_HPP

#include <numeric>
#include <optional>
#include <span>
#include <vector>

#include "wvg/error.hpp"
#include "wvg/numeric.hpp"

namespace wvg {

/// Per-player swing counts eta_i (coalitions in which i is critical).
struct SwingVector {
    std::vector<BigInt> swings;

    std::size_t size() const noexcept { return swings.size(); }
    const BigInt& operator[](std::size_t i) const { return swings[i]; }

    BigInt total() const { return std::accumulate(swings.begin(), swings.end(), BigInt(0)); }

    friend bool operator==(const SwingVector&, const SwingVector&) = default;
};

/// What every backend returns: swings in canonical order and, when the
/// backend can produce it cheaply, the number of winning coalitions.
struct SwingResult {
    SwingVector swings;
    std::optional<BigInt> winning_count;
};

/**
 * Exact power indices in caller order.
 *
 *   banzhaf[i]      = eta_i / sum_j eta_j
 *   prob_banzhaf[i] = eta_i / 2^(n-1)
 *   coleman_a       = winning_count / 2^n
 */
struct PowerReport {
    SwingVector swings;
    BigInt total_swings;
    std::vector<Rational> banzhaf;
    std::vector<Rational> prob_banzhaf;
    std::optional<BigInt> winning_count;
    std::optional<Rational> coleman_a;
};

/// Derives all indices from canonical-order swings. `label_map` (canonical
/// position -> caller index) reorders the output; empty means identity.
inline PowerReport assemble_report(const SwingVector& canonical, std::optional<BigInt> winning_count = std::nullopt,
                                   std::span<const std::size_t> label_map = {})
{
    const std::size_t n = canonical.size();
    if (!label_map.empty() && label_map.size() != n)
        throw precondition_error("label map size does not match swing vector");
    PowerReport r;
    r.total_swings = canonical.total();
    if (r.total_swings == 0)
        throw std::logic_error("zero total swings: backend fault");
    r.swings.swings.resize(n);
    for (std::size_t p = 0; p < n; ++p)
        r.swings.swings[label_map.empty() ? p : label_map[p]] = canonical[p];

    const BigInt half_space = pow2(n - 1);
    r.banzhaf.reserve(n);
    r.prob_banzhaf.reserve(n);
    for (const auto& eta : r.swings.swings) {
        r.banzhaf.emplace_back(eta, r.total_swings);
        r.prob_banzhaf.emplace_back(eta, half_space);
    }
    if (winning_count) {
        const BigInt space = pow2(n);
        if (*winning_count < 0 || *winning_count > space)
            throw precondition_error("winning count exceeds 2^n");
        r.coleman_a = Rational(*winning_count, space);
        r.winning_count = std::move(winning_count);
    }
    return r;
}

inline PowerReport assemble_report(const SwingResult& result, std::span<const std::size_t> label_map = {})
{
    return assemble_report(result.swings, result.winning_count, label_map);
}

} // namespace wvg

#endif // WVG_REPORT_HPP
