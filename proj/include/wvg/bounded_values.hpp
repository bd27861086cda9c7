#ifndef WVG_BOUNDED_VALUES_HPP
#define WVG_BOUNDED_VALUES_HPP

#include <algorithm>
#include <cstdint>
#include <vector>

#include "wvg/binomial.hpp"
#include "wvg/game.hpp"
#include "wvg/report.hpp"

namespace wvg {

namespace detail {

/// Integer classes of a compressed game after scaling by the common
/// denominator.
template <class Int>
struct IntegerClasses {
    Int quota;
    std::vector<Int> weights;
    std::vector<std::int64_t> counts;
};

inline IntegerClasses<BigInt> integer_classes(const CompressedGame& game)
{
    BigInt l = denominator_of(game.quota());
    for (const auto& c : game.classes())
        l = boost::multiprecision::lcm(l, denominator_of(c.weight));
    IntegerClasses<BigInt> out;
    out.quota = numerator_of(game.quota() * l);
    for (const auto& c : game.classes()) {
        out.weights.push_back(numerator_of(c.weight * l));
        out.counts.push_back(static_cast<std::int64_t>(c.count));
    }
    return out;
}

inline bool classes_fit_machine_words(const IntegerClasses<BigInt>& c)
{
    BigInt total = 0;
    for (std::size_t i = 0; i < c.weights.size(); ++i)
        total += c.weights[i] * c.counts[i];
    return total < (BigInt(1) << 61);
}

inline IntegerClasses<std::int64_t> narrow_classes(const IntegerClasses<BigInt>& c)
{
    IntegerClasses<std::int64_t> out{narrow<std::int64_t>(c.quota), {}, c.counts};
    for (const auto& w : c.weights)
        out.weights.push_back(narrow<std::int64_t>(w));
    return out;
}

/// Runs `fn` on int64 classes when all partial sums fit, on big integers otherwise.
template <class Fn>
auto with_integer_classes(const CompressedGame& game, Fn&& fn)
{
    auto big = integer_classes(game);
    if (classes_fit_machine_words(big))
        return fn(narrow_classes(big));
    return fn(big);
}

/// ceil(a / b) clamped to [lo, hi]; the clamp keeps big quotients indexable.
template <class Int>
std::int64_t ceil_index(const Int& a, const Int& b, std::int64_t lo, std::int64_t hi)
{
    Int c = ceil_div(a, b);
    if (c < lo)
        return lo;
    if (c > hi)
        return hi;
    return static_cast<std::int64_t>(c);
}

inline std::int64_t ceil_index(const BigInt& a, const BigInt& b, std::int64_t lo, std::int64_t hi)
{
    BigInt c = ceil_div(a, b);
    if (c < lo)
        return lo;
    if (c > hi)
        return hi;
    return c.convert_to<std::int64_t>();
}

/// Swings of one player of weight wa, with na - 1 other a-players and nb
/// b-players: sum_{i=0}^{maxa} C(na-1, i) B_i with B_i summing C(nb, j) over
/// x1(i) <= j <= x2(i).
template <class Int>
BigInt swings_for_two_value(const Int& q, std::int64_t na, const Int& wa, std::int64_t nb, const Int& wb)
{
    const BinomialRow row_a(na - 1);
    const BinomialRow row_b(nb);
    const std::int64_t maxa = std::min(ceil_index(q, wa, -1, na + 1) - 1, na - 1);
    BigInt swings = 0;
    for (std::int64_t i = 0; i <= maxa; ++i) {
        const Int ii = static_cast<Int>(i);
        const std::int64_t x1 = ceil_index(Int(q - (ii + 1) * wa), wb, -1, nb + 1);
        const std::int64_t x2 = std::min(ceil_index(Int(q - ii * wa), wb, -1, nb + 1) - 1, nb);
        if (x1 > nb || x2 < 0)
            continue;
        swings += row_a[i] * row_b.range_sum(std::max<std::int64_t>(x1, 0), x2);
    }
    return swings;
}

template <class Int>
bool all_positive(const IntegerClasses<Int>& c)
{
    return std::all_of(c.weights.begin(), c.weights.end(), [](const Int& w) { return w > 0; });
}

/**
 * Swings of one member of class `focus`. The focus player is split off as
 * w_0, the focus class moves to the front (the Swap step) with one member
 * fewer, and the class sizes i_1..i_k are enumerated depth-first over
 *   max(ceil((q - w_0 - P_m - R_m) / w_m), 0) <= i_m <= min(ceil((q - P_m) / w_m) - 1, n_m)
 * where P_m is the weight already chosen and R_m the capacity of the classes
 * after m. The deepest level is summed in one step from prefix sums.
 */
template <class Int>
BigInt swings_for_class(const IntegerClasses<Int>& cls, std::size_t focus)
{
    const std::size_t k = cls.weights.size();
    std::vector<std::size_t> order{focus};
    for (std::size_t c = 0; c < k; ++c)
        if (c != focus)
            order.push_back(c);

    const Int& q = cls.quota;
    const Int& w0 = cls.weights[focus];
    std::vector<Int> w(k);
    std::vector<std::int64_t> n(k);
    std::vector<BinomialRow> rows;
    rows.reserve(k);
    for (std::size_t m = 0; m < k; ++m) {
        w[m] = cls.weights[order[m]];
        n[m] = cls.counts[order[m]] - (m == 0 ? 1 : 0);
        rows.emplace_back(n[m]);
    }
    std::vector<Int> capacity_after(k + 1, Int(0));
    for (std::size_t m = k; m-- > 0;)
        capacity_after[m] = capacity_after[m + 1] + w[m] * static_cast<Int>(n[m]);

    std::vector<Int> partial(k, Int(0));
    std::vector<BigInt> product(k, BigInt(1));
    std::vector<std::int64_t> index(k, 0), upper(k, 0), lower(k, 0);

    auto bounds = [&](std::size_t m) {
        lower[m] = std::max<std::int64_t>(
            ceil_index(Int(q - w0 - partial[m] - capacity_after[m + 1]), w[m], -1, n[m] + 1), 0);
        upper[m] = std::min(ceil_index(Int(q - partial[m]), w[m], -1, n[m] + 1) - 1, n[m]);
        index[m] = lower[m];
    };

    BigInt total = 0;
    std::size_t level = 0;
    bounds(0);
    for (;;) {
        if (index[level] > upper[level]) {
            if (level == 0)
                break;
            --level;
            ++index[level];
            continue;
        }
        if (level + 1 == k) {
            total += product[level] * rows[level].range_sum(lower[level], upper[level]);
            index[level] = upper[level] + 1;
            continue;
        }
        partial[level + 1] = partial[level] + static_cast<Int>(index[level]) * w[level];
        product[level + 1] = product[level] * rows[level][index[level]];
        ++level;
        bounds(level);
    }
    return total;
}

/// Coalitions with weight >= q: enumerate class sizes, the last one by prefix sum.
template <class Int>
BigInt winning_for_classes(const IntegerClasses<Int>& cls)
{
    const std::size_t k = cls.weights.size();
    const Int& q = cls.quota;
    std::vector<BinomialRow> rows;
    rows.reserve(k);
    for (auto c : cls.counts)
        rows.emplace_back(c);
    std::vector<Int> capacity_after(k + 1, Int(0));
    for (std::size_t m = k; m-- > 0;)
        capacity_after[m] = capacity_after[m + 1] + cls.weights[m] * static_cast<Int>(cls.counts[m]);

    std::vector<Int> partial(k, Int(0));
    std::vector<BigInt> product(k, BigInt(1));
    std::vector<std::int64_t> index(k, 0), lower(k, 0);
    auto bounds = [&](std::size_t m) {
        lower[m] = std::max<std::int64_t>(
            ceil_index(Int(q - partial[m] - capacity_after[m + 1]), cls.weights[m], -1, cls.counts[m] + 1), 0);
        index[m] = lower[m];
    };

    BigInt total = 0;
    std::size_t level = 0;
    bounds(0);
    for (;;) {
        if (index[level] > cls.counts[level]) {
            if (level == 0)
                break;
            --level;
            ++index[level];
            continue;
        }
        if (level + 1 == k) {
            total += product[level] * rows[level].range_sum(lower[level], cls.counts[level]);
            index[level] = cls.counts[level] + 1;
            continue;
        }
        partial[level + 1] = partial[level] + static_cast<Int>(index[level]) * cls.weights[level];
        product[level + 1] = product[level] * rows[level][index[level]];
        ++level;
        bounds(level);
    }
    return total;
}

template <class Int>
SwingVector replicate(const IntegerClasses<Int>& cls, const std::vector<BigInt>& per_class)
{
    SwingVector s;
    for (std::size_t c = 0; c < per_class.size(); ++c)
        s.swings.insert(s.swings.end(), static_cast<std::size_t>(cls.counts[c]), per_class[c]);
    return s;
}

} // namespace detail

/// Games with exactly two weight values (n_a players of w_a > n_b players of
/// w_b > 0), O(n^2). The b-class count is the same routine with classes swapped.
inline SwingVector two_value_swings(const CompressedGame& game)
{
    if (game.class_count() != 2)
        throw precondition_error("two-value backend needs exactly two weight classes");
    if (game.classes()[1].weight <= 0)
        throw precondition_error("two-value backend needs positive weights");
    return detail::with_integer_classes(game, [](const auto& cls) {
        const auto& [q, w, n] = cls;
        std::vector<BigInt> per_class{detail::swings_for_two_value(q, n[0], w[0], n[1], w[1]),
                                      detail::swings_for_two_value(q, n[1], w[1], n[0], w[0])};
        return detail::replicate(cls, per_class);
    });
}

/// Games with k distinct weight values, O(n^k) per class.
inline SwingVector k_value_swings(const CompressedGame& game)
{
    if (game.classes().back().weight <= 0)
        throw precondition_error("k-value backend needs strictly positive weights");
    return detail::with_integer_classes(game, [](const auto& cls) {
        std::vector<BigInt> per_class;
        per_class.reserve(cls.weights.size());
        for (std::size_t c = 0; c < cls.weights.size(); ++c)
            per_class.push_back(detail::swings_for_class(cls, c));
        return detail::replicate(cls, per_class);
    });
}

/// Number of winning coalitions by class-size enumeration.
inline BigInt k_value_winning_count(const CompressedGame& game)
{
    if (game.classes().back().weight <= 0)
        throw precondition_error("k-value backend needs strictly positive weights");
    return detail::with_integer_classes(game, [](const auto& cls) { return detail::winning_for_classes(cls); });
}

} // namespace wvg

#endif // WVG_BOUNDED_VALUES_HPP
