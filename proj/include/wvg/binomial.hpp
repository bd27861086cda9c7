#ifndef WVG_BINOMIAL_HPP
#define WVG_BINOMIAL_HPP

#include <cstdint>
#include <vector>

#include "wvg/numeric.hpp"

namespace wvg {

/// Row n of Pascal's triangle with prefix sums, built by the multiplicative
/// formula C(n, i+1) = C(n, i) (n - i) / (i + 1). Out-of-range indices read 0.
class BinomialRow {
public:
    explicit BinomialRow(std::int64_t n) : n_(n)
    {
        if (n < 0)
            return;
        values_.reserve(static_cast<std::size_t>(n) + 1);
        prefix_.reserve(static_cast<std::size_t>(n) + 2);
        BigInt c = 1;
        prefix_.emplace_back(0);
        for (std::int64_t i = 0; i <= n; ++i) {
            values_.push_back(c);
            prefix_.push_back(prefix_.back() + c);
            c = c * (n - i) / (i + 1);
        }
    }

    std::int64_t n() const noexcept { return n_; }

    const BigInt& operator[](std::int64_t i) const
    {
        static const BigInt zero = 0;
        return (i < 0 || i > n_) ? zero : values_[static_cast<std::size_t>(i)];
    }

    /// Sum of C(n, i) for lo <= i <= hi, clamped to the row.
    BigInt range_sum(std::int64_t lo, std::int64_t hi) const
    {
        if (lo < 0)
            lo = 0;
        if (hi > n_)
            hi = n_;
        if (n_ < 0 || lo > hi)
            return 0;
        return prefix_[static_cast<std::size_t>(hi) + 1] - prefix_[static_cast<std::size_t>(lo)];
    }

private:
    std::int64_t n_;
    std::vector<BigInt> values_;
    std::vector<BigInt> prefix_;
};

/// C(n, k) with C(n, k) = 0 outside 0 <= k <= n.
inline BigInt binomial(std::int64_t n, std::int64_t k)
{
    if (n < 0 || k < 0 || k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    BigInt c = 1;
    for (std::int64_t i = 0; i < k; ++i)
        c = c * (n - i) / (i + 1);
    return c;
}

} // namespace wvg

#endif // WVG_BINOMIAL_HPP
