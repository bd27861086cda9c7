#ifndef WVG_TEST_HELPERS_HPP
#define WVG_TEST_HELPERS_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <ostream>
#include <vector>

#include "wvg/wvg.hpp"
#include "oracle.hpp"

namespace wvg {

// readable gtest failure messages
inline void PrintTo(const WeightedGame& g, std::ostream* os)
{
    *os << "[" << to_fraction_string(g.quota()) << ";";
    for (const auto& w : g.caller_weights())
        *os << " " << to_fraction_string(w);
    *os << "]";
}

inline void PrintTo(const ClassProfile& p, std::ostream* os) { *os << to_json(p).dump(); }

} // namespace wvg

namespace testing_support {

/// Game from integers, weights in caller order.
inline wvg::WeightedGame game(std::int64_t q, std::vector<std::int64_t> w)
{
    std::vector<wvg::Weight> ws(w.begin(), w.end());
    return wvg::WeightedGame::from_weights(wvg::Rational(q), std::move(ws));
}

inline std::vector<wvg::BigInt> big(const std::vector<std::uint64_t>& v)
{
    return {v.begin(), v.end()};
}

inline std::vector<wvg::BigInt> big(std::initializer_list<long long> v)
{
    return {v.begin(), v.end()};
}

/// Oracle swings in canonical (non-increasing weight) order.
inline oracle::Counts canonical_oracle(std::int64_t q, std::vector<std::int64_t> w)
{
    std::sort(w.begin(), w.end(), std::greater<>{});
    return oracle::enumerate(q, w);
}

inline std::vector<std::int64_t> canonical_ints(const wvg::WeightedGame& g)
{
    std::vector<std::int64_t> out;
    for (const auto& w : g.weights())
        out.push_back(wvg::numerator_of(w).convert_to<std::int64_t>());
    return out;
}

inline std::int64_t int_quota(const wvg::WeightedGame& g)
{
    return wvg::numerator_of(g.quota()).convert_to<std::int64_t>();
}

} // namespace testing_support

#endif // WVG_TEST_HELPERS_HPP
