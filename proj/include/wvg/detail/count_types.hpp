#ifndef WVG_DETAIL_COUNT_TYPES_HPP
#define WVG_DETAIL_COUNT_TYPES_HPP

#include <cstdint>

#include "wvg/numeric.hpp"

namespace wvg::detail {

template <class T>
struct type_tag {
    using type = T;
};

/// Subset counts over m players never exceed 2^m, so the narrowest exact
/// counter is chosen from the player count.
template <class Fn>
decltype(auto) with_count_type(std::size_t players, Fn&& fn)
{
    if (players <= 63)
        return fn(type_tag<std::uint64_t>{});
    if (players <= 127)
        return fn(type_tag<unsigned __int128>{});
    return fn(type_tag<BigInt>{});
}

} // namespace wvg::detail

#endif // WVG_DETAIL_COUNT_TYPES_HPP
