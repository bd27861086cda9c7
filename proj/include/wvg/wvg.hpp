#ifndef WVG_WVG_HPP
#define WVG_WVG_HPP

#include "wvg/bench.hpp"
#include "wvg/binomial.hpp"
#include "wvg/bounded_values.hpp"
#include "wvg/brute_force.hpp"
#include "wvg/classifier.hpp"
#include "wvg/closed_form.hpp"
#include "wvg/counting.hpp"
#include "wvg/dispatch.hpp"
#include "wvg/dynamic_programming.hpp"
#include "wvg/error.hpp"
#include "wvg/game.hpp"
#include "wvg/generating_function.hpp"
#include "wvg/instances.hpp"
#include "wvg/io.hpp"
#include "wvg/numeric.hpp"
#include "wvg/report.hpp"
#include "wvg/sparse_polynomial.hpp"

#endif // WVG_WVG_HPP
