#pragma once

// Scientific-notation rendering of exact values, e.g. "5.1883e+02".

#include "tpb/rational.hpp"
#include "tpb/spectral.hpp"

#include <optional>
#include <string>

namespace tpb {

// Integer nearest to q, ties to even.
Integer round_half_even(const Rational& q);

// d.ddd...e+XX with `sig` significant digits, round-half-even on the exact value.
std::string render_scientific(const Rational& q, int sig);

// The common rendering of every point of the interval, or nullopt if the two
// endpoints round differently (the enclosure is too wide to decide).
std::optional<std::string> render_interval(const RationalInterval& interval, int sig);

}  // namespace tpb
