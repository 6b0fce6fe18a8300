#pragma once

// Line-oriented text format for presets (see docs/format.md). Parsing fails
// with DocumentError(ParseError) on malformed syntax and
// DocumentError(ValidationError) on well-formed but invalid content, both
// carrying the 1-based line number.

#include <map>
#include <string>
#include <string_view>

#include "lcsurf/builders.hpp"

namespace lcsurf {

// Linear combination "2*E1 + 1/2*C1 - F" (or "0") as ordered (name,
// coefficient) pairs; repeated names are summed, zero sums dropped. Throws
// Error(ParseError).
std::map<std::string, Rational> parse_combination(std::string_view text);

// Combination of non-exceptional curve labels. Throws Error(UnknownName),
// Error(ParseError) or Error(NotNonExceptional).
WeilDivisor parse_divisor(const NormalSurface& surface, std::string_view text);
std::string format_divisor(const SmoothModel& model, const WeilDivisor& d);
std::string format_vector(const SmoothModel& model, std::span<const Rational> v);

bool is_valid_label(std::string_view label);

Preset parse_document(std::string_view text);
std::string serialize_document(const Preset& preset);

}  // namespace lcsurf
