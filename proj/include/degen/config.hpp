#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "degen/sweep.hpp"

namespace degen {

/// Flat key -> raw value text, e.g. "lambda = 0, 1/2, -2/3". Lists are comma
/// separated; `f` holds polynomials separated by ';', each a comma-separated
/// integer coefficient list (lowest degree first).
using FlatConfig = std::map<std::string, std::string>;

/// One `key = value` per line, '#' starts a comment, blank lines ignored.
/// Throws std::invalid_argument (with the line number) on malformed lines or
/// unknown keys.
FlatConfig parse_flat_config(std::string_view text);
FlatConfig load_flat_config(const std::string& path);

/// Overlays entries onto `base`. Throws std::invalid_argument for values that
/// do not parse (fractions must be exact "p/q", d/w1/w2/n must be odd).
SweepGrid apply_config(const FlatConfig& config, SweepGrid base);

std::vector<std::string> split_list(std::string_view text, char sep = ',');
std::vector<unsigned> parse_unsigned_list(std::string_view text);
std::vector<Rational> parse_rational_list(std::string_view text);
std::vector<BigInt> parse_integer_list(std::string_view text);

/// "a..b" or a single "b". Throws std::invalid_argument when malformed or a > b.
std::pair<unsigned, unsigned> parse_range(std::string_view text);

const std::vector<std::string>& known_config_keys();

}  // namespace degen
