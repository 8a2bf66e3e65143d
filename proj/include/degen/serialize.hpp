#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "degen/cyclotomic.hpp"
#include "degen/identities.hpp"

namespace degen {

using Json = nlohmann::ordered_json;

enum class OutputFormat { json, csv, latex };

/// Throws std::invalid_argument for anything but json, csv, latex.
OutputFormat parse_format(std::string_view name);

/// Exact value encoding: "p/q" when the element's order is at most 2,
/// otherwise {"order": m, "coeffs": ["p/q", ...]}.
Json to_json(const Cyclotomic& value);
/// Inverse of to_json. Throws std::invalid_argument on malformed input.
Cyclotomic cyclotomic_from_json(const Json& j);

Json to_json(const IdentityParams& params);
/// {identity, params, holds, rows[{n, lhs, rhs, equal}], first_failure, ...}.
/// Timing is only written when `with_timing` is set so that data stays
/// byte-reproducible.
Json to_json(const IdentityReport& report, bool with_timing = false);
Json to_json(const std::vector<IdentityReport>& reports, bool with_timing = false);

/// Flat table for the numbers/poly/rsum/chars/padic commands. Cells hold JSON
/// scalars or encoded exact values.
struct Table {
  std::string title;
  Json meta = Json::object();
  std::vector<std::string> columns;
  std::vector<std::vector<Json>> rows;
};

std::string render(const Table& table, OutputFormat format);

/// Cell text used by the CSV emitter: strings verbatim, encoded cyclotomic
/// values as "[c0,c1,...]@zeta_m".
std::string cell_text(const Json& cell);

}  // namespace degen
