#pragma once

#include "json.hpp"

#include <optional>
#include <string>

namespace pertcoul::cli {

using Json = nlohmann::ordered_json;

/// %.17g; non-finite values become "nan" / "inf" / "-inf".
std::string format_double(double v);

/// Pretty JSON with every double at 17 significant digits and non-finite
/// numbers as null. Key order is insertion order.
std::string dump(const Json& doc);

/// Flat "path  value" listing, with a column table for `checks`.
std::string render_table(const Json& doc);

/// Double or null.
Json number(double v);

Json check(const std::string& name, const char* kind, Json value, std::optional<double> tol,
           std::optional<bool> pass);

Json metadata();

} // namespace pertcoul::cli
