#pragma once

#include <string>
#include <string_view>

#include "rla/relation.hpp"

namespace rla {

/// CSV relation: first line holds the attribute names, each following line
/// one row. Unquoted digit runs (optional leading '-') parse as integers,
/// `true`/`false` as booleans, anything else (or double-quoted cells) as
/// text.
Relation parse_relation_csv(std::string_view text);

/// JSON relation: {"header": [...], "rows": [[...], ...]} with row values
/// matched positionally to header order.
Relation parse_relation_json(std::string_view text);

/// Dispatches on the file extension: `.json` as JSON, anything else as CSV.
Relation load_relation_file(const std::string& path);

std::string read_file(const std::string& path);

}  // namespace rla
