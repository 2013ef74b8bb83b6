#include "rla/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "rla/error.hpp"

namespace rla {

namespace {

struct CsvCell {
  std::string text;
  bool quoted = false;
};

// Standard CSV field splitting with double-quote quoting and "" escapes.
// Unquoted cells are trimmed.
std::vector<CsvCell> split_csv_line(const std::string& line, int line_no) {
  std::vector<CsvCell> cells;
  std::size_t i = 0;
  while (true) {
    CsvCell cell;
    if (i < line.size() && line[i] == '"') {
      cell.quoted = true;
      ++i;
      for (;;) {
        if (i >= line.size())
          throw ParseError("unterminated quoted cell", line_no,
                           static_cast<int>(i) + 1);
        if (line[i] == '"') {
          if (i + 1 < line.size() && line[i + 1] == '"') {
            cell.text += '"';
            i += 2;
            continue;
          }
          ++i;
          break;
        }
        cell.text += line[i++];
      }
      if (i < line.size() && line[i] != ',')
        throw ParseError("unexpected characters after quoted cell", line_no,
                         static_cast<int>(i) + 1);
    } else {
      std::size_t start = i;
      while (i < line.size() && line[i] != ',') ++i;
      cell.text = line.substr(start, i - start);
      std::size_t b = 0, e = cell.text.size();
      while (b < e && std::isspace(static_cast<unsigned char>(cell.text[b]))) ++b;
      while (e > b && std::isspace(static_cast<unsigned char>(cell.text[e - 1]))) --e;
      cell.text = cell.text.substr(b, e - b);
    }
    cells.push_back(std::move(cell));
    if (i >= line.size()) break;
    ++i;  // consume ','
  }
  return cells;
}

bool is_integer_literal(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = s[0] == '-' ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

Value cell_to_value(const CsvCell& cell) {
  if (cell.quoted) return Value(cell.text);
  if (cell.text == "true") return Value(true);
  if (cell.text == "false") return Value(false);
  if (is_integer_literal(cell.text))
    return Value(static_cast<std::int64_t>(std::stoll(cell.text)));
  return Value(cell.text);
}

std::vector<std::string> split_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::string current;
  for (char c : text) {
    if (c == '\n') {
      if (!current.empty() && current.back() == '\r') current.pop_back();
      lines.push_back(std::move(current));
      current.clear();
    } else {
      current += c;
    }
  }
  if (!current.empty()) {
    if (current.back() == '\r') current.pop_back();
    lines.push_back(std::move(current));
  }
  return lines;
}

}  // namespace

Relation parse_relation_csv(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.empty())
    throw ParseError("relation CSV needs a header line", 1, 1);

  const auto header_cells = split_csv_line(lines[0], 1);
  std::vector<AttributeName> order;
  Header header;
  for (const auto& cell : header_cells) {
    validate_user_attribute_name(cell.text);
    if (!header.insert(cell.text).second)
      throw ParseError("duplicate attribute `" + cell.text + "`", 1, 1);
    order.push_back(cell.text);
  }

  std::vector<Tuple> rows;
  for (std::size_t n = 1; n < lines.size(); ++n) {
    if (lines[n].empty()) continue;
    const auto cells = split_csv_line(lines[n], static_cast<int>(n) + 1);
    if (cells.size() != order.size())
      throw ParseError("expected " + std::to_string(order.size()) +
                           " cells, got " + std::to_string(cells.size()),
                       static_cast<int>(n) + 1, 1);
    Tuple row;
    for (std::size_t i = 0; i < cells.size(); ++i)
      row.emplace(order[i], cell_to_value(cells[i]));
    rows.push_back(std::move(row));
  }
  return Relation::make(std::move(header), rows);
}

Relation parse_relation_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::Parse, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("header") || !doc.contains("rows"))
    throw Error(ErrorCode::Parse,
                "relation JSON must be {\"header\": [...], \"rows\": [...]}");

  std::vector<AttributeName> order;
  Header header;
  for (const auto& item : doc["header"]) {
    if (!item.is_string())
      throw Error(ErrorCode::Parse, "header entries must be strings");
    const std::string name = item.get<std::string>();
    validate_user_attribute_name(name);
    if (!header.insert(name).second)
      throw Error(ErrorCode::Parse, "duplicate attribute `" + name + "`");
    order.push_back(name);
  }

  std::vector<Tuple> rows;
  for (const auto& row_values : doc["rows"]) {
    if (!row_values.is_array() || row_values.size() != order.size())
      throw Error(ErrorCode::Parse,
                  "each row must list one value per header attribute");
    Tuple row;
    for (std::size_t i = 0; i < order.size(); ++i) {
      const auto& v = row_values[i];
      if (v.is_boolean())
        row.emplace(order[i], Value(v.get<bool>()));
      else if (v.is_number_integer())
        row.emplace(order[i], Value(v.get<std::int64_t>()));
      else if (v.is_string())
        row.emplace(order[i], Value(v.get<std::string>()));
      else
        throw Error(ErrorCode::Parse,
                    "row values must be integers, booleans or strings");
    }
    rows.push_back(std::move(row));
  }
  return Relation::make(std::move(header), rows);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open `" + path + "`");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Relation load_relation_file(const std::string& path) {
  const std::string text = read_file(path);
  const bool json = path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0;
  return json ? parse_relation_json(text) : parse_relation_csv(text);
}

}  // namespace rla
