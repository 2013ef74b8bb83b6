#include "rla/format.hpp"

#include <sstream>
#include <vector>

namespace rla {

std::string format_relation(const Relation& r) {
  if (r.header().empty())
    return r.body().empty() ? "DUM (no columns, no rows)\n"
                            : "DEE (no columns, one row)\n";

  const std::vector<AttributeName> columns(r.header().begin(), r.header().end());
  std::vector<std::vector<std::string>> cells;
  cells.reserve(r.row_count());
  for (const auto& row : r.body()) {
    std::vector<std::string> line;
    line.reserve(columns.size());
    for (const auto& c : columns) line.push_back(format_value(row.at(c)));
    cells.push_back(std::move(line));
  }

  std::vector<std::size_t> width(columns.size());
  for (std::size_t i = 0; i < columns.size(); ++i) width[i] = columns[i].size();
  for (const auto& line : cells)
    for (std::size_t i = 0; i < line.size(); ++i)
      width[i] = std::max(width[i], line[i].size());

  std::ostringstream out;
  const auto emit = [&](const std::vector<std::string>& line) {
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (i) out << " | ";
      out << line[i];
      if (i + 1 < line.size())
        out << std::string(width[i] - line[i].size(), ' ');
    }
    out << '\n';
  };

  emit({columns.begin(), columns.end()});
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (i) out << "-+-";
    out << std::string(width[i], '-');
  }
  out << '\n';
  for (const auto& line : cells) emit(line);
  out << '(' << cells.size() << (cells.size() == 1 ? " row)" : " rows)") << '\n';
  return out.str();
}

}  // namespace rla
