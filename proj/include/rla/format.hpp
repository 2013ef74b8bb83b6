#pragma once

#include <string>

#include "rla/relation.hpp"

namespace rla {

/// Deterministic table rendering: columns sorted by attribute name, rows by
/// canonical value order, row count trailer. The no-column relations print
/// as the DEE / DUM markers. Two relations format identically iff they are
/// equal.
std::string format_relation(const Relation& r);

}  // namespace rla
