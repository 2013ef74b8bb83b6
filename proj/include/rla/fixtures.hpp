#pragma once

#include "rla/eval.hpp"
#include "rla/relation.hpp"

namespace rla {

/// A(x,y) = {(1,2), (1,3)}.
Relation example_a();

/// B(y,z) = {(1,3), (2,4)}.
Relation example_b();

/// C(z) = {3, 7}.
Relation example_c();

/// Environment preloaded with A, B and C.
Env example_env();

/// The famous-animals cross-table, CSV encoded.
const char* famous_animals_csv();

}  // namespace rla
