// Copyright 2026 The fermroute Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>

#include "fermroute/circuit.hpp"

namespace fermroute {

// {"version":1, "L", "rows", "cols", "extra_ancilla_columns", "layers":[[{"g","q":[[r,c],...],"theta"}]]}
// "L" is the column count; "rows" and "cols" are written so rectangular grids round-trip.
// metadata goes under "metadata" as string pairs. Angles use the shortest form that parses back to the same double.
std::string circuit_to_json(const Circuit &c, int indent = -1);
// Throws std::invalid_argument on schema errors; validates the result.
Circuit circuit_from_json(const std::string &text);

}  // namespace fermroute
