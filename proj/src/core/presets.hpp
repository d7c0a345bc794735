#pragma once

#include <string>

#include "orbit.hpp"

namespace thinsieve {

struct GroupConfig {
  GroupPresentation group;
  EnumParams enum_defaults;  // T filled per command
};

// Built-in presets:
//  "full-orbit": spin lifts of (0,-1;1,0) and (1,2;0,1), base (3,4,5);
//    enumerates all primitive Pythagorean triples (sign variants of (x,y)).
//  "schottky-demo": spin lifts of the hyperbolic pair (1,2;2,5), (5,2;2,1)
//    (free of rank 2, infinite index), base (3,4,5).
GroupConfig preset(const std::string& name);

// Parse a JSON config document:
// {
//   "group": {"generator_form": "sl2"|"soq",
//             "generators": [[[a,b],[c,d]], ...] or [[[..3x3..]], ...],
//             "base_point": [x,y,z], "label": "..."},
//   "enum": {"slack": 2.0, "max_word_length": 64, "budget_nodes": N}   // optional
// }
// or {"preset": "full-orbit"} to select a preset (with optional overrides).
GroupConfig config_from_json(const std::string& json_text);

}  // namespace thinsieve
