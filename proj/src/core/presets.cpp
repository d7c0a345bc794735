#include "presets.hpp"

#include <json.hpp>

namespace thinsieve {

namespace {

using nlohmann::json;

Mat2 mat2_of(long a, long b, long c, long d) {
  return Mat2{Int(a), Int(b), Int(c), Int(d)};
}

Int int_of_json(const json& j) {
  if (j.is_number_integer()) return Int((long)j.get<long long>());
  if (j.is_string()) return Int(j.get<std::string>());
  throw ValidationError("expected integer (number or decimal string) in config");
}

}  // namespace

GroupConfig preset(const std::string& name) {
  GroupConfig c;
  c.enum_defaults.slack = 2.0;
  c.enum_defaults.budget_nodes = 50'000'000;
  if (name == "full-orbit") {
    c.group.label = "full-orbit";
    c.group.generators.push_back(spin_lift(mat2_of(0, -1, 1, 0)));
    c.group.generators.push_back(spin_lift(mat2_of(1, 2, 0, 1)));
    c.group.base_point = Triple{3, 4, 5};
    // Reduction chains to near-diagonal (u, u+-1) points scale with sqrt(T);
    // the ball itself bounds the search, so the cap is effectively disabled.
    c.enum_defaults.max_word_length = 100'000;
    return c;
  }
  if (name == "schottky-demo") {
    c.group.label = "schottky-demo";
    c.group.generators.push_back(spin_lift(mat2_of(1, 2, 2, 5)));
    c.group.generators.push_back(spin_lift(mat2_of(5, 2, 2, 1)));
    c.group.base_point = Triple{3, 4, 5};
    c.enum_defaults.max_word_length = 64;
    return c;
  }
  throw ValidationError("unknown preset: " + name +
                        " (available: full-orbit, schottky-demo)");
}

GroupConfig config_from_json(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const std::exception& e) {
    throw ValidationError(std::string("config JSON parse error: ") + e.what());
  }
  GroupConfig c;
  if (j.contains("preset")) {
    c = preset(j["preset"].get<std::string>());
  } else {
    if (!j.contains("group"))
      throw ValidationError("config must contain \"group\" or \"preset\"");
    const json& g = j["group"];
    std::string form = g.value("generator_form", "soq");
    if (!g.contains("generators") || !g["generators"].is_array())
      throw ValidationError("group.generators must be an array");
    for (const json& gen : g["generators"]) {
      if (form == "sl2") {
        if (!gen.is_array() || gen.size() != 2 || gen[0].size() != 2)
          throw ValidationError("sl2 generator must be a 2x2 array");
        Mat2 m{int_of_json(gen[0][0]), int_of_json(gen[0][1]),
               int_of_json(gen[1][0]), int_of_json(gen[1][1])};
        c.group.generators.push_back(spin_lift(m));
      } else if (form == "soq") {
        if (!gen.is_array() || gen.size() != 3)
          throw ValidationError("soq generator must be a 3x3 array");
        Mat3 m;
        for (int r = 0; r < 3; ++r) {
          if (gen[r].size() != 3)
            throw ValidationError("soq generator must be a 3x3 array");
          for (int col = 0; col < 3; ++col)
            m.at(r, col) = int_of_json(gen[r][col]);
        }
        validate_generator(m);
        c.group.generators.push_back(m);
      } else {
        throw ValidationError("generator_form must be \"sl2\" or \"soq\"");
      }
    }
    if (!g.contains("base_point") || g["base_point"].size() != 3)
      throw ValidationError("group.base_point must be [x, y, z]");
    c.group.base_point = Triple{int_of_json(g["base_point"][0]),
                                int_of_json(g["base_point"][1]),
                                int_of_json(g["base_point"][2])};
    c.group.label = g.value("label", "custom");
    c.enum_defaults.max_word_length = 64;
  }
  if (j.contains("enum")) {
    const json& e = j["enum"];
    if (e.contains("slack")) c.enum_defaults.slack = e["slack"].get<double>();
    if (e.contains("max_word_length"))
      c.enum_defaults.max_word_length = e["max_word_length"].get<int>();
    if (e.contains("budget_nodes"))
      c.enum_defaults.budget_nodes = e["budget_nodes"].get<std::uint64_t>();
  }
  validate_presentation(c.group);
  return c;
}

}  // namespace thinsieve
