#include "fullgroup/groupoid_json.hpp"

#include <fstream>
#include <map>
#include <stdexcept>

namespace fullgroup {

using nlohmann::json;

json groupoid_to_json(const FiniteGroupoid& g) {
  json units = json::array();
  for (int u = 0; u < g.num_units(); ++u) units.push_back(g.label(u));

  json arrows = json::array();
  for (int a = g.num_units(); a < g.size(); ++a) {
    arrows.push_back({{"id", g.label(a)},
                      {"range", g.label(g.range_of(a))},
                      {"source", g.label(g.source_of(a))},
                      {"inverse", g.label(g.invert(a))}});
  }

  json compose = json::array();
  for (int a = g.num_units(); a < g.size(); ++a) {
    for (int b = g.num_units(); b < g.size(); ++b) {
      int c = g.compose(a, b);
      if (c >= 0) compose.push_back({g.label(a), g.label(b), g.label(c)});
    }
  }

  return {{"schema_version", 1},
          {"units", units},
          {"arrows", arrows},
          {"compose", compose}};
}

namespace {

[[noreturn]] void bad(const std::string& message) { throw std::invalid_argument(message); }

std::string string_field(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_string()) {
    bad(std::string("groupoid JSON: missing or non-string field \"") + key + "\"");
  }
  return j[key].get<std::string>();
}

}  // namespace

FiniteGroupoid groupoid_from_json(const json& j) {
  if (!j.is_object()) bad("groupoid JSON: expected an object");
  if (!j.contains("schema_version") || !j["schema_version"].is_number_integer() ||
      j["schema_version"].get<int>() != 1) {
    bad("groupoid JSON: schema_version must be 1");
  }
  if (!j.contains("units") || !j["units"].is_array() || j["units"].empty()) {
    bad("groupoid JSON: \"units\" must be a nonempty array");
  }

  std::vector<std::string> labels;
  std::map<std::string, int> index;
  for (const auto& u : j["units"]) {
    if (!u.is_string()) bad("groupoid JSON: unit ids must be strings");
    std::string id = u.get<std::string>();
    if (!index.emplace(id, static_cast<int>(labels.size())).second) {
      bad("groupoid JSON: duplicate id \"" + id + "\"");
    }
    labels.push_back(std::move(id));
  }
  const int units = static_cast<int>(labels.size());

  const json empty_arr = json::array();
  const json& arrow_list = j.contains("arrows") ? j["arrows"] : empty_arr;
  if (!arrow_list.is_array()) bad("groupoid JSON: \"arrows\" must be an array");
  for (const auto& a : arrow_list) {
    if (!a.is_object()) bad("groupoid JSON: arrow entries must be objects");
    std::string id = string_field(a, "id");
    if (!index.emplace(id, static_cast<int>(labels.size())).second) {
      bad("groupoid JSON: duplicate id \"" + id + "\"");
    }
    labels.push_back(std::move(id));
  }
  const int n = static_cast<int>(labels.size());

  auto resolve = [&](const std::string& id) {
    auto it = index.find(id);
    if (it == index.end()) bad("groupoid JSON: unknown id \"" + id + "\"");
    return it->second;
  };

  std::vector<ArrowId> range(n), source(n), inverse(n);
  for (int u = 0; u < units; ++u) {
    range[u] = source[u] = inverse[u] = u;
  }
  for (int i = 0; i < n - units; ++i) {
    const json& a = arrow_list[static_cast<std::size_t>(i)];
    const int id = units + i;
    int r = resolve(string_field(a, "range"));
    int s = resolve(string_field(a, "source"));
    if (r >= units || s >= units) {
      bad("groupoid JSON: range and source of \"" + labels[id] + "\" must be units");
    }
    range[id] = r;
    source[id] = s;
    inverse[id] = resolve(string_field(a, "inverse"));
  }

  std::vector<int> compose(static_cast<std::size_t>(n) * n, -1);
  if (j.contains("compose")) {
    if (!j["compose"].is_array()) bad("groupoid JSON: \"compose\" must be an array");
    for (const auto& entry : j["compose"]) {
      if (!entry.is_array() || entry.size() != 3 || !entry[0].is_string() ||
          !entry[1].is_string() || !entry[2].is_string()) {
        bad("groupoid JSON: compose entries must be [a, b, ab] id triples");
      }
      int a = resolve(entry[0].get<std::string>());
      int b = resolve(entry[1].get<std::string>());
      compose[static_cast<std::size_t>(a) * n + b] = resolve(entry[2].get<std::string>());
    }
  }
  // Unit-law compositions are implied: u . x = x when r(x) = u, x . u = x when
  // s(x) = u.  Explicit entries (if any) take precedence; validate() will
  // judge them.
  for (int a = 0; a < n; ++a) {
    auto& left = compose[static_cast<std::size_t>(range[a]) * n + a];
    if (left < 0) left = a;
    auto& right = compose[static_cast<std::size_t>(a) * n + source[a]];
    if (right < 0) right = a;
  }

  return FiniteGroupoid(units, std::move(range), std::move(source), std::move(inverse),
                        std::move(compose), std::move(labels));
}

FiniteGroupoid load_groupoid_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open groupoid file: " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    bad("JSON parse error in " + path + ": " + e.what());
  }
  return groupoid_from_json(j);
}

}  // namespace fullgroup
