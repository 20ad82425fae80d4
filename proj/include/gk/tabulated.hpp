#ifndef GK_TABULATED_HPP
#define GK_TABULATED_HPP

#include "gk/prime_graph.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace gk {

/// A prime graph taken from an external table rather than derived here.
struct TabulatedGraph {
  std::string name;
  std::vector<Prime> vertices;
  std::vector<std::pair<Prime, Prime>> edges;
  std::string source;

  PrimeGraph graph() const {
    PrimeGraph g(vertices);
    for (const auto& [a, b] : edges) g.add_edge(a, b);
    g.set_group(name);
    return g;
  }
};

namespace detail {

// Line numbers of the objects inside the top-level "graphs" array, in order.
inline std::vector<std::size_t> entry_lines(const std::string& text) {
  std::vector<std::size_t> lines;
  std::size_t line = 1;
  int depth = 0;
  bool in_string = false, escaped = false;
  for (char c : text) {
    if (c == '\n') ++line;
    if (in_string) {
      if (escaped) escaped = false;
      else if (c == '\\') escaped = true;
      else if (c == '"') in_string = false;
      continue;
    }
    if (c == '"') in_string = true;
    else if (c == '{' || c == '[') {
      if (c == '{' && depth == 2) lines.push_back(line);
      ++depth;
    } else if (c == '}' || c == ']') --depth;
  }
  return lines;
}

inline std::string canonical_token(const std::string& name) {
  try {
    return parse_group_id(name).str();
  } catch (const std::invalid_argument&) {
    return name;
  }
}

} // namespace detail

/// Parses the data-file text; `origin` is used as the file name in diagnostics.
inline std::vector<TabulatedGraph> parse_tabulated(const std::string& text, const std::string& origin = "<data>") {
  if (text.find_first_not_of(" \t\r\n") == std::string::npos) return {};
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw DataError(origin + ": " + e.what());
  }
  if (!j.is_object() || !j.contains("graphs") || !j["graphs"].is_array())
    throw DataError(origin + ":1: top level must be an object with a \"graphs\" array");
  const auto lines = detail::entry_lines(text);
  std::vector<TabulatedGraph> out;
  std::size_t index = 0;
  for (const auto& entry : j["graphs"]) {
    const std::size_t line = index < lines.size() ? lines[index] : 1;
    auto fail = [&](const std::string& what) -> DataError {
      std::string who = entry.is_object() && entry.contains("name") && entry["name"].is_string()
                            ? " ('" + entry["name"].get<std::string>() + "')"
                            : "";
      return DataError(origin + ":" + std::to_string(line) + ": entry " + std::to_string(index) + who + ": " + what);
    };
    if (!entry.is_object()) throw fail("entry must be an object");
    for (const char* key : {"name", "vertices", "edges", "source"})
      if (!entry.contains(key)) throw fail(std::string("missing field \"") + key + "\"");
    if (!entry["name"].is_string() || entry["name"].get<std::string>().empty()) throw fail("name must be a nonempty string");
    if (!entry["source"].is_string() || entry["source"].get<std::string>().empty())
      throw fail("source citation is required");
    TabulatedGraph t;
    t.name = detail::canonical_token(entry["name"].get<std::string>());
    t.source = entry["source"].get<std::string>();
    try {
      PrimeGraph g = graph_from_json_value(entry);
      t.vertices = g.vertices();
      t.edges.assign(g.edges().begin(), g.edges().end());
    } catch (const ParseError& e) {
      throw fail(e.what());
    }
    out.push_back(std::move(t));
    ++index;
  }
  return out;
}

inline std::vector<TabulatedGraph> load_tabulated(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open tabulated data file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_tabulated(ss.str(), path);
}

/// Tabulated graphs keyed by canonical group token.
class TabulatedRegistry {
public:
  TabulatedRegistry() = default;
  explicit TabulatedRegistry(std::vector<TabulatedGraph> graphs) {
    for (auto& g : graphs) {
      const std::string key = g.name;
      if (!entries_.emplace(key, std::move(g)).second) throw DataError("duplicate tabulated entry for " + key);
    }
  }
  static TabulatedRegistry from_file(const std::string& path) { return TabulatedRegistry(load_tabulated(path)); }

  const TabulatedGraph* find(const std::string& token) const {
    auto it = entries_.find(detail::canonical_token(token));
    return it == entries_.end() ? nullptr : &it->second;
  }
  std::size_t size() const { return entries_.size(); }
  const std::map<std::string, TabulatedGraph>& entries() const { return entries_; }

private:
  std::map<std::string, TabulatedGraph> entries_;
};

inline std::string default_data_path() {
#ifdef GK_DEFAULT_DATA_PATH
  return GK_DEFAULT_DATA_PATH;
#else
  return "data/tabulated_graphs.json";
#endif
}

/// Registry loaded once from default_data_path().
inline const TabulatedRegistry& default_tabulated() {
  static const TabulatedRegistry registry = TabulatedRegistry::from_file(default_data_path());
  return registry;
}

} // namespace gk

#endif
