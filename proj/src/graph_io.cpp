#include <fstream>
#include <iostream>
#include <sstream>

#include "trisurf/io.hpp"

namespace trisurf {

namespace {

template <typename T>
std::vector<T> int_array(const Json& j, const char* field) {
  if (!j.contains(field)) throw ParseError(std::string("missing field \"") + field + "\"");
  const Json& a = j.at(field);
  if (!a.is_array()) throw ParseError(std::string("field \"") + field + "\" must be an array");
  std::vector<T> out;
  out.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i].is_number_integer())
      throw ParseError(std::string("field \"") + field + "\"[" + std::to_string(i) + "] is not an integer");
    out.push_back(a[i].get<T>());
  }
  return out;
}

}  // namespace

GraphData graph_data_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("graph JSON must be an object");
  if (!j.contains("vertex_count")) throw ParseError("missing field \"vertex_count\"");
  if (!j.at("vertex_count").is_number_integer()) throw ParseError("field \"vertex_count\" is not an integer");
  GraphData g;
  g.vertex_count = j.at("vertex_count").get<VertexId>();
  g.twin = int_array<DartId>(j, "twin");
  g.rotation = int_array<DartId>(j, "rotation");
  g.dart_vertex = int_array<VertexId>(j, "dart_vertex");
  return g;
}

GraphData parse_graph_json(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    // Translate the byte offset into a line number for the diagnostic.
    std::size_t line = 1;
    for (std::size_t i = 0; i < e.byte && i < text.size(); ++i)
      if (text[i] == '\n') ++line;
    throw ParseError("line " + std::to_string(line) + ": " + e.what());
  }
  return graph_data_from_json(j);
}

Json graph_to_json(const GraphData& g) {
  return Json{{"vertex_count", g.vertex_count},
              {"twin", g.twin},
              {"rotation", g.rotation},
              {"dart_vertex", g.dart_vertex}};
}

Json validation_to_json(const ValidationReport& report) {
  Json violations = Json::array();
  for (const auto& v : report.violations) violations.push_back({{"rule", v.rule}, {"ids", v.ids}});
  return {{"ok", report.ok()}, {"violations", violations}};
}

std::string read_text(const std::string& path) {
  std::ostringstream buffer;
  if (path == "-") {
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::ios_base::failure("cannot open " + path);
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text(const std::string& path, std::string_view text) {
  if (path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::ios_base::failure("cannot write " + path);
  out << text;
}

}  // namespace trisurf
