#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "json.hpp"
#include "trisurf/graph.hpp"

namespace trisurf {

using Json = nlohmann::json;

// Malformed input text or a missing/mistyped field.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Reads {"vertex_count", "twin", "rotation", "dart_vertex"}.
/// Does not validate graph invariants; see validate().
GraphData parse_graph_json(std::string_view text);
GraphData graph_data_from_json(const Json& j);

Json graph_to_json(const GraphData& g);
inline Json graph_to_json(const RotationGraph& g) { return graph_to_json(g.data()); }

Json validation_to_json(const ValidationReport& report);

/// Serializes with sorted keys and doubles at 17 significant digits, so equal
/// inputs give byte-identical output.
std::string to_canonical_json(const Json& j, int indent = 2);

std::string read_text(const std::string& path);  // "-" reads stdin
void write_text(const std::string& path, std::string_view text);  // "-" writes stdout

}  // namespace trisurf
