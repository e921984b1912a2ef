#pragma once

#include <iosfwd>
#include <memory>
#include <optional>
#include <string>

#include "wgl/catalog.hpp"
#include "wgl/graph.hpp"

namespace wgl {

/// A graph loaded from a spec file, plus the family record when the spec was
/// given as one (so callers can use closed forms instead of the truncation).
struct LoadedGraph {
  std::shared_ptr<WeightedGraph> graph;
  std::optional<PathFamily> family;
  long n_max = 0;  // truncation size when loaded from a family record
};

/// Graph-spec format, JSON. Either explicit data
///   { "vertices": [ids], "vertex_weights": {"id": w, ...},
///     "edges": [{"u":, "v":, "c":}, ...], "frontier": [ids] }
/// (vertices may be omitted when vertex_weights lists them all; weights
/// default to 1), or a family record
///   { "family": {"id": "...", "params": {...}, "n_max": N} }.
/// Throws parse_error on malformed input; construction errors pass through.
LoadedGraph load_graph_spec(std::istream& in);
LoadedGraph load_graph_file(const std::string& path);

/// Writes the explicit form; round-trips weights exactly (shortest
/// representation that parses back to the same double).
void save_graph_spec(const WeightedGraph& g, std::ostream& out);
void save_graph_file(const WeightedGraph& g, const std::string& path);

}  // namespace wgl
