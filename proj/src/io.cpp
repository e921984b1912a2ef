#include "wgl/io.hpp"

#include <fstream>
#include <map>

#include <json.hpp>

namespace wgl {

namespace {

using nlohmann::json;

VertexId to_vertex_id(const json& j) {
  if (j.is_number_integer()) return j.get<VertexId>();
  if (j.is_string()) {
    try {
      size_t pos = 0;
      VertexId v = std::stoll(j.get<std::string>(), &pos);
      if (pos == j.get<std::string>().size()) return v;
    } catch (const std::exception&) {
    }
  }
  throw parse_error("vertex id must be an integer: " + j.dump());
}

double to_weight(const json& j, const char* what) {
  if (!j.is_number()) throw parse_error(std::string(what) + " must be a number: " + j.dump());
  return j.get<double>();
}

LoadedGraph load_family_record(const json& rec) {
  if (!rec.is_object() || !rec.contains("id"))
    throw parse_error("family record needs an object with an \"id\"");
  std::map<std::string, double> params;
  if (rec.contains("params")) {
    if (!rec.at("params").is_object()) throw parse_error("family params must be an object");
    for (const auto& [k, v] : rec.at("params").items()) params[k] = to_weight(v, "family param");
  }
  if (!rec.contains("n_max") || !rec.at("n_max").is_number_integer())
    throw parse_error("family record needs an integer \"n_max\"");
  LoadedGraph out;
  out.family = make_family(rec.at("id").get<std::string>(), params);
  out.n_max = rec.at("n_max").get<long>();
  out.graph = instantiate(*out.family, out.n_max);
  return out;
}

LoadedGraph load_explicit(const json& j) {
  std::map<VertexId, double> weights;
  if (j.contains("vertex_weights")) {
    if (!j.at("vertex_weights").is_object())
      throw parse_error("vertex_weights must be an object keyed by vertex id");
    for (const auto& [k, v] : j.at("vertex_weights").items())
      weights[to_vertex_id(json(k))] = to_weight(v, "vertex weight");
  }
  if (j.contains("vertices")) {
    if (!j.at("vertices").is_array()) throw parse_error("vertices must be an array");
    for (const auto& v : j.at("vertices")) weights.try_emplace(to_vertex_id(v), 1.0);
  }
  if (weights.empty()) throw parse_error("graph spec lists no vertices");
  if (!j.contains("edges") || !j.at("edges").is_array())
    throw parse_error("graph spec needs an \"edges\" array");
  std::vector<WeightedGraph::Edge> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_object() || !e.contains("u") || !e.contains("v") || !e.contains("c"))
      throw parse_error("edge record needs u, v, c: " + e.dump());
    edges.push_back({to_vertex_id(e.at("u")), to_vertex_id(e.at("v")), to_weight(e.at("c"), "conductance")});
  }
  LoadedGraph out;
  out.graph = std::make_shared<WeightedGraph>(
      std::vector<std::pair<VertexId, double>>(weights.begin(), weights.end()), edges);
  if (j.contains("frontier")) {
    if (!j.at("frontier").is_array()) throw parse_error("frontier must be an array");
    std::vector<VertexId> frontier;
    for (const auto& v : j.at("frontier")) {
      frontier.push_back(to_vertex_id(v));
      if (!out.graph->contains(frontier.back()))
        throw parse_error("frontier vertex not in graph: " + std::to_string(frontier.back()));
    }
    out.graph->set_frontier(std::move(frontier));
  }
  return out;
}

}  // namespace

LoadedGraph load_graph_spec(std::istream& in) {
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw parse_error(std::string("malformed graph spec: ") + e.what());
  }
  if (!j.is_object()) throw parse_error("graph spec must be a JSON object");
  if (j.contains("family")) return load_family_record(j.at("family"));
  return load_explicit(j);
}

LoadedGraph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open graph spec: " + path);
  return load_graph_spec(in);
}

void save_graph_spec(const WeightedGraph& g, std::ostream& out) {
  json j;
  j["vertex_weights"] = json::object();
  for (int i = 0; i < g.size(); ++i)
    j["vertex_weights"][std::to_string(g.id(i))] = g.omega_at(i);
  j["edges"] = json::array();
  for (int i = 0; i < g.size(); ++i) {
    VertexId x = g.id(i);
    for (const auto& h : g.adj(i)) {
      VertexId y = g.id(h.target);
      if (y < x) continue;
      j["edges"].push_back({{"u", x}, {"v", y}, {"c", h.cond}});
    }
  }
  if (!g.frontier().empty()) j["frontier"] = g.frontier();
  out << j.dump(2) << '\n';
}

void save_graph_file(const WeightedGraph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw parse_error("cannot open output file: " + path);
  save_graph_spec(g, out);
}

}  // namespace wgl
