#include "wgl/catalog.hpp"

#include <cmath>
#include <sstream>

namespace wgl {

std::string to_string(CompletenessVerdict v) {
  switch (v) {
    case CompletenessVerdict::Complete: return "complete";
    case CompletenessVerdict::Incomplete: return "incomplete";
    default: return "inconclusive";
  }
}

double PathFamily::omega(VertexId n) const {
  double x = static_cast<double>(n);
  if (id == "remark23") return 1.0 / x;
  if (id == "remark61") return 1.0 / (x * std::log(x));
  if (id == "remark62") return std::pow(x, -alpha);
  if (id == "remark63" || id == "remark63paper") return 1.0;
  if (id == "remark64c1") return 1.0 / (x + 1.0);
  if (id == "remark64c2") return 1.0 / std::sqrt(x + 1.0);
  if (id == "constant") return omega0;
  throw precondition_error("unknown family " + id);
}

double PathFamily::cond(VertexId n) const {
  double x = static_cast<double>(n);
  if (id == "remark23") return (x + 1.0) * (x + 1.0);
  if (id == "remark61") return 1.0;
  if (id == "remark62") return std::pow(x, -beta);
  if (id == "remark63") return std::pow(x + 1.0, 2.0 + eps);
  if (id == "remark63paper") return std::pow(x + 1.0, -2.0 - eps);
  if (id == "remark64c1") return 1.0;
  if (id == "remark64c2") return x * x;
  if (id == "constant") return c0;
  throw precondition_error("unknown family " + id);
}

std::string PathFamily::describe() const {
  std::ostringstream os;
  os << id << " on " << vertex_set;
  if (id == "remark62") os << " (alpha=" << alpha << ", beta=" << beta << ")";
  if (id == "remark63" || id == "remark63paper") os << " (eps=" << eps << ")";
  if (id == "constant") os << " (omega0=" << omega0 << ", c0=" << c0 << ")";
  return os.str();
}

PathFamily make_family(const std::string& id, const std::map<std::string, double>& params) {
  auto get = [&params](const std::string& key, double def) {
    auto it = params.find(key);
    return it == params.end() ? def : it->second;
  };
  PathFamily f;
  f.id = id;
  if (id == "remark23") {
    f.vertex_set = "N*";
    f.first_vertex = 1;
  } else if (id == "remark61") {
    f.vertex_set = "N\\{0,1}";
    f.first_vertex = 2;
  } else if (id == "remark62") {
    f.vertex_set = "N\\{0,1}";
    f.first_vertex = 2;
    f.alpha = get("alpha", 1.0);
    f.beta = get("beta", 0.0);
  } else if (id == "remark63" || id == "remark63paper") {
    f.vertex_set = "N";
    f.first_vertex = 0;
    f.eps = get("eps", 1.0);
    if (!(f.eps > 0.0)) throw precondition_error("remark63 needs eps > 0");
  } else if (id == "remark64c1") {
    f.vertex_set = "N";
    f.first_vertex = 0;
  } else if (id == "remark64c2") {
    // the printed family lives on N, but the edge {0,1} would carry zero
    // conductance, so the catalog starts it at 1
    f.vertex_set = "N*";
    f.first_vertex = 1;
  } else if (id == "constant") {
    f.vertex_set = "N";
    f.first_vertex = 0;
    f.omega0 = get("omega0", 1.0);
    f.c0 = get("c0", 1.0);
    if (!(f.omega0 > 0.0) || !(f.c0 > 0.0))
      throw precondition_error("constant family needs omega0 > 0 and c0 > 0");
  } else {
    throw parse_error("unknown family id '" + id + "'");
  }
  return f;
}

std::vector<std::string> family_ids() {
  return {"remark23", "remark61",   "remark62", "remark63",
          "remark63paper", "remark64c1", "remark64c2", "constant"};
}

std::shared_ptr<WeightedGraph> instantiate(const PathFamily& fam, VertexId n_max) {
  if (n_max < fam.first_vertex + 2)
    throw precondition_error("truncation too small: need n_max >= " +
                             std::to_string(fam.first_vertex + 2));
  std::vector<std::pair<VertexId, double>> vw;
  std::vector<WeightedGraph::Edge> edges;
  for (VertexId n = fam.first_vertex; n <= n_max; ++n) vw.emplace_back(n, fam.omega(n));
  for (VertexId n = fam.first_vertex; n < n_max; ++n) edges.push_back({n, n + 1, fam.cond(n)});
  auto g = std::make_shared<WeightedGraph>(vw, edges);
  g->set_frontier({n_max});
  return g;
}

double closed_form_W(const PathFamily& fam, VertexId n) {
  if (n <= fam.first_vertex)
    throw precondition_error("closed_form_W is declared for interior vertices only");
  double x = static_cast<double>(n);
  if (fam.id == "remark23") return -x * (2.0 * x + 1.0);
  if (fam.id == "remark61") {
    double lx = std::log(x);
    return 2.0 * x * x * lx * lx -
           x * lx * ((x + 1.0) * std::log(x + 1.0) + (x - 1.0) * std::log(x - 1.0));
  }
  if (fam.id == "remark62") {
    double xa = std::pow(x, fam.alpha);
    return xa * (std::pow(x - 1.0, -fam.beta) * (xa - std::pow(x - 1.0, fam.alpha)) +
                 std::pow(x, -fam.beta) * (xa - std::pow(x + 1.0, fam.alpha)));
  }
  if (fam.id == "remark63" || fam.id == "remark63paper" || fam.id == "constant") return 0.0;
  if (fam.id == "remark64c1") return 0.0;  // affine 1/omega, differences cancel
  if (fam.id == "remark64c2") {
    double s = std::sqrt(x + 1.0);
    return s * ((x - 1.0) * (x - 1.0) * (s - std::sqrt(x)) + x * x * (s - std::sqrt(x + 2.0)));
  }
  throw precondition_error("unknown family " + fam.id);
}

double asymptotic_W(const PathFamily& fam, VertexId n) {
  double x = static_cast<double>(n);
  if (fam.id == "remark61") return -std::log(x);
  if (fam.id == "remark62")
    return -fam.alpha * (fam.alpha - fam.beta - 1.0) *
           std::pow(x, 2.0 * fam.alpha - fam.beta - 2.0);
  throw precondition_error("no recorded W asymptotics for family " + fam.id);
}

CompletenessVerdict expected_completeness(const PathFamily& fam) {
  using CV = CompletenessVerdict;
  if (fam.id == "remark23") return CV::Incomplete;  // 1/sqrt(a_n) ~ n^-2 sums finitely
  if (fam.id == "remark61") return CV::Complete;
  if (fam.id == "remark62")
    return fam.alpha - 0.5 * fam.beta <= 1.0 ? CV::Complete : CV::Incomplete;
  if (fam.id == "remark63") return CV::Incomplete;
  if (fam.id == "remark63paper") return CV::Complete;  // the sign slip: lengths grow
  if (fam.id == "remark64c1") return CV::Complete;
  if (fam.id == "remark64c2") return CV::Incomplete;
  if (fam.id == "constant") return CV::Complete;
  return CV::Inconclusive;
}

}  // namespace wgl
