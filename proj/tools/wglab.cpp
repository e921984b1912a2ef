// wglab: batch front-end for the weighted-graph Laplacian library.
// One command per process; prints a human table and optionally writes the
// same report as JSON via --out. All emitted sums and tables run in
// ascending vertex-id order, so identical inputs give identical bytes.

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "wgl/dirichlet.hpp"
#include "wgl/esa_probe.hpp"
#include "wgl/ground_state.hpp"
#include "wgl/io.hpp"
#include "wgl/metric.hpp"

using nlohmann::json;

namespace {

struct CommonOpts {
  std::string graph_path;
  std::vector<std::string> families;
  std::vector<std::string> param_strs;  // raw key=value tokens
  std::map<std::string, double> params;
  long n_max = 100;
  double tol = 1e-8;
  std::string out_path;
  int jobs = 1;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool multi_family = false) {
  cmd->add_option("--graph", o.graph_path, "graph spec file (JSON)");
  auto* fam = cmd->add_option("--family", o.families, "catalog family id");
  if (!multi_family) fam->expected(0, 1);
  cmd->add_option("--param", o.param_strs, "family parameter, e.g. --param alpha=2");
  cmd->add_option("--n-max", o.n_max, "truncation size / iteration cap");
  cmd->add_option("--tol", o.tol, "tolerance");
  cmd->add_option("--out", o.out_path, "write the report as JSON to this file");
  cmd->add_option("--jobs", o.jobs, "parallel workers for independent family runs")
      ->check(CLI::Range(1, 256));
}

wgl::LoadedGraph resolve_graph(const CommonOpts& o) {
  if (!o.graph_path.empty() && !o.families.empty())
    throw wgl::parse_error("--graph and --family are mutually exclusive");
  if (!o.graph_path.empty()) return wgl::load_graph_file(o.graph_path);
  if (o.families.size() == 1) {
    wgl::LoadedGraph lg;
    lg.family = wgl::make_family(o.families[0], o.params);
    lg.n_max = o.n_max;
    lg.graph = wgl::instantiate(*lg.family, o.n_max);
    return lg;
  }
  throw wgl::parse_error("need exactly one of --graph or --family");
}

json config_echo(const std::string& verb, const CommonOpts& o) {
  json cfg{{"command", verb}, {"n_max", o.n_max}, {"tol", o.tol}, {"jobs", o.jobs}};
  if (!o.graph_path.empty()) cfg["graph"] = o.graph_path;
  if (!o.families.empty()) cfg["families"] = o.families;
  if (!o.params.empty()) cfg["params"] = o.params;
  return cfg;
}

void emit(const json& report, const CommonOpts& o) {
  if (o.out_path.empty()) return;
  std::ofstream out(o.out_path);
  if (!out) throw wgl::parse_error("cannot open output file: " + o.out_path);
  out << report.dump(2) << '\n';
}

std::vector<wgl::VertexId> parse_id_list(const std::string& s) {
  std::vector<wgl::VertexId> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    try {
      out.push_back(std::stoll(tok));
    } catch (const std::exception&) {
      throw wgl::parse_error("bad vertex id in list: " + tok);
    }
  }
  return out;
}

std::map<wgl::VertexId, double> parse_assignments(const std::string& s) {
  std::map<wgl::VertexId, double> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    auto eq = tok.find('=');
    if (eq == std::string::npos) throw wgl::parse_error("expected id=value, got: " + tok);
    try {
      out[std::stoll(tok.substr(0, eq))] = std::stod(tok.substr(eq + 1));
    } catch (const std::exception&) {
      throw wgl::parse_error("bad id=value pair: " + tok);
    }
  }
  return out;
}

// --- inspect ---------------------------------------------------------------

int cmd_inspect(const CommonOpts& o) {
  auto lg = resolve_graph(o);
  const auto& g = *lg.graph;
  json rep{{"config", config_echo("inspect", o)}};
  rep["vertices"] = g.size();
  rep["edges"] = g.edge_count();
  rep["max_degree"] = g.max_degree();
  rep["connected"] = g.connected();
  rep["frontier"] = g.frontier();
  double wmin = g.omega_at(0), wmax = wmin;
  for (int i = 1; i < g.size(); ++i) {
    wmin = std::min(wmin, g.omega_at(i));
    wmax = std::max(wmax, g.omega_at(i));
  }
  rep["omega_range"] = {wmin, wmax};
  if (lg.family) rep["family"] = lg.family->describe();

  std::cout << "vertices   " << g.size() << "\n"
            << "edges      " << g.edge_count() << "\n"
            << "max degree " << g.max_degree() << "\n"
            << "connected  " << (g.connected() ? "yes" : "no") << "\n"
            << "frontier   " << g.frontier().size() << " vertex(es)\n"
            << "omega      [" << wmin << ", " << wmax << "]\n";
  if (lg.family) std::cout << "family     " << lg.family->describe() << "\n";
  emit(rep, o);
  return 0;
}

// --- dirichlet -------------------------------------------------------------

int cmd_dirichlet(const CommonOpts& o, const std::string& region_s, const std::string& boundary_s) {
  auto lg = resolve_graph(o);
  auto ids = parse_id_list(region_s);
  auto region = wgl::region_from_vertexset(*lg.graph, {ids.begin(), ids.end()});
  auto u = parse_assignments(boundary_s);

  auto P = lg.family ? wgl::gauge_to_schrodinger({lg.graph})
                     : wgl::SchrodingerOperator::uniform(lg.graph, 1.0, 0.0);
  auto sol = wgl::solve_dirichlet({P, region, u});
  auto cert = wgl::harnack_certificate(P, region);

  json rep{{"config", config_echo("dirichlet", o)}};
  rep["region"] = {{"size", region.all.size()},
                   {"interior", region.interior},
                   {"boundary", region.boundary}};
  rep["residual"] = sol.residual;
  rep["positivity_margin"] = sol.positivity_margin;
  rep["cg_iterations"] = sol.cg_iterations;
  rep["certificate"] = {{"alpha", cert.alpha}, {"A", cert.A},   {"maxW", cert.maxW},
                        {"k0", cert.k0},       {"D", cert.D},   {"log_k", cert.log_k}};
  json values = json::object();
  bool positive_data = !u.empty();
  for (const auto& [x, v] : u) positive_data &= v >= 0.0;
  std::cout << std::setprecision(17);
  std::cout << "vertex  f\n";
  for (const auto& [x, v] : sol.f.values()) {
    values[std::to_string(x)] = v;
    std::cout << x << "  " << v << "\n";
  }
  rep["solution"] = values;
  if (positive_data) {
    bool ok = wgl::check_harnack(P, region, sol.f, cert);
    rep["harnack_check"] = ok;
    std::cout << "harnack check      " << (ok ? "pass" : "FAIL") << "\n";
  }
  std::cout << "residual           " << sol.residual << "\n"
            << "positivity margin  " << sol.positivity_margin << "\n"
            << "certificate log k  " << cert.log_k << "\n";
  emit(rep, o);
  return 0;
}

// --- harmonic --------------------------------------------------------------

int cmd_harmonic(const CommonOpts& o, wgl::VertexId x0, const std::string& monitor_s) {
  auto lg = resolve_graph(o);
  auto P = lg.family ? wgl::gauge_to_schrodinger({lg.graph})
                     : wgl::SchrodingerOperator::uniform(lg.graph, 1.0, 0.0);
  std::vector<wgl::VertexId> monitored;
  if (!monitor_s.empty()) monitored = parse_id_list(monitor_s);
  auto res =
      wgl::run_exhaustion(P, x0, static_cast<int>(o.n_max), o.tol, monitored);

  json rep{{"config", config_echo("harmonic", o)}};
  rep["x0"] = x0;
  rep["converged"] = res.converged;
  rep["stop_reason"] = res.stop_reason;
  rep["final_radius"] = res.final_radius;
  rep["residual"] = res.residual;
  rep["window_violations"] = res.window_violations;
  json rows = json::array();
  std::cout << std::setprecision(12);
  std::cout << "radius  psi(x0)  residual  monitored...\n";
  for (const auto& r : res.rows) {
    json row{{"radius", r.radius}, {"psi_x0", r.psi_x0}, {"residual", r.residual}};
    std::cout << r.radius << "  " << r.psi_x0 << "  " << r.residual;
    json mv = json::object();
    for (const auto& [m, v] : r.monitored_values) {
      mv[std::to_string(m)] = v;
      std::cout << "  " << m << "=" << v;
    }
    row["monitored"] = mv;
    rows.push_back(row);
    std::cout << "\n";
  }
  rep["rows"] = rows;
  json phi = json::object();
  for (const auto& [x, v] : res.phi.values()) phi[std::to_string(x)] = v;
  rep["phi"] = phi;
  std::string verdict =
      res.converged ? "converged" : (res.stop_reason == "truncation" ? "inconclusive (truncation)"
                                                                     : "inconclusive (n_max)");
  rep["verdict"] = verdict;
  std::cout << "verdict: " << verdict << "\n";
  emit(rep, o);
  return 0;
}

// --- distance --------------------------------------------------------------

int cmd_distance(const CommonOpts& o, wgl::VertexId x0) {
  auto lg = resolve_graph(o);
  auto P = lg.family ? wgl::gauge_to_schrodinger({lg.graph})
                     : wgl::SchrodingerOperator::uniform(lg.graph, 1.0, 0.0);
  json rep{{"config", config_echo("distance", o)}};
  std::cout << std::setprecision(17);
  json rows = json::array();
  std::cout << "vertex\tdistance\n";
  for (wgl::VertexId x : lg.graph->ids()) {
    double d = wgl::delta_a(P, x0, x);
    rows.push_back({{"vertex", x}, {"distance", d}});
    std::cout << x << "\t" << d << "\n";
  }
  rep["distances"] = rows;

  if (lg.family) {
    auto diag = wgl::ray_completeness_diagnostic(*lg.family, o.n_max);
    json series = json::array();
    std::cout << "n\tS_n\n";
    for (const auto& [n, s] : diag.partial_sums) {
      series.push_back({{"n", n}, {"S_n", s}});
      std::cout << n << "\t" << s << "\n";
    }
    rep["edge_length_partial_sums"] = series;
    rep["exponent_p"] = diag.exponent_p;
    rep["used_secondary_fit"] = diag.used_secondary;
    if (diag.used_secondary) rep["log_exponent_q"] = diag.log_exponent_q;
    rep["completeness"] = wgl::to_string(diag.completeness);
    std::cout << "completeness: " << wgl::to_string(diag.completeness)
              << " (p=" << diag.exponent_p << ")\n";
  }
  emit(rep, o);
  return 0;
}

// --- probe -----------------------------------------------------------------

json probe_one_family(const std::string& id, const CommonOpts& o, std::optional<double> lambda) {
  auto fam = wgl::make_family(id, o.params);
  json rep{{"family", fam.describe()}};

  auto probe = wgl::kernel_growth_probe(fam, lambda, std::min<long>(o.n_max, 20000));
  const char* verdict = probe.verdict == wgl::KernelProbeResult::Verdict::Grows     ? "grows"
                        : probe.verdict == wgl::KernelProbeResult::Verdict::Decays ? "decays"
                                                                                   : "inconclusive";
  rep["kernel_probe"] = {{"lambda", probe.lambda},
                         {"n_terms", probe.n_terms},
                         {"raw_head", probe.raw_head},
                         {"final_log_abs", probe.log_abs.back()},
                         {"l2_partial_log_final", probe.l2_partial_log.back()},
                         {"rescaled", probe.rescaled},
                         {"verdict", verdict}};
  if (probe.monotone_from) rep["kernel_probe"]["monotone_from"] = *probe.monotone_from;

  auto metric = wgl::ray_completeness_diagnostic(fam, std::max<long>(o.n_max, 1000));
  rep["completeness"] = {{"verdict", wgl::to_string(metric.completeness)},
                         {"exponent_p", metric.exponent_p},
                         {"used_secondary_fit", metric.used_secondary}};
  auto kl = wgl::kl_proxy_check(fam, std::max<long>(o.n_max, 1000));
  rep["kl_proxy"] = {{"omega_sq_sum_divergent",
                      kl.sum == wgl::SeriesDiagnostic::SumVerdict::Divergent},
                     {"exponent_p", kl.exponent_p}};

  long trunc = std::min<long>(o.n_max, 2000);
  auto g = wgl::instantiate(fam, fam.first_vertex + trunc);
  double bound = wgl::form_lower_bound(wgl::gauge_to_schrodinger({g}));
  rep["form_lower_bound"] = {{"truncation", trunc}, {"value", bound}};
  return rep;
}

int cmd_probe(const CommonOpts& o, std::optional<double> lambda) {
  if (o.families.empty()) throw wgl::parse_error("probe needs at least one --family");
  std::vector<json> reps(o.families.size());
  std::exception_ptr failure;
  std::mutex mu;
  auto worker = [&](size_t lo, size_t hi) {
    for (size_t i = lo; i < hi; ++i) {
      try {
        reps[i] = probe_one_family(o.families[i], o, lambda);
      } catch (...) {
        std::lock_guard lock(mu);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  size_t jobs = std::min<size_t>(static_cast<size_t>(o.jobs), o.families.size());
  if (jobs <= 1) {
    worker(0, o.families.size());
  } else {
    std::vector<std::thread> pool;
    size_t per = (o.families.size() + jobs - 1) / jobs;
    for (size_t j = 0; j < jobs; ++j)
      pool.emplace_back(worker, j * per, std::min(o.families.size(), (j + 1) * per));
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  json rep{{"config", config_echo("probe", o)}, {"families", reps}};
  std::cout << std::setprecision(12);
  for (const auto& r : reps) {
    std::cout << "family: " << r.at("family").get<std::string>() << "\n"
              << "  kernel probe:  " << r.at("kernel_probe").at("verdict").get<std::string>()
              << " (lambda=" << r.at("kernel_probe").at("lambda").get<double>()
              << ", log|v_end|=" << r.at("kernel_probe").at("final_log_abs").get<double>() << ")\n"
              << "  completeness:  " << r.at("completeness").at("verdict").get<std::string>()
              << " (p=" << r.at("completeness").at("exponent_p").get<double>() << ")\n"
              << "  form bound:    " << r.at("form_lower_bound").at("value").get<double>()
              << " (truncation " << r.at("form_lower_bound").at("truncation").get<long>() << ")\n";
  }
  emit(rep, o);
  return 0;
}

// --- catalog ---------------------------------------------------------------

int cmd_catalog_list(const CommonOpts& o) {
  json rep{{"config", config_echo("catalog list", o)}};
  json rows = json::array();
  for (const auto& id : wgl::family_ids()) {
    auto fam = wgl::make_family(id);
    rows.push_back({{"id", id}, {"description", fam.describe()}});
    std::cout << id << "\t" << fam.describe() << "\n";
  }
  rep["families"] = rows;
  emit(rep, o);
  return 0;
}

int cmd_catalog_emit(const CommonOpts& o, const std::string& id) {
  auto fam = wgl::make_family(id, o.params);
  auto g = wgl::instantiate(fam, fam.first_vertex + o.n_max);
  if (o.out_path.empty()) {
    wgl::save_graph_spec(*g, std::cout);
  } else {
    wgl::save_graph_file(*g, o.out_path);
    std::cout << "wrote " << g->size() << " vertices, " << g->edge_count() << " edges to "
              << o.out_path << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"weighted-graph Laplacian laboratory"};
  app.require_subcommand(1);

  CommonOpts o;
  std::string region_s, boundary_s, monitor_s, emit_id;
  wgl::VertexId x0 = 0;
  std::optional<double> lambda;
  double lambda_raw = 0.0;

  auto* inspect = app.add_subcommand("inspect", "summarize a graph spec");
  add_common(inspect, o);

  auto* dirichlet = app.add_subcommand("dirichlet", "solve a boundary-value problem");
  add_common(dirichlet, o);
  dirichlet->add_option("--region", region_s, "comma-separated vertex ids of K")->required();
  dirichlet->add_option("--boundary", boundary_s, "boundary data id=value,...")->required();

  auto* harmonic = app.add_subcommand("harmonic", "positive harmonic function by ball exhaustion");
  add_common(harmonic, o);
  harmonic->add_option("--x0", x0, "exhaustion center");
  harmonic->add_option("--monitor", monitor_s, "comma-separated vertices to monitor");

  auto* distance = app.add_subcommand("distance", "metric distance table and series diagnostic");
  add_common(distance, o);
  distance->add_option("--x0", x0, "source vertex");

  auto* probe = app.add_subcommand("probe", "self-adjointness evidence report for families");
  add_common(probe, o, /*multi_family=*/true);
  auto* lam = probe->add_option("--lambda", lambda_raw, "shift for the kernel probe");

  auto* catalog = app.add_subcommand("catalog", "list or emit closed-form families");
  auto* cat_list = catalog->add_subcommand("list", "list family ids");
  add_common(cat_list, o);
  auto* cat_emit = catalog->add_subcommand("emit", "write a truncation as a graph spec");
  add_common(cat_emit, o);
  cat_emit->add_option("id", emit_id, "family id")->required();
  catalog->require_subcommand(1);

  CLI11_PARSE(app, argc, argv);
  if (lam->count() > 0) lambda = lambda_raw;

  try {
    for (const auto& kv : o.param_strs) {
      auto eq = kv.find('=');
      if (eq == std::string::npos || eq == 0)
        throw wgl::parse_error("expected --param key=value, got: " + kv);
      try {
        o.params[kv.substr(0, eq)] = std::stod(kv.substr(eq + 1));
      } catch (const std::exception&) {
        throw wgl::parse_error("bad parameter value in: " + kv);
      }
    }
    if (inspect->parsed()) return cmd_inspect(o);
    if (dirichlet->parsed()) return cmd_dirichlet(o, region_s, boundary_s);
    if (harmonic->parsed()) return cmd_harmonic(o, x0, monitor_s);
    if (distance->parsed()) return cmd_distance(o, x0);
    if (probe->parsed()) return cmd_probe(o, lambda);
    if (cat_list->parsed()) return cmd_catalog_list(o);
    if (cat_emit->parsed()) return cmd_catalog_emit(o, emit_id);
  } catch (const wgl::parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const wgl::lookup_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const wgl::precondition_error& e) {
    std::cerr << "precondition error: " << e.what() << "\n";
    return 3;
  } catch (const wgl::numeric_error& e) {
    std::cerr << "numeric error: " << e.what() << "\n";
    return 4;
  }
  return 1;
}
