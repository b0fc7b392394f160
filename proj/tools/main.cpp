// vertex-energy: per-vertex graph energy toolkit.
//
// Subcommands: catalog, energy, walks, verify, figure-data. Graphs come from
// the built-in catalog (--graph), a graph6 file (--file) or graph6 lines on
// stdin (--stdin). Exit codes: 0 success, 1 verification failure, 2 input or
// parse error, 3 numerical error.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "vertexenergy/catalog.hpp"
#include "vertexenergy/energy.hpp"
#include "vertexenergy/errors.hpp"
#include "vertexenergy/graph6.hpp"
#include "vertexenergy/spectral.hpp"
#include "vertexenergy/walks.hpp"

namespace ve = vertexenergy;

namespace {

std::string fixed6(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

std::string sci(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

// 17 significant digits: enough for the printed value to parse back to the
// exact double.
std::string g17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string json_string(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  out += '"';
  return out;
}

struct SourceOptions {
  std::string graph_name;
  std::string file;
  bool from_stdin = false;
};

void add_source_options(CLI::App* cmd, SourceOptions& src, bool required = true) {
  auto* group = cmd->add_option_group("source", "where the graph comes from");
  group->add_option("--graph", src.graph_name, "named graph from the catalog");
  group->add_option("--file", src.file, "file with one graph6 line (or several for a batch)");
  group->add_flag("--stdin", src.from_stdin, "read graph6 lines from standard input");
  group->require_option(1);
  if (!required) group->require_option(0, 1);
}

std::vector<std::pair<std::string, ve::Graph>> parse_graph6_lines(std::istream& in,
                                                                  const std::string& origin) {
  std::vector<std::pair<std::string, std::size_t>> lines;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
    if (!line.empty()) lines.emplace_back(line, lineno);
  }
  if (lines.empty()) throw ve::BadHeaderError(origin + ": no graph6 data");

  std::vector<std::pair<std::string, ve::Graph>> graphs;
  graphs.reserve(lines.size());
  for (const auto& [text, number] : lines) {
    const std::string label =
        lines.size() == 1 ? origin : origin + ":" + std::to_string(number);
    try {
      graphs.emplace_back(label, ve::parse_graph6(text));
    } catch (const ve::ParseError& e) {
      throw ve::BadHeaderError(label + ": " + e.what());
    }
  }
  return graphs;
}

std::vector<std::pair<std::string, ve::Graph>> resolve_sources(const SourceOptions& src) {
  if (!src.graph_name.empty()) {
    const auto id = ve::named_graph_id_from_string(src.graph_name);
    if (!id) throw ve::BadParametersError("unknown catalog graph '" + src.graph_name + "'");
    return {{src.graph_name, ve::named_graph(*id)}};
  }
  if (src.from_stdin) return parse_graph6_lines(std::cin, "stdin");
  std::ifstream in(src.file);
  if (!in) throw ve::BadParametersError("cannot open file '" + src.file + "'");
  return parse_graph6_lines(in, src.file);
}

double default_tolerance() {
  const char* env = std::getenv("VE_TOLERANCE");
  if (env == nullptr || *env == '\0') return 1e-6;
  char* end = nullptr;
  const double value = std::strtod(env, &end);
  if (end == env || *end != '\0' || !(value > 0.0))
    throw ve::BadParametersError(std::string("invalid VE_TOLERANCE value '") + env + "'");
  return value;
}

// ----- energy rendering ---------------------------------------------------

std::vector<std::pair<std::string, double>> diagnostic_items(const ve::Diagnostics& d) {
  std::vector<std::pair<std::string, double>> items = {
      {"eigen_residual", d.eigen_residual},
      {"max_row_sum_dev", d.max_row_sum_dev},
      {"min_weight", d.min_weight},
  };
  if (d.moment_residual) items.emplace_back("moment_residual", *d.moment_residual);
  return items;
}

void print_energy_table(std::ostream& out, const std::string& label,
                        const ve::EnergyReport& report) {
  out << "# " << label << "  n=" << report.energies.size()
      << "  method=" << ve::to_string(report.method) << "\n";
  out << "vertex  energy\n";
  for (std::size_t v = 0; v < report.energies.size(); ++v) {
    char head[32];
    std::snprintf(head, sizeof head, "%6zu", v + 1);
    out << head << "  " << fixed6(report.energies[v]) << "\n";
  }
  out << " total  " << fixed6(report.total) << "\n";
  out << "# diagnostics:";
  for (const auto& [key, value] : diagnostic_items(report.diagnostics))
    out << " " << key << "=" << sci(value);
  out << "\n";
}

void print_energy_csv_rows(std::ostream& out, const std::string& label,
                           const ve::EnergyReport& report) {
  const std::string prefix =
      csv_field(label) + "," + std::to_string(report.energies.size()) + "," +
      std::string(ve::to_string(report.method)) + ",";
  for (std::size_t v = 0; v < report.energies.size(); ++v)
    out << prefix << v + 1 << "," << fixed6(report.energies[v]) << "\n";
  out << prefix << "total," << fixed6(report.total) << "\n";
  for (const auto& [key, value] : diagnostic_items(report.diagnostics))
    out << prefix << "diag:" << key << "," << sci(value) << "\n";
}

std::string json_energy_record(const std::string& label, const ve::EnergyReport& report,
                               bool with_label = true) {
  std::string out = "{";
  if (with_label)
    out += "\"graph\":" + json_string(label) + ",\"n\":" +
           std::to_string(report.energies.size()) + ",";
  out += "\"method\":\"" + std::string(ve::to_string(report.method)) + "\",\"energies\":[";
  for (std::size_t v = 0; v < report.energies.size(); ++v) {
    if (v > 0) out += ',';
    out += g17(report.energies[v]);
  }
  out += "],\"total\":" + g17(report.total) + ",\"diagnostics\":{";
  bool first = true;
  for (const auto& [key, value] : diagnostic_items(report.diagnostics)) {
    if (!first) out += ',';
    first = false;
    out += "\"" + key + "\":" + g17(value);
  }
  out += "}}";
  return out;
}

double max_pairwise_discrepancy(const std::vector<ve::EnergyReport>& reports) {
  double worst = 0.0;
  for (std::size_t a = 0; a + 1 < reports.size(); ++a)
    for (std::size_t b = a + 1; b < reports.size(); ++b)
      for (std::size_t v = 0; v < reports[a].energies.size(); ++v)
        worst = std::max(worst, std::abs(reports[a].energies[v] - reports[b].energies[v]));
  return worst;
}

int run_energy(const SourceOptions& src, const std::string& method, const std::string& format) {
  const auto sources = resolve_sources(src);
  const bool all = method == "all";
  std::vector<ve::Method> methods;
  if (all) {
    methods = {ve::Method::Spectral, ve::Method::Weights, ve::Method::Moments};
  } else {
    methods = {*ve::method_from_string(method)};
  }

  std::ostringstream out;
  if (format == "csv") out << "graph,n,method,vertex,energy\n";
  bool first_block = true;
  for (const auto& [label, graph] : sources) {
    std::vector<ve::EnergyReport> reports;
    reports.reserve(methods.size());
    for (ve::Method m : methods) reports.push_back(ve::vertex_energies(graph, m));
    const double discrepancy = all ? max_pairwise_discrepancy(reports) : 0.0;

    if (format == "json") {
      if (all) {
        out << "{\"graph\":" << json_string(label) << ",\"n\":" << graph.vertex_count()
            << ",\"records\":[";
        for (std::size_t r = 0; r < reports.size(); ++r) {
          if (r > 0) out << ',';
          out << json_energy_record(label, reports[r], false);
        }
        out << "],\"max_pairwise_discrepancy\":" << g17(discrepancy) << "}\n";
      } else {
        out << json_energy_record(label, reports[0]) << "\n";
      }
    } else if (format == "csv") {
      for (const auto& r : reports) print_energy_csv_rows(out, label, r);
      if (all)
        out << csv_field(label) << "," << graph.vertex_count() << ",all,max_pairwise_discrepancy,"
            << sci(discrepancy) << "\n";
    } else {
      if (!first_block) out << "\n";
      for (const auto& r : reports) print_energy_table(out, label, r);
      if (all) out << "# max_pairwise_discrepancy=" << sci(discrepancy) << "\n";
    }
    first_block = false;
  }
  std::cout << out.str();
  return 0;
}

// ----- walks rendering ----------------------------------------------------

int run_walks(const SourceOptions& src, std::int64_t kmax_opt, const std::string& format) {
  const auto sources = resolve_sources(src);
  std::ostringstream out;
  bool first_block = true;
  for (const auto& [label, graph] : sources) {
    std::size_t kmax;
    if (kmax_opt >= 0) {
      kmax = static_cast<std::size_t>(kmax_opt);
    } else {
      const ve::Spectrum s = ve::eigendecompose(graph.adjacency_matrix());
      kmax = ve::cluster_eigenvalues(s).count() - 1;
    }
    const ve::WalkTable table = ve::walk_table(graph, kmax);
    const std::size_t n = graph.vertex_count();

    if (format == "json") {
      out << "{\"graph\":" << json_string(label) << ",\"n\":" << n << ",\"kmax\":" << kmax
          << ",\"counts\":[";
      for (std::size_t k = 0; k <= kmax; ++k) {
        if (k > 0) out << ',';
        out << '[';
        for (std::size_t v = 0; v < n; ++v) {
          if (v > 0) out << ',';
          out << table.at(k, v);
        }
        out << ']';
      }
      out << "]}\n";
    } else if (format == "csv") {
      if (!first_block) out << "\n";
      out << "k";
      for (std::size_t v = 1; v <= n; ++v) out << ",v" << v;
      out << "\n";
      for (std::size_t k = 0; k <= kmax; ++k) {
        out << k;
        for (std::size_t v = 0; v < n; ++v) out << ',' << table.at(k, v);
        out << "\n";
      }
    } else {
      std::size_t width = 2;
      for (std::size_t v = 1; v <= n; ++v)
        width = std::max(width, 1 + std::to_string(v).size());
      for (std::size_t k = 0; k <= kmax; ++k)
        for (std::size_t v = 0; v < n; ++v)
          width = std::max(width, std::to_string(table.at(k, v)).size());
      if (!first_block) out << "\n";
      out << "# " << label << "  n=" << n << "  kmax=" << kmax << "\n";
      auto cell = [&](const std::string& text) {
        out << std::string(width > text.size() ? width - text.size() : 0, ' ') << text << " ";
      };
      cell("k");
      for (std::size_t v = 1; v <= n; ++v) cell("v" + std::to_string(v));
      out << "\n";
      for (std::size_t k = 0; k <= kmax; ++k) {
        cell(std::to_string(k));
        for (std::size_t v = 0; v < n; ++v) cell(std::to_string(table.at(k, v)));
        out << "\n";
      }
    }
    first_block = false;
  }
  std::cout << out.str();
  return 0;
}

// ----- catalog ------------------------------------------------------------

int run_catalog() {
  std::ostringstream out;
  for (ve::NamedGraphId id : ve::kAllNamedGraphs) {
    const ve::Graph g = ve::named_graph(id);
    const ve::Spectrum s = ve::eigendecompose(g.adjacency_matrix());
    out << ve::to_string(id) << " " << g.vertex_count() << " " << *g.regular_degree() << " "
        << ve::cluster_eigenvalues(s).count() << "\n";
  }
  std::cout << out.str();
  return 0;
}

// ----- figure-data ---------------------------------------------------------

int run_figure_data(const SourceOptions& src) {
  const auto sources = resolve_sources(src);
  std::ostringstream out;
  out << "vertex,energy\n";
  for (const auto& [label, graph] : sources) {
    const ve::EnergyReport report = ve::vertex_energies_spectral(graph);
    for (std::size_t v = 0; v < report.energies.size(); ++v)
      out << v + 1 << "," << fixed6(report.energies[v]) << "\n";
  }
  std::cout << out.str();
  return 0;
}

// ----- verify ---------------------------------------------------------------

struct CheckOutcome {
  bool passed = true;
  std::size_t total = 0;

  void record(std::ostream& out, const std::string& name, bool ok, const std::string& detail) {
    ++total;
    passed = passed && ok;
    out << (ok ? "pass  " : "FAIL  ") << name;
    for (std::size_t i = name.size(); i < 22; ++i) out << ' ';
    out << detail << "\n";
  }
};

bool verify_graph(std::ostream& out, const std::string& label, const ve::Graph& graph,
                  double tol) {
  const std::size_t n = graph.vertex_count();
  out << "# " << label << "  n=" << n << "  tolerance=" << sci(tol) << "\n";
  CheckOutcome outcome;

  const ve::IntMatrix adjacency = graph.adjacency_matrix();
  const ve::Spectrum s = ve::eigendecompose(adjacency);
  const double eps = std::numeric_limits<double>::epsilon();
  const double contract_bound = 64.0 * static_cast<double>(n) * eps;

  {
    const ve::Matrix a = ve::to_real(adjacency);
    const ve::Matrix av = ve::multiply(a, s.vectors);
    double residual = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        residual = std::max(residual, std::abs(av(i, j) - s.vectors(i, j) * s.values[j]));
    const double orth =
        ve::max_abs_diff(ve::multiply(ve::transpose(s.vectors), s.vectors), ve::Matrix::identity(n));
    const double bound = contract_bound * std::max(1.0, ve::max_abs(a));
    outcome.record(out, "spectrum-contract", residual <= bound && orth <= contract_bound,
                   "residual " + sci(residual) + ", orthogonality " + sci(orth) + " (limit " +
                       sci(bound) + ")");
  }

  const ve::Matrix weights = ve::weight_matrix(s);
  {
    double dev = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double row = 0.0, col = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        row += weights(i, j);
        col += weights(j, i);
      }
      dev = std::max({dev, std::abs(row - 1.0), std::abs(col - 1.0)});
    }
    outcome.record(out, "doubly-stochastic", dev <= 1e-10,
                   "max row/col deviation " + sci(dev) + " (limit " + sci(1e-10) + ")");
  }

  const ve::EnergyReport spectral = ve::vertex_energies_spectral(graph);
  {
    double abs_sum = 0.0;
    for (double v : s.values) abs_sum += std::abs(v);
    const double dev = std::abs(spectral.total - abs_sum);
    outcome.record(out, "conservation", dev <= 1e-9,
                   "|sum(energies) - energy| = " + sci(dev) + " (limit " + sci(1e-9) + ")");
  }

  const ve::EigenClasses classes = ve::cluster_eigenvalues(s);
  {
    const ve::EnergyReport w = ve::vertex_energies_weights(graph);
    const ve::EnergyReport m = ve::vertex_energies_moments(graph);
    const double dev = max_pairwise_discrepancy({spectral, w, m});
    outcome.record(out, "method-agreement", dev <= tol,
                   "max pairwise deviation " + sci(dev) + " (limit " + sci(tol) + ")");
  }

  {
    const std::size_t kmax = std::min<std::size_t>(classes.count() - 1, 11);
    const ve::WalkTable table = ve::walk_table(graph, kmax);
    const ve::Matrix q = ve::class_weights(weights, classes);
    double dev = 0.0;
    for (std::size_t k = 0; k <= kmax; ++k)
      for (std::size_t v = 0; v < n; ++v) {
        double predicted = 0.0;
        for (std::size_t c = 0; c < classes.count(); ++c)
          predicted += q(v, c) * std::pow(classes.classes[c].representative,
                                          static_cast<double>(k));
        const double exact = static_cast<double>(table.at(k, v));
        dev = std::max(dev, std::abs(predicted - exact) / std::max(1.0, std::abs(exact)));
      }
    outcome.record(out, "walk-consistency", dev <= tol,
                   "max relative deviation " + sci(dev) + " up to k=" + std::to_string(kmax) +
                       " (limit " + sci(tol) + ")");
  }

  {
    const ve::Matrix a = ve::to_real(adjacency);
    const double dev = ve::max_abs_diff(ve::psd_sqrt(ve::multiply(a, a)), ve::matrix_abs(s));
    outcome.record(out, "abs-vs-sqrt", dev <= 1e-8,
                   "max entry deviation " + sci(dev) + " (limit " + sci(1e-8) + ")");
  }

  {
    const bool ok = ve::parse_graph6(ve::write_graph6(graph)) == graph;
    outcome.record(out, "graph6-roundtrip", ok, ok ? "exact" : "mismatch");
  }

  out << label << ": " << (outcome.passed ? "all " : "") << outcome.total << " checks"
      << (outcome.passed ? " passed" : ", some FAILED") << "\n";
  return outcome.passed;
}

int run_verify(const SourceOptions& src, bool all_catalog, double tol) {
  std::ostringstream out;
  bool ok = true;
  if (all_catalog) {
    bool first = true;
    for (ve::NamedGraphId id : ve::kAllNamedGraphs) {
      if (!first) out << "\n";
      first = false;
      ok = verify_graph(out, std::string(ve::to_string(id)), ve::named_graph(id), tol) && ok;
    }
  } else {
    bool first = true;
    for (const auto& [label, graph] : resolve_sources(src)) {
      if (!first) out << "\n";
      first = false;
      ok = verify_graph(out, label, graph, tol) && ok;
    }
  }
  std::cout << out.str();
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"per-vertex graph energy: spectral, weight and moment routes"};
  app.require_subcommand(1);

  app.add_subcommand("catalog", "list the built-in graphs (name, n, degree, distinct eigenvalues)");

  SourceOptions energy_src;
  std::string method = "spectral";
  std::string energy_format = "table";
  auto* energy_cmd = app.add_subcommand("energy", "per-vertex energies and the total");
  add_source_options(energy_cmd, energy_src);
  energy_cmd->add_option("--method", method, "spectral|weights|moments|transitive|all")
      ->check(CLI::IsMember({"spectral", "weights", "moments", "transitive", "all"}));
  energy_cmd->add_option("--format", energy_format, "table|csv|json")
      ->check(CLI::IsMember({"table", "csv", "json"}));

  SourceOptions walks_src;
  std::int64_t kmax = -1;
  std::string walks_format = "table";
  auto* walks_cmd = app.add_subcommand("walks", "closed-walk counts (A^k diagonals)");
  add_source_options(walks_cmd, walks_src);
  walks_cmd->add_option("--kmax", kmax, "largest walk length (default: distinct eigenvalues - 1)")
      ->check(CLI::Range(std::int64_t{0}, std::int64_t{1} << 40));
  walks_cmd->add_option("--format", walks_format, "table|csv|json")
      ->check(CLI::IsMember({"table", "csv", "json"}));

  SourceOptions verify_src;
  bool all_catalog = false;
  double tolerance = -1.0;
  auto* verify_cmd = app.add_subcommand("verify", "cross-check all energy routes and invariants");
  auto* verify_group = verify_cmd->add_option_group("source", "where the graph comes from");
  verify_group->add_option("--graph", verify_src.graph_name, "named graph from the catalog");
  verify_group->add_option("--file", verify_src.file, "file with graph6 lines");
  verify_group->add_flag("--stdin", verify_src.from_stdin, "read graph6 lines from stdin");
  verify_group->add_flag("--all-catalog", all_catalog, "verify every catalog graph");
  verify_group->require_option(1);
  verify_cmd->add_option("--tolerance", tolerance,
                         "method-agreement tolerance (default 1e-6, or VE_TOLERANCE)");

  SourceOptions figure_src;
  auto* figure_cmd =
      app.add_subcommand("figure-data", "two-column csv of spectral vertex energies");
  add_source_options(figure_cmd, figure_src);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand("catalog")) return run_catalog();
    if (app.got_subcommand("energy")) return run_energy(energy_src, method, energy_format);
    if (app.got_subcommand("walks")) return run_walks(walks_src, kmax, walks_format);
    if (app.got_subcommand("verify")) {
      if (tolerance <= 0.0) tolerance = default_tolerance();
      return run_verify(verify_src, all_catalog, tolerance);
    }
    if (app.got_subcommand("figure-data")) return run_figure_data(figure_src);
  } catch (const ve::NumericError& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return 3;
  } catch (const ve::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
