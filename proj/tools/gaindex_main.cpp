// gaindex: degree-based topological indices, line graphs and bound checks.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gaindex/checks.hpp"
#include "gaindex/enumeration.hpp"
#include "gaindex/errors.hpp"
#include "gaindex/graph_io.hpp"
#include "gaindex/indices.hpp"
#include "gaindex/line_graph.hpp"
#include "gaindex/sweep.hpp"

using nlohmann::ordered_json;
namespace fs = std::filesystem;
using namespace gaindex;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kDefaultPrecision = 53;

struct Options {
  std::vector<std::string> inputs;
  std::string format = "text";
  std::vector<double> alphas;
  std::vector<std::string> theorems;
  int nmax = 7;
  int trials = 0;
  int random_nmin = 2;
  int random_nmax = 12;
  std::uint64_t seed = 42;
  int precision = 0;
  unsigned threads = 0;
  int n = 0;
  int m = 0;
  std::string objective = "min";
  std::string out_dir;
};

struct NamedGraph {
  std::string label;
  Graph graph;
};

int resolve_precision(int flag) {
  if (flag > 0) return flag;
  if (const char* env = std::getenv("GAINDEX_PRECISION")) {
    try {
      const int value = std::stoi(env);
      if (value >= 32) return value;
    } catch (const std::exception&) {
    }
    std::cerr << "warning: ignoring GAINDEX_PRECISION=" << env << " (need an integer >= 32)\n";
  }
  return kDefaultPrecision;
}

int decimal_digits(int bits) { return std::max(6, static_cast<int>(bits * 0.30103)); }

bool looks_like_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    long a = 0;
    long b = 0;
    std::string rest;
    return static_cast<bool>(fields >> a >> b) && !(fields >> rest);
  }
  return false;
}

void read_graphs_from_text(const std::string& text, const std::string& source,
                           std::vector<NamedGraph>& out) {
  if (looks_like_edge_list(text)) {
    int index = 0;
    for (Graph& g : parse_edge_lists(text)) {
      out.push_back({source + "#" + std::to_string(++index), std::move(g)});
    }
    return;
  }
  std::istringstream in(text);
  for (Graph& g : read_graph6(in)) {
    std::string label = to_graph6(g);
    out.push_back({std::move(label), std::move(g)});
  }
}

std::vector<NamedGraph> load_inputs(const std::vector<std::string>& inputs) {
  std::vector<NamedGraph> graphs;
  if (inputs.empty() || (inputs.size() == 1 && inputs[0] == "-")) {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    read_graphs_from_text(buffer.str(), "stdin", graphs);
    return graphs;
  }
  for (const std::string& input : inputs) {
    if (auto named = parse_named_graph(input)) {
      graphs.push_back({input, std::move(*named)});
    } else if (fs::is_regular_file(input)) {
      std::ifstream file(input);
      std::ostringstream buffer;
      buffer << file.rdbuf();
      read_graphs_from_text(buffer.str(), input, graphs);
    } else {
      graphs.push_back({input, parse_graph6(input)});
    }
  }
  return graphs;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string format_double(double x, int digits = 17) {
  std::ostringstream out;
  out << std::setprecision(digits) << x;
  return out.str();
}

std::string value_text(const IndexValue& v, int precision) {
  if (v.exact) {
    if (v.exact->is_rational()) return v.exact->to_string();
    return v.exact->to_string() + " ~ " + to_decimal_string(*v.exact, decimal_digits(precision));
  }
  return "~ " + format_double(v.approx) + " (+/- " + format_double(v.abs_error, 3) + ")";
}

ordered_json value_json(const IndexValue& v, int precision) {
  ordered_json out = to_json(v);
  if (v.exact) {
    const Approximation a = to_float(*v.exact, precision);
    out["approx"] = a.value;
    out["abs_error"] = a.abs_error;
  }
  out["precision_bits"] = precision;
  return out;
}

// compute ------------------------------------------------------------------

std::vector<std::pair<std::string, IndexValue>> all_indices(const Graph& g,
                                                            const std::vector<double>& alphas) {
  std::vector<std::pair<std::string, IndexValue>> out = {
      {"GA1", ga1(g)},          {"M1", m1(g)},
      {"M2", m2(g)},            {"F", forgotten(g)},
      {"H", harmonic(g)},       {"ID", inverse_degree(g)},
      {"R", randic(g)},         {"chi", sum_connectivity(g)},
  };
  for (double a : alphas) {
    const std::string suffix = "^" + format_double(a);
    out.emplace_back("M1" + suffix, m1_alpha(g, a));
    out.emplace_back("M2" + suffix, m2_alpha(g, a));
    out.emplace_back("chi" + suffix, chi_alpha(g, a));
  }
  return out;
}

int cmd_compute(const Options& opt, int precision) {
  const std::vector<NamedGraph> graphs = load_inputs(opt.inputs);
  ordered_json json = ordered_json::array();
  if (opt.format == "csv") {
    std::cout << "graph,n,m,max_degree,min_degree,class,index,exact,approx\n";
  }
  for (const NamedGraph& item : graphs) {
    const Graph& g = item.graph;
    const auto values = all_indices(g, opt.alphas);
    const std::string cls = classify(g).describe();
    if (opt.format == "json") {
      ordered_json entry;
      entry["graph"] = item.label;
      entry["graph6"] = to_graph6(g);
      entry["n"] = g.order();
      entry["m"] = g.size();
      entry["max_degree"] = g.max_degree();
      entry["min_degree"] = g.min_degree();
      entry["class"] = cls;
      ordered_json indices;
      for (const auto& [name, value] : values) indices[name] = value_json(value, precision);
      entry["indices"] = indices;
      json.push_back(entry);
    } else if (opt.format == "csv") {
      for (const auto& [name, value] : values) {
        std::cout << csv_escape(item.label) << ',' << g.order() << ',' << g.size() << ','
                  << g.max_degree() << ',' << g.min_degree() << ',' << csv_escape(cls) << ','
                  << csv_escape(name) << ','
                  << csv_escape(value.exact ? value.exact->to_string() : "") << ','
                  << format_double(value.exact ? to_float(*value.exact, precision).value
                                               : value.approx)
                  << '\n';
      }
    } else {
      std::cout << item.label << ": n=" << g.order() << " m=" << g.size()
                << " Delta=" << g.max_degree() << " delta=" << g.min_degree() << " class=" << cls
                << '\n';
      for (const auto& [name, value] : values) {
        std::cout << "  " << std::left << std::setw(10) << name << value_text(value, precision)
                  << '\n';
      }
    }
  }
  if (opt.format == "json") std::cout << json.dump(2) << '\n';
  return kExitOk;
}

// linegraph ----------------------------------------------------------------

int cmd_linegraph(const Options& opt, int precision) {
  const std::vector<NamedGraph> graphs = load_inputs(opt.inputs);
  ordered_json json = ordered_json::array();
  bool failed = false;
  for (const NamedGraph& item : graphs) {
    const LineGraphResult result = line_graph(item.graph);
    const bool degrees_ok = verify_degree_identity(item.graph);
    const CheckReport identity = m1_line_identity(item.graph);
    failed = failed || !degrees_ok || !identity.holds;
    if (opt.format == "json") {
      ordered_json entry;
      entry["graph"] = item.label;
      entry["line_graph6"] = to_graph6(result.lg);
      entry["n_L"] = result.stats.order;
      entry["m_L"] = result.stats.size;
      entry["max_degree_L"] = result.stats.max_degree;
      entry["min_degree_L"] = result.stats.min_degree;
      ordered_json mapping = ordered_json::array();
      for (const auto& [e, a] : result.vertex_of_edge) mapping.push_back({e.u, e.v, a});
      entry["vertex_of_edge"] = mapping;
      entry["degree_identity"] = degrees_ok;
      entry["m1_identity"] = to_json(identity);
      entry["GA1_L"] = value_json(ga1(result.lg), precision);
      json.push_back(entry);
    } else if (opt.format == "csv") {
      if (&item == &graphs.front()) {
        std::cout << "graph,line_graph6,n_L,m_L,max_degree_L,min_degree_L,degree_identity,"
                     "m1_identity,GA1_L\n";
      }
      std::cout << csv_escape(item.label) << ',' << csv_escape(to_graph6(result.lg)) << ','
                << result.stats.order << ',' << result.stats.size << ','
                << result.stats.max_degree << ',' << result.stats.min_degree << ','
                << (degrees_ok ? "true" : "false") << ',' << (identity.holds ? "true" : "false")
                << ',' << csv_escape(ga1(result.lg).value().to_string()) << '\n';
    } else {
      std::cout << item.label << " -> " << to_graph6(result.lg) << "  (n_L=" << result.stats.order
                << " m_L=" << result.stats.size << " Delta_L=" << result.stats.max_degree
                << " delta_L=" << result.stats.min_degree << ")\n"
                << "  degree identity d_uv = d_u + d_v - 2: " << (degrees_ok ? "ok" : "FAILED")
                << "\n  M1(L) = 4m - 4M1 + 2M2 + F: " << identity.lhs.value().to_string() << " vs "
                << identity.rhs.value().to_string() << (identity.holds ? " ok" : " FAILED")
                << "\n  GA1(L) = " << value_text(ga1(result.lg), precision) << '\n';
    }
  }
  if (opt.format == "json") std::cout << json.dump(2) << '\n';
  return failed ? kExitViolation : kExitOk;
}

// check --------------------------------------------------------------------

std::string side_text(const CheckReport& r, const IndexValue& v, int precision) {
  if (!r.preconditions_met) return "-";
  return value_text(v, precision);
}

int cmd_check(const Options& opt, int precision) {
  const std::vector<double> alphas =
      opt.alphas.empty() ? std::vector<double>(std::begin(kDefaultAlphas), std::end(kDefaultAlphas))
                         : opt.alphas;
  const std::vector<NamedGraph> graphs = load_inputs(opt.inputs);
  ordered_json json = ordered_json::array();
  bool violated = false;
  if (opt.format == "csv") {
    std::cout << "graph,theorem_id,alpha,relation,preconditions_met,holds,equality,"
                 "predicted_equality,characterization_consistent,lhs,rhs,slack,decision,notes\n";
  }
  for (const NamedGraph& item : graphs) {
    const std::vector<CheckReport> reports = run_checks(item.graph, opt.theorems, alphas);
    for (const CheckReport& r : reports) violated = violated || r.violated();
    if (opt.format == "json") {
      ordered_json entry;
      entry["graph"] = item.label;
      ordered_json list = ordered_json::array();
      for (const CheckReport& r : reports) list.push_back(to_json(r));
      entry["reports"] = list;
      json.push_back(entry);
    } else if (opt.format == "csv") {
      auto flag = [](const std::optional<bool>& b) {
        return b ? std::string(*b ? "true" : "false") : std::string();
      };
      for (const CheckReport& r : reports) {
        std::cout << csv_escape(item.label) << ',' << r.theorem_id << ','
                  << (r.alpha ? format_double(*r.alpha) : "") << ','
                  << csv_escape(to_string(r.relation)) << ','
                  << (r.preconditions_met ? "true" : "false") << ','
                  << (r.holds ? "true" : "false") << ',' << (r.equality ? "true" : "false") << ','
                  << flag(r.predicted_equality) << ',' << flag(r.characterization_consistent)
                  << ','
                  << csv_escape(r.preconditions_met && r.lhs.exact ? r.lhs.exact->to_string()
                                                                    : format_double(r.lhs.approx))
                  << ','
                  << csv_escape(r.preconditions_met && r.rhs.exact ? r.rhs.exact->to_string()
                                                                    : format_double(r.rhs.approx))
                  << ',' << format_double(r.slack) << ',' << to_string(r.mode) << ','
                  << csv_escape(r.notes) << '\n';
      }
    } else {
      std::cout << item.label << '\n';
      for (const CheckReport& r : reports) {
        std::cout << "  " << std::left << std::setw(24)
                  << (r.alpha ? r.theorem_id + "@" + format_double(*r.alpha) : r.theorem_id);
        if (!r.preconditions_met) {
          std::cout << "n/a     " << r.notes << '\n';
          continue;
        }
        std::string verdict = r.holds ? (r.equality ? "EQUAL" : "holds") : "VIOLATED";
        if (r.mismatch()) verdict += " (characterization mismatch)";
        std::cout << std::setw(9) << verdict << side_text(r, r.lhs, precision) << ' '
                  << to_string(r.relation) << ' ' << side_text(r, r.rhs, precision);
        if (!r.notes.empty()) std::cout << "   [" << r.notes << ']';
        std::cout << '\n';
      }
    }
  }
  if (opt.format == "json") std::cout << json.dump(2) << '\n';
  return violated ? kExitViolation : kExitOk;
}

// sweep --------------------------------------------------------------------

int cmd_sweep(const Options& opt) {
  SweepConfig config;
  config.exhaustive_nmax = opt.nmax;
  config.random_trials = opt.trials;
  config.random_nmin = opt.random_nmin;
  config.random_nmax = opt.random_nmax;
  config.seed = opt.seed;
  config.theorems = opt.theorems;
  if (!opt.alphas.empty()) config.alphas = opt.alphas;
  config.threads = opt.threads;
  const SweepSummary summary = run_sweep(config);

  if (opt.format == "json") {
    ordered_json out;
    out["exhaustive_nmax"] = opt.nmax;
    out["exhaustive_graphs"] = summary.exhaustive_graphs;
    out["random_graphs"] = summary.random_graphs;
    out["seed"] = opt.seed;
    ordered_json rows = ordered_json::array();
    for (const TheoremTally& t : summary.tallies) {
      rows.push_back({{"id", t.id},
                      {"evaluated", t.evaluated},
                      {"skipped", t.skipped},
                      {"violations", t.violations},
                      {"equalities", t.equalities},
                      {"mismatches", t.mismatches},
                      {"float_decisions", t.float_decisions},
                      {"rechecks", t.rechecks},
                      {"witnesses", t.witnesses}});
    }
    out["tallies"] = rows;
    out["clean"] = summary.clean();
    std::cout << out.dump(2) << '\n';
  } else if (opt.format == "csv") {
    std::cout << "id,evaluated,skipped,violations,equalities,mismatches,float_decisions,rechecks\n";
    for (const TheoremTally& t : summary.tallies) {
      std::cout << t.id << ',' << t.evaluated << ',' << t.skipped << ',' << t.violations << ','
                << t.equalities << ',' << t.mismatches << ',' << t.float_decisions << ','
                << t.rechecks << '\n';
    }
  } else {
    std::cout << "graphs: " << summary.exhaustive_graphs << " exhaustive (n <= " << opt.nmax
              << "), " << summary.random_graphs << " random (seed " << opt.seed << ")\n";
    std::cout << std::left << std::setw(28) << "theorem" << std::right << std::setw(10)
              << "tested" << std::setw(10) << "skipped" << std::setw(11) << "violations"
              << std::setw(11) << "equalities" << std::setw(11) << "mismatches" << '\n';
    for (const TheoremTally& t : summary.tallies) {
      std::cout << std::left << std::setw(28) << t.id << std::right << std::setw(10)
                << t.evaluated << std::setw(10) << t.skipped << std::setw(11) << t.violations
                << std::setw(11) << t.equalities << std::setw(11) << t.mismatches << '\n';
      for (const std::string& w : t.witnesses) std::cout << "    witness: " << w << '\n';
    }
    std::cout << (summary.clean() ? "clean" : "FAILURES FOUND") << '\n';
  }
  return summary.clean() ? kExitOk : kExitViolation;
}

// extremal -----------------------------------------------------------------

int cmd_extremal(const Options& opt, int precision) {
  if (opt.objective != "min" && opt.objective != "max") {
    throw std::invalid_argument("--objective must be min or max");
  }
  const Objective objective = opt.objective == "min" ? Objective::kMin : Objective::kMax;
  const ExtremalResult result = extremal_search(opt.n, opt.m, objective, opt.nmax < opt.n ? opt.n : opt.nmax);
  const IndexValue value = IndexValue::from_exact(result.value);
  if (opt.format == "json") {
    ordered_json out;
    out["n"] = opt.n;
    out["m"] = opt.m;
    out["objective"] = opt.objective;
    out["GA1"] = value_json(value, precision);
    ordered_json list = ordered_json::array();
    for (const Graph& g : result.graphs) {
      list.push_back({{"graph6", to_graph6(g)}, {"name", display_name(g)}});
    }
    out["graphs"] = list;
    std::cout << out.dump(2) << '\n';
  } else if (opt.format == "csv") {
    std::cout << "n,m,objective,graph6,name,GA1\n";
    for (const Graph& g : result.graphs) {
      std::cout << opt.n << ',' << opt.m << ',' << opt.objective << ','
                << csv_escape(to_graph6(g)) << ',' << csv_escape(display_name(g)) << ','
                << csv_escape(result.value.to_string()) << '\n';
    }
  } else {
    std::cout << opt.objective << " GA1 over connected graphs with n=" << opt.n << ", m=" << opt.m
              << ": " << value_text(value, precision) << '\n';
    for (const Graph& g : result.graphs) {
      std::cout << "  " << to_graph6(g) << "  " << display_name(g) << '\n';
    }
  }
  return kExitOk;
}

// census -------------------------------------------------------------------

int cmd_census(const Options& opt, int precision) {
  const int limit = std::max(opt.nmax, kDefaultEnumerationLimit);
  std::ostringstream csv;
  csv << "canonical_form,name,n,m,GA1_exact,GA1_float\n";
  ordered_json json = ordered_json::array();
  for (int n = 1; n <= opt.nmax; ++n) {
    const std::vector<Graph> graphs = enumerate_connected(n, limit);
    if (!opt.out_dir.empty()) {
      fs::create_directories(opt.out_dir);
      std::ofstream g6(fs::path(opt.out_dir) / ("connected_n" + std::to_string(n) + ".g6"));
      for (const Graph& g : graphs) g6 << to_graph6(g) << '\n';
    }
    if (opt.format == "text") {
      std::cout << "n=" << n << ": " << graphs.size() << " connected graphs\n";
    }
    for (const Graph& g : graphs) {
      const std::string form = canonical_form(g).to_string();
      std::string exact;
      double approx = 0.0;
      if (g.size() > 0) {
        const RadicalNumber value = ga1(g).value();
        exact = value.to_string();
        approx = to_float(value, precision).value;
      }
      csv << form << ',' << csv_escape(display_name(g)) << ',' << g.order() << ',' << g.size()
          << ',' << csv_escape(exact) << ',' << (g.size() > 0 ? format_double(approx) : "")
          << '\n';
      if (opt.format == "json") {
        json.push_back({{"canonical_form", form},
                        {"graph6", to_graph6(g)},
                        {"name", display_name(g)},
                        {"n", g.order()},
                        {"m", g.size()},
                        {"GA1", g.size() > 0 ? ordered_json(exact) : ordered_json(nullptr)}});
      }
    }
  }
  if (!opt.out_dir.empty()) {
    std::ofstream(fs::path(opt.out_dir) / "census.csv") << csv.str();
  }
  if (opt.format == "csv") std::cout << csv.str();
  if (opt.format == "json") std::cout << json.dump(2) << '\n';
  return kExitOk;
}

void add_input(CLI::App* cmd, Options& opt) {
  cmd->add_option("-i,--input,graphs", opt.inputs,
                  "Graph file (graph6 or edge list), inline graph6, named graph "
                  "(P5, C4, S6, K4, K2,3, DS1,2, paw) or - for stdin");
}

void add_format(CLI::App* cmd, Options& opt) {
  cmd->add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Degree-based topological indices, line graphs and GA1 bound checks"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--precision", opt.precision,
                 "Bits for floating-point displays (default 53, or GAINDEX_PRECISION)")
      ->check(CLI::Range(32, 4096));

  CLI::App* compute = app.add_subcommand("compute", "Compute every index of each input graph");
  add_input(compute, opt);
  add_format(compute, opt);
  compute->add_option("--alpha", opt.alphas, "Extra exponents for M1^a, M2^a and chi_a")
      ->delimiter(',');

  CLI::App* linegraph = app.add_subcommand("linegraph", "Build L(G) and verify its identities");
  add_input(linegraph, opt);
  add_format(linegraph, opt);

  CLI::App* check = app.add_subcommand("check", "Run bound checkers on each input graph");
  add_input(check, opt);
  add_format(check, opt);
  check->add_option("--theorems", opt.theorems, "Checker ids or 'all'")->delimiter(',');
  check->add_option("--alpha", opt.alphas, "Exponents for the alpha-dependent bounds")
      ->delimiter(',');

  CLI::App* sweep = app.add_subcommand("sweep", "Exhaustive and random verification campaign");
  add_format(sweep, opt);
  sweep->add_option("--nmax", opt.nmax, "Exhaustive part over connected graphs up to this order");
  sweep->add_option("--trials", opt.trials, "Random connected graphs to test");
  sweep->add_option("--random-nmin", opt.random_nmin, "Smallest order of random graphs");
  sweep->add_option("--random-nmax", opt.random_nmax, "Largest order of random graphs");
  sweep->add_option("--seed", opt.seed, "Seed for the random part");
  sweep->add_option("--theorems", opt.theorems, "Checker ids or 'all'")->delimiter(',');
  sweep->add_option("--alpha", opt.alphas, "Exponents for the alpha-dependent bounds")
      ->delimiter(',');
  sweep->add_option("--threads", opt.threads, "Worker threads (0 = all cores)");

  CLI::App* extremal = app.add_subcommand("extremal", "Extremal GA1 over connected (n, m) graphs");
  add_format(extremal, opt);
  extremal->add_option("--n", opt.n, "Vertices")->required();
  extremal->add_option("--m", opt.m, "Edges")->required();
  extremal->add_option("--objective", opt.objective, "min or max")
      ->check(CLI::IsMember({"min", "max"}));
  extremal->add_option("--nmax", opt.nmax, "Enumeration limit (at most 8)");

  CLI::App* census = app.add_subcommand("census", "List connected graphs with their GA1 values");
  add_format(census, opt);
  census->add_option("--nmax", opt.nmax, "Largest order (default 7, at most 8)");
  census->add_option("--out-dir", opt.out_dir, "Also write one graph6 file per n and census.csv");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const int precision = resolve_precision(opt.precision);
  try {
    if (*compute) return cmd_compute(opt, precision);
    if (*linegraph) return cmd_linegraph(opt, precision);
    if (*check) return cmd_check(opt, precision);
    if (*sweep) return cmd_sweep(opt);
    if (*extremal) return cmd_extremal(opt, precision);
    if (*census) return cmd_census(opt, precision);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const StandingAssumptionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
