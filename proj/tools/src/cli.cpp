#include "avgindep/cli.hpp"

#include <algorithm>
#include <functional>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "avgindep/errors.hpp"
#include "avgindep/extremal.hpp"
#include "avgindep/graph_io.hpp"
#include "avgindep/independence.hpp"
#include "avgindep/path_analysis.hpp"
#include "avgindep/tree_enum.hpp"
#include "json.hpp"

namespace avgindep::cli {

namespace {

using nlohmann::ordered_json;

struct Context {
  std::ostream& out;
  bool color = false;
  bool json = false;
  unsigned jobs = 1;
};

ordered_json edges_json(const Graph& g) {
  ordered_json edges = ordered_json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  return edges;
}

std::string edges_text(const Graph& g) {
  std::string s;
  for (const auto& [u, v] : g.edges()) {
    if (!s.empty()) s += ' ';
    s += std::to_string(u) + "-" + std::to_string(v);
  }
  return s.empty() ? "(no edges)" : s;
}

void print_table(std::ostream& out, const std::vector<std::string>& columns,
                 const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    width[c] = columns[c].size();
    for (const auto& r : rows) width[c] = std::max(width[c], r[c].size());
  }
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t c = 0; c < cells.size(); ++c) {
      out << cells[c];
      if (c + 1 < cells.size()) out << std::string(width[c] - cells[c].size() + 2, ' ');
    }
    out << '\n';
  };
  line(columns);
  for (const auto& r : rows) line(r);
}

int emit(const Context& ctx, const VerificationReport& report) {
  if (ctx.json)
    ctx.out << to_json(report) << '\n';
  else
    ctx.out << to_text(report, ctx.color);
  return report.verified() ? kExitOk : kExitCounterexample;
}

Rational parse_alpha(const std::string& text) {
  Rational alpha = Rational::parse(text);
  if (alpha.sign() <= 0) throw DomainError("--alpha must be positive, got " + text);
  return alpha;
}

int cmd_poly(const Context& ctx, const std::string& spec) {
  const Graph g = parse_graph_spec(spec);
  const IndependencePoly p = indep_poly(g);
  if (ctx.json) {
    ordered_json doc;
    doc["graph"] = spec;
    ordered_json coeffs = ordered_json::array();
    for (const auto& c : p.coeffs()) coeffs.push_back(c.get_str());
    doc["coefficients"] = std::move(coeffs);
    doc["I"] = p.count().get_str();
    doc["T"] = p.total().get_str();
    ctx.out << doc.dump(2) << '\n';
  } else {
    ctx.out << p.str() << '\n';
  }
  return kExitOk;
}

int cmd_avg(const Context& ctx, const std::string& spec, const std::string& alpha_text) {
  const Graph g = parse_graph_spec(spec);
  std::string count, total, avg;
  if (alpha_text.empty()) {
    const auto s = summary(g);
    count = s.count.get_str();
    total = s.total.get_str();
    avg = s.avg.str();
  } else {
    const auto s = weighted_summary(g, parse_alpha(alpha_text));
    count = s.count.str();
    total = s.total.str();
    avg = s.avg.str();
  }
  if (ctx.json) {
    ordered_json doc;
    doc["graph"] = spec;
    if (!alpha_text.empty()) doc["alpha"] = Rational::parse(alpha_text).str();
    doc["I"] = count;
    doc["T"] = total;
    doc["avg"] = avg;
    ctx.out << doc.dump(2) << '\n';
  } else {
    ctx.out << avg << '\n';
  }
  return kExitOk;
}

int cmd_vertex_scan(const Context& ctx, const std::string& spec) {
  const Graph g = parse_graph_spec(spec);
  std::vector<VertexScanRow> rows;
  try {
    rows = vertex_scan(g);
  } catch (const std::logic_error& e) {
    if (dynamic_cast<const std::invalid_argument*>(&e)) throw;
    ctx.out << "counterexample: " << e.what() << " (" << edges_text(g) << ")\n";
    return kExitCounterexample;
  }
  if (ctx.json) {
    ordered_json doc;
    doc["graph"] = spec;
    doc["avi"] = rows.front().before.str();
    ordered_json list = ordered_json::array();
    for (const auto& r : rows)
      list.push_back({{"vertex", r.vertex}, {"after", r.after.str()},
                      {"direction", to_string(r.direction)}});
    doc["rows"] = std::move(list);
    ctx.out << doc.dump(2) << '\n';
    return kExitOk;
  }
  ctx.out << "avi = " << rows.front().before.str() << '\n';
  std::vector<std::vector<std::string>> table;
  for (const auto& r : rows)
    table.push_back({std::to_string(r.vertex), r.after.str(), to_string(r.direction)});
  print_table(ctx.out, {"vertex", "avi_after", "direction"}, table);
  return kExitOk;
}

int cmd_edge_scan(const Context& ctx, const std::string& spec) {
  const Graph g = parse_graph_spec(spec);
  const auto rows = edge_scan(g);
  if (ctx.json) {
    ordered_json doc;
    doc["graph"] = spec;
    doc["avi"] = rows.front().before.str();
    ordered_json list = ordered_json::array();
    for (const auto& r : rows)
      list.push_back({{"edge", {r.edge.first, r.edge.second}},
                      {"after", r.after.str()},
                      {"direction", to_string(r.direction)}});
    doc["rows"] = std::move(list);
    ctx.out << doc.dump(2) << '\n';
    return kExitOk;
  }
  ctx.out << "avi = " << rows.front().before.str() << '\n';
  std::vector<std::vector<std::string>> table;
  for (const auto& r : rows)
    table.push_back({std::to_string(r.edge.first) + "-" + std::to_string(r.edge.second),
                     r.after.str(), to_string(r.direction)});
  print_table(ctx.out, {"edge", "avi_after", "direction"}, table);
  return kExitOk;
}

using Sweep = VerificationReport (*)(int, unsigned);

int cmd_sweep(const Context& ctx, const std::string& claim, Sweep fn, int min_n, int max_n) {
  if (min_n > max_n)
    throw RangeError("--min-n " + std::to_string(min_n) + " exceeds --max-n " +
                     std::to_string(max_n));
  std::vector<VerificationReport> parts;
  for (int n = min_n; n <= max_n; ++n) parts.push_back(fn(n, ctx.jobs));
  const std::string range = "n=" + std::to_string(min_n) + ".." + std::to_string(max_n);
  return emit(ctx, merge_reports(claim, range, parts));
}

int cmd_trees(const Context& ctx, int n, bool count_only) {
  const FreeTrees trees(n);
  if (count_only) {
    std::uint64_t count = 0;
    for (auto it = trees.begin(); it != trees.end(); ++it) ++count;
    if (ctx.json)
      ctx.out << ordered_json{{"n", n}, {"count", count}}.dump(2) << '\n';
    else
      ctx.out << count << '\n';
    return kExitOk;
  }
  if (ctx.json) {
    ordered_json list = ordered_json::array();
    for (const Graph& t : trees) list.push_back(edges_json(t));
    ctx.out << ordered_json{{"n", n}, {"count", list.size()}, {"trees", list}}.dump(2) << '\n';
  } else {
    for (const Graph& t : trees) ctx.out << edges_text(t) << '\n';
  }
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err, bool color) {
  CLI::App app{"Exact average independent-set size toolkit", "avgindep"};
  app.require_subcommand(1);
  app.fallthrough();

  bool json = false;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  app.add_flag("--json", json, "Machine-readable output with exact values as strings");
  app.add_option("--jobs", jobs, "Maximum worker threads")->check(CLI::PositiveNumber);

  std::function<int(const Context&)> action;
  auto add_graph_cmd = [&](const char* name, const char* help, auto fn) {
    auto* sub = app.add_subcommand(name, help);
    auto spec = std::make_shared<std::string>();
    sub->add_option("--graph", *spec, "path:N, star:N, complete:N, empty:N or file:PATH")
        ->required();
    sub->callback([&action, spec, fn] { action = [spec, fn](const Context& c) { return fn(c, *spec); }; });
    return std::make_pair(sub, spec);
  };

  add_graph_cmd("poly", "Independence polynomial coefficients", cmd_poly);
  add_graph_cmd("vertex-scan", "avi after each single-vertex removal", cmd_vertex_scan);
  add_graph_cmd("edge-scan", "avi after each single-edge removal", cmd_edge_scan);

  auto* avg = app.add_subcommand("avg", "Average independent-set size");
  std::string avg_graph, avg_alpha;
  avg->add_option("--graph", avg_graph, "Graph spec")->required();
  avg->add_option("--alpha", avg_alpha, "Fugacity p/q for the hard-core mean");
  avg->callback([&] { action = [&](const Context& c) { return cmd_avg(c, avg_graph, avg_alpha); }; });

  auto* verify = app.add_subcommand("verify", "Exhaustive and exact verifications");
  verify->require_subcommand(1);
  verify->fallthrough();

  struct SweepCmd {
    const char* name;
    const char* help;
    Sweep fn;
    int default_max;
  };
  const std::vector<SweepCmd> sweeps = {
      {"bounds", "n/(n+1) < avi(G) < n/2 over labelled graphs", verify_bounds, 6},
      {"vertex-removal", "Some vertex removal lowers avi, labelled graphs", verify_vertex_removal, 6},
      {"star-max", "The star maximises avi among trees", verify_star_max, 14},
      {"path-min", "The path minimises avi; a n + b lower bound", verify_path_min, 14},
      {"quotient", "1/2 <= I(T-v)/I(T) < 1 on trees", verify_quotient, 12},
  };
  std::vector<std::pair<int, int>> sweep_ranges(sweeps.size());
  for (std::size_t i = 0; i < sweeps.size(); ++i) {
    auto* sub = verify->add_subcommand(sweeps[i].name, sweeps[i].help);
    auto& [lo, hi] = sweep_ranges[i];
    lo = 1;
    hi = sweeps[i].default_max;
    sub->add_option("--max-n", hi, "Largest order checked")->capture_default_str();
    sub->add_option("--min-n", lo, "Smallest order checked")->capture_default_str();
    sub->callback([&, i] {
      action = [&, i](const Context& c) {
        return cmd_sweep(c, sweeps[i].name, sweeps[i].fn, sweep_ranges[i].first,
                         sweep_ranges[i].second);
      };
    });
  }

  verify->add_subcommand("cases", "All 105 branch-profile cases of the path bound")
      ->callback([&] { action = [](const Context& c) { return emit(c, verify_branch_cases()); }; });
  verify->add_subcommand("aux", "Scalar inequalities behind the path bound")
      ->callback([&] { action = [](const Context& c) { return emit(c, verify_auxiliary_inequalities()); }; });
  int formula_max = 200;
  auto* formula = verify->add_subcommand("path-formula", "Closed form of avi(P_n) and its error term");
  formula->add_option("--max-n", formula_max, "Largest n checked")->capture_default_str();
  formula->callback([&] { action = [&](const Context& c) { return emit(c, verify_error_term(formula_max)); }; });

  int ctable_max = 20;
  auto* ctable = app.add_subcommand("ctable", "Table of c_n = avi(P_n) - a n");
  ctable->add_option("--max-n", ctable_max, "Largest n")->capture_default_str();
  ctable->callback([&] { action = [&](const Context& c) { return emit(c, offset_table(ctable_max)); }; });

  int trees_n = 0;
  bool count_only = false;
  auto* trees = app.add_subcommand("trees", "Enumerate free trees");
  trees->add_option("--n", trees_n, "Number of vertices")->required();
  trees->add_flag("--count-only", count_only, "Print only the number of trees");
  trees->callback([&] { action = [&](const Context& c) { return cmd_trees(c, trees_n, count_only); }; });

  int scan_n = 0;
  std::string scan_alpha;
  auto* wscan = app.add_subcommand("weighted-scan", "Is the path the avi^alpha minimiser among trees?");
  wscan->add_option("--n", scan_n, "Number of vertices")->required();
  wscan->add_option("--alpha", scan_alpha, "Fugacity p/q")->required();
  wscan->callback([&] {
    action = [&](const Context& c) {
      return emit(c, weighted_extremal_scan(scan_n, parse_alpha(scan_alpha), c.jobs));
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const Context ctx{out, color, json, jobs};
  try {
    return action(ctx);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const RangeError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const CapacityError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitUsage;
}

}  // namespace avgindep::cli
