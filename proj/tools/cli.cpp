#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iomanip>
#include <optional>
#include <sstream>
#include <variant>

#include <CLI11.hpp>
#include <json.hpp>

#include "octal/closed_form.hpp"
#include "octal/engine.hpp"
#include "octal/families.hpp"
#include "octal/rules.hpp"
#include "octal/verification.hpp"

namespace octal::cli {

namespace {

using nlohmann::ordered_json;

// A closed form disagreeing with the engine.
class CrossCheckError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GraphOptions {
  std::string code;
  std::string graph;
  std::string graph_file;
  bool force_engine = false;
  bool skip_check = false;
  bool json = false;
  std::size_t cap = EvalCache::kDefaultCap;
};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

GraphSpec load_graph(const GraphOptions& o) {
  if (!o.graph_file.empty()) {
    std::ifstream in(o.graph_file);
    if (!in) throw SpecParseError("cannot read graph file '" + o.graph_file + "'", o.graph_file);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_graph_spec(trim(buf.str()));
  }
  return parse_graph_spec(o.graph);
}

std::optional<GrundyValue> closed_form(const GraphSpec& spec) {
  if (const auto* p = std::get_if<PathSpec>(&spec)) return c033::path_grundy(p->n);
  if (const auto* c = std::get_if<CycleSpec>(&spec)) return c033::cycle_grundy(c->n);
  if (const auto* s = std::get_if<StarSpec>(&spec)) return c033::star_grundy(*s);
  if (const auto* b = std::get_if<BistarSpec>(&spec)) return c033::bistar_grundy(*b);
  return std::nullopt;
}

struct Evaluation {
  GrundyValue value = 0;
  std::string method;
};

Evaluation evaluate(const GraphSpec& spec, const Graph& g, const OctalCode& code,
                    const GraphOptions& o, EvalCache& cache) {
  std::optional<GrundyValue> formula;
  if (!o.force_engine && code == OctalCode::parse("0.33")) formula = closed_form(spec);
  if (formula && o.skip_check) return {*formula, "closed-form"};
  const GrundyValue engine = grundy(g, code, cache);
  if (!formula) return {engine, "engine"};
  if (*formula != engine) {
    throw CrossCheckError("closed form gives " + std::to_string(*formula) + " but engine gives " +
                          std::to_string(engine) + " for " + to_string(spec));
  }
  return {engine, "closed-form+engine"};
}

std::string vertex_set(const VertexSet& xs) {
  std::string out = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(xs[i]);
  }
  return out + "}";
}

int cmd_value(const GraphOptions& o, bool with_value, std::ostream& out) {
  const auto code = OctalCode::parse(o.code);
  const auto spec = load_graph(o);
  const Graph g = realize(spec);
  EvalCache cache(code, o.cap);
  const auto ev = evaluate(spec, g, code, o, cache);
  const char* outcome = ev.value == 0 ? "P" : "N";
  if (o.json) {
    ordered_json doc;
    doc["graph"] = to_string(spec);
    doc["code"] = code.str();
    doc["vertices"] = g.vertex_count();
    if (with_value) doc["value"] = ev.value;
    doc["outcome"] = outcome;
    doc["method"] = ev.method;
    out << doc.dump(2) << '\n';
  } else {
    out << "graph: " << to_string(spec) << '\n' << "code: " << code.str() << '\n';
    if (with_value) out << "value: " << ev.value << '\n';
    out << "outcome: " << outcome << '\n' << "method: " << ev.method << '\n';
  }
  return kOk;
}

int cmd_moves(const GraphOptions& o, std::ostream& out) {
  const auto code = OctalCode::parse(o.code);
  const auto spec = load_graph(o);
  const Graph g = realize(spec);
  EvalCache cache(code, o.cap);
  const auto ev = evaluate(spec, g, code, o, cache);
  const auto moves = winning_moves(g, code, cache);
  if (o.json) {
    ordered_json doc;
    doc["graph"] = to_string(spec);
    doc["code"] = code.str();
    doc["value"] = ev.value;
    ordered_json list = ordered_json::array();
    for (const auto& m : moves) {
      list.push_back({{"removed", m.removed},
                      {"clause", to_string(m.clause)},
                      {"result", describe_position(remove_vertices(g, m.removed))}});
    }
    doc["winning_moves"] = std::move(list);
    out << doc.dump(2) << '\n';
    return kOk;
  }
  out << "graph: " << to_string(spec) << '\n' << "code: " << code.str() << '\n';
  out << "value: " << ev.value << '\n';
  if (moves.empty()) {
    out << "winning moves: none (P-position)\n";
    return kOk;
  }
  out << "winning moves:\n";
  for (const auto& m : moves) {
    out << "  remove " << vertex_set(m.removed) << " -> "
        << describe_position(remove_vertices(g, m.removed)) << '\n';
  }
  return kOk;
}

struct TableOptions {
  std::size_t rows = 6;
  std::optional<std::size_t> cols;
  std::string format = "text";
  bool json = false;
};

int cmd_star_table(const TableOptions& o, std::ostream& out) {
  std::vector<std::vector<GrundyValue>> grid(o.rows);
  for (std::size_t k = 0; k < o.rows; ++k) {
    const std::size_t width = std::min(k + 1, o.cols.value_or(k + 1));
    for (std::size_t j = 0; j < width; ++j) grid[k].push_back(c033::star_table_value(k, j));
  }
  if (o.json) {
    ordered_json doc;
    doc["rows"] = grid;
    out << doc.dump() << '\n';
  } else if (o.format == "csv") {
    out << "arms,twos,value\n";
    for (std::size_t k = 0; k < grid.size(); ++k) {
      for (std::size_t j = 0; j < grid[k].size(); ++j) {
        out << k << ',' << j << ',' << grid[k][j] << '\n';
      }
    }
  } else {
    const int w = static_cast<int>(std::to_string(o.rows).size());
    out << std::setw(w) << "k" << " |";
    const std::size_t span = grid.empty() ? 0 : grid.back().size();
    for (std::size_t j = 0; j < span; ++j) out << ' ' << std::setw(w) << j;
    out << '\n';
    for (std::size_t k = 0; k < grid.size(); ++k) {
      out << std::setw(w) << k << " |";
      for (GrundyValue v : grid[k]) out << ' ' << std::setw(w) << v;
      out << '\n';
    }
  }
  return kOk;
}

struct SequenceOptions {
  std::string code;
  std::size_t max = 30;
  bool detect = false;
  bool json = false;
};

int cmd_sequence(const SequenceOptions& o, std::ostream& out) {
  const auto code = OctalCode::parse(o.code);
  const auto seq = grundy_sequence(code, o.max);
  std::optional<Period> period;
  if (o.detect) period = detect_period(seq);
  if (o.json) {
    ordered_json doc;
    doc["code"] = code.str();
    doc["values"] = seq;
    if (o.detect) {
      doc["period"] = period ? ordered_json{{"preperiod", period->preperiod},
                                            {"period", period->period}}
                             : ordered_json(nullptr);
    }
    out << doc.dump() << '\n';
    return kOk;
  }
  out << "code: " << code.str() << '\n' << "values: ";
  for (std::size_t i = 0; i < seq.size(); ++i) out << (i ? "," : "") << seq[i];
  out << '\n';
  if (o.detect) {
    if (period) {
      out << "period: preperiod " << period->preperiod << ", period " << period->period << '\n';
    } else {
      out << "period: none detected\n";
    }
  }
  return kOk;
}

struct VerifyOptions {
  std::string suite;
  std::optional<std::size_t> max;
  std::size_t max_arms = 5;
  verify::BistarBounds bounds;
  std::vector<std::string> codes{"0.3", "0.33", "0.6", "0.07", "0.137"};
  std::size_t cap = EvalCache::kDefaultCap;
  bool json = false;
  bool timing = true;
};

void print_report(const verify::Report& r, bool json, bool timing, std::ostream& out) {
  if (json) {
    out << r.to_json(timing).dump(2) << '\n';
    return;
  }
  out << "suite: " << r.suite << '\n';
  out << "result: " << (r.passed() ? "pass" : "FAIL") << '\n';
  out << "cases: " << r.cases << '\n';
  out << "failures: " << r.failures.size() << '\n';
  for (const auto& f : r.failures) {
    out << "  " << f.input << ": expected " << f.expected << ", got " << f.actual << '\n';
  }
  out << "cache_entries: " << r.cache_entries << '\n';
  if (timing) out << "elapsed_ms: " << std::fixed << std::setprecision(1) << r.elapsed_ms << '\n';
  for (const auto& [key, value] : r.extras.items()) out << key << ": " << value.dump() << '\n';
}

int cmd_verify(const VerifyOptions& o, std::ostream& out) {
  verify::Report r;
  if (o.suite == "paths") {
    r = verify::paths_cycles(o.max.value_or(30));
  } else if (o.suite == "stars") {
    r = verify::star_table(o.max_arms);
  } else if (o.suite == "bistars") {
    r = verify::bistars(o.bounds);
  } else if (o.suite == "counterexample") {
    r = verify::counterexample();
  } else if (o.suite == "caterpillar") {
    r = verify::caterpillar(o.cap);
  } else {
    std::vector<OctalCode> codes;
    for (const auto& c : o.codes) codes.push_back(OctalCode::parse(c));
    r = verify::heap_path(codes, o.max.value_or(20));
  }
  print_report(r, o.json, o.timing, out);
  return r.passed() ? kOk : kVerificationFailed;
}

struct SearchOptions {
  std::size_t spine_max = 8;
  GrundyValue target = 3;
  verify::SearchLimits limits;
  bool json = false;
};

int cmd_search(const SearchOptions& o, std::ostream& out) {
  const auto result = verify::search_caterpillars(o.spine_max, o.target, o.limits);
  if (o.json) {
    out << verify::to_json(result).dump(2) << '\n';
    return kOk;
  }
  out << "examined: " << result.examined << (result.truncated ? " (truncated)" : "") << '\n';
  out << "max value: " << result.max_value << " at " << to_string(GraphSpec{result.max_witness})
      << '\n';
  out << "hits with value " << o.target << ": " << result.hits.size() << '\n';
  for (const auto& h : result.hits) out << "  " << to_string(GraphSpec{h.spec}) << '\n';
  for (const auto& s : result.skipped) {
    out << "skipped (cache cap): " << to_string(GraphSpec{s}) << '\n';
  }
  return kOk;
}

void add_graph_options(CLI::App* cmd, GraphOptions& o) {
  cmd->add_option("--code", o.code, "octal code, e.g. 0.33")->required();
  auto* graph = cmd->add_option("--graph", o.graph, "graph description");
  auto* file = cmd->add_option("--graph-file", o.graph_file, "file holding a graph description");
  graph->excludes(file);
  file->excludes(graph);
  cmd->add_flag("--force-engine", o.force_engine, "skip closed forms");
  cmd->add_flag("--skip-check", o.skip_check, "trust closed forms without the engine check");
  cmd->add_option("--cap", o.cap, "position cache cap")->check(CLI::PositiveNumber);
  cmd->add_flag("--json", o.json, "structured output");
  cmd->callback([cmd] {
    if (cmd->count("--graph") + cmd->count("--graph-file") == 0) {
      throw CLI::RequiredError("--graph or --graph-file");
    }
  });
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Octal games on graphs: exact values, closed forms and checks", "octalgraph"};
  app.require_subcommand(1);

  GraphOptions value_opts;
  GraphOptions outcome_opts;
  GraphOptions moves_opts;
  auto* grundy_cmd = app.add_subcommand("grundy", "Grundy value and outcome of a graph");
  add_graph_options(grundy_cmd, value_opts);
  auto* outcome_cmd = app.add_subcommand("outcome", "N/P outcome of a graph");
  add_graph_options(outcome_cmd, outcome_opts);
  auto* moves_cmd = app.add_subcommand("moves", "winning moves of a graph");
  add_graph_options(moves_cmd, moves_opts);

  TableOptions table_opts;
  auto* table_cmd = app.add_subcommand("star-table", "Grundy values of reduced 0.33 stars");
  table_cmd->add_option("--rows", table_opts.rows, "number of rows (arms 0..rows-1)")
      ->check(CLI::PositiveNumber);
  table_cmd->add_option("--cols", table_opts.cols, "clip columns to j < cols");
  table_cmd->add_option("--format", table_opts.format)->check(CLI::IsMember({"text", "csv"}));
  table_cmd->add_flag("--json", table_opts.json);

  SequenceOptions seq_opts;
  auto* seq_cmd = app.add_subcommand("sequence", "Grundy sequence of the heap game");
  seq_cmd->add_option("--code", seq_opts.code)->required();
  seq_cmd->add_option("--max", seq_opts.max, "largest heap");
  seq_cmd->add_flag("--detect-period", seq_opts.detect);
  seq_cmd->add_flag("--json", seq_opts.json);

  VerifyOptions verify_opts;
  bool verify_no_timing = false;
  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  verify_cmd->add_option("suite", verify_opts.suite)
      ->required()
      ->check(CLI::IsMember(
          {"paths", "stars", "bistars", "counterexample", "caterpillar", "heap-path"}));
  verify_cmd->add_option("--max", verify_opts.max, "largest n (paths, heap-path)");
  verify_cmd->add_option("--max-arms", verify_opts.max_arms, "stars: largest arm count")
      ->check(CLI::Range(3, 64));
  verify_cmd->add_option("--arms", verify_opts.bounds.max_arms, "bistars: arms per side");
  verify_cmd->add_option("--length", verify_opts.bounds.max_arm_length, "bistars: arm length");
  verify_cmd->add_option("--middle", verify_opts.bounds.max_middle, "bistars: middle edges");
  verify_cmd->add_option("--codes", verify_opts.codes, "heap-path: octal codes");
  verify_cmd->add_option("--cap", verify_opts.cap, "caterpillar: position cache cap")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_flag("--json", verify_opts.json);
  verify_cmd->add_flag("--no-timing", verify_no_timing, "omit wall time");

  SearchOptions search_opts;
  std::string search_kind;
  auto* search_cmd = app.add_subcommand("search", "search for graphs with a given value");
  search_cmd->add_option("kind", search_kind)->required()->check(CLI::IsMember({"caterpillars"}));
  search_cmd->add_option("--spine-max", search_opts.spine_max);
  search_cmd->add_option("--target", search_opts.target);
  search_cmd->add_option("--cap", search_opts.limits.cache_cap)->check(CLI::PositiveNumber);
  search_cmd->add_option("--max-instances", search_opts.limits.max_instances);
  search_cmd->add_flag("--json", search_opts.json);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*grundy_cmd) return cmd_value(value_opts, true, out);
    if (*outcome_cmd) return cmd_value(outcome_opts, false, out);
    if (*moves_cmd) return cmd_moves(moves_opts, out);
    if (*table_cmd) return cmd_star_table(table_opts, out);
    if (*seq_cmd) return cmd_sequence(seq_opts, out);
    if (*verify_cmd) {
      verify_opts.timing = !verify_no_timing;
      return cmd_verify(verify_opts, out);
    }
    return cmd_search(search_opts, out);
  } catch (const SpecParseError& e) {
    err << "error: " << e.what() << " (at '" << e.token() << "')\n";
    return kUsage;
  } catch (const CodeParseError& e) {
    err << "error: " << e.what() << " (at '" << e.token() << "')\n";
    return kUsage;
  } catch (const ResourceLimitError& e) {
    err << "error: " << e.what() << '\n';
    return kResourceLimit;
  } catch (const CrossCheckError& e) {
    err << "error: " << e.what() << '\n';
    return kVerificationFailed;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace octal::cli
