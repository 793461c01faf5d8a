#include "cli.hpp"

#include <CLI/CLI.hpp>
#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <nlohmann/json.hpp>
#include <optional>
#include <ostream>
#include <sstream>

#include "hardsq/apex_graph.hpp"
#include "hardsq/complex.hpp"
#include "hardsq/morse.hpp"
#include "hardsq/oracle.hpp"
#include "table.hpp"
#include "verify.hpp"

namespace hardsq::cli {

namespace {

std::string join(const std::vector<std::uint64_t>& v, const char* sep = " ") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
  return s;
}

std::string join_regimes(const std::vector<Regime>& labels, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < labels.size(); ++i) s += (i ? sep : "") + regime_name(labels[i]);
  return s;
}

struct Instance {
  int n = 0;
  int p = 1;
  int q = 1;
};

void add_instance(CLI::App* cmd, Instance& inst) {
  cmd->add_option("--n", inst.n, "Number of squares")->required();
  cmd->add_option("--p", inst.p, "Board columns")->required();
  cmd->add_option("--q", inst.q, "Board rows")->required();
}

MorseOptions morse_options(const RunConfig& cfg) {
  MorseOptions options;
  options.threads = cfg.threads;
  options.step_budget = cfg.step_budget;
  return options;
}

// Writes to `path`, or to `out` when the path is empty.
void emit(const std::string& path, std::ostream& out, const std::string& text) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::invalid_argument("cannot write " + path);
  file << text;
}

nlohmann::ordered_json pieces_json(const Arrangement& arr) {
  auto out = nlohmann::ordered_json::array();
  for (const auto& pc : arr.pieces())
    out.push_back({int(pc.col), int(pc.row), int(pc.extend_left), int(pc.extend_down)});
  return out;
}

Arrangement parse_apex(const std::string& text, int p, int q) {
  validate_instance(0, p, q);
  std::istringstream in(text);
  std::vector<Piece> pieces;
  std::string token;
  while (in >> token) {
    int col = 0, row = 0;
    char comma = 0;
    std::istringstream t(token);
    if (!(t >> col >> comma >> row) || comma != ',' || !t.eof())
      throw std::invalid_argument("apex corners are written col,row; got '" + token + "'");
    if (col < 1 || col > p || row < 1 || row > q)
      throw std::invalid_argument("corner " + token + " is off the board");
    pieces.push_back(make_piece(col, row));
  }
  if (pieces.size() > std::size_t(kMaxPieces)) throw std::invalid_argument("too many corners");
  Arrangement arr(Board{p, q}, pieces);
  if (!is_cell_of_x(arr)) throw std::invalid_argument("apex corners must be distinct");
  return arr;
}

int cmd_betti(const Instance& in, const std::string& field_name, const std::string& method,
              const RunConfig& cfg, std::ostream& out) {
  validate_instance(in.n, in.p, in.q);
  Field field = Field::parse(field_name);
  BettiVector bv;
  if (method == "direct") {
    bv = direct_betti(in.n, in.p, in.q, field, cfg.cell_cap);
  } else if (method == "restrict") {
    if (in.p > in.n || in.q > in.n)
      throw std::invalid_argument("--method restrict needs p, q <= n");
    auto source = build_morse_complex(in.n, in.n, in.n, morse_options(cfg));
    bv = betti(restrict_morse(source, in.p, in.q).chain_complex(), field);
  } else {
    bv = betti(build_morse_complex(in.n, in.p, in.q, morse_options(cfg)).chain_complex(), field);
  }
  out << join(bv.values) << "\n" << join_regimes(classify_regime(in.n, in.p, in.q, bv), " ") << "\n";
  return kOk;
}

int cmd_critical(const Instance& in, const std::string& dump, std::ostream& out) {
  validate_instance(in.n, in.p, in.q);
  auto critical = enumerate_critical(in.n, in.p, in.q);
  std::vector<std::uint64_t> counts;
  for (const auto& v : critical) counts.push_back(v.size());
  out << join(counts) << "\n";
  if (!dump.empty()) {
    nlohmann::ordered_json j;
    j["n"] = in.n;
    j["p"] = in.p;
    j["q"] = in.q;
    j["counts"] = counts;
    auto cells = nlohmann::ordered_json::array();
    for (std::size_t d = 0; d < critical.size(); ++d)
      for (const auto& c : critical[d]) cells.push_back({{"dim", d}, {"pieces", pieces_json(c)}});
    j["cells"] = std::move(cells);
    emit(dump, out, j.dump() + "\n");
  }
  return kOk;
}

int cmd_export(const Instance& in, const std::string& format, const std::string& path,
               const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  validate_instance(in.n, in.p, in.q);
  if (format == "vertex-list") {
    std::uint64_t vertices = 0;
    try {
      vertices = vertex_count(in.n, in.p, in.q);
    } catch (const std::overflow_error&) {
      vertices = UINT64_MAX;
    }
    if (vertices > cfg.vertex_cap) {
      err << "vertex count " << vertices << " exceeds the vertex cap " << cfg.vertex_cap << "\n";
      return kCapExceeded;
    }
    std::string text;
    for_each_apex(in.n, in.p, in.q, [&](const Arrangement& a) {
      for (int k = 0; k < a.size(); ++k) {
        if (k) text += ' ';
        text += std::to_string(a[k].col) + ' ' + std::to_string(a[k].row);
      }
      text += '\n';
      return true;
    });
    emit(path, out, text);
  } else if (format == "complex-json") {
    std::uint64_t vertices = 0;
    try {
      vertices = vertex_count(in.n, in.p, in.q);
    } catch (const std::overflow_error&) {
      vertices = UINT64_MAX;
    }
    std::uint64_t total = vertices;
    if (vertices <= cfg.cell_cap) {
      total = 0;
      for (auto c : f_vector(in.n, in.p, in.q).counts) total += c;
    }
    if (total > cfg.cell_cap) {
      err << "complex has at least " << total << " cells, above the cell cap " << cfg.cell_cap << "\n";
      return kCapExceeded;
    }
    emit(path, out, complex_json(in.n, in.p, in.q) + "\n");
  } else {
    emit(path, out, build_morse_complex(in.n, in.p, in.q, morse_options(cfg)).to_json() + "\n");
  }
  return kOk;
}

int cmd_verify(const Instance& in, bool deep, const RunConfig& cfg, std::ostream& out) {
  VerifyReport report = run_verify(in.n, in.p, in.q, deep, cfg);
  for (const auto& c : report.checks) {
    out << (c.passed ? "PASS " : "FAIL ") << c.name;
    if (!c.passed) out << ": " << c.detail;
    out << "\n";
  }
  for (const auto& note : report.notes) out << "note: " << note << "\n";
  out << (report.ok() ? "verify: pass" : "verify: FAIL") << "\n";
  return report.ok() ? kOk : kFailure;
}

int cmd_table(int max_n, const std::vector<std::string>& field_names, const std::string& path,
              const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (max_n < 2) {
    err << "warning: --max-n " << max_n << " is below 2, the table is empty\n";
    return kOk;
  }
  validate_instance(max_n, 1, 1);
  std::vector<Field> fields;
  for (const auto& name : field_names) fields.push_back(Field::parse(name));
  if (fields.empty()) fields.push_back(Field::gf2());
  BettiTable table = compute_table(max_n, fields, morse_options(cfg));
  for (const auto& w : table_disagreements(table)) err << "warning: " << w << "\n";
  emit(path, out, table_csv(table));
  return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            const EnvLookup& env_lookup) {
  EnvLookup env = env_lookup ? env_lookup : EnvLookup([](const char* k) { return std::getenv(k); });

  CLI::App app{"Homology of configuration spaces of labeled unit squares in a rectangle", "hardsq"};
  app.require_subcommand(1);
  app.fallthrough();

  std::optional<int> threads;
  std::optional<std::uint64_t> cell_cap, vertex_cap, step_budget;
  std::string config_path;
  app.add_option("--threads", threads, "Worker threads (0 = all hardware threads)");
  app.add_option("--config", config_path, "JSON config file")->check(CLI::ExistingFile);
  app.add_option("--cell-cap", cell_cap, "Largest complex enumerated in full");
  app.add_option("--vertex-cap", vertex_cap, "Largest vertex list exported");
  app.add_option("--step-budget", step_budget, "Gradient flow steps allowed per critical cell");

  Instance inst;
  std::string field = "gf2", method = "morse", dump, format, out_path, apex;
  bool deep = false;
  int max_n = 0;
  std::vector<std::string> fields;

  auto* betti_cmd = app.add_subcommand("betti", "Betti numbers and regime labels");
  add_instance(betti_cmd, inst);
  betti_cmd->add_option("--field", field, "gf2, gf<p> or rational");
  betti_cmd->add_option("--method", method, "morse, direct or restrict")
      ->check(CLI::IsMember({"morse", "direct", "restrict"}));

  auto* fvector_cmd = app.add_subcommand("fvector", "Cell counts by dimension");
  add_instance(fvector_cmd, inst);

  auto* critical_cmd = app.add_subcommand("critical", "Critical cell counts by dimension");
  add_instance(critical_cmd, inst);
  critical_cmd->add_option("--dump", dump, "Write the critical cells as JSON");

  auto* table_cmd = app.add_subcommand("table", "Betti table for 2 <= p <= q <= n <= max-n, pq >= n");
  table_cmd->add_option("--max-n", max_n, "Largest n")->required();
  table_cmd->add_option("--fields", fields, "Fields to compute over (default gf2)");
  table_cmd->add_option("--out", out_path, "CSV file (default stdout)");

  auto* export_cmd = app.add_subcommand("export", "Vertex list, complex or Morse complex");
  add_instance(export_cmd, inst);
  export_cmd->add_option("--format", format, "vertex-list, complex-json or morse-json")
      ->required()
      ->check(CLI::IsMember({"vertex-list", "complex-json", "morse-json"}));
  export_cmd->add_option("--out", out_path, "Output file (default stdout)");

  auto* verify_cmd = app.add_subcommand("verify", "Run invariant checks on one instance");
  add_instance(verify_cmd, inst);
  verify_cmd->add_flag("--deep", deep, "Also check acyclicity and direct homology");

  auto* inspect_cmd = app.add_subcommand("inspect", "Apex graph of one apex as JSON");
  inspect_cmd->add_option("--p", inst.p, "Board columns")->required();
  inspect_cmd->add_option("--q", inst.q, "Board rows")->required();
  inspect_cmd->add_option("--apex", apex, "Corners as \"col,row col,row ...\"")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalidArguments;
  }

  try {
    RunConfig cfg;
    if (!config_path.empty()) load_config_file(cfg, config_path);
    apply_environment(cfg, env);
    if (threads) cfg.threads = *threads;
    if (cell_cap) cfg.cell_cap = *cell_cap;
    if (vertex_cap) cfg.vertex_cap = *vertex_cap;
    if (step_budget) cfg.step_budget = *step_budget;
    if (cfg.threads < 0) throw std::invalid_argument("--threads must be non-negative");

    if (*betti_cmd) return cmd_betti(inst, field, method, cfg, out);
    if (*fvector_cmd) {
      validate_instance(inst.n, inst.p, inst.q);
      out << join(f_vector(inst.n, inst.p, inst.q).counts) << "\n";
      return kOk;
    }
    if (*critical_cmd) return cmd_critical(inst, dump, out);
    if (*table_cmd) return cmd_table(max_n, fields, out_path, cfg, out, err);
    if (*export_cmd) return cmd_export(inst, format, out_path, cfg, out, err);
    if (*verify_cmd) return cmd_verify(inst, deep, cfg, out);
    if (*inspect_cmd) {
      out << apex_graph_json(ApexGraph::build(parse_apex(apex, inst.p, inst.q))) << "\n";
      return kOk;
    }
  } catch (const CellCapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kCapExceeded;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidArguments;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kInvalidArguments;
}

}  // namespace hardsq::cli
