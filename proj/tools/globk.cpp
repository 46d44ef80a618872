// globk: check strict omega-structures, build their twisted versions and run
// the decalage and simplex demonstrations.
//
// Exit codes: 0 clean, 1 a law fails, 2 bad input.

#include "globk/globk.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

namespace {

using namespace globk;

struct RunConfig {
  std::string input;
  std::string output;
  std::string axioms = "l,r,f,li,ri";
  std::size_t max_width = 3;
  Dim max_dim = 3;
  int max_n = 4;
  std::string format = "text";
  std::size_t cap = 100;

  // fixture parameters
  std::string kind;
  std::string group = "z2";
  Dim level = 1;
  Dim truncation = 3;
  std::vector<std::string> set{"a", "b"};
  std::string left, right;

  // sum
  std::string table;
};

/// Single writer for report chunks. Text output is flushed chunk by chunk so
/// long sweeps show progress; JSON is emitted once at the end.
class ReportSink {
 public:
  explicit ReportSink(const RunConfig& cfg) : json_(cfg.format == "json") {
    if (!cfg.output.empty()) {
      file_ = std::make_unique<std::ofstream>(cfg.output);
      if (!*file_) fail(ErrorKind::ParseError, "cannot write '" + cfg.output + "'");
    }
  }

  std::ostream& out() { return file_ ? *file_ : std::cout; }

  void put(const Report& r) {
    total_.append(r);
    if (!json_) out() << r.to_text() << std::flush;
  }

  /// Free-form text, suppressed in JSON mode.
  void note(const std::string& line) {
    if (!json_) out() << line << "\n";
  }

  int finish() {
    if (json_) out() << to_json(total_).dump(2) << "\n";
    else out() << (total_.clean() ? "RESULT PASS" : "RESULT FAIL " + std::to_string(total_.failures()) + " failure(s)")
               << "\n";
    return total_.clean() ? 0 : 1;
  }

 private:
  bool json_;
  std::unique_ptr<std::ofstream> file_;
  Report total_;
};

OmegaStructure load(const std::string& path) { return omega_from_json(read_json_file(path)); }

int cmd_check(const RunConfig& cfg) {
  auto x = load(cfg.input);
  auto flags = AxiomFlags::parse(cfg.axioms);
  if (flags.needs_inverses() && !x.has_inverses())
    fail(ErrorKind::InversesAbsent, "flags '" + flags.to_string() + "' need inverse tables");
  ReportSink sink(cfg);
  CheckOptions opts{cfg.cap};
  sink.put(check_structure(x, opts));
  for (Axiom a : selected_axioms(flags)) sink.put(check_axiom_all(x, a, opts));
  return sink.finish();
}

int cmd_twist(const RunConfig& cfg) {
  if (cfg.output.empty()) fail(ErrorKind::ParseError, "twist needs -o");
  auto x = load(cfg.input);
  auto twisted = build_twisted(x);
  write_json_file(cfg.output, to_json(twisted));
  std::cout << "wrote " << cfg.output << " (truncation " << twisted.truncation() << ")\n";
  return 0;
}

int cmd_decalage(const RunConfig& cfg) {
  auto x = load(cfg.input);
  if (cfg.max_dim + 1 > x.truncation())
    fail(ErrorKind::DimOutOfRange, "--max-dim " + std::to_string(cfg.max_dim) + " needs truncation at least " +
                                       std::to_string(cfg.max_dim + 1) + ", file has " +
                                       std::to_string(x.truncation()));
  ReportSink sink(cfg);
  for (const auto& t : enumerate_tables(cfg.max_width, cfg.max_dim)) sink.put(check_section(x, t, cfg.cap));
  sink.put(check_alpha_naturality(x, cfg.cap));
  sink.put(check_beta_naturality(x, cfg.cap));
  sink.put(check_ks_kt(x, cfg.cap));
  if (auto d = find_splitting_defect(x))
    sink.note("NOTE r is not natural: at " + x.name(d->dim, d->cell) + " s~r gives " + render(x, d->via_twisted_source) +
              ", r s gives " + render(x, d->via_base_source));
  return sink.finish();
}

int cmd_delta(const RunConfig& cfg) {
  ReportSink sink(cfg);
  auto g = delta_generators();
  const std::pair<const char*, const SimplexMap*> rows[] = {
      {"nabla", &g.nabla},
      {"kappa", &g.kappa},
      {"omega", &g.omega},
      {"nabla~", &g.nabla_shifted},
      {"kappa~", &g.kappa_shifted},
      {"omega~", &g.omega_shifted},
  };
  for (const auto& [name, map] : rows) sink.note(std::string(name) + " " + map->to_string());
  Report gens;
  gens.record("DeltaShift", "nabla", delta_D(g.nabla) == g.nabla_shifted ? std::vector<std::string>{}
                                                                          : std::vector<std::string>{delta_D(g.nabla).to_string()});
  gens.record("DeltaShift", "kappa", delta_D(g.kappa) == g.kappa_shifted ? std::vector<std::string>{}
                                                                          : std::vector<std::string>{delta_D(g.kappa).to_string()});
  gens.record("DeltaShift", "omega", delta_D(g.omega) == g.omega_shifted ? std::vector<std::string>{}
                                                                          : std::vector<std::string>{delta_D(g.omega).to_string()});
  sink.put(gens);
  sink.put(check_delta_decalage(cfg.max_n, cfg.cap));
  return sink.finish();
}

int cmd_fixture(const RunConfig& cfg) {
  if (cfg.output.empty()) fail(ErrorKind::ParseError, "fixture needs -o");
  OmegaStructure x = [&] {
    if (cfg.kind == "discrete") return fixtures::discrete(cfg.set, cfg.truncation);
    if (cfg.kind == "delooping") return fixtures::delooping(named_group(cfg.group), cfg.truncation);
    if (cfg.kind == "suspension") return fixtures::suspension(named_group(cfg.group), cfg.level, cfg.truncation);
    if (cfg.kind == "product") {
      if (cfg.left.empty() || cfg.right.empty()) fail(ErrorKind::ParseError, "product needs --left and --right");
      return fixtures::product(load(cfg.left), load(cfg.right));
    }
    fail(ErrorKind::ParseError, "unknown fixture kind '" + cfg.kind + "'");
  }();
  write_json_file(cfg.output, to_json(x));
  std::cout << "wrote " << cfg.output << "\n";
  return 0;
}

int cmd_sum(const RunConfig& cfg) {
  auto x = load(cfg.input);
  auto t = parse_table(cfg.table);
  for (Dim d : t.outer())
    if (d > x.truncation()) fail(ErrorKind::DimOutOfRange, "table '" + t.to_string() + "' exceeds the truncation");
  auto tuples = globular_product(x.base(), t);
  std::cout << tuples.size() << " tuple(s) over '" << t.to_string() << "'\n";
  for (const auto& tuple : tuples) {
    std::string line;
    for (std::size_t k = 0; k < tuple.entries.size(); ++k)
      line += (k ? " " : "") + x.name(t.outer(k + 1), tuple.entries[k]);
    std::cout << "  " << line << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Checks and builds finite strict omega-structures"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_report_flags = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--cap", cfg.cap, "violations kept per check")->check(CLI::PositiveNumber);
    sub->add_option("-o,--output", cfg.output, "write the report here instead of stdout");
  };

  auto* check = app.add_subcommand("check", "boundary laws and axioms of a structure file");
  check->add_option("file", cfg.input)->required();
  check->add_option("--axioms", cfg.axioms, "subset of l,r,f,li,ri; Ass and Exc always run");
  add_report_flags(check);

  auto* twist = app.add_subcommand("twist", "write the twisted structure of a file");
  twist->add_option("file", cfg.input)->required();
  twist->add_option("-o,--output", cfg.output)->required();

  auto* decalage = app.add_subcommand("decalage", "section, naturality and unit identities");
  decalage->add_option("file", cfg.input)->required();
  decalage->add_option("--max-width", cfg.max_width)->check(CLI::PositiveNumber);
  decalage->add_option("--max-dim", cfg.max_dim)->check(CLI::PositiveNumber);
  add_report_flags(decalage);

  auto* delta = app.add_subcommand("delta", "generator tables and the simplex decalage sweep");
  delta->add_option("--max-n", cfg.max_n)->check(CLI::PositiveNumber);
  add_report_flags(delta);

  auto* fixture = app.add_subcommand("fixture", "write a built-in structure");
  fixture->add_option("kind", cfg.kind, "discrete, delooping, suspension or product")->required();
  fixture->add_option("--group", cfg.group, "zN, s3 or a product such as z2xz2");
  fixture->add_option("--dim", cfg.level, "dimension of the group cells (suspension)")->check(CLI::PositiveNumber);
  fixture->add_option("--trunc", cfg.truncation, "truncation")->check(CLI::NonNegativeNumber);
  fixture->add_option("--set", cfg.set, "cell names (discrete)")->delimiter(',');
  fixture->add_option("--left", cfg.left, "first factor file (product)");
  fixture->add_option("--right", cfg.right, "second factor file (product)");
  fixture->add_option("-o,--output", cfg.output)->required();

  auto* sum = app.add_subcommand("sum", "cardinality and tuples of a globular product");
  sum->add_option("table", cfg.table, "outer and inner dims interleaved, e.g. \"1 0 1\"")->required();
  sum->add_option("file", cfg.input)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*check) return cmd_check(cfg);
    if (*twist) return cmd_twist(cfg);
    if (*decalage) return cmd_decalage(cfg);
    if (*delta) return cmd_delta(cfg);
    if (*fixture) return cmd_fixture(cfg);
    if (*sum) return cmd_sum(cfg);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
