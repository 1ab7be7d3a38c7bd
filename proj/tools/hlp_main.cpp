#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "hlp/report.hpp"

namespace {

constexpr int kExitHolds = 0;
constexpr int kExitFails = 10;
constexpr int kExitInvalidInput = 2;
constexpr int kExitInconsistent = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write '" + path + "'");
  out << content;
}

// "e[2]=-2..2" -> SweepVar{2, -2, 2}
hlp::SweepVar parse_sweep_var(const std::string& text) {
  const std::string usage = "sweep variable must look like e[2]=-2..2";
  if (text.rfind("e[", 0) != 0) throw std::invalid_argument(usage);
  std::size_t close = text.find(']');
  std::size_t eq = text.find('=', close == std::string::npos ? 0 : close);
  if (close == std::string::npos || eq == std::string::npos)
    throw std::invalid_argument(usage);
  std::string range = text.substr(eq + 1);
  std::size_t dots = range.find("..", 1);  // skip a leading minus sign
  if (dots == std::string::npos) throw std::invalid_argument(usage);
  hlp::SweepVar var;
  try {
    var.index = std::stoul(text.substr(2, close - 2));
    var.lo = std::stol(range.substr(0, dots));
    var.hi = std::stol(range.substr(dots + 2));
  } catch (const std::exception&) {
    throw std::invalid_argument(usage);
  }
  return var;
}

hlp::ModelSpec load_spec(const std::string& file, const std::string& example) {
  if (!example.empty()) return hlp::fixture_spec(example);
  return hlp::parse_model_spec(read_file(file));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact hard Lefschetz verdicts for simple Hamiltonian "
               "S^1 six-manifolds built from a 4-manifold and a class e"};
  app.require_subcommand(1);

  std::string run_file, run_example, run_json;
  bool run_quiet = false;
  CLI::App* run = app.add_subcommand("run", "evaluate one model");
  run->add_option("file", run_file, "model description (JSON)");
  run->add_option("--example", run_example,
                  "named fixture: t4, k3 or trivial-e0");
  run->add_option("--json", run_json, "write the machine-readable report here");
  run->add_flag("--quiet", run_quiet, "suppress the text report");

  std::string sweep_file, sweep_json;
  std::vector<std::string> sweep_vars;
  bool sweep_quiet = false;
  CLI::App* sweep = app.add_subcommand(
      "sweep", "evaluate a template over integral e-coordinate ranges");
  sweep->add_option("file", sweep_file, "model description (JSON)")->required();
  sweep->add_option("--var", sweep_vars, "range, e.g. e[2]=-2..2");
  sweep->add_option("--json", sweep_json,
                    "write the machine-readable table here");
  sweep->add_flag("--quiet", sweep_quiet, "suppress the text table");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) {
      if (run_file.empty() == run_example.empty()) {
        std::cerr << "run needs exactly one of <file> or --example\n";
        return kExitInvalidInput;
      }
      hlp::ModelSpec spec = load_spec(run_file, run_example);
      hlp::RunReport report = hlp::run_model(spec);
      if (!run_json.empty()) write_file(run_json, hlp::emit_json(report));
      if (!run_quiet) std::cout << hlp::render_text(report);
      return report.hlp.verdict ? kExitHolds : kExitFails;
    }

    std::vector<hlp::SweepVar> vars;
    vars.reserve(sweep_vars.size());
    for (const std::string& v : sweep_vars) vars.push_back(parse_sweep_var(v));
    hlp::ModelSpec spec = load_spec(sweep_file, "");
    hlp::SweepReport table = hlp::sweep_model(spec, vars);
    if (table.rows.empty())
      std::cerr << "warning: empty sweep range, empty table\n";
    if (!sweep_json.empty()) write_file(sweep_json, hlp::emit_sweep_json(table));
    if (!sweep_quiet) std::cout << hlp::render_sweep_text(table);
    return kExitHolds;
  } catch (const hlp::InternalInconsistencyError& ex) {
    std::cerr << "internal inconsistency: " << ex.what() << "\n";
    return kExitInconsistent;
  } catch (const hlp::BuildError& ex) {
    std::cerr << "invalid input: " << ex.what() << "\n";
    return kExitInvalidInput;
  } catch (const std::invalid_argument& ex) {
    std::cerr << "invalid input: " << ex.what() << "\n";
    return kExitInvalidInput;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitInvalidInput;
  }
}
