// loglocal: exact genus-0 log and local Gromov-Witten invariants of products
// of fake weighted projective spaces, and the correspondence between them.
//
// Exit status: 0 all comparisons pass, 1 mathematical mismatch or internal
// consistency failure, 2 input or configuration error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "loglocal/fleet.hpp"
#include "loglocal/geometry_json.hpp"
#include "loglocal/givental.hpp"
#include "loglocal/verify.hpp"

namespace {

using namespace loglocal;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitInput = 2;

std::vector<Int> parse_dmax(const std::string& text, int factors) {
  std::vector<Int> out;
  std::stringstream ss(text);
  std::string piece;
  while (std::getline(ss, piece, ',')) {
    if (piece.empty()) throw InputError("dmax: empty component in \"" + text + "\"");
    try {
      out.emplace_back(piece);
    } catch (const std::invalid_argument&) {
      throw InputError("dmax: not an integer: \"" + piece + "\"");
    }
  }
  if (out.empty()) throw InputError("dmax: empty value");
  if (out.size() == 1 && factors > 1) out.assign(factors, out[0]);
  if (static_cast<int>(out.size()) != factors)
    throw InputError("dmax: expected 1 or " + std::to_string(factors) +
                     " comma-separated bounds");
  for (const Int& m : out)
    if (m < 1) throw InputError("dmax: bounds must be >= 1");
  return out;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << "\n";
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw InputError("cannot open output file: " + out_path);
  out << text;
  if (!text.empty() && text.back() != '\n') out << "\n";
}

NefToricProduct load_validated(const std::string& path) {
  NefToricProduct x = geometry_from_json_file(path);
  ValidationReport report = validate(x);
  if (!report.ok())
    throw InputError("geometry: invalid:\n" + report.to_string());
  return x;
}

int run_table(TableKind kind, const std::string& geometry_path,
              const std::string& dmax_text, const std::string& format,
              const std::string& out_path) {
  NefToricProduct x = load_validated(geometry_path);
  std::vector<Int> dmax = parse_dmax(dmax_text, x.num_factors());
  std::vector<DegreeReport> reports = sweep(x, dmax);
  emit(format == "csv" ? table_to_csv(kind, reports)
                       : table_to_json(kind, reports, dmax),
       out_path);
  if (kind == TableKind::Verify && count_failures(reports) > 0) return kExitMismatch;
  return kExitOk;
}

int run_describe(const std::string& geometry_path, const std::string& out_path) {
  NefToricProduct x = geometry_from_json_file(geometry_path);
  ValidationReport report = validate(x);
  emit(describe_geometry_json(x, report), out_path);
  return report.ok() ? kExitOk : kExitInput;
}

int run_selftest() {
  bool all_ok = true;
  for (const auto& [name, x] : standard_fleet()) {
    std::vector<Int> dmax(x.num_factors(), Int(4));
    std::vector<DegreeReport> reports = sweep(x, dmax);
    int failures = count_failures(reports);
    MirrorMapReport mirror = mirror_map_check(x, dmax);
    bool ok = failures == 0 && mirror.pass;
    all_ok = all_ok && ok;
    std::cout << (ok ? "ok   " : "FAIL ") << name << ": " << reports.size()
              << " degrees verified";
    if (failures > 0) std::cout << ", " << failures << " mismatches";
    if (!mirror.pass) std::cout << ", mirror map not trivial";
    std::cout << "\n";
  }
  std::cout << (all_ok ? "selftest passed" : "selftest FAILED") << "\n";
  return all_ok ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact log and local Gromov-Witten invariants of products of fake "
      "weighted projective spaces"};
  app.require_subcommand(1);

  std::string geometry_path;
  std::string dmax_text;
  std::string format = "json";
  std::string out_path;

  auto add_common = [&](CLI::App* cmd, bool needs_dmax) {
    cmd->add_option("--geometry", geometry_path, "geometry config (JSON)")
        ->required();
    if (needs_dmax)
      cmd->add_option("--dmax", dmax_text,
                      "degree bound: one integer, or one per factor (comma-separated)")
          ->required();
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--out", out_path, "output file (default: stdout)");
  };

  CLI::App* describe = app.add_subcommand(
      "describe", "dimensions, divisor order, torus weights, validation");
  add_common(describe, false);
  CLI::App* log_cmd = app.add_subcommand(
      "log", "log invariants per degree (tropical multiplicities)");
  add_common(log_cmd, true);
  CLI::App* local_cmd = app.add_subcommand(
      "local", "local invariants per degree (series extraction)");
  add_common(local_cmd, true);
  CLI::App* verify_cmd = app.add_subcommand(
      "verify", "both sides, closed forms, and the correspondence per degree");
  add_common(verify_cmd, true);
  app.add_subcommand("selftest", "run the built-in geometry fleet with dmax 4");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitInput;
  }

  try {
    if (describe->parsed()) return run_describe(geometry_path, out_path);
    if (log_cmd->parsed())
      return run_table(TableKind::Log, geometry_path, dmax_text, format, out_path);
    if (local_cmd->parsed())
      return run_table(TableKind::Local, geometry_path, dmax_text, format, out_path);
    if (verify_cmd->parsed())
      return run_table(TableKind::Verify, geometry_path, dmax_text, format, out_path);
    return run_selftest();
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const MathError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMismatch;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMismatch;
  }
}
