#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "qriccati/driver.hpp"
#include "qriccati/errors.hpp"
#include "qriccati/scenario.hpp"

#ifndef QRICCATI_VERSION
#define QRICCATI_VERSION "0.0.0"
#endif

namespace {

namespace fs = std::filesystem;
using namespace qriccati;

std::ofstream open_output(const fs::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path.string());
  return out;
}

fs::path prepare_out_dir(const std::string& dir) {
  fs::path p(dir);
  std::error_code ec;
  fs::create_directories(p, ec);
  if (ec) throw IoError("cannot create output directory " + dir + ": " + ec.message());
  return p;
}

void finish(std::ofstream& out, const fs::path& path) {
  out.flush();
  if (!out) throw IoError("cannot write " + path.string());
  std::cout << "wrote " << path.string() << '\n';
}

void cmd_run(const std::string& file, const std::string& out_dir) {
  Scenario sc = load_scenario(file);
  RunResult result = run_scenario(sc);
  fs::path dir = prepare_out_dir(out_dir);

  fs::path csv_path = dir / (sc.name + ".csv");
  std::ofstream csv = open_output(csv_path);
  write_series_csv(csv, sc.model, result.series);
  finish(csv, csv_path);

  fs::path report_path = dir / (sc.name + ".report.json");
  std::ofstream report = open_output(report_path);
  write_run_report(report, result.report);
  finish(report, report_path);
}

void cmd_scan(const std::string& file, const std::string& out_dir) {
  ScanSpec spec = load_scan(file);
  std::vector<ScanRow> rows = run_scan(spec);
  fs::path dir = prepare_out_dir(out_dir);

  fs::path csv_path = dir / (spec.name + ".scan.csv");
  std::ofstream csv = open_output(csv_path);
  write_scan_csv(csv, rows);
  finish(csv, csv_path);
}

void cmd_compare(const std::string& file, const std::string& out_dir) {
  Scenario sc = load_scenario(file);
  CompareResult result = run_compare(sc);
  fs::path dir = prepare_out_dir(out_dir);

  fs::path csv_path = dir / (sc.name + ".compare.csv");
  std::ofstream csv = open_output(csv_path);
  write_compare_csv(csv, result);
  finish(csv, csv_path);

  fs::path report_path = dir / (sc.name + ".compare.json");
  std::ofstream report = open_output(report_path);
  write_compare_report(report, result);
  finish(report, report_path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gaussian wave-packet evolution via the complex width equation"};
  app.set_version_flag("--version", std::string("qriccati ") + QRICCATI_VERSION);
  bool schema = false;
  app.add_flag("--schema", schema, "print the scenario/scan file format and exit");
  app.require_subcommand(0, 1);

  std::string run_file, run_out = ".";
  CLI::App* run = app.add_subcommand("run", "integrate one scenario; write CSV + JSON report");
  run->add_option("file", run_file, "scenario JSON file")->required();
  run->add_option("--out", run_out, "output directory (default .)");

  std::string scan_file, scan_out = ".";
  CLI::App* scan = app.add_subcommand("scan", "classify width branches over a parameter grid");
  scan->add_option("file", scan_file, "scan JSON file")->required();
  scan->add_option("--out", scan_out, "output directory (default .)");

  std::string cmp_file, cmp_out = ".";
  CLI::App* cmp =
      app.add_subcommand("compare", "run a log_nlse scenario against its canonical images");
  cmp->add_option("file", cmp_file, "scenario JSON file")->required();
  cmp->add_option("--out", cmp_out, "output directory (default .)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);  // prints help/version or the usage error
    return code == 0 ? 0 : 2;
  }

  try {
    if (schema) {
      std::cout << scenario_schema();
      return 0;
    }
    if (run->parsed()) {
      cmd_run(run_file, run_out);
    } else if (scan->parsed()) {
      cmd_scan(scan_file, scan_out);
    } else if (cmp->parsed()) {
      cmd_compare(cmp_file, cmp_out);
    } else {
      std::cout << app.help();
      return 0;
    }
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const WidthCollapseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const AccuracyError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const SingularityError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
