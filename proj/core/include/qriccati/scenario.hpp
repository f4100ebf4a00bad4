#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qriccati/dynamics.hpp"
#include "qriccati/models.hpp"

namespace qriccati {

// One propagation job: model, initial state, time grid, output stride.
struct Scenario {
  std::string name;  // output file stem
  Model model;
  SystemState initial;
  double t_end = 1.0;
  double dt = 1e-3;
  int stride = 10;
  IntegrationOptions options{};
};

// Branch scan job: the cartesian grid (omega x gamma x w0), evaluated with
// the given family and constants. A missing w0 entry means the particular
// solution itself.
struct ScanSpec {
  std::string name;
  Model model;  // family + constants; per-point omega/gamma override
  std::vector<double> omegas;
  std::vector<double> gammas;
  std::vector<std::optional<Complex>> w0s;
};

// Throws ValidationError with the offending field named; unknown keys are
// rejected so typos cannot silently fall back to defaults.
Scenario parse_scenario(const std::string& json_text, const std::string& name);
ScanSpec parse_scan(const std::string& json_text, const std::string& name);

// Read the file and parse; IoError when unreadable.
Scenario load_scenario(const std::string& path);
ScanSpec load_scan(const std::string& path);

// Human-readable description of both file formats, printed by --schema.
std::string scenario_schema();

}  // namespace qriccati
