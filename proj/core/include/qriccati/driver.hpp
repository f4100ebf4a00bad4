#pragma once

#include <array>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "qriccati/closed_form.hpp"
#include "qriccati/dynamics.hpp"
#include "qriccati/scenario.hpp"

namespace qriccati {

struct RunReport {
  // max_t |I(t) - I(t0)| / max(|I(t0)|, 1e-30) over the stored states
  double invariant_drift = 0.0;
  // max_t |var_x var_p - corr^2 - (hbar/2)^2| / (hbar/2)^2
  double sr_residual_max = 0.0;
  // conservative runs only: max_t |z e^{i phi} - z(t0) e^{i phi(t0)}|
  std::optional<double> z_phase_drift;
  std::vector<std::string> warnings;
};

struct RunResult {
  TimeSeries series;
  RunReport report;
};

RunResult run_scenario(const Scenario& sc);

// Fixed column order, 17 significant digits, '\n' line endings:
//   t,eta,eta_dot,re_c,im_c,alpha,phase,I,var_x,var_p,corr,u_product,energy,re_z,im_z
void write_series_csv(std::ostream& out, const Model& model, const TimeSeries& series);

void write_run_report(std::ostream& out, const RunReport& report);

struct ScanRow {
  int index = 0;
  double omega = 0.0;
  double gamma = 0.0;
  std::optional<Complex> w0;  // empty selects the particular solutions themselves
  BranchReport report;
  std::array<Complex, 2> c0;  // family member c~ + 1/w0 per branch, Plus first
};

// Cartesian product omega x gamma x w0, row-major with omega outermost.
std::vector<ScanRow> run_scan(const ScanSpec& spec);

void write_scan_csv(std::ostream& out, const std::vector<ScanRow>& rows);

// Side-by-side native integrations of one LogNlse scenario and its two
// canonical images, started from the exactly mapped initial data.
struct CompareResult {
  std::vector<double> times;
  std::vector<Complex> c_nl, c_ck, c_exp;
  std::vector<double> i_nl, i_ck, i_exp;        // each family's own invariant
  std::vector<double> ck_map_residual;          // |c_ck - e^{gamma t} c_nl|
  std::vector<double> exp_map_residual;         // |c_exp - (c_nl + gamma/2)|
  std::vector<double> u_ck;                     // CK apparent product, dips below (hbar/2)^2
  std::vector<double> u_product;                // physical-level product, never does
  double riccati_map_residual_max = 0.0;
  double invariant_discrepancy_max = 0.0;
};

CompareResult run_compare(const Scenario& sc);

void write_compare_csv(std::ostream& out, const CompareResult& r);
void write_compare_report(std::ostream& out, const CompareResult& r);

}  // namespace qriccati
