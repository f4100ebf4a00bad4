#include "qriccati/driver.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include <json.hpp>

#include "qriccati/ladder.hpp"
#include "qriccati/observables.hpp"
#include "qriccati/transforms.hpp"

namespace qriccati {

namespace {

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

nlohmann::json json_or_null(const std::optional<double>& v) {
  if (!v) return nullptr;
  return *v;
}

}  // namespace

RunResult run_scenario(const Scenario& sc) {
  RunResult out;
  out.series = integrate(sc.model, sc.initial, sc.t_end, sc.dt, sc.options);

  const double q = 0.25 * sc.model.constants.hbar * sc.model.constants.hbar;
  double i0 = 0.0;
  bool degenerate = false;
  bool first = true;
  for (const SystemState& s : out.series.states) {
    ErmakovState e = ermakov_from_riccati(sc.model, s.t, s.riccati);
    InvariantValue inv = ermakov_invariant(sc.model, s.t, s.classical, e);
    if (first) {
      i0 = inv.value;
      degenerate = inv.degenerate;
      first = false;
    }
    double denom = std::max(std::abs(i0), 1e-30);
    out.report.invariant_drift =
        std::max(out.report.invariant_drift, std::abs(inv.value - i0) / denom);
    UncertaintyRecord u = uncertainties(sc.model.constants, s.riccati);
    out.report.sr_residual_max =
        std::max(out.report.sr_residual_max, std::abs(u.sr_lhs - q) / q);
  }
  if (sc.model.family == ModelFamily::Conservative)
    out.report.z_phase_drift = phase_adjusted_constancy(sc.model, out.series).max_drift;
  if (degenerate)
    out.report.warnings.push_back(
        "center starts at rest: the invariant is identically zero and its drift is absolute");
  if (out.series.max_step_error > 0.5 * sc.options.step_error_tol)
    out.report.warnings.push_back("step error estimate within 2x of tolerance; reduce dt");
  return out;
}

void write_series_csv(std::ostream& out, const Model& model, const TimeSeries& series) {
  out << "t,eta,eta_dot,re_c,im_c,alpha,phase,I,var_x,var_p,corr,u_product,energy,re_z,im_z\n";
  for (const SystemState& s : series.states) {
    ErmakovState e = ermakov_from_riccati(model, s.t, s.riccati);
    InvariantValue inv = ermakov_invariant(model, s.t, s.classical, e);
    UncertaintyRecord u = uncertainties(model.constants, s.riccati);
    double energy = energy_contribution(model.constants, s.riccati, model.omega.value(s.t));
    Eigenvalue z = z_eigenvalue(model, s.t, s.classical, s.riccati);
    out << fmt17(s.t) << ',' << fmt17(s.classical.eta) << ',' << fmt17(s.classical.eta_dot)
        << ',' << fmt17(s.riccati.c.real()) << ',' << fmt17(s.riccati.c.imag()) << ','
        << fmt17(e.alpha) << ',' << fmt17(s.phase) << ',' << fmt17(inv.value) << ','
        << fmt17(u.var_x) << ',' << fmt17(u.var_p) << ',' << fmt17(u.corr) << ','
        << fmt17(u.u_product) << ',' << fmt17(energy) << ',' << fmt17(z.z.real()) << ','
        << fmt17(z.z.imag()) << '\n';
  }
}

void write_run_report(std::ostream& out, const RunReport& report) {
  nlohmann::json j;
  j["invariant_drift"] = report.invariant_drift;
  j["sr_residual_max"] = report.sr_residual_max;
  j["z_phase_drift"] = json_or_null(report.z_phase_drift);
  j["warnings"] = report.warnings;
  out << j.dump(2) << '\n';
}

std::vector<ScanRow> run_scan(const ScanSpec& spec) {
  std::vector<ScanRow> rows;
  int index = 0;
  for (double omega : spec.omegas) {
    for (double gamma : spec.gammas) {
      for (const auto& w0 : spec.w0s) {
        if (w0 && *w0 == Complex{0.0, 0.0})
          throw ValidationError("scan.w0: [0, 0] is the Moebius point at infinity");
        ScanRow row;
        row.index = index++;
        row.omega = omega;
        row.gamma = gamma;
        row.w0 = w0;
        row.report = classify_branch(spec.model, omega, gamma);
        for (int b = 0; b < 2; ++b) {
          Complex c_tilde = row.report.branches[b].solution.c_tilde;
          row.c0[b] = w0 ? c_tilde + 1.0 / *w0 : c_tilde;
        }
        rows.push_back(std::move(row));
      }
    }
  }
  return rows;
}

void write_scan_csv(std::ostream& out, const std::vector<ScanRow>& rows) {
  out << "index,omega,gamma,re_w0,im_w0,particular,classification";
  for (const char* side : {"plus", "minus"})
    out << ",re_c_tilde_" << side << ",im_c_tilde_" << side << ",re_a_" << side << ",im_a_"
        << side << ",physical_" << side << ",alpha_eq_" << side << ",energy_" << side
        << ",re_c0_" << side << ",im_c0_" << side;
  out << '\n';
  const double nan = std::nan("");
  for (const ScanRow& row : rows) {
    out << row.index << ',' << fmt17(row.omega) << ',' << fmt17(row.gamma) << ','
        << fmt17(row.w0 ? row.w0->real() : nan) << ',' << fmt17(row.w0 ? row.w0->imag() : nan)
        << ',' << (row.w0 ? 0 : 1) << ',' << width_branch_class_name(row.report.classification);
    for (int b = 0; b < 2; ++b) {
      const BranchInfo& info = row.report.branches[b];
      out << ',' << fmt17(info.solution.c_tilde.real()) << ','
          << fmt17(info.solution.c_tilde.imag()) << ',' << fmt17(info.a.a.real()) << ','
          << fmt17(info.a.a.imag()) << ',' << (info.physical ? 1 : 0) << ','
          << fmt17(info.alpha_eq) << ',' << fmt17(info.asymptotic_energy) << ','
          << fmt17(row.c0[b].real()) << ',' << fmt17(row.c0[b].imag());
    }
    out << '\n';
  }
}

CompareResult run_compare(const Scenario& sc) {
  if (sc.model.family != ModelFamily::LogNlse)
    throw ValidationError("compare requires a log_nlse scenario (the physical-level model)");

  Model nl = sc.model;
  Model ck = sc.model;
  ck.family = ModelFamily::CaldirolaKanai;
  Model exp_model = sc.model;
  exp_model.family = ModelFamily::Expanding;

  const double t0 = sc.initial.t;
  const double gamma = sc.model.gamma;

  SystemState ck0 = sc.initial;
  ck0.riccati = nl_to_ck_riccati(sc.initial.riccati, t0, gamma).var;

  SystemState exp0 = sc.initial;
  exp0.classical = physical_to_expanding(sc.initial.classical, t0, gamma).state;
  exp0.riccati = nl_to_expanding_riccati(sc.initial.riccati, gamma).var;

  TimeSeries run_nl = integrate(nl, sc.initial, sc.t_end, sc.dt, sc.options);
  TimeSeries run_ck = integrate(ck, ck0, sc.t_end, sc.dt, sc.options);
  TimeSeries run_exp = integrate(exp_model, exp0, sc.t_end, sc.dt, sc.options);
  if (run_ck.times.size() != run_nl.times.size() || run_exp.times.size() != run_nl.times.size())
    throw Error("compare runs stored different grids");

  CompareResult r;
  std::vector<double> u_ck = ck_uncertainty_product(ck, run_ck);
  for (size_t k = 0; k < run_nl.states.size(); ++k) {
    const SystemState& s_nl = run_nl.states[k];
    const SystemState& s_ck = run_ck.states[k];
    const SystemState& s_exp = run_exp.states[k];
    const double t = s_nl.t;

    r.times.push_back(t);
    r.c_nl.push_back(s_nl.riccati.c);
    r.c_ck.push_back(s_ck.riccati.c);
    r.c_exp.push_back(s_exp.riccati.c);

    double i_nl = ermakov_invariant(nl, t, s_nl.classical,
                                    ermakov_from_riccati(nl, t, s_nl.riccati))
                      .value;
    double i_ck = ermakov_invariant(ck, t, s_ck.classical,
                                    ermakov_from_riccati(ck, t, s_ck.riccati))
                      .value;
    double i_exp = ermakov_invariant(exp_model, t, s_exp.classical,
                                     ermakov_from_riccati(exp_model, t, s_exp.riccati))
                       .value;
    r.i_nl.push_back(i_nl);
    r.i_ck.push_back(i_ck);
    r.i_exp.push_back(i_exp);

    Complex mapped_ck = nl_to_ck_riccati(s_nl.riccati, t, gamma).var.c;
    Complex mapped_exp = nl_to_expanding_riccati(s_nl.riccati, gamma).var.c;
    double res_ck = std::abs(s_ck.riccati.c - mapped_ck);
    double res_exp = std::abs(s_exp.riccati.c - mapped_exp);
    r.ck_map_residual.push_back(res_ck);
    r.exp_map_residual.push_back(res_exp);
    r.riccati_map_residual_max = std::max({r.riccati_map_residual_max, res_ck, res_exp});
    r.invariant_discrepancy_max =
        std::max({r.invariant_discrepancy_max, std::abs(i_ck - i_nl), std::abs(i_exp - i_nl)});

    r.u_ck.push_back(u_ck[k]);
    r.u_product.push_back(uncertainties(nl.constants, s_nl.riccati).u_product);
  }
  return r;
}

void write_compare_csv(std::ostream& out, const CompareResult& r) {
  out << "t,re_c_nl,im_c_nl,re_c_ck,im_c_ck,re_c_exp,im_c_exp,i_nl,i_ck,i_exp,"
         "ck_map_residual,exp_map_residual,u_ck,u_product\n";
  for (size_t k = 0; k < r.times.size(); ++k) {
    out << fmt17(r.times[k]) << ',' << fmt17(r.c_nl[k].real()) << ',' << fmt17(r.c_nl[k].imag())
        << ',' << fmt17(r.c_ck[k].real()) << ',' << fmt17(r.c_ck[k].imag()) << ','
        << fmt17(r.c_exp[k].real()) << ',' << fmt17(r.c_exp[k].imag()) << ','
        << fmt17(r.i_nl[k]) << ',' << fmt17(r.i_ck[k]) << ',' << fmt17(r.i_exp[k]) << ','
        << fmt17(r.ck_map_residual[k]) << ',' << fmt17(r.exp_map_residual[k]) << ','
        << fmt17(r.u_ck[k]) << ',' << fmt17(r.u_product[k]) << '\n';
  }
}

void write_compare_report(std::ostream& out, const CompareResult& r) {
  nlohmann::json j;
  j["riccati_map_residual_max"] = r.riccati_map_residual_max;
  j["invariant_discrepancy_max"] = r.invariant_discrepancy_max;
  out << j.dump(2) << '\n';
}

}  // namespace qriccati
