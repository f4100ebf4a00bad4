#include "qriccati/scenario.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace qriccati {

namespace {

using nlohmann::json;

void require_object(const json& j, const std::string& path) {
  if (!j.is_object()) throw ValidationError(path + ": expected an object");
}

void reject_unknown_keys(const json& j, const std::set<std::string>& allowed,
                         const std::string& path) {
  for (const auto& item : j.items())
    if (!allowed.count(item.key()))
      throw ValidationError(path + "." + item.key() + ": unknown field");
}

double get_number(const json& j, const std::string& key, const std::string& path) {
  if (!j.contains(key)) throw ValidationError(path + "." + key + ": missing required field");
  if (!j.at(key).is_number()) throw ValidationError(path + "." + key + ": expected a number");
  return j.at(key).get<double>();
}

double get_number_or(const json& j, const std::string& key, const std::string& path,
                     double fallback) {
  if (!j.contains(key)) return fallback;
  if (!j.at(key).is_number()) throw ValidationError(path + "." + key + ": expected a number");
  return j.at(key).get<double>();
}

std::vector<double> get_number_array(const json& j, const std::string& key,
                                     const std::string& path) {
  if (!j.contains(key)) throw ValidationError(path + "." + key + ": missing required field");
  const json& arr = j.at(key);
  if (!arr.is_array() || arr.empty())
    throw ValidationError(path + "." + key + ": expected a non-empty array of numbers");
  std::vector<double> out;
  for (const auto& v : arr) {
    if (!v.is_number()) throw ValidationError(path + "." + key + ": expected numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

ModelFamily parse_family(const json& j, const std::string& path) {
  if (!j.contains("family")) throw ValidationError(path + ".family: missing required field");
  std::string name = j.at("family").is_string() ? j.at("family").get<std::string>() : "";
  if (name == "conservative") return ModelFamily::Conservative;
  if (name == "caldirola_kanai") return ModelFamily::CaldirolaKanai;
  if (name == "expanding") return ModelFamily::Expanding;
  if (name == "log_nlse") return ModelFamily::LogNlse;
  throw ValidationError(path +
                        ".family: expected one of conservative, caldirola_kanai, "
                        "expanding, log_nlse");
}

FrequencyProfile parse_omega(const json& j, const std::string& path) {
  if (!j.contains("omega")) throw ValidationError(path + ".omega: missing required field");
  const json& w = j.at("omega");
  if (w.is_number()) return FrequencyProfile::constant(w.get<double>());
  require_object(w, path + ".omega");
  std::string kind =
      w.contains("kind") && w.at("kind").is_string() ? w.at("kind").get<std::string>() : "";
  if (kind == "constant") {
    reject_unknown_keys(w, {"kind", "value"}, path + ".omega");
    return FrequencyProfile::constant(get_number(w, "value", path + ".omega"));
  }
  if (kind == "piecewise") {
    reject_unknown_keys(w, {"kind", "breakpoints", "values"}, path + ".omega");
    return FrequencyProfile::piecewise_constant(
        get_number_array(w, "breakpoints", path + ".omega"),
        get_number_array(w, "values", path + ".omega"));
  }
  if (kind == "sampled") {
    reject_unknown_keys(w, {"kind", "times", "values"}, path + ".omega");
    return FrequencyProfile::sampled(get_number_array(w, "times", path + ".omega"),
                                     get_number_array(w, "values", path + ".omega"));
  }
  throw ValidationError(path + ".omega.kind: expected constant, piecewise, or sampled");
}

json parse_text(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(what + ": " + e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("cannot read " + path);
  return buf.str();
}

std::string stem_of(const std::string& path) {
  size_t slash = path.find_last_of("/\\");
  std::string base = slash == std::string::npos ? path : path.substr(slash + 1);
  size_t dot = base.find_last_of('.');
  return dot == std::string::npos || dot == 0 ? base : base.substr(0, dot);
}

}  // namespace

Scenario parse_scenario(const std::string& json_text, const std::string& name) {
  json root = parse_text(json_text, "scenario");
  require_object(root, "scenario");
  reject_unknown_keys(
      root, {"family", "mass", "hbar", "gamma", "omega", "initial", "time", "tolerances"},
      "scenario");

  Scenario sc;
  sc.name = name;
  sc.model.family = parse_family(root, "scenario");
  sc.model.constants.mass = get_number_or(root, "mass", "scenario", 1.0);
  sc.model.constants.hbar = get_number_or(root, "hbar", "scenario", 1.0);
  sc.model.gamma = get_number_or(root, "gamma", "scenario", 0.0);
  sc.model.omega = parse_omega(root, "scenario");
  validate(sc.model);

  if (!root.contains("time")) throw ValidationError("scenario.time: missing required field");
  const json& time = root.at("time");
  require_object(time, "scenario.time");
  reject_unknown_keys(time, {"start", "t_end", "dt", "stride"}, "scenario.time");
  double t_start = get_number_or(time, "start", "scenario.time", 0.0);
  sc.t_end = get_number(time, "t_end", "scenario.time");
  sc.dt = get_number(time, "dt", "scenario.time");
  if (!(sc.dt > 0.0)) throw ValidationError("scenario.time.dt: must be > 0");
  if (!(sc.t_end > t_start)) throw ValidationError("scenario.time.t_end: must be > start");
  if (time.contains("stride")) {
    if (!time.at("stride").is_number_integer() || time.at("stride").get<long long>() < 1)
      throw ValidationError("scenario.time.stride: must be an integer >= 1");
    sc.stride = static_cast<int>(time.at("stride").get<long long>());
  }
  sc.options.stride = sc.stride;

  if (root.contains("tolerances")) {
    const json& tol = root.at("tolerances");
    require_object(tol, "scenario.tolerances");
    reject_unknown_keys(tol, {"width_collapse_eps", "step_error_tol"}, "scenario.tolerances");
    sc.options.width_collapse_eps = get_number_or(tol, "width_collapse_eps",
                                                  "scenario.tolerances",
                                                  sc.options.width_collapse_eps);
    sc.options.step_error_tol =
        get_number_or(tol, "step_error_tol", "scenario.tolerances", sc.options.step_error_tol);
    if (!(sc.options.width_collapse_eps > 0.0))
      throw ValidationError("scenario.tolerances.width_collapse_eps: must be > 0");
    if (!(sc.options.step_error_tol > 0.0))
      throw ValidationError("scenario.tolerances.step_error_tol: must be > 0");
  }

  if (!root.contains("initial")) throw ValidationError("scenario.initial: missing required field");
  const json& init = root.at("initial");
  require_object(init, "scenario.initial");
  reject_unknown_keys(init, {"eta", "eta_dot", "c", "alpha", "alpha_dot", "phase"},
                      "scenario.initial");
  sc.initial.t = t_start;
  sc.initial.classical.eta = get_number_or(init, "eta", "scenario.initial", 0.0);
  sc.initial.classical.eta_dot = get_number_or(init, "eta_dot", "scenario.initial", 0.0);
  sc.initial.phase = get_number_or(init, "phase", "scenario.initial", 0.0);

  bool has_c = init.contains("c");
  bool has_alpha = init.contains("alpha");
  if (has_c == has_alpha)
    throw ValidationError("scenario.initial: provide exactly one of c or alpha");
  if (has_c) {
    if (init.contains("alpha_dot"))
      throw ValidationError("scenario.initial.alpha_dot: only valid together with alpha");
    const json& c = init.at("c");
    if (!c.is_array() || c.size() != 2 || !c[0].is_number() || !c[1].is_number())
      throw ValidationError("scenario.initial.c: expected [re, im]");
    sc.initial.riccati.c = Complex{c[0].get<double>(), c[1].get<double>()};
    if (!(sc.initial.riccati.c.imag() > 0.0))
      throw ValidationError("scenario.initial.c: imag part must be > 0");
  } else {
    ErmakovState e{get_number(init, "alpha", "scenario.initial"),
                   get_number_or(init, "alpha_dot", "scenario.initial", 0.0)};
    if (!(e.alpha > 0.0)) throw ValidationError("scenario.initial.alpha: must be > 0");
    sc.initial.riccati = riccati_from_ermakov(sc.model, t_start, e);
  }
  return sc;
}

ScanSpec parse_scan(const std::string& json_text, const std::string& name) {
  json root = parse_text(json_text, "scan");
  require_object(root, "scan");
  reject_unknown_keys(root, {"family", "mass", "hbar", "omega", "gamma", "w0"}, "scan");

  ScanSpec spec;
  spec.name = name;
  spec.model.family = parse_family(root, "scan");
  if (spec.model.family == ModelFamily::CaldirolaKanai)
    throw ValidationError(
        "scan.family: caldirola_kanai has no autonomous width branches; scan log_nlse instead");
  spec.model.constants.mass = get_number_or(root, "mass", "scan", 1.0);
  spec.model.constants.hbar = get_number_or(root, "hbar", "scan", 1.0);
  spec.model.omega = FrequencyProfile::constant(0.0);
  spec.omegas = get_number_array(root, "omega", "scan");
  spec.gammas = get_number_array(root, "gamma", "scan");
  for (double w : spec.omegas)
    if (!(w >= 0.0)) throw ValidationError("scan.omega: entries must be >= 0");
  for (double g : spec.gammas) {
    if (!(g >= 0.0)) throw ValidationError("scan.gamma: entries must be >= 0");
    if (spec.model.family == ModelFamily::Conservative && g != 0.0)
      throw ValidationError("scan.gamma: must be 0 for the conservative family");
  }

  if (!root.contains("w0")) {
    spec.w0s.push_back(std::nullopt);
  } else {
    const json& w0 = root.at("w0");
    if (!w0.is_array() || w0.empty())
      throw ValidationError("scan.w0: expected a non-empty array");
    for (const auto& entry : w0) {
      if (entry.is_string() && entry.get<std::string>() == "particular") {
        spec.w0s.push_back(std::nullopt);
      } else if (entry.is_array() && entry.size() == 2 && entry[0].is_number() &&
                 entry[1].is_number()) {
        spec.w0s.push_back(Complex{entry[0].get<double>(), entry[1].get<double>()});
      } else {
        throw ValidationError("scan.w0: entries must be [re, im] or \"particular\"");
      }
    }
  }
  return spec;
}

Scenario load_scenario(const std::string& path) {
  return parse_scenario(read_file(path), stem_of(path));
}

ScanSpec load_scan(const std::string& path) {
  return parse_scan(read_file(path), stem_of(path));
}

std::string scenario_schema() {
  return R"(Scenario file (JSON object), used by `run` and `compare`:

  family   required  "conservative" | "caldirola_kanai" | "expanding" | "log_nlse"
  mass     optional  number > 0, default 1
  hbar     optional  number > 0, default 1
  gamma    optional  number >= 0, default 0 (must be 0 for conservative)
  omega    required  trap frequency profile, one of:
                       1.25                              constant shorthand
                       {"kind": "constant", "value": w}
                       {"kind": "piecewise",
                        "breakpoints": [t1, ...],        strictly increasing
                        "values": [w0, w1, ...]}         one more than breakpoints;
                                                         value i applies on [t_{i-1}, t_i);
                                                         breakpoints must sit on step
                                                         boundaries of the run
                       {"kind": "sampled",
                        "times": [...], "values": [...]} linear interpolation; the run
                                                         must stay inside [times0, timesN]
  initial  required  object:
                       eta        optional, default 0    center position
                       eta_dot    optional, default 0    center velocity
                       c          [re, im], im > 0       width variable, OR
                       alpha      number > 0             width amplitude
                       alpha_dot  optional, default 0    (only with alpha)
                       phase      optional, default 0    accumulated phi
                     exactly one of c | alpha. For expanding runs eta/eta_dot
                     are the canonical pair (Q, Q_dot) and c is that model's
                     own width variable.
  time     required  {"start": 0, "t_end": T, "dt": h, "stride": 10}
                     start optional (default 0); stride optional (default 10),
                     every stride-th step is written.
  tolerances optional {"width_collapse_eps": 1e-12, "step_error_tol": 1e-8}

Run outputs: <stem>.csv with columns
  t,eta,eta_dot,re_c,im_c,alpha,phase,I,var_x,var_p,corr,u_product,energy,re_z,im_z
(17 significant digits) and <stem>.report.json with keys
  invariant_drift, sr_residual_max, z_phase_drift (null unless conservative), warnings.

Scan file (JSON object), used by `scan`:

  family   required  "conservative" | "expanding" | "log_nlse"
  mass     optional  default 1
  hbar     optional  default 1
  omega    required  array of frequencies >= 0
  gamma    required  array of frictions >= 0
  w0       optional  array of [re, im] or "particular" (default ["particular"])

Rows are the cartesian product (omega outer, gamma, then w0), one CSV row per
point with both width branches: classification, particular solutions c~, branch
parameters A, physical flags, equilibrium widths alpha_eq (nan when the branch
is not physical), asymptotic energies (inf when the imag(c)->0+ limit diverges),
and the family member c0 = c~ + 1/w0 per branch.

Exit codes: 0 success, 2 scenario parse/validation failure, 3 width collapse or
step-accuracy failure (message reports the failing time), 4 file I/O failure.
)";
}

}  // namespace qriccati
