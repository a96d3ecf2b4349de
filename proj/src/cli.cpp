#include "drabi/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "drabi/identities.hpp"
#include "drabi/invariants.hpp"
#include "drabi/spectra.hpp"

namespace drabi::cli {

namespace {

using nlohmann::ordered_json;

// Configuration/usage problems map to exit code 64.
class UsageError : public Error {
 public:
  explicit UsageError(const std::string& what) : Error(what) {}
};

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

const std::vector<std::string> kModels = {"grm", "rm", "two_photon",
                                          "two_mode"};

bool is_su11(const std::string& model) {
  return model == "two_photon" || model == "two_mode";
}

Su11Model su11_kind(const std::string& model) {
  return model == "two_photon" ? Su11Model::two_photon : Su11Model::two_mode;
}

void validate_config(RunConfig& cfg) {
  if (std::find(kModels.begin(), kModels.end(), cfg.model) == kModels.end())
    throw UsageError("unknown model '" + cfg.model +
                     "' (expected grm, rm, two_photon or two_mode)");
  if (cfg.format != "csv" && cfg.format != "json")
    throw UsageError("unknown format '" + cfg.format +
                     "' (expected csv or json)");
  if (cfg.parity != 0 && cfg.parity != 1 && cfg.parity != -1)
    throw UsageError("parity must be -1, 0 or 1");
  if (cfg.count < 1) throw UsageError("count must be at least 1");
  if (!(cfg.tol > 0)) throw UsageError("tol must be positive");
  if (cfg.nmax_cap < 1) throw UsageError("nmax-cap must be at least 1");
  if (!(cfg.gamma > 0)) throw UsageError("gamma must be positive");
  if (cfg.model == "rm") {
    // symmetric couplings: one coupling value, mirrored
    if (cfg.k1 == 0.0)
      cfg.k1 = cfg.k2;
    else if (cfg.k2 == 0.0)
      cfg.k2 = cfg.k1;
    else if (cfg.k1 != cfg.k2)
      throw UsageError("model rm requires k1 = k2 (set one of them)");
  }
  if (is_su11(cfg.model)) {
    Su11Params p;
    p.model = su11_kind(cfg.model);
    p.gamma = cfg.gamma;
    p.q = cfg.q;
    p.delta = cfg.delta;
    try {
      validate_su11(p);
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
  }
}

}  // namespace

RunConfig load_config(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw UsageError("cannot open config file: " + path);
  nlohmann::json j;
  try {
    is >> j;
  } catch (const nlohmann::json::exception& e) {
    throw UsageError("malformed config file " + path + ": " + e.what());
  }
  if (!j.is_object()) throw UsageError("config must be a JSON object");

  RunConfig cfg;
  for (const auto& [key, value] : j.items()) {
    try {
      if (key == "model")
        cfg.model = value.get<std::string>();
      else if (key == "gamma")
        cfg.gamma = value.get<double>();
      else if (key == "mu")
        cfg.mu = value.get<double>();
      else if (key == "k1")
        cfg.k1 = value.get<double>();
      else if (key == "k2")
        cfg.k2 = value.get<double>();
      else if (key == "q")
        cfg.q = value.get<double>();
      else if (key == "delta")
        cfg.delta = value.get<double>();
      else if (key == "parity")
        cfg.parity = value.get<int>();
      else if (key == "count")
        cfg.count = value.get<int>();
      else if (key == "tol")
        cfg.tol = value.get<double>();
      else if (key == "nmax_cap")
        cfg.nmax_cap = value.get<int>();
      else if (key == "sweep")
        cfg.sweep = value.get<std::string>();
      else if (key == "out")
        cfg.out = value.get<std::string>();
      else if (key == "format")
        cfg.format = value.get<std::string>();
      else
        throw UsageError("unknown config key '" + key + "'");
    } catch (const nlohmann::json::exception&) {
      throw UsageError("config key '" + key + "' has the wrong type");
    }
  }
  return cfg;
}

SweepRange parse_sweep(const std::string& text) {
  std::vector<std::string> parts;
  std::string::size_type start = 0;
  while (true) {
    const auto pos = text.find(':', start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  if (parts.size() != 4)
    throw UsageError("sweep must have the form param:lo:hi:steps, got '" +
                     text + "'");
  SweepRange r;
  r.parameter = parts[0];
  if (r.parameter.empty()) throw UsageError("sweep parameter name is empty");
  auto to_double = [&](const std::string& s, const char* what) {
    try {
      std::size_t used = 0;
      const double v = std::stod(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return v;
    } catch (const std::exception&) {
      throw UsageError(std::string("sweep ") + what + " is not a number: '" +
                       s + "'");
    }
  };
  r.lo = to_double(parts[1], "lower bound");
  r.hi = to_double(parts[2], "upper bound");
  try {
    std::size_t used = 0;
    r.steps = std::stoi(parts[3], &used);
    if (used != parts[3].size()) throw std::invalid_argument(parts[3]);
  } catch (const std::exception&) {
    throw UsageError("sweep steps is not an integer: '" + parts[3] + "'");
  }
  if (r.steps < 0) throw UsageError("sweep steps must be nonnegative");
  return r;
}

namespace {

void write_payload(const std::string& payload, const RunConfig& cfg,
                   std::ostream& out) {
  if (cfg.out == "-") {
    out << payload;
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary | std::ios::trunc);
  if (!f) throw Error("cannot open output file: " + cfg.out);
  f << payload;
  if (!f) throw Error("failed writing output file: " + cfg.out);
}

std::string param_header(const RunConfig& cfg) {
  std::ostringstream os;
  os << "# model=" << cfg.model << " gamma=" << fmt(cfg.gamma)
     << " mu=" << fmt(cfg.mu) << " k1=" << fmt(cfg.k1)
     << " k2=" << fmt(cfg.k2) << " q=" << fmt(cfg.q)
     << " delta=" << fmt(cfg.delta) << " parity=" << cfg.parity
     << " count=" << cfg.count << " tol=" << fmt(cfg.tol)
     << " nmax_cap=" << cfg.nmax_cap << "\n";
  return os.str();
}

ordered_json param_json(const RunConfig& cfg) {
  ordered_json p;
  p["model"] = cfg.model;
  p["gamma"] = cfg.gamma;
  p["mu"] = cfg.mu;
  p["k1"] = cfg.k1;
  p["k2"] = cfg.k2;
  p["q"] = cfg.q;
  p["delta"] = cfg.delta;
  p["parity"] = cfg.parity;
  p["count"] = cfg.count;
  p["tol"] = cfg.tol;
  p["nmax_cap"] = cfg.nmax_cap;
  return p;
}

int cmd_verify(bool corrupt, std::ostream& out) {
  const auto checks = run_identity_suite(corrupt);
  int fails = 0;
  for (const auto& c : checks) {
    if (c.pass) {
      out << "PASS " << c.name << "\n";
    } else {
      ++fails;
      out << "FAIL " << c.name << ": " << c.detail << "\n";
    }
  }
  out << (fails == 0 ? "all " : "FAILED: ") << checks.size() - fails << "/"
      << checks.size() << " identities hold exactly\n";
  return fails == 0 ? 0 : 1;
}

Spectrum compute_spectrum(const RunConfig& cfg) {
  if (is_su11(cfg.model)) {
    Su11Params p;
    p.model = su11_kind(cfg.model);
    p.gamma = cfg.gamma;
    p.q = cfg.q;
    p.delta = cfg.delta;
    return su11_spectrum(p, cfg.count, cfg.tol, cfg.nmax_cap, cfg.parity);
  }
  GrmParams p;
  p.gamma = cfg.gamma;
  p.mu = cfg.mu;
  p.k1 = cfg.k1;
  p.k2 = cfg.k2;
  return grm_spectrum(p, cfg.count, cfg.tol, cfg.nmax_cap, cfg.parity);
}

std::string spectrum_csv(const RunConfig& cfg, const Spectrum& s) {
  std::ostringstream os;
  os << "# drabi spectrum\n" << param_header(cfg);
  if (!s.note.empty()) os << "# note=" << s.note << "\n";
  os << "# n_max_used=" << s.n_max_used << "\n";
  os << "index,parity,index_within_parity,energy,converged,n_max_used\n";
  for (std::size_t i = 0; i < s.levels.size(); ++i) {
    const auto& lv = s.levels[i];
    os << i << "," << lv.parity << "," << lv.index_within_parity << ","
       << fmt(lv.energy) << "," << (lv.converged ? 1 : 0) << ","
       << s.n_max_used << "\n";
  }
  return os.str();
}

std::string spectrum_json(const RunConfig& cfg, const Spectrum& s) {
  ordered_json j;
  j["command"] = "spectrum";
  j["params"] = param_json(cfg);
  if (!s.note.empty()) j["note"] = s.note;
  j["n_max_used"] = s.n_max_used;
  j["levels"] = ordered_json::array();
  for (std::size_t i = 0; i < s.levels.size(); ++i) {
    const auto& lv = s.levels[i];
    ordered_json r;
    r["index"] = i;
    r["parity"] = lv.parity;
    r["index_within_parity"] = lv.index_within_parity;
    r["energy"] = lv.energy;
    r["converged"] = lv.converged;
    j["levels"].push_back(r);
  }
  return j.dump(2) + "\n";
}

int cmd_spectrum(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  Spectrum s;
  int code = 0;
  if (is_su11(cfg.model)) {
    Su11Params p;
    p.model = su11_kind(cfg.model);
    p.gamma = cfg.gamma;
    p.q = cfg.q;
    p.delta = cfg.delta;
    if (collapse_risk(p))
      err << "warning: two_photon with gamma <= 2: discrete spectrum "
             "collapses; truncated levels will not converge\n";
  }
  try {
    s = compute_spectrum(cfg);
  } catch (const ConvergenceFailure& e) {
    code = 2;
    err << "warning: " << e.what() << "; emitting best estimates\n";
    s.n_max_used = e.n_max_reached;
    s.tol = cfg.tol;
    s.note = std::string("convergence failure: ") + e.what();
    for (std::size_t i = 0; i < e.best_values.size(); ++i) {
      SpectrumLevel lv;
      lv.energy = e.best_values[i];
      lv.parity = i < e.parity.size() ? e.parity[i] : 0;
      lv.index_within_parity =
          i < e.index_within_parity.size() ? e.index_within_parity[i] : 0;
      lv.converged = i < e.level_settled.size() && e.level_settled[i];
      s.levels.push_back(lv);
    }
  }
  write_payload(cfg.format == "csv" ? spectrum_csv(cfg, s)
                                    : spectrum_json(cfg, s),
                cfg, out);
  return code;
}

SpectrumFamily family_for(const RunConfig& cfg, const SweepRange& sr) {
  if (cfg.model == "rm") {
    if (sr.parameter != "kappa")
      throw UsageError("model rm sweeps 'kappa' (got '" + sr.parameter + "')");
    if (sr.lo < 0 || sr.hi < 0)
      throw UsageError("kappa sweep bounds must be nonnegative");
    return rm_kappa_family(cfg.mu / cfg.gamma, cfg.count, cfg.tol,
                           cfg.nmax_cap);
  }
  if (cfg.model == "grm") {
    if (sr.parameter != "Lambda")
      throw UsageError("model grm sweeps 'Lambda' (got '" + sr.parameter +
                       "')");
    if (cfg.k1 == 0.0 && cfg.k2 == 0.0)
      throw UsageError(
          "grm sweep needs a coupling direction: set k1/k2 to a nonzero "
          "direction vector");
    const double alpha = std::atan2(cfg.k2, cfg.k1);
    return grm_coupling_family(cfg.gamma, cfg.mu, alpha, cfg.count, cfg.tol,
                               cfg.nmax_cap);
  }
  // su(1,1) ladder models sweep gamma
  if (sr.parameter != "gamma")
    throw UsageError("model " + cfg.model + " sweeps 'gamma' (got '" +
                     sr.parameter + "')");
  if (!(sr.lo > 0) || !(sr.hi > 0))
    throw UsageError("gamma sweep bounds must be positive");
  return su11_gamma_family(su11_kind(cfg.model), cfg.q, cfg.delta, cfg.count,
                           cfg.tol, cfg.nmax_cap);
}

std::string crossings_csv(const RunConfig& cfg, const SweepRange& sr,
                          const std::vector<CrossingEvent>& events) {
  std::ostringstream os;
  os << "# drabi crossings\n" << param_header(cfg);
  os << "# sweep=" << sr.parameter << ":" << fmt(sr.lo) << ":" << fmt(sr.hi)
     << ":" << sr.steps << "\n";
  if (cfg.model == "rm") os << "# note=energies in units of gamma\n";
  os << "parameter,parity_a,index_a,parity_b,index_b,min_gap,kind\n";
  for (const auto& e : events)
    os << fmt(e.parameter) << "," << e.parity_a << "," << e.index_a << ","
       << e.parity_b << "," << e.index_b << "," << fmt(e.min_gap) << ","
       << (e.true_crossing ? "crossing" : "avoided") << "\n";
  return os.str();
}

std::string crossings_json(const RunConfig& cfg, const SweepRange& sr,
                           const std::vector<CrossingEvent>& events) {
  ordered_json j;
  j["command"] = "crossings";
  j["params"] = param_json(cfg);
  j["sweep"] = {{"parameter", sr.parameter},
                {"lo", sr.lo},
                {"hi", sr.hi},
                {"steps", sr.steps}};
  j["events"] = ordered_json::array();
  for (const auto& e : events) {
    ordered_json r;
    r["parameter"] = e.parameter;
    r["parity_a"] = e.parity_a;
    r["index_a"] = e.index_a;
    r["parity_b"] = e.parity_b;
    r["index_b"] = e.index_b;
    r["min_gap"] = e.min_gap;
    r["kind"] = e.true_crossing ? "crossing" : "avoided";
    j["events"].push_back(r);
  }
  return j.dump(2) + "\n";
}

int cmd_crossings(const RunConfig& cfg, bool self_test_breach,
                  std::ostream& out, std::ostream& err) {
  if (cfg.sweep.empty())
    throw UsageError("crossings requires --sweep param:lo:hi:steps");
  const SweepRange sr = parse_sweep(cfg.sweep);
  const SpectrumFamily family = family_for(cfg, sr);
  std::vector<CrossingEvent> events =
      crossing_scan(family, sr.lo, sr.hi, sr.steps);
  if (self_test_breach) {
    CrossingEvent fake;
    fake.parameter = sr.lo;
    fake.parity_a = +1;
    fake.index_a = 0;
    fake.parity_b = +1;
    fake.index_b = 1;
    fake.min_gap = 0.0;
    fake.true_crossing = true;
    events.push_back(fake);
  }
  write_payload(cfg.format == "csv" ? crossings_csv(cfg, sr, events)
                                    : crossings_json(cfg, sr, events),
                cfg, out);
  int breaches = 0;
  for (const auto& e : events)
    if (e.true_crossing && e.parity_a == e.parity_b) ++breaches;
  if (breaches > 0) {
    err << "error: " << breaches
        << " equal-parity level crossing(s) detected; the reflection "
           "symmetry forbids these\n";
    return 1;
  }
  return 0;
}

GrmParams grm_params_of(const RunConfig& cfg) {
  if (is_su11(cfg.model))
    throw UsageError("this command supports the grm/rm models only");
  GrmParams p;
  p.gamma = cfg.gamma;
  p.mu = cfg.mu;
  p.k1 = cfg.k1;
  p.k2 = cfg.k2;
  return p;
}

std::string invariants_csv(const RunConfig& cfg, const InvariantPattern& pat) {
  std::ostringstream os;
  os << "# drabi invariants\n" << param_header(cfg);
  os << "# n_max_used=" << pat.n_max_used << "\n";
  os << "index,parity,energy,t1,t2,imag_residual\n";
  for (const auto& pt : pat.points)
    os << pt.n << "," << pt.parity << "," << fmt(pt.energy) << ","
       << fmt(pt.t1) << "," << fmt(pt.t2) << "," << fmt(pt.imag_residual)
       << "\n";
  return os.str();
}

std::string invariants_json(const RunConfig& cfg, const InvariantPattern& pat) {
  ordered_json j;
  j["command"] = "invariants";
  j["params"] = param_json(cfg);
  j["n_max_used"] = pat.n_max_used;
  j["points"] = ordered_json::array();
  for (const auto& pt : pat.points) {
    ordered_json r;
    r["index"] = pt.n;
    r["parity"] = pt.parity;
    r["energy"] = pt.energy;
    r["t1"] = pt.t1;
    r["t2"] = pt.t2;
    r["imag_residual"] = pt.imag_residual;
    j["points"].push_back(r);
  }
  return j.dump(2) + "\n";
}

int cmd_invariants(const RunConfig& cfg, std::ostream& out,
                   std::ostream& err) {
  const GrmParams p = grm_params_of(cfg);
  InvariantPattern pat;
  try {
    pat = converged_invariant_pattern(p, cfg.count, cfg.tol, cfg.nmax_cap);
  } catch (const ConvergenceFailure& e) {
    err << "warning: " << e.what() << "; no pattern emitted\n";
    std::ostringstream os;
    os << "# drabi invariants\n" << param_header(cfg);
    os << "# note=convergence failure: " << e.what() << "\n";
    os << "index,parity,energy,t1,t2,imag_residual\n";
    write_payload(os.str(), cfg, out);
    return 2;
  }
  write_payload(cfg.format == "csv" ? invariants_csv(cfg, pat)
                                    : invariants_json(cfg, pat),
                cfg, out);
  return 0;
}

int cmd_scan(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const GrmParams base = grm_params_of(cfg);
  if (cfg.sweep.empty())
    throw UsageError("scan requires --sweep Lambda:lo:hi:steps");
  const SweepRange sr = parse_sweep(cfg.sweep);
  if (sr.parameter != "Lambda")
    throw UsageError("scan sweeps 'Lambda' (got '" + sr.parameter + "')");
  if (base.k1 == 0.0 && base.k2 == 0.0)
    throw UsageError(
        "scan needs a coupling direction: set k1/k2 to a nonzero direction "
        "vector");
  const double alpha = std::atan2(base.k2, base.k1);

  const auto frames =
      pattern_motion_scan(base.gamma, base.mu, alpha, sr.lo, sr.hi, sr.steps,
                          cfg.count, cfg.tol, cfg.nmax_cap);
  int failed = 0;
  std::string payload;
  if (cfg.format == "csv") {
    std::ostringstream os;
    os << "# drabi scan\n" << param_header(cfg);
    os << "# sweep=" << sr.parameter << ":" << fmt(sr.lo) << ":" << fmt(sr.hi)
       << ":" << sr.steps << " alpha=" << fmt(alpha) << "\n";
    os << "Lambda,index,parity,energy,t1,t2,imag_residual\n";
    for (const auto& f : frames) {
      if (!f.ok) {
        ++failed;
        os << "# Lambda=" << fmt(f.lambda) << " failed: " << f.error << "\n";
        continue;
      }
      for (const auto& pt : f.points)
        os << fmt(f.lambda) << "," << pt.n << "," << pt.parity << ","
           << fmt(pt.energy) << "," << fmt(pt.t1) << "," << fmt(pt.t2) << ","
           << fmt(pt.imag_residual) << "\n";
    }
    payload = os.str();
  } else {
    ordered_json j;
    j["command"] = "scan";
    j["params"] = param_json(cfg);
    j["sweep"] = {{"parameter", sr.parameter},
                  {"lo", sr.lo},
                  {"hi", sr.hi},
                  {"steps", sr.steps},
                  {"alpha", alpha}};
    j["frames"] = ordered_json::array();
    for (const auto& f : frames) {
      ordered_json fr;
      fr["Lambda"] = f.lambda;
      fr["ok"] = f.ok;
      if (!f.ok) {
        ++failed;
        fr["error"] = f.error;
      } else {
        fr["n_max_used"] = f.n_max_used;
        fr["points"] = ordered_json::array();
        for (const auto& pt : f.points) {
          ordered_json r;
          r["index"] = pt.n;
          r["parity"] = pt.parity;
          r["energy"] = pt.energy;
          r["t1"] = pt.t1;
          r["t2"] = pt.t2;
          r["imag_residual"] = pt.imag_residual;
          fr["points"].push_back(r);
        }
      }
      j["frames"].push_back(fr);
    }
    payload = j.dump(2) + "\n";
  }
  write_payload(payload, cfg, out);
  if (failed > 0) {
    err << "warning: " << failed << " scan frame(s) failed\n";
    return 2;
  }
  return 0;
}

// Per-subcommand option state: flag values land here; config-file values
// fill the gaps afterwards.
struct OptionSet {
  std::string config_path;
  RunConfig flags;
  CLI::App* sub = nullptr;

  void attach(CLI::App* s) {
    sub = s;
    s->add_option("--config", config_path, "JSON config file");
    s->add_option("--model", flags.model,
                  "model: grm, rm, two_photon, two_mode");
    s->add_option("--gamma", flags.gamma, "mode frequency / ladder slope");
    s->add_option("--mu", flags.mu, "level splitting (grm/rm)");
    s->add_option("--k1", flags.k1, "first coupling (grm/rm)");
    s->add_option("--k2", flags.k2, "second coupling (grm/rm)");
    s->add_option("--q", flags.q, "representation label (ladder models)");
    s->add_option("--delta", flags.delta, "splitting ratio (ladder models)");
    s->add_option("--parity", flags.parity, "restrict to a parity class");
    s->add_option("--count", flags.count, "number of levels");
    s->add_option("--tol", flags.tol, "convergence tolerance");
    s->add_option("--nmax-cap", flags.nmax_cap, "truncation cap");
    s->add_option("--sweep", flags.sweep, "sweep request param:lo:hi:steps");
    s->add_option("--out", flags.out, "output path ('-' = stdout)");
    s->add_option("--format", flags.format, "output format: csv or json");
  }

  RunConfig resolve() const {
    RunConfig cfg;
    if (!config_path.empty()) cfg = load_config(config_path);
    auto used = [&](const char* name) { return sub->count(name) > 0; };
    if (used("--model")) cfg.model = flags.model;
    if (used("--gamma")) cfg.gamma = flags.gamma;
    if (used("--mu")) cfg.mu = flags.mu;
    if (used("--k1")) cfg.k1 = flags.k1;
    if (used("--k2")) cfg.k2 = flags.k2;
    if (used("--q")) cfg.q = flags.q;
    if (used("--delta")) cfg.delta = flags.delta;
    if (used("--parity")) cfg.parity = flags.parity;
    if (used("--count")) cfg.count = flags.count;
    if (used("--tol")) cfg.tol = flags.tol;
    if (used("--nmax-cap")) cfg.nmax_cap = flags.nmax_cap;
    if (used("--sweep")) cfg.sweep = flags.sweep;
    if (used("--out")) cfg.out = flags.out;
    if (used("--format")) cfg.format = flags.format;
    validate_config(cfg);
    return cfg;
  }
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"parity-resolved spectra of reflection-symmetric light-matter "
               "models"};
  app.require_subcommand(1);

  auto* verify = app.add_subcommand(
      "verify-symbolic", "run the exact operator-identity suite");
  bool corrupt = false;
  verify->add_flag("--self-test-corrupt", corrupt)->group("");

  OptionSet spectrum_opts, crossings_opts, invariants_opts, scan_opts;
  auto* spectrum = app.add_subcommand(
      "spectrum", "parity-resolved energy levels of one model");
  spectrum_opts.attach(spectrum);
  auto* crossings = app.add_subcommand(
      "crossings", "level-crossing scan along a parameter sweep");
  crossings_opts.attach(crossings);
  bool breach = false;
  crossings->add_flag("--self-test-breach", breach)->group("");
  auto* invariants = app.add_subcommand(
      "invariants", "conserved-quantity pattern of the lowest levels");
  invariants_opts.attach(invariants);
  auto* scan = app.add_subcommand(
      "scan", "invariant-pattern motion along a coupling ray");
  scan_opts.attach(scan);

  std::vector<const char*> argv;
  argv.push_back("drabi");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 64;
  }

  try {
    if (verify->parsed()) return cmd_verify(corrupt, out);
    if (spectrum->parsed())
      return cmd_spectrum(spectrum_opts.resolve(), out, err);
    if (crossings->parsed())
      return cmd_crossings(crossings_opts.resolve(), breach, out, err);
    if (invariants->parsed())
      return cmd_invariants(invariants_opts.resolve(), out, err);
    if (scan->parsed()) return cmd_scan(scan_opts.resolve(), out, err);
    err << "error: no command given\n";
    return 64;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 64;
  } catch (const ConvergenceFailure& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace drabi::cli
