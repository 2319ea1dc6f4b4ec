#include "wbshift/cli/commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>

#include "wbshift/cli/descriptors.hpp"
#include "wbshift/conjugacy.hpp"
#include "wbshift/dynamics.hpp"
#include "wbshift/kernels.hpp"
#include "wbshift/serialize.hpp"

namespace wbshift::cli {

namespace {

struct Options {
  // classify / profile
  std::string weights;
  std::optional<double> p;
  std::size_t horizon = kDefaultHorizon;
  std::size_t count = 100;
  // conjugate-check
  std::string f;
  std::string g;
  double tol = std::numeric_limits<double>::quiet_NaN();
  std::size_t samples = 100;
  std::size_t max_support = 64;
  double box = 10.0;
  // orbit
  std::string op;
  std::string point;
  std::string escape;
  std::optional<std::size_t> n;
  // apply-map
  std::string h;
  std::string gq;
  std::string diag;
  std::string in;
  bool roundtrip = false;
  // shared
  std::uint64_t seed = kDefaultSeed;
  std::string format = "json";
  std::string out_path;
};

Json envelope(const std::string& command, std::uint64_t seed) {
  Json j;
  j["command"] = command;
  j["version"] = kVersion;
  j["seed"] = seed;
  return j;
}

// Writes to --out when given, otherwise to the command's stdout.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary | std::ios::trunc);
      if (!file_) throw PreconditionError("cannot open output file '" + path + "'");
      stream_ = &file_;
    }
  }
  std::ostream& operator*() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

void emit_json(std::ostream& os, const Json& j) { os << j.dump(2) << '\n'; }

double tolerance_or(double tol, double fallback) {
  if (std::isnan(tol)) return fallback;
  if (!(tol >= 0.0)) throw PreconditionError("--tol must be nonnegative");
  return tol;
}

void check_format(const std::string& fmt) {
  if (fmt != "json" && fmt != "csv") throw PreconditionError("--format must be csv or json");
}

int cmd_classify(const Options& o, std::ostream& out) {
  auto desc = parse_weights(o.weights);
  if (desc.p && o.p && desc.p->value() != *o.p)
    throw PreconditionError("--p disagrees with the exponent in --weights");
  const Exponent p = desc.p ? *desc.p : Exponent{o.p.value_or(2.0)};
  const auto verdict = classify(desc.weights, p, o.horizon);

  Json j = envelope("classify", o.seed);
  j["weights"] = to_json(desc.weights);
  j["p"] = p.value();
  j["cauchy_flat_tolerance"] = kCauchyFlatTolerance;
  const Json body = to_json(verdict);
  for (const auto& [k, v] : body.items()) j[k] = v;
  Sink sink(o.out_path, out);
  emit_json(*sink, j);
  return verdict.confidence == Confidence::Inconclusive ? kInconclusive : kSuccess;
}

int cmd_profile(const Options& o, std::ostream& out) {
  check_format(o.format);
  auto desc = parse_weights(o.weights);
  const auto profile = beta_profile(desc.weights, o.count);
  Sink sink(o.out_path, out);
  if (o.format == "csv") {
    write_csv(*sink, "log_abs_beta", profile, 1);
  } else {
    Json j = envelope("profile", o.seed);
    j["weights"] = to_json(desc.weights);
    j["log_abs_beta"] = profile;
    emit_json(*sink, j);
  }
  return kSuccess;
}

int cmd_conjugate_check(const Options& o, std::ostream& out, std::ostream& err) {
  const auto f = parse_scaled_shift(o.f);
  const auto g = parse_scaled_shift(o.g);
  const double tol = tolerance_or(o.tol, kDefaultConjugacyTolerance);

  Json j = envelope("conjugate-check", o.seed);
  j["f"] = {{"lambda", to_json(f.lambda)}, {"p", f.p.value()}};
  j["g"] = {{"lambda", to_json(g.lambda)}, {"p", g.p.value()}};
  j["chi_f"] = to_int(chi(std::abs(f.lambda)));
  j["chi_g"] = to_int(chi(std::abs(g.lambda)));
  j["tolerance"] = tol;

  std::optional<ConjugacyMap> h;
  try {
    h = build_conjugator(f.lambda, f.p, g.lambda, g.p);
  } catch (const ChiMismatch& e) {
    j["conjugate"] = false;
    j["message"] = e.what();
    Sink sink(o.out_path, out);
    emit_json(*sink, j);
    err << e.what() << '\n';
    return kClassMismatch;
  }

  SampleSpec spec;
  spec.p = f.p;
  spec.count = o.samples;
  spec.max_support = o.max_support;
  spec.box = o.box;
  spec.seed = o.seed;
  const auto report = conjugacy_residual(ShiftOperator::constant(f.lambda, f.p),
                                         ShiftOperator::constant(g.lambda, g.p), *h, spec);
  const bool pass = report.max_residual <= tol;
  j["conjugate"] = true;
  j["conjugator"] = to_json(*h);
  j["pass"] = pass;
  j["report"] = to_json(report);
  Sink sink(o.out_path, out);
  emit_json(*sink, j);
  if (!pass) err << "max residual " << format_double(report.max_residual) << " exceeds tolerance " << tol << '\n';
  return pass ? kSuccess : kToleranceExceeded;
}

int cmd_orbit(const Options& o, std::ostream& out, std::ostream& err) {
  check_format(o.format);
  if (!o.n) throw PreconditionError("--n is required");
  OrbitTrace trace;
  std::size_t first_index = 0;
  if (!o.escape.empty()) {
    if (!o.op.empty() || !o.point.empty()) throw PreconditionError("--escape excludes --op and --point");
    const auto s = parse_scaled_shift(o.escape);
    trace = escape_demo(s.lambda, s.p, *o.n);
    trace.operator_label = o.escape;
    trace.start_label = "e_n";
    first_index = 1;
  } else {
    if (o.op.empty() || o.point.empty()) throw PreconditionError("--op and --point are required");
    const auto T = parse_operator(o.op, Exponent{2.0});
    const auto x = parse_point(o.point, T.p, o.seed);
    trace = orbit_norms(T, x, *o.n);
    trace.operator_label = o.op;
    trace.start_label = o.point;
    if (trace.truncated) {
      if (point_is_truncation(o.point)) {
        err << "orbit: --n " << *o.n << " exceeds the validity window " << trace.valid_horizon
            << " (support length of the truncated start point)\n";
        return kUsageError;
      }
      // Past the support every iterate of a finitely supported point is exactly 0.
      trace.norms.resize(*o.n + 1, 0.0);
      trace.truncated = false;
    }
  }

  Sink sink(o.out_path, out);
  if (o.format == "csv") {
    write_csv(*sink, "norm", trace.norms, first_index);
  } else {
    Json j = envelope("orbit", o.seed);
    const Json body = to_json(trace);
    for (const auto& [k, v] : body.items()) j[k] = v;
    if (first_index == 0 && trace.norms.size() > 1)
      j["min_norm_after_start"] = *std::min_element(trace.norms.begin() + 1, trace.norms.end());
    emit_json(*sink, j);
  }
  return kSuccess;
}

int cmd_apply_map(const Options& o, std::ostream& out, std::ostream& err) {
  const int chosen = !o.h.empty() + !o.gq.empty() + !o.diag.empty();
  if (chosen != 1) throw PreconditionError("give exactly one of --h, --g, --diag");
  if (o.in.empty()) throw PreconditionError("--in is required");

  std::ifstream in(o.in);
  if (!in) throw PreconditionError("cannot open '" + o.in + "'");
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw PreconditionError(std::string("cannot parse '") + o.in + "': " + e.what());
  }
  const auto x = vector_from_json(doc);

  auto map = ConjugacyMap::identity(x.exponent());
  if (!o.h.empty())
    map.then(HStep{x.exponent(), parse_real(parse_keyed(o.h, "s"))});
  else if (!o.gq.empty())
    map.then(GStep{x.exponent(), Exponent{parse_real(parse_keyed(o.gq, "q"))}});
  else
    map.then(DiagStep{parse_complex(parse_keyed(o.diag, "ratio"))});

  const auto image = map(x);
  if (!o.out_path.empty()) {
    Sink file(o.out_path, out);
    emit_json(*file, to_json(image));
  }
  if (!o.roundtrip) {
    if (o.out_path.empty()) emit_json(out, to_json(image));
    return kSuccess;
  }

  const double tol = tolerance_or(o.tol, kDefaultConjugacyTolerance);
  const auto back = map.inverse()(image);
  const double abs_dev = kernels::max_abs_deviation(back, x);
  const double rel_dev = kernels::relative_deviation(back, x);
  Json j = envelope("apply-map", o.seed);
  j["map"] = to_json(map);
  j["image"] = to_json(image);
  j["roundtrip"] = {{"max_abs_deviation", abs_dev},
                    {"max_rel_deviation", rel_dev},
                    {"tolerance", tol},
                    {"pass", rel_dev <= tol}};
  emit_json(out, j);
  if (rel_dev > tol) {
    err << "round-trip deviation " << format_double(rel_dev) << " exceeds tolerance " << tol << '\n';
    return kToleranceExceeded;
  }
  return kSuccess;
}

// Turns a JSON config object into flags. "command" names the subcommand.
std::vector<std::string> expand_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open config '" + path + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw PreconditionError("cannot parse config '" + path + "': " + e.what());
  }
  if (!j.is_object()) throw PreconditionError("config must be a JSON object");
  std::vector<std::string> args;
  if (auto it = j.find("command"); it != j.end()) {
    if (!it->is_string()) throw PreconditionError("config 'command' must be a string");
    args.push_back(it->get<std::string>());
  }
  for (const auto& [key, value] : j.items()) {
    if (key == "command") continue;
    const std::string flag = "--" + key;
    if (value.is_boolean()) {
      if (value.get<bool>()) args.push_back(flag);
    } else if (value.is_string()) {
      args.push_back(flag);
      args.push_back(value.get<std::string>());
    } else if (value.is_number_integer() || value.is_number_unsigned()) {
      args.push_back(flag);
      args.push_back(value.dump());
    } else if (value.is_number()) {
      args.push_back(flag);
      args.push_back(format_double(value.get<double>()));
    } else {
      throw PreconditionError("config field '" + key + "' must be a string, number or boolean");
    }
  }
  return args;
}

}  // namespace

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  // Layout: subcommand, config-file flags, command-line flags (later flags win).
  std::string subcommand;
  std::vector<std::string> config_flags;
  std::vector<std::string> flags;
  try {
    for (std::size_t i = 0; i < raw_args.size(); ++i) {
      const auto& a = raw_args[i];
      if (a == "--config") {
        if (i + 1 == raw_args.size()) throw PreconditionError("--config needs a path");
        auto expanded = expand_config(raw_args[++i]);
        if (!expanded.empty() && expanded[0].rfind("--", 0) != 0) {
          if (subcommand.empty()) subcommand = expanded[0];
          expanded.erase(expanded.begin());
        }
        config_flags.insert(config_flags.end(), expanded.begin(), expanded.end());
      } else if (i == 0 && a.rfind("-", 0) != 0) {
        subcommand = a;
      } else {
        flags.push_back(a);
      }
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  std::vector<std::string> args;
  if (!subcommand.empty()) args.push_back(subcommand);
  args.insert(args.end(), config_flags.begin(), config_flags.end());
  args.insert(args.end(), flags.begin(), flags.end());

  Options o;
  CLI::App app{"Weighted backward shift laboratory"};
  app.require_subcommand(1);
  app.set_help_flag("--help", "Print this help message and exit");
  app.set_help_all_flag("--help-all");
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

  auto* classify_cmd = app.add_subcommand("classify", "Dynamical class of a weighted shift");
  classify_cmd->add_option("--weights", o.weights, "Weight descriptor")->required();
  classify_cmd->add_option("--p", o.p, "Exponent of l^p (default 2)");
  classify_cmd->add_option("--horizon", o.horizon, "Number of beta(n) terms examined");

  auto* profile_cmd = app.add_subcommand("profile", "log|beta(n)| for n = 1..N");
  profile_cmd->add_option("--weights", o.weights, "Weight descriptor")->required();
  profile_cmd->add_option("--n", o.count, "Number of terms");

  auto* conj_cmd = app.add_subcommand("conjugate-check", "Build a conjugator and measure its residual");
  conj_cmd->add_option("--f", o.f, "Source shift <lambda>:<p>")->required();
  conj_cmd->add_option("--g", o.g, "Target shift <omega>:<q>")->required();
  conj_cmd->add_option("--tol", o.tol, "Residual tolerance (default 1e-9)");
  conj_cmd->add_option("--samples", o.samples, "Number of random samples");
  conj_cmd->add_option("--max-support", o.max_support, "Largest sample support length");
  conj_cmd->add_option("--box", o.box, "Coordinate box half-width");

  auto* orbit_cmd = app.add_subcommand("orbit", "Norms along an orbit");
  orbit_cmd->add_option("--op", o.op, "Operator descriptor");
  orbit_cmd->add_option("--point", o.point, "Start point descriptor");
  orbit_cmd->add_option("--escape", o.escape, "Escape/decay demo for <lambda>:<p>");
  orbit_cmd->add_option("--n", o.n, "Number of iterates");

  auto* map_cmd = app.add_subcommand("apply-map", "Apply a homeomorphism to a JSON vector");
  map_cmd->add_option("--h", o.h, "Tail-norm map, s=<value>");
  map_cmd->add_option("--g", o.gq, "Exponent-change map, q=<value>");
  map_cmd->add_option("--diag", o.diag, "Diagonal map, ratio=<re[,im]>");
  map_cmd->add_option("--in", o.in, "Input vector file");
  map_cmd->add_flag("--roundtrip", o.roundtrip, "Apply the inverse and report the deviation");
  map_cmd->add_option("--tol", o.tol, "Round-trip tolerance (default 1e-9)");

  for (auto* sub : {classify_cmd, profile_cmd, conj_cmd, orbit_cmd, map_cmd}) {
    sub->add_option("--seed", o.seed, "Random seed");
    sub->add_option("--out", o.out_path, "Output file (default stdout)");
    if (sub == profile_cmd || sub == orbit_cmd) sub->add_option("--format", o.format, "csv or json");
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    if (classify_cmd->parsed()) return cmd_classify(o, out);
    if (profile_cmd->parsed()) return cmd_profile(o, out);
    if (conj_cmd->parsed()) return cmd_conjugate_check(o, out, err);
    if (orbit_cmd->parsed()) return cmd_orbit(o, out, err);
    if (map_cmd->parsed()) return cmd_apply_map(o, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace wbshift::cli
