// Copyright 2026 The gausskit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <limits>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "gausskit/gausskit.hpp"

namespace gausskit::cli {

enum ExitCode : int { kOk = 0, kFailure = 1, kUsage = 2, kParse = 3, kCapacity = 4 };

/// A circuit file that parses but breaks a structural invariant.
class InvalidCircuit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Family { Phase, Exponential, HalfGaussian, Gaussian, Gaussian2d };

/// --alpha: a number, "1-<x>" for bases within x of one, or "xh" to tie alpha
/// to delta through the bottom rotation's distance from XH.
struct AlphaArg {
  enum class Kind { None, Value, XhCoupled };
  Kind kind = Kind::None;
  ExpBase base;

  static AlphaArg parse(const std::string& text) {
    AlphaArg a;
    if (text == "xh") {
      a.kind = Kind::XhCoupled;
      return a;
    }
    a.kind = Kind::Value;
    if (text.rfind("1-", 0) == 0) {
      const double gap = parse_real(text.substr(2), "--alpha");
      if (!(gap > 0.0 && gap < 1.0)) throw ParameterError("--alpha 1-x needs x in (0,1)");
      a.base = ExpBase::from_log(std::log1p(-gap));
    } else {
      a.base = ExpBase::from_alpha(parse_real(text, "--alpha"));
    }
    return a;
  }

  static double parse_real(const std::string& text, const char* flag) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(text, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != text.size()) {
      throw ParameterError(std::string(flag) + ": not a number: '" + text + "'");
    }
    return v;
  }
};

/// Everything needed to evaluate one configuration.
struct PointParams {
  Family family = Family::Gaussian;
  std::optional<std::size_t> n;  // x register for gaussian2d
  std::size_t ny = 0;
  AlphaArg alpha;
  std::optional<double> beta;
  double delta = 0.0;
  std::optional<double> epsilon;  // target; delta is then searched
  int degree = 1;
  QuadraticForm q;
  bool layered = false;
  LayerOrder order = LayerOrder::Optimal;
  Allocation alloc = Allocation::TwoToOne;
  IdealKind ideal = IdealKind::Finite;
  CostRounding rounding = CostRounding::Real;
};

/// One CSV row, plus the per-layer detail shown in text reports.
struct Row {
  std::size_t n_qubits = 0;
  double alpha_or_beta = 0.0;
  double delta = 0.0;
  double epsilon = std::numeric_limits<double>::quiet_NaN();
  double gamma = std::numeric_limits<double>::quiet_NaN();
  double expected_t_depth = std::numeric_limits<double>::quiet_NaN();
  std::size_t layer_count = 0;
  std::uint64_t seed = 0;
  std::vector<double> layer_probs;
  std::string note;
};

inline constexpr const char* kCsvHeader =
    "n_qubits,alpha_or_beta,delta,epsilon,gamma,expected_t_depth,layer_count,seed";

inline std::string fmt(double v, const char* spec = "%.17g") {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

inline std::string csv_row(const Row& r) {
  std::ostringstream os;
  os << r.n_qubits << ',' << fmt(r.alpha_or_beta) << ',' << fmt(r.delta) << ','
     << fmt(r.epsilon) << ',' << fmt(r.gamma) << ',' << fmt(r.expected_t_depth) << ','
     << r.layer_count << ',' << r.seed;
  return os.str();
}

inline void write_report(std::ostream& os, const Row& r) {
  os << "data qubits       " << r.n_qubits << '\n'
     << "alpha_or_beta     " << fmt(r.alpha_or_beta) << '\n'
     << "delta             " << fmt(r.delta, "%.6g") << '\n'
     << "epsilon           " << fmt(r.epsilon, "%.6g") << '\n'
     << "gamma             " << fmt(r.gamma, "%.12g") << '\n'
     << "layers            " << r.layer_count << '\n'
     << "layer probs      ";
  for (double p : r.layer_probs) os << ' ' << fmt(p, "%.9g");
  os << '\n' << "expected T-depth  " << fmt(r.expected_t_depth, "%.6g") << '\n'
     << "seed              " << r.seed << '\n';
  if (!r.note.empty()) os << "note              " << r.note << '\n';
}

namespace detail {

inline CostModel model_for(const PointParams& p) {
  CostModel m;
  m.rounding = p.rounding;
  return m;
}

inline std::size_t require_n(const PointParams& p) {
  if (!p.n) throw ParameterError("--n is required for this family");
  return *p.n;
}

inline const ExpBase& require_value(const PointParams& p) {
  if (p.alpha.kind != AlphaArg::Kind::Value) throw ParameterError("--alpha is required");
  return p.alpha.base;
}

/// Window base of a Gaussian point at gate error delta.
inline ExpBase gaussian_alpha(const PointParams& p, double delta) {
  if (p.beta) {
    if (p.alpha.kind != AlphaArg::Kind::None) {
      throw ParameterError("--alpha and --beta are exclusive");
    }
    return GaussianSpec::from_beta(*p.beta, require_n(p), 0.25).alpha;
  }
  switch (p.alpha.kind) {
    case AlphaArg::Kind::XhCoupled:
      if (!(delta > 0.0)) throw ParameterError("--alpha xh needs a positive --delta");
      return alpha_for_xh_distance(delta);
    case AlphaArg::Kind::Value:
      p.alpha.base.require_window();
      return p.alpha.base;
    case AlphaArg::Kind::None:
      break;
  }
  throw ParameterError("a Gaussian needs --alpha or --beta");
}

inline GaussianSpec gaussian_spec(const PointParams& p, double delta) {
  const ExpBase alpha = gaussian_alpha(p, delta);
  if (p.beta) {
    GaussianSpec s = GaussianSpec::from_beta(*p.beta, require_n(p), delta);
    return s;
  }
  if (p.n) {
    GaussianSpec s;
    s.alpha = alpha;
    s.n_qubits = *p.n;
    s.gate_error = delta;
    s.check();
    return s;
  }
  return spec_at_threshold(alpha, delta);
}

/// Register width a point will need, for memory planning.
inline std::size_t planned_qubits(const PointParams& p) {
  switch (p.family) {
    case Family::Gaussian2d:
      return require_n(p) + p.ny;
    case Family::Gaussian: {
      if (p.n) return *p.n;
      // A target epsilon is met at some delta above epsilon / 100.
      const double delta = p.epsilon ? *p.epsilon / 100.0 : p.delta;
      if (!(delta > 0.0)) throw ParameterError("--n is required when --delta is 0");
      return static_cast<std::size_t>(qubit_threshold(gaussian_alpha(p, delta), delta));
    }
    default:
      return require_n(p);
  }
}

inline Row from_estimate(const Estimate& e, const PointParams& p) {
  Row r;
  r.n_qubits = e.report.data_qubit_count;
  r.alpha_or_beta = p.beta ? *p.beta : e.circuit.alpha().value();
  r.delta = e.budget.delta_gate;
  r.epsilon = e.report.l2_error;
  r.gamma = e.report.subnormalization;
  r.expected_t_depth = e.report.expected_t_depth;
  r.layer_count = e.layer_count();
  r.layer_probs = e.report.layer_probs;
  if (e.pruned_gates > 0) r.note = std::to_string(e.pruned_gates) + " rotations pruned";
  return r;
}

inline Row evaluate_gaussian(const PointParams& p, std::uint64_t seed) {
  EstimateOptions opt;
  opt.order = p.order;
  opt.alloc = p.alloc;
  opt.ideal = p.ideal;
  opt.model = model_for(p);
  opt.seed = seed;
  if (p.epsilon) {
    return from_estimate(
        estimate_for_epsilon([&](double d) { return gaussian_spec(p, d); }, *p.epsilon, opt), p);
  }
  if (p.delta > 0.0) return from_estimate(estimate(gaussian_spec(p, p.delta), opt), p);

  // Noiseless: no synthesis accuracy, so no T-depth.
  GaussianSpec spec;
  spec.alpha = gaussian_alpha(p, 0.0);
  spec.n_qubits = require_n(p);
  const LayeredCircuit lc = build_layered_gaussian(spec);
  const SimResult sim = simulate_postselected(lc);
  Row r;
  r.n_qubits = spec.n_qubits;
  r.alpha_or_beta = p.beta ? *p.beta : spec.alpha.value();
  r.epsilon = l2_error(ideal_gaussian(spec.n_qubits, spec.alpha, p.ideal), sim.state);
  r.gamma = sim.report.subnormalization;
  r.layer_count = lc.layers.size();
  r.layer_probs = sim.report.layer_probs;
  return r;
}

/// Noisy post-selected run of a flat circuit against `ideal`, with the
/// barrier-segmented expected T-depth when the gates have a cost model.
inline Row evaluate_flat(const Circuit& c, const StateVector& ideal, double delta,
                         const PointParams& p, std::uint64_t seed, bool costed) {
  Row r;
  r.n_qubits = c.data_qubits;
  r.alpha_or_beta = c.alpha.value();
  r.delta = delta;
  r.seed = seed;
  GateOverrides noise;
  ErrorBudget budget;
  if (delta > 0.0) {
    budget = ErrorBudget::make(delta, p.alloc);
    Rng rng(seed);
    noise = draw_noise(c, budget, rng);
  }
  SimResult sim;
  try {
    sim = simulate_postselected(c, noise);
  } catch (const CapacityError&) {
    throw;
  } catch (const ParameterError&) {
    sim = simulate_exact(c, noise);
  }
  r.epsilon = l2_error(ideal, sim.state);
  r.gamma = sim.report.subnormalization;
  r.layer_probs = sim.report.layer_probs;
  r.layer_count = r.layer_probs.size();
  if (delta > 0.0 && costed) {
    try {
      r.expected_t_depth =
          segment_t_depths(c, budget, model_for(p)).expected(sim.report.layer_probs);
    } catch (const UnsupportedDegreeError& e) {
      r.note = e.what();
    }
  }
  return r;
}

inline Circuit build_flat(const PointParams& p) {
  switch (p.family) {
    case Family::Phase:
      return build_poly_phase(require_n(p), require_value(p).value(), p.degree);
    case Family::Exponential:
      return build_exponential(require_n(p), require_value(p).value());
    case Family::HalfGaussian:
      return build_half_gaussian(require_n(p), require_value(p));
    case Family::Gaussian2d:
      return build_gaussian_2d(require_n(p), p.ny, p.q, require_value(p));
    case Family::Gaussian: {
      const GaussianSpec spec = gaussian_spec(p, p.delta > 0.0 ? p.delta : 0.25);
      if (p.layered) return flatten(build_layered_gaussian(spec));
      return build_full_gaussian(spec.n_qubits, spec.alpha);
    }
  }
  throw ParameterError("unknown family");
}

inline StateVector ideal_for(const PointParams& p) {
  switch (p.family) {
    case Family::Phase:
      return ideal_phase_state(require_n(p), require_value(p).value(), p.degree);
    case Family::Exponential:
      return ideal_exponential(require_n(p), require_value(p));
    case Family::HalfGaussian:
      return ideal_half_gaussian(require_n(p), require_value(p));
    case Family::Gaussian2d:
      return ideal_gaussian_2d(require_n(p), p.ny, p.q, require_value(p));
    case Family::Gaussian:
      break;
  }
  throw ParameterError("no flat ideal for this family");
}

}  // namespace detail

/// Evaluates one configuration. Gaussians go through the layered estimate
/// pipeline; the other families are simulated as built.
inline Row evaluate(const PointParams& p, std::uint64_t seed) {
  if (p.family == Family::Gaussian) {
    Row r = detail::evaluate_gaussian(p, seed);
    r.seed = seed;
    return r;
  }
  if (p.epsilon) throw ParameterError("--epsilon targets apply to the gaussian family only");
  // Degree >= 3 phases use multi-controlled Z rotations, which have no cost model.
  const bool costed = !(p.family == Family::Phase && p.degree >= 3);
  Row r = detail::evaluate_flat(detail::build_flat(p), detail::ideal_for(p), p.delta, p, seed,
                                costed);
  if (!costed && p.delta > 0.0) r.note = "resource estimate refused for phase degree >= 3";
  return r;
}

/// One sweep axis: name:min:max:points[:log|lin].
struct Axis {
  std::string name;
  double min = 0.0;
  double max = 0.0;
  std::size_t points = 1;
  bool log = false;

  static Axis parse(const std::string& text) {
    std::vector<std::string> f;
    std::stringstream ss(text);
    for (std::string part; std::getline(ss, part, ':');) f.push_back(part);
    if (f.size() != 4 && f.size() != 5) {
      throw ParameterError("--axis expects name:min:max:points[:log|lin], got '" + text + "'");
    }
    static const std::vector<std::string> names{"delta", "epsilon", "alpha",
                                                "one_minus_alpha", "beta", "n"};
    Axis a;
    a.name = f[0];
    if (std::find(names.begin(), names.end(), a.name) == names.end()) {
      throw ParameterError("unknown axis '" + a.name + "'");
    }
    a.min = AlphaArg::parse_real(f[1], "--axis");
    a.max = AlphaArg::parse_real(f[2], "--axis");
    const double pts = AlphaArg::parse_real(f[3], "--axis");
    if (!(pts >= 1.0) || pts != std::floor(pts)) throw ParameterError("axis needs >= 1 point");
    a.points = static_cast<std::size_t>(pts);
    if (f.size() == 5) {
      if (f[4] != "log" && f[4] != "lin") throw ParameterError("axis scale must be log or lin");
      a.log = f[4] == "log";
    }
    if (a.log && !(a.min > 0.0 && a.max > 0.0)) {
      throw ParameterError("log axis needs positive bounds");
    }
    return a;
  }

  double value(std::size_t i) const {
    if (points == 1) return min;
    const double t = static_cast<double>(i) / static_cast<double>(points - 1);
    if (log) return std::exp(std::log(min) + t * (std::log(max) - std::log(min)));
    return min + t * (max - min);
  }

  void apply(PointParams& p, double v) const {
    if (name == "delta") {
      p.delta = v;
    } else if (name == "epsilon") {
      p.epsilon = v;
    } else if (name == "alpha") {
      p.alpha.kind = AlphaArg::Kind::Value;
      p.alpha.base = ExpBase::from_alpha(v);
    } else if (name == "one_minus_alpha") {
      if (!(v > 0.0 && v < 1.0)) throw ParameterError("one_minus_alpha must lie in (0,1)");
      p.alpha.kind = AlphaArg::Kind::Value;
      p.alpha.base = ExpBase::from_log(std::log1p(-v));
    } else if (name == "beta") {
      p.beta = v;
    } else {
      p.n = static_cast<std::size_t>(std::llround(v));
    }
  }
};

struct SweepSpec {
  std::vector<Axis> axes;  // first axis outermost
  PointParams fixed;
  std::size_t trials = 1;
  std::uint64_t seed = 0;
  std::size_t threads = 1;

  std::size_t grid_size() const {
    std::size_t g = 1;
    for (const Axis& a : axes) g *= a.points;
    return g;
  }

  PointParams point(std::size_t g) const {
    PointParams p = fixed;
    for (std::size_t k = axes.size(); k-- > 0;) {
      axes[k].apply(p, axes[k].value(g % axes[k].points));
      g /= axes[k].points;
    }
    return p;
  }
};

/// Working set of one point: state, ideal and a noiseless copy.
inline std::size_t point_bytes(std::size_t n) { return 3 * state_bytes(n); }

/// Refuses grids whose concurrent working set exceeds the memory budget.
inline void check_sweep_memory(const SweepSpec& s) {
  std::size_t widest = 0;
  for (std::size_t g = 0; g < s.grid_size(); ++g) {
    widest = std::max(widest, detail::planned_qubits(s.point(g)));
  }
  const std::size_t limit = memory_limit_bytes();
  std::size_t fit_n = 0;
  while (fit_n < kMaxSimulatedQubits && point_bytes(fit_n + 1) <= limit) ++fit_n;
  if (widest > fit_n) {
    throw CapacityError("sweep needs " + std::to_string(widest) +
                        " qubits; the memory budget allows at most " + std::to_string(fit_n) +
                        " (raise GAUSSKIT_MEM_LIMIT_MB or cap --n)");
  }
  const std::size_t per = point_bytes(widest);
  const std::size_t threads = std::max<std::size_t>(1, s.threads);
  if (per * threads > limit) {
    throw CapacityError("sweep needs " + std::to_string((per * threads) >> 20) + " MB with " +
                        std::to_string(threads) + " threads; use --threads " +
                        std::to_string(std::max<std::size_t>(1, limit / per)) +
                        " or raise GAUSSKIT_MEM_LIMIT_MB");
  }
}

/// Rows in grid order, trials innermost. Row i uses seed ^ i, so the output
/// does not depend on the thread count.
inline std::vector<Row> run_sweep(const SweepSpec& s) {
  if (s.axes.size() > 2) throw ParameterError("at most two sweep axes");
  if (s.trials < 1) throw ParameterError("--trials must be at least 1");
  check_sweep_memory(s);
  const std::size_t total = s.grid_size() * s.trials;
  std::vector<Row> rows(total);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i; (i = next++) < total;) {
      try {
        rows[i] = evaluate(s.point(i / s.trials), s.seed ^ static_cast<std::uint64_t>(i));
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = total;
      }
    }
  };
  const std::size_t threads = std::clamp<std::size_t>(s.threads, 1, total);
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return rows;
}

namespace detail {

struct Flags {
  std::string family = "gaussian";
  std::string n;
  std::string alpha;
  std::optional<double> beta;
  double delta = 0.0;
  std::optional<double> epsilon;
  int degree = 1;
  bool layered = false;
  std::string q = "1,0,1";
  std::uint64_t seed = 0;
  std::size_t trials = 1;
  std::size_t threads = 1;
  std::string out;
  std::string ideal = "finite";
  std::string order = "optimal";
  std::string alloc = "2to1";
  std::string rounding = "real";
  std::vector<std::string> axes;
  std::string circuit;
};

inline void add_common(CLI::App& app, Flags& f) {
  app.add_option("--family", f.family, "phase|exponential|half-gaussian|gaussian|gaussian2d")
      ->check(CLI::IsMember({"phase", "exponential", "half-gaussian", "gaussian", "gaussian2d"}));
  app.add_option("--n", f.n, "data qubits (nx,ny for gaussian2d)");
  app.add_option("--alpha", f.alpha, "base: a number, 1-<x>, or xh");
  app.add_option("--beta", f.beta, "fixed-window parameter");
  app.add_option("--delta", f.delta, "gate synthesis error (0 = noiseless)");
  app.add_option("--epsilon", f.epsilon, "target state error; delta is searched");
  app.add_option("--d", f.degree, "phase degree");
  app.add_flag("--layered", f.layered, "emit the layered Gaussian");
  app.add_option("--q", f.q, "quadratic form coefficients of x^2, xy, y^2");
  app.add_option("--seed", f.seed, "noise seed");
  app.add_option("--trials", f.trials, "rows per sweep point");
  app.add_option("--threads", f.threads, "sweep worker threads");
  app.add_option("--out", f.out, "output file");
  app.add_option("--ideal", f.ideal)->check(CLI::IsMember({"finite", "infinite"}));
  app.add_option("--order", f.order)->check(CLI::IsMember({"optimal", "random", "identity"}));
  app.add_option("--alloc", f.alloc)->check(CLI::IsMember({"uniform", "2to1"}));
  app.add_option("--cost-rounding", f.rounding)->check(CLI::IsMember({"real", "ceil"}));
}

inline std::vector<std::int64_t> parse_ints(const std::string& text, const char* flag) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  for (std::string part; std::getline(ss, part, ',');) {
    const double v = AlphaArg::parse_real(part, flag);
    if (v != std::floor(v)) throw ParameterError(std::string(flag) + " takes integers");
    out.push_back(static_cast<std::int64_t>(v));
  }
  return out;
}

inline PointParams to_params(const Flags& f) {
  static const std::map<std::string, Family> families{
      {"phase", Family::Phase},
      {"exponential", Family::Exponential},
      {"half-gaussian", Family::HalfGaussian},
      {"gaussian", Family::Gaussian},
      {"gaussian2d", Family::Gaussian2d}};
  PointParams p;
  p.family = families.at(f.family);
  if (!f.n.empty()) {
    const std::vector<std::int64_t> n = parse_ints(f.n, "--n");
    const std::size_t want = p.family == Family::Gaussian2d ? 2 : 1;
    if (n.size() != want) {
      throw ParameterError(want == 2 ? "--n expects nx,ny" : "--n expects one count");
    }
    for (std::int64_t v : n)
      if (v < 1) throw ParameterError("--n must be positive");
    p.n = static_cast<std::size_t>(n[0]);
    if (want == 2) p.ny = static_cast<std::size_t>(n[1]);
  }
  if (!f.alpha.empty()) p.alpha = AlphaArg::parse(f.alpha);
  p.beta = f.beta;
  if (!(f.delta >= 0.0 && f.delta < 0.5)) throw ParameterError("--delta must lie in [0, 0.5)");
  p.delta = f.delta;
  p.epsilon = f.epsilon;
  p.degree = f.degree;
  p.layered = f.layered;
  const std::vector<std::int64_t> q = parse_ints(f.q, "--q");
  if (q.size() != 3) throw ParameterError("--q expects a,b,c");
  p.q = {q[0], q[1], q[2]};
  p.order = f.order == "optimal"  ? LayerOrder::Optimal
            : f.order == "random" ? LayerOrder::Random
                                  : LayerOrder::Identity;
  p.alloc = f.alloc == "uniform" ? Allocation::Uniform : Allocation::TwoToOne;
  p.ideal = f.ideal == "infinite" ? IdealKind::Infinite : IdealKind::Finite;
  p.rounding = f.rounding == "ceil" ? CostRounding::Ceil : CostRounding::Real;
  return p;
}

/// Writes to --out when given, else to `out`.
inline void emit(const std::string& path, std::ostream& out, const std::string& text) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw std::runtime_error("cannot open " + path + " for writing");
  file << text;
}

inline int cmd_generate(const Flags& f, std::ostream& out) {
  const PointParams p = to_params(f);
  if (p.layered && p.family != Family::Gaussian) {
    throw ParameterError("--layered applies to the gaussian family only");
  }
  emit(f.out, out, to_text(build_flat(p)));
  return kOk;
}

inline Circuit read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  Circuit c = read_circuit(in);
  const std::vector<Violation> v = validate(c);
  if (!v.empty()) {
    throw InvalidCircuit("element " + std::to_string(v.front().element) + ": " +
                         v.front().message);
  }
  return c;
}

inline int cmd_simulate(const Flags& f, std::ostream& out) {
  Row r;
  if (!f.circuit.empty()) {
    // A circuit file has no closed form attached; epsilon is measured
    // against its own noiseless run.
    const Circuit c = read_file(f.circuit);
    const PointParams p = to_params(f);
    SimResult ideal;
    try {
      ideal = simulate_postselected(c);
    } catch (const CapacityError&) {
      throw;
    } catch (const ParameterError&) {
      ideal = simulate_exact(c);
    }
    r = evaluate_flat(c, ideal.state, p.delta, p, f.seed, true);
  } else {
    r = evaluate(to_params(f), f.seed);
  }
  write_report(out, r);
  if (!f.out.empty()) emit(f.out, out, std::string(kCsvHeader) + "\n" + csv_row(r) + "\n");
  return kOk;
}

inline int cmd_sweep(const Flags& f, std::ostream& out) {
  SweepSpec s;
  for (const std::string& a : f.axes) s.axes.push_back(Axis::parse(a));
  if (s.axes.empty()) throw ParameterError("sweep needs at least one --axis");
  if (s.axes.size() > 2) throw ParameterError("at most two sweep axes");
  s.fixed = to_params(f);
  s.trials = f.trials;
  s.seed = f.seed;
  s.threads = f.threads;
  std::string text = std::string(kCsvHeader) + "\n";
  for (const Row& r : run_sweep(s)) text += csv_row(r) + "\n";
  emit(f.out, out, text);
  return kOk;
}

}  // namespace detail

/// Entry point shared by the executable and the tests.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Gaussian state preparation: circuits, simulation and resource estimates"};
  app.require_subcommand(1);
  detail::Flags gen, sim, sweep;
  CLI::App* g = app.add_subcommand("generate", "write a circuit in the text format");
  detail::add_common(*g, gen);
  CLI::App* s = app.add_subcommand("simulate", "simulate one configuration or circuit file");
  detail::add_common(*s, sim);
  s->add_option("--circuit", sim.circuit, "circuit file to simulate");
  CLI::App* w = app.add_subcommand("sweep", "CSV over a one- or two-axis grid");
  detail::add_common(*w, sweep);
  w->add_option("--axis", sweep.axes, "name:min:max:points[:log|lin]")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (g->parsed()) return detail::cmd_generate(gen, out);
    if (s->parsed()) return detail::cmd_simulate(sim, out);
    return detail::cmd_sweep(sweep, out);
  } catch (const gausskit::ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const InvalidCircuit& e) {
    err << "invalid circuit: " << e.what() << '\n';
    return kParse;
  } catch (const CapacityError& e) {
    err << "capacity: " << e.what() << '\n';
    return kCapacity;
  } catch (const SaturationError& e) {
    err << "capacity: " << e.what() << '\n';
    return kCapacity;
  } catch (const std::invalid_argument& e) {
    err << "usage: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
}

}  // namespace gausskit::cli
