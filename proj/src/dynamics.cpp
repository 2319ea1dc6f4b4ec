#include "wbshift/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace wbshift {

std::string to_string(DynamicsLabel label) {
  switch (label) {
    case DynamicsLabel::Chaotic: return "Chaotic";
    case DynamicsLabel::MixingNotChaotic: return "MixingNotChaotic";
    case DynamicsLabel::TransitiveNotMixing: return "TransitiveNotMixing";
    case DynamicsLabel::NotTransitive: return "NotTransitive";
  }
  return "?";
}

std::string to_string(Confidence confidence) {
  switch (confidence) {
    case Confidence::Analytic: return "Analytic";
    case Confidence::NumericEvidence: return "NumericEvidence";
    case Confidence::Inconclusive: return "Inconclusive";
  }
  return "?";
}

std::vector<double> beta_profile(const WeightSequence& w, std::size_t n) {
  if (n == 0) throw PreconditionError("beta_profile: N must be at least 1");
  std::vector<double> out(n);
  CompensatedSum sum;
  for (std::size_t i = 1; i <= n; ++i) {
    sum.add(w.log_abs_at(i));
    out[i - 1] = sum.value();
  }
  return out;
}

VerdictEvidence collect_evidence(std::span<const double> log_beta, double p) {
  const std::size_t H = log_beta.size();
  if (H < 2) throw PreconditionError("evidence needs at least two profile entries");
  VerdictEvidence ev;
  ev.window = std::min(H, static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(H)))));

  auto min_max = [&](std::size_t lo, std::size_t hi) {
    const auto [mn, mx] = std::minmax_element(log_beta.begin() + lo, log_beta.begin() + hi);
    return std::pair{*mn, *mx};
  };
  std::tie(ev.head_min_log_beta, ev.head_max_log_beta) = min_max(0, H / 2);
  std::tie(ev.tail_min_log_beta, ev.tail_max_log_beta) = min_max(H / 2, H);
  std::tie(ev.window_min_log_beta, ev.window_max_log_beta) = min_max(H - ev.window, H);

  // log-sum-exp of -p log|beta(n)|
  double top = -std::numeric_limits<double>::infinity();
  for (double lb : log_beta) top = std::max(top, -p * lb);
  CompensatedSum scaled;
  for (double lb : log_beta) scaled.add(std::exp(-p * lb - top));
  ev.log_inverse_power_sum = top + std::log(scaled.value());

  CompensatedSum decade;
  for (std::size_t i = H / 10; i < H; ++i) decade.add(std::exp(-p * log_beta[i]));
  ev.decade_increment = decade.value();
  return ev;
}

DynamicsVerdict numeric_verdict(std::span<const double> log_beta, double p) {
  DynamicsVerdict v;
  v.horizon = log_beta.size();
  v.evidence = collect_evidence(log_beta, p);
  const auto& ev = v.evidence;

  const bool floor_rising = ev.tail_min_log_beta > ev.head_min_log_beta &&
                            ev.window_min_log_beta > ev.tail_min_log_beta &&
                            ev.window_min_log_beta > ev.head_max_log_beta;
  const bool ceiling_rising = ev.tail_max_log_beta > ev.head_max_log_beta + std::numbers::ln2;
  const bool ceiling_bounded = ev.tail_max_log_beta <= ev.head_max_log_beta + 1e-9;

  v.confidence = Confidence::NumericEvidence;
  if (floor_rising && ev.decade_increment < kCauchyFlatTolerance) {
    v.label = DynamicsLabel::Chaotic;
  } else if (floor_rising) {
    v.label = DynamicsLabel::MixingNotChaotic;
  } else if (ceiling_rising) {
    v.label = DynamicsLabel::TransitiveNotMixing;
  } else if (ceiling_bounded) {
    v.label = DynamicsLabel::NotTransitive;
  } else {
    v.label = DynamicsLabel::NotTransitive;
    v.confidence = Confidence::Inconclusive;
  }
  return v;
}

namespace {

DynamicsLabel analytic_label(const WeightSequence::Generator& gen, double p) {
  struct {
    double p;
    DynamicsLabel operator()(const ConstantWeights& g) const {
      // beta(n) = lambda^n
      return std::abs(g.lambda) > 1.0 ? DynamicsLabel::Chaotic : DynamicsLabel::NotTransitive;
    }
    DynamicsLabel operator()(const PowerLawBeta& g) const {
      // beta(n) = n^alpha
      if (g.alpha * p > 1.0) return DynamicsLabel::Chaotic;
      if (g.alpha > 0.0) return DynamicsLabel::MixingNotChaotic;
      return DynamicsLabel::NotTransitive;
    }
    DynamicsLabel operator()(const BalancedBlocks& g) const {
      // After k pairs log|beta| = k(k+1)/2 * log|ab|; inside pair k it moves by
      // up to k * |log|leading||.
      const double lead = std::abs(g.leading());
      const double prod = lead * std::abs(g.trailing());
      if (std::abs(prod - 1.0) <= 1e-12) {
        return lead > 1.0 ? DynamicsLabel::TransitiveNotMixing : DynamicsLabel::NotTransitive;
      }
      return prod > 1.0 ? DynamicsLabel::Chaotic : DynamicsLabel::NotTransitive;
    }
    DynamicsLabel operator()(const ExplicitWeights&) const { return DynamicsLabel::NotTransitive; }
  } visitor{p};
  return std::visit(visitor, gen);
}

}  // namespace

DynamicsVerdict classify(const WeightSequence& w, Exponent p, std::size_t horizon) {
  if (horizon < kMinHorizon)
    throw PreconditionError("classify: horizon " + std::to_string(horizon) + " is below the minimum of " +
                            std::to_string(kMinHorizon));
  std::size_t usable = horizon;
  if (const auto len = w.length()) {
    usable = std::min(horizon, *len);
    if (usable < kMinHorizon)
      throw PreconditionError("classify: explicit list of " + std::to_string(*len) +
                              " weights gives a horizon below the minimum of " + std::to_string(kMinHorizon));
  }
  if (w.sup_modulus() == std::numeric_limits<double>::infinity())
    throw PreconditionError("classify: weight sequence is unbounded");

  const auto profile = beta_profile(w, usable);
  if (std::holds_alternative<ExplicitWeights>(w.generator())) return numeric_verdict(profile, p.value());

  DynamicsVerdict v;
  v.horizon = usable;
  v.evidence = collect_evidence(profile, p.value());
  v.label = analytic_label(w.generator(), p.value());
  v.confidence = Confidence::Analytic;
  return v;
}

ShiftOperator make_example(Example which) {
  const Exponent two{2.0};
  switch (which) {
    case Example::T1: return {WeightSequence::power_law(0.5), two};
    case Example::T2: return {WeightSequence::balanced_blocks(2.0, 0.5, BlockOrder::AFirst), two};
    case Example::T3: return {WeightSequence::balanced_blocks(0.5, 2.0, BlockOrder::AFirst), two};
  }
  throw PreconditionError("unknown example");
}

FinSeqVector example3_point(std::size_t K) {
  if (K == 0) throw PreconditionError("example3_point: K must be at least 1");
  std::vector<Complex> c(K * (K + 1));
  for (std::size_t k = 1; k <= K; ++k) c[k * (k + 1) - 1] = std::ldexp(1.0, -static_cast<int>(k - 1));
  return FinSeqVector(Exponent{2.0}, std::move(c));
}

OrbitTrace orbit_norms(const ShiftOperator& T, const FinSeqVector& x, std::size_t N) {
  if (!(x.exponent() == T.p)) throw ExponentMismatch(T.p.value(), x.p());
  OrbitTrace trace;
  trace.valid_horizon = x.support_length();
  trace.requested = N;
  trace.truncated = N > trace.valid_horizon;
  const std::size_t steps = std::min(N, trace.valid_horizon);
  trace.norms.reserve(steps + 1);
  FinSeqVector y = x;
  trace.norms.push_back(lp_norm(y));
  for (std::size_t n = 1; n <= steps; ++n) {
    y = apply_shift(T, y);
    trace.norms.push_back(lp_norm(y));
  }
  return trace;
}

OrbitTrace escape_demo(Complex lambda, Exponent p, std::size_t N) {
  if (N == 0) throw PreconditionError("escape_demo: N must be at least 1");
  const auto T = ShiftOperator::constant(lambda, p);
  OrbitTrace trace;
  trace.valid_horizon = N;
  trace.requested = N;
  trace.norms.reserve(N);
  for (std::size_t n = 1; n <= N; ++n) {
    FinSeqVector y = FinSeqVector::unit(p, n);
    for (std::size_t i = 1; i < n; ++i) y = apply_shift(T, y);
    trace.norms.push_back(lp_norm(y));
  }
  return trace;
}

}  // namespace wbshift
