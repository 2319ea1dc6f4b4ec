#pragma once

// Dynamical classification of weighted backward shifts through the growth of
// beta(n) = omega_1 ... omega_n, the three example operators, and orbit traces.
//
//   chaotic            <=>  sum_n 1/|beta(n)|^p < infinity
//   strongly mixing    <=>  |beta(n)| -> infinity
//   transitive         <=>  limsup |beta(n)| = infinity

#include <cstddef>
#include <string>
#include <vector>

#include "wbshift/seqspace.hpp"

namespace wbshift {

enum class DynamicsLabel { Chaotic, MixingNotChaotic, TransitiveNotMixing, NotTransitive };
enum class Confidence { Analytic, NumericEvidence, Inconclusive };

std::string to_string(DynamicsLabel label);
std::string to_string(Confidence confidence);

/// Scalars read off log|beta(n)| for n = 1..horizon. The tail window is the last
/// ceil(sqrt(horizon)) indices; head and tail are the two halves of the horizon.
struct VerdictEvidence {
  std::size_t window = 0;
  /// log of sum_{n<=H} |beta(n)|^{-p}; may be +inf.
  double log_inverse_power_sum = 0.0;
  /// sum over n in (H/10, H] of |beta(n)|^{-p}; may be +inf.
  double decade_increment = 0.0;
  double head_min_log_beta = 0.0;
  double head_max_log_beta = 0.0;
  double tail_min_log_beta = 0.0;
  double tail_max_log_beta = 0.0;
  double window_min_log_beta = 0.0;
  double window_max_log_beta = 0.0;
};

struct DynamicsVerdict {
  DynamicsLabel label = DynamicsLabel::NotTransitive;
  Confidence confidence = Confidence::Inconclusive;
  std::size_t horizon = 0;
  VerdictEvidence evidence;
};

inline constexpr std::size_t kMinHorizon = 100;
/// Chaotic evidence requires the last-decade increment of sum |beta|^{-p} below this.
inline constexpr double kCauchyFlatTolerance = 1e-6;

/// log|beta(n)| for n = 1..N (element i holds n = i+1), compensated running sum.
std::vector<double> beta_profile(const WeightSequence& w, std::size_t n);

VerdictEvidence collect_evidence(std::span<const double> log_beta, double p);

/// Label suggested by the evidence alone, with NumericEvidence or Inconclusive.
DynamicsVerdict numeric_verdict(std::span<const double> log_beta, double p);

/// Closed-form verdict for Constant, PowerLawBeta and BalancedBlocks generators;
/// numeric evidence for Explicit lists (whose horizon is capped at the list length).
/// Throws PreconditionError when the usable horizon is below kMinHorizon.
DynamicsVerdict classify(const WeightSequence& w, Exponent p, std::size_t horizon);

enum class Example { T1, T2, T3 };

/// T1: beta(n) = sqrt(n); T2: blocks of 2 then 1/2; T3: blocks of 1/2 then 2. All on l^2.
ShiftOperator make_example(Example which);

/// x with x_{k(k+1)} = 2^{-(k-1)} for k = 1..K, zero elsewhere, on l^2.
FinSeqVector example3_point(std::size_t K);

struct OrbitTrace {
  /// norms[n] = ||T^n x||_p, n = 0..N.
  std::vector<double> norms;
  /// Support length of the start point: every iterate past it is exactly 0.
  std::size_t valid_horizon = 0;
  std::size_t requested = 0;
  bool truncated = false;
  std::string operator_label;
  std::string start_label;
};

/// Iterates T on x up to N times. A request beyond x's support length is
/// truncated to it and flagged.
OrbitTrace orbit_norms(const ShiftOperator& T, const FinSeqVector& x, std::size_t N);

/// ||(lambda B_p)^{n-1} e_n|| for n = 1..N, by iteration. Element i holds n = i+1.
OrbitTrace escape_demo(Complex lambda, Exponent p, std::size_t N);

}  // namespace wbshift
