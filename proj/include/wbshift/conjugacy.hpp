#pragma once

// Homeomorphisms of l^p used to conjugate constant-weight backward shifts,
// their composition into conjugators, and residual checks of h∘f = g∘h.

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "wbshift/seqspace.hpp"

namespace wbshift {

/// Trichotomy of a positive real against 1.
enum class Chi : int { Below = -1, Unit = 0, Above = 1 };

Chi chi(double t);
inline int to_int(Chi c) { return static_cast<int>(c); }

class ChiMismatch : public Error {
 public:
  ChiMismatch(Chi lhs, Chi rhs);
  Chi lhs() const noexcept { return lhs_; }
  Chi rhs() const noexcept { return rhs_; }

 private:
  Chi lhs_;
  Chi rhs_;
};

/// Tail-norm rescaling on l^p: the tails of the image are the tails of x raised to s.
FinSeqVector h_map(const FinSeqVector& x, double s);

/// Coordinate-wise |x_n| -> |x_n|^{p/q} with the phase kept; maps l^p onto l^q.
FinSeqVector g_map(const FinSeqVector& x, Exponent q);

/// x_n -> ratio^{n-1} x_n.
FinSeqVector diag_map(const FinSeqVector& x, Complex ratio);

struct HStep {
  Exponent p;
  double s;
};

struct GStep {
  Exponent p;
  Exponent q;
};

struct DiagStep {
  Complex ratio;
};

using MapStep = std::variant<HStep, GStep, DiagStep>;

/// A chain of steps applied left to right. The exponent carried between
/// steps is checked on every append.
class ConjugacyMap {
 public:
  static ConjugacyMap identity(Exponent p) { return ConjugacyMap(p); }

  ConjugacyMap& then(MapStep step);

  Exponent domain_p() const noexcept { return domain_p_; }
  Exponent codomain_p() const noexcept { return codomain_p_; }
  const std::vector<MapStep>& steps() const noexcept { return steps_; }

  FinSeqVector apply(const FinSeqVector& x) const;
  FinSeqVector operator()(const FinSeqVector& x) const { return apply(x); }

  /// Exact inverse: steps reversed, s -> 1/s, (p,q) -> (q,p), ratio -> 1/ratio.
  ConjugacyMap inverse() const;

 private:
  explicit ConjugacyMap(Exponent p) : domain_p_(p), codomain_p_(p) {}

  Exponent domain_p_;
  Exponent codomain_p_;
  std::vector<MapStep> steps_;
};

/// The similarity S with S∘(lambda B_p) = (omega B_p)∘S. Requires |lambda| = |omega|
/// to relative 1e-12.
ConjugacyMap diag_similarity(Complex lambda, Complex omega, Exponent p);

/// A homeomorphism h: l^p -> l^q with h∘(lambda B_p) = (omega B_q)∘h.
/// Throws ChiMismatch when no such map exists.
ConjugacyMap build_conjugator(Complex lambda, Exponent p, Complex omega, Exponent q);

/// True iff lambda B_p and omega B_q are topologically conjugate.
bool conjugacy_class_decision(Complex lambda, Exponent p, Complex omega, Exponent q);

struct ConjugacyResidualReport {
  double max_residual = 0.0;
  std::size_t sample_count = 0;
  std::size_t worst_index = 0;
  std::optional<FinSeqVector> worst_input;
  std::vector<double> per_sample;
  std::optional<std::uint64_t> seed;
};

/// ||h(f(x)) - g(h(x))|| in the codomain norm for every sample.
ConjugacyResidualReport conjugacy_residual(const ShiftOperator& f, const ShiftOperator& g,
                                           const ConjugacyMap& h,
                                           std::span<const FinSeqVector> samples);

struct SampleSpec {
  Exponent p{2.0};
  std::size_t count = 100;
  std::size_t min_support = 1;
  std::size_t max_support = 64;
  double box = 10.0;            ///< real and imaginary parts uniform on [-box, box]
  bool real_only = false;
  double zero_fraction = 0.0;   ///< probability that a coordinate is exactly 0
  std::uint64_t seed = 20081022;
};

/// Seeded random finitely-supported vectors. Sample i depends only on (seed, i).
std::vector<FinSeqVector> random_samples(const SampleSpec& spec);

/// Runs conjugacy_residual on random_samples(spec) and records the seed.
ConjugacyResidualReport conjugacy_residual(const ShiftOperator& f, const ShiftOperator& g,
                                           const ConjugacyMap& h, const SampleSpec& spec);

}  // namespace wbshift
