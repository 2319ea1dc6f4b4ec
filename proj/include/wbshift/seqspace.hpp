#pragma once

// Finitely supported vectors of l^p, weight sequences and weighted backward
// shifts. All indices in this interface are 1-based: x[1] is the first
// coordinate, weight_at(W, 1) the first weight.

#include <cmath>
#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "wbshift/errors.hpp"

namespace wbshift {

using Complex = std::complex<double>;

/// The exponent p of l^p, 1 <= p < infinity.
class Exponent {
 public:
  explicit Exponent(double value);

  double value() const noexcept { return value_; }

  friend bool operator==(Exponent, Exponent) = default;

 private:
  double value_;
};

/// An element of l^p with finitely many nonzero coordinates. Trailing zeros are
/// dropped on construction, so support_length() is the index of the last
/// nonzero coordinate (0 for the zero vector).
class FinSeqVector {
 public:
  FinSeqVector(Exponent p, std::vector<Complex> coords);
  FinSeqVector(Exponent p, std::initializer_list<Complex> coords)
      : FinSeqVector(p, std::vector<Complex>(coords)) {}

  static FinSeqVector zero(Exponent p) { return FinSeqVector(p, std::vector<Complex>{}); }
  /// e_n: 1 at position n.
  static FinSeqVector unit(Exponent p, std::size_t n);

  Exponent exponent() const noexcept { return p_; }
  double p() const noexcept { return p_.value(); }
  std::size_t support_length() const noexcept { return coords_.size(); }
  bool is_zero() const noexcept { return coords_.empty(); }

  /// Coordinate n (1-based); zero past the support. n = 0 is rejected.
  Complex operator[](std::size_t n) const;

  std::span<const Complex> coords() const noexcept { return coords_; }

  FinSeqVector scaled(Complex factor) const;

 private:
  Exponent p_;
  std::vector<Complex> coords_;
};

// ---------------------------------------------------------------------------
// Weight sequences

struct ConstantWeights {
  Complex lambda;
};

struct ExplicitWeights {
  std::vector<Complex> weights;
};

enum class BlockOrder { AFirst, BFirst };

/// For k = 1, 2, ...: k copies of the leading value followed by k copies of the
/// trailing one. The k-th pair occupies indices (k-1)k+1 .. k(k+1).
struct BalancedBlocks {
  Complex a;
  Complex b;
  BlockOrder order = BlockOrder::AFirst;

  Complex leading() const { return order == BlockOrder::AFirst ? a : b; }
  Complex trailing() const { return order == BlockOrder::AFirst ? b : a; }
};

/// omega_1 = 1 and omega_n = (n / (n-1))^alpha, so that beta(n) = n^alpha.
struct PowerLawBeta {
  double alpha;
};

class WeightSequence {
 public:
  using Generator = std::variant<ConstantWeights, ExplicitWeights, BalancedBlocks, PowerLawBeta>;

  static WeightSequence constant(Complex lambda);
  static WeightSequence explicit_list(std::vector<Complex> weights);
  static WeightSequence balanced_blocks(Complex a, Complex b, BlockOrder order = BlockOrder::AFirst);
  static WeightSequence power_law(double alpha);

  const Generator& generator() const noexcept { return gen_; }

  /// "constant", "explicit", "blocks" or "powerlaw".
  std::string kind() const;

  Complex at(std::size_t n) const;
  /// log|omega_n|, computed without forming omega_n where that loses accuracy.
  double log_abs_at(std::size_t n) const;
  /// sup_n |omega_n|.
  double sup_modulus() const;
  /// Number of available weights; nullopt for infinite generators.
  std::optional<std::size_t> length() const;

 private:
  explicit WeightSequence(Generator gen) : gen_(std::move(gen)) {}
  Generator gen_;
};

/// A weighted backward shift on l^p: (Tx)_n = omega_n x_{n+1}.
struct ShiftOperator {
  ShiftOperator(WeightSequence w, Exponent exponent) : weights(std::move(w)), p(exponent) {}

  /// lambda B_p.
  static ShiftOperator constant(Complex lambda, Exponent p) {
    return {WeightSequence::constant(lambda), p};
  }

  double norm_bound() const { return weights.sup_modulus(); }

  WeightSequence weights;
  Exponent p;
};

// ---------------------------------------------------------------------------
// Operations

double lp_norm(const FinSeqVector& x);

/// sum_{n >= k} |x_n|^p.
double tail_power_sum(const FinSeqVector& x, std::size_t k);

/// All tails T_1, ..., T_{L+1} in one backward pass; element i holds T_{i+1},
/// the final element is 0.
std::vector<double> tail_power_sums(const FinSeqVector& x);

/// |z|^p.
double modulus_pow(Complex z, double p);

FinSeqVector apply_shift(const ShiftOperator& T, const FinSeqVector& x);
FinSeqVector iterate_shift(const ShiftOperator& T, const FinSeqVector& x, std::size_t n);

Complex weight_at(const WeightSequence& w, std::size_t n);

/// prod_{i=1..n} omega_i. Switches to polar log-magnitude accumulation once
/// |log|beta|| passes kBetaLogSwitchover; may still overflow to inf for huge n.
Complex beta(const WeightSequence& w, std::size_t n);
/// log|beta(n)| as a compensated sum of log|omega_i|.
double log_abs_beta(const WeightSequence& w, std::size_t n);

inline constexpr double kBetaLogSwitchover = 300.0;

/// Neumaier's compensated summation.
class CompensatedSum {
 public:
  void add(double v) noexcept {
    const double t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v))
      comp_ += (sum_ - t) + v;
    else
      comp_ += (v - t) + sum_;
    sum_ = t;
  }
  double value() const noexcept { return std::isfinite(sum_) ? sum_ + comp_ : sum_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace wbshift
