#include "wbshift/seqspace.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace wbshift {

namespace {

std::string describe(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

bool is_finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

void require_weight(Complex w, const char* what) {
  if (!is_finite(w) || w == Complex{0.0, 0.0})
    throw PreconditionError(std::string(what) + ": weights must be finite and nonzero");
}

// Smallest k with k(k+1) >= n, i.e. the index of the block pair holding n.
std::size_t block_pair_of(std::size_t n) {
  auto k = static_cast<std::size_t>(std::ceil((std::sqrt(4.0 * static_cast<double>(n) + 1.0) - 1.0) / 2.0));
  while (k > 1 && (k - 1) * k >= n) --k;
  while (k * (k + 1) < n) ++k;
  return k;
}

}  // namespace

ExponentMismatch::ExponentMismatch(double expected, double actual)
    : Error("exponent mismatch: expected p = " + describe(expected) + ", got p = " + describe(actual)),
      expected_(expected),
      actual_(actual) {}

Exponent::Exponent(double value) : value_(value) {
  if (!(value >= 1.0) || !std::isfinite(value))
    throw PreconditionError("exponent must satisfy 1 <= p < inf, got " + describe(value));
}

FinSeqVector::FinSeqVector(Exponent p, std::vector<Complex> coords) : p_(p), coords_(std::move(coords)) {
  for (const auto& z : coords_)
    if (!is_finite(z)) throw PreconditionError("vector coordinates must be finite");
  while (!coords_.empty() && coords_.back() == Complex{0.0, 0.0}) coords_.pop_back();
}

FinSeqVector FinSeqVector::unit(Exponent p, std::size_t n) {
  if (n == 0) throw PreconditionError("unit vector index is 1-based");
  std::vector<Complex> c(n, Complex{0.0, 0.0});
  c[n - 1] = 1.0;
  return FinSeqVector(p, std::move(c));
}

Complex FinSeqVector::operator[](std::size_t n) const {
  if (n == 0) throw IndexOutOfRange("coordinate index is 1-based");
  return n <= coords_.size() ? coords_[n - 1] : Complex{0.0, 0.0};
}

FinSeqVector FinSeqVector::scaled(Complex factor) const {
  std::vector<Complex> c(coords_);
  for (auto& z : c) z *= factor;
  return FinSeqVector(p_, std::move(c));
}

double modulus_pow(Complex z, double p) {
  if (p == 2.0) return std::norm(z);
  const double r = std::abs(z);
  return p == 1.0 ? r : std::pow(r, p);
}

double lp_norm(const FinSeqVector& x) {
  if (x.is_zero()) return 0.0;
  // Scale by the largest modulus so that |x_n|^p cannot overflow.
  double m = 0.0;
  for (const auto& z : x.coords()) m = std::max(m, std::abs(z));
  CompensatedSum sum;
  for (const auto& z : x.coords()) sum.add(modulus_pow(z / m, x.p()));
  return m * std::pow(sum.value(), 1.0 / x.p());
}

std::vector<double> tail_power_sums(const FinSeqVector& x) {
  const auto c = x.coords();
  std::vector<double> tails(c.size() + 1, 0.0);
  CompensatedSum sum;
  for (std::size_t i = c.size(); i-- > 0;) {
    sum.add(modulus_pow(c[i], x.p()));
    tails[i] = sum.value();
  }
  return tails;
}

double tail_power_sum(const FinSeqVector& x, std::size_t k) {
  if (k == 0) throw PreconditionError("tail index is 1-based");
  const auto c = x.coords();
  CompensatedSum sum;
  for (std::size_t i = c.size(); i-- > k - 1;) sum.add(modulus_pow(c[i], x.p()));
  return sum.value();
}

FinSeqVector apply_shift(const ShiftOperator& T, const FinSeqVector& x) {
  if (!(x.exponent() == T.p)) throw ExponentMismatch(T.p.value(), x.p());
  const auto c = x.coords();
  if (c.size() <= 1) return FinSeqVector::zero(T.p);
  std::vector<Complex> out(c.size() - 1);
  for (std::size_t m = 1; m < c.size(); ++m) out[m - 1] = T.weights.at(m) * c[m];
  return FinSeqVector(T.p, std::move(out));
}

FinSeqVector iterate_shift(const ShiftOperator& T, const FinSeqVector& x, std::size_t n) {
  if (!(x.exponent() == T.p)) throw ExponentMismatch(T.p.value(), x.p());
  if (n >= x.support_length()) return FinSeqVector::zero(T.p);
  FinSeqVector y = x;
  for (std::size_t i = 0; i < n; ++i) y = apply_shift(T, y);
  return y;
}

// ---------------------------------------------------------------------------

WeightSequence WeightSequence::constant(Complex lambda) {
  require_weight(lambda, "constant");
  return WeightSequence(ConstantWeights{lambda});
}

WeightSequence WeightSequence::explicit_list(std::vector<Complex> weights) {
  if (weights.empty()) throw PreconditionError("explicit: weight list is empty");
  for (const auto& w : weights) require_weight(w, "explicit");
  return WeightSequence(ExplicitWeights{std::move(weights)});
}

WeightSequence WeightSequence::balanced_blocks(Complex a, Complex b, BlockOrder order) {
  require_weight(a, "blocks");
  require_weight(b, "blocks");
  return WeightSequence(BalancedBlocks{a, b, order});
}

WeightSequence WeightSequence::power_law(double alpha) {
  if (!std::isfinite(alpha)) throw PreconditionError("powerlaw: alpha must be finite");
  return WeightSequence(PowerLawBeta{alpha});
}

std::string WeightSequence::kind() const {
  struct {
    std::string operator()(const ConstantWeights&) const { return "constant"; }
    std::string operator()(const ExplicitWeights&) const { return "explicit"; }
    std::string operator()(const BalancedBlocks&) const { return "blocks"; }
    std::string operator()(const PowerLawBeta&) const { return "powerlaw"; }
  } visitor;
  return std::visit(visitor, gen_);
}

Complex WeightSequence::at(std::size_t n) const {
  if (n == 0) throw IndexOutOfRange("weight index is 1-based");
  struct {
    std::size_t n;
    Complex operator()(const ConstantWeights& g) const { return g.lambda; }
    Complex operator()(const ExplicitWeights& g) const {
      if (n > g.weights.size())
        throw IndexOutOfRange("explicit weights: index " + std::to_string(n) + " beyond list of length " +
                              std::to_string(g.weights.size()));
      return g.weights[n - 1];
    }
    Complex operator()(const BalancedBlocks& g) const {
      const std::size_t k = block_pair_of(n);
      const std::size_t offset = n - (k - 1) * k;
      return offset <= k ? g.leading() : g.trailing();
    }
    Complex operator()(const PowerLawBeta& g) const {
      if (n == 1) return 1.0;
      return std::exp(g.alpha * std::log1p(1.0 / static_cast<double>(n - 1)));
    }
  } visitor{n};
  return std::visit(visitor, gen_);
}

double WeightSequence::log_abs_at(std::size_t n) const {
  if (const auto* g = std::get_if<PowerLawBeta>(&gen_)) {
    if (n == 0) throw IndexOutOfRange("weight index is 1-based");
    return n == 1 ? 0.0 : g->alpha * std::log1p(1.0 / static_cast<double>(n - 1));
  }
  return std::log(std::abs(at(n)));
}

double WeightSequence::sup_modulus() const {
  struct {
    double operator()(const ConstantWeights& g) const { return std::abs(g.lambda); }
    double operator()(const ExplicitWeights& g) const {
      double m = 0.0;
      for (const auto& w : g.weights) m = std::max(m, std::abs(w));
      return m;
    }
    double operator()(const BalancedBlocks& g) const { return std::max(std::abs(g.a), std::abs(g.b)); }
    // omega_n = (n/(n-1))^alpha is largest at n = 2 for alpha > 0 and tends to 1.
    double operator()(const PowerLawBeta& g) const { return g.alpha > 0 ? std::pow(2.0, g.alpha) : 1.0; }
  } visitor;
  return std::visit(visitor, gen_);
}

std::optional<std::size_t> WeightSequence::length() const {
  if (const auto* g = std::get_if<ExplicitWeights>(&gen_)) return g->weights.size();
  return std::nullopt;
}

Complex weight_at(const WeightSequence& w, std::size_t n) { return w.at(n); }

double log_abs_beta(const WeightSequence& w, std::size_t n) {
  if (n == 0) throw PreconditionError("beta index is 1-based");
  CompensatedSum sum;
  for (std::size_t i = 1; i <= n; ++i) sum.add(w.log_abs_at(i));
  return sum.value();
}

Complex beta(const WeightSequence& w, std::size_t n) {
  if (n == 0) throw PreconditionError("beta index is 1-based");
  Complex product = 1.0;
  CompensatedSum log_abs;
  bool polar = false;
  double phase = 0.0;
  for (std::size_t i = 1; i <= n; ++i) {
    const Complex wi = w.at(i);
    log_abs.add(w.log_abs_at(i));
    if (!polar) {
      product *= wi;
      if (std::abs(log_abs.value()) > kBetaLogSwitchover) {
        polar = true;
        phase = std::arg(product);
      }
    } else {
      phase += std::arg(wi);
    }
  }
  if (!polar) return product;
  return std::polar(std::exp(log_abs.value()), phase);
}

}  // namespace wbshift
