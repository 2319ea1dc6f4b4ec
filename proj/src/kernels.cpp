#include "wbshift/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <random>

namespace wbshift::kernels {

namespace {

// Runs body(i) for i in [0, n) on the OpenMP team. The first exception thrown
// by any iteration is rethrown on the calling thread.
template <class Body>
void parallel_for(std::size_t n, Body&& body) {
  std::exception_ptr failure;
  const auto count = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(dynamic, 4)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(wbshift_kernel_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
}

double residual_one(const ShiftOperator& f, const ShiftOperator& g, const ConjugacyMap& h, const FinSeqVector& x) {
  const FinSeqVector lhs = h(apply_shift(f, x));
  const FinSeqVector rhs = apply_shift(g, h(x));
  const std::size_t n = std::max(lhs.support_length(), rhs.support_length());
  std::vector<Complex> diff(n);
  for (std::size_t i = 1; i <= n; ++i) diff[i - 1] = lhs[i] - rhs[i];
  return lp_norm(FinSeqVector(h.codomain_p(), std::move(diff)));
}

FinSeqVector sample_one(const SampleSpec& spec, std::size_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(spec.seed), static_cast<std::uint32_t>(spec.seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  std::mt19937_64 rng(seq);
  std::uniform_int_distribution<std::size_t> support(spec.min_support, spec.max_support);
  std::uniform_real_distribution<double> coord(-spec.box, spec.box);
  std::bernoulli_distribution zero(spec.zero_fraction);
  std::vector<Complex> c(support(rng));
  for (auto& z : c) {
    const double re = coord(rng);
    const double im = spec.real_only ? 0.0 : coord(rng);
    z = (spec.zero_fraction > 0.0 && zero(rng)) ? Complex{0.0, 0.0} : Complex{re, im};
  }
  return FinSeqVector(spec.p, std::move(c));
}

void check_spec(const SampleSpec& spec) {
  if (spec.min_support > spec.max_support) throw PreconditionError("samples: min_support > max_support");
  if (!(spec.box > 0.0) || !std::isfinite(spec.box)) throw PreconditionError("samples: box must be positive");
  if (!(spec.zero_fraction >= 0.0 && spec.zero_fraction < 1.0))
    throw PreconditionError("samples: zero_fraction must lie in [0, 1)");
}

double max_of(const std::vector<double>& v) {
  double m = 0.0;
  for (double e : v) m = std::max(m, e);
  return m;
}

}  // namespace

std::vector<double> residuals_serial(const ShiftOperator& f, const ShiftOperator& g, const ConjugacyMap& h,
                                     std::span<const FinSeqVector> samples) {
  std::vector<double> out(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) out[i] = residual_one(f, g, h, samples[i]);
  return out;
}

std::vector<double> residuals_parallel(const ShiftOperator& f, const ShiftOperator& g, const ConjugacyMap& h,
                                       std::span<const FinSeqVector> samples) {
  std::vector<double> out(samples.size());
  parallel_for(samples.size(), [&](std::size_t i) { out[i] = residual_one(f, g, h, samples[i]); });
  return out;
}

std::vector<FinSeqVector> samples_serial(const SampleSpec& spec) {
  check_spec(spec);
  std::vector<FinSeqVector> out;
  out.reserve(spec.count);
  for (std::size_t i = 0; i < spec.count; ++i) out.push_back(sample_one(spec, i));
  return out;
}

std::vector<FinSeqVector> samples_parallel(const SampleSpec& spec) {
  check_spec(spec);
  std::vector<FinSeqVector> out(spec.count, FinSeqVector::zero(spec.p));
  parallel_for(spec.count, [&](std::size_t i) { out[i] = sample_one(spec, i); });
  return out;
}

double norm_transport_error(const FinSeqVector& x, double s) {
  const auto image_tails = tail_power_sums(h_map(x, s));
  const auto tails = tail_power_sums(x);
  double worst = 0.0;
  for (std::size_t k = 0; k < tails.size(); ++k) {
    const double expected = std::pow(tails[k], s);
    const double got = k < image_tails.size() ? image_tails[k] : 0.0;
    const double scale = std::max(std::abs(expected), std::numeric_limits<double>::min());
    worst = std::max(worst, expected == got ? 0.0 : std::abs(got - expected) / scale);
  }
  return worst;
}

double max_norm_transport_error_serial(std::span<const FinSeqVector> xs, double s) {
  double worst = 0.0;
  for (const auto& x : xs) worst = std::max(worst, norm_transport_error(x, s));
  return worst;
}

double max_norm_transport_error_parallel(std::span<const FinSeqVector> xs, double s) {
  std::vector<double> errs(xs.size());
  parallel_for(xs.size(), [&](std::size_t i) { errs[i] = norm_transport_error(xs[i], s); });
  return max_of(errs);
}

double relative_deviation(const FinSeqVector& a, const FinSeqVector& b) {
  if (!(a.exponent() == b.exponent())) throw ExponentMismatch(b.p(), a.p());
  const std::size_t n = std::max(a.support_length(), b.support_length());
  double worst = 0.0;
  for (std::size_t i = 1; i <= n; ++i) {
    const double d = std::abs(a[i] - b[i]);
    if (d == 0.0) continue;
    worst = std::max(worst, d / std::max(std::abs(b[i]), std::numeric_limits<double>::min()));
  }
  return worst;
}

double max_abs_deviation(const FinSeqVector& a, const FinSeqVector& b) {
  const std::size_t n = std::max(a.support_length(), b.support_length());
  double worst = 0.0;
  for (std::size_t i = 1; i <= n; ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

double max_roundtrip_error_serial(std::span<const FinSeqVector> xs,
                                  const std::function<FinSeqVector(const FinSeqVector&)>& map) {
  double worst = 0.0;
  for (const auto& x : xs) worst = std::max(worst, relative_deviation(map(x), x));
  return worst;
}

double max_roundtrip_error_parallel(std::span<const FinSeqVector> xs,
                                    const std::function<FinSeqVector(const FinSeqVector&)>& map) {
  std::vector<double> errs(xs.size());
  parallel_for(xs.size(), [&](std::size_t i) { errs[i] = relative_deviation(map(xs[i]), xs[i]); });
  return max_of(errs);
}

}  // namespace wbshift::kernels
