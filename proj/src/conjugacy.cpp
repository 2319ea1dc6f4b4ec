#include "wbshift/conjugacy.hpp"

#include <algorithm>
#include <cmath>

#include "wbshift/kernels.hpp"

namespace wbshift {

namespace {

const char* chi_name(Chi c) {
  switch (c) {
    case Chi::Below: return "-1 (modulus < 1)";
    case Chi::Unit: return "0 (modulus = 1)";
    case Chi::Above: return "1 (modulus > 1)";
  }
  return "?";
}

Complex phase_of(Complex z) { return z / std::abs(z); }

// a^s - b^s with a = b + d, a >= b >= 0, d >= 0. Close tails are handled as
// b^s * expm1(s * log1p(d / b)) so the head of the support keeps its digits.
double power_difference(double b, double d, double s) {
  if (d == 0.0) return 0.0;
  if (b == 0.0) return std::pow(d, s);
  if (d < b) return std::pow(b, s) * std::expm1(s * std::log1p(d / b));
  return std::pow(b + d, s) - std::pow(b, s);
}

// Binary powering keeps exact ratios (-1, i, ...) exact.
Complex ratio_power(Complex ratio, std::size_t k) {
  Complex result = 1.0;
  Complex base = ratio;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k > 0) base *= base;
  }
  return result;
}

}  // namespace

Chi chi(double t) {
  if (!(t > 0.0) || !std::isfinite(t)) throw PreconditionError("chi: argument must be a positive real");
  if (t > 1.0) return Chi::Above;
  if (t < 1.0) return Chi::Below;
  return Chi::Unit;
}

ChiMismatch::ChiMismatch(Chi lhs, Chi rhs)
    : Error(std::string("chi mismatch: chi(|lambda|) = ") + chi_name(lhs) + ", chi(|omega|) = " + chi_name(rhs) +
            "; the operators are not topologically conjugate"),
      lhs_(lhs),
      rhs_(rhs) {}

FinSeqVector h_map(const FinSeqVector& x, double s) {
  if (!(s > 0.0) || !std::isfinite(s)) throw PreconditionError("h_map: s must be a positive real");
  const auto c = x.coords();
  const auto tails = tail_power_sums(x);
  const double p = x.p();
  std::vector<Complex> out(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == Complex{0.0, 0.0}) continue;
    const double diff = power_difference(tails[i + 1], modulus_pow(c[i], p), s);
    const double magnitude = p == 1.0 ? diff : p == 2.0 ? std::sqrt(diff) : std::pow(diff, 1.0 / p);
    if (!std::isfinite(magnitude)) throw NumericRangeError("h_map: image coordinate overflows double");
    out[i] = phase_of(c[i]) * magnitude;
  }
  return FinSeqVector(x.exponent(), std::move(out));
}

FinSeqVector g_map(const FinSeqVector& x, Exponent q) {
  const double ratio = x.p() / q.value();
  std::vector<Complex> out(x.coords().begin(), x.coords().end());
  for (auto& z : out) {
    if (z == Complex{0.0, 0.0}) continue;
    const double r = std::abs(z);
    z = (z / r) * std::pow(r, ratio);
  }
  return FinSeqVector(q, std::move(out));
}

FinSeqVector diag_map(const FinSeqVector& x, Complex ratio) {
  if (!std::isfinite(ratio.real()) || !std::isfinite(ratio.imag()) || ratio == Complex{0.0, 0.0})
    throw PreconditionError("diag_map: ratio must be finite and nonzero");
  std::vector<Complex> out(x.coords().begin(), x.coords().end());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] *= ratio_power(ratio, i);
  return FinSeqVector(x.exponent(), std::move(out));
}

// ---------------------------------------------------------------------------

ConjugacyMap& ConjugacyMap::then(MapStep step) {
  if (const auto* h = std::get_if<HStep>(&step)) {
    if (!(h->p == codomain_p_)) throw ExponentMismatch(codomain_p_.value(), h->p.value());
    if (!(h->s > 0.0) || !std::isfinite(h->s)) throw PreconditionError("HStep: s must be a positive real");
  } else if (const auto* g = std::get_if<GStep>(&step)) {
    if (!(g->p == codomain_p_)) throw ExponentMismatch(codomain_p_.value(), g->p.value());
    codomain_p_ = g->q;
  } else {
    const Complex r = std::get<DiagStep>(step).ratio;
    if (!std::isfinite(r.real()) || !std::isfinite(r.imag()) || r == Complex{0.0, 0.0})
      throw PreconditionError("DiagStep: ratio must be finite and nonzero");
  }
  steps_.push_back(step);
  return *this;
}

FinSeqVector ConjugacyMap::apply(const FinSeqVector& x) const {
  if (!(x.exponent() == domain_p_)) throw ExponentMismatch(domain_p_.value(), x.p());
  FinSeqVector y = x;
  for (const auto& step : steps_) {
    if (const auto* h = std::get_if<HStep>(&step))
      y = h_map(y, h->s);
    else if (const auto* g = std::get_if<GStep>(&step))
      y = g_map(y, g->q);
    else
      y = diag_map(y, std::get<DiagStep>(step).ratio);
  }
  return y;
}

ConjugacyMap ConjugacyMap::inverse() const {
  ConjugacyMap inv(codomain_p_);
  for (auto it = steps_.rbegin(); it != steps_.rend(); ++it) {
    if (const auto* h = std::get_if<HStep>(&*it))
      inv.then(HStep{h->p, 1.0 / h->s});
    else if (const auto* g = std::get_if<GStep>(&*it))
      inv.then(GStep{g->q, g->p});
    else
      inv.then(DiagStep{1.0 / std::get<DiagStep>(*it).ratio});
  }
  return inv;
}

ConjugacyMap diag_similarity(Complex lambda, Complex omega, Exponent p) {
  if (lambda == Complex{0.0, 0.0} || omega == Complex{0.0, 0.0})
    throw PreconditionError("diag_similarity: weights must be nonzero");
  const double a = std::abs(lambda);
  const double b = std::abs(omega);
  if (std::abs(a - b) > 1e-12 * std::max(a, b))
    throw PreconditionError("diag_similarity: |lambda| != |omega|, the shifts are not similar");
  auto map = ConjugacyMap::identity(p);
  const Complex ratio = lambda / omega;
  if (ratio != Complex{1.0, 0.0}) map.then(DiagStep{ratio});
  return map;
}

bool conjugacy_class_decision(Complex lambda, Exponent, Complex omega, Exponent) {
  if (lambda == Complex{0.0, 0.0} || omega == Complex{0.0, 0.0})
    throw PreconditionError("conjugacy_class_decision: weights must be nonzero");
  return chi(std::abs(lambda)) == chi(std::abs(omega));
}

ConjugacyMap build_conjugator(Complex lambda, Exponent p, Complex omega, Exponent q) {
  if (lambda == Complex{0.0, 0.0} || omega == Complex{0.0, 0.0})
    throw PreconditionError("build_conjugator: weights must be nonzero");
  const double a = std::abs(lambda);
  const double b = std::abs(omega);
  const Chi ca = chi(a);
  const Chi cb = chi(b);
  if (ca != cb) throw ChiMismatch(ca, cb);

  auto map = ConjugacyMap::identity(p);
  // lambda B_p -> |lambda| B_p
  if (const Complex r = lambda / a; r != Complex{1.0, 0.0}) map.then(DiagStep{r});
  // |lambda| B_p -> |omega|^{q/p} B_p, since |lambda|^s = |omega|^{q/p}
  if (ca != Chi::Unit) {
    const double s = (q.value() / p.value()) * std::log(b) / std::log(a);
    if (s != 1.0) map.then(HStep{p, s});
  }
  // |omega|^{q/p} B_p -> |omega| B_q
  if (!(p == q)) map.then(GStep{p, q});
  // |omega| B_q -> omega B_q
  if (const Complex r = b / omega; r != Complex{1.0, 0.0}) map.then(DiagStep{r});
  return map;
}

ConjugacyResidualReport conjugacy_residual(const ShiftOperator& f, const ShiftOperator& g, const ConjugacyMap& h,
                                           std::span<const FinSeqVector> samples) {
  if (!(f.p == h.domain_p())) throw ExponentMismatch(h.domain_p().value(), f.p.value());
  if (!(g.p == h.codomain_p())) throw ExponentMismatch(h.codomain_p().value(), g.p.value());
  for (const auto& x : samples)
    if (!(x.exponent() == f.p)) throw ExponentMismatch(f.p.value(), x.p());

  ConjugacyResidualReport report;
  report.sample_count = samples.size();
  report.per_sample = kernels::residuals_parallel(f, g, h, samples);
  for (std::size_t i = 0; i < report.per_sample.size(); ++i) {
    if (i == 0 || report.per_sample[i] > report.max_residual) {
      report.max_residual = report.per_sample[i];
      report.worst_index = i;
    }
  }
  if (!samples.empty()) report.worst_input = samples[report.worst_index];
  return report;
}

std::vector<FinSeqVector> random_samples(const SampleSpec& spec) { return kernels::samples_parallel(spec); }

ConjugacyResidualReport conjugacy_residual(const ShiftOperator& f, const ShiftOperator& g, const ConjugacyMap& h,
                                           const SampleSpec& spec) {
  const auto samples = random_samples(spec);
  auto report = conjugacy_residual(f, g, h, samples);
  report.seed = spec.seed;
  return report;
}

}  // namespace wbshift
