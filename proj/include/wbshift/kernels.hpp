#pragma once

// Batch kernels over sample sets. Each has a serial reference and an OpenMP
// version; both produce identical per-element results.

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "wbshift/conjugacy.hpp"

namespace wbshift::kernels {

std::vector<double> residuals_serial(const ShiftOperator& f, const ShiftOperator& g,
                                     const ConjugacyMap& h, std::span<const FinSeqVector> samples);
std::vector<double> residuals_parallel(const ShiftOperator& f, const ShiftOperator& g,
                                       const ConjugacyMap& h, std::span<const FinSeqVector> samples);

std::vector<FinSeqVector> samples_serial(const SampleSpec& spec);
std::vector<FinSeqVector> samples_parallel(const SampleSpec& spec);

/// Largest relative deviation of any tail of h_map(x, s) from tail(x)^s.
double norm_transport_error(const FinSeqVector& x, double s);
double max_norm_transport_error_serial(std::span<const FinSeqVector> xs, double s);
double max_norm_transport_error_parallel(std::span<const FinSeqVector> xs, double s);

/// max over samples of the coordinate-wise relative deviation of map(x) from x.
double max_roundtrip_error_serial(std::span<const FinSeqVector> xs,
                                  const std::function<FinSeqVector(const FinSeqVector&)>& map);
double max_roundtrip_error_parallel(std::span<const FinSeqVector> xs,
                                    const std::function<FinSeqVector(const FinSeqVector&)>& map);

/// Coordinate-wise relative deviation max_n |a_n - b_n| / max(|b_n|, tiny); requires
/// equal exponents.
double relative_deviation(const FinSeqVector& a, const FinSeqVector& b);
double max_abs_deviation(const FinSeqVector& a, const FinSeqVector& b);

}  // namespace wbshift::kernels
