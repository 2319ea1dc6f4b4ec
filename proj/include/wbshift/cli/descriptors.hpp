#pragma once

// Operator and point descriptors accepted on the command line.
//
//   weights / operators            points
//   constant:<re[,im]>[:<p>]       e<n>           unit vector e_n
//   example:T1|T2|T3               example3:<K>   the Example-3 point with K entries
//   explicit:<w1,w2,...>[:<p>]     box:<L>        seeded uniform complex box [-10,10]^2, support L
//   blocks:<a>:<b>[:<ab|ba>][:<p>] ones:<L>       L ones
//   powerlaw:<alpha>[:<p>]         file:<path>    JSON vector file
//
// Scaled shifts for conjugate-check are <re[,im]>:<p>.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "wbshift/conjugacy.hpp"
#include "wbshift/seqspace.hpp"

namespace wbshift::cli {

struct WeightDescriptor {
  WeightSequence weights;
  std::optional<Exponent> p;
};

Complex parse_complex(std::string_view text);
double parse_real(std::string_view text);

WeightDescriptor parse_weights(std::string_view text);

/// Operator on l^p; the descriptor's own exponent wins, otherwise default_p.
ShiftOperator parse_operator(std::string_view text, Exponent default_p);

struct ScaledShift {
  Complex lambda;
  Exponent p;
};
ScaledShift parse_scaled_shift(std::string_view text);

FinSeqVector parse_point(std::string_view text, Exponent p, std::uint64_t seed);

/// True for points that stand in for an infinite sequence cut off at its
/// support (example3:K). Orbits of every other point are exact at every step.
bool point_is_truncation(std::string_view text);

/// "key=value" with the expected key; returns the value part.
std::string_view parse_keyed(std::string_view text, std::string_view key);

}  // namespace wbshift::cli
