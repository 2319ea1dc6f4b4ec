#pragma once

// JSON and CSV forms of the library's value types.
//
//   vector   {"p": 2, "coords": [[re, im], ...]}
//   weights  {"kind": "constant", "lambda": [re, im]}
//            {"kind": "explicit", "weights": [[re, im], ...]}
//            {"kind": "blocks", "a": [re, im], "b": [re, im], "order": "ab"|"ba"}
//            {"kind": "powerlaw", "alpha": a}
//   map      {"domain_p": p, "codomain_p": q, "steps": [{"type": "h", "p", "s"},
//             {"type": "g", "p", "q"}, {"type": "diag", "ratio": [re, im]}]}

#include <iosfwd>
#include <span>
#include <string>

#include <json.hpp>

#include "wbshift/conjugacy.hpp"
#include "wbshift/dynamics.hpp"

namespace wbshift {

using Json = nlohmann::ordered_json;

Json to_json(Complex z);
Json to_json(const FinSeqVector& x);
Json to_json(const WeightSequence& w);
Json to_json(const ShiftOperator& T);
Json to_json(const ConjugacyMap& h);
Json to_json(const ConjugacyResidualReport& r);
Json to_json(const DynamicsVerdict& v);
Json to_json(const OrbitTrace& t);

/// Parsers throw PreconditionError with a path-like message on malformed input.
Complex complex_from_json(const Json& j);
FinSeqVector vector_from_json(const Json& j);
WeightSequence weights_from_json(const Json& j);
ConjugacyMap map_from_json(const Json& j);

/// Header "n,<column>", one row per element starting at first_index, LF endings.
void write_csv(std::ostream& out, const std::string& column, std::span<const double> values,
               std::size_t first_index);

/// Shortest round-trip decimal form of a double.
std::string format_double(double v);

}  // namespace wbshift
