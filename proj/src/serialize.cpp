#include "wbshift/serialize.hpp"

#include <charconv>
#include <ostream>

namespace wbshift {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw PreconditionError("malformed JSON: " + what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) malformed(std::string("expected an object holding '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) malformed(std::string("missing field '") + key + "'");
  return *it;
}

double number(const Json& j, const char* what) {
  if (!j.is_number()) malformed(std::string(what) + " must be a number");
  return j.get<double>();
}

Json string_or_number(double v) {
  // nlohmann writes non-finite doubles as null; keep them readable.
  if (std::isfinite(v)) return v;
  if (std::isnan(v)) return "nan";
  return v > 0 ? "inf" : "-inf";
}

Json step_to_json(const MapStep& step) {
  Json j;
  if (const auto* h = std::get_if<HStep>(&step)) {
    j["type"] = "h";
    j["p"] = h->p.value();
    j["s"] = h->s;
  } else if (const auto* g = std::get_if<GStep>(&step)) {
    j["type"] = "g";
    j["p"] = g->p.value();
    j["q"] = g->q.value();
  } else {
    j["type"] = "diag";
    j["ratio"] = to_json(std::get<DiagStep>(step).ratio);
  }
  return j;
}

std::string order_name(BlockOrder o) { return o == BlockOrder::AFirst ? "ab" : "ba"; }

}  // namespace

Json to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Json to_json(const FinSeqVector& x) {
  Json j;
  j["p"] = x.p();
  Json coords = Json::array();
  for (const auto& z : x.coords()) coords.push_back(to_json(z));
  j["coords"] = std::move(coords);
  return j;
}

Json to_json(const WeightSequence& w) {
  Json j;
  j["kind"] = w.kind();
  std::visit(
      [&](const auto& g) {
        using G = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<G, ConstantWeights>) {
          j["lambda"] = to_json(g.lambda);
        } else if constexpr (std::is_same_v<G, ExplicitWeights>) {
          Json ws = Json::array();
          for (const auto& z : g.weights) ws.push_back(to_json(z));
          j["weights"] = std::move(ws);
        } else if constexpr (std::is_same_v<G, BalancedBlocks>) {
          j["a"] = to_json(g.a);
          j["b"] = to_json(g.b);
          j["order"] = order_name(g.order);
        } else {
          j["alpha"] = g.alpha;
        }
      },
      w.generator());
  return j;
}

Json to_json(const ShiftOperator& T) {
  Json j;
  j["p"] = T.p.value();
  j["weights"] = to_json(T.weights);
  return j;
}

Json to_json(const ConjugacyMap& h) {
  Json j;
  j["domain_p"] = h.domain_p().value();
  j["codomain_p"] = h.codomain_p().value();
  Json steps = Json::array();
  for (const auto& s : h.steps()) steps.push_back(step_to_json(s));
  j["steps"] = std::move(steps);
  return j;
}

Json to_json(const ConjugacyResidualReport& r) {
  Json j;
  j["max_residual"] = r.max_residual;
  j["seed"] = r.seed ? Json(*r.seed) : Json(nullptr);
  j["sample_count"] = r.sample_count;
  j["worst_index"] = r.worst_index;
  j["worst_input"] = r.worst_input ? to_json(*r.worst_input) : Json(nullptr);
  j["per_sample"] = r.per_sample;
  return j;
}

Json to_json(const DynamicsVerdict& v) {
  Json j;
  j["label"] = to_string(v.label);
  j["confidence"] = to_string(v.confidence);
  j["horizon"] = v.horizon;
  const auto& e = v.evidence;
  Json ev;
  ev["window"] = e.window;
  ev["log_inverse_power_sum"] = string_or_number(e.log_inverse_power_sum);
  ev["decade_increment"] = string_or_number(e.decade_increment);
  ev["head_min_log_beta"] = string_or_number(e.head_min_log_beta);
  ev["head_max_log_beta"] = string_or_number(e.head_max_log_beta);
  ev["tail_min_log_beta"] = string_or_number(e.tail_min_log_beta);
  ev["tail_max_log_beta"] = string_or_number(e.tail_max_log_beta);
  ev["window_min_log_beta"] = string_or_number(e.window_min_log_beta);
  ev["window_max_log_beta"] = string_or_number(e.window_max_log_beta);
  j["evidence"] = std::move(ev);
  return j;
}

Json to_json(const OrbitTrace& t) {
  Json j;
  j["operator"] = t.operator_label;
  j["start"] = t.start_label;
  j["requested"] = t.requested;
  j["valid_horizon"] = t.valid_horizon;
  j["truncated"] = t.truncated;
  j["norms"] = t.norms;
  return j;
}

Complex complex_from_json(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2) return {number(j[0], "real part"), number(j[1], "imaginary part")};
  malformed("complex numbers are [re, im] or a plain number");
}

FinSeqVector vector_from_json(const Json& j) {
  const double p = number(field(j, "p"), "'p'");
  const Json& coords = field(j, "coords");
  if (!coords.is_array()) malformed("'coords' must be an array");
  std::vector<Complex> c;
  c.reserve(coords.size());
  for (const auto& z : coords) c.push_back(complex_from_json(z));
  return FinSeqVector(Exponent{p}, std::move(c));
}

WeightSequence weights_from_json(const Json& j) {
  const Json& kind = field(j, "kind");
  if (!kind.is_string()) malformed("'kind' must be a string");
  const auto k = kind.get<std::string>();
  if (k == "constant") return WeightSequence::constant(complex_from_json(field(j, "lambda")));
  if (k == "explicit") {
    const Json& ws = field(j, "weights");
    if (!ws.is_array()) malformed("'weights' must be an array");
    std::vector<Complex> w;
    for (const auto& z : ws) w.push_back(complex_from_json(z));
    return WeightSequence::explicit_list(std::move(w));
  }
  if (k == "blocks") {
    BlockOrder order = BlockOrder::AFirst;
    if (auto it = j.find("order"); it != j.end()) {
      if (*it == "ab")
        order = BlockOrder::AFirst;
      else if (*it == "ba")
        order = BlockOrder::BFirst;
      else
        malformed("'order' must be \"ab\" or \"ba\"");
    }
    return WeightSequence::balanced_blocks(complex_from_json(field(j, "a")), complex_from_json(field(j, "b")),
                                           order);
  }
  if (k == "powerlaw") return WeightSequence::power_law(number(field(j, "alpha"), "'alpha'"));
  malformed("unknown weight kind '" + k + "'");
}

ConjugacyMap map_from_json(const Json& j) {
  auto map = ConjugacyMap::identity(Exponent{number(field(j, "domain_p"), "'domain_p'")});
  const Json& steps = field(j, "steps");
  if (!steps.is_array()) malformed("'steps' must be an array");
  for (const auto& s : steps) {
    const Json& type = field(s, "type");
    if (type == "h")
      map.then(HStep{Exponent{number(field(s, "p"), "'p'")}, number(field(s, "s"), "'s'")});
    else if (type == "g")
      map.then(GStep{Exponent{number(field(s, "p"), "'p'")}, Exponent{number(field(s, "q"), "'q'")}});
    else if (type == "diag")
      map.then(DiagStep{complex_from_json(field(s, "ratio"))});
    else
      malformed("unknown step type");
  }
  if (!(map.codomain_p() == Exponent{number(field(j, "codomain_p"), "'codomain_p'")}))
    malformed("'codomain_p' does not match the step chain");
  return map;
}

std::string format_double(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

void write_csv(std::ostream& out, const std::string& column, std::span<const double> values,
               std::size_t first_index) {
  out << "n," << column << '\n';
  for (std::size_t i = 0; i < values.size(); ++i) out << (first_index + i) << ',' << format_double(values[i]) << '\n';
}

}  // namespace wbshift
