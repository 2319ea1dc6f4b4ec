#include "wbshift/cli/descriptors.hpp"

#include <charconv>
#include <fstream>
#include <random>
#include <sstream>
#include <vector>

#include "wbshift/dynamics.hpp"
#include "wbshift/serialize.hpp"

namespace wbshift::cli {

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

[[noreturn]] void bad(std::string_view text, const std::string& why) {
  throw PreconditionError("bad descriptor '" + std::string(text) + "': " + why);
}

std::size_t parse_count(std::string_view text, std::string_view whole) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) bad(whole, "expected a nonnegative integer");
  return v;
}

}  // namespace

double parse_real(std::string_view text) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size())
    throw PreconditionError("expected a real number, got '" + std::string(text) + "'");
  return v;
}

Complex parse_complex(std::string_view text) {
  const auto parts = split(text, ',');
  if (parts.size() == 1) return {parse_real(parts[0]), 0.0};
  if (parts.size() == 2) return {parse_real(parts[0]), parse_real(parts[1])};
  throw PreconditionError("expected <re> or <re>,<im>, got '" + std::string(text) + "'");
}

WeightDescriptor parse_weights(std::string_view text) {
  const auto parts = split(text, ':');
  const auto kind = parts[0];
  auto exponent_at = [&](std::size_t i) -> std::optional<Exponent> {
    if (parts.size() <= i) return std::nullopt;
    return Exponent{parse_real(parts[i])};
  };

  if (kind == "constant") {
    if (parts.size() < 2 || parts.size() > 3) bad(text, "use constant:<re[,im]>[:<p>]");
    return {WeightSequence::constant(parse_complex(parts[1])), exponent_at(2)};
  }
  if (kind == "example") {
    if (parts.size() != 2) bad(text, "use example:T1|T2|T3");
    Example which;
    if (parts[1] == "T1")
      which = Example::T1;
    else if (parts[1] == "T2")
      which = Example::T2;
    else if (parts[1] == "T3")
      which = Example::T3;
    else
      bad(text, "unknown example");
    auto op = make_example(which);
    return {op.weights, op.p};
  }
  if (kind == "explicit") {
    if (parts.size() < 2 || parts.size() > 3) bad(text, "use explicit:<w1,w2,...>[:<p>]");
    std::vector<Complex> ws;
    for (auto w : split(parts[1], ',')) ws.emplace_back(parse_real(w), 0.0);
    return {WeightSequence::explicit_list(std::move(ws)), exponent_at(2)};
  }
  if (kind == "blocks") {
    if (parts.size() < 3 || parts.size() > 5) bad(text, "use blocks:<a>:<b>[:<ab|ba>][:<p>]");
    BlockOrder order = BlockOrder::AFirst;
    std::size_t next = 3;
    if (parts.size() > 3 && (parts[3] == "ab" || parts[3] == "ba")) {
      order = parts[3] == "ab" ? BlockOrder::AFirst : BlockOrder::BFirst;
      next = 4;
    }
    if (parts.size() > next + 1) bad(text, "too many fields");
    return {WeightSequence::balanced_blocks(parse_complex(parts[1]), parse_complex(parts[2]), order),
            exponent_at(next)};
  }
  if (kind == "powerlaw") {
    if (parts.size() < 2 || parts.size() > 3) bad(text, "use powerlaw:<alpha>[:<p>]");
    return {WeightSequence::power_law(parse_real(parts[1])), exponent_at(2)};
  }
  bad(text, "unknown weight kind");
}

ShiftOperator parse_operator(std::string_view text, Exponent default_p) {
  auto d = parse_weights(text);
  return {std::move(d.weights), d.p.value_or(default_p)};
}

ScaledShift parse_scaled_shift(std::string_view text) {
  const auto parts = split(text, ':');
  if (parts.size() != 2) bad(text, "use <re[,im]>:<p>");
  return {parse_complex(parts[0]), Exponent{parse_real(parts[1])}};
}

FinSeqVector parse_point(std::string_view text, Exponent p, std::uint64_t seed) {
  if (text.size() > 1 && text[0] == 'e' && text.find(':') == std::string_view::npos)
    return FinSeqVector::unit(p, parse_count(text.substr(1), text));

  const auto colon = text.find(':');
  if (colon == std::string_view::npos) bad(text, "unknown point");
  const auto kind = text.substr(0, colon);
  const auto arg = text.substr(colon + 1);

  if (kind == "example3") {
    if (!(p == Exponent{2.0})) bad(text, "the Example-3 point lives on l^2");
    return example3_point(parse_count(arg, text));
  }
  if (kind == "ones") return FinSeqVector(p, std::vector<Complex>(parse_count(arg, text), Complex{1.0, 0.0}));
  if (kind == "box") {
    const auto L = parse_count(arg, text);
    if (L == 0) bad(text, "support length must be positive");
    SampleSpec spec;
    spec.p = p;
    spec.count = 1;
    spec.min_support = L;
    spec.max_support = L;
    spec.seed = seed;
    return random_samples(spec).front();
  }
  if (kind == "file") {
    std::ifstream in{std::string(arg)};
    if (!in) bad(text, "cannot open file");
    Json j;
    try {
      j = Json::parse(in);
    } catch (const Json::parse_error& e) {
      bad(text, e.what());
    }
    auto x = vector_from_json(j);
    if (!(x.exponent() == p)) throw ExponentMismatch(p.value(), x.p());
    return x;
  }
  bad(text, "unknown point kind");
}

bool point_is_truncation(std::string_view text) { return text.rfind("example3:", 0) == 0; }

std::string_view parse_keyed(std::string_view text, std::string_view key) {
  if (text.size() <= key.size() + 1 || text.substr(0, key.size()) != key || text[key.size()] != '=')
    throw PreconditionError("expected " + std::string(key) + "=<value>, got '" + std::string(text) + "'");
  return text.substr(key.size() + 1);
}

}  // namespace wbshift::cli
