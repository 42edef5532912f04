#include "qgame/spec_io.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <random>
#include <sstream>

#include "qgame/errors.hpp"

namespace qgame {

namespace {

using Json = nlohmann::ordered_json;

constexpr std::array<const char*, 10> kParamKeys = {
    "s1", "s2", "s3", "s5", "s6", "s7", "s8", "s9", "s13", "s14"};

std::array<Rational*, 10> param_slots(GameParams& p) {
  return {&p.s1, &p.s2, &p.s3, &p.s5, &p.s6, &p.s7, &p.s8, &p.s9, &p.s13, &p.s14};
}

std::array<const Rational*, 10> param_slots(const GameParams& p) {
  return {&p.s1, &p.s2, &p.s3, &p.s5, &p.s6, &p.s7, &p.s8, &p.s9, &p.s13, &p.s14};
}

Rational parse_param(const Json& value, const std::string& key) {
  try {
    if (value.is_number_integer()) return Rational(value.get<long long>());
    if (value.is_string()) return parse_fraction(value.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw ParseError("parameter " + key + ": " + e.what());
  }
  throw ParseError("parameter " + key + " must be an integer or a fraction string");
}

}  // namespace

GameSpecDocument parse_game_spec(const std::string& json_text) {
  Json doc;
  try {
    doc = Json::parse(json_text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("top level must be an object");

  GameSpecDocument spec;
  for (const auto& [key, value] : doc.items()) {
    if (key == "label") {
      if (!value.is_string()) throw ParseError("label must be a string");
      spec.label = value.get<std::string>();
    } else if (key == "params") {
      if (!value.is_object()) throw ParseError("params must be an object");
      auto slots = param_slots(spec.params);
      for (std::size_t i = 0; i < kParamKeys.size(); ++i) {
        if (!value.contains(kParamKeys[i]))
          throw ParseError(std::string("missing parameter key ") + kParamKeys[i]);
        *slots[i] = parse_param(value.at(kParamKeys[i]), kParamKeys[i]);
      }
      for (const auto& [pkey, pvalue] : value.items()) {
        (void)pvalue;
        bool known = false;
        for (const char* k : kParamKeys) known = known || pkey == k;
        if (!known) throw ParseError("unknown parameter key " + pkey);
      }
    } else if (key == "options") {
      if (!value.is_object()) throw ParseError("options must be an object");
      for (const auto& [okey, ovalue] : value.items()) {
        if (okey == "tolerance")
          spec.options.tolerance = ovalue.get<double>();
        else if (okey == "grid_step")
          spec.options.grid_step = ovalue.get<double>();
        else
          throw ParseError("unknown option key " + okey);
      }
    } else {
      throw ParseError("unknown top-level key " + key);
    }
  }
  if (!doc.contains("params")) throw ParseError("missing params object");
  return spec;
}

GameSpecDocument load_game_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open spec file " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_game_spec(buffer.str());
}

std::string game_spec_to_json(const GameSpecDocument& doc) {
  Json out;
  out["label"] = doc.label;
  Json params = Json::object();
  const auto slots = param_slots(doc.params);
  for (std::size_t i = 0; i < kParamKeys.size(); ++i)
    params[kParamKeys[i]] = format_fraction(*slots[i]);
  out["params"] = params;
  out["options"] = {{"tolerance", doc.options.tolerance},
                    {"grid_step", doc.options.grid_step}};
  return out.dump(2);
}

GameSpecDocument pappa_spec() {
  GameSpecDocument doc;
  doc.label = "pappa";
  doc.params = {Rational(0), Rational(1), Rational(1, 2), Rational(0), Rational(1),
                Rational(1, 2), Rational(0), Rational(0), Rational(3, 4), Rational(0)};
  return doc;
}

std::vector<GameSpecDocument> sample_games(int count, std::uint64_t seed,
                                           const SampleOptions& options) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> numerator(-options.max_numerator,
                                               options.max_numerator);
  const Rational den(options.denominator);

  std::vector<GameSpecDocument> out;
  std::int64_t attempts = 0;
  while (static_cast<int>(out.size()) < count) {
    if (++attempts > options.attempt_budget)
      throw SamplingExhausted("no valid game found within " +
                              std::to_string(options.attempt_budget) + " attempts");
    GameParams p;
    p.s1 = Rational(numerator(rng)) / den;
    p.s2 = Rational(numerator(rng)) / den;
    p.s3 = Rational(numerator(rng)) / den;
    p.s5 = Rational(numerator(rng)) / den;
    p.s6 = Rational(numerator(rng)) / den;
    p.s7 = Rational(numerator(rng)) / den;
    p.s9 = Rational(numerator(rng)) / den;
    p.s13 = Rational(numerator(rng)) / den;
    p.s14 = Rational(numerator(rng)) / den;
    // The fairness constraint is an equality: solve for s8 instead of
    // rejection-testing a measure-zero event.
    p.s8 = 2 * p.s1 - p.s2 - p.s3 - p.s5 + p.s6 + p.s7;

    bool ok = true;
    for (const auto& v : check_conflict_conditions(p)) ok = ok && v.holds();
    if (!ok) continue;

    GameSpecDocument doc;
    doc.label = "sample-" + std::to_string(seed) + "-" + std::to_string(out.size());
    doc.params = p;
    out.push_back(std::move(doc));
  }
  return out;
}

}  // namespace qgame
