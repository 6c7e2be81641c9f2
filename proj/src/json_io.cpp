#include "diorace/json_io.hpp"

#include <limits>
#include <stdexcept>

namespace diorace {

using nlohmann::json;

json bigint_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(v);
  }
  return to_string(v);
}

BigInt bigint_from_json(const json& j) {
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) return parse_bigint(j.get<std::string>());
  throw std::invalid_argument("expected an integer");
}

json to_json(const Certificate& c) {
  switch (c.schema()) {
    case Schema::NonzeroConstant:
      return json{{"schema", "nonzero_constant"}};
    case Schema::GcdObstruction:
      return json{{"schema", "gcd"}, {"g", c.parameter()}};
    case Schema::ModularObstruction:
      return json{{"schema", "mod"}, {"m", c.parameter()}};
  }
  return json{};
}

Certificate certificate_from_json(const json& j) {
  const auto schema = j.at("schema").get<std::string>();
  if (schema == "nonzero_constant") return Certificate::nonzero_constant();
  if (schema == "gcd") return Certificate::gcd(j.at("g").get<std::uint64_t>());
  if (schema == "mod") return Certificate::modular(j.at("m").get<std::uint64_t>());
  throw std::invalid_argument("unknown certificate schema '" + schema + "'");
}

json to_json(const Outcome& o) {
  if (const auto* z = std::get_if<HasZero>(&o)) {
    json witness = json::array();
    for (const auto& x : z->witness) witness.push_back(bigint_json(x));
    return json{{"status", "has_zero"}, {"step", z->step}, {"witness", std::move(witness)}};
  }
  if (const auto* n = std::get_if<NoZero>(&o)) {
    return json{{"status", "no_zero"}, {"step", n->step}, {"certificate", to_json(n->certificate)}};
  }
  return json{{"status", "undecided"}, {"budget", std::get<Undecided>(o).budget}};
}

Outcome outcome_from_json(const json& j) {
  const auto status = j.at("status").get<std::string>();
  if (status == "has_zero") {
    TupleZ witness;
    for (const auto& x : j.at("witness")) witness.push_back(bigint_from_json(x));
    return HasZero{std::move(witness), j.at("step").get<Index>()};
  }
  if (status == "no_zero") return NoZero{certificate_from_json(j.at("certificate")), j.at("step").get<Index>()};
  if (status == "undecided") return Undecided{j.at("budget").get<Index>()};
  throw std::invalid_argument("unknown outcome status '" + status + "'");
}

json to_json(const RaceTrace& t) {
  return json{{"indices_explored", t.indices_explored},
              {"budget_exceeded_count", t.budget_exceeded.size()},
              {"budget_exceeded", t.budget_exceeded}};
}

json to_json(const BatchReport& r) {
  json entries = json::array();
  for (const auto& e : r.entries) {
    json item{{"line", e.source.line}, {"label", e.source.label}, {"input", e.source.text}};
    if (const auto* err = std::get_if<std::string>(&e.result)) {
      item["error"] = *err;
    } else {
      item["outcome"] = to_json(std::get<Outcome>(e.result));
      item["reverified"] = e.reverified;
    }
    entries.push_back(std::move(item));
  }
  const auto& s = r.summary;
  return json{{"entries", std::move(entries)},
              {"summary",
               {{"has_zero", s.has_zero},
                {"no_zero", s.no_zero},
                {"undecided", s.undecided},
                {"errors", s.errors},
                {"reverify_failures", s.reverify_failures}}}};
}

std::string describe(const Outcome& o) {
  if (const auto* z = std::get_if<HasZero>(&o)) {
    std::string w = "(";
    for (std::size_t i = 0; i < z->witness.size(); ++i) w += (i ? ", " : "") + to_string(z->witness[i]);
    return "has_zero witness=" + w + ") step=" + std::to_string(z->step);
  }
  if (const auto* n = std::get_if<NoZero>(&o)) {
    return "no_zero certificate=" + n->certificate.describe() + " step=" + std::to_string(n->step);
  }
  return "undecided budget=" + std::to_string(std::get<Undecided>(o).budget);
}

}  // namespace diorace
