#ifndef DIORACE_JSON_IO_HPP
#define DIORACE_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "diorace/batch.hpp"
#include "diorace/race.hpp"

namespace diorace {

// {"schema": "nonzero_constant"} | {"schema": "gcd", "g": n} | {"schema": "mod", "m": n}
nlohmann::json to_json(const Certificate& c);
Certificate certificate_from_json(const nlohmann::json& j);

// {"status": "has_zero", "step": n, "witness": [..]}
// {"status": "no_zero", "step": n, "certificate": {..}}
// {"status": "undecided", "budget": n}
nlohmann::json to_json(const Outcome& o);
Outcome outcome_from_json(const nlohmann::json& j);

nlohmann::json to_json(const RaceTrace& t);
nlohmann::json to_json(const BatchReport& r);

/// Integers that fit in 64 bits become JSON numbers, larger ones strings.
nlohmann::json bigint_json(const BigInt& v);
BigInt bigint_from_json(const nlohmann::json& j);

/// One-line human readable outcome.
std::string describe(const Outcome& o);

}  // namespace diorace

#endif
