#include "diorace/race.hpp"

#include "diorace/evaluator.hpp"

namespace diorace {

namespace {

Outcome decide_constant(const Poly& p) {
  if (p.constant_term().is_zero()) return HasZero{TupleZ{}, 0};
  return NoZero{Certificate::nonzero_constant(), 0};
}

// Budget-exceeded checks depend only on (modulus, arity), so the trace is
// rebuilt after the race instead of being collected from worker threads.
void fill_trace(const Poly& p, const RaceConfig& cfg, const Outcome& outcome, RaceTrace& trace) {
  trace = RaceTrace{};
  Index last = cfg.budget;  // exclusive
  bool phi1_at_last = false;
  if (const auto* z = std::get_if<HasZero>(&outcome)) {
    last = z->step;
  } else if (const auto* n = std::get_if<NoZero>(&outcome)) {
    last = n->step;
    phi1_at_last = true;
  }
  trace.indices_explored = std::holds_alternative<Undecided>(outcome) ? cfg.budget : last + 1;
  const Index end = phi1_at_last ? last + 1 : last;
  for (Index k = 0; k < end; ++k) {
    if (exceeds_budget(cert_decode(k), p, cfg.verify)) trace.budget_exceeded.push_back(k);
  }
}

}  // namespace

Outcome decide(const Poly& input, const RaceConfig& cfg) {
  RaceTrace unused;
  RaceConfig quiet = cfg;
  quiet.trace = false;
  return decide(input, quiet, unused);
}

Outcome decide(const Poly& input, const RaceConfig& cfg, RaceTrace& trace) {
  const Poly p = input.is_normalized() ? input : normalize(input);
  if (p.arity() == 0) {
    trace = RaceTrace{};
    return decide_constant(p);
  }
  const std::size_t arity = p.arity();
  const CompiledPoly compiled(p);

  StepPredicate phi0;
  if (cfg.enumeration == Enumeration::PerArity) {
    phi0 = [&](Index k) { return compiled.eval(ct_m(k, arity)).is_zero(); };
  } else {
    phi0 = [&](Index k) {
      const TupleZ xs = ct_star(k);
      return xs.size() == arity && compiled.eval(xs).is_zero();
    };
  }
  const StepPredicate phi1 = [&](Index k) {
    return verify(cert_decode(k), p, cfg.verify, Execution::Serial) == VerifyResult::True;
  };

  const auto race = cfg.execution == Execution::Parallel ? mu_or_omp(phi0, phi1, cfg.budget, cfg.chunk)
                                                         : mu_or(phi0, phi1, cfg.budget);
  Outcome outcome = Undecided{cfg.budget};
  if (race && race->winner == RaceWinner::ZeroSearch) {
    outcome = HasZero{cfg.enumeration == Enumeration::PerArity ? ct_m(race->step, arity) : ct_star(race->step),
                      race->step};
  } else if (race) {
    outcome = NoZero{cert_decode(race->step), race->step};
  }
  if (cfg.trace) fill_trace(p, cfg, outcome, trace);
  else trace = RaceTrace{};
  return outcome;
}

Outcome decide_code(const DioCode& code, const RaceConfig& cfg) { return decide(decode_goedel(code), cfg); }

bool reverify(const Poly& p, const Outcome& outcome, const VerifyBudget& budget) {
  if (const auto* z = std::get_if<HasZero>(&outcome)) {
    return z->witness.size() == p.arity() && ev(p, z->witness).is_zero() && ev_naive(p, z->witness).is_zero();
  }
  if (const auto* n = std::get_if<NoZero>(&outcome)) {
    return verify(n->certificate, p, budget) == VerifyResult::True;
  }
  return true;
}

}  // namespace diorace
