#include "cli.hpp"

#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>
#include <omp.h>

#include "diorace/batch.hpp"
#include "diorace/enumeration.hpp"
#include "diorace/evaluator.hpp"
#include "diorace/goedel.hpp"
#include "diorace/json_io.hpp"
#include "diorace/parser.hpp"

namespace diorace::cli {

namespace {

struct Options {
  std::string polynomial;
  std::string code;
  std::string at;
  std::string corpus;
  Index budget = 100'000;
  std::uint64_t verify_cap = 1'000'000;
  std::size_t arity = 1;
  Index count = 10;
  Index start = 0;
  int threads = 0;
  bool json = false;
  bool trace = false;
  bool star = false;
  bool uniform = false;
  bool parallel = false;
  bool by_code = false;
};

TupleZ parse_point(const std::string& text) {
  TupleZ out;
  if (text.find_first_not_of(" \t") == std::string::npos) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto first = item.find_first_not_of(" \t");
    const auto last = item.find_last_not_of(" \t");
    if (first == std::string::npos) throw std::invalid_argument("empty coordinate in --at");
    out.push_back(parse_bigint(item.substr(first, last - first + 1)));
  }
  return out;
}

std::string join(const TupleZ& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + to_string(xs[i]);
  return s;
}

nlohmann::json tuple_json(const TupleZ& xs) {
  auto arr = nlohmann::json::array();
  for (const auto& x : xs) arr.push_back(bigint_json(x));
  return arr;
}

RaceConfig race_config(const Options& o) {
  RaceConfig cfg;
  if (o.budget < 1) throw std::invalid_argument("--budget must be >= 1");
  if (o.verify_cap < 1) throw std::invalid_argument("--verify-cap must be >= 1");
  cfg.budget = o.budget;
  cfg.verify.max_residue_tuples = o.verify_cap;
  cfg.trace = o.trace;
  cfg.execution = o.parallel ? Execution::Parallel : Execution::Serial;
  cfg.enumeration = o.uniform ? Enumeration::Uniform : Enumeration::PerArity;
  return cfg;
}

int outcome_exit(const Outcome& o) { return std::holds_alternative<Undecided>(o) ? kExitUndecided : kExitOk; }

void print_trace(const RaceTrace& t, std::ostream& err) {
  err << "trace: indices explored " << t.indices_explored << ", modular checks over the residue cap "
      << t.budget_exceeded.size();
  const std::size_t shown = std::min<std::size_t>(t.budget_exceeded.size(), 20);
  if (shown > 0) {
    err << " (first:";
    for (std::size_t i = 0; i < shown; ++i) err << ' ' << t.budget_exceeded[i];
    err << ')';
  }
  err << '\n';
}

int cmd_eval(const Options& o, std::ostream& out) {
  const Poly p = parse(o.polynomial);
  const TupleZ xs = parse_point(o.at);
  const BigInt value = ev(p, xs);
  if (o.json) {
    out << nlohmann::json{{"polynomial", print(p)}, {"point", tuple_json(xs)}, {"value", bigint_json(value)}}.dump()
        << '\n';
  } else {
    out << to_string(value) << '\n';
  }
  return kExitOk;
}

int cmd_encode(const Options& o, std::ostream& out) {
  const Poly p = parse(o.polynomial);
  const DioCode code = encode_goedel(p);
  if (o.json) {
    out << nlohmann::json{{"polynomial", print(p)}, {"arity", p.arity()}, {"code", to_string(code.value)}}.dump()
        << '\n';
  } else {
    out << to_string(code.value) << '\n';
  }
  return kExitOk;
}

int cmd_decode(const Options& o, std::ostream& out) {
  const Poly p = decode_goedel(DioCode{parse_bigint(o.code)});
  if (o.json) {
    out << nlohmann::json{{"polynomial", print(p)}, {"arity", p.arity()}, {"nested", nested_list(p)}}.dump() << '\n';
  } else {
    out << print(p) << '\n';
  }
  return kExitOk;
}

int cmd_enumerate(const Options& o, std::ostream& out) {
  if (!o.star && o.arity < 1) throw std::invalid_argument("--arity must be >= 1");
  auto rows = nlohmann::json::array();
  for (Index i = 0; i < o.count; ++i) {
    const Index n = o.start + i;
    const TupleZ xs = o.star ? ct_star(n) : ct_m(n, o.arity);
    if (o.json) rows.push_back(nlohmann::json{{"index", n}, {"tuple", tuple_json(xs)}});
    else out << join(xs) << '\n';
  }
  if (o.json) out << rows.dump() << '\n';
  return kExitOk;
}

int cmd_decide(const Options& o, std::ostream& out, std::ostream& err) {
  const Poly p = o.by_code ? decode_goedel(DioCode{parse_bigint(o.code)}) : parse(o.polynomial);
  const RaceConfig cfg = race_config(o);
  RaceTrace trace;
  const Outcome outcome = decide(p, cfg, trace);
  if (o.trace) print_trace(trace, err);
  if (o.json) out << to_json(outcome).dump() << '\n';
  else out << format_outcome_text(outcome);
  return outcome_exit(outcome);
}

int cmd_batch(const Options& o, std::ostream& out, std::ostream& err) {
  std::ifstream in(o.corpus);
  if (!in) throw std::runtime_error("cannot open corpus '" + o.corpus + "'");
  const auto corpus = parse_corpus(in);
  const RaceConfig cfg = race_config(o);
  const BatchReport report = batch(corpus, cfg);
  if (o.json) {
    out << to_json(report).dump() << '\n';
  } else {
    for (const auto& e : report.entries) {
      out << e.source.label << ": ";
      if (const auto* msg = std::get_if<std::string>(&e.result)) {
        out << "error " << *msg << '\n';
        continue;
      }
      out << describe(std::get<Outcome>(e.result)) << (e.reverified ? " [reverified]" : " [REVERIFY FAILED]") << '\n';
      if (o.trace) {
        err << e.source.label << ' ';
        print_trace(e.trace, err);
      }
    }
    const auto& s = report.summary;
    out << "summary: has_zero " << s.has_zero << ", no_zero " << s.no_zero << ", undecided " << s.undecided
        << ", errors " << s.errors << ", reverify failures " << s.reverify_failures << '\n';
  }
  if (report.summary.errors > 0 || report.summary.reverify_failures > 0) return kExitError;
  return report.summary.undecided > 0 ? kExitUndecided : kExitOk;
}

void add_race_flags(CLI::App* sub, Options& o) {
  sub->add_option("--budget", o.budget, "Race indices to explore")->capture_default_str();
  sub->add_option("--verify-cap", o.verify_cap, "Max residue tuples per modular check")->capture_default_str();
  sub->add_flag("--trace", o.trace, "Report race statistics on stderr");
  sub->add_flag("--uniform", o.uniform, "Enumerate all tuple lengths (ct_star) instead of the polynomial's arity");
  sub->add_flag("--parallel", o.parallel, "Use the OpenMP kernels");
  sub->add_option("--threads", o.threads, "OpenMP thread count (0 = runtime default)");
}

}  // namespace

std::string format_outcome_text(const Outcome& o) {
  std::ostringstream os;
  if (const auto* z = std::get_if<HasZero>(&o)) {
    os << "status: has_zero\nstep: " << z->step << "\nwitness: " << join(z->witness) << '\n';
  } else if (const auto* n = std::get_if<NoZero>(&o)) {
    os << "status: no_zero\nstep: " << n->step << "\ncertificate: ";
    switch (n->certificate.schema()) {
      case Schema::NonzeroConstant:
        os << "nonzero_constant";
        break;
      case Schema::GcdObstruction:
        os << "gcd " << n->certificate.parameter();
        break;
      case Schema::ModularObstruction:
        os << "mod " << n->certificate.parameter();
        break;
    }
    os << '\n';
  } else {
    os << "status: undecided\nbudget: " << std::get<Undecided>(o).budget << '\n';
  }
  return os.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Race a zero search against a non-nullity certificate search for integer polynomials"};
  app.require_subcommand(1);
  Options o;

  auto* eval = app.add_subcommand("eval", "Evaluate a polynomial at an integer point");
  eval->add_option("polynomial", o.polynomial)->required();
  eval->add_option("--at", o.at, "Comma separated point, one value per variable")->required();

  auto* encode = app.add_subcommand("encode", "Print the natural-number code of a polynomial");
  encode->add_option("polynomial", o.polynomial)->required();

  auto* decode = app.add_subcommand("decode", "Print the polynomial with a given code");
  decode->add_option("code", o.code)->required();

  auto* enumerate = app.add_subcommand("enumerate", "List the first integer tuples of the enumeration");
  enumerate->add_option("--arity", o.arity, "Tuple length m")->capture_default_str();
  enumerate->add_option("--count", o.count, "Number of tuples")->capture_default_str();
  enumerate->add_option("--start", o.start, "First index")->capture_default_str();
  enumerate->add_flag("--star", o.star, "Enumerate tuples of every length");

  auto* decide_cmd = app.add_subcommand("decide", "Race for a zero or a non-nullity certificate");
  decide_cmd->add_option("polynomial", o.polynomial, "Polynomial text, or a code with --code");
  decide_cmd->add_flag("--code", o.by_code, "Treat the argument as a natural-number code");
  add_race_flags(decide_cmd, o);

  auto* batch_cmd = app.add_subcommand("batch", "Decide every polynomial in a corpus file");
  batch_cmd->add_option("--corpus", o.corpus, "One polynomial per line, optional 'label:' prefix")->required();
  add_race_flags(batch_cmd, o);

  for (auto* sub : {eval, encode, decode, enumerate, decide_cmd, batch_cmd}) {
    sub->add_flag("--json", o.json, "Emit one JSON document");
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }

  try {
    if (o.threads > 0) omp_set_num_threads(o.threads);
    if (*eval) return cmd_eval(o, out);
    if (*encode) return cmd_encode(o, out);
    if (*decode) return cmd_decode(o, out);
    if (*enumerate) return cmd_enumerate(o, out);
    if (*decide_cmd) {
      if (o.by_code) o.code = o.polynomial;
      if (o.polynomial.empty()) throw std::invalid_argument("decide needs a polynomial");
      return cmd_decide(o, out, err);
    }
    return cmd_batch(o, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
}

}  // namespace diorace::cli
