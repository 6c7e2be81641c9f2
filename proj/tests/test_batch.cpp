#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "diorace/batch.hpp"
#include "diorace/json_io.hpp"
#include "diorace/parser.hpp"

using namespace diorace;

namespace {

std::vector<CorpusEntry> corpus_of(const std::string& text) {
  std::istringstream in(text);
  return parse_corpus(in);
}

RaceConfig small_budget() {
  RaceConfig cfg;
  cfg.budget = 20000;
  return cfg;
}

}  // namespace

TEST_CASE("corpus format: labels, comments, blank lines") {
  const auto c = corpus_of("# header\n\nline: x1 + x2 - 5\n  x1^2 - 2   # trailing\n\t\n");
  REQUIRE(c.size() == 2);
  CHECK(c[0].line == 3);
  CHECK(c[0].label == "line");
  CHECK(c[0].text == "x1 + x2 - 5");
  CHECK(c[1].line == 4);
  CHECK(c[1].label == "x1^2 - 2");
  CHECK(c[1].text == "x1^2 - 2");
}

TEST_CASE("three entries decide and reverify") {
  const auto c = corpus_of("a: x1 + x2 - 5\nb: x1^2 + x2^2 - 3\nc: 2*x1 - 1\n");
  const BatchReport r = batch(c, small_budget());
  REQUIRE(r.entries.size() == 3);
  for (const auto& e : r.entries) {
    REQUIRE(std::holds_alternative<Outcome>(e.result));
    CHECK(e.reverified);
    CHECK(std::get<Outcome>(e.result) == decide(parse(e.source.text), small_budget()));
  }
  CHECK(r.summary.has_zero == 1);
  CHECK(r.summary.no_zero == 2);
  CHECK(r.summary.undecided == 0);
  CHECK(r.summary.errors == 0);
}

TEST_CASE("empty corpus gives an empty report") {
  const BatchReport r = batch({}, small_budget());
  CHECK(r.entries.empty());
  CHECK(r.summary.errors == 0);
  CHECK(to_json(r)["entries"].empty());
}

TEST_CASE("malformed line is reported and the run continues") {
  const auto c = corpus_of("good: x1 - 1\nbad: x1 + * 2\nalso: x1^2 + 1\n");
  const BatchReport r = batch(c, small_budget());
  REQUIRE(r.entries.size() == 3);
  CHECK(std::holds_alternative<Outcome>(r.entries[0].result));
  REQUIRE(std::holds_alternative<std::string>(r.entries[1].result));
  CHECK(std::get<std::string>(r.entries[1].result).find("parse error") != std::string::npos);
  CHECK(std::holds_alternative<Outcome>(r.entries[2].result));
  CHECK(r.summary.errors == 1);
  CHECK(r.summary.has_zero + r.summary.no_zero == 2);
}

TEST_CASE("parallel batch report equals the serial one") {
  const auto c = corpus_of(
      "x1 + x2 - 5\nx1^2 + x2^2 - 3\n2*x1 - 1\nx1^2 - 2\nx1*x2 - 7\n3*x1 - 6*x2 + 1\nx1^3 + x2^3 + x3^3 - 42\n"
      "x1^2 - 4*x2^2 - 1\nbroken (\n");
  RaceConfig cfg = small_budget();
  cfg.budget = 2000;
  cfg.trace = true;
  const std::string serial = to_json(batch(c, cfg)).dump();
  cfg.execution = Execution::Parallel;
  CHECK(to_json(batch(c, cfg)).dump() == serial);
}
