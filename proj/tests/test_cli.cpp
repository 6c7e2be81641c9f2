#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "diorace/json_io.hpp"

using namespace diorace;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::set<std::string> keys(const json& j) {
  std::set<std::string> out;
  for (const auto& [k, v] : j.items()) out.insert(k);
  return out;
}

// Outcome schema: exactly the fields of the variant, with the right types.
void check_outcome_schema(const json& j) {
  REQUIRE(j.is_object());
  const auto status = j.at("status").get<std::string>();
  if (status == "has_zero") {
    CHECK(keys(j) == std::set<std::string>{"status", "step", "witness"});
    CHECK(j["step"].is_number_unsigned());
    CHECK(j["witness"].is_array());
    for (const auto& x : j["witness"]) CHECK((x.is_number_integer() || x.is_string()));
  } else if (status == "no_zero") {
    CHECK(keys(j) == std::set<std::string>{"status", "step", "certificate"});
    const auto& c = j["certificate"];
    const auto schema = c.at("schema").get<std::string>();
    if (schema == "nonzero_constant") CHECK(keys(c) == std::set<std::string>{"schema"});
    else if (schema == "gcd") CHECK(keys(c) == std::set<std::string>{"schema", "g"});
    else if (schema == "mod") CHECK(keys(c) == std::set<std::string>{"schema", "m"});
    else FAIL("unknown schema " << schema);
  } else if (status == "undecided") {
    CHECK(keys(j) == std::set<std::string>{"status", "budget"});
  } else {
    FAIL("unknown status " << status);
  }
}

// Reads the "key: value" text of decide back into an Outcome.
Outcome parse_text(const std::string& text) {
  std::map<std::string, std::string> kv;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const auto colon = line.find(": ");
    if (colon != std::string::npos) kv[line.substr(0, colon)] = line.substr(colon + 2);
  }
  if (kv["status"] == "has_zero") {
    TupleZ w;
    std::istringstream ws(kv["witness"]);
    std::string item;
    while (std::getline(ws, item, ',')) w.push_back(parse_bigint(item));
    return HasZero{w, std::stoull(kv["step"])};
  }
  if (kv["status"] == "no_zero") {
    std::istringstream cs(kv["certificate"]);
    std::string schema;
    std::uint64_t param = 0;
    cs >> schema >> param;
    const Certificate c = schema == "gcd" ? Certificate::gcd(param)
                          : schema == "mod" ? Certificate::modular(param)
                                            : Certificate::nonzero_constant();
    return NoZero{c, std::stoull(kv["step"])};
  }
  return Undecided{std::stoull(kv["budget"])};
}

const std::vector<std::string> kCorpus = {
    "x1 + x2 - 5", "x1^2 + x2^2 - 3", "2*x1 - 1", "x1^2 - 2", "x1^3 + x2^3 + x3^3 - 42", "x1*x2 - 12",
    "5", "0", "4*x1^2 + 2*x2 + 1", "x1^2 - x2^3 - 1"};

}  // namespace

TEST_CASE("decide JSON: sum of two squares minus 3") {
  const auto r = run({"decide", "x1^2 + x2^2 - 3", "--budget", "100000", "--json"});
  CHECK(r.code == cli::kExitOk);
  const json j = json::parse(r.out);
  check_outcome_schema(j);
  CHECK(j["status"] == "no_zero");
  CHECK(j["certificate"] == json{{"schema", "mod"}, {"m", 4}});
}

TEST_CASE("eval prints the value") {
  const auto r = run({"eval", "x1 + 1", "--at", "2"});
  CHECK(r.code == 0);
  CHECK(r.out == "3\n");
  const auto big = run({"eval", "2 + 3*x1 - 4*x1^3 + (3*x1 - 7*x1^2)*x2 + (1 - 4*x1)*x2^2", "--at", "23, 64", "--json"});
  CHECK(json::parse(big.out)["value"] == -653909);
  const auto huge = run({"eval", "x1^40", "--at", "10", "--json"});
  CHECK(json::parse(huge.out)["value"] == "1" + std::string(40, '0'));
}

TEST_CASE("decide the three-cubes instance is undecided with exit 2") {
  const auto r = run({"decide", "x1^3 + x2^3 + x3^3 - 42", "--budget", "1000"});
  CHECK(r.code == cli::kExitUndecided);
  CHECK(r.out == "status: undecided\nbudget: 1000\n");
}

TEST_CASE("exit code matrix") {
  CHECK(run({}).code == cli::kExitError);
  CHECK(run({"bogus"}).code == cli::kExitError);
  CHECK(run({"--help"}).code == cli::kExitOk);
  CHECK(run({"decide"}).code == cli::kExitError);
  CHECK(run({"decide", "x1 + ", "--json"}).code == cli::kExitError);
  CHECK(run({"decide", "x0"}).code == cli::kExitError);
  CHECK(run({"decide", "x1 - 3", "--budget", "0"}).code == cli::kExitError);
  CHECK(run({"decide", "x1 - 3", "--budget", "abc"}).code == cli::kExitError);
  CHECK(run({"decide", "x1 - 3"}).code == cli::kExitOk);
  CHECK(run({"decide", "x1^2 + 1", "--budget", "3"}).code == cli::kExitUndecided);
  CHECK(run({"eval", "x1 + x2", "--at", "1"}).code == cli::kExitError);
  CHECK(run({"eval", "x1", "--at", "q"}).code == cli::kExitError);
  CHECK(run({"eval", "x1"}).code == cli::kExitError);
  CHECK(run({"decode", "4"}).code == cli::kExitError);
  CHECK(run({"decode", "17764"}).out == "x1\n");
  CHECK(run({"enumerate", "--arity", "0"}).code == cli::kExitError);
  CHECK(run({"batch", "--corpus", "/nonexistent/corpus.txt"}).code == cli::kExitError);
  const auto err = run({"decide", "x1 +"});
  CHECK(err.out.empty());
  CHECK(err.err.find("parse error") != std::string::npos);
}

TEST_CASE("text and JSON report the same outcome; JSON validates") {
  for (const auto& poly : kCorpus) {
    INFO(poly);
    const auto text = run({"decide", poly, "--budget", "20000"});
    const auto js = run({"decide", poly, "--budget", "20000", "--json"});
    CHECK(text.code == js.code);
    const json j = json::parse(js.out);
    check_outcome_schema(j);
    CHECK(outcome_from_json(j) == parse_text(text.out));
    CHECK(text.out == cli::format_outcome_text(outcome_from_json(j)));
  }
}

TEST_CASE("parallel mode prints identical JSON") {
  for (const auto& poly : kCorpus) {
    const auto a = run({"decide", poly, "--budget", "5000", "--json"});
    const auto b = run({"decide", poly, "--budget", "5000", "--json", "--parallel", "--threads", "3"});
    CHECK(a.out == b.out);
  }
}

TEST_CASE("decide by code") {
  const auto enc = run({"encode", "x1^2 + x2^2 - 3"});
  REQUIRE(enc.code == 0);
  std::string code = enc.out;
  code.pop_back();
  const auto by_code = run({"decide", code, "--code", "--json"});
  const auto by_text = run({"decide", "x1^2 + x2^2 - 3", "--json"});
  CHECK(by_code.out == by_text.out);
  const auto decoded = run({"decode", code});
  CHECK(decoded.out == "-3 + x1^2 + x2^2\n");
}

TEST_CASE("enumerate emits one tuple per line") {
  const auto r = run({"enumerate", "--arity", "2", "--count", "5"});
  CHECK(r.out == "0,0\n1,0\n0,1\n-1,0\n1,1\n");
  const auto star = run({"enumerate", "--star", "--count", "3", "--json"});
  const json j = json::parse(star.out);
  REQUIRE(j.size() == 3);
  CHECK(j[0]["tuple"] == json::array({0}));
}

TEST_CASE("trace goes to stderr, JSON stays one document") {
  const auto r = run({"decide", "x1^3 + x2^3 + x3^3 - 42", "--budget", "500", "--json", "--trace", "--verify-cap", "1000"});
  CHECK(r.code == cli::kExitUndecided);
  CHECK(json::parse(r.out).is_object());
  CHECK(r.err.find("trace: indices explored 500") != std::string::npos);
  CHECK(r.err.find("(first: 20 22") != std::string::npos);
}

TEST_CASE("batch over a corpus file") {
  const auto path = std::filesystem::temp_directory_path() / "diorace_cli_corpus.txt";
  {
    std::ofstream f(path);
    f << "# demo corpus\nlinear: x1 + x2 - 5\nsquares: x1^2 + x2^2 - 3\nparity: 2*x1 - 1\n";
  }
  const auto r = run({"batch", "--corpus", path.string(), "--json"});
  CHECK(r.code == cli::kExitOk);
  const json j = json::parse(r.out);
  REQUIRE(j["entries"].size() == 3);
  for (const auto& e : j["entries"]) {
    check_outcome_schema(e["outcome"]);
    CHECK(e["reverified"] == true);
  }
  CHECK(j["summary"]["has_zero"] == 1);
  CHECK(j["summary"]["no_zero"] == 2);

  {
    std::ofstream f(path);
    f << "ok: x1 - 1\nbad: (x1\ncubes: x1^3 + x2^3 + x3^3 - 42\n";
  }
  const auto mixed = run({"batch", "--corpus", path.string(), "--budget", "100"});
  CHECK(mixed.code == cli::kExitError);
  CHECK(mixed.out.find("bad: error") != std::string::npos);
  CHECK(mixed.out.find("summary: has_zero 1, no_zero 0, undecided 1, errors 1") != std::string::npos);
  {
    std::ofstream f(path);
    f << "cubes: x1^3 + x2^3 + x3^3 - 42\n";
  }
  CHECK(run({"batch", "--corpus", path.string(), "--budget", "100"}).code == cli::kExitUndecided);
  std::filesystem::remove(path);
}
