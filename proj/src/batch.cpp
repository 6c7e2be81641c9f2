#include "diorace/batch.hpp"

#include <cstdint>
#include <string_view>

#include <omp.h>

#include "diorace/parser.hpp"

namespace diorace {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

void run_entry(BatchEntry& entry, const RaceConfig& cfg) {
  try {
    const Poly p = parse(entry.source.text);
    RaceTrace trace;
    Outcome outcome = decide(p, cfg, trace);
    entry.reverified = reverify(p, outcome, cfg.verify);
    entry.trace = std::move(trace);
    entry.result = std::move(outcome);
  } catch (const std::exception& e) {
    entry.result = std::string(e.what());
    entry.reverified = false;
  }
}

}  // namespace

std::vector<CorpusEntry> parse_corpus(std::istream& in) {
  std::vector<CorpusEntry> out;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    std::string_view view(line);
    if (const auto hash = view.find('#'); hash != std::string_view::npos) view = view.substr(0, hash);
    view = trim(view);
    if (view.empty()) continue;
    CorpusEntry entry;
    entry.line = number;
    if (const auto colon = view.find(':'); colon != std::string_view::npos) {
      entry.label = std::string(trim(view.substr(0, colon)));
      entry.text = std::string(trim(view.substr(colon + 1)));
    } else {
      entry.label = std::string(view);
      entry.text = std::string(view);
    }
    out.push_back(std::move(entry));
  }
  return out;
}

BatchReport batch(const std::vector<CorpusEntry>& corpus, const RaceConfig& cfg) {
  BatchReport report;
  report.entries.resize(corpus.size());
  for (std::size_t i = 0; i < corpus.size(); ++i) report.entries[i].source = corpus[i];

  if (cfg.execution == Execution::Parallel) {
    RaceConfig inner = cfg;
    inner.execution = Execution::Serial;
    const auto n = static_cast<std::int64_t>(corpus.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t i = 0; i < n; ++i) run_entry(report.entries[static_cast<std::size_t>(i)], inner);
  } else {
    for (auto& entry : report.entries) run_entry(entry, cfg);
  }

  for (const auto& entry : report.entries) {
    if (std::holds_alternative<std::string>(entry.result)) {
      ++report.summary.errors;
      continue;
    }
    const auto& o = std::get<Outcome>(entry.result);
    if (std::holds_alternative<HasZero>(o)) ++report.summary.has_zero;
    else if (std::holds_alternative<NoZero>(o)) ++report.summary.no_zero;
    else ++report.summary.undecided;
    if (!entry.reverified) ++report.summary.reverify_failures;
  }
  return report;
}

}  // namespace diorace
