#ifndef DIORACE_BATCH_HPP
#define DIORACE_BATCH_HPP

#include <cstddef>
#include <istream>
#include <string>
#include <variant>
#include <vector>

#include "diorace/race.hpp"

namespace diorace {

/// One corpus line: "label: polynomial" or just "polynomial".
struct CorpusEntry {
  std::size_t line = 0;
  std::string label;
  std::string text;
};

/// Skips blank lines and '#' comments (whole line or trailing).
std::vector<CorpusEntry> parse_corpus(std::istream& in);

struct BatchEntry {
  CorpusEntry source;
  /// Outcome, or the parse error message.
  std::variant<Outcome, std::string> result;
  RaceTrace trace;
  bool reverified = false;
};

struct BatchSummary {
  std::size_t has_zero = 0;
  std::size_t no_zero = 0;
  std::size_t undecided = 0;
  std::size_t errors = 0;
  std::size_t reverify_failures = 0;
};

struct BatchReport {
  std::vector<BatchEntry> entries;
  BatchSummary summary;
};

/// Decides every entry. Parallel execution fans out across entries with
/// each race run serially; the report is identical either way.
BatchReport batch(const std::vector<CorpusEntry>& corpus, const RaceConfig& cfg);

}  // namespace diorace

#endif
