#pragma once

#include "flexcontact/json_io.hpp"

#include <optional>
#include <string>
#include <vector>

namespace flexcontact {

struct CorpusOptions {
  std::optional<std::string> only;  // run a single named case
  std::optional<int> copies;        // i for the wedge family (default 1..10)
  bool inject_degree_zero = false;  // seed a failing orbit into the ADC case
  std::size_t scaling_grid = 2001;
};

struct CorpusCase {
  std::string name;
  bool pass = false;
  std::string detail;
  Json result;
};

std::vector<std::string> corpus_case_names();

/// Throws InvalidInput for an unknown case name.
std::vector<CorpusCase> run_corpus(const CorpusOptions& options);

}  // namespace flexcontact
