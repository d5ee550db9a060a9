#pragma once

// Hand-written proof scripts from corpus/, compiled into the library.

#include <string_view>
#include <vector>

namespace etf::harness {

struct CorpusEntry {
  std::string_view name;  // file stem
  std::string_view json;
};

const std::vector<CorpusEntry>& corpus();
// Throws std::out_of_range for an unknown name.
std::string_view corpus_script(std::string_view name);

}  // namespace etf::harness
