#include "corpus.hpp"

#include <stdexcept>
#include <string>

namespace etf::harness {

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> entries = {
#include "corpus_data.inc"
  };
  return entries;
}

std::string_view corpus_script(std::string_view name) {
  for (const auto& e : corpus())
    if (e.name == name) return e.json;
  throw std::out_of_range("no corpus script '" + std::string(name) + "'");
}

}  // namespace etf::harness
