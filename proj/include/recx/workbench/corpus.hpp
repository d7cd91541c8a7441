#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "recx/pcf/term.hpp"

namespace recx::workbench {

// Files are named <stem>.<cbv|cbn>.pcf for source programs and <stem>.pcfc
// for recurrences. A program's name is its stem, suffixed with the strategy
// when two files share a stem.
struct CorpusProgram {
  std::string name;
  std::string file;
  bool recurrence = false;
  pcf::Strategy strategy = pcf::Strategy::CBV;  // meaningless for recurrences
  std::string source;

  // Parsed and elaborated. Throws on malformed sources.
  pcf::Term term() const;
};

const std::vector<CorpusProgram>& corpus();
// Throws Error for unknown names.
const CorpusProgram& corpus_program(std::string_view name);

namespace detail {
const std::vector<std::pair<std::string, std::string>>& corpus_files();
}

}  // namespace recx::workbench
