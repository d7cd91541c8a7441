#include "recx/workbench/corpus.hpp"

#include <map>

#include "recx/pcf/syntax.hpp"
#include "recx/pcfc/pcfc.hpp"

namespace recx::workbench {

pcf::Term CorpusProgram::term() const {
  if (recurrence) return pcfc::parse_pcfc(source);
  return pcf::parse_pcf(source, strategy).term;
}

namespace {

std::vector<CorpusProgram> load() {
  std::vector<CorpusProgram> out;
  std::map<std::string, int> stems;
  for (const auto& [file, source] : detail::corpus_files()) {
    CorpusProgram p;
    p.file = file;
    p.source = source;
    auto dot = file.find('.');
    p.name = file.substr(0, dot);
    std::string rest = file.substr(dot + 1);
    if (rest == "pcfc") {
      p.recurrence = true;
    } else {
      p.strategy = rest.rfind("cbn", 0) == 0 ? pcf::Strategy::CBN : pcf::Strategy::CBV;
    }
    ++stems[p.name];
    out.push_back(std::move(p));
  }
  for (auto& p : out)
    if (stems[p.name] > 1 && !p.recurrence) p.name += p.strategy == pcf::Strategy::CBN ? "-cbn" : "-cbv";
  return out;
}

}  // namespace

const std::vector<CorpusProgram>& corpus() {
  static const std::vector<CorpusProgram> programs = load();
  return programs;
}

const CorpusProgram& corpus_program(std::string_view name) {
  for (const auto& p : corpus())
    if (p.name == name) return p;
  throw Error("no corpus program named '" + std::string(name) + "'");
}

}  // namespace recx::workbench
