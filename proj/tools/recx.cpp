// recx: run, embed, extract and check programs from the command line.
//
// Exit codes: 0 success, 1 bound violation or cost mismatch, 2 parse or type
// error, 3 internal error.

#include <fstream>
#include <iostream>
#include <iterator>
#include <limits>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "recx/cbpv/syntax.hpp"
#include "recx/embed.hpp"
#include "recx/extract.hpp"
#include "recx/model/sized.hpp"
#include "recx/pcf/machine.hpp"
#include "recx/pcf/syntax.hpp"
#include "recx/pcf/typecheck.hpp"
#include "recx/pcfc/pcfc.hpp"
#include "recx/simplify.hpp"
#include "recx/workbench/check.hpp"
#include "recx/workbench/corpus.hpp"
#include "recx/workbench/generate.hpp"

using namespace recx;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kInputError = 2;
constexpr int kInternal = 3;

struct RunConfig {
  std::string command;
  std::string input;
  std::string strategy;  // empty: inferred
  std::uint64_t fuel = kDefaultFuel;
  std::optional<std::string> simplify;
  std::vector<std::string> samples;
  std::string output = "auto";
  std::string emit = "recurrence";
  bool trace = false;
  std::uint64_t seed = 0;
  unsigned count = 100;
};

class InputError : public Error {
 public:
  using Error::Error;
};

std::string read_input(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool ends_with(const std::string& s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

std::optional<pcf::Strategy> strategy_flag(const RunConfig& cfg) {
  if (cfg.strategy == "cbv") return pcf::Strategy::CBV;
  if (cfg.strategy == "cbn") return pcf::Strategy::CBN;
  if (ends_with(cfg.input, ".cbn.pcf")) return pcf::Strategy::CBN;
  if (ends_with(cfg.input, ".cbv.pcf")) return pcf::Strategy::CBV;
  return std::nullopt;
}

bool json_output(const RunConfig& cfg, bool json_by_default) {
  if (cfg.output == "auto") return json_by_default;
  return cfg.output == "json";
}

std::vector<Nat> sample_points(const RunConfig& cfg, std::vector<Nat> fallback) {
  std::vector<Nat> out;
  for (const auto& item : cfg.samples) {
    std::stringstream ss(item);
    std::string part;
    while (std::getline(ss, part, ',')) {
      if (part.empty()) continue;
      if (!is_numeral(part)) throw InputError("bad sample point '" + part + "'");
      out.emplace_back(part);
    }
  }
  return out.empty() ? fallback : out;
}

pcf::Parsed load_program(const RunConfig& cfg) {
  auto parsed = pcf::parse_pcf(read_input(cfg.input), strategy_flag(cfg));
  pcf::typecheck_pcf({}, parsed.term, parsed.strategy);
  return parsed;
}

pcf::Term maybe_simplify(const RunConfig& cfg, const pcf::Term& t) {
  if (!cfg.simplify) return t;
  return simplify::simplify(t, simplify::RuleSet::parse(cfg.simplify->empty() ? "core" : *cfg.simplify));
}

json ext_json(const ExtNat& n) {
  if (!n) return "inf";
  if (*n <= std::numeric_limits<std::uint64_t>::max()) return static_cast<std::uint64_t>(*n);
  return n->str();
}

int cmd_run(const RunConfig& cfg) {
  auto p = load_program(cfg);
  pcf::EvalOptions opts;
  opts.fuel = cfg.fuel;
  if (cfg.trace)
    opts.trace = [](std::string_view rule, const pcf::Term& t, int depth) {
      std::cerr << std::string(static_cast<std::size_t>(depth) * 2, ' ') << rule << " " << pcf::print_term(t) << "\n";
    };
  auto r = pcf::eval_pcf(p.term, p.strategy, opts);
  if (r.stuck()) {
    std::cerr << "error: machine stuck: " << std::get<Stuck>(r.result).reason << "\n";
    return kInternal;
  }
  bool js = json_output(cfg, false);
  std::string strategy(pcf::to_string(p.strategy));
  if (js) {
    json j = {{"strategy", strategy}, {"steps", r.steps}};
    if (r.converged()) {
      j["value"] = pcf::print_term(r.get().value);
      j["cost"] = r.get().cost;
    } else {
      j["value"] = nullptr;
      j["cost"] = "inf";
    }
    std::cout << j.dump() << "\n";
  } else if (r.converged()) {
    std::cout << "value: " << pcf::print_term(r.get().value, 100) << "\ncost: " << r.get().cost << "\n";
  } else {
    std::cout << "out of fuel after " << r.steps << " steps\ncost: inf\n";
  }
  return kOk;
}

int cmd_emit_cbpv(const RunConfig& cfg) {
  auto p = load_program(cfg);
  auto e = embed::embed(p.term, p.strategy);
  if (json_output(cfg, false))
    std::cout << json{{"cbpv", cbpv::print(e.term)}, {"type", cbpv::to_string(e.type)}}.dump() << "\n";
  else
    std::cout << cbpv::print(e.term, 100) << "\n";
  return kOk;
}

int cmd_extract(const RunConfig& cfg) {
  if (cfg.emit == "cbpv") return cmd_emit_cbpv(cfg);
  if (cfg.emit != "recurrence") throw InputError("--emit takes cbpv or recurrence");
  auto p = load_program(cfg);
  auto x = extract::extract(p.term, p.strategy);
  pcf::Term t = maybe_simplify(cfg, x.term);
  if (json_output(cfg, false))
    std::cout << json{{"recurrence", pcf::print_term(t)}, {"type", pcf::to_string(x.type)}}.dump() << "\n";
  else
    std::cout << pcf::print_term(t, 100) << "\n";
  return kOk;
}

int cmd_eval_recurrence(const RunConfig& cfg) {
  pcf::Term rec;
  bool cbv_pair = false;
  if (ends_with(cfg.input, ".pcfc")) {
    rec = pcfc::parse_pcfc(read_input(cfg.input));
    pcfc::typecheck_pcfc({}, rec);
  } else {
    auto p = load_program(cfg);
    rec = extract::extract(p.term, p.strategy).term;
    cbv_pair = p.strategy == pcf::Strategy::CBV;
  }
  rec = maybe_simplify(cfg, rec);
  model::Model m;
  model::SizedValue v = m.denote(rec);
  if (cbv_pair) v = m.project(2, v);
  bool js = json_output(cfg, false);
  if (!v.is_function()) {
    std::string s = model::to_string(v);
    std::cout << (js ? json{{"value", s}}.dump() : s) << "\n";
    return kOk;
  }
  for (const Nat& n : sample_points(cfg, {0, 1, 2, 4, 8, 16, 32})) {
    std::string s = model::to_string(m.apply(v, model::SizedValue::fin(n)));
    if (js)
      std::cout << json{{"n", n.str()}, {"value", s}}.dump() << "\n";
    else
      std::cout << n << ": " << s << "\n";
  }
  return kOk;
}

workbench::CheckOptions check_options(const RunConfig& cfg, std::string id) {
  workbench::CheckOptions o;
  o.id = std::move(id);
  o.fuel = cfg.fuel;
  o.samples = sample_points(cfg, o.samples);
  return o;
}

void print_report(const RunConfig& cfg, const workbench::BoundReport& r) {
  if (json_output(cfg, true))
    std::cout << workbench::to_json_lines(r);
  else
    std::cout << workbench::to_text(r);
}

std::string stem(const std::string& path) {
  auto slash = path.find_last_of('/');
  std::string name = slash == std::string::npos ? path : path.substr(slash + 1);
  return name.substr(0, name.find('.'));
}

int cmd_check_bound(const RunConfig& cfg) {
  auto p = load_program(cfg);
  auto r = workbench::check_bound(p.term, p.strategy, check_options(cfg, stem(cfg.input)));
  print_report(cfg, r);
  return r.overall() == workbench::Verdict::Violation ? kViolation : kOk;
}

void print_diff(const RunConfig& cfg, const std::string& id, const workbench::CostDiff& d) {
  if (json_output(cfg, true)) {
    json j = {{"id", id},
              {"pcf_cost", ext_json(d.pcf_cost)},
              {"cbpv_cost", ext_json(d.cbpv_cost)},
              {"equal", d.equal}};
    std::cout << j.dump() << "\n";
  } else {
    std::cout << id << ": pcf " << ext_to_string(d.pcf_cost) << ", cbpv " << ext_to_string(d.cbpv_cost)
              << (d.equal ? ", equal" : ", MISMATCH") << (d.note.empty() ? "" : " - " + d.note) << "\n";
  }
}

int cmd_diff_cost(const RunConfig& cfg) {
  auto p = load_program(cfg);
  auto d = workbench::diff_cost(p.term, p.strategy, cfg.fuel);
  print_diff(cfg, stem(cfg.input), d);
  return d.equal ? kOk : kViolation;
}

// The corpus and cfg.count generated programs per strategy: differential cost
// and bound checks, one report line each.
int cmd_suite(const RunConfig& cfg) {
  struct Item {
    std::string id;
    pcf::Term term;
    pcf::Strategy strategy;
  };
  std::vector<Item> items;
  for (const auto& p : workbench::corpus()) {
    if (p.recurrence) {
      pcfc::typecheck_pcfc({}, p.term());
      continue;
    }
    items.push_back({p.name, p.term(), p.strategy});
  }
  std::vector<pcf::Strategy> strategies = {pcf::Strategy::CBV, pcf::Strategy::CBN};
  if (auto s = strategy_flag(cfg)) strategies = {*s};
  for (auto s : strategies)
    for (unsigned i = 0; i < cfg.count; ++i) {
      workbench::GenConfig g;
      g.seed = cfg.seed + i;
      g.strategy = s;
      items.push_back({"gen-" + std::string(pcf::to_string(s)) + "-" + std::to_string(g.seed), workbench::gen_program(g), s});
    }

  std::size_t mismatches = 0, violations = 0, trivial = 0, converged = 0;
  for (const auto& it : items) {
    auto d = workbench::diff_cost(it.term, it.strategy, cfg.fuel);
    if (!d.equal) {
      ++mismatches;
      std::cerr << it.id << ": cost mismatch (" << d.note << ")\n";
    }
    auto r = workbench::check_bound(it.term, it.strategy, check_options(cfg, it.id));
    print_report(cfg, r);
    auto v = r.overall();
    if (v == workbench::Verdict::Violation) ++violations;
    if (d.pcf_cost) {
      ++converged;
      if (v == workbench::Verdict::HoldsTriviallyInf) ++trivial;
    }
  }
  std::cerr << items.size() << " programs, " << converged << " converged, " << mismatches << " cost mismatches, "
            << violations << " violations, " << trivial << " trivially infinite bounds\n";
  return mismatches + violations == 0 ? kOk : kViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cost recurrence extraction for PCF"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto common = [&](CLI::App* sub, bool needs_input) {
    sub->add_option("--strategy", cfg.strategy, "Evaluation strategy")->check(CLI::IsMember({"cbv", "cbn"}));
    sub->add_option("--fuel", cfg.fuel, "Rule applications before giving up")->capture_default_str();
    sub->add_option("--output", cfg.output, "Output format")->check(CLI::IsMember({"text", "json", "auto"}));
    if (needs_input) sub->add_option("input", cfg.input, "Program file, or - for standard input")->required();
  };
  auto simplify_flag = [&](CLI::App* sub) {
    sub->add_option("--simplify", cfg.simplify, "Simplify the recurrence: core, eta, lists")->expected(0, 1);
  };
  auto samples_flag = [&](CLI::App* sub) {
    sub->add_option("--samples", cfg.samples, "Sample points, comma separated")->delimiter(',');
  };

  auto* run = app.add_subcommand("run", "Evaluate a program and report its value and cost");
  common(run, true);
  run->add_flag("--trace", cfg.trace, "Log every rule application to standard error");

  auto* emit = app.add_subcommand("emit-cbpv", "Print the call-by-push-value embedding");
  common(emit, true);

  auto* ext = app.add_subcommand("extract", "Print the extracted recurrence");
  common(ext, true);
  simplify_flag(ext);
  ext->add_option("--emit", cfg.emit, "cbpv or recurrence")->check(CLI::IsMember({"cbpv", "recurrence"}));

  auto* evr = app.add_subcommand("eval-recurrence", "Evaluate a recurrence at sample points");
  common(evr, false);
  evr->add_option("input", cfg.input, "Program (.pcf) or recurrence (.pcfc) file")->required();
  evr->add_option("points", cfg.samples, "Sample points");
  samples_flag(evr);
  simplify_flag(evr);

  auto* chk = app.add_subcommand("check-bound", "Check a program against its extracted bound");
  common(chk, true);
  samples_flag(chk);

  auto* dif = app.add_subcommand("diff-cost", "Compare source and embedded costs");
  common(dif, true);

  auto* suite = app.add_subcommand("suite", "Check the corpus and generated programs");
  common(suite, false);
  samples_flag(suite);
  suite->add_option("--seed", cfg.seed, "First generator seed");
  suite->add_option("--count", cfg.count, "Generated programs per strategy");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (run->parsed()) return cmd_run(cfg);
    if (emit->parsed()) return cmd_emit_cbpv(cfg);
    if (ext->parsed()) return cmd_extract(cfg);
    if (evr->parsed()) return cmd_eval_recurrence(cfg);
    if (chk->parsed()) return cmd_check_bound(cfg);
    if (dif->parsed()) return cmd_diff_cost(cfg);
    if (suite->parsed()) return cmd_suite(cfg);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kInputError;
  } catch (const TypeError& e) {
    std::cerr << "type error: " << e.what() << "\n";
    return kInputError;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kInternal;
}
