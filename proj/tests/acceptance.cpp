// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

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
using namespace recx::workbench;
using pcf::Strategy;
using pcf::Term;
using pcf::Type;

namespace {

constexpr unsigned kGenerated = 500;
constexpr std::uint64_t kFuel = 100000;

struct Program {
  std::string id;
  Term term;
  Strategy strategy;
};

// Corpus programs and the generated suites. Function-typed corpus programs
// are applied to a few sample arguments so the cost comparison sees a run.
std::vector<Program> programs(bool apply_functions) {
  std::vector<Program> out;
  for (const auto& p : corpus()) {
    if (p.recurrence) continue;
    Term t = p.term();
    Type a = pcf::typecheck_pcf({}, t, p.strategy);
    if (apply_functions && a.is(pcf::TypeKind::Arrow)) {
      for (unsigned k : {0u, 1u, 2u, 5u, 8u})
        out.push_back({p.name + "#" + std::to_string(k), Term::app(t, sample_argument(a.dom(), k)), p.strategy});
    } else {
      out.push_back({p.name, t, p.strategy});
    }
  }
  for (auto s : {Strategy::CBV, Strategy::CBN})
    for (std::uint64_t seed = 0; seed < kGenerated; ++seed) {
      GenConfig cfg;
      cfg.seed = seed;
      cfg.strategy = s;
      out.push_back({std::string(pcf::to_string(s)) + "-" + std::to_string(seed), gen_program(cfg), s});
    }
  return out;
}

struct Result {
  bool pass;
  std::string detail;
};

Result cost_preservation() {
  unsigned checked = 0, converged = 0, mismatches = 0;
  std::string first;
  for (const auto& p : programs(true)) {
    ++checked;
    auto d = diff_cost(p.term, p.strategy, kFuel);
    if (d.pcf_cost) ++converged;
    if (!d.equal) {
      if (first.empty()) first = p.id;
      ++mismatches;
    }
  }
  std::ostringstream os;
  os << checked << " programs, " << converged << " converged, " << mismatches << " mismatches";
  if (!first.empty()) os << " (first: " << first << ")";
  return {mismatches == 0 && checked >= 2 * kGenerated, os.str()};
}

Result bounding() {
  unsigned checked = 0, converging = 0, trivial = 0, violations = 0;
  std::string first;
  for (const auto& p : programs(false)) {
    ++checked;
    CheckOptions opts;
    opts.id = p.id;
    opts.fuel = kFuel;
    auto r = check_bound(p.term, p.strategy, opts);
    Verdict v = r.overall();
    if (v == Verdict::Violation) {
      ++violations;
      if (first.empty()) first = p.id;
    }
    if (pcf::eval_pcf(p.term, p.strategy, kFuel).converged()) {
      ++converging;
      if (v == Verdict::HoldsTriviallyInf) ++trivial;
    }
  }
  double rate = converging ? static_cast<double>(trivial) / converging : 1.0;
  std::ostringstream os;
  os << checked << " programs, " << violations << " violations, " << trivial << "/" << converging
     << " converging programs trivially infinite";
  if (!first.empty()) os << " (first violation: " << first << ")";
  return {violations == 0 && rate < 0.2, os.str()};
}

// Cost of applying the extracted potential of a CBV function.
std::optional<Nat> cbv_function_cost(const Term& extracted, unsigned n) {
  model::Model m;
  auto f = m.project(2, m.denote(extracted));
  return model::cost_of(m.apply(f, model::SizedValue::fin(n)));
}

Result exp_recurrence() {
  auto ext = extract::extract_cbv(corpus_program("exp").term());
  bool ok = cbv_function_cost(ext, 0) == Nat(0);
  std::ostringstream os;
  os << "T(0)=" << ext_to_string(cbv_function_cost(ext, 0));
  for (unsigned n : {1u, 2u, 4u, 8u, 16u, 32u}) {
    auto a = cbv_function_cost(ext, n), b = cbv_function_cost(ext, 2 * n);
    ok = ok && a && b && *b - *a == 3;
    os << " T(" << 2 * n << ")=" << ext_to_string(b);
  }
  return {ok, os.str()};
}

Result mergesort() {
  std::ostringstream os;
  bool ok = true;

  // The recurrence transcription.
  model::Model m;
  auto rec = m.denote(corpus_program("mergesort-recurrence").term());
  auto at = [&](unsigned n) { return m.apply(rec, model::SizedValue::fin(n)); };
  for (unsigned n : {0u, 1u, 2u, 4u, 8u, 16u, 32u}) {
    auto v = m.project(2, at(n));
    if (!v.is_fin() || v.number() != n) {
      ok = false;
      os << "S(" << n << ")=" << model::to_string(v) << " ";
    }
  }
  auto cost = [&](unsigned n) { return model::cost_of(at(n)); };
  if (cost(1) != Nat(0)) {
    ok = false;
    os << "T(1)=" << ext_to_string(cost(1)) << " ";
  }
  for (unsigned n = 2; n <= 32; n *= 2) {
    auto t = cost(n), h = cost(n / 2);
    if (!t || !h || *t != 7 + 2 * n + 2 * *h) {
      ok = false;
      os << "T(" << n << ")=" << ext_to_string(t) << " ";
    }
  }
  os << "T(32)=" << ext_to_string(cost(32)) << "; ";

  // The bound of the CBV program at every length up to 32, for each choice
  // of element contents.
  Term prog = corpus_program("mergesort").term();
  std::vector<std::vector<ExtNat>> bounds;
  unsigned holds = 0, total = 0;
  for (unsigned contents : {0u, 1u, 2u}) {
    CheckOptions opts;
    opts.id = "mergesort";
    opts.contents = contents;
    opts.samples.clear();
    for (unsigned n = 0; n <= 32; ++n) opts.samples.push_back(n);
    auto r = check_bound(prog, Strategy::CBV, opts);
    std::vector<ExtNat> bs;
    for (const auto& part : r.parts) {
      ++total;
      if (part.overall() == Verdict::Holds) ++holds;
      bs.push_back(part.bound_cost);
    }
    if (bs.size() != 33) ok = false;
    bounds.push_back(bs);
  }
  bool identical = bounds[0] == bounds[1] && bounds[1] == bounds[2];
  ok = ok && holds == total && identical;
  os << holds << "/" << total << " bound checks hold, bounds " << (identical ? "identical" : "differ")
     << " across contents";
  return {ok, os.str()};
}

Result adequacy() {
  unsigned checked = 0, finite = 0, bad = 0;
  std::string first;
  for (std::uint64_t seed = 0; checked < 400; ++seed) {
    PcfcGenConfig cfg;
    cfg.seed = seed;
    Type a = seed % 2 ? Type::cost() : Type::nat();
    Term t = gen_pcfc_term(cfg, a);
    ++checked;
    auto d = model::denote(t);
    if (!d.is_fin()) continue;
    ++finite;
    auto r = pcfc::eval_pcfc(t, 10'000'000);
    bool good = r.converged() && (r.value().is(pcf::Tag::Num) || r.value().is(pcf::Tag::CNum)) &&
                r.value().number() <= d.number();
    if (!good) {
      ++bad;
      if (first.empty()) first = pcf::print_term(t);
    }
  }
  std::ostringstream os;
  os << checked << " terms, " << finite << " with finite denotation, " << bad << " failures";
  if (!first.empty()) os << " (first: " << first << ")";
  return {bad == 0 && checked >= 200, os.str()};
}

// Equal at ground and product types; functions are compared on sample
// arguments including bottom. Bottom at a function type is the function
// that is bottom everywhere.
bool same_denotation(const model::SizedValue& v, const model::SizedValue& w, model::Model& m) {
  if (v.is_function() || w.is_function()) {
    if (!(v.is_function() || v.is_bottom()) || !(w.is_function() || w.is_bottom())) return false;
    for (unsigned k = 0; k < 6; ++k)
      if (!same_denotation(m.apply(v, model::SizedValue::fin(k)), m.apply(w, model::SizedValue::fin(k)), m))
        return false;
    return same_denotation(m.apply(v, model::SizedValue::bottom()), m.apply(w, model::SizedValue::bottom()), m);
  }
  return model::size_equal(v, w);
}

Result simplifier_and_rat() {
  constexpr unsigned kInstances = 120;
  auto ctx = rule_instance_context();
  unsigned instances = 0, unequal = 0, rewritten = 0;
  std::string first;
  for (const auto& rule : simplifier_rules())
    for (std::uint64_t seed = 0; seed < kInstances; ++seed) {
      auto inst = gen_rule_instance(rule, seed);
      Term out = simplify::simplify(inst.term, inst.rules);
      if (!pcf::alpha_equal(out, inst.term)) ++rewritten;
      auto env = ground_instantiation(ctx, seed * 31 + 7);
      model::Model m;
      ++instances;
      if (!same_denotation(m.denote(inst.term, env), m.denote(out, env), m)) {
        ++unequal;
        if (first.empty()) first = rule + ": " + pcf::print_term(inst.term);
      }
    }

  // Each unfolding of a fixed point is below the previous one. Unfoldings
  // grow exponentially when the body uses its variable more than once, so
  // fix^(n+1) is denoted as the body in an environment holding fix^n. While
  // the syntactic unfolding stays small it is denoted too and must agree.
  constexpr unsigned kBodies = 60;
  constexpr std::size_t kSyntacticLimit = 20000;
  unsigned rat_checks = 0, rat_failures = 0, syntactic = 0;
  for (std::uint64_t seed = 0; seed < kBodies; ++seed) {
    auto fb = gen_fix_body(seed);
    model::Model m;
    auto observe = [&](const model::SizedValue& v) {
      std::vector<model::SizedValue> out;
      if (fb.type.is(pcf::TypeKind::Arrow))
        for (unsigned k = 0; k < 8; ++k) out.push_back(m.apply(v, model::SizedValue::fin(k)));
      else
        out.push_back(v);
      return out;
    };
    auto prev = m.denote(pcfc::unfold_fix(fb.var, fb.type, fb.body, 0));
    bool small = true;
    for (unsigned n = 0; n <= 10; ++n) {
      auto next = m.denote(fb.body, model::Env{}.extend(fb.var, model::Thunk::ready(prev)));
      auto lo = observe(next), hi = observe(prev);
      if (small) {
        Term unfolded = pcfc::unfold_fix(fb.var, fb.type, fb.body, n + 1);
        small = unfolded.size() <= kSyntacticLimit;
        if (small) {
          ++syntactic;
          auto direct = observe(m.denote(unfolded));
          for (std::size_t i = 0; i < lo.size(); ++i)
            if (!model::size_equal(direct[i], lo[i])) ++rat_failures;
        }
      }
      for (std::size_t i = 0; i < lo.size(); ++i) {
        ++rat_checks;
        if (!model::size_leq(lo[i], hi[i])) ++rat_failures;
      }
      prev = next;
    }
  }

  std::ostringstream os;
  os << simplifier_rules().size() << " rules x " << kInstances << " instances (" << rewritten << " rewritten), "
     << unequal << " unequal; " << kBodies << " fixed points, " << rat_checks << " unfolding comparisons ("
     << syntactic << " unfoldings also denoted directly), "
     << rat_failures << " failures";
  if (!first.empty()) os << " (first: " << first << ")";
  return {unequal == 0 && rat_failures == 0, os.str()};
}

bool same_outcome(const pcf::EvalOutcome& a, const pcf::EvalOutcome& b) {
  if (a.converged() != b.converged() || a.out_of_fuel() != b.out_of_fuel()) return false;
  if (!a.converged()) return true;
  return a.get().cost == b.get().cost && pcf::alpha_equal(a.get().value, b.get().value);
}

Result determinism() {
  unsigned checked = 0, differing = 0;
  for (auto s : {Strategy::CBV, Strategy::CBN}) {
    unsigned found = 0;
    for (std::uint64_t seed = 0; found < 120 && seed < 5000; ++seed) {
      GenConfig cfg;
      cfg.seed = seed;
      cfg.strategy = s;
      Term t = gen_program(cfg);
      auto first = pcf::eval_pcf(t, s, kFuel);
      if (!first.converged()) continue;
      ++found;
      ++checked;
      std::uint64_t minimal = first.steps;
      bool ok = same_outcome(first, pcf::eval_pcf(t, s, kFuel));
      for (std::uint64_t fuel : {minimal, 2 * minimal, 10 * minimal})
        ok = ok && same_outcome(first, pcf::eval_pcf(t, s, fuel));
      if (minimal > 0) ok = ok && pcf::eval_pcf(t, s, minimal - 1).out_of_fuel();
      if (!ok) ++differing;
    }
  }
  std::ostringstream os;
  os << checked << " converging programs at minimal, 2x and 10x fuel, " << differing << " differing";
  return {differing == 0 && checked >= 200, os.str()};
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    const char* name;
    std::function<Result()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "cost preservation", cost_preservation},
      {2, "bounding", bounding},
      {3, "exp recurrence", exp_recurrence},
      {4, "mergesort", mergesort},
      {5, "adequacy", adequacy},
      {6, "simplifier rules and unfolding order", simplifier_and_rat},
      {7, "determinism and fuel monotonicity", determinism},
  };
  bool all = true;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Result r;
    try {
      r = c.run();
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %d (%s): %s - %s [%.1fs]\n", c.number, c.name, r.pass ? "PASS" : "FAIL", r.detail.c_str(),
                secs);
    std::fflush(stdout);
    all = all && r.pass;
  }
  return all ? 0 : 1;
}
