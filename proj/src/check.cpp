#include "recx/workbench/check.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "recx/cbpv/machine.hpp"
#include "recx/cbpv/term.hpp"
#include "recx/embed.hpp"
#include "recx/extract.hpp"
#include "recx/pcf/syntax.hpp"
#include "recx/pcf/typecheck.hpp"

namespace recx::workbench {

using pcf::Strategy;
using pcf::Tag;
using pcf::Term;
using pcf::Type;
using pcf::TypeKind;
using model::SizedValue;

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "HOLDS";
    case Verdict::HoldsTriviallyInf: return "HOLDS_TRIVIALLY_INF";
    case Verdict::InconclusiveFuel: return "INCONCLUSIVE_FUEL";
    case Verdict::Violation: return "VIOLATION";
  }
  return "?";
}

Verdict worse(Verdict a, Verdict b) { return std::max(a, b); }

Verdict BoundReport::overall() const {
  Verdict v = verdict;
  for (const auto& p : parts) v = worse(v, p.overall());
  return v;
}

Term sample_argument(const Type& a, const Nat& k, unsigned contents) {
  switch (a.kind()) {
    case TypeKind::Nat: return Term::num(k);
    case TypeKind::Prod: return Term::pair(sample_argument(a.left(), k, contents), sample_argument(a.right(), k, contents));
    case TypeKind::Arrow: return Term::lam("_", a.dom(), sample_argument(a.cod(), k, contents));
    case TypeKind::List: {
      Term l = Term::nil();
      auto n = static_cast<unsigned long>(k);
      for (unsigned long i = n; i-- > 0;) {
        Nat e;
        switch (contents % 3) {
          case 0: e = i; break;
          case 1: e = n - i; break;
          default: e = (i * 7919 + contents * 104729) % 97; break;
        }
        l = Term::cons(sample_argument(a.elem(), e, contents), l);
      }
      return l;
    }
    default: throw UnsupportedType("no sample value of type " + pcf::to_string(a));
  }
}

namespace {

// Whether an observed value is bounded by a potential.
bool value_bounded(const Term& v, const SizedValue& p, const Type& a) {
  if (p.is_bottom()) return true;
  switch (a.kind()) {
    case TypeKind::Nat: return p.is_fin() && v.is(Tag::Num) && v.number() <= p.number();
    case TypeKind::List: {
      Nat len = 0;
      for (Term t = v; t.is(Tag::Cons); t = t.kid(1)) ++len;
      return p.is_fin() && len <= p.number();
    }
    case TypeKind::Prod:
      if (!v.is(Tag::Pair) || !p.is_pair()) return false;
      return value_bounded(v.kid(0), p.component(1)->force(), a.left()) &&
             value_bounded(v.kid(1), p.component(2)->force(), a.right());
    default: return true;  // functions are checked by application only
  }
}

ExtNat finite(const SizedValue& v) {
  if (v.is_fin()) return v.number();
  return std::nullopt;
}

class Checker {
 public:
  Checker(Strategy s, const CheckOptions& opts) : s_(s), opts_(opts) {}

  BoundReport check(const Term& prog, const Type& type, const std::string& id, int depth,
                    std::optional<Nat> fixed_sample) {
    BoundReport r;
    r.id = id;
    r.strategy = s_;

    auto run = pcf::eval_pcf(prog, s_, opts_.fuel);
    r.fuel_used = run.steps;
    if (run.converged()) {
      r.observed_cost = run.get().cost;
      r.observed_value = pcf::print_term(run.get().value);
    } else if (run.stuck()) {
      r.verdict = Verdict::Violation;
      r.note = "source machine stuck: " + std::get<Stuck>(run.result).reason;
      return r;
    }

    model::Model m(opts_.model);
    SizedValue bound = m.denote(extract::extract(prog, s_).term);
    bool cbn_split = s_ == Strategy::CBN && !type.is(TypeKind::Nat);

    if (!cbn_split) {
      SizedValue cost = m.project(1, bound);
      SizedValue pot = m.project(2, bound);
      r.bound_cost = finite(cost);
      r.bound_potential = model::to_string(pot);
      r.verdict = judge(r, run, pot, type);
    }

    // Parts: applications to samples, or call-by-name projections.
    if (type.is(TypeKind::Arrow) && depth < 3) {
      std::vector<Nat> ks = fixed_sample ? std::vector<Nat>{*fixed_sample} : opts_.samples;
      for (const Nat& k : ks) {
        Term arg = sample_argument(type.dom(), k, opts_.contents);
        r.parts.push_back(check(Term::app(prog, arg), type.cod(), id + "#arg=" + k.str(), depth + 1, k));
      }
    } else if (cbn_split && type.is(TypeKind::Prod)) {
      for (int i = 1; i <= 2; ++i)
        r.parts.push_back(check(Term::proj(i, prog), i == 1 ? type.left() : type.right(),
                                id + "#proj" + std::to_string(i), depth, fixed_sample));
    }

    if (cbn_split) {
      // Each part costs at least one more step than evaluating the program
      // itself, so the cheapest part bound, less one, bounds it too.
      ExtNat best;
      bool any = false;
      for (const auto& p : r.parts) {
        if (!p.bound_cost) continue;
        Nat b = *p.bound_cost == 0 ? Nat(0) : Nat(*p.bound_cost - 1);
        if (!any || b < *best) best = b;
        any = true;
      }
      r.bound_cost = best;
      r.bound_potential = "-";
      r.verdict = judge(r, run, SizedValue::bottom(), type);
    }
    return r;
  }

 private:
  Verdict judge(BoundReport& r, const pcf::EvalOutcome& run, const SizedValue& pot, const Type& type) {
    if (!run.converged()) {
      if (!r.bound_cost) return Verdict::HoldsTriviallyInf;
      r.note = "source run out of fuel under a finite bound";
      return Verdict::InconclusiveFuel;
    }
    if (!r.bound_cost) return Verdict::HoldsTriviallyInf;
    if (*r.bound_cost < *r.observed_cost) {
      r.note = "cost exceeds bound";
      return Verdict::Violation;
    }
    if (!value_bounded(run.get().value, pot, type)) {
      r.note = "value exceeds potential";
      return Verdict::Violation;
    }
    return Verdict::Holds;
  }

  Strategy s_;
  const CheckOptions& opts_;
};

}  // namespace

BoundReport check_bound(const Term& t, Strategy s, const CheckOptions& opts) {
  Type type = pcf::typecheck_pcf({}, t, s);
  return Checker(s, opts).check(t, type, opts.id, 0, std::nullopt);
}

CostDiff diff_cost(const Term& t, Strategy s, std::uint64_t fuel) {
  CostDiff d;
  auto source = pcf::eval_pcf(t, s, fuel);
  auto e = embed::embed(t, s);
  if (!source.converged()) return d;
  d.pcf_cost = source.get().cost;
  auto target = cbpv::eval_cbpv(e.term, std::max<std::uint64_t>(source.steps, 100) * kCbpvFuelFactor);
  if (target.converged()) d.cbpv_cost = target.get().cost;
  if (!target.converged()) {
    d.equal = false;
    d.note = target.stuck() ? "embedding stuck: " + std::get<Stuck>(target.result).reason : "embedding out of fuel";
    return d;
  }
  if (*d.pcf_cost != *d.cbpv_cost) {
    d.equal = false;
    d.note = "costs differ";
    return d;
  }
  // At type nat both sides end in the same numeral.
  const Term& v = source.get().value;
  if (v.is(Tag::Num)) {
    const cbpv::Comp& c = target.get().term;
    bool same = c.tag() == cbpv::CTag::Return && c.val(0).tag() == cbpv::VTag::Num && c.val(0).number() == v.number();
    if (!same) {
      d.equal = false;
      d.note = "values differ";
    }
  }
  return d;
}

namespace {
nlohmann::json ext_json(const ExtNat& n) {
  if (!n) return "inf";
  if (*n <= std::numeric_limits<std::uint64_t>::max()) return static_cast<std::uint64_t>(*n);
  return n->str();
}
}  // namespace

nlohmann::json to_json(const BoundReport& r) {
  return {{"id", r.id},
          {"strategy", std::string(pcf::to_string(r.strategy))},
          {"observed_cost", ext_json(r.observed_cost)},
          {"bound_cost", ext_json(r.bound_cost)},
          {"verdict", std::string(to_string(r.verdict))},
          {"fuel", r.fuel_used}};
}

std::string to_json_lines(const BoundReport& r) {
  std::string out = to_json(r).dump() + "\n";
  for (const auto& p : r.parts) out += to_json_lines(p);
  return out;
}

std::string to_text(const BoundReport& r) {
  std::ostringstream os;
  os << r.id << " [" << pcf::to_string(r.strategy) << "] " << to_string(r.verdict) << ": cost "
     << ext_to_string(r.observed_cost) << " <= " << ext_to_string(r.bound_cost);
  if (!r.observed_value.empty()) os << ", value " << r.observed_value;
  if (!r.bound_potential.empty() && r.bound_potential != "-") os << " within " << r.bound_potential;
  os << " (" << r.fuel_used << " steps)";
  if (!r.note.empty()) os << " - " << r.note;
  os << "\n";
  for (const auto& p : r.parts) os << to_text(p);
  return os.str();
}

}  // namespace recx::workbench
