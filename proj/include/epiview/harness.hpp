#ifndef EPIVIEW_HARNESS_HPP
#define EPIVIEW_HARNESS_HPP

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "epiview/characterizations.hpp"
#include "epiview/faeel.hpp"
#include "epiview/foundedness.hpp"
#include "epiview/json_io.hpp"
#include "epiview/kd45.hpp"
#include "epiview/parse.hpp"

namespace epiview {

enum class Semantics { g91, ael, weak, s5eq, faeel };

inline const char* semantics_name(Semantics s) {
  switch (s) {
    case Semantics::g91: return "g91";
    case Semantics::ael: return "ael";
    case Semantics::weak: return "weak";
    case Semantics::s5eq: return "s5eq";
    case Semantics::faeel: return "faeel";
  }
  return "?";
}

inline std::optional<Semantics> semantics_from_name(std::string_view name) {
  for (Semantics s : {Semantics::g91, Semantics::ael, Semantics::weak,
                      Semantics::s5eq, Semantics::faeel})
    if (name == semantics_name(s)) return s;
  return std::nullopt;
}

inline std::vector<BeliefView> solve(Semantics s, const Theory& g,
                                     const Signature& sig) {
  switch (s) {
    case Semantics::g91: return g91_world_views(g, sig);
    case Semantics::ael: return ael_world_views(g, sig);
    case Semantics::weak: return weak_world_views(g, sig);
    case Semantics::s5eq: return s5_equilibrium_models(g, sig);
    case Semantics::faeel: return faeel_world_views(g, sig);
  }
  return {};
}

// ---------------------------------------------------------------------------
// Property checks.

struct PropertyVerdict {
  std::string property;
  bool holds = false;
  std::optional<std::string> counterexample;  // present iff !holds
};

/// For an objective theory: either SM[g] is nonempty and is the unique
/// world view, or SM[g] is empty and there is no world view.
inline PropertyVerdict check_supra_asp(const Theory& g, const Signature& sig,
                                       Semantics s) {
  if (has_modal(g))
    throw std::invalid_argument("supra-ASP applies to objective theories only");
  PropertyVerdict v{"supra-asp", true, std::nullopt};
  std::vector<Mask> sm = stable_models(g, sig);
  std::vector<BeliefView> views = solve(s, g, sig);
  bool ok;
  if (sm.empty())
    ok = views.empty();
  else
    ok = views.size() == 1 && views.front().worlds == sm;
  if (!ok) {
    v.holds = false;
    v.counterexample = "SM " + print_views(sm.empty()
                                               ? std::vector<BeliefView>{}
                                               : std::vector<BeliefView>{
                                                     BeliefView::of(sm)},
                                           sig) +
                       " vs views " + print_views(views, sig);
  }
  return v;
}

/// Every world view is an epistemic (S5) model of the theory.
inline PropertyVerdict check_supra_s5(const Theory& g, const Signature& sig,
                                      Semantics s) {
  PropertyVerdict v{"supra-s5", true, std::nullopt};
  for (const auto& w : solve(s, g, sig)) {
    if (!is_epistemic_model(w, g)) {
      v.holds = false;
      v.counterexample = print_view(w, sig);
      return v;
    }
  }
  return v;
}

/// Adding the constraint <- phi for a subjective phi keeps exactly the
/// world views of g that are not S5 models of phi. Atomless bodies are
/// accepted: their truth is world-independent as well.
inline PropertyVerdict check_constraint_monotonicity(const Theory& g,
                                                     const Formula& body,
                                                     const Signature& sig,
                                                     Semantics s) {
  FormulaClass cls = classify_formula(body);
  if (cls != FormulaClass::subjective && cls != FormulaClass::atomless)
    throw std::invalid_argument("constraint body must be subjective");

  Theory extended = g;
  extended.add(Formula::impl(body, Formula::bottom()));
  std::vector<BeliefView> with_constraint = solve(s, extended, sig);
  std::vector<BeliefView> expected;
  for (const auto& w : solve(s, g, sig))
    if (!epistemic_sat(w, body)) expected.push_back(w);

  PropertyVerdict v{"subjective-constraint-monotonicity", true, std::nullopt};
  if (with_constraint != expected) {
    v.holds = false;
    v.counterexample = "got " + print_views(with_constraint, sig) +
                       ", expected " + print_views(expected, sig);
  }
  return v;
}

inline PropertyVerdict check_constraint_monotonicity(const Theory& g,
                                                     const Rule& constraint,
                                                     const Signature& sig,
                                                     Semantics s) {
  if (!constraint.is_constraint())
    throw std::invalid_argument("constraint monotonicity needs an empty head");
  return check_constraint_monotonicity(g, constraint.body_formula(), sig, s);
}

// ---------------------------------------------------------------------------
// Seeded random programs.

enum class GenProfile { standard, negated_modal_only };

/// Deterministic in (seed, |sig|, max_rules, profile). Heads have 0-2
/// atoms, bodies 0-3 literals; literal kinds are weighted 40% positive
/// objective, 20% negated objective, 25% positive subjective, 15%
/// negated subjective. The negated-modal-only profile forces at least
/// one outer negation on every subjective literal.
inline Program random_program(std::uint64_t seed, const Signature& sig,
                              int max_rules, GenProfile profile) {
  if (max_rules < 1) throw std::invalid_argument("max_rules must be positive");
  std::seed_seq seq{seed, static_cast<std::uint64_t>(sig.size()),
                    static_cast<std::uint64_t>(max_rules),
                    static_cast<std::uint64_t>(profile)};
  std::mt19937_64 rng(seq);
  auto pick = [&rng](int n) { return static_cast<int>(rng() % n); };

  Program p;
  p.signature = sig;
  const int natoms = sig.size();
  const int nrules = 1 + pick(max_rules);
  for (int i = 0; i < nrules; ++i) {
    Rule r;
    int head_n = pick(3);
    int body_n = pick(4);
    if (head_n == 0 && body_n == 0) head_n = 1;
    for (int h = 0; h < head_n; ++h) {
      int a = pick(natoms);
      bool dup = false;
      for (int b : r.head) dup |= (b == a);
      if (!dup) r.head.push_back(a);
    }
    for (int b = 0; b < body_n; ++b) {
      BodyLiteral l;
      l.inner.atom = pick(natoms);
      int roll = pick(100);
      if (roll < 40) {
        l.subjective = false;
        l.inner.negation_depth = 0;
      } else if (roll < 60) {
        l.subjective = false;
        l.inner.negation_depth = pick(4) == 0 ? 2 : 1;
      } else if (roll < 85) {
        l.subjective = true;
        if (profile == GenProfile::negated_modal_only) {
          l.outer_negation_depth = 1 + pick(2);
          l.inner.negation_depth = pick(3);
        } else {
          l.outer_negation_depth = 0;
          l.inner.negation_depth = 0;
        }
      } else {
        l.subjective = true;
        if (profile == GenProfile::negated_modal_only) {
          l.outer_negation_depth = 1 + pick(2);
          l.inner.negation_depth = pick(3);
        } else {
          // any negated combination: skip the all-positive one
          static constexpr int combos[8][2] = {{0, 1}, {0, 2}, {1, 0}, {1, 1},
                                               {1, 2}, {2, 0}, {2, 1}, {2, 2}};
          const auto& c = combos[pick(8)];
          l.outer_negation_depth = c[0];
          l.inner.negation_depth = c[1];
        }
      }
      r.body.push_back(l);
    }
    p.add(std::move(r));
  }
  return p;
}

// ---------------------------------------------------------------------------
// Differential engine.

struct DifferentialReport {
  struct Check {
    std::string name;
    bool ok = true;
    std::string detail;
  };

  bool is_program = false;
  std::vector<BeliefView> g91, ael, weak, s5eq, faeel;
  std::optional<std::vector<BeliefView>> faeel_fast;  // programs only
  std::vector<Check> checks;

  bool all_ok() const {
    for (const auto& c : checks)
      if (!c.ok) return false;
    return true;
  }
};

namespace detail {

inline void add_check(DifferentialReport& rep, const std::string& name, bool ok,
                      const std::string& detail = "") {
  rep.checks.push_back({name, ok, detail});
}

inline bool subset_of(const std::vector<BeliefView>& a,
                      const std::vector<BeliefView>& b) {
  for (const auto& w : a)
    if (std::find(b.begin(), b.end(), w) == b.end()) return false;
  return true;
}

inline DifferentialReport differential_core(const Theory& g,
                                            const Signature& sig,
                                            const Program* p) {
  DifferentialReport rep;
  rep.is_program = p != nullptr;
  rep.g91 = g91_world_views(g, sig);
  rep.ael = ael_world_views(g, sig);
  rep.weak = weak_world_views(g, sig);
  rep.s5eq = s5_equilibrium_models(g, sig);
  // Reference fixpoint sweep where the view space allows it, otherwise
  // the G91-candidate route (exact either way).
  FaeelOptions opts;
  opts.prune_with_g91 = sig.size() > 3;
  rep.faeel = faeel_world_views(g, sig, opts);

  add_check(rep, "ael = g91 + excluded middle",
            rep.ael == g91_world_views(with_excluded_middle(g, sig), sig));
  add_check(rep, "weak = g91", rep.weak == rep.g91);
  add_check(rep, "faeel subset of g91", subset_of(rep.faeel, rep.g91));
  {
    bool all_s5 = true;
    for (const auto& w : rep.faeel) all_s5 &= is_epistemic_model(w, g);
    add_check(rep, "faeel views are S5 models", all_s5);
  }
  if (modals_only_under_negation(g))
    add_check(rep, "faeel = g91 (modals under negation)", rep.faeel == rep.g91);
  if (!has_modal(g)) {
    std::vector<Mask> sm = stable_models(g, sig);
    bool ok = sm.empty() ? rep.faeel.empty()
                         : rep.faeel.size() == 1 &&
                               rep.faeel.front().worlds == sm;
    add_check(rep, "supra-asp", ok);
  }

  if (p) {
    rep.faeel_fast = faeel_world_views(*p, sig, /*fast_path=*/true);
    add_check(rep, "faeel fast path = generic path",
              *rep.faeel_fast == rep.faeel);
    {
      bool all_founded = true;
      for (const auto& w : rep.faeel) all_founded &= is_founded(*p, w).founded;
      add_check(rep, "faeel views are founded", all_founded);
    }
    {
      std::vector<BeliefView> founded_g91;
      for (const auto& w : rep.g91)
        if (is_founded(*p, w).founded) founded_g91.push_back(w);
      add_check(rep, "faeel = founded g91", rep.faeel == founded_g91);
    }
    {
      // S5-equilibrium models are exactly the founded total S5 models.
      std::vector<BeliefView> founded_s5;
      const Mask full = sig.full_mask();
      const std::uint64_t interp_count =
          std::uint64_t{1} << (sig.size() == 0 ? 0 : sig.size());
      if (sig.size() <= view_enumeration_atom_limit) {
        for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << interp_count);
             ++bits) {
          std::vector<Mask> worlds;
          for (Mask t = 0;; ++t) {
            if ((bits >> t) & 1) worlds.push_back(t);
            if (t == full) break;
          }
          BeliefView w = BeliefView::of(std::move(worlds));
          if (is_epistemic_model(w, g) && is_founded(*p, w).founded)
            founded_s5.push_back(std::move(w));
        }
        std::sort(founded_s5.begin(), founded_s5.end());
        add_check(rep, "s5eq = founded S5 models", rep.s5eq == founded_s5);
      }
    }
    // Subjective constraints only ever filter world views.
    for (std::size_t i = 0; i < p->rules.size(); ++i) {
      const Rule& r = p->rules[i];
      if (!r.is_constraint()) continue;
      FormulaClass cls = classify_formula(r.body_formula());
      if (cls != FormulaClass::subjective && cls != FormulaClass::atomless)
        continue;
      Program rest;
      rest.signature = p->signature;
      for (std::size_t j = 0; j < p->rules.size(); ++j)
        if (j != i) rest.add(p->rules[j]);
      std::vector<BeliefView> kept;
      for (const auto& w : faeel_world_views(rest, sig))
        if (!epistemic_sat(w, r.body_formula())) kept.push_back(w);
      add_check(rep, "constraint monotonicity (rule " + std::to_string(i) + ")",
                *rep.faeel_fast == kept);
    }
  }
  return rep;
}

}  // namespace detail

inline DifferentialReport differential_report(const Theory& g,
                                              const Signature& sig) {
  return detail::differential_core(g, sig, nullptr);
}

inline DifferentialReport differential_report(const Program& p,
                                              const Signature& sig) {
  return detail::differential_core(program_to_theory(p), sig, &p);
}

// ---------------------------------------------------------------------------
// Golden corpus.

struct CorpusEntry {
  std::string id;
  std::filesystem::path dir;
  std::string source_ref;
  bool is_program = false;
  std::string input_text;
  // semantics tag -> expected world views (reference-only tags excluded)
  std::vector<std::pair<Semantics, Json>> expected;
  Json reference_only;  // third-party columns, display only
};

struct CorpusRow {
  std::string id;
  std::string semantics;
  bool ok = true;
  std::string detail;
};

struct CorpusReport {
  std::vector<CorpusRow> rows;
  int failures = 0;
};

inline std::vector<CorpusEntry> load_corpus(const std::filesystem::path& dir) {
  std::vector<CorpusEntry> entries;
  std::vector<std::filesystem::path> subdirs;
  for (const auto& e : std::filesystem::directory_iterator(dir))
    if (e.is_directory()) subdirs.push_back(e.path());
  std::sort(subdirs.begin(), subdirs.end());
  for (const auto& sub : subdirs) {
    CorpusEntry entry;
    entry.id = sub.filename().string();
    entry.dir = sub;
    std::filesystem::path input = sub / "input.lp";
    entry.is_program = std::filesystem::exists(input);
    if (!entry.is_program) input = sub / "input.thy";
    if (!std::filesystem::exists(input))
      throw std::runtime_error(entry.id + ": no input.lp or input.thy");
    {
      std::ifstream in(input);
      std::stringstream ss;
      ss << in.rdbuf();
      entry.input_text = ss.str();
    }
    Json meta;
    {
      std::ifstream in(sub / "meta.json");
      if (!in) throw std::runtime_error(entry.id + ": missing meta.json");
      in >> meta;
    }
    entry.source_ref = meta.value("source_ref", "");
    std::vector<std::string> reference_tags;
    if (meta.contains("reference_only"))
      for (const auto& t : meta["reference_only"])
        reference_tags.push_back(t.get<std::string>());
    Json expected;
    {
      std::ifstream in(sub / "expected.json");
      if (!in) throw std::runtime_error(entry.id + ": missing expected.json");
      in >> expected;
    }
    for (auto it = expected.begin(); it != expected.end(); ++it) {
      bool reference = std::find(reference_tags.begin(), reference_tags.end(),
                                 it.key()) != reference_tags.end();
      if (reference) {
        entry.reference_only[it.key()] = it.value();
        continue;
      }
      std::optional<Semantics> tag = semantics_from_name(it.key());
      if (!tag)
        throw std::runtime_error(entry.id + ": unknown semantics tag '" +
                                 it.key() + "' not marked reference-only");
      entry.expected.emplace_back(*tag, it.value());
    }
    entries.push_back(std::move(entry));
  }
  return entries;
}

inline CorpusReport run_corpus(const std::filesystem::path& dir) {
  CorpusReport report;
  for (const auto& entry : load_corpus(dir)) {
    Theory g;
    std::optional<Program> p;
    if (entry.is_program) {
      p = parse_program(entry.input_text);
      g = program_to_theory(*p);
    } else {
      g = parse_theory(entry.input_text);
    }
    const Signature& sig = g.signature;
    for (const auto& [tag, expected_json] : entry.expected) {
      CorpusRow row;
      row.id = entry.id;
      row.semantics = semantics_name(tag);
      std::vector<BeliefView> expected = views_from_json(expected_json, sig);
      std::vector<BeliefView> got = solve(tag, g, sig);
      if (got != expected) {
        row.ok = false;
        row.detail = "expected " + print_views(expected, sig) + ", got " +
                     print_views(got, sig);
        ++report.failures;
      }
      report.rows.push_back(std::move(row));
    }
  }
  return report;
}

}  // namespace epiview

#endif  // EPIVIEW_HARNESS_HPP
