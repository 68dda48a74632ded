#include <catch2/catch_amalgamated.hpp>

#include "epiview/epiview.hpp"
#include "helpers.hpp"

using namespace epiview;
using epiview::testing::atoms;
using epiview::testing::make_signature;
using epiview::testing::view_of;

namespace {

std::vector<BeliefView> all_views(const Signature& sig) {
  std::vector<BeliefView> views;
  const Mask full = sig.full_mask();
  const std::uint64_t interps = std::uint64_t{1} << sig.size();
  for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << interps); ++bits) {
    std::vector<Mask> worlds;
    for (Mask t = 0;; ++t) {
      if ((bits >> t) & 1) worlds.push_back(t);
      if (t == full) break;
    }
    views.push_back(BeliefView::of(std::move(worlds)));
  }
  return views;
}

}  // namespace

TEST_CASE("kd45 satisfaction", "[kd45]") {
  Signature sig = make_signature({"a", "b"});
  const Mask a = 1, b = 2;
  Theory g = parse_theory("K a. not K b -> a. K (K a -> a).", &sig);
  const Formula& ka = g.formulas[0];
  const Formula& loop = g.formulas[1];

  CHECK(kd45_sat(a, view_of({a}), ka));
  CHECK(kd45_sat(b, view_of({b}), loop));
  CHECK_FALSE(kd45_sat(0, view_of({0, a}), ka));
  SECTION("nested modal") {
    // over [{}], K a is false at every world, so K a -> a holds everywhere
    CHECK(kd45_sat(0, view_of({0}), g.formulas[2]));
    // a real world outside the view can still violate the bare conditional
    Formula bare = parse_theory("K a -> a.", &sig).formulas.front();
    CHECK_FALSE(kd45_sat(0, view_of({a}), bare));
  }
  SECTION("implication is classical") {
    Formula f = parse_theory("not not a -> a.", &sig).formulas.front();
    CHECK(kd45_sat(a, view_of({0, a}), f));
    CHECK(kd45_sat(0, view_of({0, a}), f));
  }
}

TEST_CASE("belief and epistemic models", "[kd45]") {
  Signature sig = make_signature({"a", "b"});
  const Mask a = 1, b = 2;
  Theory self = parse_theory("K a -> a.", &sig);
  Theory loop = parse_theory("not K b -> a.", &sig);

  CHECK(is_belief_model({a, view_of({a})}, self));
  CHECK_FALSE(is_belief_model({b, view_of({a})}, self));
  CHECK(is_belief_model({0, view_of({0})}, Theory{{}, sig}));

  CHECK(is_epistemic_model(view_of({b}), loop));
  CHECK(is_epistemic_model(view_of({a}), loop));
  CHECK_FALSE(is_epistemic_model(view_of({0}), loop));

  SECTION("the default-negation rule has the epistemic models of K b | K a") {
    Theory alt = parse_theory("K b | K a.", &sig);
    int count = 0;
    for (const auto& w : all_views(sig)) {
      CHECK(is_epistemic_model(w, loop) == is_epistemic_model(w, alt));
      count += is_epistemic_model(w, loop);
    }
    CHECK(count == 5);  // [{b}], [{a,b}], [{b},{a,b}], [{a}], [{a},{a,b}]
  }
}

TEST_CASE("subjective reduct", "[kd45]") {
  Signature sig = make_signature({"b", "a"});  // mention order of the rule
  Theory loop = parse_theory("not K b -> a.", &sig);
  const Mask b = 1, a = 2;

  SECTION("believed antecedent turns the guard into bottom") {
    Theory reduct = subjective_reduct(loop, view_of({b}));
    REQUIRE(reduct.formulas.size() == 1);
    CHECK_FALSE(has_modal(reduct));
    CHECK(reduct.formulas.front() ==
          Formula::impl(Formula::neg(Formula::top()), Formula::atom(1)));
    CHECK(classical_models(reduct, sig) == std::vector<Mask>({0, b, a, a | b}));
    CHECK(stable_models(reduct, sig) == std::vector<Mask>({0}));
  }
  SECTION("unbelieved antecedent turns the guard into top") {
    Theory reduct = subjective_reduct(loop, view_of({a}));
    CHECK(reduct.formulas.front() ==
          Formula::impl(Formula::neg(Formula::bottom()), Formula::atom(1)));
    CHECK(classical_models(reduct, sig) == std::vector<Mask>({a, a | b}));
  }
  SECTION("self-support reduct") {
    Signature s1 = make_signature({"a"});
    Theory self = parse_theory("K a -> a.", &s1);
    Theory reduct = subjective_reduct(self, view_of({1}));
    CHECK(reduct.formulas.front() ==
          Formula::impl(Formula::top(), Formula::atom(0)));
  }
  SECTION("nested modal subformulas evaluate through the view") {
    Signature s2 = make_signature({"a", "b"});
    Theory g = parse_theory("K (K a -> a) -> b.", &s2);
    Theory reduct = subjective_reduct(g, view_of({0}));
    // over [{}] the inner K a fails, so K a -> a holds at every world
    CHECK(reduct.formulas.front() ==
          Formula::impl(Formula::top(), Formula::atom(1)));
  }
  SECTION("the reduct depends only on the maximal modal truths") {
    std::mt19937_64 rng(17);
    Signature s3 = make_signature({"a", "b"});
    for (int i = 0; i < 80; ++i) {
      Theory g;
      g.signature = s3;
      for (int j = 0; j < 2; ++j)
        g.add(epiview::testing::random_formula(rng, 2, 3, true));
      BeliefView w1 = epiview::testing::random_view(rng, 3);
      BeliefView w2 = epiview::testing::random_view(rng, 3);
      bool same_truths = true;
      for (const auto& m : maximal_modal_subformulas(g))
        same_truths &= epistemic_sat(w1, m) == epistemic_sat(w2, m);
      if (same_truths)
        CHECK(print_theory(subjective_reduct(g, w1)) ==
              print_theory(subjective_reduct(g, w2)));
      CHECK_FALSE(has_modal(subjective_reduct(g, w1)));
    }
  }
}

TEST_CASE("g91 world views", "[kd45]") {
  SECTION("default negation of a belief") {
    Theory g = parse_theory("not K b -> a.");
    const Mask a = 2;  // b is mentioned first
    CHECK(g91_world_views(g, g.signature) ==
          std::vector<BeliefView>{view_of({a})});
  }
  SECTION("self-support keeps two fixpoints") {
    Theory g = parse_theory("K a -> a.");
    CHECK(g91_world_views(g, g.signature) ==
          std::vector<BeliefView>({view_of({0}), view_of({1})}));
  }
  SECTION("forcing a believed atom through a constraint leaves nothing") {
    Program p = parse_program("a | b. c :- K a. :- not c.");
    Theory g = program_to_theory(p);
    CHECK(g91_world_views(g, g.signature).empty());
  }
}

TEST_CASE("ael world views", "[kd45]") {
  SECTION("default negation of a belief") {
    Theory g = parse_theory("not K b -> a.");
    const Mask b = 1, a = 2;
    CHECK(ael_world_views(g, g.signature) ==
          std::vector<BeliefView>{view_of({a, a | b})});
  }
  SECTION("self-support") {
    Theory g = parse_theory("K a -> a.");
    CHECK(ael_world_views(g, g.signature) ==
          std::vector<BeliefView>({view_of({0, 1}), view_of({1})}));
  }
  SECTION("empty theory believes nothing") {
    Signature sig = make_signature({"a"});
    Theory g;
    g.signature = sig;
    CHECK(ael_world_views(g, sig) == std::vector<BeliefView>{view_of({0, 1})});
  }
}

TEST_CASE("fixpoint enumeration matches the definitional sweep",
          "[kd45][oracle]") {
  // direct route: try every nonempty view W and test W == SM[g^W]
  // (resp. CL[g^W]) without any modal-truth guessing
  Signature sig = make_signature({"a", "b"});
  std::mt19937_64 rng(3141);
  for (int i = 0; i < 60; ++i) {
    Theory g;
    g.signature = sig;
    for (int j = 0; j < 2; ++j)
      g.add(epiview::testing::random_formula(rng, 2, 3, true));
    std::vector<BeliefView> sm_fixpoints, cl_fixpoints;
    for (const auto& w : all_views(sig)) {
      Theory reduct = subjective_reduct(g, w);
      if (stable_models(reduct, sig) == w.worlds) sm_fixpoints.push_back(w);
      if (classical_models(reduct, sig) == w.worlds) cl_fixpoints.push_back(w);
    }
    std::sort(sm_fixpoints.begin(), sm_fixpoints.end());
    std::sort(cl_fixpoints.begin(), cl_fixpoints.end());
    CAPTURE(print_theory(g));
    CHECK(g91_world_views(g, sig) == sm_fixpoints);
    CHECK(ael_world_views(g, sig) == cl_fixpoints);
  }
}

TEST_CASE("ael equals g91 plus excluded middle", "[kd45][property]") {
  Signature sig = make_signature({"a", "b"});
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    Program p = random_program(seed, sig, 3, GenProfile::standard);
    Theory g = program_to_theory(p);
    CHECK(ael_world_views(g, sig) ==
          g91_world_views(with_excluded_middle(g, sig), sig));
  }
}

TEST_CASE("g91 world views are epistemic models", "[kd45][property]") {
  Signature sig = make_signature({"a", "b"});
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    Theory g = program_to_theory(random_program(seed, sig, 3, GenProfile::standard));
    for (const auto& w : g91_world_views(g, sig))
      CHECK(is_epistemic_model(w, g));
  }
}
