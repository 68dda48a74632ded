#include <catch2/catch_amalgamated.hpp>

#include "epiview/epiview.hpp"
#include "helpers.hpp"

using namespace epiview;
using epiview::testing::ht_view;
using epiview::testing::make_signature;
using epiview::testing::view_of;

TEST_CASE("s5-ht models", "[characterizations]") {
  SECTION("split total view models the disjunctive loop") {
    Program p = parse_program("a | b. a :- K b. b :- K a.");
    Theory g = program_to_theory(p);
    CHECK(s5ht_is_model(ht_view({{1, 1}, {2, 2}}), g));
  }
  SECTION("a fact fails at a pair with an empty here") {
    Theory g = parse_theory("a.");
    CHECK_FALSE(s5ht_is_model(ht_view({{0, 1}}), g));
  }
  SECTION("the empty theory holds anywhere") {
    Theory g;
    g.signature = make_signature({"a"});
    CHECK(s5ht_is_model(ht_view({{0, 0}}), g));
  }
}

TEST_CASE("s5 view order", "[characterizations]") {
  std::mt19937_64 rng(8);
  SECTION("reflexive") {
    for (int i = 0; i < 100; ++i) {
      HTView w = epiview::testing::random_ht_view(rng, 3);
      CHECK(s5_view_order(w, w));
    }
  }
  SECTION("per-there domination") {
    CHECK(s5_view_order(ht_view({{0, 1}, {0, 2}}), ht_view({{1, 1}, {2, 2}})));
    CHECK_FALSE(s5_view_order(ht_view({{1, 1}, {2, 2}}), ht_view({{0, 1}, {0, 2}})));
  }
  SECTION("mismatched there-projections are incomparable") {
    CHECK_FALSE(s5_view_order(ht_view({{0, 1}}), ht_view({{2, 2}})));
    CHECK_FALSE(s5_view_order(ht_view({{2, 2}}), ht_view({{0, 1}})));
  }
}

TEST_CASE("s5 equilibrium models", "[characterizations]") {
  SECTION("a believed fact") {
    Theory g = parse_theory("K a.");
    CHECK(s5_equilibrium_models(g, g.signature) ==
          std::vector<BeliefView>{view_of({1})});
  }
  SECTION("empty theory over one atom") {
    Signature sig = make_signature({"a"});
    Theory g;
    g.signature = sig;
    CHECK(s5_equilibrium_models(g, sig) == std::vector<BeliefView>{view_of({0})});
  }
  SECTION("the unfounded joint view is not an equilibrium") {
    Program p = parse_program("a | b. a :- K b. b :- K a.");
    Theory g = program_to_theory(p);
    std::vector<BeliefView> models = s5_equilibrium_models(g, g.signature);
    CHECK(std::find(models.begin(), models.end(), view_of({3})) == models.end());
    CHECK(std::find(models.begin(), models.end(), view_of({1, 2})) != models.end());
  }
}

TEST_CASE("semi-total interpretations", "[characterizations]") {
  const Mask a = 1;
  CHECK(is_semi_total({{0, a}, ht_view({{a, a}, {0, 0}})}));
  CHECK_FALSE(is_semi_total({{a, a}, ht_view({{0, a}})}));
  // every total interpretation is semi-total
  CHECK(is_semi_total({{a, a}, ht_view({{a, a}})}));
}

TEST_CASE("weak equilibrium models", "[characterizations]") {
  Signature sig = make_signature({"a"});
  const Mask a = 1;
  Theory self = parse_theory("K a -> a.", &sig);

  SECTION("self-support survives the semi-total check only") {
    CHECK(is_weak_eqb(a, view_of({a}), self));
    CHECK_FALSE(is_equilibrium_belief_model(a, view_of({a}), self, sig));
  }
  SECTION("nothing sits below the empty real world") {
    Theory empty;
    empty.signature = sig;
    CHECK(is_weak_eqb(0, view_of({0}), empty));
  }
}

TEST_CASE("weak world views", "[characterizations]") {
  SECTION("self-support") {
    Theory g = parse_theory("K a -> a.");
    CHECK(weak_world_views(g, g.signature) ==
          std::vector<BeliefView>({view_of({0}), view_of({1})}));
  }
  SECTION("forcing a believed atom leaves nothing") {
    Program p = parse_program("a | b. c :- K a. :- not c.");
    Theory g = program_to_theory(p);
    CHECK(weak_world_views(g, g.signature).empty());
  }
  SECTION("weak views equal g91 views") {
    Signature sig = make_signature({"a", "b"});
    for (std::uint64_t seed = 0; seed < 80; ++seed) {
      Theory g =
          program_to_theory(random_program(seed, sig, 3, GenProfile::standard));
      CHECK(weak_world_views(g, sig) == g91_world_views(g, sig));
    }
  }
}

TEST_CASE("believed atom with double negation", "[characterizations]") {
  // no equilibrium world view, yet [{a}] is an s5 equilibrium model
  Theory g = parse_theory("K a. not not a.");
  const Signature& sig = g.signature;
  FaeelOptions full_sweep;
  full_sweep.prune_with_g91 = false;
  CHECK(faeel_world_views(g, sig, full_sweep).empty());
  CHECK(s5_equilibrium_models(g, sig) == std::vector<BeliefView>{view_of({1})});
  CHECK_FALSE(is_equilibrium_belief_model(0, view_of({1}), g, sig));
  CHECK_FALSE(is_equilibrium_belief_model(1, view_of({1}), g, sig));
}

TEST_CASE("equilibrium views sit among s5 equilibrium models",
          "[characterizations][property]") {
  Signature sig = make_signature({"a", "b"});
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    Theory g =
        program_to_theory(random_program(seed, sig, 3, GenProfile::standard));
    std::vector<BeliefView> s5eq = s5_equilibrium_models(g, sig);
    FaeelOptions full_sweep;
    full_sweep.prune_with_g91 = false;
    for (const auto& w : faeel_world_views(g, sig, full_sweep)) {
      CHECK(std::find(s5eq.begin(), s5eq.end(), w) != s5eq.end());
      // no outside interpretation joins the equilibrium members
      std::vector<Mask> members = eqb_members(g, w, sig);
      CHECK(members == w.worlds);
    }
  }
}
