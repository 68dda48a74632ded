#include <catch2/catch_amalgamated.hpp>

#include "epiview/epiview.hpp"
#include "helpers.hpp"

using namespace epiview;
using epiview::testing::make_signature;
using epiview::testing::view_of;

namespace {

UnfoundedSet uset(std::initializer_list<UnfoundedPair> pairs) {
  return UnfoundedSet{std::vector<UnfoundedPair>(pairs)};
}

}  // namespace

TEST_CASE("unfounded-set conditions", "[foundedness]") {
  SECTION("disjunction alone cannot justify a joint model") {
    Program p = parse_program("a | b.");
    const Mask a = 1, b = 2;
    CHECK(is_unfounded_set(uset({{b, a | b}, {a, a | b}}), p, view_of({a | b})));
    CHECK_FALSE(is_unfounded_set(uset({{a, a}}), p, view_of({a, b})));
  }
  SECTION("self-support is blocked by the subjective-body condition") {
    Program p = parse_program("a :- K a.");
    CHECK(is_unfounded_set(uset({{1, 1}}), p, view_of({1})));
  }
  SECTION("the empty set is not an unfounded set") {
    Program p = parse_program("a | b.");
    CHECK_FALSE(is_unfounded_set(UnfoundedSet{}, p, view_of({1})));
  }
}

TEST_CASE("witness extraction", "[foundedness]") {
  Program p1 = parse_program("a | b. a :- K b. b :- K a.");
  const Mask a = 1, b = 2;

  SECTION("joint view of the belief loop") {
    auto w = unfounded_witness(p1, view_of({a | b}));
    REQUIRE(w.has_value());
    CHECK(w->pairs == std::vector<UnfoundedPair>({{a, a | b}, {b, a | b}}));
  }
  SECTION("split view is founded") {
    CHECK_FALSE(unfounded_witness(p1, view_of({a, b})).has_value());
  }
  SECTION("constraints never change the witness") {
    Program p2 = parse_program("a | b. a :- K b. b :- K a. :- not K a.");
    auto w1 = unfounded_witness(p1, view_of({a | b}));
    auto w2 = unfounded_witness(p2, view_of({a | b}));
    REQUIRE(w2.has_value());
    CHECK(w1->pairs == w2->pairs);
  }
}

TEST_CASE("foundedness verdicts", "[foundedness]") {
  SECTION("self-support") {
    Program p = parse_program("a :- K a.");
    CHECK(is_founded(p, view_of({0})).founded);
    FoundednessVerdict v = is_founded(p, view_of({1}));
    CHECK_FALSE(v.founded);
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->pairs == std::vector<UnfoundedPair>{{1, 1}});
  }
  SECTION("plain disjunction") {
    Program p = parse_program("a | b.");
    FoundednessVerdict v = is_founded(p, view_of({1, 2}));
    CHECK(v.founded);
    CHECK_FALSE(v.witness.has_value());
  }
}

TEST_CASE("constraint indifference", "[foundedness][property]") {
  Signature sig = make_signature({"a", "b", "c"});
  std::mt19937_64 rng(4242);
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    Program p = random_program(seed, sig, 3, GenProfile::standard);
    Program with_constraint = p;
    Rule c;  // random constraint
    Program donor = random_program(seed + 1000, sig, 1, GenProfile::standard);
    c.body = donor.rules.front().body;
    if (c.body.empty()) {
      BodyLiteral l;
      l.subjective = true;
      l.inner.atom = static_cast<int>(rng() % 3);
      c.body.push_back(l);
    }
    with_constraint.add(c);
    BeliefView w = epiview::testing::random_view(rng, sig.full_mask());
    CHECK(is_founded(p, w).founded == is_founded(with_constraint, w).founded);
  }
}

TEST_CASE("unions of unfounded sets stay unfounded", "[foundedness][property]") {
  Signature sig = make_signature({"a", "b"});
  const Mask full = sig.full_mask();
  int checked = 0;
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    Program p = random_program(seed, sig, 3, GenProfile::standard);
    std::mt19937_64 rng(seed * 31 + 5);
    BeliefView w = epiview::testing::random_view(rng, full);

    // every <X, I> with X nonempty over a two-atom signature
    std::vector<UnfoundedPair> universe;
    for (Mask x = 1; x <= full; ++x)
      for (Mask i = 0; i <= full; ++i) universe.push_back({x, i});

    std::vector<UnfoundedSet> found;
    for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << universe.size());
         ++bits) {
      UnfoundedSet u;
      for (std::size_t k = 0; k < universe.size(); ++k)
        if ((bits >> k) & 1) u.pairs.push_back(universe[k]);
      if (is_unfounded_set(u, p, w)) {
        found.push_back(std::move(u));
        if (found.size() >= 24) break;
      }
    }
    for (std::size_t i = 0; i < found.size(); ++i)
      for (std::size_t j = i + 1; j < found.size(); ++j) {
        UnfoundedSet merged = found[i];
        for (const auto& pr : found[j].pairs) {
          if (std::find(merged.pairs.begin(), merged.pairs.end(), pr) ==
              merged.pairs.end())
            merged.pairs.push_back(pr);
        }
        CHECK(is_unfounded_set(merged, p, w));
        ++checked;
      }
  }
  CHECK(checked > 100);
}

TEST_CASE("restricted search agrees on views that model the program",
          "[foundedness][property]") {
  Signature sig = make_signature({"a", "b", "c"});
  int compared = 0;
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    Program p = random_program(seed, sig, 4, GenProfile::standard);
    Theory g = program_to_theory(p);
    for (const auto& w : g91_world_views(g, sig)) {
      bool full_mode = unfounded_witness(p, w, WitnessSearch::full).has_value();
      bool restricted =
          unfounded_witness(p, w, WitnessSearch::within_belief_set).has_value();
      CHECK(full_mode == restricted);
      ++compared;
    }
  }
  CHECK(compared > 50);
}

TEST_CASE("returned witnesses validate", "[foundedness][property]") {
  Signature sig = make_signature({"a", "b", "c"});
  std::mt19937_64 rng(77);
  int witnesses = 0;
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    Program p = random_program(seed, sig, 4, GenProfile::standard);
    BeliefView w = epiview::testing::random_view(rng, sig.full_mask());
    FoundednessVerdict v = is_founded(p, w);  // throws on an invalid witness
    if (!v.founded) {
      ++witnesses;
      CHECK(is_unfounded_set(*v.witness, p, w));
      for (const auto& pair : v.witness->pairs) {
        CHECK(w.contains(pair.belief_set));
        CHECK((pair.atoms & pair.belief_set) != 0);
      }
    }
  }
  CHECK(witnesses > 5);
}
