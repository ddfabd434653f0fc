#include "testing.hpp"

#include <coordctl/coordination.hpp>
#include <coordctl/errors.hpp>
#include <coordctl/supervisory.hpp>

#include <doctest.h>

using namespace coordctl;
using namespace coordctl::testing;

TEST_CASE("K = {a} is controllable for closure{abu, bau}") {
    EventSet sigma = events({"a", "b", "u"}, {"u"});
    Generator l = closed_language(sigma, {w("a b u"), w("b a u")});
    Generator k = finite_language(sigma, {w("a")});
    CHECK(is_controllable(k, l, sigma.uncontrollable()).controllable);
}

TEST_CASE("closure{a} is not controllable for closure{au}") {
    EventSet sigma = events({"a", "u"}, {"u"});
    Generator l = closed_language(sigma, {w("a u")});
    Generator k = closed_language(sigma, {w("a")});
    auto v = is_controllable(k, l, sigma.uncontrollable());
    CHECK_FALSE(v.controllable);
    REQUIRE(v.witness);
    CHECK(v.witness->prefix == w("a"));
    CHECK(v.witness->event == "u");
    CHECK(is_controllable(l, l, sigma.uncontrollable()).controllable);
}

TEST_CASE("controllability requires K inside the plant") {
    EventSet sigma = events({"a", "u"}, {"u"});
    Generator l = closed_language(sigma, {w("a")});
    Generator k = finite_language(sigma, {w("u")});
    CHECK_THROWS_AS(is_controllable(k, l, sigma.uncontrollable()), NotSublanguageError);
}

TEST_CASE("supC of the worked example coordinator level") {
    auto problem = read_problem(fixture_path("sec5_problem.json"));
    EventSet unc = problem.spec.alphabet().uncontrollable();
    Generator gk = build_coordinator(problem.plants, problem.coordinator_events);
    Generator pk = project_onto(problem.spec, problem.coordinator_events);
    Generator sk = sup_c(pk, gk, unc);
    CHECK(marked_words(sk, 4) == oracle::prefixes({w("a1 a2"), w("a2 a1")}));

    Generator l1 = sync_product(problem.plants[0], prefix_closure(sk));
    EventSet sigma1k = problem.plants[0].alphabet().unite(problem.coordinator_events);
    Generator s1 = sup_c(project_onto(problem.spec, sigma1k), l1, unc);
    CHECK(marked_words(s1, 5) == oracle::prefixes({w("a2 a1 u1")}));
}

TEST_CASE("supC of a controllable specification is itself") {
    EventSet sigma = events({"a", "b", "u"}, {"u"});
    Generator l = closed_language(sigma, {w("a b u"), w("b a u")});
    Generator k = finite_language(sigma, {w("a"), w("b a u")});
    REQUIRE(is_controllable(k, l, sigma.uncontrollable()).controllable);
    CHECK(language_equality(sup_c(k, l, sigma.uncontrollable()), k).equal);
}

TEST_CASE("supC removes words that cannot block an uncontrollable event") {
    EventSet sigma = events({"a", "u"}, {"u"});
    Generator l = closed_language(sigma, {w("a u a")});
    Generator k = finite_language(sigma, {w("a"), w("a u a")});
    // after a, u cannot be prevented; a u is not marked but a u a is, so both stay
    CHECK(marked_words(sup_c(k, l, sigma.uncontrollable()), 4) == std::set<Word>{w("a"), w("a u a")});
    Generator k2 = finite_language(sigma, {w("a")});
    CHECK(marked_words(sup_c(k2, l, sigma.uncontrollable()), 4).empty());
}

TEST_CASE("supC intersects the specification with the plant") {
    EventSet sigma = events({"a", "b"});
    Generator l = closed_language(sigma, {w("a")});
    Generator k = finite_language(sigma, {w("a"), w("b")});
    CHECK(marked_words(sup_c(k, l, {}), 3) == std::set<Word>{w("a")});
}

TEST_CASE("Lm-closedness") {
    auto problem = read_problem(fixture_path("ex3_problem.json"));
    Generator pk = project_onto(problem.spec, problem.coordinator_events);
    auto v = is_lm_closed(pk, *problem.coordinator);
    CHECK_FALSE(v.closed);
    CHECK(v.witness == Word{});
    CHECK_FALSE(v.witness_in_k);

    Generator plant = sync_product(problem.plants);
    CHECK(is_lm_closed(problem.spec, plant).closed);
    Generator c = prefix_closure(problem.spec);
    CHECK(is_lm_closed(c, c).closed);
}

TEST_CASE("closed loop") {
    Generator g = fixture("sec6_product.json");
    Generator universal(g.alphabet());
    StateId s = universal.add_state("0", true);
    universal.set_initial(s);
    for (const auto& e : g.alphabet()) {
        universal.add_transition(s, e.name, s);
    }
    Generator cl = closed_loop(universal, g);
    CHECK(language_equality(cl, g).equal);
    CHECK(language_equality(cl, g, LanguageMode::Closed).equal);
    CHECK(trim(closed_loop(Generator::empty(g.alphabet()), g)).is_empty());
}

TEST_CASE("railway closed loop carries the plant marking") {
    auto problem = read_problem(fixture_path("rail_problem.json"));
    auto report = synthesize_star(problem);
    Generator sup = sync_product(report.sup_cik);
    Generator plant = sync_product(problem.plants);
    CHECK(language_equality(closed_loop(sup, plant), fixture("rail_supCC.json")).equal);
}
