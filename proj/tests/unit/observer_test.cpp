#include "testing.hpp"

#include <coordctl/coordination.hpp>
#include <coordctl/observer.hpp>

#include <doctest.h>

using namespace coordctl;
using namespace coordctl::testing;

TEST_CASE("projection onto a b d observes both components") {
    EventSet abd = events({"a", "b", "d"});
    for (const char* name : {"sec6_G1.json", "sec6_G2.json"}) {
        Generator g = fixture(name);
        CHECK(is_observer(g, projection_of(g, abd), LanguageMode::Closed).holds);
        CHECK(is_observer(g, projection_of(g, abd), LanguageMode::Marked).holds);
    }
}

TEST_CASE("identity projection is an observer") {
    Generator k = fixture("rail_K.json");
    CHECK(is_observer(k, projection_of(k, k.alphabet())).holds);
}

TEST_CASE("observer failure and its extension") {
    EventSet ac = events({"a", "c"});
    Generator g = finite_language(ac, {w("a"), w("c")});
    auto p = projection_of(g, events({"c"}));
    auto v = is_observer(g, p);
    CHECK_FALSE(v.holds);
    CHECK(v.s == w("a"));
    CHECK(v.t == w("c"));
    CHECK(extend_to_observer(g, p).names() == std::vector<std::string>{"a", "c"});
    auto ok = projection_of(g, ac);
    CHECK(extend_to_observer(g, ok).same_as(ac));
}

TEST_CASE("brute-force observer check on words") {
    // every (s, t) pair up to length 3 against the automaton verdict
    Rng rng(5);
    EventSet abc = events({"a", "b", "c"});
    EventSet target = events({"a", "c"});
    for (int i = 0; i < 30; ++i) {
        Generator g = random_generator(rng, abc, 4, 0.5, 0.4);
        // finite slice keeps the brute force exact
        std::set<Word> lm = marked_words(g, 3);
        std::vector<Word> words(lm.begin(), lm.end());
        Generator k = finite_language(abc, words);
        bool brute = true;
        for (const auto& s : oracle::prefixes(lm)) {
            for (const auto& t : oracle::project(lm, target)) {
                Word ps = oracle::project(s, target);
                if (ps.size() > t.size() || !std::equal(ps.begin(), ps.end(), t.begin())) {
                    continue;
                }
                bool found = false;
                for (const auto& full : lm) {
                    if (full.size() >= s.size() && std::equal(s.begin(), s.end(), full.begin()) &&
                        oracle::project(full, target) == t) {
                        found = true;
                        break;
                    }
                }
                brute = brute && found;
            }
        }
        CHECK(is_observer(k, projection_of(k, target)).holds == brute);
    }
}

TEST_CASE("extension always yields an observer") {
    Rng rng(11);
    EventSet abcd = events({"a", "b", "c", "d"});
    for (int i = 0; i < 20; ++i) {
        Generator g = random_generator(rng, abcd, 5);
        EventSet target = random_subset(rng, abcd, 0.4);
        for (auto mode : {LanguageMode::Marked, LanguageMode::Closed}) {
            EventSet grown = extend_to_observer(g, projection_of(g, target), mode);
            CHECK(target.is_subset_of(grown));
            CHECK(is_observer(g, projection_of(g, grown), mode).holds);
        }
    }
}

TEST_CASE("local control consistency") {
    EventSet sigma = events({"a", "b", "c", "u"}, {"u"});
    Generator l = closed_language(sigma, {w("c u"), w("a b u")});
    CHECK(is_lcc(l, projection_of(l, sigma), sigma.uncontrollable()).holds);
    auto v = is_lcc(l, projection_of(l, events({"a", "u"})), sigma.uncontrollable());
    CHECK_FALSE(v.holds);
    REQUIRE(v.witness);
    // s = ε with bypass c fails as well and is shorter
    CHECK(v.witness->event == "u");
    CHECK(((v.witness->s == w("") && v.witness->bypass == w("c")) ||
           (v.witness->s == w("a") && v.witness->bypass == w("b"))));

    // an uncontrollable bypass restores LCC
    EventSet sigma2 = events({"a", "b", "u"}, {"u", "b"});
    Generator l2 = closed_language(sigma2, {w("a b u")});
    CHECK(is_lcc(l2, projection_of(l2, events({"a", "u"})), sigma2.uncontrollable()).holds);
}

TEST_CASE("railway projections are LCC for the plant language") {
    auto problem = read_problem(fixture_path("rail_problem.json"));
    Generator l = generated_language(sync_product(problem.plants));
    EventSet unc = l.alphabet().uncontrollable();
    const EventSet& sk = problem.coordinator_events;
    CHECK(is_lcc(l, projection_of(l, sk), unc).holds);
    CHECK(is_lcc(l, projection_of(l, problem.plants[0].alphabet().unite(sk)), unc).holds);
    CHECK(is_lcc(l, projection_of(l, problem.plants[1].alphabet().unite(sk)), unc).holds);
}

TEST_CASE("projection suite") {
    auto problem = read_problem(fixture_path("sec5_problem.json"));
    EventSet unc = problem.spec.alphabet().uncontrollable();
    auto report = verify_projection_suite(problem.plants, problem.coordinator_events, unc);
    CHECK(report.global_observer);
    CHECK(report.global_lcc);
    CHECK(report.coordinator_within_projection);
    CHECK_FALSE(report.checks.empty());

    EventSet all = problem.plants[0].alphabet().unite(problem.plants[1].alphabet());
    CHECK(verify_projection_suite(problem.plants, all, unc).all_hold());
}

TEST_CASE("projection suite agrees with direct checks") {
    Rng rng(23);
    EventSet pool = events({"a", "b", "c", "d"}, {"b"});
    for (int i = 0; i < 20; ++i) {
        std::vector<Generator> plants{random_generator(rng, pool.filter([](const Event& e) { return e.name != "d"; }), 3),
                                      random_generator(rng, pool.filter([](const Event& e) { return e.name != "a"; }), 3)};
        std::vector<EventSet> sigma{plants[0].alphabet(), plants[1].alphabet()};
        EventSet sk = shared_events(sigma);
        EventSet unc = pool.uncontrollable();
        auto report = verify_projection_suite(plants, sk, unc);
        Generator l = generated_language(sync_product(plants));
        bool obs = is_observer(l, projection_of(l, sk), LanguageMode::Closed).holds;
        bool lcc = is_lcc(l, projection_of(l, sk), unc).holds;
        for (const auto& s : sigma) {
            obs = obs && is_observer(l, projection_of(l, s.unite(sk)), LanguageMode::Closed).holds;
            lcc = lcc && is_lcc(l, projection_of(l, s.unite(sk)), unc).holds;
        }
        CHECK(report.global_observer == obs);
        CHECK(report.global_lcc == lcc);
    }
}
