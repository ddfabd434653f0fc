#include "properties.hpp"

#include "testing.hpp"

#include <coordctl/coordination.hpp>
#include <coordctl/minext.hpp>
#include <coordctl/observer.hpp>
#include <coordctl/supervisory.hpp>

#include <algorithm>
#include <exception>
#include <functional>
#include <map>
#include <sstream>

namespace coordctl::testing {
namespace {

enum class Verdict { Skip, Pass, Fail };

struct Case {
    Verdict verdict = Verdict::Skip;
    std::string detail;
};

Case skip() { return {}; }
Case pass() { return {Verdict::Pass, {}}; }
Case fail(std::string detail) { return {Verdict::Fail, std::move(detail)}; }

constexpr std::size_t kAttemptsPerCase = 400;
constexpr std::size_t kKeptDetails = 5;

SuiteResult run_suite(const std::string& name, std::uint32_t seed, std::size_t cases,
                      const std::function<Case(Rng&)>& body) {
    SuiteResult result;
    result.name = name;
    Rng rng(seed);
    const std::size_t budget = cases * kAttemptsPerCase;
    while (result.cases < cases && result.attempts < budget) {
        ++result.attempts;
        Case c;
        try {
            c = body(rng);
        } catch (const std::exception& e) {
            c = fail(std::string("exception: ") + e.what());
        }
        if (c.verdict == Verdict::Skip) {
            continue;
        }
        ++result.cases;
        if (c.verdict == Verdict::Fail) {
            ++result.failures;
            if (result.failure_details.size() < kKeptDetails) {
                result.failure_details.push_back("attempt " + std::to_string(result.attempts) + ": " + c.detail);
            }
        }
    }
    return result;
}

// Event pool "a".."e"; each event uncontrollable with probability p.
EventSet random_pool(Rng& rng, std::size_t size, double p) {
    std::bernoulli_distribution unc(p);
    EventSet pool;
    for (std::size_t i = 0; i < size; ++i) {
        pool.add({std::string(1, static_cast<char>('a' + i)), !unc(rng)});
    }
    return pool;
}

// Nonempty subset with at most `max` events.
EventSet random_alphabet(Rng& rng, const EventSet& pool, std::size_t max) {
    std::vector<Event> events(pool.begin(), pool.end());
    std::shuffle(events.begin(), events.end(), rng);
    std::uniform_int_distribution<std::size_t> count(1, std::min(max, events.size()));
    events.resize(count(rng));
    EventSet out;
    for (const auto& e : pool) {
        if (std::find(events.begin(), events.end(), e) != events.end()) {
            out.add(e);
        }
    }
    return out;
}

std::vector<EventSet> two_alphabets(Rng& rng, const EventSet& pool) {
    return {random_alphabet(rng, pool, 4), random_alphabet(rng, pool, 4)};
}

std::string word_text(const std::optional<Word>& w) {
    return w ? "'" + to_string(*w) + "'" : std::string("-");
}

bool equal_marked(const Generator& a, const Generator& b) {
    return language_equality(a, b, LanguageMode::Marked).equal;
}

} // namespace

SuiteResult suite_projection_distributes(std::uint32_t seed, std::size_t cases) {
    return run_suite("projection distributes over product", seed, cases, [](Rng& rng) {
        EventSet pool = random_pool(rng, 5, 0.3);
        auto sigma = two_alphabets(rng, pool);
        EventSet all = sigma[0].unite(sigma[1]);
        EventSet sigma_k = sigma[0].intersect(sigma[1]).unite(random_subset(rng, all, 0.3));
        Generator g1 = random_generator(rng, sigma[0], 6, 0.45, 0.4, "G1");
        Generator g2 = random_generator(rng, sigma[1], 6, 0.45, 0.4, "G2");
        Generator lhs = project_onto(sync_product(g1, g2), sigma_k);
        Generator rhs = sync_product(project_onto(g1, sigma_k), project_onto(g2, sigma_k));
        for (auto mode : {LanguageMode::Marked, LanguageMode::Closed}) {
            auto eq = language_equality(lhs, rhs, mode);
            if (!eq.equal) {
                return fail("Σk=" + to_string(sigma_k) + " differs on " + word_text(eq.counterexample));
            }
        }
        return pass();
    });
}

SuiteResult suite_closure_cd_nonconflict(std::uint32_t seed, std::size_t cases) {
    return run_suite("closure CD implies nonconflicting projections", seed, cases, [](Rng& rng) {
        EventSet pool = random_pool(rng, 5, 0.0);
        auto sigma = two_alphabets(rng, pool);
        EventSet all = sigma[0].unite(sigma[1]);
        EventSet sigma_k = shared_events(sigma).unite(random_subset(rng, all, 0.25));
        if (sigma_k.same_as(all)) {
            return skip();
        }
        Generator k = random_generator(rng, all, 6, 0.4, 0.4, "K");
        if (trim(k).is_empty() || !is_conditionally_decomposable(k, sigma, sigma_k, LanguageMode::Closed).holds) {
            return skip();
        }
        Generator p1 = project_onto(k, sigma[0].unite(sigma_k));
        Generator p2 = project_onto(k, sigma[1].unite(sigma_k));
        Generator lhs = prefix_closure(sync_product(p1, p2));
        Generator rhs = sync_product(prefix_closure(p1), prefix_closure(p2));
        auto eq = language_equality(lhs, rhs, LanguageMode::Marked);
        if (!eq.equal) {
            return fail("Σk=" + to_string(sigma_k) + " conflict on " + word_text(eq.counterexample));
        }
        return pass();
    });
}

SuiteResult suite_conditional_implies_controllable(std::uint32_t seed, std::size_t cases) {
    return run_suite("conditional controllability implies controllability", seed, cases, [](Rng& rng) {
        EventSet pool = random_pool(rng, 5, 0.35);
        auto sigma = two_alphabets(rng, pool);
        EventSet all = sigma[0].unite(sigma[1]);
        EventSet sigma_k = shared_events(sigma).unite(random_subset(rng, all, 0.3));
        if (sigma_k.same_as(all)) {
            return skip();
        }
        std::vector<Generator> plants{random_generator(rng, sigma[0], 5, 0.5, 0.6, "G1"),
                                      random_generator(rng, sigma[1], 5, 0.5, 0.6, "G2")};
        Generator gk = random_generator(rng, sigma_k, 4, 0.7, 0.7, "Gk");
        Generator g = sync_product(sync_product(plants[0], plants[1]), gk);
        Generator gt = trim(g);
        if (gt.is_empty()) {
            return skip();
        }
        Generator k = trim(random_sub_automaton(rng, gt, 0.8, 0.7));
        if (k.is_empty()) {
            return skip();
        }
        EventSet unc = all.uncontrollable();
        if (!is_conditionally_decomposable(k, sigma, sigma_k, LanguageMode::Closed).holds ||
            !is_conditionally_controllable(k, plants, gk, unc).holds) {
            return skip();
        }
        auto verdict = is_controllable(k, g, unc);
        if (!verdict.controllable) {
            return fail("K not controllable at '" + to_string(verdict.witness->prefix) + "' + " +
                        verdict.witness->event);
        }
        return pass();
    });
}

namespace {

// Grows Σk until P_k and each P_{i+k} are observers of L. Σk only grows, so
// this settles at the latest when it covers every event.
EventSet observer_closed_events(const Generator& l, std::span<const EventSet> sigma, EventSet sigma_k) {
    for (;;) {
        EventSet before = sigma_k;
        sigma_k = sigma_k.unite(extend_to_observer(l, projection_of(l, sigma_k), LanguageMode::Closed));
        for (const auto& s : sigma) {
            EventSet target = extend_to_observer(l, projection_of(l, s.unite(sigma_k)), LanguageMode::Closed);
            sigma_k = sigma_k.unite(target.minus(s));
        }
        if (sigma_k.same_as(before)) {
            return sigma_k;
        }
    }
}

} // namespace

SuiteResult suite_observer_lcc_implies_conditional(std::uint32_t seed, std::size_t cases) {
    return run_suite("observer and LCC imply conditional controllability", seed, cases, [](Rng& rng) {
        EventSet pool = random_pool(rng, 5, 0.4);
        auto sigma = two_alphabets(rng, pool);
        EventSet all = sigma[0].unite(sigma[1]);
        EventSet unc = all.uncontrollable();
        std::vector<Generator> plants{random_generator(rng, sigma[0], 5, 0.5, 0.5, "G1"),
                                      random_generator(rng, sigma[1], 5, 0.5, 0.5, "G2")};
        Generator l = generated_language(sync_product(plants[0], plants[1]));
        EventSet sigma_k = observer_closed_events(l, sigma, shared_events(sigma).unite(random_subset(rng, all, 0.2)));
        if (sigma_k.same_as(all)) {
            return skip();
        }
        std::vector<EventSet> targets{sigma_k, sigma[0].unite(sigma_k), sigma[1].unite(sigma_k)};
        for (const auto& t : targets) {
            auto p = projection_of(l, t);
            if (!is_observer(l, p, LanguageMode::Closed).holds || !is_lcc(l, p, unc).holds) {
                return skip();
            }
        }
        Generator spec = random_sub_automaton(rng, l, 0.75, 0.6);
        Generator k = sup_c(spec, l, unc);
        if (trim(k).is_empty() || !is_controllable(k, l, unc).controllable) {
            return skip();
        }
        Generator gk = build_coordinator(plants, sigma_k);
        auto cc = is_conditionally_controllable(k, plants, gk, unc);
        if (!cc.holds) {
            std::string where = !cc.coordinator.controllable ? "coordinator" : "local";
            return fail("Σk=" + to_string(sigma_k) + " fails at " + where);
        }
        return pass();
    });
}

SuiteResult suite_star_inclusion(std::uint32_t seed, std::size_t cases) {
    return run_suite("projected local supervisors within supC_k", seed, cases, [](Rng& rng) {
        EventSet pool = random_pool(rng, 5, 0.35);
        auto sigma = two_alphabets(rng, pool);
        EventSet all = sigma[0].unite(sigma[1]);
        CoordinationProblem problem;
        problem.plants = {random_generator(rng, sigma[0], 5, 0.5, 0.6, "G1"),
                          random_generator(rng, sigma[1], 5, 0.5, 0.6, "G2")};
        Generator gt = trim(sync_product(problem.plants[0], problem.plants[1]));
        if (gt.is_empty()) {
            return skip();
        }
        problem.spec = trim(random_sub_automaton(rng, gt, 0.8, 0.7));
        if (problem.spec.is_empty()) {
            return skip();
        }
        problem.coordinator_events = shared_events(sigma).unite(random_subset(rng, all, 0.25));
        auto report = synthesize_star(problem);
        for (std::size_t i = 0; i < report.sup_cik.size(); ++i) {
            Generator projected = project_onto(report.sup_cik[i], report.coordinator_events);
            auto incl = language_inclusion(projected, report.sup_ck, LanguageMode::Marked);
            if (!incl.holds) {
                return fail("plant " + std::to_string(i + 1) + " Σk=" + to_string(report.coordinator_events) +
                            " escapes on " + word_text(incl.counterexample));
            }
        }
        return pass();
    });
}

SuiteResult suite_observer_nonconflict_equivalence(std::uint32_t seed, std::size_t cases) {
    std::size_t nonconflicting = 0;
    std::size_t conflicting = 0;
    auto result = run_suite("nonconflict preserved by observer abstraction", seed, cases, [&](Rng& rng) {
        EventSet pool = random_pool(rng, 5, 0.0);
        auto sigma = two_alphabets(rng, pool);
        EventSet all = sigma[0].unite(sigma[1]);
        std::vector<Generator> gs{random_generator(rng, sigma[0], 6, 0.4, 0.35, "L1"),
                                  random_generator(rng, sigma[1], 6, 0.4, 0.35, "L2")};
        EventSet sigma0 = shared_events(sigma).unite(random_subset(rng, all, 0.2));
        for (bool changed = true; changed;) {
            changed = false;
            for (const auto& g : gs) {
                EventSet grown = extend_to_observer(g, projection_of(g, sigma0), LanguageMode::Marked);
                if (!grown.is_subset_of(sigma0)) {
                    sigma0 = sigma0.unite(grown);
                    changed = true;
                }
            }
        }
        for (const auto& g : gs) {
            if (!is_observer(g, projection_of(g, sigma0), LanguageMode::Marked).holds) {
                return skip();
            }
        }
        if (sigma0.same_as(all)) {
            return skip();
        }
        auto nonconflict = [](const Generator& a, const Generator& b) {
            return equal_marked(prefix_closure(sync_product(a, b)),
                                sync_product(prefix_closure(a), prefix_closure(b)));
        };
        bool concrete = nonconflict(gs[0], gs[1]);
        bool abstract = nonconflict(project_onto(gs[0], sigma0), project_onto(gs[1], sigma0));
        ++(concrete ? nonconflicting : conflicting);
        if (concrete != abstract) {
            return fail("Σ0=" + to_string(sigma0) + " concrete " + (concrete ? "nonconflicting" : "conflicting") +
                        ", abstraction disagrees");
        }
        return pass();
    });
    result.note = std::to_string(nonconflicting) + " nonconflicting, " + std::to_string(conflicting) + " conflicting";
    if (nonconflicting == 0 || conflicting == 0) {
        ++result.failures;
        result.failure_details.push_back("one side of the equivalence was never exercised");
    }
    return result;
}

SuiteResult suite_supc_oracle(std::uint32_t seed, std::size_t cases) {
    std::size_t pruned = 0;
    std::size_t nonempty = 0;
    auto result = run_suite("supC against exhaustive search", seed, cases, [&](Rng& rng) {
        std::uniform_int_distribution<std::size_t> size(2, 4);
        EventSet alphabet = random_pool(rng, size(rng), 0.3);
        EventSet unc = alphabet.uncontrollable();
        Generator plant = random_generator(rng, alphabet, 6, 0.7, 0.5, "G");
        std::uniform_int_distribution<std::size_t> count(1, 6);
        std::uniform_int_distribution<std::size_t> length(0, 4);
        std::uniform_int_distribution<EventId> event(0, static_cast<EventId>(alphabet.size() - 1));
        std::vector<Word> words(count(rng));
        for (auto& word : words) {
            // bias towards words the plant generates so the result is not always empty
            StateId s = *plant.initial();
            for (std::size_t n = length(rng); n > 0; --n) {
                EventId e = event(rng);
                if (s != kNoState && plant.next(s, e) == kNoState) {
                    e = event(rng);
                }
                word.push_back(alphabet[e].name);
                s = s == kNoState ? kNoState : plant.next(s, e);
            }
        }
        Generator k = finite_language(alphabet, words);
        std::set<Word> expected = oracle::sup_c(std::set<Word>(words.begin(), words.end()), plant, unc);
        Generator result = sup_c(k, plant, unc);
        std::set<Word> got = marked_words(result, 5);
        std::set<Word> distinct(words.begin(), words.end());
        auto in_plant = static_cast<std::size_t>(
            std::count_if(distinct.begin(), distinct.end(), [&](const Word& x) { return generates(plant, x); }));
        nonempty += expected.empty() ? 0 : 1;
        pruned += expected.size() < in_plant ? 1 : 0;
        if (got != expected) {
            std::ostringstream os;
            os << "K={";
            for (const auto& word : words) {
                os << "'" << to_string(word) << "' ";
            }
            os << "} got " << got.size() << " words, expected " << expected.size();
            return fail(os.str());
        }
        return pass();
    });
    result.note = std::to_string(nonempty) + " nonempty, " + std::to_string(pruned) + " where control removed words";
    return result;
}

SuiteResult suite_minext_setcover(std::uint32_t seed, std::size_t cases) {
    std::map<std::size_t, std::size_t> sizes;
    auto result = run_suite("minimal CD extension equals minimum set cover", seed, cases, [&](Rng& rng) {
        std::uniform_int_distribution<std::size_t> dim(1, 5);
        std::bernoulli_distribution member(0.3);
        SetCoverInstance inst;
        std::size_t n = dim(rng);
        std::size_t m = dim(rng);
        for (std::size_t i = 1; i <= n; ++i) {
            inst.ground.push_back("b" + std::to_string(i));
        }
        std::vector<std::set<std::size_t>> sets(m);
        for (auto& s : sets) {
            for (std::size_t i = 0; i < n; ++i) {
                if (member(rng)) {
                    s.insert(i);
                }
            }
        }
        std::uniform_int_distribution<std::size_t> pick(0, m - 1);
        for (std::size_t i = 0; i < n; ++i) {
            bool covered = std::any_of(sets.begin(), sets.end(), [&](const auto& s) { return s.count(i) > 0; });
            if (!covered) {
                sets[pick(rng)].insert(i);
            }
        }
        for (std::size_t j = 0; j < m; ++j) {
            std::vector<std::string> members;
            for (auto i : sets[j]) {
                members.push_back(inst.ground[i]);
            }
            inst.collection.emplace_back("c" + std::to_string(j + 1), members);
        }
        inst.budget = m;
        std::size_t expected = oracle::min_set_cover(inst);
        ++sizes[expected];
        auto reduced = setcover_to_cd(inst);
        auto ext = exact_min_extension(reduced.spec, reduced.alphabets);
        EventSet sigma_k = shared_events(reduced.alphabets).unite(ext.extension);
        if (!is_conditionally_decomposable(reduced.spec, reduced.alphabets, sigma_k).holds) {
            return fail("returned extension " + to_string(ext.extension) + " is not CD");
        }
        if (ext.cardinality != expected || !ext.certified_minimal) {
            return fail("n=" + std::to_string(n) + " m=" + std::to_string(m) + " extension " +
                        std::to_string(ext.cardinality) + " vs cover " + std::to_string(expected));
        }
        return pass();
    });
    for (const auto& [size, count] : sizes) {
        result.note += (result.note.empty() ? "cover sizes " : ", ") + std::to_string(size) + ":" + std::to_string(count);
    }
    return result;
}

std::vector<SuiteResult> run_all_suites(std::size_t cases) {
    return {
        suite_projection_distributes(0x5eed0001, cases),
        suite_closure_cd_nonconflict(0x5eed0002, cases),
        suite_conditional_implies_controllable(0x5eed0003, cases),
        suite_observer_lcc_implies_conditional(0x5eed0004, cases),
        suite_star_inclusion(0x5eed0005, cases),
        suite_observer_nonconflict_equivalence(0x5eed0006, cases),
        suite_supc_oracle(0x5eed0007, cases),
        suite_minext_setcover(0x5eed0008, cases),
    };
}

} // namespace coordctl::testing
