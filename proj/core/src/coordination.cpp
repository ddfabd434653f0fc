#include "coordctl/coordination.hpp"

#include "coordctl/errors.hpp"
#include "detail.hpp"

#include <algorithm>
#include <future>

namespace coordctl {
namespace {

void require_coordinator_alphabet(std::span<const EventSet> alphabets, const EventSet& sigma_k) {
    EventSet all = unite_all(alphabets);
    EventSet shared = shared_events(alphabets);
    if (!shared.is_subset_of(sigma_k)) {
        throw InputError("coordinator alphabet " + to_string(sigma_k) + " misses shared events " +
                         to_string(shared.minus(sigma_k)));
    }
    if (!sigma_k.is_subset_of(all)) {
        throw InputError("coordinator alphabet has events outside every component alphabet: " +
                         to_string(sigma_k.minus(all)));
    }
}

// K viewed over the union of the component alphabets.
Generator spec_over_union(const Generator& k, std::span<const EventSet> alphabets) {
    EventSet all = unite_all(alphabets);
    if (!k.alphabet().is_subset_of(all)) {
        throw InputError("specification events " + to_string(k.alphabet().minus(all)) +
                         " belong to no component alphabet");
    }
    return with_alphabet(k, k.alphabet().unite(all));
}

std::vector<Generator> local_projections(const Generator& k, std::span<const EventSet> alphabets,
                                         const EventSet& sigma_k, const Limits& limits) {
    std::vector<Generator> out;
    out.reserve(alphabets.size());
    for (const auto& a : alphabets) {
        out.push_back(project_onto(k, a.unite(sigma_k), limits));
    }
    return out;
}

bool in_composition(const std::vector<Generator>& parts, const Word& w) {
    for (const auto& part : parts) {
        Word pw;
        for (const auto& e : w) {
            if (part.alphabet().contains(e)) {
                pw.push_back(e);
            }
        }
        if (!accepts(part, pw)) {
            return false;
        }
    }
    return true;
}

template <typename F>
auto map_plants(std::size_t n, const Limits& limits, F f) {
    using R = decltype(f(std::size_t{0}));
    std::vector<R> out;
    out.reserve(n);
    if (limits.threads <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) {
            out.push_back(f(i));
        }
        return out;
    }
    std::vector<std::future<R>> futures;
    for (std::size_t i = 0; i < n; ++i) {
        futures.push_back(std::async(std::launch::async, f, i));
    }
    for (auto& fut : futures) {
        out.push_back(fut.get());
    }
    return out;
}

} // namespace

IndependenceResult conditionally_independent(std::span<const Generator> plants, const Generator& gk) {
    IndependenceResult result;
    std::vector<EventSet> used;
    for (const auto& p : plants) {
        used.push_back(used_events(p));
    }
    EventSet coordinated = used_events(gk);
    for (const auto& e : shared_events(used)) {
        if (!coordinated.contains(e.name)) {
            result.holds = false;
            result.offending.add(e);
        }
    }
    return result;
}

DecomposabilityResult is_conditionally_decomposable(const Generator& k, std::span<const EventSet> alphabets,
                                                    const EventSet& coordinator_events, LanguageMode mode,
                                                    const Limits& limits) {
    require_coordinator_alphabet(alphabets, coordinator_events);
    Generator kk = spec_over_union(mode == LanguageMode::Marked ? k : prefix_closure(k), alphabets);
    auto parts = local_projections(kk, alphabets, coordinator_events, limits);
    Generator composed = with_alphabet(sync_product(parts), kk.alphabet());
    auto eq = language_equality(composed, kk);
    DecomposabilityResult result;
    if (!eq.equal) {
        result.holds = false;
        result.counterexample = eq.counterexample;
        result.counterexample_in_composition = eq.counterexample_in_first;
    }
    return result;
}

EventSet extend_for_cd(const Generator& k, std::span<const EventSet> alphabets, const EventSet& coordinator_events,
                       bool with_closure, const Limits& limits) {
    EventSet all = unite_all(alphabets);
    EventSet sigma_k = coordinator_events;
    for (;;) {
        limits.check_cancelled();
        LanguageMode mode = LanguageMode::Marked;
        auto r = is_conditionally_decomposable(k, alphabets, sigma_k, mode, limits);
        if (r.holds && with_closure) {
            mode = LanguageMode::Closed;
            r = is_conditionally_decomposable(k, alphabets, sigma_k, mode, limits);
        }
        if (r.holds) {
            return sigma_k;
        }
        const Word& w = *r.counterexample;
        Generator kk = spec_over_union(mode == LanguageMode::Marked ? k : prefix_closure(k), alphabets);
        auto removes = [&](const Event& e) {
            EventSet trial = sigma_k;
            trial.add(e);
            return !in_composition(local_projections(kk, alphabets, trial, limits), w);
        };
        std::optional<Event> pick;
        std::optional<Event> first_candidate;
        for (const auto& name : w) {
            if (sigma_k.contains(name)) {
                continue;
            }
            const Event& e = *all.find(name);
            if (!first_candidate) {
                first_candidate = e;
            }
            if (removes(e)) {
                pick = e;
                break;
            }
        }
        if (!pick) {
            for (const auto& e : all) {
                if (sigma_k.contains(e.name)) {
                    continue;
                }
                if (!first_candidate) {
                    first_candidate = e;
                }
                if (removes(e)) {
                    pick = e;
                    break;
                }
            }
        }
        if (!pick) {
            pick = first_candidate;
        }
        if (!pick) {
            // Σk already equals the union; decomposability holds there
            return sigma_k;
        }
        sigma_k.add(*pick);
    }
}

Generator build_coordinator(std::span<const Generator> plants, const EventSet& coordinator_events,
                            const Limits& limits) {
    if (plants.empty()) {
        throw InputError("coordinator needs at least one plant");
    }
    std::vector<EventSet> alphabets;
    for (const auto& p : plants) {
        alphabets.push_back(p.alphabet());
    }
    EventSet all = unite_all(alphabets);
    if (!coordinator_events.is_subset_of(all)) {
        throw InputError("coordinator events " + to_string(coordinator_events.minus(all)) +
                         " occur in no plant alphabet");
    }
    EventSet sigma_k;
    for (const auto& e : coordinator_events) {
        sigma_k.add(*all.find(e.name));
    }
    std::vector<Generator> parts;
    for (const auto& p : plants) {
        parts.push_back(project_onto(p, sigma_k, limits));
    }
    Generator gk = with_alphabet(sync_product(parts), sigma_k);
    gk.set_name("Gk");
    return gk;
}

namespace {

Generator projected_spec(const Generator& k, const EventSet& alphabet, const Limits& limits) {
    return with_alphabet(project_onto(k, alphabet, limits), alphabet);
}

void require_within_plant(const Generator& k, std::span<const Generator> plants, const Generator& gk) {
    std::vector<Generator> all(plants.begin(), plants.end());
    all.push_back(gk);
    auto inc = language_inclusion(prefix_closure(k), sync_product(all), LanguageMode::Closed);
    if (!inc.holds) {
        throw NotSublanguageError("specification word '" + to_string(*inc.counterexample) +
                                      "' is not generated by the coordinated plant",
                                  *inc.counterexample);
    }
}

} // namespace

ConditionalControllability is_conditionally_controllable(const Generator& k, std::span<const Generator> plants,
                                                         const Generator& gk, const EventSet& uncontrollable,
                                                         const Limits& limits) {
    require_within_plant(k, plants, gk);
    ConditionalControllability result;
    Generator pk = projected_spec(k, gk.alphabet(), limits);
    result.coordinator = is_controllable(pk, generated_language(gk), uncontrollable, limits);
    result.holds = result.coordinator.controllable;
    Generator pk_closure = prefix_closure(pk);
    for (const auto& plant : plants) {
        Generator local_plant = sync_product(generated_language(plant), pk_closure);
        Generator local_spec = projected_spec(k, local_plant.alphabet(), limits);
        result.local.push_back(is_controllable(local_spec, local_plant, uncontrollable, limits));
        result.holds = result.holds && result.local.back().controllable;
    }
    return result;
}

ConditionalClosedness is_conditionally_closed(const Generator& k, std::span<const Generator> plants,
                                              const Generator& gk, const Limits& limits) {
    ConditionalClosedness result;
    Generator pk = projected_spec(k, gk.alphabet(), limits);
    result.coordinator = is_lm_closed(pk, gk);
    result.holds = result.coordinator.closed;
    for (const auto& plant : plants) {
        Generator local_plant = sync_product(plant, pk);
        Generator local_spec = projected_spec(k, local_plant.alphabet(), limits);
        result.local.push_back(is_lm_closed(local_spec, local_plant));
        result.holds = result.holds && result.local.back().closed;
    }
    return result;
}

bool SynthesisReport::coordinator_inclusion_holds() const {
    if (!refinement.empty()) {
        const auto& flags = refinement.back().coordinator_inclusion;
        return std::all_of(flags.begin(), flags.end(), [](bool b) { return b; });
    }
    return std::all_of(coordinator_inclusion.begin(), coordinator_inclusion.end(), [](const InclusionResult& r) { return r.holds; });
}

const Generator& SynthesisReport::final_sup_ck() const {
    return refinement.empty() ? sup_ck : refinement.back().sup_ck;
}

const std::vector<Generator>& SynthesisReport::final_sup_cik() const {
    return refinement.empty() ? sup_cik : refinement.back().sup_cik;
}

std::vector<InclusionResult> check_thm2_inclusion(const Generator& sup_ck, std::span<const Generator> sup_cik,
                                                  const EventSet& coordinator_events, const Limits& limits) {
    std::vector<InclusionResult> out;
    for (const auto& s : sup_cik) {
        out.push_back(language_inclusion(sup_ck, project_onto(s, coordinator_events, limits)));
    }
    return out;
}

namespace {

Limits effective_limits(const CoordinationProblem& problem, const Limits& limits) {
    Limits out = limits;
    out.determinization_cap = problem.options.determinization_cap;
    return out;
}

// supC_{i+k} = supC(spec, L(G_i) ∥ closure(supC_k), Σ_{i+k,u}) for every i
std::vector<Generator> local_supervisors(std::span<const Generator> plants, const Generator& sup_ck,
                                         const std::vector<Generator>& specs, const EventSet& uncontrollable,
                                         const Limits& limits) {
    Generator coordinated = prefix_closure(sup_ck);
    return map_plants(plants.size(), limits, [&](std::size_t i) {
        Generator plant = sync_product(generated_language(plants[i]), coordinated);
        Generator spec = with_alphabet(specs[i], specs[i].alphabet().unite(plant.alphabet()));
        Generator s = sup_c(spec, plant, uncontrollable, limits);
        s.set_name("supC" + std::to_string(i + 1) + "k");
        return s;
    });
}

} // namespace

SynthesisReport synthesize_star(const CoordinationProblem& problem, const Limits& base_limits) {
    Limits limits = effective_limits(problem, base_limits);
    const auto& plants = problem.plants;
    if (plants.size() < 2) {
        throw InputError("a coordination problem needs at least two plants");
    }
    SynthesisReport report;
    for (const auto& p : plants) {
        report.alphabets.push_back(p.alphabet());
    }
    EventSet all = unite_all(report.alphabets);
    report.uncontrollable = all.uncontrollable();

    if (!problem.spec.alphabet().is_subset_of(all)) {
        throw InputError("specification events " + to_string(problem.spec.alphabet().minus(all)) +
                         " belong to no plant");
    }
    Generator spec = with_alphabet(problem.spec, problem.spec.alphabet().unite(all));

    // coordinator alphabet
    EventSet sigma_k;
    if (problem.coordinator) {
        for (const auto& e : problem.coordinator->alphabet()) {
            sigma_k.add(e);
        }
    }
    for (const auto& e : problem.coordinator_events) {
        if (!all.contains(e.name)) {
            throw InputError("coordinator event '" + e.name + "' occurs in no plant");
        }
        sigma_k.add(*all.find(e.name));
    }
    for (const auto& e : shared_events(report.alphabets)) {
        if (sigma_k.add(e)) {
            report.added_events.push_back(e.name);
            report.notes.push_back("shared event '" + e.name + "' added to the coordinator alphabet");
        }
    }

    // restrict K to the plants' marked behaviour
    Generator plant = sync_product(plants);
    Generator normalized = with_alphabet(trim(sync_product(spec, plant)), spec.alphabet());
    if (!language_equality(normalized, spec).equal) {
        report.notes.push_back("specification intersected with the marked language of the plant");
    }
    normalized.set_name(problem.spec.name().empty() ? "K" : problem.spec.name());
    report.spec = normalized;

    if (problem.coordinator) {
        if (!sigma_k.same_as(problem.coordinator->alphabet())) {
            throw InputError("explicit coordinator alphabet " + to_string(problem.coordinator->alphabet()) +
                             " must contain all coordinator and shared events " + to_string(sigma_k));
        }
        report.coordinator = with_alphabet(*problem.coordinator, sigma_k);
    } else {
        EventSet extended = extend_for_cd(report.spec, report.alphabets, sigma_k,
                                          problem.options.require_closure_cd, limits);
        for (const auto& e : extended) {
            if (!sigma_k.contains(e.name)) {
                report.added_events.push_back(e.name);
                report.notes.push_back("event '" + e.name + "' added for conditional decomposability");
            }
        }
        sigma_k = extended;
        report.coordinator = build_coordinator(plants, sigma_k, limits);
    }
    report.coordinator_events = sigma_k;

    report.cd = is_conditionally_decomposable(report.spec, report.alphabets, sigma_k, LanguageMode::Marked, limits);
    report.cd_of_closure =
        is_conditionally_decomposable(report.spec, report.alphabets, sigma_k, LanguageMode::Closed, limits);
    report.independence = conditionally_independent(plants, report.coordinator);

    Generator pk = projected_spec(report.spec, sigma_k, limits);
    report.sup_ck = sup_c(pk, generated_language(report.coordinator), report.uncontrollable, limits);
    report.sup_ck.set_name("supCk");
    std::vector<Generator> specs;
    for (const auto& a : report.alphabets) {
        specs.push_back(project_onto(report.spec, a.unite(sigma_k), limits));
    }
    report.sup_cik = local_supervisors(plants, report.sup_ck, specs, report.uncontrollable, limits);
    for (const auto& s : report.sup_cik) {
        report.projected_local_inclusion.push_back(language_inclusion(project_onto(s, sigma_k, limits), report.sup_ck));
    }
    report.coordinator_inclusion = check_thm2_inclusion(report.sup_ck, report.sup_cik, sigma_k, limits);
    report.refinement_converged = report.coordinator_inclusion_holds();
    return report;
}

SynthesisReport refine_doublestar(const CoordinationProblem& problem, SynthesisReport report,
                                  std::size_t iteration_limit, const Limits& base_limits) {
    Limits limits = effective_limits(problem, base_limits);
    const EventSet& sigma_k = report.coordinator_events;
    Generator coordinator_language = generated_language(report.coordinator);
    report.refinement_converged = report.coordinator_inclusion_holds();
    while (!report.refinement_converged && report.refinement.size() < iteration_limit) {
        limits.check_cancelled();
        std::vector<Generator> prev_local = report.final_sup_cik();
        std::vector<Generator> projections;
        for (const auto& s : prev_local) {
            projections.push_back(project_onto(s, sigma_k, limits));
        }
        Generator meet = with_alphabet(sync_product(projections), sigma_k);
        RefinementStep step;
        step.sup_ck = sup_c(meet, coordinator_language, report.uncontrollable, limits);
        step.sup_ck.set_name("supCk'");
        step.sup_cik = local_supervisors(problem.plants, step.sup_ck, prev_local, report.uncontrollable, limits);
        for (auto& s : step.sup_cik) {
            s.set_name(s.name() + "'");
        }
        for (const auto& r : check_thm2_inclusion(step.sup_ck, step.sup_cik, sigma_k, limits)) {
            step.coordinator_inclusion.push_back(r.holds);
        }
        report.refinement.push_back(std::move(step));
        report.refinement_converged = report.coordinator_inclusion_holds();
    }
    return report;
}

SynthesisReport solve(const CoordinationProblem& problem, const Limits& base_limits) {
    Limits limits = effective_limits(problem, base_limits);
    SynthesisReport report = synthesize_star(problem, limits);
    try {
        report.cond_controllable =
            is_conditionally_controllable(report.spec, problem.plants, report.coordinator, report.uncontrollable, limits);
    } catch (const NotSublanguageError& e) {
        report.notes.push_back(std::string("conditional controllability not evaluated: ") + e.what());
    }
    report.cond_closed = is_conditionally_closed(report.spec, problem.plants, report.coordinator, limits);
    if (!report.coordinator_inclusion_holds()) {
        report = refine_doublestar(problem, std::move(report), problem.options.refine_limit, limits);
    }

    Generator composed = sync_product(report.final_sup_cik());
    composed = with_alphabet(composed, report.spec.alphabet());
    composed.set_name("composed");
    report.composed_nonblocking = is_nonblocking(composed);
    try {
        report.composed_cond_controllable = is_conditionally_controllable(composed, problem.plants, report.coordinator,
                                                                          report.uncontrollable, limits)
                                                .holds;
    } catch (const NotSublanguageError& e) {
        report.composed_cond_controllable = false;
        report.notes.push_back(std::string("composed supervisor leaves the plant: ") + e.what());
    }
    if (report.cond_controllable && report.cond_controllable->holds && report.cond_closed->holds) {
        report.composed_equals_spec = language_equality(composed, report.spec);
    }
    report.composed = std::move(composed);
    return report;
}

} // namespace coordctl
