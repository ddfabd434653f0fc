#include "coordctl/nonblocking.hpp"

#include "coordctl/errors.hpp"
#include "coordctl/observer.hpp"

namespace coordctl {
namespace {

Generator compose_with(std::span<const Generator> parts, const Generator& extra) {
    std::vector<Generator> all(parts.begin(), parts.end());
    all.push_back(extra);
    return sync_product(all);
}

} // namespace

NonblockingResult nonblocking_coordinator(std::span<const Generator> supervisors, const EventSet& coordinator_events,
                                          const EventSet& uncontrollable, const Limits& limits) {
    if (supervisors.empty()) {
        throw InputError("nonblocking coordinator needs at least one supervisor");
    }
    std::vector<EventSet> alphabets;
    for (const auto& s : supervisors) {
        alphabets.push_back(s.alphabet());
    }
    EventSet all = unite_all(alphabets);
    NonblockingResult result;
    for (const auto& e : coordinator_events) {
        if (!all.contains(e.name)) {
            throw InputError("coordinator event '" + e.name + "' occurs in no supervisor");
        }
        result.sigma0.add(*all.find(e.name));
    }

    for (bool changed = true; changed;) {
        changed = false;
        for (const auto& s : supervisors) {
            ProjectionSpec p = projection_of(s, result.sigma0);
            if (is_observer(s, p, LanguageMode::Marked, limits).holds) {
                continue;
            }
            for (const auto& e : extend_to_observer(s, p, LanguageMode::Marked, limits)) {
                changed = result.sigma0.add(e) || changed;
            }
        }
    }

    std::vector<Generator> projected;
    std::vector<Generator> closures;
    for (const auto& s : supervisors) {
        projected.push_back(project_onto(s, result.sigma0, limits));
        closures.push_back(prefix_closure(projected.back()));
    }
    Generator spec = with_alphabet(sync_product(projected), result.sigma0);
    Generator plant = with_alphabet(sync_product(closures), result.sigma0);
    result.coordinator = minimize(sup_c(spec, plant, uncontrollable, limits));
    result.coordinator.set_name("LC");

    Generator composed = compose_with(supervisors, result.coordinator);
    result.blocking_witness = blocking_witness(composed);
    result.composed_nonblocking = !result.blocking_witness;
    std::vector<Generator> supervisor_closures;
    for (const auto& s : supervisors) {
        supervisor_closures.push_back(prefix_closure(s));
    }
    Generator loose = with_alphabet(sync_product(supervisor_closures), composed.alphabet());
    auto verdict = is_controllable(composed, loose, uncontrollable, limits);
    result.composed_controllable = verdict.controllable;
    result.control_witness = verdict.witness;
    return result;
}

NonblockingTheoremReport verify_nonblocking_theorem(std::span<const Generator> supervisors,
                                                    const NonblockingResult& result,
                                                    std::span<const Generator> plants, const EventSet& uncontrollable,
                                                    const Limits& limits) {
    NonblockingTheoremReport report;
    Generator composed = compose_with(supervisors, result.coordinator);
    std::vector<Generator> closures;
    for (const auto& s : supervisors) {
        closures.push_back(prefix_closure(s));
    }
    closures.push_back(prefix_closure(result.coordinator));
    auto eq = language_equality(prefix_closure(composed), sync_product(closures), LanguageMode::Closed);
    report.nonconflicting = eq.equal;
    report.conflict_witness = eq.counterexample;

    Generator plant = generated_language(sync_product(plants));
    EventSet alphabet = composed.alphabet().unite(plant.alphabet());
    auto verdict = is_controllable(with_alphabet(composed, alphabet), with_alphabet(plant, alphabet), uncontrollable,
                                   limits);
    report.controllable = verdict.controllable;
    report.control_witness = verdict.witness;
    return report;
}

} // namespace coordctl
