#include "report.hpp"

namespace coordctl::cli {

Json word_json(const std::optional<Word>& w) {
    return w ? Json(to_string(*w)) : Json(nullptr);
}

Json names_json(const EventSet& events) {
    return Json(events.names());
}

Json generator_summary(const Generator& g) {
    std::size_t marked = 0;
    for (StateId s = 0; s < g.num_states(); ++s) {
        marked += g.is_marked(s) ? 1 : 0;
    }
    Json j;
    j["name"] = g.name();
    j["states"] = g.num_states();
    j["marked_states"] = marked;
    j["transitions"] = g.num_transitions();
    j["empty"] = trim(g).is_empty();
    return j;
}

Json to_json(const ControllabilityVerdict& v) {
    Json j;
    j["controllable"] = v.controllable;
    if (v.witness) {
        j["witness"] = {{"prefix", to_string(v.witness->prefix)}, {"event", v.witness->event}};
    } else {
        j["witness"] = nullptr;
    }
    return j;
}

Json to_json(const ClosednessVerdict& v) {
    Json j;
    j["closed"] = v.closed;
    j["witness"] = word_json(v.witness);
    j["witness_in_k"] = v.witness_in_k;
    return j;
}

Json to_json(const InclusionResult& r) {
    return {{"holds", r.holds}, {"counterexample", word_json(r.counterexample)}};
}

Json to_json(const EqualityResult& r) {
    return {{"equal", r.equal},
            {"counterexample", word_json(r.counterexample)},
            {"counterexample_in_first", r.counterexample_in_first}};
}

Json to_json(const DecomposabilityResult& r) {
    return {{"holds", r.holds},
            {"counterexample", word_json(r.counterexample)},
            {"counterexample_in_composition", r.counterexample_in_composition}};
}

Json to_json(const IndependenceResult& r) {
    return {{"holds", r.holds}, {"offending", names_json(r.offending)}};
}

Json to_json(const ConditionalControllability& r) {
    Json local = Json::array();
    for (const auto& v : r.local) {
        local.push_back(to_json(v));
    }
    return {{"holds", r.holds}, {"coordinator", to_json(r.coordinator)}, {"local", local}};
}

Json to_json(const ConditionalClosedness& r) {
    Json local = Json::array();
    for (const auto& v : r.local) {
        local.push_back(to_json(v));
    }
    return {{"holds", r.holds}, {"coordinator", to_json(r.coordinator)}, {"local", local}};
}

Json to_json(const ObserverVerdict& v) {
    return {{"observer", v.holds}, {"s", word_json(v.s)}, {"t", word_json(v.t)}};
}

Json to_json(const LccVerdict& v) {
    Json j;
    j["lcc"] = v.holds;
    if (v.witness) {
        j["witness"] = {{"s", to_string(v.witness->s)},
                        {"event", v.witness->event},
                        {"bypass", to_string(v.witness->bypass)}};
    } else {
        j["witness"] = nullptr;
    }
    return j;
}

Json to_json(const ProjectionSuiteReport& r) {
    Json checks = Json::array();
    for (const auto& c : r.checks) {
        checks.push_back({{"name", c.name}, {"holds", c.holds}, {"detail", c.detail}});
    }
    return {{"all_hold", r.all_hold()},
            {"lifted_observer", r.lifted_observer},
            {"lifted_lcc", r.lifted_lcc},
            {"global_observer", r.global_observer},
            {"global_lcc", r.global_lcc},
            {"coordinator_within_projection", r.coordinator_within_projection},
            {"checks", checks}};
}

Json to_json(const SynthesisReport& r) {
    Json j;
    Json alphabets = Json::array();
    for (const auto& a : r.alphabets) {
        alphabets.push_back(names_json(a));
    }
    j["alphabets"] = alphabets;
    j["uncontrollable"] = names_json(r.uncontrollable);
    j["coordinator_events"] = names_json(r.coordinator_events);
    j["added_events"] = r.added_events;
    j["spec"] = generator_summary(r.spec);
    j["coordinator"] = generator_summary(r.coordinator);
    j["cd"] = to_json(r.cd);
    j["cd_of_closure"] = r.cd_of_closure ? to_json(*r.cd_of_closure) : Json(nullptr);
    j["independence"] = to_json(r.independence);
    j["sup_ck"] = generator_summary(r.sup_ck);
    Json local = Json::array();
    for (const auto& s : r.sup_cik) {
        local.push_back(generator_summary(s));
    }
    j["sup_cik"] = local;
    Json projected_local_inclusion = Json::array();
    for (const auto& x : r.projected_local_inclusion) {
        projected_local_inclusion.push_back(to_json(x));
    }
    j["projected_local_inclusion"] = projected_local_inclusion;
    Json coordinator_inclusion = Json::array();
    for (const auto& x : r.coordinator_inclusion) {
        coordinator_inclusion.push_back(to_json(x));
    }
    j["coordinator_inclusion"] = coordinator_inclusion;
    j["coordinator_inclusion_holds"] = r.coordinator_inclusion_holds();
    Json steps = Json::array();
    for (const auto& step : r.refinement) {
        Json sl = Json::array();
        for (const auto& s : step.sup_cik) {
            sl.push_back(generator_summary(s));
        }
        steps.push_back({{"sup_ck", generator_summary(step.sup_ck)}, {"sup_cik", sl}, {"coordinator_inclusion", step.coordinator_inclusion}});
    }
    j["refinement"] = steps;
    j["refinement_converged"] = r.refinement_converged;
    j["cond_controllable"] = r.cond_controllable ? to_json(*r.cond_controllable) : Json(nullptr);
    j["cond_closed"] = r.cond_closed ? to_json(*r.cond_closed) : Json(nullptr);
    if (r.composed) {
        j["composed"] = generator_summary(*r.composed);
        j["composed_cond_controllable"] = r.composed_cond_controllable;
        j["composed_nonblocking"] = r.composed_nonblocking;
    } else {
        j["composed"] = nullptr;
    }
    j["composed_equals_spec"] = r.composed_equals_spec ? to_json(*r.composed_equals_spec) : Json(nullptr);
    j["notes"] = r.notes;
    return j;
}

Json to_json(const NonblockingResult& r) {
    Json j;
    j["sigma0"] = names_json(r.sigma0);
    j["coordinator"] = generator_summary(r.coordinator);
    j["composed_nonblocking"] = r.composed_nonblocking;
    j["blocking_witness"] = word_json(r.blocking_witness);
    j["composed_controllable"] = r.composed_controllable;
    if (r.control_witness) {
        j["control_witness"] = {{"prefix", to_string(r.control_witness->prefix)}, {"event", r.control_witness->event}};
    } else {
        j["control_witness"] = nullptr;
    }
    return j;
}

Json to_json(const NonblockingTheoremReport& r) {
    Json j;
    j["nonconflicting"] = r.nonconflicting;
    j["conflict_witness"] = word_json(r.conflict_witness);
    j["controllable"] = r.controllable;
    if (r.control_witness) {
        j["control_witness"] = {{"prefix", to_string(r.control_witness->prefix)}, {"event", r.control_witness->event}};
    } else {
        j["control_witness"] = nullptr;
    }
    return j;
}

Json to_json(const ExtensionResult& r) {
    return {{"extension", names_json(r.extension)},
            {"cardinality", r.cardinality},
            {"certified_minimal", r.certified_minimal},
            {"nodes_explored", r.nodes_explored}};
}

} // namespace coordctl::cli
