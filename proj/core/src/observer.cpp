#include "coordctl/observer.hpp"

#include "coordctl/coordination.hpp"
#include "coordctl/errors.hpp"
#include "detail.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace coordctl {
namespace {

void check_projection(const Generator& g, const ProjectionSpec& p) {
    detail::require_same_events(p.source, g.alphabet(), "projection source");
    if (!p.target.is_subset_of(p.source)) {
        throw InputError("projection target " + to_string(p.target) + " is not a subset of " + to_string(p.source));
    }
}

// Shortest t with t in Lm(from y) but not in Lm(from z); kNoState for z is
// the empty language.
std::optional<Word> subset_inclusion(detail::SubsetDfa& dfa, StateId y, StateId z) {
    const EventSet& target = dfa.target();
    std::map<std::pair<StateId, StateId>, std::uint32_t> seen;
    detail::Trace trace;
    std::deque<std::pair<StateId, StateId>> queue;
    seen.emplace(std::make_pair(y, z), trace.push(detail::kRoot, 0));
    queue.emplace_back(y, z);
    while (!queue.empty()) {
        auto [a, b] = queue.front();
        queue.pop_front();
        std::uint32_t node = seen.at({a, b});
        if (dfa.marked(a) && (b == kNoState || !dfa.marked(b))) {
            return trace.word(node, target);
        }
        if (a == b) {
            continue;
        }
        for (EventId t = 0; t < target.size(); ++t) {
            StateId na = dfa.step(a, t);
            if (na == kNoState) {
                continue;
            }
            StateId nb = b == kNoState ? kNoState : dfa.step(b, t);
            auto [it, inserted] = seen.emplace(std::make_pair(na, nb), 0);
            if (inserted) {
                it->second = trace.push(node, t);
                queue.emplace_back(na, nb);
            }
        }
    }
    return std::nullopt;
}

Word project_word(const Word& w, const EventSet& target) {
    Word out;
    for (const auto& e : w) {
        if (target.contains(e)) {
            out.push_back(e);
        }
    }
    return out;
}

} // namespace

ProjectionSpec projection_of(const Generator& g, const EventSet& target) {
    return {g.alphabet(), g.alphabet().intersect(target)};
}

ObserverVerdict is_observer(const Generator& g, const ProjectionSpec& p, LanguageMode mode, const Limits& limits) {
    check_projection(g, p);
    Generator a = mode == LanguageMode::Marked ? trim(g) : generated_language(g);
    ObserverVerdict verdict;
    if (a.is_empty()) {
        return verdict;
    }
    EventSet target = a.alphabet().intersect(p.target);
    detail::SubsetDfa dfa(a, target, limits.determinization_cap, &limits);
    std::vector<EventId> to_target(a.num_events(), detail::kNoEvent);
    for (EventId t = 0; t < target.size(); ++t) {
        to_target[dfa.source_event(t)] = t;
    }

    std::map<std::pair<StateId, StateId>, std::optional<Word>> cache;
    std::map<std::pair<StateId, StateId>, std::uint32_t> seen;
    detail::Trace trace;
    std::deque<std::pair<StateId, StateId>> queue;
    StateId y0 = dfa.initial();
    seen.emplace(std::make_pair(*a.initial(), y0), trace.push(detail::kRoot, 0));
    queue.emplace_back(*a.initial(), y0);
    while (!queue.empty()) {
        auto [q, y] = queue.front();
        queue.pop_front();
        std::uint32_t node = seen.at({q, y});
        limits.check_cancelled();
        StateId z = dfa.closure_of({q});
        auto key = std::make_pair(y, z);
        auto it = cache.find(key);
        if (it == cache.end()) {
            it = cache.emplace(key, y == z ? std::nullopt : subset_inclusion(dfa, y, z)).first;
        }
        if (it->second) {
            Word s = trace.word(node, a.alphabet());
            Word t = project_word(s, target);
            t.insert(t.end(), it->second->begin(), it->second->end());
            verdict.holds = false;
            verdict.s = std::move(s);
            verdict.t = std::move(t);
            return verdict;
        }
        for (EventId e = 0; e < a.num_events(); ++e) {
            StateId nq = a.next(q, e);
            if (nq == kNoState) {
                continue;
            }
            StateId ny = to_target[e] == detail::kNoEvent ? y : dfa.step(y, to_target[e]);
            auto [jt, inserted] = seen.emplace(std::make_pair(nq, ny), 0);
            if (inserted) {
                jt->second = trace.push(node, e);
                queue.emplace_back(nq, ny);
            }
        }
    }
    return verdict;
}

EventSet extend_to_observer(const Generator& g, const ProjectionSpec& p, LanguageMode mode, const Limits& limits) {
    check_projection(g, p);
    EventSet target = p.target;
    for (;;) {
        auto verdict = is_observer(g, {p.source, target}, mode, limits);
        if (verdict.holds) {
            break;
        }
        std::optional<Event> pick;
        for (const auto& name : *verdict.s) {
            if (!target.contains(name)) {
                pick = *p.source.find(name);
                break;
            }
        }
        if (!pick) {
            for (const auto& e : used_events(g)) {
                if (!target.contains(e.name)) {
                    pick = e;
                    break;
                }
            }
        }
        if (!pick) {
            // no hidden event labels a reachable transition: P is the identity on L
            break;
        }
        target.add(*pick);
    }
    return p.source.filter([&](const Event& e) { return target.contains(e.name); });
}

LccVerdict is_lcc(const Generator& g, const ProjectionSpec& p, const EventSet& uncontrollable, const Limits& limits) {
    check_projection(g, p);
    Generator a = accessible(g);
    LccVerdict verdict;
    if (a.is_empty()) {
        return verdict;
    }
    const EventSet& alphabet = a.alphabet();
    const std::size_t m = alphabet.size();
    std::vector<char> hidden(m), unc(m);
    for (EventId e = 0; e < m; ++e) {
        hidden[e] = p.target.contains(alphabet[e].name) ? 0 : 1;
        unc[e] = uncontrollable.contains(alphabet[e].name) ? 1 : 0;
    }

    // BFS over hidden moves from q; returns states in discovery order and the trace
    auto hidden_reach = [&](StateId q, bool only_uncontrollable, detail::Trace& trace,
                            std::vector<std::uint32_t>& node) {
        std::vector<StateId> order;
        node.assign(a.num_states(), detail::kRoot);
        node[q] = trace.push(detail::kRoot, 0);
        order.push_back(q);
        for (std::size_t i = 0; i < order.size(); ++i) {
            StateId s = order[i];
            for (EventId e = 0; e < m; ++e) {
                if (!hidden[e] || (only_uncontrollable && !unc[e])) {
                    continue;
                }
                StateId t = a.next(s, e);
                if (t != kNoState && node[t] == detail::kRoot) {
                    node[t] = trace.push(node[s], e);
                    order.push_back(t);
                }
            }
        }
        return order;
    };

    std::vector<std::uint32_t> snode(a.num_states(), detail::kRoot);
    detail::Trace strace;
    std::deque<StateId> queue{*a.initial()};
    snode[*a.initial()] = strace.push(detail::kRoot, 0);
    while (!queue.empty()) {
        StateId q = queue.front();
        queue.pop_front();
        limits.check_cancelled();
        detail::Trace any_trace;
        detail::Trace unc_trace;
        std::vector<std::uint32_t> any_node;
        std::vector<std::uint32_t> unc_node;
        auto any = hidden_reach(q, false, any_trace, any_node);
        auto only_unc = hidden_reach(q, true, unc_trace, unc_node);
        for (EventId sigma = 0; sigma < m; ++sigma) {
            if (hidden[sigma] || !unc[sigma]) {
                continue;
            }
            auto enabled = [&](StateId s) { return a.next(s, sigma) != kNoState; };
            auto reached = std::find_if(any.begin(), any.end(), enabled);
            if (reached == any.end()) {
                continue;
            }
            if (std::none_of(only_unc.begin(), only_unc.end(), enabled)) {
                verdict.holds = false;
                verdict.witness = LccWitness{strace.word(snode[q], alphabet), alphabet[sigma].name,
                                             any_trace.word(any_node[*reached], alphabet)};
                return verdict;
            }
        }
        for (EventId e = 0; e < m; ++e) {
            StateId t = a.next(q, e);
            if (t != kNoState && snode[t] == detail::kRoot) {
                snode[t] = strace.push(snode[q], e);
                queue.push_back(t);
            }
        }
    }
    return verdict;
}

bool ProjectionSuiteReport::all_hold() const {
    return lifted_observer && lifted_lcc && global_observer && global_lcc && coordinator_within_projection;
}

ProjectionSuiteReport verify_projection_suite(std::span<const Generator> plants, const EventSet& coordinator_events,
                                              const EventSet& uncontrollable, const Limits& limits) {
    ProjectionSuiteReport report;
    auto add = [&](std::string name, bool holds, std::string detail) {
        report.checks.push_back({std::move(name), holds, std::move(detail)});
        return holds;
    };
    auto observer_detail = [](const ObserverVerdict& v) {
        return v.holds ? std::string() : "s='" + to_string(*v.s) + "' t='" + to_string(*v.t) + "'";
    };
    auto lcc_detail = [](const LccVerdict& v) {
        return v.holds ? std::string()
                       : "s='" + to_string(v.witness->s) + "' event=" + v.witness->event + " bypass='" +
                             to_string(v.witness->bypass) + "'";
    };

    for (std::size_t i = 0; i < plants.size(); ++i) {
        std::string idx = std::to_string(i + 1);
        EventSet local = plants[i].alphabet().unite(coordinator_events);
        Generator lifted = inverse_project(plants[i], local);
        ProjectionSpec pk{lifted.alphabet(), lifted.alphabet().intersect(coordinator_events)};
        auto obs = is_observer(lifted, pk, LanguageMode::Closed, limits);
        report.lifted_observer &= add("observer P^{" + idx + "+k}_k on lifted L(G" + idx + ")", obs.holds,
                                      observer_detail(obs));
        auto lcc = is_lcc(lifted, pk, uncontrollable, limits);
        report.lifted_lcc &=
            add("LCC P^{" + idx + "+k}_k on lifted L(G" + idx + ")", lcc.holds, lcc_detail(lcc));
    }

    Generator plant = generated_language(sync_product(plants));
    auto global = [&](const std::string& label, const EventSet& target) {
        ProjectionSpec p = projection_of(plant, target);
        auto obs = is_observer(plant, p, LanguageMode::Closed, limits);
        report.global_observer &= add("observer " + label + " on L", obs.holds, observer_detail(obs));
        auto lcc = is_lcc(plant, p, uncontrollable, limits);
        report.global_lcc &= add("LCC " + label + " on L", lcc.holds, lcc_detail(lcc));
    };
    global("P_k", coordinator_events);
    for (std::size_t i = 0; i < plants.size(); ++i) {
        global("P_{" + std::to_string(i + 1) + "+k}", plants[i].alphabet().unite(coordinator_events));
    }

    Generator gk = build_coordinator(plants, coordinator_events, limits);
    Generator pl = project_onto(plant, coordinator_events, limits);
    auto inc = language_inclusion(gk, pl, LanguageMode::Closed);
    report.coordinator_within_projection =
        add("L(G_k) within P_k(L)", inc.holds, inc.holds ? std::string() : "'" + to_string(*inc.counterexample) + "'");
    return report;
}

} // namespace coordctl
