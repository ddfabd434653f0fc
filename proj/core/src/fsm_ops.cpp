#include "coordctl/fsm.hpp"

#include "coordctl/errors.hpp"
#include "detail.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

namespace coordctl {
namespace detail {

std::vector<EventId> event_map(const EventSet& from, const EventSet& to) {
    std::vector<EventId> out(from.size(), kNoEvent);
    for (EventId e = 0; e < from.size(); ++e) {
        if (auto id = to.index_of(from[e].name)) {
            out[e] = *id;
        }
    }
    return out;
}

void require_same_events(const EventSet& a, const EventSet& b, const std::string& what) {
    if (!a.same_as(b)) {
        throw InputError(what + ": alphabets differ (" + to_string(a) + " vs " + to_string(b) + ")");
    }
    for (const auto& e : a) {
        if (b.find(e.name)->controllable != e.controllable) {
            throw FlagConflictError(e.name);
        }
    }
}

Word Trace::word(std::uint32_t node, const EventSet& alphabet) const {
    Word w;
    while (node != kRoot && parent[node] != kRoot) {
        w.push_back(alphabet[via[node]].name);
        node = parent[node];
    }
    std::reverse(w.begin(), w.end());
    return w;
}

Generator restrict_states(const Generator& g, const std::vector<char>& keep) {
    Generator out(g.alphabet(), g.name());
    if (!g.initial() || !keep[*g.initial()]) {
        return out;
    }
    std::vector<StateId> renum(g.num_states(), kNoState);
    for (StateId s = 0; s < g.num_states(); ++s) {
        if (keep[s]) {
            renum[s] = out.add_state(g.state_name(s), g.is_marked(s));
        }
    }
    out.set_initial(renum[*g.initial()]);
    for (StateId s = 0; s < g.num_states(); ++s) {
        if (!keep[s]) {
            continue;
        }
        for (EventId e = 0; e < g.num_events(); ++e) {
            StateId t = g.next(s, e);
            if (t != kNoState && keep[t]) {
                out.add_transition(renum[s], e, renum[t]);
            }
        }
    }
    return out;
}

std::vector<char> reachable(const Generator& g) {
    std::vector<char> seen(g.num_states(), 0);
    if (!g.initial()) {
        return seen;
    }
    std::vector<StateId> stack{*g.initial()};
    seen[*g.initial()] = 1;
    while (!stack.empty()) {
        StateId s = stack.back();
        stack.pop_back();
        for (EventId e = 0; e < g.num_events(); ++e) {
            StateId t = g.next(s, e);
            if (t != kNoState && !seen[t]) {
                seen[t] = 1;
                stack.push_back(t);
            }
        }
    }
    return seen;
}

std::vector<char> coreachable(const Generator& g, const std::vector<char>& targets) {
    std::vector<std::vector<StateId>> preds(g.num_states());
    for (StateId s = 0; s < g.num_states(); ++s) {
        for (EventId e = 0; e < g.num_events(); ++e) {
            StateId t = g.next(s, e);
            if (t != kNoState) {
                preds[t].push_back(s);
            }
        }
    }
    std::vector<char> seen(g.num_states(), 0);
    std::vector<StateId> stack;
    for (StateId s = 0; s < g.num_states(); ++s) {
        if (targets[s]) {
            seen[s] = 1;
            stack.push_back(s);
        }
    }
    while (!stack.empty()) {
        StateId s = stack.back();
        stack.pop_back();
        for (StateId p : preds[s]) {
            if (!seen[p]) {
                seen[p] = 1;
                stack.push_back(p);
            }
        }
    }
    return seen;
}

SubsetDfa::SubsetDfa(const Generator& g, const EventSet& target, std::size_t cap, const Limits* limits)
    : g_(g), target_(target), cap_(cap), limits_(limits), hidden_(g.num_events(), 1) {
    for (const auto& e : target) {
        auto id = g.alphabet().index_of(e.name);
        if (!id) {
            throw InputError("projection target event '" + e.name + "' is not in the source alphabet");
        }
        hidden_[*id] = 0;
        to_source_.push_back(*id);
    }
}

StateId SubsetDfa::closure_of(std::vector<StateId> states) {
    std::vector<char> in(g_.num_states(), 0);
    std::vector<StateId> stack;
    for (StateId s : states) {
        if (!in[s]) {
            in[s] = 1;
            stack.push_back(s);
        }
    }
    while (!stack.empty()) {
        StateId s = stack.back();
        stack.pop_back();
        for (EventId e = 0; e < g_.num_events(); ++e) {
            if (!hidden_[e]) {
                continue;
            }
            StateId t = g_.next(s, e);
            if (t != kNoState && !in[t]) {
                in[t] = 1;
                stack.push_back(t);
            }
        }
    }
    std::vector<StateId> set;
    for (StateId s = 0; s < g_.num_states(); ++s) {
        if (in[s]) {
            set.push_back(s);
        }
    }
    if (set.empty()) {
        return kNoState;
    }
    return intern(std::move(set));
}

StateId SubsetDfa::initial() {
    if (!g_.initial()) {
        return kNoState;
    }
    return closure_of({*g_.initial()});
}

StateId SubsetDfa::intern(std::vector<StateId> set) {
    auto it = index_.find(set);
    if (it != index_.end()) {
        return it->second;
    }
    if (sets_.size() >= cap_) {
        throw ResourceLimitError("projection exceeded the determinization cap of " + std::to_string(cap_) +
                                     " subset states",
                                 cap_);
    }
    if (limits_ != nullptr && (sets_.size() & 0x3ff) == 0) {
        limits_->check_cancelled();
    }
    auto id = static_cast<StateId>(sets_.size());
    bool m = std::any_of(set.begin(), set.end(), [&](StateId s) { return g_.is_marked(s); });
    index_.emplace(set, id);
    sets_.push_back(std::move(set));
    marked_.push_back(m ? 1 : 0);
    delta_.resize(delta_.size() + target_.size(), kUnknown);
    return id;
}

StateId SubsetDfa::step(StateId subset, EventId t) {
    std::size_t slot = static_cast<std::size_t>(subset) * target_.size() + t;
    if (delta_[slot] != kUnknown) {
        return delta_[slot];
    }
    std::vector<StateId> next;
    EventId e = to_source_[t];
    for (StateId s : sets_[subset]) {
        StateId n = g_.next(s, e);
        if (n != kNoState) {
            next.push_back(n);
        }
    }
    StateId result = next.empty() ? kNoState : closure_of(std::move(next));
    // intern may have grown delta_, so index again
    delta_[static_cast<std::size_t>(subset) * target_.size() + t] = result;
    return result;
}

} // namespace detail

Generator accessible(const Generator& g) {
    return detail::restrict_states(g, detail::reachable(g));
}

Generator coaccessible(const Generator& g) {
    std::vector<char> marked(g.num_states());
    for (StateId s = 0; s < g.num_states(); ++s) {
        marked[s] = g.is_marked(s) ? 1 : 0;
    }
    return detail::restrict_states(g, detail::coreachable(g, marked));
}

Generator trim(const Generator& g) {
    return accessible(coaccessible(g));
}

Generator sync_product(const Generator& g1, const Generator& g2) {
    EventSet alphabet = g1.alphabet().unite(g2.alphabet());
    std::string name = g1.name().empty() || g2.name().empty() ? std::string() : g1.name() + "||" + g2.name();
    Generator out(alphabet, name);
    if (g1.is_empty() || g2.is_empty()) {
        return out;
    }
    auto m1 = detail::event_map(alphabet, g1.alphabet());
    auto m2 = detail::event_map(alphabet, g2.alphabet());
    std::map<std::pair<StateId, StateId>, StateId> index;
    std::deque<std::pair<StateId, StateId>> queue;
    auto visit = [&](StateId a, StateId b) {
        auto [it, inserted] = index.emplace(std::make_pair(a, b), 0);
        if (inserted) {
            it->second = out.add_state("(" + g1.state_name(a) + "," + g2.state_name(b) + ")",
                                       g1.is_marked(a) && g2.is_marked(b));
            queue.emplace_back(a, b);
        }
        return it->second;
    };
    out.set_initial(visit(*g1.initial(), *g2.initial()));
    while (!queue.empty()) {
        auto [a, b] = queue.front();
        queue.pop_front();
        StateId from = index.at({a, b});
        for (EventId e = 0; e < alphabet.size(); ++e) {
            StateId na = a;
            StateId nb = b;
            if (m1[e] != detail::kNoEvent) {
                na = g1.next(a, m1[e]);
            }
            if (m2[e] != detail::kNoEvent) {
                nb = g2.next(b, m2[e]);
            }
            if (na == kNoState || nb == kNoState) {
                continue;
            }
            out.add_transition(from, e, visit(na, nb));
        }
    }
    return out;
}

Generator sync_product(std::span<const Generator> gs) {
    if (gs.empty()) {
        throw InputError("synchronous product of an empty list");
    }
    Generator out = gs.front();
    for (std::size_t i = 1; i < gs.size(); ++i) {
        out = sync_product(out, gs[i]);
    }
    return out;
}

namespace {

std::string subset_name(const Generator& g, const std::vector<StateId>& set, StateId id) {
    std::string name = "{";
    for (std::size_t i = 0; i < set.size(); ++i) {
        if (i > 0) {
            name += ',';
        }
        name += g.state_name(set[i]);
        if (name.size() > 48) {
            return "#" + std::to_string(id);
        }
    }
    return name + "}";
}

} // namespace

Generator project(const Generator& g, const ProjectionSpec& p, const Limits& limits) {
    detail::require_same_events(p.source, g.alphabet(), "projection source");
    if (!p.target.is_subset_of(p.source)) {
        throw InputError("projection target " + to_string(p.target) + " is not a subset of " + to_string(p.source));
    }
    // flags always follow the generator
    EventSet target;
    for (const auto& e : p.target) {
        target.add(*g.alphabet().find(e.name));
    }
    Generator out(target, g.name().empty() ? std::string() : "P(" + g.name() + ")");
    detail::SubsetDfa dfa(g, target, limits.determinization_cap, &limits);
    StateId init = dfa.initial();
    if (init == kNoState) {
        return out;
    }
    std::deque<StateId> queue;
    std::vector<StateId> renum;
    auto ensure = [&](StateId sub) {
        if (sub >= renum.size()) {
            renum.resize(sub + 1, kNoState);
        }
        if (renum[sub] == kNoState) {
            renum[sub] = out.add_state(subset_name(g, dfa.members(sub), sub), dfa.marked(sub));
            queue.push_back(sub);
        }
        return renum[sub];
    };
    out.set_initial(ensure(init));
    while (!queue.empty()) {
        StateId sub = queue.front();
        queue.pop_front();
        for (EventId t = 0; t < target.size(); ++t) {
            StateId nxt = dfa.step(sub, t);
            if (nxt != kNoState) {
                StateId to = ensure(nxt);
                out.add_transition(renum[sub], t, to);
            }
        }
    }
    return out;
}

Generator project_onto(const Generator& g, const EventSet& observable, const Limits& limits) {
    return project(g, {g.alphabet(), g.alphabet().intersect(observable)}, limits);
}

Generator inverse_project(const Generator& g, const EventSet& full) {
    if (!g.alphabet().is_subset_of(full)) {
        throw InputError("inverse projection: " + to_string(g.alphabet()) + " is not a subset of " + to_string(full));
    }
    Generator out = with_alphabet(g, full);
    auto fresh = detail::event_map(full, g.alphabet());
    for (StateId s = 0; s < out.num_states(); ++s) {
        for (EventId e = 0; e < full.size(); ++e) {
            if (fresh[e] == detail::kNoEvent) {
                out.add_transition(s, e, s);
            }
        }
    }
    return out;
}

Generator with_alphabet(const Generator& g, const EventSet& alphabet) {
    if (!g.alphabet().is_subset_of(alphabet)) {
        throw InputError("alphabet " + to_string(alphabet) + " does not contain " + to_string(g.alphabet()));
    }
    for (const auto& e : g.alphabet()) {
        if (alphabet.find(e.name)->controllable != e.controllable) {
            throw FlagConflictError(e.name);
        }
    }
    Generator out(alphabet, g.name());
    for (StateId s = 0; s < g.num_states(); ++s) {
        out.add_state(g.state_name(s), g.is_marked(s));
    }
    if (g.initial()) {
        out.set_initial(*g.initial());
    }
    auto map = detail::event_map(g.alphabet(), alphabet);
    for (StateId s = 0; s < g.num_states(); ++s) {
        for (EventId e = 0; e < g.num_events(); ++e) {
            StateId t = g.next(s, e);
            if (t != kNoState) {
                out.add_transition(s, map[e], t);
            }
        }
    }
    return out;
}

namespace {

Generator mark_all(Generator g) {
    for (StateId s = 0; s < g.num_states(); ++s) {
        g.set_marked(s);
    }
    return g;
}

} // namespace

Generator prefix_closure(const Generator& g) {
    return mark_all(trim(g));
}

Generator generated_language(const Generator& g) {
    return mark_all(accessible(g));
}

Generator minimize(const Generator& g) {
    Generator t = trim(g);
    Generator out(t.alphabet(), t.name());
    if (t.is_empty()) {
        return out;
    }
    const std::size_t n = t.num_states();
    const std::size_t m = t.num_events();
    std::vector<std::uint32_t> cls(n);
    for (StateId s = 0; s < n; ++s) {
        cls[s] = t.is_marked(s) ? 1 : 0;
    }
    std::size_t classes = 0;
    for (;;) {
        std::map<std::vector<std::int64_t>, std::uint32_t> sig_index;
        std::vector<std::uint32_t> next_cls(n);
        for (StateId s = 0; s < n; ++s) {
            std::vector<std::int64_t> sig;
            sig.reserve(m + 1);
            sig.push_back(cls[s]);
            for (EventId e = 0; e < m; ++e) {
                StateId d = t.next(s, e);
                sig.push_back(d == kNoState ? -1 : static_cast<std::int64_t>(cls[d]));
            }
            auto [it, inserted] = sig_index.emplace(std::move(sig), static_cast<std::uint32_t>(sig_index.size()));
            next_cls[s] = it->second;
        }
        std::size_t count = sig_index.size();
        cls = std::move(next_cls);
        if (count == classes) {
            break;
        }
        classes = count;
    }
    std::vector<StateId> rep(classes, kNoState);
    for (StateId s = 0; s < n; ++s) {
        if (rep[cls[s]] == kNoState) {
            rep[cls[s]] = s;
        }
    }
    std::vector<StateId> renum(classes, kNoState);
    std::deque<std::uint32_t> queue;
    auto ensure = [&](std::uint32_t c) {
        if (renum[c] == kNoState) {
            renum[c] = out.add_state(std::to_string(out.num_states()), t.is_marked(rep[c]));
            queue.push_back(c);
        }
        return renum[c];
    };
    out.set_initial(ensure(cls[*t.initial()]));
    while (!queue.empty()) {
        std::uint32_t c = queue.front();
        queue.pop_front();
        for (EventId e = 0; e < m; ++e) {
            StateId d = t.next(rep[c], e);
            if (d != kNoState) {
                StateId to = ensure(cls[d]);
                out.add_transition(renum[c], e, to);
            }
        }
    }
    return out;
}

EventSet used_events(const Generator& g) {
    auto reach = detail::reachable(g);
    std::vector<char> used(g.num_events(), 0);
    for (StateId s = 0; s < g.num_states(); ++s) {
        if (!reach[s]) {
            continue;
        }
        for (EventId e = 0; e < g.num_events(); ++e) {
            if (g.next(s, e) != kNoState) {
                used[e] = 1;
            }
        }
    }
    EventSet out;
    for (EventId e = 0; e < g.num_events(); ++e) {
        if (used[e]) {
            out.add(g.alphabet()[e]);
        }
    }
    return out;
}

StateId run(const Generator& g, const Word& w) {
    if (!g.initial()) {
        return kNoState;
    }
    StateId s = *g.initial();
    for (const auto& name : w) {
        auto e = g.alphabet().index_of(name);
        if (!e) {
            return kNoState;
        }
        s = g.next(s, *e);
        if (s == kNoState) {
            return kNoState;
        }
    }
    return s;
}

bool accepts(const Generator& g, const Word& w) {
    StateId s = run(g, w);
    return s != kNoState && g.is_marked(s);
}

bool generates(const Generator& g, const Word& w) {
    return run(g, w) != kNoState;
}

} // namespace coordctl
