#include "coordctl/supervisory.hpp"

#include "coordctl/errors.hpp"
#include "detail.hpp"

#include <deque>
#include <map>

namespace coordctl {
namespace {

std::vector<char> uncontrollable_mask(const EventSet& alphabet, const EventSet& uncontrollable) {
    std::vector<char> mask(alphabet.size(), 0);
    for (EventId e = 0; e < alphabet.size(); ++e) {
        mask[e] = uncontrollable.contains(alphabet[e].name) ? 1 : 0;
    }
    return mask;
}

} // namespace

ControllabilityVerdict is_controllable(const Generator& k, const Generator& l, const EventSet& uncontrollable,
                                       const Limits& limits) {
    detail::require_same_events(k.alphabet(), l.alphabet(), "controllability");
    Generator kt = trim(k);
    ControllabilityVerdict verdict;
    if (kt.is_empty()) {
        return verdict;
    }
    const EventSet& alphabet = kt.alphabet();
    auto lmap = detail::event_map(alphabet, l.alphabet());
    auto unc = uncontrollable_mask(alphabet, uncontrollable);
    StateId li = l.initial().value_or(kNoState);

    std::map<std::pair<StateId, StateId>, std::uint32_t> seen;
    detail::Trace trace;
    std::deque<std::pair<StateId, StateId>> queue;
    seen.emplace(std::make_pair(*kt.initial(), li), trace.push(detail::kRoot, 0));
    queue.emplace_back(*kt.initial(), li);
    std::optional<Word> outside;
    std::size_t steps = 0;
    while (!queue.empty()) {
        auto [q, x] = queue.front();
        queue.pop_front();
        std::uint32_t node = seen.at({q, x});
        if ((++steps & 0xfff) == 0) {
            limits.check_cancelled();
        }
        if (x == kNoState) {
            if (!outside) {
                outside = trace.word(node, alphabet);
            }
        } else if (!verdict.witness) {
            for (EventId e = 0; e < alphabet.size(); ++e) {
                if (unc[e] && l.next(x, lmap[e]) != kNoState && kt.next(q, e) == kNoState) {
                    verdict.controllable = false;
                    verdict.witness = ControlWitness{trace.word(node, alphabet), alphabet[e].name};
                    break;
                }
            }
        }
        for (EventId e = 0; e < alphabet.size(); ++e) {
            StateId nq = kt.next(q, e);
            if (nq == kNoState) {
                continue;
            }
            StateId nx = x == kNoState ? kNoState : l.next(x, lmap[e]);
            auto [it, inserted] = seen.emplace(std::make_pair(nq, nx), 0);
            if (inserted) {
                it->second = trace.push(node, e);
                queue.emplace_back(nq, nx);
            }
        }
    }
    if (outside) {
        throw NotSublanguageError("specification generates '" + to_string(*outside) + "', which the plant does not",
                                  *outside);
    }
    return verdict;
}

Generator sup_c(const Generator& k, const Generator& l, const EventSet& uncontrollable, const Limits& limits) {
    detail::require_same_events(k.alphabet(), l.alphabet(), "supremal controllable sublanguage");
    Generator kt = trim(k);
    const EventSet& alphabet = k.alphabet();
    if (kt.is_empty() || l.is_empty()) {
        return Generator::empty(alphabet, k.name());
    }
    const std::size_t m = alphabet.size();
    auto lmap = detail::event_map(alphabet, l.alphabet());
    auto unc = uncontrollable_mask(alphabet, uncontrollable);

    // product of the specification and the plant restricted to common words
    std::vector<std::pair<StateId, StateId>> pairs;
    std::map<std::pair<StateId, StateId>, StateId> index;
    std::vector<StateId> succ;
    auto intern = [&](StateId q, StateId x) {
        auto [it, inserted] = index.emplace(std::make_pair(q, x), static_cast<StateId>(pairs.size()));
        if (inserted) {
            pairs.emplace_back(q, x);
            succ.resize(succ.size() + m, kNoState);
        }
        return it->second;
    };
    intern(*kt.initial(), *l.initial());
    for (StateId p = 0; p < pairs.size(); ++p) {
        auto [q, x] = pairs[p];
        for (EventId e = 0; e < m; ++e) {
            StateId nq = kt.next(q, e);
            StateId nx = l.next(x, lmap[e]);
            if (nq != kNoState && nx != kNoState) {
                StateId id = intern(nq, nx);
                succ[static_cast<std::size_t>(p) * m + e] = id;
            }
        }
    }
    const std::size_t n = pairs.size();
    std::vector<std::vector<StateId>> preds(n);
    for (StateId p = 0; p < n; ++p) {
        for (EventId e = 0; e < m; ++e) {
            StateId t = succ[static_cast<std::size_t>(p) * m + e];
            if (t != kNoState) {
                preds[t].push_back(p);
            }
        }
    }

    std::vector<char> alive(n, 1);
    for (bool changed = true; changed;) {
        limits.check_cancelled();
        changed = false;
        for (StateId p = 0; p < n; ++p) {
            if (!alive[p]) {
                continue;
            }
            auto [q, x] = pairs[p];
            for (EventId e = 0; e < m; ++e) {
                if (!unc[e] || l.next(x, lmap[e]) == kNoState) {
                    continue;
                }
                StateId t = succ[static_cast<std::size_t>(p) * m + e];
                if (t == kNoState || !alive[t]) {
                    alive[p] = 0;
                    changed = true;
                    break;
                }
            }
        }
        // coaccessible part
        std::vector<char> co(n, 0);
        std::vector<StateId> stack;
        for (StateId p = 0; p < n; ++p) {
            if (alive[p] && kt.is_marked(pairs[p].first)) {
                co[p] = 1;
                stack.push_back(p);
            }
        }
        while (!stack.empty()) {
            StateId p = stack.back();
            stack.pop_back();
            for (StateId r : preds[p]) {
                if (alive[r] && !co[r]) {
                    co[r] = 1;
                    stack.push_back(r);
                }
            }
        }
        // accessible part
        std::vector<char> acc(n, 0);
        if (alive[0] && co[0]) {
            acc[0] = 1;
            stack.push_back(0);
        }
        while (!stack.empty()) {
            StateId p = stack.back();
            stack.pop_back();
            for (EventId e = 0; e < m; ++e) {
                StateId t = succ[static_cast<std::size_t>(p) * m + e];
                if (t != kNoState && alive[t] && co[t] && !acc[t]) {
                    acc[t] = 1;
                    stack.push_back(t);
                }
            }
        }
        for (StateId p = 0; p < n; ++p) {
            if (alive[p] && !acc[p]) {
                alive[p] = 0;
                changed = true;
            }
        }
        if (!alive[0]) {
            break;
        }
    }

    Generator out(alphabet, k.name());
    if (!alive[0]) {
        return out;
    }
    std::vector<StateId> renum(n, kNoState);
    for (StateId p = 0; p < n; ++p) {
        if (alive[p]) {
            auto [q, x] = pairs[p];
            renum[p] = out.add_state("(" + kt.state_name(q) + "," + l.state_name(x) + ")", kt.is_marked(q));
        }
    }
    out.set_initial(renum[0]);
    for (StateId p = 0; p < n; ++p) {
        if (!alive[p]) {
            continue;
        }
        for (EventId e = 0; e < m; ++e) {
            StateId t = succ[static_cast<std::size_t>(p) * m + e];
            if (t != kNoState && alive[t]) {
                out.add_transition(renum[p], e, renum[t]);
            }
        }
    }
    if (!is_controllable(out, l, uncontrollable, limits).controllable) {
        throw Error("internal error: supremal controllable sublanguage failed its controllability check");
    }
    return out;
}

ClosednessVerdict is_lm_closed(const Generator& k, const Generator& g) {
    Generator kt = trim(k);
    ClosednessVerdict verdict;
    if (kt.is_empty()) {
        return verdict;
    }
    const EventSet& alphabet = kt.alphabet();
    auto gmap = detail::event_map(alphabet, g.alphabet());
    StateId gi = g.initial().value_or(kNoState);
    std::map<std::pair<StateId, StateId>, std::uint32_t> seen;
    detail::Trace trace;
    std::deque<std::pair<StateId, StateId>> queue;
    seen.emplace(std::make_pair(*kt.initial(), gi), trace.push(detail::kRoot, 0));
    queue.emplace_back(*kt.initial(), gi);
    while (!queue.empty()) {
        auto [q, x] = queue.front();
        queue.pop_front();
        std::uint32_t node = seen.at({q, x});
        bool in_k = kt.is_marked(q);
        bool in_rhs = x != kNoState && g.is_marked(x);
        if (in_k != in_rhs) {
            verdict.closed = false;
            verdict.witness = trace.word(node, alphabet);
            verdict.witness_in_k = in_k;
            return verdict;
        }
        for (EventId e = 0; e < alphabet.size(); ++e) {
            StateId nq = kt.next(q, e);
            if (nq == kNoState) {
                continue;
            }
            StateId nx = (x == kNoState || gmap[e] == detail::kNoEvent) ? kNoState : g.next(x, gmap[e]);
            auto [it, inserted] = seen.emplace(std::make_pair(nq, nx), 0);
            if (inserted) {
                it->second = trace.push(node, e);
                queue.emplace_back(nq, nx);
            }
        }
    }
    return verdict;
}

Generator closed_loop(const Generator& s, const Generator& g) {
    return sync_product(generated_language(s), g);
}

} // namespace coordctl
