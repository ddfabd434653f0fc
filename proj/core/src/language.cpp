#include "coordctl/errors.hpp"
#include "coordctl/fsm.hpp"
#include "detail.hpp"

#include <deque>
#include <map>

namespace coordctl {
namespace {

struct PairSearch {
    Word word;
    bool in_first = false;
};

// BFS over (q1|sink, q2|sink) with events of `alphabet` in order. Stops at
// the first pair where `differs` holds; the word reaching it is shortest and
// lexicographically least.
template <typename Differs>
std::optional<PairSearch> pair_bfs(const Generator& g1, const Generator& g2, const EventSet& alphabet,
                                   bool track_second_only, Differs differs) {
    if (g1.is_empty() && (track_second_only || g2.is_empty())) {
        return std::nullopt;
    }
    auto m1 = detail::event_map(alphabet, g1.alphabet());
    auto m2 = detail::event_map(alphabet, g2.alphabet());
    StateId i1 = g1.initial().value_or(kNoState);
    StateId i2 = g2.initial().value_or(kNoState);
    std::map<std::pair<StateId, StateId>, std::uint32_t> seen;
    detail::Trace trace;
    std::deque<std::pair<StateId, StateId>> queue;
    seen.emplace(std::make_pair(i1, i2), trace.push(detail::kRoot, 0));
    queue.emplace_back(i1, i2);
    while (!queue.empty()) {
        auto [a, b] = queue.front();
        queue.pop_front();
        std::uint32_t node = seen.at({a, b});
        if (auto d = differs(a, b)) {
            return PairSearch{trace.word(node, alphabet), *d};
        }
        for (EventId e = 0; e < alphabet.size(); ++e) {
            StateId na = (a == kNoState || m1[e] == detail::kNoEvent) ? kNoState : g1.next(a, m1[e]);
            StateId nb = (b == kNoState || m2[e] == detail::kNoEvent) ? kNoState : g2.next(b, m2[e]);
            if (na == kNoState && (track_second_only || nb == kNoState)) {
                continue;
            }
            auto [it, inserted] = seen.emplace(std::make_pair(na, nb), 0);
            if (inserted) {
                it->second = trace.push(node, e);
                queue.emplace_back(na, nb);
            }
        }
    }
    return std::nullopt;
}

Generator for_mode(const Generator& g, LanguageMode mode) {
    return mode == LanguageMode::Marked ? trim(g) : generated_language(g);
}

} // namespace

InclusionResult language_inclusion(const Generator& g1, const Generator& g2, LanguageMode mode) {
    Generator a = for_mode(g1, mode);
    Generator b = for_mode(g2, mode);
    auto found = pair_bfs(a, b, a.alphabet(), true, [&](StateId x, StateId y) -> std::optional<bool> {
        if (a.is_marked(x) && (y == kNoState || !b.is_marked(y))) {
            return true;
        }
        return std::nullopt;
    });
    if (!found) {
        return {};
    }
    return {false, found->word};
}

EqualityResult language_equality(const Generator& g1, const Generator& g2, LanguageMode mode) {
    Generator a = for_mode(g1, mode);
    Generator b = for_mode(g2, mode);
    EventSet alphabet = a.alphabet();
    for (const auto& e : b.alphabet()) {
        if (!alphabet.contains(e.name)) {
            alphabet.add(e);
        }
    }
    auto found = pair_bfs(a, b, alphabet, false, [&](StateId x, StateId y) -> std::optional<bool> {
        bool in_a = x != kNoState && a.is_marked(x);
        bool in_b = y != kNoState && b.is_marked(y);
        if (in_a != in_b) {
            return in_a;
        }
        return std::nullopt;
    });
    if (!found) {
        return {};
    }
    return {false, found->word, found->in_first};
}

bool is_nonblocking(const Generator& g) {
    return !blocking_witness(g).has_value();
}

std::optional<Word> blocking_witness(const Generator& g) {
    if (g.is_empty()) {
        return std::nullopt;
    }
    std::vector<char> marked(g.num_states());
    for (StateId s = 0; s < g.num_states(); ++s) {
        marked[s] = g.is_marked(s) ? 1 : 0;
    }
    auto co = detail::coreachable(g, marked);
    std::vector<std::uint32_t> node(g.num_states(), detail::kRoot);
    detail::Trace trace;
    std::deque<StateId> queue{*g.initial()};
    node[*g.initial()] = trace.push(detail::kRoot, 0);
    while (!queue.empty()) {
        StateId s = queue.front();
        queue.pop_front();
        if (!co[s]) {
            return trace.word(node[s], g.alphabet());
        }
        for (EventId e = 0; e < g.num_events(); ++e) {
            StateId t = g.next(s, e);
            if (t != kNoState && node[t] == detail::kRoot) {
                node[t] = trace.push(node[s], e);
                queue.push_back(t);
            }
        }
    }
    return std::nullopt;
}

WordSample enumerate_words(const Generator& g, std::size_t bound, const Limits& limits) {
    if (bound > kMaxEnumerationBound) {
        throw ResourceLimitError("word enumeration bound " + std::to_string(bound) + " exceeds " +
                                     std::to_string(kMaxEnumerationBound),
                                 kMaxEnumerationBound);
    }
    WordSample sample;
    sample.bound = bound;
    if (g.is_empty()) {
        return sample;
    }
    std::vector<std::pair<StateId, Word>> frontier{{*g.initial(), {}}};
    for (std::size_t len = 0;; ++len) {
        std::vector<std::pair<StateId, Word>> next;
        for (auto& [s, w] : frontier) {
            if (g.is_marked(s)) {
                sample.marked.insert(w);
            }
            if (len < bound) {
                for (EventId e = 0; e < g.num_events(); ++e) {
                    StateId t = g.next(s, e);
                    if (t != kNoState) {
                        Word nw = w;
                        nw.push_back(g.alphabet()[e].name);
                        next.emplace_back(t, std::move(nw));
                    }
                }
            }
            sample.generated.insert(std::move(w));
            if (sample.generated.size() > limits.word_sample_cap) {
                throw ResourceLimitError("word sample exceeded " + std::to_string(limits.word_sample_cap) + " words",
                                         limits.word_sample_cap);
            }
        }
        limits.check_cancelled();
        if (next.empty()) {
            break;
        }
        frontier = std::move(next);
    }
    return sample;
}

} // namespace coordctl
