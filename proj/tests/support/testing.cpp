#include "testing.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#ifndef COORDCTL_FIXTURE_DIR
#error "COORDCTL_FIXTURE_DIR must be defined"
#endif

namespace coordctl::testing {

std::string fixture_path(const std::string& name) {
    return std::string(COORDCTL_FIXTURE_DIR) + "/" + name;
}

Generator fixture(const std::string& name) {
    return read_generator(fixture_path(name));
}

Word w(const std::string& text) {
    Word out;
    std::istringstream is(text);
    std::string tok;
    while (is >> tok) {
        out.push_back(tok);
    }
    return out;
}

EventSet events(std::initializer_list<std::string> names, std::initializer_list<std::string> uncontrollable) {
    std::vector<std::string> n(names);
    std::vector<std::string> u(uncontrollable);
    return EventSet::from_names(n, u);
}

Generator finite_language(const EventSet& alphabet, const std::vector<Word>& words, const std::string& name) {
    Generator g(alphabet, name);
    std::map<Word, StateId> node;
    node[{}] = g.add_state("e");
    g.set_initial(node[{}]);
    for (const auto& word : words) {
        Word prefix;
        StateId cur = node[{}];
        for (const auto& e : word) {
            prefix.push_back(e);
            auto it = node.find(prefix);
            if (it == node.end()) {
                StateId s = g.add_state(to_string(prefix));
                g.add_transition(cur, e, s);
                it = node.emplace(prefix, s).first;
            }
            cur = it->second;
        }
        g.set_marked(cur);
    }
    return g;
}

Generator closed_language(const EventSet& alphabet, const std::vector<Word>& words, const std::string& name) {
    return prefix_closure(finite_language(alphabet, words, name));
}

std::set<Word> marked_words(const Generator& g, std::size_t bound) {
    return enumerate_words(g, bound).marked;
}

std::set<Word> generated_words(const Generator& g, std::size_t bound) {
    return enumerate_words(g, bound).generated;
}

Generator random_generator(Rng& rng, const EventSet& alphabet, std::size_t max_states, double density,
                           double mark_probability, const std::string& name) {
    std::uniform_int_distribution<std::size_t> count(1, max_states);
    std::bernoulli_distribution edge(density);
    std::bernoulli_distribution mark(mark_probability);
    std::size_t n = count(rng);
    std::uniform_int_distribution<StateId> target(0, static_cast<StateId>(n - 1));
    Generator g(alphabet, name);
    for (std::size_t i = 0; i < n; ++i) {
        g.add_state(std::to_string(i), mark(rng));
    }
    g.set_initial(0);
    for (StateId s = 0; s < n; ++s) {
        for (EventId e = 0; e < alphabet.size(); ++e) {
            if (edge(rng)) {
                g.add_transition(s, e, target(rng));
            }
        }
    }
    return g;
}

Generator random_sub_automaton(Rng& rng, const Generator& g, double keep, double mark_probability) {
    std::bernoulli_distribution keep_edge(keep);
    std::bernoulli_distribution mark(mark_probability);
    Generator out(g.alphabet(), g.name() + "'");
    for (StateId s = 0; s < g.num_states(); ++s) {
        out.add_state(g.state_name(s), g.is_marked(s) && mark(rng));
    }
    if (g.initial()) {
        out.set_initial(*g.initial());
    }
    for (StateId s = 0; s < g.num_states(); ++s) {
        for (EventId e = 0; e < g.num_events(); ++e) {
            StateId t = g.next(s, e);
            if (t != kNoState && keep_edge(rng)) {
                out.add_transition(s, e, t);
            }
        }
    }
    return out;
}

EventSet random_subset(Rng& rng, const EventSet& pool, double p) {
    std::bernoulli_distribution pick(p);
    EventSet out;
    for (const auto& e : pool) {
        if (pick(rng)) {
            out.add(e);
        }
    }
    return out;
}

namespace oracle {

Word project(const Word& word, const EventSet& target) {
    Word out;
    for (const auto& e : word) {
        if (target.contains(e)) {
            out.push_back(e);
        }
    }
    return out;
}

std::set<Word> project(const std::set<Word>& words, const EventSet& target) {
    std::set<Word> out;
    for (const auto& word : words) {
        out.insert(project(word, target));
    }
    return out;
}

std::set<Word> prefixes(const std::set<Word>& words) {
    std::set<Word> out;
    for (const auto& word : words) {
        for (std::size_t i = 0; i <= word.size(); ++i) {
            out.insert(Word(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(i)));
        }
    }
    return out;
}

std::set<Word> sup_c(const std::set<Word>& k, const Generator& plant, const EventSet& uncontrollable) {
    std::vector<Word> candidates;
    for (const auto& word : k) {
        if (generates(plant, word)) {
            candidates.push_back(word);
        }
    }
    std::set<Word> best;
    const std::size_t n = candidates.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        std::set<Word> m;
        for (std::size_t i = 0; i < n; ++i) {
            if (mask & (std::size_t{1} << i)) {
                m.insert(candidates[i]);
            }
        }
        auto closure = prefixes(m);
        bool controllable = true;
        for (const auto& s : closure) {
            for (const auto& u : uncontrollable) {
                Word su = s;
                su.push_back(u.name);
                if (generates(plant, su) && !closure.count(su)) {
                    controllable = false;
                    break;
                }
            }
            if (!controllable) {
                break;
            }
        }
        if (controllable) {
            best.insert(m.begin(), m.end());
        }
    }
    return best;
}

std::size_t min_set_cover(const SetCoverInstance& instance) {
    const std::size_t n = instance.collection.size();
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        std::set<std::string> covered;
        std::size_t size = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (mask & (std::size_t{1} << i)) {
                ++size;
                covered.insert(instance.collection[i].second.begin(), instance.collection[i].second.end());
            }
        }
        bool all = std::all_of(instance.ground.begin(), instance.ground.end(),
                               [&](const std::string& b) { return covered.count(b) > 0; });
        if (all) {
            best = std::min(best, size);
        }
    }
    return best;
}

} // namespace oracle

} // namespace coordctl::testing
