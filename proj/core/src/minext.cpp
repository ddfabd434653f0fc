#include "coordctl/minext.hpp"

#include "coordctl/coordination.hpp"
#include "coordctl/errors.hpp"

#include <algorithm>
#include <set>

namespace coordctl {

ReducedInstance setcover_to_cd(const SetCoverInstance& instance) {
    const auto& ground = instance.ground;
    if (ground.empty()) {
        throw InputError("set cover instance has an empty ground set");
    }
    std::set<std::string> names;
    auto claim = [&](const std::string& n) {
        if (!names.insert(n).second) {
            throw InputError("set cover instance reuses the name '" + n + "'");
        }
    };
    claim("a");
    for (std::size_t i = 0; i < ground.size(); ++i) {
        claim("a" + std::to_string(i + 1));
    }
    for (const auto& b : ground) {
        claim(b);
    }
    for (const auto& [c, members] : instance.collection) {
        claim(c);
        for (const auto& b : members) {
            if (std::find(ground.begin(), ground.end(), b) == ground.end()) {
                throw InputError("set '" + c + "' contains '" + b + "', which is not in the ground set");
            }
        }
    }

    EventSet sigma_s;
    for (std::size_t i = 0; i < ground.size(); ++i) {
        sigma_s.add({"a" + std::to_string(i + 1)});
    }
    sigma_s.add({"a"});
    EventSet elements;
    for (const auto& b : ground) {
        elements.add({b});
    }
    EventSet sets;
    for (const auto& entry : instance.collection) {
        sets.add({entry.first});
    }

    ReducedInstance out;
    out.alphabets = {elements.unite(sigma_s), sets.unite(sigma_s)};
    Generator k(sigma_s.unite(elements).unite(sets), "K");
    StateId q0 = k.add_state("q0");
    k.set_initial(q0);
    std::size_t s_count = 0;
    for (std::size_t i = 0; i < ground.size(); ++i) {
        std::string idx = std::to_string(i + 1);
        std::vector<std::string> covering;
        for (const auto& [c, members] : instance.collection) {
            if (std::find(members.begin(), members.end(), ground[i]) != members.end()) {
                covering.push_back(c);
            }
        }
        if (covering.empty()) {
            throw InputError("element '" + ground[i] + "' is covered by no set");
        }
        StateId q = k.add_state("q" + idx);
        StateId p = k.add_state("p" + idx);
        StateId f = k.add_state("f" + idx, true);
        k.add_transition(q0, "a" + idx, q);
        k.add_transition(q, "a", p);
        k.add_transition(p, ground[i], f);
        StateId cur = q;
        for (const auto& c : covering) {
            StateId s = k.add_state("s" + std::to_string(++s_count));
            k.add_transition(cur, c, s);
            cur = s;
        }
        k.add_transition(cur, "a", f);
    }
    out.spec = std::move(k);
    return out;
}

namespace {

EventSet base_alphabet(std::span<const EventSet> alphabets) {
    return shared_events(alphabets);
}

} // namespace

ExtensionResult exact_min_extension(const Generator& k, std::span<const EventSet> alphabets, const Limits& limits,
                                    std::size_t pool_limit) {
    EventSet sigma_s = base_alphabet(alphabets);
    EventSet pool = unite_all(alphabets).minus(sigma_s);
    if (pool.size() > pool_limit) {
        throw ResourceLimitError("candidate pool of " + std::to_string(pool.size()) + " events exceeds the limit of " +
                                     std::to_string(pool_limit) + "; use the greedy search",
                                 pool_limit);
    }
    ExtensionResult result;
    const std::size_t n = pool.size();
    for (std::size_t size = 0; size <= n; ++size) {
        std::vector<std::size_t> pick(size);
        for (std::size_t i = 0; i < size; ++i) {
            pick[i] = i;
        }
        for (;;) {
            limits.check_cancelled();
            EventSet sigma_k = sigma_s;
            EventSet extension;
            for (std::size_t i : pick) {
                sigma_k.add(pool[static_cast<EventId>(i)]);
                extension.add(pool[static_cast<EventId>(i)]);
            }
            ++result.nodes_explored;
            if (is_conditionally_decomposable(k, alphabets, sigma_k, LanguageMode::Marked, limits).holds) {
                result.extension = std::move(extension);
                result.cardinality = size;
                result.certified_minimal = true;
                return result;
            }
            // next combination in lexicographic order
            std::size_t i = size;
            while (i > 0 && pick[i - 1] == n - size + i - 1) {
                --i;
            }
            if (i == 0) {
                break;
            }
            ++pick[i - 1];
            for (std::size_t j = i; j < size; ++j) {
                pick[j] = pick[j - 1] + 1;
            }
        }
    }
    throw Error("internal error: no extension made the language decomposable");
}

ExtensionResult greedy_min_extension(const Generator& k, std::span<const EventSet> alphabets, const Limits& limits) {
    EventSet sigma_s = base_alphabet(alphabets);
    EventSet sigma_k = extend_for_cd(k, alphabets, sigma_s, false, limits);
    ExtensionResult result;
    result.extension = sigma_k.minus(sigma_s);
    result.cardinality = result.extension.size();
    result.certified_minimal = false;
    return result;
}

} // namespace coordctl
