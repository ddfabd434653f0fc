#pragma once

#include "coordctl/fsm.hpp"

#include <span>
#include <string>
#include <utility>
#include <vector>

namespace coordctl {

struct SetCoverInstance {
    std::vector<std::string> ground;
    /// Named subsets of the ground set, in order.
    std::vector<std::pair<std::string, std::vector<std::string>>> collection;
    std::size_t budget = 0;
};

struct ReducedInstance {
    Generator spec;
    std::vector<EventSet> alphabets;
};

/// Builds the finite language K and the two alphabets whose minimal
/// decomposability extension encodes a minimum cover. Throws InputError when
/// some element is covered by no set.
ReducedInstance setcover_to_cd(const SetCoverInstance& instance);

struct ExtensionResult {
    EventSet extension;
    std::size_t cardinality = 0;
    bool certified_minimal = false;
    /// Number of decomposability checks performed.
    std::size_t nodes_explored = 0;
};

inline constexpr std::size_t kDefaultPoolLimit = 20;

/// Smallest Σr ⊆ (∪Σi) \ Σs such that Lm(k) is decomposable with respect to
/// Σs ∪ Σr; ties go to the lexicographically first combination. Throws
/// ResourceLimitError when the candidate pool exceeds `pool_limit`.
ExtensionResult exact_min_extension(const Generator& k, std::span<const EventSet> alphabets,
                                    const Limits& limits = {}, std::size_t pool_limit = kDefaultPoolLimit);

/// extend_for_cd started from Σs.
ExtensionResult greedy_min_extension(const Generator& k, std::span<const EventSet> alphabets,
                                     const Limits& limits = {});

} // namespace coordctl
