#pragma once

#include "coordctl/fsm.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace coordctl {

/// Projection from g's alphabet onto g.alphabet() ∩ target.
ProjectionSpec projection_of(const Generator& g, const EventSet& target);

struct ObserverVerdict {
    bool holds = true;
    /// s in closure(L) and t in P(L) with P(s) a prefix of t, such that no
    /// continuation u gives su in L and P(su) = t.
    std::optional<Word> s;
    std::optional<Word> t;
};

/// Observer property of p for Lm(g) (Marked) or L(g) (Closed).
ObserverVerdict is_observer(const Generator& g, const ProjectionSpec& p, LanguageMode mode = LanguageMode::Marked,
                            const Limits& limits = {});

/// Grows p.target until the projection is an observer. Each round adds the
/// first hidden event of the witness word s; the result is listed in source
/// order and is not guaranteed to be minimal.
EventSet extend_to_observer(const Generator& g, const ProjectionSpec& p, LanguageMode mode = LanguageMode::Marked,
                            const Limits& limits = {});

struct LccWitness {
    Word s;
    std::string event;
    /// Hidden word u with s u event in L; every such u contains a
    /// controllable event.
    Word bypass;
};

struct LccVerdict {
    bool holds = true;
    std::optional<LccWitness> witness;
};

/// Local control consistency of p for the prefix-closed language L(g).
LccVerdict is_lcc(const Generator& g, const ProjectionSpec& p, const EventSet& uncontrollable,
                  const Limits& limits = {});

struct HypothesisCheck {
    std::string name;
    bool holds = true;
    std::string detail;
};

struct ProjectionSuiteReport {
    /// One entry per checked hypothesis, in a fixed order.
    std::vector<HypothesisCheck> checks;
    /// Observer and LCC of P^{i+k}_k on the lifted plants.
    bool lifted_observer = true;
    bool lifted_lcc = true;
    /// Observer and LCC of P_k and P_{i+k} on L = L(∥ G_i).
    bool global_observer = true;
    bool global_lcc = true;
    /// L(G_k) ⊆ P_k(L) for the coordinator built from the plants.
    bool coordinator_within_projection = true;
    bool all_hold() const;
};

/// Evaluates the projection hypotheses used by the optimality results for
/// prefix-closed specifications. The whole plant is composed to do so.
ProjectionSuiteReport verify_projection_suite(std::span<const Generator> plants, const EventSet& coordinator_events,
                                              const EventSet& uncontrollable, const Limits& limits = {});

} // namespace coordctl
