#pragma once

#include "coordctl/fsm.hpp"
#include "coordctl/supervisory.hpp"

#include <optional>
#include <span>

namespace coordctl {

struct NonblockingResult {
    EventSet sigma0;
    /// L_C, trimmed and minimized.
    Generator coordinator;
    bool composed_nonblocking = false;
    std::optional<Word> blocking_witness;
    /// ∥ S_i ∥ L_C controllable with respect to ∥ closure(S_i).
    bool composed_controllable = false;
    std::optional<ControlWitness> control_witness;
};

/// Coordinator for nonblockingness of the supervisors S_i:
/// L_C = supC(∥ P_0(S_i), ∥ closure(P_0(S_i)), Σ_{0,u}), where Σ_0 ⊇ Σk is
/// extended until P_0 is an S_i-observer for every i.
NonblockingResult nonblocking_coordinator(std::span<const Generator> supervisors, const EventSet& coordinator_events,
                                          const EventSet& uncontrollable, const Limits& limits = {});

struct NonblockingTheoremReport {
    /// closure(∥S_i ∥ L_C) = ∥ closure(S_i) ∥ closure(L_C).
    bool nonconflicting = true;
    std::optional<Word> conflict_witness;
    /// ∥S_i ∥ L_C controllable with respect to ∥ L(G_i).
    bool controllable = true;
    std::optional<ControlWitness> control_witness;
};

NonblockingTheoremReport verify_nonblocking_theorem(std::span<const Generator> supervisors,
                                                    const NonblockingResult& result,
                                                    std::span<const Generator> plants, const EventSet& uncontrollable,
                                                    const Limits& limits = {});

} // namespace coordctl
