#pragma once

#include "coordctl/fsm.hpp"

#include <optional>
#include <string>

namespace coordctl {

/// A word s in closure(K) and an uncontrollable event u with su in L but
/// su outside closure(K).
struct ControlWitness {
    Word prefix;
    std::string event;
};

struct ControllabilityVerdict {
    bool controllable = true;
    std::optional<ControlWitness> witness;
};

/// Decides closure(Lm(k)) Σu ∩ L(l) ⊆ closure(Lm(k)).
///
/// The alphabets of k and l must contain the same events. Throws
/// NotSublanguageError when closure(Lm(k)) is not contained in L(l).
ControllabilityVerdict is_controllable(const Generator& k, const Generator& l, const EventSet& uncontrollable,
                                       const Limits& limits = {});

/// Supremal controllable sublanguage of Lm(k) ∩ L(l) with respect to L(l).
///
/// Words of k outside L(l) are dropped rather than rejected, so the
/// supervisor equations can feed specifications that overshoot a restricted
/// plant. The result is trim (or EMPTY), keeps k's marking and alphabet
/// order, and is verified controllable before it is returned.
Generator sup_c(const Generator& k, const Generator& l, const EventSet& uncontrollable, const Limits& limits = {});

struct ClosednessVerdict {
    bool closed = true;
    /// Shortest word of Lm(k) Δ (closure(Lm(k)) ∩ Lm(g)).
    std::optional<Word> witness;
    /// True when the witness lies in Lm(k) (and so outside Lm(g)).
    bool witness_in_k = false;
};

/// Decides Lm(k) = closure(Lm(k)) ∩ Lm(g).
ClosednessVerdict is_lm_closed(const Generator& k, const Generator& g);

/// Closed-loop behaviour of supervisor s on plant g: L = L(s) ∥ L(g) and
/// Lm = L ∩ Lm(g). The supervisor's own marking is ignored.
Generator closed_loop(const Generator& s, const Generator& g);

} // namespace coordctl
