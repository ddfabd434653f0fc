#pragma once

#include "coordctl/fsm.hpp"
#include "coordctl/supervisory.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace coordctl {

struct IndependenceResult {
    bool holds = true;
    /// Events used by two plants but by no coordinator transition.
    EventSet offending;
};

/// Σr(G_i) ∩ Σr(G_j) ⊆ Σr(G_k) for every pair i != j.
IndependenceResult conditionally_independent(std::span<const Generator> plants, const Generator& gk);

struct DecomposabilityResult {
    bool holds = true;
    std::optional<Word> counterexample;
    /// True when the counterexample is in the composition but not in K.
    bool counterexample_in_composition = true;
};

/// Decides K = ∥_i P_{i+k}(K), where K = Lm(k) (Marked) or closure(Lm(k))
/// (Closed). Throws InputError unless Σs ⊆ Σk ⊆ ∪Σi.
DecomposabilityResult is_conditionally_decomposable(const Generator& k, std::span<const EventSet> alphabets,
                                                    const EventSet& coordinator_events,
                                                    LanguageMode mode = LanguageMode::Marked,
                                                    const Limits& limits = {});

/// Greedy extension of Σk until K (and closure(K) when `with_closure`) is
/// conditionally decomposable.
EventSet extend_for_cd(const Generator& k, std::span<const EventSet> alphabets, const EventSet& coordinator_events,
                       bool with_closure = false, const Limits& limits = {});

/// G_k = ∥_i P_k(G_i) over exactly Σk.
Generator build_coordinator(std::span<const Generator> plants, const EventSet& coordinator_events,
                            const Limits& limits = {});

struct ConditionalControllability {
    bool holds = true;
    /// P_k(K) against L(G_k).
    ControllabilityVerdict coordinator;
    /// P_{i+k}(K) against L(G_i) ∥ closure(P_k(K)), one per plant.
    std::vector<ControllabilityVerdict> local;
};

/// Throws NotSublanguageError unless closure(K) ⊆ L(∥G_i ∥ G_k).
ConditionalControllability is_conditionally_controllable(const Generator& k, std::span<const Generator> plants,
                                                         const Generator& gk, const EventSet& uncontrollable,
                                                         const Limits& limits = {});

struct ConditionalClosedness {
    bool holds = true;
    ClosednessVerdict coordinator;
    std::vector<ClosednessVerdict> local;
};

ConditionalClosedness is_conditionally_closed(const Generator& k, std::span<const Generator> plants,
                                              const Generator& gk, const Limits& limits = {});

struct CoordinationOptions {
    std::size_t determinization_cap = kDefaultDeterminizationCap;
    std::size_t refine_limit = 16;
    bool require_closure_cd = true;
};

struct CoordinationProblem {
    std::vector<Generator> plants;
    Generator spec;
    EventSet coordinator_events;
    /// Replaces the coordinator built from the plants when present.
    std::optional<Generator> coordinator;
    CoordinationOptions options;
};

/// Supervisors of one refinement pass.
struct RefinementStep {
    Generator sup_ck;
    std::vector<Generator> sup_cik;
    std::vector<bool> coordinator_inclusion;
};

struct SynthesisReport {
    std::vector<EventSet> alphabets;
    EventSet uncontrollable;
    /// Final coordinator alphabet after adding shared events and extending
    /// for decomposability.
    EventSet coordinator_events;
    std::vector<std::string> added_events;
    /// Specification restricted to the plants' marked behaviour.
    Generator spec;
    Generator coordinator;

    DecomposabilityResult cd;
    std::optional<DecomposabilityResult> cd_of_closure;
    IndependenceResult independence;

    Generator sup_ck;
    std::vector<Generator> sup_cik;
    /// P_k(supC_{i+k}) ⊆ supC_k, one per plant.
    std::vector<InclusionResult> projected_local_inclusion;
    /// supC_k ⊆ P_k(supC_{i+k}), one per plant, for the first-pass supervisors.
    std::vector<InclusionResult> coordinator_inclusion;

    std::vector<RefinementStep> refinement;
    bool refinement_converged = false;

    std::optional<ConditionalControllability> cond_controllable;
    std::optional<ConditionalClosedness> cond_closed;

    /// Product of the final local supervisors (refined ones when present).
    std::optional<Generator> composed;
    bool composed_cond_controllable = false;
    bool composed_nonblocking = false;
    /// Lm(composed) = K, checked when K is conditionally controllable and
    /// conditionally closed.
    std::optional<EqualityResult> composed_equals_spec;

    std::vector<std::string> notes;

    bool coordinator_inclusion_holds() const;
    const Generator& final_sup_ck() const;
    const std::vector<Generator>& final_sup_cik() const;
};

/// Validates the problem, extends Σk, builds the coordinator and computes
/// the first-pass supervisors with both inclusion checks between supC_k and P_k(supC_{i+k}).
SynthesisReport synthesize_star(const CoordinationProblem& problem, const Limits& limits = {});

/// supC_k ⊆ P_k(supC_{i+k}) for each i.
std::vector<InclusionResult> check_thm2_inclusion(const Generator& sup_ck, std::span<const Generator> sup_cik,
                                                  const EventSet& coordinator_events, const Limits& limits = {});

/// Applies refinement passes until the inclusion holds or `iteration_limit` passes
/// have run. Non-convergence is reported through refinement_converged.
SynthesisReport refine_doublestar(const CoordinationProblem& problem, SynthesisReport report,
                                  std::size_t iteration_limit, const Limits& limits = {});

/// synthesize_star, conditional controllability and closedness of K,
/// refinement when needed, and checks on the composed supervisors.
SynthesisReport solve(const CoordinationProblem& problem, const Limits& limits = {});

} // namespace coordctl
