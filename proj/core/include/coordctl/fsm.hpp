#pragma once

#include "coordctl/event_set.hpp"
#include "coordctl/generator.hpp"
#include "coordctl/limits.hpp"

#include <optional>
#include <set>
#include <span>

namespace coordctl {

/// Natural projection from `source`* onto `target`*.
struct ProjectionSpec {
    EventSet source;
    EventSet target;
};

/// Selects the generated language L(G) or the marked language Lm(G).
enum class LanguageMode { Marked, Closed };

// Reachability

Generator accessible(const Generator& g);
Generator coaccessible(const Generator& g);
/// accessible(coaccessible(g)); Lm is preserved and the result is nonblocking
/// or EMPTY.
Generator trim(const Generator& g);

// Composition and projection

/// Synchronous product: shared events synchronize, private events interleave.
/// Only reachable state pairs are constructed.
Generator sync_product(const Generator& g1, const Generator& g2);
Generator sync_product(std::span<const Generator> gs);

/// Erase-then-determinize projection. The result's alphabet is `p.target`.
/// Throws InputError unless p.source equals the generator alphabet and
/// p.target is a subset of it; throws ResourceLimitError past the cap.
Generator project(const Generator& g, const ProjectionSpec& p, const Limits& limits = {});
/// Projection onto `g.alphabet() ∩ observable`.
Generator project_onto(const Generator& g, const EventSet& observable, const Limits& limits = {});

/// Adds self-loops for every event of `full` missing from g's alphabet.
Generator inverse_project(const Generator& g, const EventSet& full);

/// Same languages viewed over a larger, possibly reordered alphabet. New
/// events get no transitions.
Generator with_alphabet(const Generator& g, const EventSet& alphabet);

/// trim, then mark every state: Lm(result) = closure(Lm(g)).
Generator prefix_closure(const Generator& g);

/// Accessible part with every state marked: Lm(result) = L(g).
Generator generated_language(const Generator& g);

/// Minimal trim DFA for Lm(g) with states numbered in BFS order.
Generator minimize(const Generator& g);

// Language comparison

struct InclusionResult {
    bool holds = true;
    /// Shortest, then lexicographically smallest word of the left language
    /// missing from the right one.
    std::optional<Word> counterexample;
};

/// Decides Lm(g1) ⊆ Lm(g2) (or L(g1) ⊆ L(g2) in Closed mode).
InclusionResult language_inclusion(const Generator& g1, const Generator& g2,
                                   LanguageMode mode = LanguageMode::Marked);

struct EqualityResult {
    bool equal = true;
    std::optional<Word> counterexample;
    /// True when the counterexample belongs to the first language.
    bool counterexample_in_first = false;
};

EqualityResult language_equality(const Generator& g1, const Generator& g2,
                                 LanguageMode mode = LanguageMode::Marked);

/// Every accessible state is co-reachable. EMPTY is nonblocking.
bool is_nonblocking(const Generator& g);
/// Shortest word leading to an accessible state that cannot reach a marked one.
std::optional<Word> blocking_witness(const Generator& g);

/// Events that label at least one accessible transition (Σr(G)).
EventSet used_events(const Generator& g);

// Bounded enumeration oracle

struct WordSample {
    std::set<Word> generated;
    std::set<Word> marked;
    std::size_t bound = 0;
};

/// All words of length <= bound in L(g) and Lm(g). Throws ResourceLimitError
/// when bound > 20 or the sample outgrows limits.word_sample_cap.
WordSample enumerate_words(const Generator& g, std::size_t bound, const Limits& limits = {});

/// Replays `w` from the initial state; kNoState if it leaves L(g).
StateId run(const Generator& g, const Word& w);
bool accepts(const Generator& g, const Word& w);
bool generates(const Generator& g, const Word& w);

} // namespace coordctl
