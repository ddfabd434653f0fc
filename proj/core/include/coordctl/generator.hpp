#pragma once

#include "coordctl/event_set.hpp"

#include <array>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace coordctl {

using StateId = std::uint32_t;
inline constexpr StateId kNoState = std::numeric_limits<StateId>::max();

/// A word over event names.
using Word = std::vector<std::string>;

/// Space-separated rendering; the empty word renders as "".
std::string to_string(const Word& w);

/// Raw, unchecked generator contents as read from a file. `validate` reports
/// everything that would prevent it from becoming a Generator.
struct GeneratorData {
    std::string name;
    std::vector<Event> events;
    std::vector<std::string> states;
    std::optional<std::string> initial;
    std::vector<std::string> marked;
    std::vector<std::array<std::string, 3>> transitions;
};

/// Deterministic generator G = (Q, E, f, q0, Qm) with a partial transition
/// function. A generator without an initial state is the canonical EMPTY
/// generator: L(G) = Lm(G) = {}.
class Generator {
  public:
    Generator() = default;
    explicit Generator(EventSet alphabet, std::string name = {});

    /// The EMPTY generator over `alphabet`.
    static Generator empty(EventSet alphabet, std::string name = {});
    /// Throws InputError listing every violation reported by validate().
    static Generator from_data(const GeneratorData& data);
    GeneratorData to_data() const;

    const std::string& name() const noexcept { return name_; }
    void set_name(std::string name) { name_ = std::move(name); }
    const EventSet& alphabet() const noexcept { return alphabet_; }

    std::size_t num_states() const noexcept { return state_names_.size(); }
    std::size_t num_events() const noexcept { return alphabet_.size(); }
    std::size_t num_transitions() const;
    bool is_empty() const noexcept { return !initial_.has_value(); }
    std::optional<StateId> initial() const noexcept { return initial_; }
    bool is_marked(StateId s) const { return marked_[s] != 0; }
    const std::string& state_name(StateId s) const { return state_names_[s]; }
    std::optional<StateId> find_state(const std::string& name) const;

    /// Successor of `s` under event `e`, or kNoState.
    StateId next(StateId s, EventId e) const { return delta_[static_cast<std::size_t>(s) * alphabet_.size() + e]; }

    StateId add_state(std::string name, bool marked = false);
    void set_initial(StateId s);
    void set_marked(StateId s, bool marked = true);
    /// Throws InputError if a different successor is already defined.
    void add_transition(StateId from, EventId event, StateId to);
    void add_transition(StateId from, std::string_view event, StateId to);

  private:
    std::string name_;
    EventSet alphabet_;
    std::vector<std::string> state_names_;
    std::unordered_map<std::string, StateId> state_index_;
    std::vector<char> marked_;
    std::vector<StateId> delta_;
    std::optional<StateId> initial_;
};

/// Every violation of the generator invariants; empty iff well-formed.
std::vector<std::string> validate(const GeneratorData& data);
/// Structural self-check of an already built generator.
std::vector<std::string> validate(const Generator& g);

} // namespace coordctl
