#pragma once

#include "coordctl/errors.hpp"
#include "coordctl/generator.hpp"
#include "coordctl/limits.hpp"

#include <deque>
#include <map>
#include <string>
#include <vector>

namespace coordctl::detail {

inline constexpr EventId kNoEvent = std::numeric_limits<EventId>::max();

/// For each event of `from`, its index in `to` or kNoEvent.
std::vector<EventId> event_map(const EventSet& from, const EventSet& to);

/// Requires `a` and `b` to hold the same event names; otherwise throws
/// InputError mentioning `what`.
void require_same_events(const EventSet& a, const EventSet& b, const std::string& what);

/// BFS predecessor record used to rebuild shortest words.
struct Trace {
    std::vector<std::uint32_t> parent;
    std::vector<EventId> via;

    std::uint32_t push(std::uint32_t from, EventId event) {
        parent.push_back(from);
        via.push_back(event);
        return static_cast<std::uint32_t>(parent.size() - 1);
    }
    Word word(std::uint32_t node, const EventSet& alphabet) const;
};

inline constexpr std::uint32_t kRoot = std::numeric_limits<std::uint32_t>::max();

/// Keeps the states flagged in `keep`, preserving order. An unkept initial
/// state yields the EMPTY generator.
Generator restrict_states(const Generator& g, const std::vector<char>& keep);

/// Forward reachability from the initial state.
std::vector<char> reachable(const Generator& g);
/// States from which a state flagged in `targets` is reachable.
std::vector<char> coreachable(const Generator& g, const std::vector<char>& targets);

/// Lazily built subset automaton of g after erasing every event outside
/// `target` (which must be a subset of g's alphabet).
class SubsetDfa {
  public:
    static constexpr StateId kUnknown = kNoState - 1;

    SubsetDfa(const Generator& g, const EventSet& target, std::size_t cap, const Limits* limits = nullptr);

    /// Subset state for the hidden closure of `states`; kNoState when empty.
    StateId closure_of(std::vector<StateId> states);
    StateId initial();
    /// Successor on target event `t` (index into target()).
    StateId step(StateId subset, EventId t);

    const std::vector<StateId>& members(StateId subset) const { return sets_[subset]; }
    bool marked(StateId subset) const { return marked_[subset] != 0; }
    std::size_t size() const { return sets_.size(); }
    const EventSet& target() const { return target_; }
    bool hidden(EventId source_event) const { return hidden_[source_event] != 0; }
    /// Index in g's alphabet of target event t.
    EventId source_event(EventId t) const { return to_source_[t]; }

  private:
    StateId intern(std::vector<StateId> set);

    const Generator& g_;
    EventSet target_;
    std::size_t cap_;
    const Limits* limits_;
    std::vector<char> hidden_;
    std::vector<EventId> to_source_;
    std::map<std::vector<StateId>, StateId> index_;
    std::vector<std::vector<StateId>> sets_;
    std::vector<char> marked_;
    std::vector<StateId> delta_;
};

} // namespace coordctl::detail
