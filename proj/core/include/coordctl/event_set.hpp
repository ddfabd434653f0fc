#pragma once

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace coordctl {

using EventId = std::uint32_t;

struct Event {
    std::string name;
    bool controllable = true;

    friend bool operator==(const Event&, const Event&) = default;
};

/// Ordered set of events keyed by name.
///
/// Iteration follows insertion order; every tie-break in the library
/// (shortest-lexicographic witnesses, greedy choices) uses that order.
class EventSet {
  public:
    using const_iterator = std::vector<Event>::const_iterator;

    EventSet() = default;
    EventSet(std::initializer_list<Event> events);

    /// Builds a set of controllable events, then flips the flag of every
    /// name listed in `uncontrollable`.
    static EventSet from_names(std::span<const std::string> names,
                               std::span<const std::string> uncontrollable = {});

    /// Inserts `e`; returns false if an event with that name already exists.
    /// Throws FlagConflictError when the existing flag differs.
    bool add(const Event& e);

    bool contains(std::string_view name) const { return find(name) != nullptr; }
    const Event* find(std::string_view name) const;
    std::optional<EventId> index_of(std::string_view name) const;

    const Event& operator[](EventId id) const { return events_[id]; }
    std::size_t size() const noexcept { return events_.size(); }
    bool empty() const noexcept { return events_.empty(); }
    const_iterator begin() const noexcept { return events_.begin(); }
    const_iterator end() const noexcept { return events_.end(); }

    /// Events of this set that also occur in `other`, in this set's order.
    EventSet intersect(const EventSet& other) const;
    /// Events of this set absent from `other`.
    EventSet minus(const EventSet& other) const;
    /// This set followed by the events of `other` not yet present.
    EventSet unite(const EventSet& other) const;
    EventSet uncontrollable() const;
    EventSet filter(const std::function<bool(const Event&)>& keep) const;

    bool is_subset_of(const EventSet& other) const;
    /// Set equality by name, ignoring order.
    bool same_as(const EventSet& other) const;
    std::vector<std::string> names() const;

    friend bool operator==(const EventSet& a, const EventSet& b) { return a.events_ == b.events_; }

  private:
    std::vector<Event> events_;
    std::map<std::string, EventId, std::less<>> index_;
};

/// Union of a list of event sets (first-seen order).
EventSet unite_all(std::span<const EventSet> sets);

/// Events shared by at least two of the given sets.
EventSet shared_events(std::span<const EventSet> sets);

std::string to_string(const EventSet& events);

} // namespace coordctl
