#include "coordctl/event_set.hpp"

#include "coordctl/errors.hpp"

#include <algorithm>

namespace coordctl {

EventSet::EventSet(std::initializer_list<Event> events) {
    for (const auto& e : events) {
        add(e);
    }
}

EventSet EventSet::from_names(std::span<const std::string> names, std::span<const std::string> uncontrollable) {
    EventSet out;
    for (const auto& n : names) {
        bool ctrl = std::find(uncontrollable.begin(), uncontrollable.end(), n) == uncontrollable.end();
        out.add({n, ctrl});
    }
    return out;
}

bool EventSet::add(const Event& e) {
    if (const Event* existing = find(e.name)) {
        if (existing->controllable != e.controllable) {
            throw FlagConflictError(e.name);
        }
        return false;
    }
    index_.emplace(e.name, static_cast<EventId>(events_.size()));
    events_.push_back(e);
    return true;
}

const Event* EventSet::find(std::string_view name) const {
    auto it = index_.find(name);
    return it == index_.end() ? nullptr : &events_[it->second];
}

std::optional<EventId> EventSet::index_of(std::string_view name) const {
    auto it = index_.find(name);
    if (it == index_.end()) {
        return std::nullopt;
    }
    return it->second;
}

EventSet EventSet::intersect(const EventSet& other) const {
    return filter([&](const Event& e) { return other.contains(e.name); });
}

EventSet EventSet::minus(const EventSet& other) const {
    return filter([&](const Event& e) { return !other.contains(e.name); });
}

EventSet EventSet::unite(const EventSet& other) const {
    EventSet out = *this;
    for (const auto& e : other) {
        out.add(e);
    }
    return out;
}

EventSet EventSet::uncontrollable() const {
    return filter([](const Event& e) { return !e.controllable; });
}

EventSet EventSet::filter(const std::function<bool(const Event&)>& keep) const {
    EventSet out;
    for (const auto& e : events_) {
        if (keep(e)) {
            out.add(e);
        }
    }
    return out;
}

bool EventSet::is_subset_of(const EventSet& other) const {
    return std::all_of(events_.begin(), events_.end(), [&](const Event& e) { return other.contains(e.name); });
}

bool EventSet::same_as(const EventSet& other) const {
    return size() == other.size() && is_subset_of(other);
}

std::vector<std::string> EventSet::names() const {
    std::vector<std::string> out;
    out.reserve(events_.size());
    for (const auto& e : events_) {
        out.push_back(e.name);
    }
    return out;
}

EventSet unite_all(std::span<const EventSet> sets) {
    EventSet out;
    for (const auto& s : sets) {
        out = out.unite(s);
    }
    return out;
}

EventSet shared_events(std::span<const EventSet> sets) {
    EventSet all = unite_all(sets);
    return all.filter([&](const Event& e) {
        int count = 0;
        for (const auto& s : sets) {
            count += s.contains(e.name) ? 1 : 0;
        }
        return count >= 2;
    });
}

std::string to_string(const EventSet& events) {
    std::string out = "{";
    bool first = true;
    for (const auto& e : events) {
        if (!first) {
            out += ",";
        }
        out += e.name;
        first = false;
    }
    return out + "}";
}

} // namespace coordctl
