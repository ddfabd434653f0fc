#include "coordctl/generator.hpp"

#include "coordctl/errors.hpp"
#include "coordctl/limits.hpp"

#include <set>
#include <sstream>

namespace coordctl {

void Limits::check_cancelled() const {
    if (stop.stop_requested()) {
        throw CancelledError();
    }
}

std::string to_string(const Word& w) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i > 0) {
            out += ' ';
        }
        out += w[i];
    }
    return out;
}

Generator::Generator(EventSet alphabet, std::string name) : name_(std::move(name)), alphabet_(std::move(alphabet)) {}

Generator Generator::empty(EventSet alphabet, std::string name) {
    return Generator(std::move(alphabet), std::move(name));
}

std::size_t Generator::num_transitions() const {
    std::size_t n = 0;
    for (StateId t : delta_) {
        n += t != kNoState ? 1 : 0;
    }
    return n;
}

std::optional<StateId> Generator::find_state(const std::string& name) const {
    auto it = state_index_.find(name);
    if (it == state_index_.end()) {
        return std::nullopt;
    }
    return it->second;
}

StateId Generator::add_state(std::string name, bool marked) {
    auto id = static_cast<StateId>(state_names_.size());
    auto [it, inserted] = state_index_.emplace(name, id);
    if (!inserted) {
        throw InputError("duplicate state '" + name + "'");
    }
    state_names_.push_back(std::move(name));
    marked_.push_back(marked ? 1 : 0);
    delta_.resize(delta_.size() + alphabet_.size(), kNoState);
    return id;
}

void Generator::set_initial(StateId s) {
    initial_ = s;
}

void Generator::set_marked(StateId s, bool marked) {
    marked_[s] = marked ? 1 : 0;
}

void Generator::add_transition(StateId from, EventId event, StateId to) {
    StateId& slot = delta_[static_cast<std::size_t>(from) * alphabet_.size() + event];
    if (slot != kNoState && slot != to) {
        throw InputError("nondeterministic transition from '" + state_names_[from] + "' on '" +
                         alphabet_[event].name + "'");
    }
    slot = to;
}

void Generator::add_transition(StateId from, std::string_view event, StateId to) {
    auto e = alphabet_.index_of(event);
    if (!e) {
        throw InputError("event '" + std::string(event) + "' is not in the alphabet");
    }
    add_transition(from, *e, to);
}

std::vector<std::string> validate(const GeneratorData& data) {
    std::vector<std::string> report;
    std::set<std::string> events;
    for (const auto& e : data.events) {
        if (e.name.empty()) {
            report.push_back("event with empty name");
        }
        for (char c : e.name) {
            if (c == ',' || std::isspace(static_cast<unsigned char>(c)) || !std::isprint(static_cast<unsigned char>(c))) {
                report.push_back("event '" + e.name + "' contains whitespace, comma or non-printable characters");
                break;
            }
        }
        if (!events.insert(e.name).second) {
            report.push_back("duplicate event '" + e.name + "'");
        }
    }
    std::set<std::string> states;
    for (const auto& s : data.states) {
        if (!states.insert(s).second) {
            report.push_back("duplicate state '" + s + "'");
        }
    }
    if (data.initial && !states.count(*data.initial)) {
        report.push_back("initial state '" + *data.initial + "' is not declared");
    }
    for (const auto& m : data.marked) {
        if (!states.count(m)) {
            report.push_back("marked state '" + m + "' is not declared (dangling)");
        }
    }
    std::map<std::pair<std::string, std::string>, std::string> seen;
    for (const auto& [src, ev, dst] : data.transitions) {
        if (!states.count(src)) {
            report.push_back("transition source '" + src + "' is not declared (dangling)");
        }
        if (!states.count(dst)) {
            report.push_back("transition target '" + dst + "' is not declared (dangling)");
        }
        if (!events.count(ev)) {
            report.push_back("transition event '" + ev + "' is not in the alphabet");
        }
        auto [it, inserted] = seen.emplace(std::make_pair(src, ev), dst);
        if (!inserted && it->second != dst) {
            report.push_back("nondeterminism: state '" + src + "' has several successors on '" + ev + "'");
        }
    }
    return report;
}

std::vector<std::string> validate(const Generator& g) {
    std::vector<std::string> report;
    if (g.initial() && *g.initial() >= g.num_states()) {
        report.push_back("initial state out of range");
    }
    for (StateId s = 0; s < g.num_states(); ++s) {
        for (EventId e = 0; e < g.num_events(); ++e) {
            StateId t = g.next(s, e);
            if (t != kNoState && t >= g.num_states()) {
                report.push_back("transition target out of range");
            }
        }
    }
    return report;
}

Generator Generator::from_data(const GeneratorData& data) {
    auto report = validate(data);
    if (!report.empty()) {
        std::ostringstream os;
        os << "invalid generator";
        if (!data.name.empty()) {
            os << " '" << data.name << "'";
        }
        os << ":";
        for (const auto& r : report) {
            os << "\n  - " << r;
        }
        throw InputError(os.str());
    }
    EventSet alphabet;
    for (const auto& e : data.events) {
        alphabet.add(e);
    }
    Generator g(std::move(alphabet), data.name);
    for (const auto& s : data.states) {
        g.add_state(s);
    }
    for (const auto& m : data.marked) {
        g.set_marked(*g.find_state(m));
    }
    if (data.initial) {
        g.set_initial(*g.find_state(*data.initial));
    }
    for (const auto& [src, ev, dst] : data.transitions) {
        g.add_transition(*g.find_state(src), ev, *g.find_state(dst));
    }
    return g;
}

GeneratorData Generator::to_data() const {
    GeneratorData data;
    data.name = name_;
    data.events.assign(alphabet_.begin(), alphabet_.end());
    data.states = state_names_;
    if (initial_) {
        data.initial = state_names_[*initial_];
    }
    for (StateId s = 0; s < num_states(); ++s) {
        if (is_marked(s)) {
            data.marked.push_back(state_names_[s]);
        }
        for (EventId e = 0; e < num_events(); ++e) {
            StateId t = next(s, e);
            if (t != kNoState) {
                data.transitions.push_back({state_names_[s], alphabet_[e].name, state_names_[t]});
            }
        }
    }
    return data;
}

} // namespace coordctl
