#include "coordctl/io.hpp"

#include "coordctl/errors.hpp"

#include <json.hpp>

#include <deque>
#include <fstream>
#include <sstream>

namespace coordctl {
namespace {

using nlohmann::json;

std::string prefix(const std::string& source) {
    return source.empty() ? std::string() : source + ": ";
}

template <typename Json = json>
Json parse_json(std::string_view text, const std::string& source) {
    try {
        return Json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
        std::size_t line = 1;
        std::size_t column = 1;
        std::size_t upto = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
        for (std::size_t i = 0; i < upto; ++i) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        throw InputError(prefix(source) + "malformed JSON at line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ": " + e.what());
    }
}

const json& field(const json& obj, const char* name, const std::string& source) {
    auto it = obj.find(name);
    if (it == obj.end()) {
        throw InputError(prefix(source) + "missing field '" + name + "'");
    }
    return *it;
}

std::string as_string(const json& v, const std::string& where, const std::string& source) {
    if (!v.is_string()) {
        throw InputError(prefix(source) + "field '" + where + "' must be a string");
    }
    return v.get<std::string>();
}

const json& as_array(const json& v, const std::string& where, const std::string& source) {
    if (!v.is_array()) {
        throw InputError(prefix(source) + "field '" + where + "' must be an array");
    }
    return v;
}

std::vector<std::string> string_list(const json& v, const std::string& where, const std::string& source) {
    std::vector<std::string> out;
    std::size_t i = 0;
    for (const auto& item : as_array(v, where, source)) {
        out.push_back(as_string(item, where + "[" + std::to_string(i++) + "]", source));
    }
    return out;
}

GeneratorData data_from_json(const json& doc, const std::string& source) {
    if (!doc.is_object()) {
        throw InputError(prefix(source) + "generator document must be a JSON object");
    }
    GeneratorData data;
    if (auto it = doc.find("name"); it != doc.end()) {
        data.name = as_string(*it, "name", source);
    }
    std::size_t i = 0;
    for (const auto& ev : as_array(field(doc, "events", source), "events", source)) {
        std::string where = "events[" + std::to_string(i++) + "]";
        if (!ev.is_object()) {
            throw InputError(prefix(source) + "field '" + where + "' must be an object");
        }
        Event e;
        e.name = as_string(field(ev, "name", source), where + ".name", source);
        const json& c = field(ev, "controllable", source);
        if (!c.is_boolean()) {
            throw InputError(prefix(source) + "field '" + where + ".controllable' must be a boolean");
        }
        e.controllable = c.get<bool>();
        data.events.push_back(std::move(e));
    }
    data.states = string_list(field(doc, "states", source), "states", source);
    const json& init = field(doc, "initial", source);
    if (!init.is_null()) {
        data.initial = as_string(init, "initial", source);
    }
    data.marked = string_list(field(doc, "marked", source), "marked", source);
    i = 0;
    for (const auto& t : as_array(field(doc, "transitions", source), "transitions", source)) {
        std::string where = "transitions[" + std::to_string(i++) + "]";
        if (!t.is_array() || t.size() != 3) {
            throw InputError(prefix(source) + "field '" + where + "' must be a [source, event, target] triple");
        }
        data.transitions.push_back({as_string(t[0], where, source), as_string(t[1], where, source),
                                    as_string(t[2], where, source)});
    }
    return data;
}

std::filesystem::path resolve(const std::filesystem::path& base, const std::string& rel) {
    std::filesystem::path p(rel);
    return p.is_absolute() ? p : base / p;
}

} // namespace

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InputError("cannot open '" + path.string() + "'");
    }
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
    if (path.has_parent_path()) {
        std::filesystem::create_directories(path.parent_path());
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw InputError("cannot write '" + path.string() + "'");
    }
    out << text;
}

GeneratorData parse_generator_data(std::string_view text, const std::string& source) {
    return data_from_json(parse_json(text, source), source);
}

Generator parse_generator(std::string_view text, const std::string& source) {
    auto data = parse_generator_data(text, source);
    try {
        return Generator::from_data(data);
    } catch (const FlagConflictError&) {
        throw;
    } catch (const InputError& e) {
        throw InputError(prefix(source) + e.what());
    }
}

Generator read_generator(const std::filesystem::path& path) {
    return parse_generator(read_text_file(path), path.string());
}

std::string serialize_generator(const Generator& g) {
    GeneratorData data = g.to_data();
    json events = json::array();
    for (const auto& e : data.events) {
        json ev = json::object();
        ev["name"] = e.name;
        ev["controllable"] = e.controllable;
        events.push_back(std::move(ev));
    }
    json transitions = json::array();
    for (const auto& t : data.transitions) {
        transitions.push_back(json::array({t[0], t[1], t[2]}));
    }
    // fixed key order
    std::ostringstream os;
    os << "{\n";
    os << "  \"name\": " << json(data.name).dump() << ",\n";
    os << "  \"events\": [";
    for (std::size_t i = 0; i < events.size(); ++i) {
        os << (i ? ",\n    " : "\n    ") << "{\"name\": " << events[i]["name"].dump()
           << ", \"controllable\": " << events[i]["controllable"].dump() << "}";
    }
    os << (events.empty() ? "],\n" : "\n  ],\n");
    os << "  \"states\": " << json(data.states).dump() << ",\n";
    os << "  \"initial\": " << (data.initial ? json(*data.initial).dump() : "null") << ",\n";
    os << "  \"marked\": " << json(data.marked).dump() << ",\n";
    os << "  \"transitions\": [";
    for (std::size_t i = 0; i < transitions.size(); ++i) {
        os << (i ? ",\n    " : "\n    ") << transitions[i].dump(-1, ' ', false);
    }
    os << (transitions.empty() ? "]\n" : "\n  ]\n");
    os << "}\n";
    return os.str();
}

void write_generator(const std::filesystem::path& path, const Generator& g) {
    write_text_file(path, serialize_generator(g));
}

std::vector<std::vector<std::string>> read_alphabet_names(const std::filesystem::path& path) {
    std::string source = path.string();
    json doc = parse_json(read_text_file(path), source);
    if (!doc.is_object()) {
        throw InputError(prefix(source) + "alphabet file must be a JSON object");
    }
    std::vector<std::vector<std::string>> out;
    std::size_t i = 0;
    for (const auto& a : as_array(field(doc, "alphabets", source), "alphabets", source)) {
        out.push_back(string_list(a, "alphabets[" + std::to_string(i++) + "]", source));
    }
    return out;
}

std::vector<EventSet> resolve_alphabets(const std::vector<std::vector<std::string>>& names, const EventSet& known) {
    std::vector<EventSet> out;
    for (const auto& list : names) {
        EventSet set;
        for (const auto& n : list) {
            const Event* e = known.find(n);
            if (e == nullptr) {
                throw InputError("alphabet event '" + n + "' is unknown");
            }
            set.add(*e);
        }
        out.push_back(std::move(set));
    }
    return out;
}

CoordinationProblem read_problem(const std::filesystem::path& path) {
    std::string source = path.string();
    json doc = parse_json(read_text_file(path), source);
    if (!doc.is_object()) {
        throw InputError(prefix(source) + "problem file must be a JSON object");
    }
    std::filesystem::path base = path.parent_path();
    CoordinationProblem problem;
    for (const auto& p : string_list(field(doc, "plants", source), "plants", source)) {
        problem.plants.push_back(read_generator(resolve(base, p)));
    }
    problem.spec = read_generator(resolve(base, as_string(field(doc, "spec", source), "spec", source)));
    EventSet known;
    for (const auto& g : problem.plants) {
        known = known.unite(g.alphabet());
    }
    for (const auto& n : string_list(field(doc, "coordinator_events", source), "coordinator_events", source)) {
        const Event* e = known.find(n);
        if (e == nullptr) {
            throw InputError(prefix(source) + "coordinator event '" + n + "' occurs in no plant");
        }
        problem.coordinator_events.add(*e);
    }
    if (auto it = doc.find("coordinator"); it != doc.end() && !it->is_null()) {
        problem.coordinator = read_generator(resolve(base, as_string(*it, "coordinator", source)));
    }
    if (auto it = doc.find("options"); it != doc.end()) {
        const json& o = *it;
        if (!o.is_object()) {
            throw InputError(prefix(source) + "field 'options' must be an object");
        }
        auto count = [&](const char* name, std::size_t& target) {
            if (auto jt = o.find(name); jt != o.end()) {
                if (!jt->is_number_unsigned() && !(jt->is_number_integer() && jt->get<long long>() >= 0)) {
                    throw InputError(prefix(source) + "field 'options." + name + "' must be a non-negative integer");
                }
                target = jt->get<std::size_t>();
            }
        };
        count("determinization_cap", problem.options.determinization_cap);
        count("refine_limit", problem.options.refine_limit);
        if (auto jt = o.find("require_closure_cd"); jt != o.end()) {
            if (!jt->is_boolean()) {
                throw InputError(prefix(source) + "field 'options.require_closure_cd' must be a boolean");
            }
            problem.options.require_closure_cd = jt->get<bool>();
        }
    }
    return problem;
}

SetCoverInstance read_setcover(const std::filesystem::path& path) {
    std::string source = path.string();
    // ordered so the collection keeps file order
    auto doc = parse_json<nlohmann::ordered_json>(read_text_file(path), source);
    if (!doc.is_object()) {
        throw InputError(prefix(source) + "set cover file must be a JSON object");
    }
    SetCoverInstance inst;
    auto ground = doc.find("ground");
    if (ground == doc.end()) {
        throw InputError(prefix(source) + "missing field 'ground'");
    }
    inst.ground = string_list(json(*ground), "ground", source);
    auto coll = doc.find("collection");
    if (coll == doc.end() || !coll->is_object()) {
        throw InputError(prefix(source) + "field 'collection' must be an object of name -> elements");
    }
    for (auto it = coll->begin(); it != coll->end(); ++it) {
        inst.collection.emplace_back(it.key(), string_list(json(it.value()), "collection." + it.key(), source));
    }
    if (auto b = doc.find("budget"); b != doc.end()) {
        if (!b->is_number_integer() || b->get<long long>() < 0) {
            throw InputError(prefix(source) + "field 'budget' must be a non-negative integer");
        }
        inst.budget = b->get<std::size_t>();
    }
    return inst;
}

std::string export_dot(const Generator& g) {
    std::ostringstream os;
    os << "digraph \"" << g.name() << "\" {\n";
    os << "  rankdir=LR;\n";
    std::vector<StateId> order;
    std::vector<char> seen(g.num_states(), 0);
    if (g.initial()) {
        std::deque<StateId> queue{*g.initial()};
        seen[*g.initial()] = 1;
        while (!queue.empty()) {
            StateId s = queue.front();
            queue.pop_front();
            order.push_back(s);
            for (EventId e = 0; e < g.num_events(); ++e) {
                StateId t = g.next(s, e);
                if (t != kNoState && !seen[t]) {
                    seen[t] = 1;
                    queue.push_back(t);
                }
            }
        }
    }
    for (StateId s = 0; s < g.num_states(); ++s) {
        if (!seen[s]) {
            order.push_back(s);
        }
    }
    std::vector<std::size_t> pos(g.num_states());
    for (std::size_t i = 0; i < order.size(); ++i) {
        pos[order[i]] = i;
    }
    auto quote = [](const std::string& s) {
        std::string out = "\"";
        for (char c : s) {
            if (c == '"' || c == '\\') {
                out += '\\';
            }
            out += c;
        }
        return out + "\"";
    };
    if (g.initial()) {
        os << "  init [shape=point];\n";
    }
    for (StateId s : order) {
        os << "  n" << pos[s] << " [label=" << quote(g.state_name(s))
           << ", shape=" << (g.is_marked(s) ? "doublecircle" : "circle") << "];\n";
    }
    if (g.initial()) {
        os << "  init -> n" << pos[*g.initial()] << ";\n";
    }
    for (StateId s : order) {
        for (EventId e = 0; e < g.num_events(); ++e) {
            StateId t = g.next(s, e);
            if (t != kNoState) {
                os << "  n" << pos[s] << " -> n" << pos[t] << " [label=" << quote(g.alphabet()[e].name) << "];\n";
            }
        }
    }
    os << "}\n";
    return os.str();
}

} // namespace coordctl
