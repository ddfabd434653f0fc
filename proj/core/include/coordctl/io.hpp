#pragma once

#include "coordctl/coordination.hpp"
#include "coordctl/generator.hpp"
#include "coordctl/minext.hpp"

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace coordctl {

/// Parses the JSON generator format. Malformed documents raise InputError
/// with the line and column or the offending field; `source` prefixes the
/// message.
GeneratorData parse_generator_data(std::string_view text, const std::string& source = {});
Generator parse_generator(std::string_view text, const std::string& source = {});
Generator read_generator(const std::filesystem::path& path);

/// Pretty-printed JSON with a fixed key order.
std::string serialize_generator(const Generator& g);
void write_generator(const std::filesystem::path& path, const Generator& g);

/// Event-name lists from {"alphabets": [[...], ...]}.
std::vector<std::vector<std::string>> read_alphabet_names(const std::filesystem::path& path);
/// Resolves names against `known`, which supplies controllability flags.
std::vector<EventSet> resolve_alphabets(const std::vector<std::vector<std::string>>& names, const EventSet& known);

/// Reads a problem file; generator paths are relative to the file.
CoordinationProblem read_problem(const std::filesystem::path& path);

SetCoverInstance read_setcover(const std::filesystem::path& path);

/// Graphviz rendering: states in BFS order from the initial state, marked
/// states double-circled, initial state entered from a point node.
std::string export_dot(const Generator& g);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

} // namespace coordctl
