#pragma once

#include <coordctl/coordination.hpp>
#include <coordctl/minext.hpp>
#include <coordctl/nonblocking.hpp>
#include <coordctl/observer.hpp>

#include <json.hpp>

namespace coordctl::cli {

using Json = nlohmann::ordered_json;

Json word_json(const std::optional<Word>& w);
Json names_json(const EventSet& events);
Json generator_summary(const Generator& g);

Json to_json(const ControllabilityVerdict& v);
Json to_json(const ClosednessVerdict& v);
Json to_json(const InclusionResult& r);
Json to_json(const EqualityResult& r);
Json to_json(const DecomposabilityResult& r);
Json to_json(const IndependenceResult& r);
Json to_json(const ConditionalControllability& r);
Json to_json(const ConditionalClosedness& r);
Json to_json(const ObserverVerdict& v);
Json to_json(const LccVerdict& v);
Json to_json(const ProjectionSuiteReport& r);
Json to_json(const SynthesisReport& r);
Json to_json(const NonblockingResult& r);
Json to_json(const NonblockingTheoremReport& r);
Json to_json(const ExtensionResult& r);

} // namespace coordctl::cli
