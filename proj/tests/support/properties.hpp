#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace coordctl::testing {

struct SuiteResult {
    std::string name;
    std::size_t cases = 0;    // premise-satisfying instances checked
    std::size_t attempts = 0; // instances drawn
    std::size_t failures = 0;
    std::vector<std::string> failure_details; // first few only
    std::string note;

    bool ok(std::size_t required) const { return failures == 0 && cases >= required; }
};

inline constexpr std::size_t kSuiteCases = 200;

// Each suite draws instances from a fixed seed until `cases` of them satisfy
// the premise (or an attempt budget runs out).
SuiteResult suite_projection_distributes(std::uint32_t seed, std::size_t cases = kSuiteCases);
SuiteResult suite_closure_cd_nonconflict(std::uint32_t seed, std::size_t cases = kSuiteCases);
SuiteResult suite_conditional_implies_controllable(std::uint32_t seed, std::size_t cases = kSuiteCases);
SuiteResult suite_observer_lcc_implies_conditional(std::uint32_t seed, std::size_t cases = kSuiteCases);
SuiteResult suite_star_inclusion(std::uint32_t seed, std::size_t cases = kSuiteCases);
SuiteResult suite_observer_nonconflict_equivalence(std::uint32_t seed, std::size_t cases = kSuiteCases);
SuiteResult suite_supc_oracle(std::uint32_t seed, std::size_t cases = kSuiteCases);
SuiteResult suite_minext_setcover(std::uint32_t seed, std::size_t cases = kSuiteCases);

std::vector<SuiteResult> run_all_suites(std::size_t cases = kSuiteCases);

} // namespace coordctl::testing
