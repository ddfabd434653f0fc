#pragma once

#include <cstddef>
#include <stop_token>

namespace coordctl {

inline constexpr std::size_t kDefaultDeterminizationCap = 1'000'000;
inline constexpr std::size_t kDefaultWordSampleCap = 1'000'000;
inline constexpr std::size_t kMaxEnumerationBound = 20;

/// Resource limits and cooperative cancellation shared by every
/// potentially expensive operation.
struct Limits {
    /// Maximum number of subset states a single projection may create.
    std::size_t determinization_cap = kDefaultDeterminizationCap;
    /// Maximum number of words enumerate_words may return.
    std::size_t word_sample_cap = kDefaultWordSampleCap;
    std::stop_token stop;
    /// Worker threads for independent sub-computations; 1 keeps everything
    /// on the calling thread.
    unsigned threads = 1;

    void check_cancelled() const;
};

} // namespace coordctl
