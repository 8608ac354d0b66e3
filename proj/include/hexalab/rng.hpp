#ifndef HEXALAB_RNG_HPP
#define HEXALAB_RNG_HPP

#include <cstdint>
#include <random>
#include <utility>

#include "hexalab/errors.hpp"

namespace hexalab {

// Deterministic stream of 64-bit words.  mt19937_64 output is fully pinned
// by the standard, so identical seeds give identical reports on every
// platform.  Do not route draws through std::uniform_int_distribution: its
// output is implementation-defined.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next() { return gen_(); }

private:
    std::mt19937_64 gen_;
};

inline constexpr int kMaxResampleRetries = 32;

// Over tiny prime fields the generic locus can have density well below 1/32
// (measured: the full first-order pipeline over F_3 succeeds for about 1 in
// 12000 samples), so the retry budget scales with the field size.
inline constexpr int kMaxResampleRetriesTinyField = 1 << 16;

template <class F>
int resample_cap(const F& f) {
    const auto ch = f.characteristic();
    return (ch != 0 && ch < 256) ? kMaxResampleRetriesTinyField : kMaxResampleRetries;
}

// Runs fn(seed), resampling with seed+1, seed+2, ... while it throws
// DegenerateError, up to max_retries retries.  attempts_out, when given,
// receives the number of resamples that were needed.
template <class Fn>
auto with_resampling(std::uint64_t seed, Fn&& fn, int* attempts_out = nullptr,
                     int max_retries = kMaxResampleRetries) -> decltype(fn(seed)) {
    for (int attempt = 0;; ++attempt) {
        try {
            auto result = fn(seed + static_cast<std::uint64_t>(attempt));
            if (attempts_out) *attempts_out = attempt;
            return result;
        } catch (const DegenerateError&) {
            if (attempt >= max_retries) throw;
        }
    }
}

} // namespace hexalab

#endif
