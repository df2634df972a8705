#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "qrice/qpoint.hpp"
#include "qrice/rational.hpp"

namespace qrice {

/// Which evaluation strategies a suite run exercises.
enum class Mode { exact, series, both };

const char* mode_name(Mode mode);
std::optional<Mode> mode_from_name(std::string_view name);

/// Deterministic 64-bit generator (splitmix64). Hand-rolled on purpose:
/// <random> distributions are not bit-reproducible across standard library
/// implementations, and reports must be byte-identical for a fixed seed.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next();

    /// Unbiased uniform draw from [0, bound) via rejection.
    std::uint64_t next_below(std::uint64_t bound);

    /// Uniform integer in [lo, hi], inclusive.
    long next_in(long lo, long hi);

private:
    std::uint64_t state_;
};

struct SampleConfig {
    std::uint64_t seed = 42;
    int trials = 5;
    int n_max = 8;
    int m_max = 4;
    int q_order = 30;           // series truncation Q; values kept mod q^{Q+1}
    int denominator_bound = 16; // max denominator of sampled rationals
    Mode mode = Mode::both;
    int threads = 0;            // 0 = small hardware default; never affects results
};

/// Throws Error on out-of-range fields.
void validate(const SampleConfig& config);

/// The independent RNG stream for (seed, trial_index, tag): a pure function
/// of its arguments, so checks can run in any order. `tag` separates
/// auxiliary draws (telescoping coefficients, Cauchy z) from the main point.
SplitMix64 trial_stream(std::uint64_t seed, int trial_index, std::uint64_t tag = 0);

/// Random rational with |numerator| <= bound and 1 <= denominator <= bound.
Rational sample_rational(SplitMix64& rng, int bound);

/// Pole-avoiding point: q = p/r with 0 < p < r <= denominator_bound (so
/// 0 < q < 1 and q is never a root of unity), x and t bounded rationals,
/// rejected until admissible for horizon n_max and series order
/// max(q_order, n_max). Deterministic function of (config.seed, trial_index).
QPoint sample_qpoint(const SampleConfig& config, int trial_index);

} // namespace qrice
