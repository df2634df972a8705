#include "qrice/sampling.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "qrice/errors.hpp"

namespace qrice {

const char* mode_name(Mode mode) {
    switch (mode) {
        case Mode::exact: return "exact";
        case Mode::series: return "series";
        case Mode::both: return "both";
    }
    return "?";
}

std::optional<Mode> mode_from_name(std::string_view name) {
    if (name == "exact") return Mode::exact;
    if (name == "series") return Mode::series;
    if (name == "both") return Mode::both;
    return std::nullopt;
}

std::uint64_t SplitMix64::next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t SplitMix64::next_below(std::uint64_t bound) {
    if (bound == 0) throw Error("next_below needs bound >= 1");
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t residue = (max % bound + 1) % bound; // 2^64 mod bound
    for (;;) {
        const std::uint64_t v = next();
        // accept only draws below the largest multiple of bound
        if (residue == 0 || v < max - residue + 1) return v % bound;
    }
}

long SplitMix64::next_in(long lo, long hi) {
    if (lo > hi) throw Error("next_in needs lo <= hi");
    const std::uint64_t span =
        static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
    return lo + static_cast<long>(next_below(span));
}

SplitMix64 trial_stream(std::uint64_t seed, int trial_index, std::uint64_t tag) {
    // Two scrambling rounds fold trial and tag into the seed so that streams
    // for different (trial, tag) pairs are unrelated.
    SplitMix64 boot(seed);
    const std::uint64_t s1 =
        boot.next() ^ (0x9E3779B97F4A7C15ULL * (static_cast<std::uint64_t>(trial_index) + 1));
    SplitMix64 fold(s1);
    return SplitMix64(fold.next() ^ (0xBF58476D1CE4E5B9ULL * tag));
}

void validate(const SampleConfig& config) {
    if (config.trials < 1) throw Error("config: trials must be >= 1");
    if (config.n_max < 1) throw Error("config: n_max must be >= 1");
    if (config.m_max < 1) throw Error("config: m_max must be >= 1");
    if (config.q_order < 1) throw Error("config: truncation order must be >= 1");
    if (config.denominator_bound < 1) throw Error("config: denominator bound must be >= 1");
    if (config.threads < 0) throw Error("config: threads must be >= 0");
}

Rational sample_rational(SplitMix64& rng, int bound) {
    if (bound < 1) throw Error("rational sampling needs bound >= 1");
    const long num = rng.next_in(-bound, bound);
    const long den = rng.next_in(1, bound);
    return Rational(num, den);
}

QPoint sample_qpoint(const SampleConfig& config, int trial_index) {
    validate(config);
    if (trial_index < 0) throw Error("trial index must be >= 0");
    SplitMix64 rng = trial_stream(config.seed, trial_index);
    const int bound = config.denominator_bound;
    const int order = std::max(config.q_order, config.n_max);
    constexpr int kBudget = 4096;
    if (bound >= 2) {
        for (int attempt = 0; attempt < kBudget; ++attempt) {
            QPoint pt;
            const long r = rng.next_in(2, bound);
            const long p = rng.next_in(1, r - 1);
            pt.q = Rational(p, r);
            pt.x = sample_rational(rng, bound);
            pt.t = sample_rational(rng, bound);
            pt.horizon = config.n_max;
            if (qpoint_admissible(pt, order)) return pt;
        }
    }
    throw SamplingError("no admissible point within budget (denominator bound " +
                        std::to_string(bound) + " too small?)");
}

} // namespace qrice
