#pragma once

#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "hooklab/rational.hpp"

namespace hooklab {

/// Deterministic point source for randomized identity testing. splitmix64
/// keeps runs reproducible across platforms and standard libraries. Values
/// drawn as a "distinct family" are pairwise different, which is what the
/// evaluation points y_1..y_N need to dodge structural poles.
class PointSampler {
public:
    explicit PointSampler(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform-ish integer in [1, bound].
    long next_int(long bound) {
        if (bound < 1) throw std::invalid_argument("sampling bound must be positive");
        return static_cast<long>(next_u64() % static_cast<std::uint64_t>(bound)) + 1;
    }

    /// Pairwise-distinct integers in [1, bound], as exact rationals.
    std::vector<Rational> distinct_family(int count, long bound) {
        if (bound < count) throw std::invalid_argument("bound too small for a distinct family");
        std::set<long> seen;
        std::vector<Rational> out;
        int budget = 200 * count + 200;
        while (static_cast<int>(out.size()) < count) {
            if (--budget < 0) throw std::runtime_error("sampler resample budget exhausted");
            long v = next_int(bound);
            if (seen.insert(v).second) out.emplace_back(v);
        }
        return out;
    }

    Rational rational_point(long bound) { return Rational(next_int(bound)); }

private:
    std::uint64_t state_;
};

/// Stable per-task seed: FNV-1a over the task key folded into the base seed,
/// so parallel sweeps draw the same points regardless of scheduling.
inline std::uint64_t derive_seed(std::uint64_t base, const std::string& key) {
    std::uint64_t h = 1469598103934665603ULL ^ base;
    for (unsigned char c : key) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

}  // namespace hooklab
