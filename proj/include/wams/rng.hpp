// Seeded random source with explicit stream derivation.
//
// All randomness in the simulator flows through Rng instances. Subsystems
// (grid noise, attack schedule, per-PMU C/No noise) draw from separate
// streams derived from one master seed, so toggling one subsystem never
// perturbs another. Derivation:
//
//   run_seed    = splitmix64(master ^ splitmix64(run_index + 1))
//   stream_seed = splitmix64(run_seed ^ stream_tag)
//
// Gaussian variates use Box-Muller on top of mt19937_64, which keeps
// trajectories bit-identical for a given seed independent of the standard
// library's distribution implementations.
#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include <Eigen/Core>

namespace wams {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Stream tags (arbitrary fixed constants, one per subsystem).
namespace stream {
inline constexpr std::uint64_t kGrid = 0x677269646E6F6973ULL;
inline constexpr std::uint64_t kAttack = 0x61747461636B7373ULL;
inline constexpr std::uint64_t kPhy = 0x7068796C61796572ULL;
inline constexpr std::uint64_t kCalibGenuine = 0x63616C6962483030ULL;
inline constexpr std::uint64_t kCalibSpoofed = 0x63616C6962483131ULL;
} // namespace stream

inline std::uint64_t derive_run_seed(std::uint64_t master, std::uint64_t run_index) {
    return splitmix64(master ^ splitmix64(run_index + 1));
}

inline std::uint64_t derive_stream_seed(std::uint64_t run_seed, std::uint64_t tag) {
    return splitmix64(run_seed ^ tag);
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform double in (0, 1].
    double uniform() {
        return static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53;
    }

    /// Uniform integer in [lo, hi] inclusive. Uses rejection so every value
    /// is equally likely; draws are deterministic for a given seed.
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return lo + static_cast<std::int64_t>(x % span);
    }

    bool bernoulli(double p) { return uniform() <= p; }

    double gaussian() {
        if (have_cached_) {
            have_cached_ = false;
            return cached_;
        }
        const double u1 = uniform();
        const double u2 = uniform();
        const double radius = std::sqrt(-2.0 * std::log(u1));
        const double angle = 2.0 * M_PI * u2;
        cached_ = radius * std::sin(angle);
        have_cached_ = true;
        return radius * std::cos(angle);
    }

    Eigen::VectorXd gaussian_vector(Eigen::Index n) {
        Eigen::VectorXd v(n);
        for (Eigen::Index i = 0; i < n; ++i) v[i] = gaussian();
        return v;
    }

private:
    std::mt19937_64 engine_;
    bool have_cached_ = false;
    double cached_ = 0.0;
};

} // namespace wams
