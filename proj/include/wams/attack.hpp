// Time-stamp-shift attack generation: per-slot Bernoulli schedule and
// re-timing of the target PMU's delivered measurements.
#pragma once

#include <cstdint>
#include <deque>
#include <optional>
#include <vector>

#include "wams/grid_model.hpp"
#include "wams/rng.hpp"

namespace wams {

enum class ShiftStrategy { Constant, Random };

struct AttackScenario {
    std::optional<int> target;                       // PMU index, nullopt = no attacker
    ShiftStrategy strategy = ShiftStrategy::Constant;
    int k = 5;                                       // constant shift, slots
    int max_k = 10;                                  // random shift upper bound, slots
    double frequency = 0.3;                          // per-slot attack probability
    std::uint64_t seed = 0;

    void validate(int pmu_count) const;
    int max_shift() const { return strategy == ShiftStrategy::Constant ? k : max_k; }
};

/// Ring of recent true frames, ordered by slot, so a stamp shift can be
/// realized as delivery of a past sample.
class MeasurementBuffer {
public:
    explicit MeasurementBuffer(std::size_t capacity);

    void push(const MeasurementFrame& frame);

    /// Frame at `slot`, clamped to the oldest retained slot when the request
    /// reaches further back than the history covers.
    const MeasurementFrame& at_or_oldest(std::int64_t slot, bool* clamped = nullptr) const;

    std::int64_t oldest_slot() const;
    std::int64_t newest_slot() const;
    bool empty() const { return frames_.empty(); }

private:
    std::size_t capacity_;
    std::deque<MeasurementFrame> frames_;
};

/// Independent Bernoulli(frequency) per slot; all-false when there is no
/// target.
std::vector<bool> schedule(const AttackScenario& scenario, long horizon, Rng& rng);

struct DeliveredFrame {
    MeasurementFrame frame;    // what the control center receives
    int applied_shift = 0;     // 0 when the slot was not attacked
    bool clamped = false;      // shift reached before slot 0
};

/// Re-times the target PMU's value on attacked slots: the delivered value is
/// the target's true measurement from `slot - shift` while the delivered
/// stamp still claims `slot`. Values are never fabricated; non-target PMUs
/// and unattacked slots pass through unchanged. `rng` is consumed only on
/// attacked slots under the random strategy.
DeliveredFrame apply_tsa(const MeasurementBuffer& buffer, const MeasurementFrame& frame,
                         const AttackScenario& scenario, std::int64_t slot,
                         const std::vector<bool>& mask, Rng& rng);

} // namespace wams
