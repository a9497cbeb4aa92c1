#pragma once

#include <cstdint>
#include <functional>

#include "qwalk/coin.hpp"
#include "qwalk/walk_state.hpp"

namespace qwalk {

/// Called after every step with the freshly advanced state (read-only).
using StepRecorder = std::function<void(const WalkState&)>;

/// One application of the coined-walk recurrences:
///   up(j, t)   =  sqrt(q) up(j-1, t-1) + sqrt(1-q) e^{i theta} down(j-1, t-1)
///   down(j, t) =  sqrt(1-q) e^{i phi} up(j+1, t-1) - sqrt(q) e^{i(theta+phi)} down(j+1, t-1)
/// Throws WindowOverflowError if the support would touch the window edge.
WalkState step(const WalkState& state, const CoinParams& coin);

/// Applies `step` exactly `steps` times (steps = 0 returns the input
/// unchanged), invoking `record` after each step. Double-buffered; a pure
/// function of its arguments, so repeated runs are bit-identical.
WalkState evolve(const WalkState& state, const CoinParams& coin,
                 std::int64_t steps, const StepRecorder& record = {});

}  // namespace qwalk
