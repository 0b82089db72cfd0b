#pragma once

#include <cstdint>
#include <functional>
#include <string_view>
#include <vector>

#include "trisync/geometry.hpp"
#include "trisync/params.hpp"

namespace trisync {

// Three identical unit-rate clocks on a line, outer-center-outer. A clock
// fires when its phase reaches 2 pi: the phase resets to 0 and each neighbor
// j receives a kick theta_j += rule(theta_j, a). The outer clocks are not
// adjacent, so no kick ever travels between them.
struct OscillatorEnsemble {
    double phase_left{};
    double phase_center{};
    double phase_right{};
};

enum class OscillatorId : int { left = 0, center = 1, right = 2 };

// Phase increment applied to a neighbor of a firing clock.
using KickRule = std::function<double(double phase, double a)>;

namespace kick_rules {
KickRule sine();  // a * sin(phase), the rule whose return map is the chain map
KickRule none();
KickRule by_name(std::string_view name);  // "sine" | "none", throws InvalidKickRule
}  // namespace kick_rules

struct StroboscopicRecord {
    std::uint64_t cycle{};
    double x{}, y{};  // unwrapped (left - center, right - center) at center firings
};

struct KickEvent {
    double time{};
    OscillatorId from{}, to{};
    double delta{};
};

// Event-driven run over n_cycles firings of the center clock. Event times are
// exact (unit rate, no integration); simultaneous firings are processed in
// the fixed order left, center, right. Records are sampled just after event
// processing and unwrapped to the nearest branch; when the center clock
// starts at phase 0, the initial state is included as cycle 0.
std::vector<StroboscopicRecord> simulate(const OscillatorEnsemble& initial,
                                         const CouplingParams& params, std::uint64_t n_cycles,
                                         const KickRule& rule = kick_rules::sine(),
                                         std::vector<KickEvent>* kick_log = nullptr);

// Ensemble with the center clock at 0 and the outer clocks at the given
// phase differences, wrapped into [0, 2 pi).
OscillatorEnsemble ensemble_from_differences(double x0, double y0);

// Torus sup-distance between each stroboscopic record and the matching chain
// map iterate started from the same differences; index n of the result is
// cycle n. Entry 0 is zero by construction.
std::vector<double> stroboscopic_deviation(const std::vector<StroboscopicRecord>& records,
                                           double x0, double y0, const CouplingParams& params);

// Max of stroboscopic_deviation over a fresh simulate run: how far the
// discrete-event dynamics strays from the chain map within n_cycles.
double compare_with_map(double x0, double y0, const CouplingParams& params,
                        std::uint64_t n_cycles, const KickRule& rule = kick_rules::sine());

}  // namespace trisync
