#include "trisync/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "trisync/errors.hpp"
#include "trisync/maps.hpp"

namespace trisync {

namespace kick_rules {

KickRule sine() {
    return [](double phase, double a) { return a * std::sin(phase); };
}

KickRule none() {
    return [](double, double) { return 0.0; };
}

KickRule by_name(std::string_view name) {
    if (name == "sine") return sine();
    if (name == "none") return none();
    throw InvalidKickRule("unknown kick rule '" + std::string(name) + "' (expected sine or none)");
}

}  // namespace kick_rules

OscillatorEnsemble ensemble_from_differences(double x0, double y0) {
    auto wrap = [](double v) {
        double r = std::fmod(v, two_pi);
        if (r < 0.0) r += two_pi;
        if (r >= two_pi) r = 0.0;  // fmod(-tiny) + 2pi can round up to 2pi
        return r;
    };
    return {wrap(x0), 0.0, wrap(y0)};
}

std::vector<StroboscopicRecord> simulate(const OscillatorEnsemble& initial,
                                         const CouplingParams& params, std::uint64_t n_cycles,
                                         const KickRule& rule, std::vector<KickEvent>* kick_log) {
    if (!rule) throw InvalidKickRule("simulate: kick rule is empty");

    double phase[3] = {initial.phase_left, initial.phase_center, initial.phase_right};
    for (double v : phase)
        if (!(v >= 0.0 && v < two_pi))
            throw std::invalid_argument("simulate: initial phases must lie in [0, 2 pi)");

    // Line topology: the outer clocks couple to the center only. Firing
    // clock i kicks exactly neighbors[i]; there is no left-right entry, so
    // no event can ever carry a kick between the outer clocks.
    static constexpr int neighbors[3][2] = {{1, -1}, {0, 2}, {1, -1}};

    std::vector<StroboscopicRecord> records;
    records.reserve(std::size_t(n_cycles) + 1);

    double prev_x = 0.0, prev_y = 0.0;
    bool have_prev = false;
    auto sample = [&](std::uint64_t cycle) {
        // center phase is 0 here, so the raw differences are the phases of
        // the outer clocks; unwrap to the branch nearest the previous record
        double x = phase[0], y = phase[2];
        if (have_prev) {
            x += two_pi * std::round((prev_x - x) / two_pi);
            y += two_pi * std::round((prev_y - y) / two_pi);
        }
        prev_x = x;
        prev_y = y;
        have_prev = true;
        records.push_back({cycle, x, y});
    };

    double t = 0.0;
    std::uint64_t cycles = 0;
    if (phase[1] == 0.0) sample(0);  // starting at a center firing: include the initial state

    while (cycles < n_cycles) {
        const double gap[3] = {two_pi - phase[0], two_pi - phase[1], two_pi - phase[2]};
        double dt = std::min({gap[0], gap[1], gap[2]});
        if (dt < 0.0) dt = 0.0;  // rounding can park a phase a hair past threshold

        // exact tie detection on the precomputed gaps; simultaneous firings
        // process left, center, right
        const bool fires[3] = {gap[0] == dt, gap[1] == dt, gap[2] == dt};

        for (double& v : phase) v += dt;
        t += dt;

        for (int i = 0; i < 3; ++i) {
            if (!fires[i]) continue;
            phase[i] = 0.0;
            for (int j : neighbors[i]) {
                if (j < 0) continue;
                const double delta = rule(phase[j], params.a());
                phase[j] += delta;
                if (kick_log)
                    kick_log->push_back({t, OscillatorId(i), OscillatorId(j), delta});
            }
        }

        if (fires[1]) sample(++cycles);
    }
    return records;
}

std::vector<double> stroboscopic_deviation(const std::vector<StroboscopicRecord>& records,
                                           double x0, double y0, const CouplingParams& params) {
    std::vector<double> deviations;
    deviations.reserve(records.size());
    PhasePoint m{x0, y0};
    std::uint64_t map_cycle = 0;
    for (const StroboscopicRecord& r : records) {
        while (map_cycle < r.cycle) {
            m = apply_line_map(m, params);
            ++map_cycle;
        }
        deviations.push_back(sup_norm(torus_displacement(PhasePoint{r.x, r.y} - m)));
    }
    return deviations;
}

double compare_with_map(double x0, double y0, const CouplingParams& params,
                        std::uint64_t n_cycles, const KickRule& rule) {
    const auto records = simulate(ensemble_from_differences(x0, y0), params, n_cycles, rule);
    const auto deviations = stroboscopic_deviation(records, x0, y0, params);
    return deviations.empty() ? 0.0 : *std::max_element(deviations.begin(), deviations.end());
}

}  // namespace trisync
