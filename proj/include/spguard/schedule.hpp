#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "spguard/errors.hpp"

namespace spguard {

enum class ScheduleKind { linear };

// Variance schedule for the forward diffusion process. Steps are indexed
// t = 1..T; arrays are 0-based, so betas[t-1] belongs to step t. Sampling
// traverses step_indices, which runs T down to 1.
struct NoiseSchedule {
    int num_steps = 0;
    std::vector<double> betas;
    std::vector<double> alphas;
    std::vector<double> alpha_bars;
    std::vector<int> step_indices;

    void require_valid_step(int t) const {
        if (t < 1 || t > num_steps) {
            throw ContractViolation("NoiseSchedule: step index " + std::to_string(t) +
                                    " outside [1, " + std::to_string(num_steps) + "]");
        }
    }

    double beta(int t) const {
        require_valid_step(t);
        return betas[t - 1];
    }

    double alpha_bar(int t) const {
        require_valid_step(t);
        return alpha_bars[t - 1];
    }

    // alpha_bar of the step below t; by convention alpha_bar(0) = 1, which
    // makes the last reverse step return the clean x0 estimate.
    double alpha_bar_prev(int t) const {
        require_valid_step(t);
        return t >= 2 ? alpha_bars[t - 2] : 1.0;
    }
};

inline NoiseSchedule make_schedule(int num_steps, double beta_start, double beta_end,
                                   ScheduleKind kind = ScheduleKind::linear) {
    if (num_steps < 2) {
        throw ConfigError("make_schedule: num_steps must be >= 2");
    }
    if (!(beta_start > 0.0) || !(beta_start <= beta_end) || !(beta_end < 1.0)) {
        throw ConfigError("make_schedule: need 0 < beta_start <= beta_end < 1");
    }
    if (kind != ScheduleKind::linear) {
        throw ConfigError("make_schedule: unsupported schedule kind");
    }

    NoiseSchedule s;
    s.num_steps = num_steps;
    s.betas.resize(num_steps);
    s.alphas.resize(num_steps);
    s.alpha_bars.resize(num_steps);
    double prod = 1.0;
    for (int i = 0; i < num_steps; ++i) {
        const double frac = static_cast<double>(i) / static_cast<double>(num_steps - 1);
        s.betas[i] = beta_start + (beta_end - beta_start) * frac;
        s.alphas[i] = 1.0 - s.betas[i];
        prod *= s.alphas[i];
        s.alpha_bars[i] = prod;
    }
    s.step_indices.resize(num_steps);
    for (int i = 0; i < num_steps; ++i) s.step_indices[i] = num_steps - i;
    return s;
}

}  // namespace spguard
