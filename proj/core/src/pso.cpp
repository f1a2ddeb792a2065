// SPDX-License-Identifier: Apache-2.0
#include "arraysim/pso.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "arraysim/errors.hpp"

namespace arraysim {

PsoParams PsoParams::defaults(int n_vars) {
    PsoParams params;
    params.n_vars = n_vars;
    params.swarm_size = std::min(100, 10 * n_vars);
    params.max_iterations = 200 * n_vars;
    return params;
}

PsoResult optimize(const Objective &f, std::span<const double> lower,
                   std::span<const double> upper, const PsoParams &params, Rng &rng,
                   const IterationObserver &observer) {
    const int n = params.n_vars;
    if (n < 1)
        throw ConfigError("pso: n_vars must be >= 1");
    if (static_cast<int>(lower.size()) != n || static_cast<int>(upper.size()) != n)
        throw ConfigError("pso: bounds must have n_vars entries");
    for (int d = 0; d < n; ++d)
        if (!(lower[d] < upper[d]))
            throw ConfigError("pso: lower bound must be strictly below upper bound");
    if (params.swarm_size < 2)
        throw ConfigError("pso: swarm_size must be >= 2");
    if (params.max_iterations < 1)
        throw ConfigError("pso: max_iterations must be >= 1");
    if (params.max_stall < 1)
        throw ConfigError("pso: max_stall must be >= 1");
    if (!(params.inertia_min <= params.inertia_max))
        throw ConfigError("pso: inertia range is inverted");

    const int swarm = params.swarm_size;
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    std::vector<std::vector<double>> position(swarm, std::vector<double>(n));
    std::vector<std::vector<double>> velocity(swarm, std::vector<double>(n));
    std::vector<std::vector<double>> best_position(swarm, std::vector<double>(n));
    std::vector<double> best_value(swarm);

    PsoResult result;
    result.best_value = -std::numeric_limits<double>::infinity();
    result.best_position.assign(static_cast<std::size_t>(n), 0.0);

    for (int i = 0; i < swarm; ++i) {
        for (int d = 0; d < n; ++d) {
            const double range = upper[d] - lower[d];
            position[i][d] = lower[d] + unit(rng) * range;
            velocity[i][d] = (unit(rng) * 2.0 - 1.0) * range / 4.0;
        }
        best_position[i] = position[i];
        best_value[i] = f(position[i]);
        if (best_value[i] > result.best_value) {
            result.best_value = best_value[i];
            result.best_position = position[i];
        }
    }

    int stall = 0;
    for (int iteration = 1; iteration <= params.max_iterations; ++iteration) {
        const double progress = params.max_iterations > 1
                                    ? static_cast<double>(iteration - 1) /
                                          static_cast<double>(params.max_iterations - 1)
                                    : 0.0;
        const double inertia =
            params.inertia_max - (params.inertia_max - params.inertia_min) * progress;

        const double previous_best = result.best_value;
        for (int i = 0; i < swarm; ++i) {
            for (int d = 0; d < n; ++d) {
                const double r1 = unit(rng);
                const double r2 = unit(rng);
                velocity[i][d] = inertia * velocity[i][d] +
                                 params.cognitive * r1 * (best_position[i][d] - position[i][d]) +
                                 params.social * r2 * (result.best_position[d] - position[i][d]);
            }
            for (int d = 0; d < n; ++d) {
                position[i][d] += velocity[i][d];
                if (position[i][d] < lower[d]) {
                    position[i][d] = lower[d];
                    velocity[i][d] = 0.0;
                } else if (position[i][d] > upper[d]) {
                    position[i][d] = upper[d];
                    velocity[i][d] = 0.0;
                }
            }
            const double value = f(position[i]);
            if (value > best_value[i]) {
                best_value[i] = value;
                best_position[i] = position[i];
                if (value > result.best_value) {
                    result.best_value = value;
                    result.best_position = position[i];
                }
            }
        }

        result.iterations_used = iteration;
        if (observer)
            observer(iteration, result.best_value);

        const double improvement = std::abs(result.best_value - previous_best) /
                                   std::max(std::abs(result.best_value), 1e-30);
        if (improvement < params.tolerance)
            ++stall;
        else
            stall = 0;
        if (stall > params.max_stall) {
            result.termination = PsoTermination::stall_tolerance;
            return result;
        }
    }

    result.termination = PsoTermination::max_iterations;
    result.iterations_used = params.max_iterations;
    return result;
}

} // namespace arraysim
