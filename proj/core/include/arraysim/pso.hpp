// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <span>
#include <vector>

#include "arraysim/rng.hpp"

namespace arraysim {

/// Swarm parameters. Defaults follow the reference tuning: inertia decays
/// linearly over [0.1, 1.1], acceleration constants 1.49, swarm size
/// min{100, 10 * n_vars}, at most 200 * n_vars iterations, stall window 20,
/// relative function tolerance 1e-6.
struct PsoParams {
    double inertia_min = 0.1;
    double inertia_max = 1.1;
    double cognitive = 1.49; // c1
    double social = 1.49;    // c2
    int swarm_size = 0;
    int max_iterations = 0;
    int max_stall = 20;
    double tolerance = 1e-6;
    int n_vars = 0;

    static PsoParams defaults(int n_vars);
};

enum class PsoTermination { max_iterations, stall_tolerance };

struct PsoResult {
    std::vector<double> best_position;
    double best_value = 0.0;
    int iterations_used = 0;
    PsoTermination termination = PsoTermination::max_iterations;
};

using Objective = std::function<double(std::span<const double>)>;
using IterationObserver = std::function<void(int iteration, double best_value)>;

/// Maximizes f over the box [lower, upper] with a global-best particle swarm.
/// Positions are kept inside the box by clamping the offending coordinate and
/// zeroing its velocity. Velocity updates redraw r1, r2 per dimension, per
/// particle, per iteration; draws are sequential in particle order so a fixed
/// rng seed reproduces the full trajectory. Terminates on max_iterations or
/// once the relative global-best improvement stays below `tolerance` for more
/// than `max_stall` consecutive iterations.
PsoResult optimize(const Objective &f, std::span<const double> lower,
                   std::span<const double> upper, const PsoParams &params, Rng &rng,
                   const IterationObserver &observer = {});

} // namespace arraysim
