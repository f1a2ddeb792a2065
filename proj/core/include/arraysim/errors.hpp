// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace arraysim {

/// Invalid user-supplied configuration: bad key, unparsable value, or a
/// violated parameter invariant. Maps to CLI exit code 2.
class ConfigError : public std::runtime_error {
  public:
    explicit ConfigError(const std::string &what) : std::runtime_error(what) {}
};

/// Estimated channel matrix too ill-conditioned for ZF combining. Callers
/// decide the policy: resample in Monte Carlo loops, reject the pose in the
/// optimizer objective.
class DegenerateChannelError : public std::runtime_error {
  public:
    explicit DegenerateChannelError(const std::string &what) : std::runtime_error(what) {}
};

} // namespace arraysim
