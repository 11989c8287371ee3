#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace ridepool {

using NodeId = std::int32_t;
using RequestId = std::int32_t;
using VehicleId = std::int32_t;
using LocationId = std::int32_t;

// Seconds and meters. Integer arithmetic keeps validation bit-exact.
using Time = std::int64_t;
using Cost = std::int64_t;

inline constexpr NodeId kNoNode = -1;
inline constexpr Time kTimeInfinity = std::numeric_limits<Time>::max() / 8;

// Malformed input files and invalid configuration.
class InputError : public std::runtime_error {
public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
  InputError(const std::string& what, std::size_t line)
    : std::runtime_error("line " + std::to_string(line) + ": " + what),
      line_(line) {}

  std::size_t line() const { return line_; }

private:
  std::size_t line_ = 0;
};

// A broken internal promise, e.g. an assembled route failing validation.
class InternalError : public std::logic_error {
public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

} // namespace ridepool
