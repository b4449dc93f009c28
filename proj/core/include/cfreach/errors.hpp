#pragma once

#include <stdexcept>
#include <string>

namespace cfreach {

/// Thrown when an integrated trajectory leaves the finite range
/// (non-finite values or magnitude beyond the blow-up threshold).
class DivergenceError : public std::runtime_error {
  public:
    explicit DivergenceError(double time)
        : std::runtime_error("trajectory diverged at t=" + std::to_string(time)),
          time_(time) {}

    double time() const { return time_; }

  private:
    double time_;
};

}  // namespace cfreach
