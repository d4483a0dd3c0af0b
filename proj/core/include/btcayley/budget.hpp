#pragma once

#include <chrono>
#include <optional>
#include <stdexcept>
#include <string>

namespace btcayley {

/// Thrown by exhaustive searches that run out of time or size allowance.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Wall-clock allowance shared by one search. Default-constructed is unlimited.
class Budget {
 public:
  Budget() = default;
  explicit Budget(std::chrono::milliseconds allowance)
      : deadline_(std::chrono::steady_clock::now() + allowance), allowance_ms_(allowance.count()) {}

  static Budget unlimited() { return Budget(); }

  bool expired() const { return deadline_ && std::chrono::steady_clock::now() > *deadline_; }

  void check(const char* where) const {
    if (expired())
      throw BudgetExceeded(std::string(where) + ": exceeded budget of " + std::to_string(allowance_ms_) + " ms");
  }

 private:
  std::optional<std::chrono::steady_clock::time_point> deadline_;
  long long allowance_ms_ = 0;
};

}  // namespace btcayley
