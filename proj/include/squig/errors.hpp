#pragma once

#include <stdexcept>
#include <string>

namespace squig {

/// Rejected parameter combination (p < 2, negative powers where the
/// positivity theorems are needed, ...).
class invalid_params : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An iterative method did not meet its stopping criterion.
class convergence_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The tanquent (or another quotient) was requested at a zero of its
/// denominator.
class pole_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Root isolation found a different number of roots than the
/// real-rootedness theorem predicts.
class root_count_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Combinatorial enumeration refused because of its cost guard.
class cost_guard_error : public std::length_error {
 public:
  using std::length_error::length_error;
};

class zero_denominator_error : public std::runtime_error {
 public:
  zero_denominator_error(double t, int level)
      : std::runtime_error("continued fraction: zero denominator at t=" +
                           std::to_string(t) + ", level " +
                           std::to_string(level)),
        t_(t),
        level_(level) {}

  double t() const noexcept { return t_; }
  int level() const noexcept { return level_; }

 private:
  double t_;
  int level_;
};

}  // namespace squig
