#pragma once

#include <stdexcept>
#include <string>

namespace farey {

struct DegeneratePoints : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ZeroVector : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct TooFewVertices : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct IndexOutOfRange : std::out_of_range {
  using std::out_of_range::out_of_range;
};

/// Strict convexity check failed; (p, q) is the first offending index pair.
struct NotConvexDirect : std::invalid_argument {
  int p;
  int q;
  NotConvexDirect(int p_, int q_)
      : std::invalid_argument("not a direct convex polygon: det(A" + std::to_string(p_) +
                              "->A" + std::to_string(p_ + 1) + ", A" + std::to_string(p_) +
                              "->A" + std::to_string(q_) + ") <= 0"),
        p(p_), q(q_) {}
};

struct PreconditionViolated : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A structural claim that must hold for every arrangement cell failed.
struct ShapeTheoremViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InternalInvariantViolation : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace farey
