#pragma once

namespace orbitspace {

// Controls whether a bulk kernel runs its OpenMP path or the serial
// reference path. Every parallel kernel produces output identical to its
// serial counterpart; tests compare the two.
struct ExecPolicy {
  bool parallel = true;
};

inline ExecPolicy serial_policy() { return ExecPolicy{false}; }

}  // namespace orbitspace
