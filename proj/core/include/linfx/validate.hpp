#pragma once

#include "linfx/types.hpp"

namespace linfx {

/// Checks the three frame hypotheses (column l2 <= 1, column l1 <=
/// 3 sqrt(log N), row max >= gamma) and marks the frame validated iff all
/// pass.  N < 2 is refused outright: the log N bound would be vacuous.
ValidationReport validate_prop1(FrameMatrix& frame);

/// Checks the two-summing conditions over sigma' only: column l2 <= 1 and
/// row sup >= threshold.  Marks the basis validated (and records the
/// threshold as its gamma) iff both pass.
ValidationReport validate_frame2summ(SignedBasisMatrix& basis, double threshold = 0.5);

}  // namespace linfx
