#pragma once

#include <ostream>

namespace hurwitz {

/// Runs the library's invariant sweeps (round-trips, Euler-characteristic
/// multiplicativity, geometry list scans, representability cross-checks,
/// witness construction on the Euclidean families, oracle cross-validation),
/// one summary line per suite. Returns true when everything passes. The
/// quick flag shrinks the bounds to keep the run under a few seconds.
bool run_selfcheck(bool quick, std::ostream& out);

}  // namespace hurwitz
