#pragma once

#include "hurwitz/candidate.hpp"
#include "hurwitz/orbifold.hpp"
#include "hurwitz/rational.hpp"
#include "hurwitz/validation.hpp"

namespace hurwitz {

/// Euler characteristic of the covering surface forced by Riemann-Hurwitz:
/// chi_cover = total_length + d * (chi_base - n). Raw arithmetic; the caller
/// checks evenness and the <= 2 bound.
long long cover_euler_characteristic(const CandidateCover& c);

/// Non-throwing validation: partition sums, Riemann-Hurwitz parity and
/// bound, the every-partition-has-an-entry-above-1 requirement, and (for a
/// genus-0 base with three branching points) the total-length = d+2 shortcut.
ValidationReport validate_candidate(const CandidateCover& c);

/// chi(surface) - sum(1 - 1/p_i), exactly.
Rational orbifold_euler_characteristic(const Orbifold& x);

/// Genus-0 orbifolds with one cone point, or two of unequal order, are Bad;
/// everything else classifies by the sign of the orbifold Euler
/// characteristic.
GeometryClass geometry_class(const Orbifold& x);

/// The minimal orbifold cover induced by a candidate: target cone order
/// above branching point i is p_i = lcm(Pi_i); the instruction entries are
/// p_i / d_ij (1s retained); source cone orders are the instruction entries
/// that exceed 1.
OrbifoldCover induced_orbifold_cover(const CandidateCover& c);

/// Divisibility p_ij | p_i, per-point degree sums, and exact
/// multiplicativity chi_orb(source) = d * chi_orb(target).
ValidationReport validate_orbifold_cover(const OrbifoldCover& oc);

}  // namespace hurwitz
