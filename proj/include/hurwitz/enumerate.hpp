#pragma once

#include <string>
#include <vector>

#include "hurwitz/candidate.hpp"

namespace hurwitz {

/// All partitions of d, descending-lexicographic order.
std::vector<Partition> all_partitions(int d);

/// All partitions of d whose defect (number of entries different from the
/// lcm) is at most cmax, in descending-lexicographic order. Generated
/// constraint-first: either the partition has at most cmax parts, or it is
/// g^r plus at most cmax proper divisors of g.
std::vector<Partition> partitions_defect_at_most(int d, int cmax);

/// All candidates with base S, three branching points and genus-0 cover
/// whose induced orbifold cover runs between triangular orbifolds:
/// total length d+2, total defect exactly 3, every partition with an entry
/// above 1.
std::vector<CandidateCover> triangular_candidates(int d);

/// Triangular candidates over 2 <= d <= dmax whose induced source and
/// target are both hyperbolic. The default bound 41 is forced by
/// 0 < -chi_orb(source) < 1 together with -chi_orb(target) >= 1/42, so the
/// degree, their ratio, is below 42. Degrees are partitioned across jobs
/// and merged in canonical order.
std::vector<CandidateCover> hyperbolic_triangular_census(int dmax = 41, int jobs = 1);

/// All base-S candidates with d <= dmax whose induced target has positive
/// orbifold Euler characteristic (n = 2 gives the (d),(d) family; n = 3 the
/// spherical triangle targets).
std::vector<CandidateCover> positive_chi_candidates(int dmax);

/// All base-S candidates with d <= dmax whose induced source and target are
/// both Euclidean (torus source included).
std::vector<CandidateCover> euclidean_candidates(int dmax);

/// All base-S, three-branching-point candidates of degree d; by default only
/// genus-0 covers (total length d+2), otherwise every admissible cover genus
/// (total length d+2-2g).
std::vector<CandidateCover> all_candidates_n3(int d, bool include_higher_genus = false);

/// Partitions of 8 with defect at most 3, one "<partition> l=<l> c=<c>" line each.
std::string render_table1();

/// Degree-8 triangular candidates with their induced covers and geometry.
std::string render_table2();

}  // namespace hurwitz
