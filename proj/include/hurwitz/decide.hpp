#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hurwitz/candidate.hpp"
#include "hurwitz/orbifold.hpp"

namespace hurwitz {

enum class Verdict { Realizable, Exceptional, Undecided };

std::string to_string(Verdict v);

/// Family slot in the classification of candidates with Euclidean induced
/// cover. case_id 0 is the torus-source case; 1..7 are the orbifold pairs
/// S(2,4,4)->S(2,4,4), S(2,3,6)->S(2,3,6), S(3,3,3)->S(3,3,3),
/// S(2,2,2,2)->S(2,2,2,2), S(3,3,3)->S(2,3,6), S(2,2,2,2)->S(2,4,4),
/// S(2,2,2,2)->S(2,3,6). family_index numbers the displayed templates of a
/// case, k the template parameter solved from the degree.
struct EuclideanFamily {
    int case_id = -1;
    int family_index = 0;
    long long k = 0;
};

struct NoFamilyMatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Decision {
    Verdict verdict = Verdict::Undecided;
    std::string reason;    // stable machine-readable code
    std::string citation;  // human-readable criterion
    std::optional<std::pair<long long, long long>> xy;  // quadratic-form witness
    std::optional<int> hyp_row;                         // 1..9
    std::optional<EuclideanFamily> family;

    std::string to_string() const;
};

/// Full dispatch: base genus >= 1 is always realizable; otherwise route by
/// the geometry of the induced orbifold cover's target. Hyperbolic
/// non-triangular covers come back Undecided.
Decision decide(const CandidateCover& c);

/// chi_orb(target) > 0: exceptional exactly when the source is bad and the
/// target spherical (bad orbifolds cover nothing good, and everything else
/// is realized by an explicit sphere isometry).
Decision decide_positive(const OrbifoldCover& oc);

/// Euclidean induced cover: match the candidate against the case/family
/// templates and apply the family's congruence or quadratic-form criterion.
Decision decide_euclidean(const CandidateCover& c);

/// Both induced orbifolds hyperbolic triangular: exact lookup in the
/// nine-row census; rows 2 and 8 are the exceptional ones.
Decision decide_hyperbolic_triangular(const CandidateCover& c);

/// Exact multiset match of the candidate against the instantiated Euclidean
/// templates; throws NoFamilyMatch when nothing fits (the template lists are
/// exhaustive, so a miss on a genuinely Euclidean candidate is a bug, not an
/// undecided case).
EuclideanFamily match_euclidean_family(const CandidateCover& c);

/// The family's partition template instantiated at its parameter.
std::vector<Partition> euclidean_family_partitions(int case_id, int family_index, long long k);

/// Families of a case, with their degree pattern solved: all (family, k)
/// whose template degree equals d.
std::vector<EuclideanFamily> euclidean_families_for_degree(int case_id, int d);

int euclidean_family_count(int case_id);

/// The nine hyperbolic triangular candidates, census order (ascending
/// degree, then candidate order).
const std::vector<CandidateCover>& hyperbolic_table();

}  // namespace hurwitz
