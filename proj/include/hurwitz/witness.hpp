#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hurwitz/candidate.hpp"
#include "hurwitz/decide.hpp"
#include "hurwitz/validation.hpp"

namespace hurwitz {

/// Exact plane coordinates. Square: (a,b) is a+ib. Hex: (a,b) is a+wb with
/// w = (1+i*sqrt(3))/2. HexDoubled: (a,b) is (a+wb)/2, the resolution needed
/// because half-points occur among cone lifts. All arithmetic stays in
/// integers; w^2 = w-1 eliminates every radical.
enum class Frame { Square, Hex, HexDoubled };

struct LatticePoint {
    Frame frame = Frame::Square;
    long long a = 0;
    long long b = 0;
};

enum class EuclideanOrbifoldId { S244, S2222, S236, S333 };

enum class ConeLiftClass { A, B, C, D, NotALift };

/// Classify a plane point as a lift of one of the orbifold's cone points.
/// Throws CandidateError on a frame mismatch (square orbifolds take square
/// points, hex orbifolds hex or doubled-hex points).
ConeLiftClass lift_class(EuclideanOrbifoldId orb, const LatticePoint& pt);

int cone_order_of_class(EuclideanOrbifoldId orb, ConeLiftClass cls);

/// "A2", "B4", ..., or "-" for NotALift.
std::string class_name(EuclideanOrbifoldId orb, ConeLiftClass cls);

/// Affine certificate f(z) = lambda*z + mu for a Euclidean candidate.
/// Rigid cases (1,2,3,5) keep lambda's target-frame coordinates in (n,m):
/// square lambda = n+im, hex lambda = n+wm (case 5 carries an extra sqrt(2)
/// that cancels in every check). Flexible cases (4,6,7) keep the four lattice
/// parameters of the source modulus; case 0 keeps (k, lattice index).
struct AffineWitness {
    int case_id = -1;
    int family_index = 0;
    long long k = 0;
    long long n = 0, m = 0, p = 0, q = 0;
    LatticePoint mu;
    long long lambda_squared = 0;
    std::optional<std::pair<long long, long long>> xy;  // quadratic-form data used
    bool from_fallback_search = false;
};

/// lambda * u lies in the target translation lattice for both source lattice
/// generators u. Rigid cases evaluate the products exactly; flexible cases
/// reduce to solvability of the modulus equations (nonzero (n,m), positive
/// oriented degree).
bool lattice_inclusion_check(int case_id, const AffineWitness& w);

/// Point-level variant for rigid cases: does multiplication by this lambda
/// map the source lattice into the target lattice?
bool lattice_inclusion_check(int case_id, const LatticePoint& lambda);

/// Build a verified witness following the per-family recipes; when criteria
/// fail, returns nullopt. A recipe that fails self-verification triggers the
/// bounded fallback parameter search and flags the result.
std::optional<AffineWitness> construct_witness(const CandidateCover& c);

/// Bounded search over witness parameters (|n|,|m|,|p|,|q| <= 4*sqrt(d), mu
/// over cone-lift coset representatives). Used as the construct fallback and
/// to confirm the never-realizable families empty-handed.
std::optional<AffineWitness> witness_parameter_search(const CandidateCover& c,
                                                      const EuclideanFamily& fam);

/// Exact checks: degree formula, lattice inclusion, every source cone
/// representative mapping into the lift set of its instruction-designated
/// target cone, and the per-point instruction degree sums.
ValidationReport verify_witness(const CandidateCover& c, const AffineWitness& w);

std::string format_witness(const CandidateCover& c, const AffineWitness& w);

/// Torus-source certificate: T realizes the cover through the index-k
/// sublattice (k*u1, u2) of the target's translation lattice, with
/// d = k * [Gamma : Lambda].
struct TorusWitness {
    long long k = 0;
    int lattice_index = 1;
    std::string basis;
};

TorusWitness torus_witness(const CandidateCover& c);

}  // namespace hurwitz
