#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hurwitz/rational.hpp"

namespace hurwitz {

/// The three positive-definite binary forms the Euclidean criteria use.
enum class FormId { X2_Y2, X2_XY_Y2, X2_3XY_3Y2 };

long long form_value(FormId f, long long x, long long y);
std::string to_string(FormId f);
std::optional<FormId> form_from_string(const std::string& s);

/// Conjunction of representability side conditions on (x, y).
struct Constraint {
    bool different_parity = false;
    bool not_both_even = false;
    bool incongruent_mod_3 = false;

    bool satisfied(long long x, long long y) const {
        if (different_parity && ((x ^ y) & 1) == 0) return false;
        if (not_both_even && x % 2 == 0 && y % 2 == 0) return false;
        if (incongruent_mod_3 && (x - y) % 3 == 0) return false;
        return true;
    }
    bool any() const { return different_parity || not_both_even || incongruent_mod_3; }
    std::string to_string() const;
};

/// Lexicographically smallest (x, y) with x, y >= 0 (0 counts as natural),
/// form value equal to target and all constraint flags satisfied. Complete:
/// all three forms are monotone in each variable over the naturals, so the
/// search box 0 <= x, y <= ceil(sqrt(target)) is exhaustive.
std::optional<std::pair<long long, long long>> represent(FormId f, long long target,
                                                         Constraint constraint = {});

/// All d <= limit where constrained representability differs from
/// (d % modulus == residue && unconstrained representability). Empty for the
/// three congruence identities the Euclidean criteria rely on.
std::vector<long long> congruence_equivalence(FormId f, Constraint constraint,
                                              long long residue, long long modulus,
                                              long long limit);

/// Bitmap of representable values 0..limit (x, y >= 0, no constraint).
std::vector<bool> representable_sieve(FormId f, long long limit);

/// |{1 <= d <= limit : representable}| / limit, exactly.
Rational density(FormId f, long long limit, int jobs = 1);

/// Primes p <= limit with p % modulus == residue that are not representable.
std::vector<long long> prime_support(FormId f, long long residue, long long modulus,
                                     long long limit, int jobs = 1);

}  // namespace hurwitz
