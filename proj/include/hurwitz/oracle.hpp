#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "hurwitz/candidate.hpp"

namespace hurwitz {

/// Tuple of permutations certifying realizability: one permutation per
/// partition (matching cycle type), product equal to the identity, generated
/// group transitive. Permutations are stored as 0-based image tables; the
/// product convention applies the last permutation first.
struct PermutationWitness {
    int degree = 0;
    std::vector<std::vector<int>> perms;
};

/// "(1 2 5)(3 4)" with 1-based points, fixed points omitted unless the
/// permutation is the identity.
std::string format_cycles(const std::vector<int>& perm);
std::string format_witness(const PermutationWitness& w);

bool verify_permutation_witness(const CandidateCover& c, const PermutationWitness& w);

enum class SearchMode { Randomized, Backtracking, CharacterCount };

struct SearchBudget {
    long long max_nodes = 50'000'000;
    double max_seconds = 600.0;
    std::uint64_t seed = 0;
    SearchMode mode = SearchMode::Backtracking;
};

enum class OracleStatus { Realizable, Exceptional, BudgetExceeded };

std::string to_string(OracleStatus s);

struct OracleResult {
    OracleStatus status = OracleStatus::BudgetExceeded;
    std::optional<PermutationWitness> witness;
    bool known_result = false;  // base surface not a sphere: realizable, no tuple built
    long long nodes = 0;
};

/// Backtracking search for a witness tuple. The first permutation is frozen
/// as the canonical representative of its cycle type (the one symmetry
/// reduction that matters), the middle ones are enumerated cycle by cycle,
/// and the last is derived from the product condition with its cycle type
/// enforced incrementally. Randomized mode reshuffles the image choice order
/// between restarts, deterministically in the seed. An exhausted tree
/// reports Exceptional; an exhausted budget reports BudgetExceeded.
OracleResult find_witness(const CandidateCover& c, const SearchBudget& budget);

/// Complete backtracking over the conjugation quotient; Exceptional only
/// when the whole tree has been traversed.
OracleResult exhaustive_decide(const CandidateCover& c, const SearchBudget& budget);

/// Symmetric-group characters by Murnaghan-Nakayama border-strip recursion
/// with memoization, dimensions by the hook length formula. Not thread-safe;
/// use one instance per thread.
class CharacterTable {
public:
    const mpz_class& chi(const std::vector<int>& lambda, const std::vector<int>& alpha);
    const mpz_class& dimension(const std::vector<int>& lambda);

private:
    std::map<std::vector<int>, mpz_class> chi_memo_;
    std::map<std::vector<int>, mpz_class> dim_memo_;
};

/// Exact counts of permutation tuples with prescribed cycle types and
/// identity product, by the Frobenius character sum; count_transitive
/// refines by the orbit-of-a-point sieve. Memoized across calls.
class TupleCounter {
public:
    mpz_class count_tuples(const std::vector<Partition>& types, int d);
    mpz_class count_transitive(const std::vector<Partition>& types, int d);

private:
    mpz_class count_tuples_raw(const std::vector<std::vector<int>>& types, int d);
    mpz_class count_transitive_raw(const std::vector<std::vector<int>>& types, int d);

    CharacterTable chars_;
    std::map<std::vector<int>, mpz_class> tuples_memo_;
    std::map<std::vector<int>, mpz_class> transitive_memo_;
};

/// Convenience entry points backed by a thread-local TupleCounter.
mpz_class count_tuples(const std::vector<Partition>& types, int d);
mpz_class count_transitive(const std::vector<Partition>& types, int d);

}  // namespace hurwitz
