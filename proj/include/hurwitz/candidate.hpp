#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hurwitz/partition.hpp"

namespace hurwitz {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CandidateError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A candidate branched cover between closed orientable surfaces: genera,
/// degree, and one partition of the degree per branching point. Instances
/// built through make_candidate / parse_candidate are canonical and satisfy
/// the Riemann-Hurwitz relation; treat them as immutable.
struct CandidateCover {
    int base_genus = 0;
    int cover_genus = 0;
    int degree = 0;
    std::vector<Partition> partitions;

    int num_branch_points() const { return static_cast<int>(partitions.size()); }
    int total_length() const;

    bool operator==(const CandidateCover& o) const;
    bool operator<(const CandidateCover& o) const;
};

/// Canonical ordering of partitions inside a candidate:
/// largest entry descending, then length ascending, then entries
/// lexicographically descending.
bool canonical_partition_before(const Partition& a, const Partition& b);

/// Validates and canonicalizes. The cover genus is derived from
/// Riemann-Hurwitz; a supplied value must agree. Throws CandidateError on
/// partition-sum mismatch, Riemann-Hurwitz violation (odd or too large
/// Euler characteristic), or a partition with no entry above 1.
CandidateCover make_candidate(int base_genus, std::optional<int> cover_genus,
                              int degree, std::vector<Partition> partitions);

/// Grammar: ["g=" INT "->"] ["g=" INT] INT ":" "(" INT {"," INT} ")" { ... }
/// The arrow-prefixed genus is the cover's, the bare one the base's;
/// defaults are base genus 0 and cover genus derived from Riemann-Hurwitz.
/// Whitespace between tokens is insignificant.
CandidateCover parse_candidate(const std::string& text);

/// Grammar-only parse: canonicalizes but skips the semantic checks, so
/// invalid data can still be fed to validate_candidate for a report.
/// Throws ParseError on syntax errors only.
CandidateCover parse_candidate_unchecked(const std::string& text);

/// Canonical text, e.g. "8: (5,1,1,1)(4,4)(2,2,2,2)". parse(format(c)) == c.
std::string format_candidate(const CandidateCover& c);

}  // namespace hurwitz
