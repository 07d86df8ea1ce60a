#ifndef PRODMATCH_MATCHING_HPP
#define PRODMATCH_MATCHING_HPP

#include <optional>
#include <vector>

#include "prodmatch/family.hpp"

namespace prodmatch {

/// A set of pairwise-disjoint edges. For rainbow certificates,
/// family_indices[t] is the 1-based index of the family edges[t] came from;
/// empty for plain matching certificates.
struct MatchingCertificate {
    std::vector<Edge> edges;
    std::vector<int> family_indices;
};

struct MatchingResult {
    int value = 0;       // nu(F), or cap+1 when capped
    bool capped = false; // true: search stopped after finding cap+1 disjoint edges
    MatchingCertificate witness;
};

/// Exact matching number by branch and bound: edges are tried in order of
/// fewest conflicts first, branches are cut when the remaining edge count
/// or the per-part vertex budget cannot beat the best matching found.
/// With `cap`, the search exits as soon as cap+1 disjoint edges are found
/// (value = cap+1, capped = true); deciding "nu <= cap?" this way is much
/// cheaper than computing nu exactly.
MatchingResult matching_number(const Family& family, std::optional<int> cap = std::nullopt);

struct RainbowResult {
    bool found = false;
    MatchingCertificate witness; // one edge per family, input order
};

/// Searches for pairwise disjoint representatives, one edge per family.
/// Families are processed smallest-first; the witness is reported in input
/// order with 1-based family indices.
RainbowResult has_rainbow_matching(const FamilyTuple& tuple);

struct OverlapResult {
    bool holds = false;
    std::optional<MatchingCertificate> counterexample; // an (s+1)-rainbow witness
};

/// True iff no s+1 distinct families of the list admit a rainbow matching.
/// The list must contain at least s+1 families for the predicate to apply.
OverlapResult is_s_overlapping(const std::vector<Family>& families, int s);

/// Re-checks a certificate independently of any search: every edge valid in
/// the space, pairwise disjoint, and (when present) family indices distinct.
bool verify_certificate(const ProductSpace& space, const MatchingCertificate& cert);

} // namespace prodmatch

#endif
