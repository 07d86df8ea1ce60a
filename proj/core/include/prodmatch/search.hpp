#ifndef PRODMATCH_SEARCH_HPP
#define PRODMATCH_SEARCH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "prodmatch/family.hpp"
#include "prodmatch/numbers.hpp"

namespace prodmatch {

enum class SearchMode {
    exhaustive,       // iterate all 2^E subsets: the unpruned oracle
    branch_and_bound, // include/exclude DFS with feasibility pruning
};

struct FamilySearchResult {
    std::size_t best_size = 0;
    std::optional<Family> witness;
};

/// Exact maximum of |F| over families with nu(F) <= s. Exhaustive mode
/// requires 2^#edges <= 2^24; branch-and-bound requires #edges <= 64.
/// `shifted_only` restricts the exhaustive iteration to shifted families
/// (the maximum is unchanged: shifting preserves size and never increases
/// nu); it is not available in branch-and-bound mode.
FamilySearchResult max_family_with_matching_cap(const ProductSpace& space, int s,
                                                SearchMode mode, bool shifted_only = false);

struct TupleSearchResult {
    std::size_t best_min_size = 0;
    std::optional<FamilyTuple> witness;
};

/// Exact maximum of min_t |F_t| over rainbow-matching-free s-tuples.
/// Exhaustive only, tiny instances: candidate families are enumerated (by
/// default only shifted ones, preserving the maximum because lockstep
/// shifting keeps tuples rainbow-free) and combined up to reordering, which
/// is safe because both the property and the objective are symmetric.
TupleSearchResult max_rainbow_free_tuple(const ProductSpace& space, int s, SearchMode mode,
                                         bool shifted_only = true);

enum class TheoremKind { matching, rainbow };

/// Three-axis verdict: does the parameter threshold of the theorem hold,
/// does the searched maximum stay within the bound formula, and does the
/// cover construction attain the searched maximum.
struct VerdictReport {
    std::string theorem; // "matching" | "rainbow"
    int s = 0;
    bool threshold_satisfied = false;
    BigInt bound_value;
    std::size_t search_max = 0;
    bool bound_holds = false;
    bool attained = false;
    bool vacuous = false; // the matching/rainbow constraint never binds
    std::optional<Family> search_witness;
    std::optional<double> search_seconds; // filled only when timings requested
};

VerdictReport verify_theorem(const ProductSpace& space, int s, TheoremKind kind,
                             bool with_timings = false);

} // namespace prodmatch

#endif
