#ifndef PRODMATCH_BOUNDS_HPP
#define PRODMATCH_BOUNDS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "prodmatch/numbers.hpp"
#include "prodmatch/space.hpp"

namespace prodmatch {

/// Exact evaluation of one named bound formula. `value` is an exact
/// rational (integral for the integer-valued formulas); `floor_value` its
/// floor. No floating point is used anywhere in this module.
struct BoundReport {
    std::string name;
    BigRat value;
    BigInt floor_value;
    std::vector<int> n;
    std::vector<int> k;
    int s = 0;
    std::optional<int> m;                       // families count (overlapping-sum)
    std::optional<int> witness_part;            // 1-based maximizing part
    std::optional<std::string> witness_branch;  // winning branch of a max{...}
    std::optional<std::vector<int>> part_order; // canonical order, 1-based original indices
    bool clamped = false;                       // a binomial clamped to zero
    bool vacuous = false;                       // threshold exceeds its universe size
};

/// Number of edges of the full product, prod_i C(n_i, k_i).
BigInt space_product(const std::vector<int>& n, const std::vector<int>& k);

/// Part indices (1-based) sorted by ascending n_i/k_i, compared exactly by
/// cross-multiplication; ties keep input order.
std::vector<int> canonical_part_order(const std::vector<int>& n, const std::vector<int>& k);

/// Single-part bound max{C((s+1)k-1, k), C(n,k) - C(n-s,k)}.
/// Requires n >= (s+1)k. Branch witness: "clique" or "cover".
BoundReport emc_bound(int n, int k, int s);

/// max_i [C(n_i,k_i) - C(n_i-s,k_i)] * prod_{j!=i} C(n_j,k_j); the maximizing
/// part (smallest index on ties) is the witness.
BoundReport product_matching_bound(const std::vector<int>& n, const std::vector<int>& k, int s);

/// Same expression at s-1: the rainbow-free tuple bound. Requires s >= 1.
BoundReport product_rainbow_bound(const std::vector<int>& n, const std::vector<int>& k, int s);

/// max{s C(n,k), m s C(n-1,k-1)} for m s-overlapping families on one part.
/// Requires n >= (s+1)k and m >= s+1. Branch witness: "space" or "star".
BoundReport overlapping_sum_bound(int n, int k, int s, int m);

/// ((s+1) k_1 / n_1) * prod_i C(n_i,k_i) with parts canonically reordered so
/// n_1/k_1 is minimal. Requires (s+1) k_1 <= n_1 after reordering.
BoundReport averaging_bound(const std::vector<int>& n, const std::vector<int>& k, int s);

/// (6 s k_1 / n_1) * prod_j C(n_j,k_j), canonical order; requires
/// 3 s k_1 <= n_1. Flagged vacuous when the threshold exceeds the space size.
BoundReport rainbow_threshold_bound(const std::vector<int>& n, const std::vector<int>& k, int s);

/// (6 s k_1 / n_1) * prod_j C(n_j - s, k_j), canonical order.
BoundReport claim1_bound(const std::vector<int>& n, const std::vector<int>& k, int s);

/// min over compositions x_1+...+x_l = total of prod_i C(n_i-x_i, k_i).
struct CompositionMin {
    BigInt value;
    std::vector<int> argmin;
    bool clamped = false; // the winning product contains a zero binomial
};

/// Closed-form vertex rule: the minimum sits at a composition with all mass
/// on one part; ties go to the smallest part index.
CompositionMin composition_min(const std::vector<int>& n, const std::vector<int>& k, int total);

/// Independent evaluation by full enumeration of all C(total+l-1, l-1)
/// compositions. Throws ResourceError above `cap` compositions.
CompositionMin composition_min_enumerated(const std::vector<int>& n, const std::vector<int>& k,
                                          int total, std::uint64_t cap = kDefaultEnumerationCap);

/// The chain C(n-s,k)/C(n,k) >= (1 - s/(n-k))^k >= 1 - ks/(n-k) >= 1/2,
/// evaluated link by link in exact rationals. Requires n >= (2s+1)k.
struct RatioChainReport {
    int n = 0;
    int k = 0;
    int s = 0;
    BigRat set_ratio;
    BigRat power_term;
    BigRat linear_term;
    bool link1 = false; // set_ratio >= power_term
    bool link2 = false; // power_term >= linear_term
    bool link3 = false; // linear_term >= 1/2
    bool all_hold = false;
};

RatioChainReport check_ratio_inequality(int n, int k, int s);

} // namespace prodmatch

#endif
