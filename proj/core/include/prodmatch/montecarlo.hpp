#ifndef PRODMATCH_MONTECARLO_HPP
#define PRODMATCH_MONTECARLO_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "prodmatch/family.hpp"
#include "prodmatch/matching.hpp"
#include "prodmatch/numbers.hpp"
#include "prodmatch/rng.hpp"

namespace prodmatch {

/// A uniform random m-matching over parts [first_part, last_part]: per part,
/// a uniform random permutation of the part's vertices is cut into its first
/// m blocks of k_i consecutive entries; block t across parts forms edge t.
/// The returned partial edges are pairwise disjoint with exactly k_i
/// vertices in every covered part. Uniform over indexed m-matchings by
/// symmetry. Requires m <= floor(n_i/k_i) for every covered part.
std::vector<Edge> sample_matching(const ProductSpace& space, int first_part, int last_part,
                                  int m, Xoshiro256StarStar& rng);

/// The bipartite incidence between two complementary partial matchings:
/// rows[i] has bit j set iff a[i] u b[j] is in the family; x is the total
/// number of such pairs. The a-side must cover a prefix of the parts and the
/// b-side exactly the remaining parts.
struct BipartiteGraph {
    std::uint64_t x = 0;
    std::vector<BitVec> rows;
};

BipartiteGraph build_bipartite(const ProductSpace& space, const std::vector<Edge>& a,
                               const std::vector<Edge>& b, const Family& family);

/// Monte Carlo reproduction of the slice-averaging identity: with B_1..B_m a
/// random matching over parts 2..l and F(B) the part-1 sets completing B
/// into the family, E|F(B_i)| equals |F| / prod_{i>=2} C(n_i,k_i) exactly.
/// Additionally, whenever the preconditions of the per-trial sum inequality
/// hold for s = nu(F), every trial must satisfy
///   sum_i |F(B_i)| <= (m+1) s C(n_1-1, k_1-1).
struct AveragingReport {
    int m = 0;
    std::uint64_t trials = 0;
    int nu_value = 0;              // s used in the per-trial inequality
    BigRat exact_slice_mean;       // |F| / prod_{i>=2} C(n_i,k_i)
    BigRat sample_slice_mean;      // observed mean of |F(B_i)|
    BigRat sample_mean;            // observed mean of per-trial sums S_t
    BigRat sample_variance;        // Bessel-corrected variance of S_t
    bool mean_within_band = false; // (mean - target)^2 <= 25 var / trials
    bool sum_checked = false;      // per-trial inequality preconditions held
    BigInt sum_threshold;          // (m+1) s C(n_1-1,k_1-1)
    std::uint64_t sum_violations = 0;
    bool pass = false;
};

AveragingReport averaging_check(const Family& family, std::uint64_t trials,
                                std::uint64_t seed, int threads = 1);

/// The mean/variance/tail bookkeeping for X = e(G_t) over one family:
/// A-side sampled from part 1, B-side from parts 2..l, m = floor(n_1/k_1).
/// Fails only when the sample mean leaves the 5-standard-error band around
/// alpha m^2, or (when alpha >= 6 s k_1 / n_1) the tail frequency of
/// {X <= (s-1)m} exceeds 1/s by more than 5 standard errors. The variance
/// is compared against 3 alpha m^3 but only reported: that bound may be
/// loose and its failure is not an implementation bug.
struct ConcentrationReport {
    int m = 0;
    int s = 0;
    std::uint64_t trials = 0;
    BigRat alpha;
    BigInt sum_x;
    BigInt sum_x2;
    BigRat sample_mean;
    BigRat sample_variance;
    BigRat expected_mean;   // alpha m^2
    BigRat variance_bound;  // 3 alpha m^3
    bool variance_within_bound = false;
    bool mean_within_band = false;
    std::uint64_t tail_count = 0; // #{X <= (s-1)m}
    BigRat tail_freq;
    BigRat tail_threshold; // 1/s
    bool tail_applicable = false;
    std::string tail_verdict; // "clear" | "inconclusive" | "fail" | "n/a"
    bool pass = false;
    std::vector<std::uint32_t> samples; // raw X per trial
};

ConcentrationReport concentration_run(const Family& family, int s, std::uint64_t trials,
                                      std::uint64_t seed, int threads = 1);

/// Compound rainbow run over a tuple: per trial, builds all s bipartite
/// graphs on one shared (A, B) pair and reports whether every one clears the
/// threshold e(G_t) > (s-1)m; whenever all clear, a rainbow matching is
/// extracted from the bipartite graphs and verified. Extraction must never
/// fail on a clear trial.
struct RainbowRunReport {
    int m = 0;
    int s = 0;
    std::uint64_t trials = 0;
    BigInt threshold; // (s-1) m
    std::vector<std::uint64_t> clear_count_per_family;
    std::uint64_t all_clear_trials = 0;
    std::uint64_t certificates_found = 0;
    std::uint64_t extraction_failures = 0;
    std::optional<MatchingCertificate> sample_certificate; // earliest clear trial
    bool pass = false; // no extraction failures
};

RainbowRunReport rainbow_run(const FamilyTuple& tuple, std::uint64_t trials,
                             std::uint64_t seed, int threads = 1);

} // namespace prodmatch

#endif
