#ifndef PRODMATCH_SPECTRAL_HPP
#define PRODMATCH_SPECTRAL_HPP

#include <optional>
#include <vector>

#include "prodmatch/family.hpp"
#include "prodmatch/numbers.hpp"

namespace prodmatch {

/// Exact spectrum of a Kneser graph or a Kronecker product of Kneser
/// graphs: distinct eigenvalues with multiplicities, sorted by descending
/// eigenvalue. degree = top eigenvalue; lambda = second-largest absolute
/// eigenvalue (equal to degree when the graph is disconnected).
struct SpectrumReport {
    std::vector<std::pair<BigInt, BigInt>> pairs; // (eigenvalue, multiplicity)
    BigInt degree;
    BigInt vertex_count;
    BigInt lambda;
    bool degenerate = false; // some part has n < 2k: the graph is empty
    // For products: lambda * (n_1 - k_1) == k_1 * degree, checked when every
    // part has n > 2k and part 1 minimizes n/k. Unset when not applicable.
    std::optional<bool> lambda_ratio_identity;
};

/// Eigenvalues (-1)^i C(n-k-i, k-i) with multiplicities C(n,i) - C(n,i-1),
/// i = 0..k, merged by value.
SpectrumReport kneser_spectrum(int n, int k);

/// Products of per-part eigenvalues with multiplied multiplicities.
SpectrumReport product_graph_spectrum(const std::vector<int>& n, const std::vector<int>& k);

/// Both sides of the mixing inequality
///   |e(G[S]) - (D/N) |S|^2 / 2|  <=  (1/2) lambda (|S|/N)(1-|S|/N) N
/// for a subset S of the product graph on the subset's space, in exact
/// rationals. e(G[S]) counts unordered disjoint pairs within S.
struct MixingReport {
    BigInt edges_within;
    BigInt subset_size;
    BigInt vertex_count;
    BigInt degree;
    BigInt lambda;
    BigRat lhs;
    BigRat rhs;
    bool holds = false;
};

/// lambda defaults to the product-graph value from the spectrum formulas.
MixingReport mixing_audit(const Family& subset,
                          std::optional<BigInt> lambda = std::nullopt,
                          int threads = 1);

} // namespace prodmatch

#endif
