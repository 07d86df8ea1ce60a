#ifndef PRODMATCH_CONSTRUCTIONS_HPP
#define PRODMATCH_CONSTRUCTIONS_HPP

#include <cstdint>

#include "prodmatch/family.hpp"

namespace prodmatch {

/// The cover set S_i = first `size` vertices of part `part`.
struct CoverSpec {
    int part = 1;
    int size = 0;
};

/// All edges meeting S_i: the extremal cover construction. Taking S_i as the
/// minimal vertices of its part makes the result shifted by construction.
/// |result| = [C(n_i,k_i) - C(n_i-size,k_i)] * prod_{j!=i} C(n_j,k_j).
Family build_cover_family(const ProductSpace& space, CoverSpec spec,
                          std::uint64_t cap = kDefaultEnumerationCap);

/// Single-part clique construction: all k-subsets of the first (s+1)k-1
/// vertices. Matching number exactly s.
Family build_clique_family(const ProductSpace& space, int s,
                           std::uint64_t cap = kDefaultEnumerationCap);

/// Uniformly random family of `target_size` distinct edges, deterministic
/// under `seed`.
Family random_family(const ProductSpace& space, std::uint64_t target_size,
                     std::uint64_t seed, std::uint64_t cap = kDefaultEnumerationCap);

} // namespace prodmatch

#endif
