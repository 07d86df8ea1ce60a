#include "prodmatch/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "prodmatch/errors.hpp"
#include "prodmatch/rng.hpp"

namespace prodmatch {

namespace {

void check_enumeration_cap(const ProductSpace& space, std::uint64_t cap) {
    BigInt total = space.edge_space_size();
    if (total > BigInt(cap))
        throw ResourceError("space holds " + to_decimal(total) +
                            " edges, above the cap of " + std::to_string(cap));
}

} // namespace

Family build_cover_family(const ProductSpace& space, CoverSpec spec, std::uint64_t cap) {
    if (spec.part < 1 || spec.part > space.part_count())
        throw InputError("cover part index out of range: " + std::to_string(spec.part));
    if (spec.size < 0 || spec.size > space.part_size(spec.part))
        throw InputError("cover size out of range: " + std::to_string(spec.size));
    check_enumeration_cap(space, cap);

    BitVec cover;
    for (int j = 1; j <= spec.size; ++j)
        cover.set(space.bit_index({spec.part, j}));

    std::vector<Edge> edges;
    for_each_edge(space, [&](const Edge& e) {
        if (e.intersects(cover)) edges.push_back(e);
    });
    return Family(space, std::move(edges));
}

Family build_clique_family(const ProductSpace& space, int s, std::uint64_t cap) {
    if (space.part_count() != 1)
        throw InputError("clique construction is defined for a single part");
    if (s < 0) throw InputError("s must be non-negative");
    int k = space.uniformity(1);
    int top = (s + 1) * k - 1;
    if (top > space.part_size(1))
        throw InputError("clique construction needs (s+1)k-1 <= n, got (s+1)k-1 = " +
                         std::to_string(top));
    check_enumeration_cap(space, cap);

    std::vector<Edge> edges;
    for_each_edge(space, [&](const Edge& e) {
        bool inside = true;
        e.for_each_bit([&](int bit) {
            if (space.vertex_at(bit).pos > top) inside = false;
        });
        if (inside) edges.push_back(e);
    });
    return Family(space, std::move(edges));
}

namespace {

/// A uniform random edge: per part, a uniform k_i-subset via partial
/// Fisher-Yates over the part's positions.
Edge random_edge(const ProductSpace& space, Xoshiro256StarStar& rng,
                 std::vector<std::vector<int>>& scratch) {
    Edge e;
    for (int part = 1; part <= space.part_count(); ++part) {
        auto& positions = scratch[static_cast<std::size_t>(part - 1)];
        positions.resize(static_cast<std::size_t>(space.part_size(part)));
        std::iota(positions.begin(), positions.end(), 1);
        std::size_t take = static_cast<std::size_t>(space.uniformity(part));
        rng.shuffle_prefix(positions, take);
        for (std::size_t t = 0; t < take; ++t)
            e.set(space.bit_index({part, positions[t]}));
    }
    return e;
}

} // namespace

Family random_family(const ProductSpace& space, std::uint64_t target_size,
                     std::uint64_t seed, std::uint64_t cap) {
    BigInt total = space.edge_space_size();
    if (BigInt(target_size) > total)
        throw InputError("requested " + std::to_string(target_size) +
                         " edges but the space holds only " + to_decimal(total));

    Xoshiro256StarStar rng(seed);
    std::vector<Edge> edges;

    if (total <= BigInt(cap)) {
        // Small space: sample positions of the full enumeration.
        std::vector<Edge> pool = all_edges(space, cap);
        std::vector<int> idx(pool.size());
        std::iota(idx.begin(), idx.end(), 0);
        rng.shuffle_prefix(idx, static_cast<std::size_t>(target_size));
        edges.reserve(static_cast<std::size_t>(target_size));
        for (std::uint64_t t = 0; t < target_size; ++t)
            edges.push_back(pool[static_cast<std::size_t>(idx[t])]);
    } else {
        if (target_size > cap)
            throw ResourceError("requested " + std::to_string(target_size) +
                                " edges, above the cap of " + std::to_string(cap));
        // Large space: rejection-sample distinct edges; target <= cap < total,
        // so collisions are rare.
        std::unordered_set<Edge> seen;
        std::vector<std::vector<int>> scratch(static_cast<std::size_t>(space.part_count()));
        while (seen.size() < target_size)
            seen.insert(random_edge(space, rng, scratch));
        edges.assign(seen.begin(), seen.end());
    }
    return Family(space, std::move(edges));
}

} // namespace prodmatch
