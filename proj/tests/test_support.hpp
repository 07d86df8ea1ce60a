#ifndef PRODMATCH_TEST_SUPPORT_HPP
#define PRODMATCH_TEST_SUPPORT_HPP

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <vector>

#include "prodmatch/family.hpp"
#include "prodmatch/space.hpp"

namespace prodmatch::test {

inline Edge make_edge(const ProductSpace& space, std::initializer_list<Vertex> vs) {
    Edge e;
    for (Vertex v : vs) e.set(space.bit_index(v));
    return e;
}

// Independent matching-number oracle: literally every subset of the family.
inline int nu_by_subsets(const Family& f) {
    auto edges = f.edges();
    const int n = static_cast<int>(edges.size());
    int best = 0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        BitVec used;
        bool disjoint = true;
        int size = 0;
        for (int i = 0; i < n && disjoint; ++i) {
            if (!(mask >> i & 1)) continue;
            if (used.intersects(edges[i])) {
                disjoint = false;
            } else {
                used |= edges[i];
                ++size;
            }
        }
        if (disjoint) best = std::max(best, size);
    }
    return best;
}

// Independent rainbow oracle: every choice of one edge per family.
inline bool rainbow_by_product(const std::vector<Family>& families) {
    std::vector<std::size_t> pick(families.size(), 0);
    for (const auto& f : families)
        if (f.empty()) return false;
    while (true) {
        BitVec used;
        bool disjoint = true;
        for (std::size_t t = 0; t < families.size() && disjoint; ++t) {
            const Edge& e = families[t].edges()[pick[t]];
            if (used.intersects(e)) disjoint = false;
            used |= e;
        }
        if (disjoint) return true;
        std::size_t t = 0;
        while (t < pick.size()) {
            if (++pick[t] < families[t].size()) break;
            pick[t++] = 0;
        }
        if (t == pick.size()) return false;
    }
}

// Test-side random family; std::mt19937_64 keeps it independent of the
// library generator.
inline Family random_test_family(const ProductSpace& space, std::size_t count,
                                 std::mt19937_64& rng) {
    std::vector<Edge> pool = all_edges(space);
    std::shuffle(pool.begin(), pool.end(), rng);
    pool.resize(std::min(count, pool.size()));
    return Family(space, std::move(pool));
}

// Pascal-triangle binomials, the arithmetic oracle for small parameters.
inline unsigned long long pascal(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::vector<unsigned long long> row(static_cast<std::size_t>(n) + 1, 0);
    row[0] = 1;
    for (int i = 1; i <= n; ++i)
        for (int j = i; j >= 1; --j) row[static_cast<std::size_t>(j)] += row[static_cast<std::size_t>(j) - 1];
    return row[static_cast<std::size_t>(k)];
}

} // namespace prodmatch::test

#endif
