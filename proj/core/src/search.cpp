#include "prodmatch/search.hpp"

#include <algorithm>
#include <chrono>

#include "prodmatch/bounds.hpp"
#include "prodmatch/constructions.hpp"
#include "prodmatch/errors.hpp"
#include "prodmatch/matching.hpp"
#include "prodmatch/shifting.hpp"

namespace prodmatch {

namespace {

constexpr std::size_t kExhaustiveEdgeLimit = 24; // 2^24 subsets
constexpr std::size_t kBranchEdgeLimit = 64;

int min_floor_ratio(const ProductSpace& space) {
    int m = space.part_size(1) / space.uniformity(1);
    for (int p = 2; p <= space.part_count(); ++p)
        m = std::min(m, space.part_size(p) / space.uniformity(p));
    return m;
}

bool nu_at_most(const Family& f, int s) {
    return !matching_number(f, s).capped;
}

FamilySearchResult search_exhaustive(const ProductSpace& space, int s, bool shifted_only) {
    std::vector<Edge> pool = all_edges(space);
    if (pool.size() > kExhaustiveEdgeLimit)
        throw ResourceError("exhaustive search over 2^" + std::to_string(pool.size()) +
                            " families exceeds the 2^24 limit");
    FamilySearchResult best;
    std::uint64_t masks = std::uint64_t{1} << pool.size();
    for (std::uint64_t mask = 0; mask < masks; ++mask) {
        std::size_t size = static_cast<std::size_t>(std::popcount(mask));
        if (best.witness && size <= best.best_size) continue;
        std::vector<Edge> edges;
        edges.reserve(size);
        for (std::size_t i = 0; i < pool.size(); ++i)
            if (mask >> i & 1) edges.push_back(pool[i]);
        Family f(space, std::move(edges));
        if (shifted_only && !is_shifted(f)) continue;
        if (!nu_at_most(f, s)) continue;
        best.best_size = size;
        best.witness = std::move(f);
    }
    return best;
}

struct BranchSearch {
    const ProductSpace& space;
    const std::vector<Edge>& pool;
    int s;
    std::size_t best_size = 0;
    std::optional<std::vector<Edge>> best;
    std::vector<Edge> chosen;

    void run(std::size_t idx) {
        if (!best || chosen.size() > best_size) {
            best_size = chosen.size();
            best = chosen;
        }
        if (idx == pool.size()) return;
        if (chosen.size() + (pool.size() - idx) <= best_size) return;
        // Include branch first: feasible supersets are found early, which
        // tightens the size prune.
        chosen.push_back(pool[idx]);
        if (nu_at_most(Family(space, chosen), s)) run(idx + 1);
        chosen.pop_back();
        if (chosen.size() + (pool.size() - idx - 1) > best_size) run(idx + 1);
    }
};

} // namespace

FamilySearchResult max_family_with_matching_cap(const ProductSpace& space, int s,
                                                SearchMode mode, bool shifted_only) {
    if (s < 0) throw InputError("s must be non-negative");
    if (s >= min_floor_ratio(space)) {
        // The constraint never binds: the whole space is the maximum.
        FamilySearchResult r;
        r.witness = Family(space, all_edges(space));
        r.best_size = r.witness->size();
        return r;
    }
    if (mode == SearchMode::exhaustive) return search_exhaustive(space, s, shifted_only);

    if (shifted_only)
        throw InputError("shifted-only filtering is supported in exhaustive mode only");
    std::vector<Edge> pool = all_edges(space);
    if (pool.size() > kBranchEdgeLimit)
        throw ResourceError("branch-and-bound search over " + std::to_string(pool.size()) +
                            " edges exceeds the limit of 64");
    BranchSearch search{space, pool, s};
    search.run(0);
    FamilySearchResult r;
    r.best_size = search.best_size;
    if (search.best) r.witness = Family(space, *search.best);
    return r;
}

TupleSearchResult max_rainbow_free_tuple(const ProductSpace& space, int s, SearchMode mode,
                                         bool shifted_only) {
    if (s < 2) throw InputError("rainbow-free tuple search needs s >= 2");
    if (mode != SearchMode::exhaustive)
        throw InputError("rainbow-free tuple search supports exhaustive mode only");
    std::vector<Edge> pool = all_edges(space);
    if (pool.size() > kExhaustiveEdgeLimit)
        throw ResourceError("tuple search over 2^" + std::to_string(pool.size()) +
                            " candidate families exceeds the 2^24 limit");

    std::vector<Family> candidates;
    std::uint64_t masks = std::uint64_t{1} << pool.size();
    for (std::uint64_t mask = 0; mask < masks; ++mask) {
        std::vector<Edge> edges;
        for (std::size_t i = 0; i < pool.size(); ++i)
            if (mask >> i & 1) edges.push_back(pool[i]);
        Family f(space, std::move(edges));
        if (shifted_only && !is_shifted(f)) continue;
        candidates.push_back(std::move(f));
    }
    double combos = 1;
    for (int t = 0; t < s; ++t) combos *= static_cast<double>(candidates.size() + t) / (t + 1);
    if (combos > static_cast<double>(1 << 24))
        throw ResourceError("tuple search space too large: ~" + std::to_string(combos) +
                            " candidate tuples");

    // Rainbow-freeness and min-size are invariant under permuting the tuple,
    // so combinations with repetition suffice.
    TupleSearchResult best;
    std::vector<std::size_t> pick(static_cast<std::size_t>(s), 0);
    auto rec = [&](auto&& self, std::size_t t, std::size_t from) -> void {
        if (t == pick.size()) {
            std::size_t min_size = candidates[pick[0]].size();
            for (std::size_t q : pick) min_size = std::min(min_size, candidates[q].size());
            if (best.witness && min_size <= best.best_min_size) return;
            std::vector<Family> tuple;
            tuple.reserve(pick.size());
            for (std::size_t q : pick) tuple.push_back(candidates[q]);
            FamilyTuple ft(std::move(tuple));
            if (has_rainbow_matching(ft).found) return;
            best.best_min_size = min_size;
            best.witness = std::move(ft);
            return;
        }
        for (std::size_t c = from; c < candidates.size(); ++c) {
            pick[t] = c;
            self(self, t + 1, c);
        }
    };
    rec(rec, 0, 0);
    return best;
}

VerdictReport verify_theorem(const ProductSpace& space, int s, TheoremKind kind,
                             bool with_timings) {
    VerdictReport r;
    r.s = s;
    const auto& n = space.part_sizes();
    const auto& k = space.uniformities();
    long long l = space.part_count();

    auto start = std::chrono::steady_clock::now();
    if (kind == TheoremKind::matching) {
        r.theorem = "matching";
        r.threshold_satisfied = true;
        for (int p = 1; p <= space.part_count(); ++p) {
            long long kp = space.uniformity(p);
            if (space.part_size(p) < 4 * l * l * kp * kp * s) r.threshold_satisfied = false;
        }
        r.bound_value = product_matching_bound(n, k, s).floor_value;
        r.vacuous = s >= min_floor_ratio(space);

        std::vector<Edge> pool = all_edges(space);
        SearchMode mode = pool.size() <= kExhaustiveEdgeLimit ? SearchMode::exhaustive
                                                              : SearchMode::branch_and_bound;
        FamilySearchResult search = max_family_with_matching_cap(space, s, mode);
        r.search_max = search.best_size;
        r.search_witness = search.witness;
        r.bound_holds = BigInt(search.best_size) <= r.bound_value;

        // Attainment by the best cover construction.
        bool attained = false;
        for (int part = 1; part <= space.part_count(); ++part) {
            int size = std::min(s, space.part_size(part));
            Family cover = build_cover_family(space, {part, size});
            if (cover.size() == search.best_size && nu_at_most(cover, s)) attained = true;
        }
        r.attained = attained;
    } else {
        r.theorem = "rainbow";
        r.threshold_satisfied = true;
        for (int p = 1; p <= space.part_count(); ++p) {
            long long kp = space.uniformity(p);
            if (space.part_size(p) < 8 * l * l * kp * kp * s) r.threshold_satisfied = false;
        }
        r.bound_value = product_rainbow_bound(n, k, s).floor_value;
        r.vacuous = s > min_floor_ratio(space);

        TupleSearchResult search = max_rainbow_free_tuple(space, s, SearchMode::exhaustive);
        r.search_max = search.best_min_size;
        r.bound_holds = BigInt(search.best_min_size) <= r.bound_value;

        bool attained = false;
        for (int part = 1; part <= space.part_count(); ++part) {
            int size = std::min(s - 1, space.part_size(part));
            Family cover = build_cover_family(space, {part, size});
            if (cover.size() != search.best_min_size) continue;
            std::vector<Family> copies(static_cast<std::size_t>(s), cover);
            if (!has_rainbow_matching(FamilyTuple(std::move(copies))).found) attained = true;
        }
        r.attained = attained;
    }
    if (with_timings) {
        auto stop = std::chrono::steady_clock::now();
        r.search_seconds = std::chrono::duration<double>(stop - start).count();
    }
    return r;
}

} // namespace prodmatch
