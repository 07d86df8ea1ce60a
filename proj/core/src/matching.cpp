#include "prodmatch/matching.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "prodmatch/errors.hpp"

namespace prodmatch {

namespace {

/// Upper bound on how many more disjoint edges can fit given the vertices
/// already used: each further edge needs k_i free vertices in part i.
int budget_bound(const ProductSpace& space, const Edge& used) {
    int bound = std::numeric_limits<int>::max();
    for (int i = 1; i <= space.part_count(); ++i) {
        int free = space.part_size(i) - (used & space.part_mask(i)).count();
        bound = std::min(bound, free / space.uniformity(i));
    }
    return bound;
}

struct NuSearch {
    const std::vector<Edge>& edges; // conflict-sorted
    const ProductSpace& space;
    std::optional<int> cap;
    int best = 0;
    std::vector<Edge> best_set;
    std::vector<Edge> chosen;
    bool stopped = false;

    void run(std::size_t from, const Edge& used) {
        if (stopped) return;
        if (static_cast<int>(chosen.size()) > best) {
            best = static_cast<int>(chosen.size());
            best_set = chosen;
            if (cap && best >= *cap + 1) {
                stopped = true;
                return;
            }
        }
        int remaining = static_cast<int>(edges.size() - from);
        int ceiling = static_cast<int>(chosen.size()) +
                      std::min(remaining, budget_bound(space, used));
        if (ceiling <= best) return;
        for (std::size_t i = from; i < edges.size(); ++i) {
            if (used.intersects(edges[i])) continue;
            chosen.push_back(edges[i]);
            run(i + 1, used | edges[i]);
            chosen.pop_back();
            if (stopped) return;
            // Re-test the prune after each completed branch.
            remaining = static_cast<int>(edges.size() - i - 1);
            ceiling = static_cast<int>(chosen.size()) +
                      std::min(remaining, budget_bound(space, used));
            if (ceiling <= best) return;
        }
    }
};

} // namespace

MatchingResult matching_number(const Family& family, std::optional<int> cap) {
    if (cap && *cap < 0) throw InputError("matching cap must be non-negative");
    MatchingResult result;
    if (family.empty()) return result;

    std::vector<Edge> order(family.edges().begin(), family.edges().end());
    // Fewest conflicts first: edges clashing with few others go early so the
    // greedy descent finds large matchings (and tight prunes) quickly. Ties
    // keep the family's sorted order, so the search is deterministic.
    std::vector<int> conflicts(order.size(), 0);
    for (std::size_t a = 0; a < order.size(); ++a)
        for (std::size_t b = a + 1; b < order.size(); ++b)
            if (order[a].intersects(order[b])) {
                ++conflicts[a];
                ++conflicts[b];
            }
    std::vector<std::size_t> idx(order.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t a, std::size_t b) { return conflicts[a] < conflicts[b]; });
    std::vector<Edge> sorted;
    sorted.reserve(order.size());
    for (auto i : idx) sorted.push_back(order[i]);

    NuSearch search{sorted, family.space(), cap};
    search.run(0, Edge{});

    result.value = search.best;
    result.capped = search.stopped;
    result.witness.edges = std::move(search.best_set);
    std::sort(result.witness.edges.begin(), result.witness.edges.end());
    return result;
}

namespace {

struct RainbowSearch {
    const std::vector<const Family*>& order; // smallest family first
    std::vector<const Edge*> picked;
    bool found = false;

    void run(std::size_t t, const Edge& used) {
        if (found) return;
        if (t == order.size()) {
            found = true;
            return;
        }
        for (const Edge& e : order[t]->edges()) {
            if (used.intersects(e)) continue;
            picked.push_back(&e);
            run(t + 1, used | e);
            if (found) return;
            picked.pop_back();
        }
    }
};

} // namespace

RainbowResult has_rainbow_matching(const FamilyTuple& tuple) {
    int s = tuple.count();
    std::vector<int> by_size(static_cast<std::size_t>(s));
    std::iota(by_size.begin(), by_size.end(), 0);
    std::stable_sort(by_size.begin(), by_size.end(), [&](int a, int b) {
        return tuple.at(a).size() < tuple.at(b).size();
    });
    std::vector<const Family*> order;
    order.reserve(static_cast<std::size_t>(s));
    for (int t : by_size) order.push_back(&tuple.at(t));

    RainbowSearch search{order};
    search.run(0, Edge{});

    RainbowResult result;
    result.found = search.found;
    if (search.found) {
        // Report in input order: picked[p] came from family by_size[p].
        result.witness.edges.resize(static_cast<std::size_t>(s));
        result.witness.family_indices.resize(static_cast<std::size_t>(s));
        std::vector<std::pair<int, const Edge*>> tagged;
        tagged.reserve(static_cast<std::size_t>(s));
        for (int p = 0; p < s; ++p) tagged.emplace_back(by_size[static_cast<std::size_t>(p)], search.picked[static_cast<std::size_t>(p)]);
        std::sort(tagged.begin(), tagged.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        for (int p = 0; p < s; ++p) {
            result.witness.family_indices[static_cast<std::size_t>(p)] = tagged[static_cast<std::size_t>(p)].first + 1;
            result.witness.edges[static_cast<std::size_t>(p)] = *tagged[static_cast<std::size_t>(p)].second;
        }
    }
    return result;
}

OverlapResult is_s_overlapping(const std::vector<Family>& families, int s) {
    if (s < 1) throw InputError("s must be positive");
    int m = static_cast<int>(families.size());
    if (m <= s)
        throw InputError("s-overlapping check needs at least s+1 families, got " +
                         std::to_string(m));
    for (std::size_t i = 1; i < families.size(); ++i)
        if (!(families[i].space() == families[0].space()))
            throw InputError("families live in different spaces");

    // Iterate (s+1)-subsets of indices in lexicographic order; first rainbow
    // system found is the counterexample.
    std::vector<int> pick(static_cast<std::size_t>(s) + 1);
    std::iota(pick.begin(), pick.end(), 0);
    for (;;) {
        bool skip = false;
        for (int i : pick)
            if (families[static_cast<std::size_t>(i)].empty()) skip = true;
        if (!skip) {
            std::vector<Family> chosen;
            chosen.reserve(pick.size());
            for (int i : pick) chosen.push_back(families[static_cast<std::size_t>(i)]);
            RainbowResult r = has_rainbow_matching(FamilyTuple(std::move(chosen)));
            if (r.found) {
                // Map indices back into the caller's list (1-based).
                for (auto& fi : r.witness.family_indices)
                    fi = pick[static_cast<std::size_t>(fi - 1)] + 1;
                return OverlapResult{false, std::move(r.witness)};
            }
        }
        // Advance to the next (s+1)-subset of [0, m).
        int pos = s;
        while (pos >= 0 && pick[static_cast<std::size_t>(pos)] == m - (s + 1) + pos) --pos;
        if (pos < 0) break;
        ++pick[static_cast<std::size_t>(pos)];
        for (int q = pos + 1; q <= s; ++q)
            pick[static_cast<std::size_t>(q)] = pick[static_cast<std::size_t>(q - 1)] + 1;
    }
    return OverlapResult{true, std::nullopt};
}

bool verify_certificate(const ProductSpace& space, const MatchingCertificate& cert) {
    for (const Edge& e : cert.edges)
        if (!is_valid_edge(space, e)) return false;
    for (std::size_t a = 0; a < cert.edges.size(); ++a)
        for (std::size_t b = a + 1; b < cert.edges.size(); ++b)
            if (cert.edges[a].intersects(cert.edges[b])) return false;
    if (!cert.family_indices.empty()) {
        if (cert.family_indices.size() != cert.edges.size()) return false;
        std::vector<int> idx = cert.family_indices;
        std::sort(idx.begin(), idx.end());
        if (std::adjacent_find(idx.begin(), idx.end()) != idx.end()) return false;
        if (idx.front() < 1) return false;
    }
    return true;
}

} // namespace prodmatch
