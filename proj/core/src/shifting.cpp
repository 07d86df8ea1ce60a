#include "prodmatch/shifting.hpp"

#include <algorithm>

#include "prodmatch/errors.hpp"

namespace prodmatch {

namespace {

/// Applies S_ab to a sorted edge list in place; returns how many edges moved.
/// Membership ("is the rewrite already present?") is tested against the
/// edge set as it was before this application.
std::size_t shift_edges(const ProductSpace& space, std::vector<Edge>& edges,
                        Vertex a, Vertex b) {
    int abit = space.bit_index(a);
    int bbit = space.bit_index(b);
    const std::vector<Edge> before = edges;
    auto present = [&](const Edge& e) {
        return std::binary_search(before.begin(), before.end(), e);
    };
    std::size_t moved = 0;
    for (Edge& e : edges) {
        if (!e.test(bbit) || e.test(abit)) continue;
        Edge shifted = e;
        shifted.reset(bbit);
        shifted.set(abit);
        if (!present(shifted)) {
            e = shifted;
            ++moved;
        }
    }
    if (moved) std::sort(edges.begin(), edges.end());
    return moved;
}

void require_comparable(const ProductSpace& space, Vertex a, Vertex b) {
    if (!vertex_precedes(space, a, b))
        throw InputError("shift requires a strictly below b in one part, got " +
                         format_vertex(a) + " and " + format_vertex(b));
}

/// One sweep over all adjacent pairs of all parts, applying `apply` at each.
template <typename Fn>
void sweep_adjacent(const ProductSpace& space, Fn&& apply) {
    for (int part = 1; part <= space.part_count(); ++part)
        for (int pos = 1; pos < space.part_size(part); ++pos)
            apply(Vertex{part, pos}, Vertex{part, pos + 1});
}

} // namespace

Family shift_once(const Family& family, Vertex a, Vertex b) {
    require_comparable(family.space(), a, b);
    std::vector<Edge> edges(family.edges().begin(), family.edges().end());
    shift_edges(family.space(), edges, a, b);
    return Family(family.space(), std::move(edges));
}

std::pair<Family, ShiftLog> shift_to_fixpoint(const Family& family) {
    std::vector<Edge> edges(family.edges().begin(), family.edges().end());
    ShiftLog log;
    bool dirty = true;
    while (dirty) {
        dirty = false;
        ++log.passes;
        sweep_adjacent(family.space(), [&](Vertex a, Vertex b) {
            std::size_t moved = shift_edges(family.space(), edges, a, b);
            if (moved) {
                log.steps.push_back({a, b, moved});
                dirty = true;
            }
        });
    }
    return {Family(family.space(), std::move(edges)), std::move(log)};
}

std::pair<FamilyTuple, ShiftLog> shift_tuple_to_fixpoint(const FamilyTuple& tuple) {
    const ProductSpace& space = tuple.space();
    std::vector<std::vector<Edge>> all;
    all.reserve(static_cast<std::size_t>(tuple.count()));
    for (const Family& f : tuple.families())
        all.emplace_back(f.edges().begin(), f.edges().end());

    ShiftLog log;
    bool dirty = true;
    while (dirty) {
        dirty = false;
        ++log.passes;
        sweep_adjacent(space, [&](Vertex a, Vertex b) {
            std::size_t moved = 0;
            for (auto& edges : all) moved += shift_edges(space, edges, a, b);
            if (moved) {
                log.steps.push_back({a, b, moved});
                dirty = true;
            }
        });
    }
    std::vector<Family> out;
    out.reserve(all.size());
    for (auto& edges : all) out.emplace_back(space, std::move(edges));
    return {FamilyTuple(std::move(out)), std::move(log)};
}

bool is_shifted(const Family& family) {
    const ProductSpace& space = family.space();
    for (int part = 1; part <= space.part_count(); ++part) {
        for (int p = 1; p < space.part_size(part); ++p) {
            for (int q = p + 1; q <= space.part_size(part); ++q) {
                int abit = space.bit_index({part, p});
                int bbit = space.bit_index({part, q});
                for (const Edge& e : family.edges()) {
                    if (!e.test(bbit) || e.test(abit)) continue;
                    Edge shifted = e;
                    shifted.reset(bbit);
                    shifted.set(abit);
                    if (!family.contains(shifted)) return false;
                }
            }
        }
    }
    return true;
}

bool is_downward_closed(const Family& family) {
    // Closure under the covers of the dominance order (slide one vertex one
    // position down) is equivalent to closure under the full order, since
    // every strict dominance decomposes into such steps.
    const ProductSpace& space = family.space();
    for (const Edge& e : family.edges()) {
        bool ok = true;
        e.for_each_bit([&](int bit) {
            if (!ok) return;
            Vertex v = space.vertex_at(bit);
            if (v.pos == 1) return;
            int below = space.bit_index({v.part, v.pos - 1});
            if (e.test(below)) return;
            Edge slid = e;
            slid.reset(bit);
            slid.set(below);
            if (!family.contains(slid)) ok = false;
        });
        if (!ok) return false;
    }
    return true;
}

} // namespace prodmatch
