#include "prodmatch/space.hpp"

#include <algorithm>
#include <charconv>

#include "prodmatch/errors.hpp"

namespace prodmatch {

ProductSpace::ProductSpace(std::vector<int> part_sizes, std::vector<int> uniformities)
    : n_(std::move(part_sizes)), k_(std::move(uniformities)) {
    if (n_.empty() || n_.size() != k_.size())
        throw InputError("product space needs matching nonempty n and k lists");
    offsets_.reserve(n_.size());
    for (std::size_t i = 0; i < n_.size(); ++i) {
        if (k_[i] < 1 || n_[i] < k_[i])
            throw InputError("part " + std::to_string(i + 1) + " violates 1 <= k_i <= n_i");
        offsets_.push_back(total_vertices_);
        total_vertices_ += n_[i];
        total_uniformity_ += k_[i];
    }
    if (total_vertices_ > BitVec::kCapacity)
        throw InputError("ground set has " + std::to_string(total_vertices_) +
                         " vertices, above the representation limit of " +
                         std::to_string(BitVec::kCapacity));
    masks_.resize(n_.size());
    for (std::size_t i = 0; i < n_.size(); ++i)
        for (int b = offsets_[i]; b < offsets_[i] + n_[i]; ++b) masks_[i].set(b);
}

BigInt ProductSpace::edge_space_size() const {
    BigInt total = 1;
    for (std::size_t i = 0; i < n_.size(); ++i) total *= binom(n_[i], k_[i]);
    return total;
}

Vertex ProductSpace::vertex_at(int bit) const {
    for (int i = part_count(); i >= 1; --i)
        if (bit >= offsets_[i - 1]) return Vertex{i, bit - offsets_[i - 1] + 1};
    return Vertex{};
}

bool vertex_precedes(const ProductSpace& space, Vertex a, Vertex b) {
    if (!space.valid_vertex(a) || !space.valid_vertex(b))
        throw InputError("vertex index out of range");
    return a.part == b.part && a.pos < b.pos;
}

bool is_valid_edge(const ProductSpace& space, const Edge& e) {
    int seen = 0;
    for (int i = 1; i <= space.part_count(); ++i) {
        int c = (e & space.part_mask(i)).count();
        if (c != space.uniformity(i)) return false;
        seen += c;
    }
    return seen == e.count();
}

bool edge_leq(const ProductSpace& space, const Edge& a, const Edge& b) {
    for (int i = 1; i <= space.part_count(); ++i) {
        // Set bits within a part are already in ascending position order.
        std::vector<int> pa, pb;
        (a & space.part_mask(i)).for_each_bit([&](int bit) { pa.push_back(bit); });
        (b & space.part_mask(i)).for_each_bit([&](int bit) { pb.push_back(bit); });
        if (pa.size() != pb.size())
            throw InputError("edge_leq requires edges of the same shape");
        for (std::size_t t = 0; t < pa.size(); ++t)
            if (pa[t] > pb[t]) return false;
    }
    return true;
}

namespace {

// Advances `comb` (ascending positions, 0-based) to the next k-combination
// of {0..n-1} in lexicographic order. Returns false after the last one.
bool next_combination(std::vector<int>& comb, int n) {
    int k = static_cast<int>(comb.size());
    for (int i = k - 1; i >= 0; --i) {
        if (comb[i] < n - (k - i)) {
            ++comb[i];
            for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
            return true;
        }
    }
    return false;
}

} // namespace

void for_each_edge(const ProductSpace& space, const std::function<void(const Edge&)>& fn) {
    int l = space.part_count();
    std::vector<std::vector<int>> combs(l);
    for (int i = 1; i <= l; ++i) {
        combs[i - 1].resize(space.uniformity(i));
        for (int t = 0; t < space.uniformity(i); ++t) combs[i - 1][t] = t;
    }
    auto make_edge = [&] {
        Edge e;
        for (int i = 1; i <= l; ++i)
            for (int p : combs[i - 1]) e.set(space.part_begin(i) + p);
        return e;
    };
    // Odometer over per-part combinations, last part fastest.
    for (;;) {
        fn(make_edge());
        int i = l - 1;
        while (i >= 0 && !next_combination(combs[i], space.part_size(i + 1))) {
            for (int t = 0; t < space.uniformity(i + 1); ++t) combs[i][t] = t;
            --i;
        }
        if (i < 0) break;
    }
}

std::vector<Edge> all_edges(const ProductSpace& space, std::uint64_t cap) {
    BigInt total = space.edge_space_size();
    if (total > cap)
        throw ResourceError("space holds " + total.str() + " edges, above the cap of " +
                            std::to_string(cap));
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(total));
    for_each_edge(space, [&](const Edge& e) { out.push_back(e); });
    return out;
}

std::string format_vertex(Vertex v) {
    return std::to_string(v.part) + ":" + std::to_string(v.pos);
}

Vertex parse_vertex(std::string_view token) {
    auto colon = token.find(':');
    if (colon == std::string_view::npos)
        throw InputError("vertex token '" + std::string(token) + "' is not of the form i:j");
    Vertex v;
    auto parse_int = [&](std::string_view s, int& out) {
        auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
        if (ec != std::errc{} || p != s.data() + s.size())
            throw InputError("bad integer in vertex token '" + std::string(token) + "'");
    };
    parse_int(token.substr(0, colon), v.part);
    parse_int(token.substr(colon + 1), v.pos);
    if (v.part < 1 || v.pos < 1)
        throw InputError("vertex token '" + std::string(token) + "' must be 1-based");
    return v;
}

std::vector<Vertex> edge_vertices(const ProductSpace& space, const Edge& e) {
    std::vector<Vertex> out;
    out.reserve(e.count());
    e.for_each_bit([&](int bit) { out.push_back(space.vertex_at(bit)); });
    return out;
}

std::string format_edge(const ProductSpace& space, const Edge& e) {
    std::string out;
    bool first = true;
    for (Vertex v : edge_vertices(space, e)) {
        if (!first) out += ' ';
        out += format_vertex(v);
        first = false;
    }
    return out;
}

} // namespace prodmatch
