#ifndef PRODMATCH_SPACE_HPP
#define PRODMATCH_SPACE_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "prodmatch/bitvec.hpp"
#include "prodmatch/numbers.hpp"

namespace prodmatch {

/// Default limit on how many edges an operation may materialize.
inline constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;

/// A vertex v_{i,j}: part index and within-part position, both 1-based.
struct Vertex {
    int part = 0;
    int pos = 0;

    bool operator==(const Vertex&) const = default;
};

/// An edge of the direct product: one vertex set with exactly k_i vertices
/// in part i, encoded as a bit vector over the global vertex indexing.
using Edge = BitVec;

/// The ground structure: disjoint parts V_1..V_l with |V_i| = n_i and
/// per-part uniformity k_i. Immutable after construction.
class ProductSpace {
public:
    ProductSpace(std::vector<int> part_sizes, std::vector<int> uniformities);

    int part_count() const { return static_cast<int>(n_.size()); }
    int part_size(int part) const { return n_[part - 1]; }           // n_i
    int uniformity(int part) const { return k_[part - 1]; }          // k_i
    const std::vector<int>& part_sizes() const { return n_; }
    const std::vector<int>& uniformities() const { return k_; }

    int vertex_count() const { return total_vertices_; }             // N
    int edge_uniformity() const { return total_uniformity_; }        // k

    /// Number of edges in the full product, exactly.
    BigInt edge_space_size() const;

    bool valid_vertex(Vertex v) const {
        return v.part >= 1 && v.part <= part_count() && v.pos >= 1 && v.pos <= n_[v.part - 1];
    }

    /// Global bit index of v_{i,j}.
    int bit_index(Vertex v) const { return offsets_[v.part - 1] + v.pos - 1; }
    Vertex vertex_at(int bit) const;

    /// Bit range [first, last) of one part.
    int part_begin(int part) const { return offsets_[part - 1]; }
    int part_end(int part) const { return offsets_[part - 1] + n_[part - 1]; }

    /// Mask with all bits of one part set.
    const BitVec& part_mask(int part) const { return masks_[part - 1]; }

    bool operator==(const ProductSpace& o) const { return n_ == o.n_ && k_ == o.k_; }

private:
    std::vector<int> n_;
    std::vector<int> k_;
    std::vector<int> offsets_;
    std::vector<BitVec> masks_;
    int total_vertices_ = 0;
    int total_uniformity_ = 0;
};

/// Strict partial order on vertices: v_{i,p} < v_{i,q} iff p < q; vertices
/// from different parts are incomparable.
bool vertex_precedes(const ProductSpace& space, Vertex a, Vertex b);

/// True iff the edge has exactly k_i vertices in every part.
bool is_valid_edge(const ProductSpace& space, const Edge& e);

/// Dominance order on edges, reflexive: a <= b iff within every part the
/// ascending position lists satisfy pos_a[t] <= pos_b[t] coordinatewise.
/// Equivalent to the matching-of-vertices definition because vertices in
/// different parts are incomparable.
bool edge_leq(const ProductSpace& space, const Edge& a, const Edge& b);

/// Visits every edge of the product exactly once, in lexicographic order of
/// the sorted vertex list (part 1 subset most significant).
void for_each_edge(const ProductSpace& space, const std::function<void(const Edge&)>& fn);

/// Materializes the full edge set in enumeration order. Throws ResourceError
/// if the space holds more than `cap` edges.
std::vector<Edge> all_edges(const ProductSpace& space, std::uint64_t cap = kDefaultEnumerationCap);

std::string format_vertex(Vertex v);                                   // "i:j"
Vertex parse_vertex(std::string_view token);                           // throws InputError
std::vector<Vertex> edge_vertices(const ProductSpace& space, const Edge& e);
std::string format_edge(const ProductSpace& space, const Edge& e);     // "i:j i:j ..."

} // namespace prodmatch

#endif
