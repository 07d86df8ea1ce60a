#ifndef PRODMATCH_FAMILY_HPP
#define PRODMATCH_FAMILY_HPP

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "prodmatch/space.hpp"

namespace prodmatch {

/// A deduplicated set of edges over one product space. Edges are stored
/// sorted, so iteration order, witnesses and serialized output are all
/// deterministic. Immutable apart from insert().
class Family {
public:
    explicit Family(ProductSpace space) : space_(std::move(space)) {}

    /// Validates every edge, sorts and deduplicates.
    Family(ProductSpace space, std::vector<Edge> edges);

    const ProductSpace& space() const { return space_; }
    std::span<const Edge> edges() const { return edges_; }
    std::size_t size() const { return edges_.size(); }
    bool empty() const { return edges_.empty(); }

    bool contains(const Edge& e) const;

    /// Validates and inserts; returns false if already present.
    bool insert(const Edge& e);

    bool operator==(const Family& o) const { return space_ == o.space_ && edges_ == o.edges_; }

private:
    ProductSpace space_;
    std::vector<Edge> edges_; // sorted, unique
};

/// An ordered list of s families sharing one product space.
class FamilyTuple {
public:
    explicit FamilyTuple(std::vector<Family> families);

    const std::vector<Family>& families() const { return families_; }
    const Family& at(int t) const { return families_[static_cast<std::size_t>(t)]; }
    int count() const { return static_cast<int>(families_.size()); }
    const ProductSpace& space() const { return families_.front().space(); }

private:
    std::vector<Family> families_;
};

/// Family file format: header `space l n_1 k_1 ... n_l k_l`, then one edge
/// per line as space-separated `i:j` tokens. Rejects duplicate vertices and
/// wrong per-part counts; duplicate edge lines collapse into one edge.
Family read_family(std::istream& in);
Family load_family(const std::string& path);
void write_family(const Family& f, std::ostream& out);
void save_family(const Family& f, const std::string& path);

} // namespace prodmatch

#endif
