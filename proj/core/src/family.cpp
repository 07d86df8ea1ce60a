#include "prodmatch/family.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "prodmatch/errors.hpp"

namespace prodmatch {

Family::Family(ProductSpace space, std::vector<Edge> edges)
    : space_(std::move(space)), edges_(std::move(edges)) {
    for (const Edge& e : edges_)
        if (!is_valid_edge(space_, e))
            throw InputError("edge { " + format_edge(space_, e) + " } violates per-part uniformity");
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

bool Family::contains(const Edge& e) const {
    return std::binary_search(edges_.begin(), edges_.end(), e);
}

bool Family::insert(const Edge& e) {
    if (!is_valid_edge(space_, e))
        throw InputError("edge { " + format_edge(space_, e) + " } violates per-part uniformity");
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it != edges_.end() && *it == e) return false;
    edges_.insert(it, e);
    return true;
}

FamilyTuple::FamilyTuple(std::vector<Family> families) : families_(std::move(families)) {
    if (families_.empty()) throw InputError("family tuple needs at least one family");
    for (const Family& f : families_)
        if (!(f.space() == families_.front().space()))
            throw InputError("all families of a tuple must share one product space");
}

Family read_family(std::istream& in) {
    std::string line;
    // Header: first nonempty line.
    while (std::getline(in, line) && line.empty()) {}
    std::istringstream header(line);
    std::string tag;
    header >> tag;
    if (tag != "space") throw InputError("family file must start with a 'space' header line");
    int l = 0;
    if (!(header >> l) || l < 1) throw InputError("bad part count in family header");
    std::vector<int> n(l), k(l);
    for (int i = 0; i < l; ++i)
        if (!(header >> n[i] >> k[i]))
            throw InputError("family header needs n_i k_i for each of " + std::to_string(l) + " parts");
    std::string extra;
    if (header >> extra) throw InputError("trailing tokens in family header");
    ProductSpace space(n, k);

    std::vector<Edge> edges;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream tokens(line);
        std::string tok;
        Edge e;
        int count = 0;
        while (tokens >> tok) {
            Vertex v = parse_vertex(tok);
            if (!space.valid_vertex(v))
                throw InputError("line " + std::to_string(lineno) + ": vertex " + tok +
                                 " outside the declared space");
            int bit = space.bit_index(v);
            if (e.test(bit))
                throw InputError("line " + std::to_string(lineno) + ": duplicate vertex " + tok);
            e.set(bit);
            ++count;
        }
        if (!is_valid_edge(space, e))
            throw InputError("line " + std::to_string(lineno) +
                             ": edge has wrong per-part vertex counts");
        edges.push_back(e);
    }
    return Family(std::move(space), std::move(edges));
}

Family load_family(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open family file: " + path);
    return read_family(in);
}

void write_family(const Family& f, std::ostream& out) {
    const ProductSpace& space = f.space();
    out << "space " << space.part_count();
    for (int i = 1; i <= space.part_count(); ++i)
        out << ' ' << space.part_size(i) << ' ' << space.uniformity(i);
    out << '\n';
    for (const Edge& e : f.edges()) out << format_edge(space, e) << '\n';
}

void save_family(const Family& f, const std::string& path) {
    std::ofstream out(path, std::ios::binary); // LF line endings everywhere
    if (!out) throw InputError("cannot open output file: " + path);
    write_family(f, out);
}

} // namespace prodmatch
