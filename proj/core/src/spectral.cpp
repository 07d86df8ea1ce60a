#include "prodmatch/spectral.hpp"

#include <algorithm>
#include <map>
#include <thread>

#include "prodmatch/errors.hpp"

namespace prodmatch {

namespace {

SpectrumReport finalize(std::map<BigInt, BigInt, std::greater<BigInt>> merged,
                        BigInt vertex_count, bool degenerate) {
    SpectrumReport r;
    r.vertex_count = std::move(vertex_count);
    r.degenerate = degenerate;
    for (auto& [value, mult] : merged)
        if (mult != 0) r.pairs.emplace_back(value, mult);
    r.degree = r.pairs.front().first;
    // Second-largest absolute eigenvalue: the degree itself when its
    // eigenspace has dimension > 1 (disconnected graph), otherwise the
    // largest |value| over the remaining eigenvalues.
    if (r.pairs.front().second > 1) {
        r.lambda = r.degree;
    } else {
        r.lambda = 0;
        for (std::size_t i = 1; i < r.pairs.size(); ++i) {
            BigInt a = abs(r.pairs[i].first);
            if (a > r.lambda) r.lambda = a;
        }
    }
    return r;
}

std::map<BigInt, BigInt, std::greater<BigInt>> kneser_pairs(int n, int k, bool& degenerate) {
    std::map<BigInt, BigInt, std::greater<BigInt>> merged;
    if (n < 2 * k) {
        // No two k-subsets are disjoint: the empty graph, all eigenvalues 0.
        degenerate = true;
        merged[0] = binom(n, k);
        return merged;
    }
    for (int i = 0; i <= k; ++i) {
        BigInt value = binom(n - k - i, k - i);
        if (i % 2 == 1) value = -value;
        BigInt mult = binom(n, i) - binom(n, i - 1);
        merged[value] += mult;
    }
    return merged;
}

} // namespace

SpectrumReport kneser_spectrum(int n, int k) {
    if (k < 1 || k > n)
        throw InputError("1 <= k <= n required, got n=" + std::to_string(n) +
                         " k=" + std::to_string(k));
    bool degenerate = false;
    auto merged = kneser_pairs(n, k, degenerate);
    return finalize(std::move(merged), binom(n, k), degenerate);
}

SpectrumReport product_graph_spectrum(const std::vector<int>& n, const std::vector<int>& k) {
    if (n.empty() || n.size() != k.size())
        throw InputError("n and k must be non-empty lists of equal length");

    std::map<BigInt, BigInt, std::greater<BigInt>> acc;
    acc[1] = 1;
    bool degenerate = false;
    BigInt vertices = 1;
    for (std::size_t p = 0; p < n.size(); ++p) {
        if (k[p] < 1 || k[p] > n[p])
            throw InputError("part " + std::to_string(p + 1) + " violates 1 <= k <= n");
        vertices *= binom(n[p], k[p]);
        auto part = kneser_pairs(n[p], k[p], degenerate);
        std::map<BigInt, BigInt, std::greater<BigInt>> next;
        for (const auto& [av, am] : acc)
            for (const auto& [bv, bm] : part)
                next[av * bv] += am * bm;
        acc = std::move(next);
    }
    SpectrumReport r = finalize(std::move(acc), vertices, degenerate);

    // Identity check for lambda against (k_1/(n_1-k_1)) * degree, stated for
    // the part minimizing n/k when every part satisfies n > 2k.
    bool applicable = true;
    std::size_t min_part = 0;
    for (std::size_t p = 0; p < n.size(); ++p) {
        if (n[p] <= 2 * k[p]) applicable = false;
        if (static_cast<long long>(n[p]) * k[min_part] <
            static_cast<long long>(n[min_part]) * k[p])
            min_part = p;
    }
    if (applicable) {
        BigInt n1 = n[min_part], k1 = k[min_part];
        r.lambda_ratio_identity = r.lambda * (n1 - k1) == k1 * r.degree;
    }
    return r;
}

MixingReport mixing_audit(const Family& subset, std::optional<BigInt> lambda, int threads) {
    const ProductSpace& space = subset.space();
    MixingReport r;
    r.vertex_count = space.edge_space_size();
    r.degree = 1;
    for (int p = 1; p <= space.part_count(); ++p)
        r.degree *= binom(space.part_size(p) - space.uniformity(p), space.uniformity(p));
    r.lambda = lambda ? *lambda
                      : product_graph_spectrum(space.part_sizes(), space.uniformities()).lambda;
    r.subset_size = subset.size();

    // e(G[S]): unordered disjoint pairs inside the subset.
    auto edges = subset.edges();
    std::uint64_t within = 0;
    int workers = std::max(1, threads);
    if (workers == 1 || edges.size() < 256) {
        for (std::size_t a = 0; a < edges.size(); ++a)
            for (std::size_t b = a + 1; b < edges.size(); ++b)
                if (!edges[a].intersects(edges[b])) ++within;
    } else {
        std::vector<std::uint64_t> partial(static_cast<std::size_t>(workers), 0);
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                std::uint64_t local = 0;
                for (std::size_t a = static_cast<std::size_t>(w); a < edges.size();
                     a += static_cast<std::size_t>(workers))
                    for (std::size_t b = a + 1; b < edges.size(); ++b)
                        if (!edges[a].intersects(edges[b])) ++local;
                partial[static_cast<std::size_t>(w)] = local;
            });
        }
        for (auto& t : pool) t.join();
        for (auto v : partial) within += v; // exact integer sum: order-free
    }
    r.edges_within = within;

    // lhs = |e - D |S|^2 / (2N)|, rhs = lambda |S| (N - |S|) / (2N).
    BigRat expected(r.degree * r.subset_size * r.subset_size, 2 * r.vertex_count);
    r.lhs = BigRat(r.edges_within) - expected;
    if (r.lhs < 0) r.lhs = -r.lhs;
    r.rhs = BigRat(r.lambda * r.subset_size * (r.vertex_count - r.subset_size),
                   2 * r.vertex_count);
    r.holds = r.lhs <= r.rhs;
    return r;
}

} // namespace prodmatch
