#include "prodmatch/bounds.hpp"

#include <algorithm>
#include <numeric>

#include "prodmatch/errors.hpp"

namespace prodmatch {

namespace {

void validate_vectors(const std::vector<int>& n, const std::vector<int>& k) {
    if (n.empty() || n.size() != k.size())
        throw InputError("n and k must be non-empty lists of equal length");
    for (std::size_t i = 0; i < n.size(); ++i)
        if (k[i] < 1 || k[i] > n[i])
            throw InputError("part " + std::to_string(i + 1) +
                             " violates 1 <= k <= n: n=" + std::to_string(n[i]) +
                             " k=" + std::to_string(k[i]));
}

void validate_scalar(int n, int k) {
    if (k < 1 || k > n)
        throw InputError("1 <= k <= n required, got n=" + std::to_string(n) +
                         " k=" + std::to_string(k));
}

void require_nonnegative_s(int s) {
    if (s < 0) throw InputError("s must be non-negative");
}

std::vector<int> reordered(const std::vector<int>& v, const std::vector<int>& order) {
    std::vector<int> out;
    out.reserve(order.size());
    for (int i : order) out.push_back(v[static_cast<std::size_t>(i - 1)]);
    return out;
}

} // namespace

BigInt space_product(const std::vector<int>& n, const std::vector<int>& k) {
    BigInt total = 1;
    for (std::size_t i = 0; i < n.size(); ++i) total *= binom(n[i], k[i]);
    return total;
}

std::vector<int> canonical_part_order(const std::vector<int>& n, const std::vector<int>& k) {
    std::vector<int> order(n.size());
    std::iota(order.begin(), order.end(), 1);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        // n_a/k_a < n_b/k_b without division
        return static_cast<long long>(n[static_cast<std::size_t>(a - 1)]) * k[static_cast<std::size_t>(b - 1)] <
               static_cast<long long>(n[static_cast<std::size_t>(b - 1)]) * k[static_cast<std::size_t>(a - 1)];
    });
    return order;
}

BoundReport emc_bound(int n, int k, int s) {
    validate_scalar(n, k);
    require_nonnegative_s(s);
    if (static_cast<long long>(s + 1) * k > n)
        throw InputError("needs n >= (s+1)k, got n=" + std::to_string(n) +
                         " (s+1)k=" + std::to_string((s + 1) * k));
    BigInt clique = binom(static_cast<long long>(s + 1) * k - 1, k);
    BigInt cover = binom(n, k) - binom(n - s, k);
    BoundReport r;
    r.name = "emc";
    r.n = {n};
    r.k = {k};
    r.s = s;
    if (clique >= cover) {
        r.value = BigRat(clique);
        r.witness_branch = "clique";
    } else {
        r.value = BigRat(cover);
        r.witness_branch = "cover";
    }
    r.floor_value = floor_rat(r.value);
    return r;
}

BoundReport product_matching_bound(const std::vector<int>& n, const std::vector<int>& k, int s) {
    validate_vectors(n, k);
    require_nonnegative_s(s);
    BigInt best = -1;
    int best_part = 1;
    for (std::size_t i = 0; i < n.size(); ++i) {
        BigInt branch = binom(n[i], k[i]) - binom(n[i] - s, k[i]);
        for (std::size_t j = 0; j < n.size(); ++j)
            if (j != i) branch *= binom(n[j], k[j]);
        if (branch > best) {
            best = branch;
            best_part = static_cast<int>(i) + 1;
        }
    }
    BoundReport r;
    r.name = "product-matching";
    r.n = n;
    r.k = k;
    r.s = s;
    r.value = BigRat(best);
    r.floor_value = best;
    r.witness_part = best_part;
    return r;
}

BoundReport product_rainbow_bound(const std::vector<int>& n, const std::vector<int>& k, int s) {
    if (s < 1) throw InputError("rainbow bound needs s >= 1");
    BoundReport r = product_matching_bound(n, k, s - 1);
    r.name = "product-rainbow";
    r.s = s;
    return r;
}

BoundReport overlapping_sum_bound(int n, int k, int s, int m) {
    validate_scalar(n, k);
    require_nonnegative_s(s);
    if (static_cast<long long>(s + 1) * k > n)
        throw InputError("needs n >= (s+1)k, got n=" + std::to_string(n) +
                         " (s+1)k=" + std::to_string((s + 1) * k));
    if (m < s + 1)
        throw InputError("needs m >= s+1 families, got m=" + std::to_string(m));
    BigInt space_branch = BigInt(s) * binom(n, k);
    BigInt star_branch = BigInt(m) * s * binom(n - 1, k - 1);
    BoundReport r;
    r.name = "overlapping-sum";
    r.n = {n};
    r.k = {k};
    r.s = s;
    r.m = m;
    if (space_branch >= star_branch) {
        r.value = BigRat(space_branch);
        r.witness_branch = "space";
    } else {
        r.value = BigRat(star_branch);
        r.witness_branch = "star";
    }
    r.floor_value = floor_rat(r.value);
    return r;
}

BoundReport averaging_bound(const std::vector<int>& n, const std::vector<int>& k, int s) {
    validate_vectors(n, k);
    require_nonnegative_s(s);
    std::vector<int> order = canonical_part_order(n, k);
    int n1 = n[static_cast<std::size_t>(order[0] - 1)];
    int k1 = k[static_cast<std::size_t>(order[0] - 1)];
    if (static_cast<long long>(s + 1) * k1 > n1)
        throw InputError("needs (s+1) k_1 <= n_1 in canonical order, got (s+1)k_1=" +
                         std::to_string((s + 1) * k1) + " n_1=" + std::to_string(n1));
    BoundReport r;
    r.name = "averaging";
    r.n = n;
    r.k = k;
    r.s = s;
    r.part_order = order;
    r.value = BigRat(BigInt(s + 1) * k1, BigInt(n1)) * BigRat(space_product(n, k));
    r.floor_value = floor_rat(r.value);
    return r;
}

BoundReport rainbow_threshold_bound(const std::vector<int>& n, const std::vector<int>& k, int s) {
    validate_vectors(n, k);
    if (s < 1) throw InputError("rainbow threshold needs s >= 1");
    std::vector<int> order = canonical_part_order(n, k);
    int n1 = n[static_cast<std::size_t>(order[0] - 1)];
    int k1 = k[static_cast<std::size_t>(order[0] - 1)];
    if (3LL * s * k1 > n1)
        throw InputError("needs 3 s k_1 <= n_1 in canonical order, got 3sk_1=" +
                         std::to_string(3 * s * k1) + " n_1=" + std::to_string(n1));
    BigInt space = space_product(n, k);
    BoundReport r;
    r.name = "rainbow-threshold";
    r.n = n;
    r.k = k;
    r.s = s;
    r.part_order = order;
    r.value = BigRat(BigInt(6) * s * k1, BigInt(n1)) * BigRat(space);
    r.floor_value = floor_rat(r.value);
    r.vacuous = r.value > BigRat(space);
    return r;
}

BoundReport claim1_bound(const std::vector<int>& n, const std::vector<int>& k, int s) {
    validate_vectors(n, k);
    if (s < 1) throw InputError("claim1 bound needs s >= 1");
    std::vector<int> order = canonical_part_order(n, k);
    int n1 = n[static_cast<std::size_t>(order[0] - 1)];
    int k1 = k[static_cast<std::size_t>(order[0] - 1)];
    BigInt reduced = 1;
    bool clamped = false;
    for (std::size_t j = 0; j < n.size(); ++j) {
        BigInt b = binom(n[j] - s, k[j]);
        if (b == 0) clamped = true;
        reduced *= b;
    }
    BoundReport r;
    r.name = "claim1";
    r.n = n;
    r.k = k;
    r.s = s;
    r.part_order = order;
    r.clamped = clamped;
    r.value = BigRat(BigInt(6) * s * k1, BigInt(n1)) * BigRat(reduced);
    r.floor_value = floor_rat(r.value);
    r.vacuous = r.value > BigRat(reduced);
    return r;
}

CompositionMin composition_min(const std::vector<int>& n, const std::vector<int>& k, int total) {
    validate_vectors(n, k);
    if (total < 0) throw InputError("total must be non-negative");
    CompositionMin best;
    best.value = -1;
    for (std::size_t i = 0; i < n.size(); ++i) {
        BigInt vertex = binom(n[i] - total, k[i]);
        bool zero = vertex == 0 && total > 0;
        for (std::size_t j = 0; j < n.size(); ++j)
            if (j != i) vertex *= binom(n[j], k[j]);
        if (best.value < 0 || vertex < best.value) {
            best.value = vertex;
            best.argmin.assign(n.size(), 0);
            best.argmin[i] = total;
            best.clamped = zero;
        }
    }
    return best;
}

CompositionMin composition_min_enumerated(const std::vector<int>& n, const std::vector<int>& k,
                                          int total, std::uint64_t cap) {
    validate_vectors(n, k);
    if (total < 0) throw InputError("total must be non-negative");
    std::size_t parts = n.size();
    BigInt count = binom(total + static_cast<int>(parts) - 1, static_cast<int>(parts) - 1);
    if (count > BigInt(cap))
        throw ResourceError("composition enumeration needs " + to_decimal(count) +
                            " candidates, above the cap of " + std::to_string(cap));

    CompositionMin best;
    best.value = -1;
    std::vector<int> x(parts, 0);
    // First coordinate takes the most mass first, so (total,0,...,0) is the
    // first candidate and strict improvement reproduces the vertex-rule
    // tie-break (mass on the smallest part index).
    auto consider = [&]() {
        BigInt prod = 1;
        bool zero = false;
        for (std::size_t i = 0; i < parts; ++i) {
            BigInt b = binom(n[i] - x[i], k[i]);
            if (b == 0 && x[i] > 0) zero = true;
            prod *= b;
        }
        if (best.value < 0 || prod < best.value) {
            best.value = prod;
            best.argmin = x;
            best.clamped = zero;
        }
    };
    auto rec = [&](auto&& self, std::size_t i, int left) -> void {
        if (i + 1 == parts) {
            x[i] = left;
            consider();
            x[i] = 0;
            return;
        }
        for (int take = left; take >= 0; --take) {
            x[i] = take;
            self(self, i + 1, left - take);
        }
        x[i] = 0;
    };
    rec(rec, 0, total);
    return best;
}

RatioChainReport check_ratio_inequality(int n, int k, int s) {
    validate_scalar(n, k);
    require_nonnegative_s(s);
    if (static_cast<long long>(2 * s + 1) * k > n)
        throw InputError("needs n >= (2s+1)k, got n=" + std::to_string(n) +
                         " (2s+1)k=" + std::to_string((2 * s + 1) * k));
    RatioChainReport r;
    r.n = n;
    r.k = k;
    r.s = s;
    if (s == 0) {
        // Every term is 1; avoids 0/0 when n = k.
        r.set_ratio = r.power_term = r.linear_term = 1;
    } else {
        r.set_ratio = BigRat(binom(n - s, k), binom(n, k));
        BigInt den = n - k;
        r.power_term = BigRat(boost::multiprecision::pow(BigInt(n - k - s), static_cast<unsigned>(k)),
                              boost::multiprecision::pow(den, static_cast<unsigned>(k)));
        r.linear_term = BigRat(BigInt(n - k) - BigInt(k) * s, den);
    }
    r.link1 = r.set_ratio >= r.power_term;
    r.link2 = r.power_term >= r.linear_term;
    r.link3 = r.linear_term >= BigRat(1, 2);
    r.all_hold = r.link1 && r.link2 && r.link3;
    return r;
}

} // namespace prodmatch
