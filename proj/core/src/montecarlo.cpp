#include "prodmatch/montecarlo.hpp"

#include <algorithm>
#include <numeric>
#include <thread>
#include <unordered_map>

#include "prodmatch/errors.hpp"

namespace prodmatch {

namespace {

int floor_ratio(const ProductSpace& space, int part) {
    return space.part_size(part) / space.uniformity(part);
}

void require_canonical_first_part(const ProductSpace& space) {
    for (int p = 2; p <= space.part_count(); ++p)
        if (static_cast<long long>(space.part_size(1)) * space.uniformity(p) >
            static_cast<long long>(space.part_size(p)) * space.uniformity(1))
            throw InputError("part 1 must minimize n/k; reorder the parts");
}

/// cell_of[bit] = index of the side edge owning this vertex, -1 if none.
void fill_cells(const std::vector<Edge>& side, std::vector<int>& cell_of) {
    std::fill(cell_of.begin(), cell_of.end(), -1);
    for (std::size_t i = 0; i < side.size(); ++i)
        side[i].for_each_bit([&](int bit) { cell_of[static_cast<std::size_t>(bit)] = static_cast<int>(i); });
}

/// Counts family edges of the form a_i u b_j by scanning the family once:
/// an edge contributes iff its vertices map to a single row and a single
/// column (cardinalities then force exact equality per part). Optionally
/// records the incidence rows.
std::uint64_t incidence_count(const Family& family, const std::vector<int>& row_of,
                              const std::vector<int>& col_of, std::vector<BitVec>* rows) {
    std::uint64_t count = 0;
    for (const Edge& e : family.edges()) {
        int row = -1, col = -1;
        bool ok = true;
        e.for_each_bit([&](int bit) {
            if (!ok) return;
            auto ub = static_cast<std::size_t>(bit);
            if (row_of[ub] >= 0) {
                if (row == -1) row = row_of[ub];
                else if (row != row_of[ub]) ok = false;
            } else if (col_of[ub] >= 0) {
                if (col == -1) col = col_of[ub];
                else if (col != col_of[ub]) ok = false;
            } else {
                ok = false;
            }
        });
        if (ok && row >= 0 && col >= 0) {
            ++count;
            if (rows) (*rows)[static_cast<std::size_t>(row)].set(col);
        }
    }
    return count;
}

/// Runs fn(trial, rng) for every trial index, striped over `threads`
/// workers. Streams are keyed by trial index, so the outcome of each trial
/// is independent of the thread layout.
template <typename Fn>
void for_each_trial(std::uint64_t trials, std::uint64_t seed, int threads, Fn&& fn) {
    int workers = std::max(1, threads);
    if (workers == 1) {
        for (std::uint64_t t = 0; t < trials; ++t) {
            Xoshiro256StarStar rng(seed, t);
            fn(t, rng);
        }
        return;
    }
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (std::uint64_t t = static_cast<std::uint64_t>(w); t < trials;
                 t += static_cast<std::uint64_t>(workers)) {
                Xoshiro256StarStar rng(seed, t);
                fn(t, rng);
            }
        });
    }
    for (auto& th : pool) th.join();
}

} // namespace

std::vector<Edge> sample_matching(const ProductSpace& space, int first_part, int last_part,
                                  int m, Xoshiro256StarStar& rng) {
    if (first_part < 1 || last_part > space.part_count() || first_part > last_part)
        throw InputError("invalid part range");
    if (m < 0) throw InputError("m must be non-negative");
    for (int p = first_part; p <= last_part; ++p)
        if (m > floor_ratio(space, p))
            throw InputError("m = " + std::to_string(m) + " exceeds floor(n/k) of part " +
                             std::to_string(p));

    std::vector<Edge> edges(static_cast<std::size_t>(m));
    std::vector<int> positions;
    for (int p = first_part; p <= last_part; ++p) {
        int k = space.uniformity(p);
        positions.resize(static_cast<std::size_t>(space.part_size(p)));
        std::iota(positions.begin(), positions.end(), 1);
        rng.shuffle_prefix(positions, static_cast<std::size_t>(m) * static_cast<std::size_t>(k));
        for (int t = 0; t < m; ++t)
            for (int u = 0; u < k; ++u)
                edges[static_cast<std::size_t>(t)].set(
                    space.bit_index({p, positions[static_cast<std::size_t>(t * k + u)]}));
    }
    return edges;
}

BipartiteGraph build_bipartite(const ProductSpace& space, const std::vector<Edge>& a,
                               const std::vector<Edge>& b, const Family& family) {
    if (!(family.space() == space)) throw InputError("family lives in a different space");
    if (a.empty() || b.empty()) throw InputError("both matchings must be non-empty");

    // The a-side must fill a proper prefix of the parts, the b-side the rest.
    int parts = space.part_count();
    int split = 0;
    for (int p = 1; p <= parts; ++p) {
        int ca = (a[0] & space.part_mask(p)).count();
        if (ca == space.uniformity(p) && split == p - 1)
            split = p;
        else if (ca != 0)
            throw InputError("a-side edges must exactly fill a prefix of the parts");
    }
    if (split < 1 || split >= parts)
        throw InputError("a-side edges must fill a proper prefix of the parts");
    for (int p = 1; p <= parts; ++p) {
        int want_a = p <= split ? space.uniformity(p) : 0;
        int want_b = p <= split ? 0 : space.uniformity(p);
        for (const Edge& e : a)
            if ((e & space.part_mask(p)).count() != want_a)
                throw InputError("a-side edge with wrong per-part vertex counts");
        for (const Edge& e : b)
            if ((e & space.part_mask(p)).count() != want_b)
                throw InputError("b-side edge with wrong per-part vertex counts");
    }
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j)
            if (a[i].intersects(a[j])) throw InputError("a-side edges are not disjoint");
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = i + 1; j < b.size(); ++j)
            if (b[i].intersects(b[j])) throw InputError("b-side edges are not disjoint");

    std::vector<int> row_of(static_cast<std::size_t>(space.vertex_count()));
    std::vector<int> col_of(static_cast<std::size_t>(space.vertex_count()));
    fill_cells(a, row_of);
    fill_cells(b, col_of);

    BipartiteGraph g;
    g.rows.assign(a.size(), BitVec{});
    g.x = incidence_count(family, row_of, col_of, &g.rows);
    return g;
}

AveragingReport averaging_check(const Family& family, std::uint64_t trials,
                                std::uint64_t seed, int threads) {
    const ProductSpace& space = family.space();
    if (space.part_count() < 2) throw InputError("averaging check needs at least 2 parts");
    if (trials < 2) throw InputError("need at least 2 trials");

    AveragingReport r;
    r.trials = trials;
    r.m = floor_ratio(space, 2);
    for (int p = 3; p <= space.part_count(); ++p)
        if (r.m > floor_ratio(space, p))
            throw InputError("m = floor(n_2/k_2) must fit every later part; "
                             "reorder parts 2..l by ascending n/k");

    // Restriction counts: |F(B)| for every distinct tail B = e restricted to
    // parts 2..l, computed once.
    BitVec rest_mask;
    for (int p = 2; p <= space.part_count(); ++p) rest_mask |= space.part_mask(p);
    std::unordered_map<BitVec, std::uint64_t> slice_count;
    for (const Edge& e : family.edges()) ++slice_count[e & rest_mask];

    BigInt tail_product = 1;
    for (int p = 2; p <= space.part_count(); ++p)
        tail_product *= binom(space.part_size(p), space.uniformity(p));
    r.exact_slice_mean = BigRat(BigInt(family.size()), tail_product);

    int s = matching_number(family).value;
    r.nu_value = s;
    int n1 = space.part_size(1), k1 = space.uniformity(1);
    r.sum_threshold = BigInt(r.m + 1) * s * binom(n1 - 1, k1 - 1);
    r.sum_checked = r.m >= s + 1 && n1 >= (s + 1) * k1 && n1 <= (r.m + 1) * k1;

    int workers = std::max(1, threads);
    std::vector<BigInt> part_sum(static_cast<std::size_t>(workers), BigInt(0));
    std::vector<BigInt> part_sum2(static_cast<std::size_t>(workers), BigInt(0));
    std::vector<std::uint64_t> part_viol(static_cast<std::size_t>(workers), 0);

    for_each_trial(trials, seed, workers, [&](std::uint64_t t, Xoshiro256StarStar& rng) {
        std::vector<Edge> b = sample_matching(space, 2, space.part_count(), r.m, rng);
        std::uint64_t sum = 0;
        for (const Edge& bj : b) {
            auto it = slice_count.find(bj);
            if (it != slice_count.end()) sum += it->second;
        }
        std::size_t w = static_cast<std::size_t>(t % static_cast<std::uint64_t>(workers));
        part_sum[w] += sum;
        part_sum2[w] += BigInt(sum) * sum;
        if (r.sum_checked && BigInt(sum) > r.sum_threshold) ++part_viol[w];
    });

    BigInt total = 0, total2 = 0;
    for (auto& v : part_sum) total += v;
    for (auto& v : part_sum2) total2 += v;
    for (auto v : part_viol) r.sum_violations += v;

    BigInt t_big(trials);
    r.sample_mean = BigRat(total, t_big);
    r.sample_slice_mean = BigRat(total, t_big * r.m);
    r.sample_variance = (BigRat(total2) - BigRat(total * total, t_big)) / BigRat(t_big - 1);
    BigRat target_sum = BigRat(BigInt(r.m)) * r.exact_slice_mean;
    BigRat diff = r.sample_mean - target_sum;
    r.mean_within_band = diff * diff <= BigRat(25) * r.sample_variance / BigRat(t_big);
    r.pass = r.mean_within_band && (!r.sum_checked || r.sum_violations == 0);
    return r;
}

ConcentrationReport concentration_run(const Family& family, int s, std::uint64_t trials,
                                      std::uint64_t seed, int threads) {
    const ProductSpace& space = family.space();
    if (space.part_count() < 2) throw InputError("concentration run needs at least 2 parts");
    if (s < 1) throw InputError("s must be positive");
    if (trials < 2) throw InputError("need at least 2 trials");
    if (family.empty()) throw InputError("family must be non-empty");
    require_canonical_first_part(space);
    int n1 = space.part_size(1), k1 = space.uniformity(1);
    if (3LL * s * k1 > n1)
        throw InputError("needs 3 s k_1 <= n_1, got 3sk_1 = " + std::to_string(3 * s * k1) +
                         " n_1 = " + std::to_string(n1));

    ConcentrationReport r;
    r.s = s;
    r.trials = trials;
    r.m = floor_ratio(space, 1);
    r.alpha = BigRat(BigInt(family.size()), space.edge_space_size());
    r.samples.assign(trials, 0);

    long long tail_cut = static_cast<long long>(s - 1) * r.m;
    int workers = std::max(1, threads);
    std::vector<std::uint64_t> part_sum(static_cast<std::size_t>(workers), 0);
    std::vector<std::uint64_t> part_sum2(static_cast<std::size_t>(workers), 0);
    std::vector<std::uint64_t> part_tail(static_cast<std::size_t>(workers), 0);

    for_each_trial(trials, seed, workers, [&](std::uint64_t t, Xoshiro256StarStar& rng) {
        std::vector<Edge> a = sample_matching(space, 1, 1, r.m, rng);
        std::vector<Edge> b = sample_matching(space, 2, space.part_count(), r.m, rng);
        std::vector<int> row_of(static_cast<std::size_t>(space.vertex_count()));
        std::vector<int> col_of(static_cast<std::size_t>(space.vertex_count()));
        fill_cells(a, row_of);
        fill_cells(b, col_of);
        std::uint64_t x = incidence_count(family, row_of, col_of, nullptr);
        r.samples[t] = static_cast<std::uint32_t>(x);
        std::size_t w = static_cast<std::size_t>(t % static_cast<std::uint64_t>(workers));
        part_sum[w] += x;
        part_sum2[w] += x * x;
        if (static_cast<long long>(x) <= tail_cut) ++part_tail[w];
    });

    BigInt total = 0, total2 = 0;
    for (auto v : part_sum) total += v;
    for (auto v : part_sum2) total2 += v;
    for (auto v : part_tail) r.tail_count += v;
    r.sum_x = total;
    r.sum_x2 = total2;

    BigInt t_big(trials);
    BigInt m_big(r.m);
    r.sample_mean = BigRat(total, t_big);
    r.sample_variance = (BigRat(total2) - BigRat(total * total, t_big)) / BigRat(t_big - 1);
    r.expected_mean = r.alpha * BigRat(m_big * m_big);
    r.variance_bound = BigRat(3) * r.alpha * BigRat(m_big * m_big * m_big);
    r.variance_within_bound = r.sample_variance <= r.variance_bound;
    BigRat diff = r.sample_mean - r.expected_mean;
    r.mean_within_band = diff * diff <= BigRat(25) * r.sample_variance / BigRat(t_big);

    r.tail_freq = BigRat(BigInt(r.tail_count), t_big);
    r.tail_threshold = BigRat(1, s);
    r.tail_applicable = r.alpha >= BigRat(BigInt(6) * s * k1, BigInt(n1));
    if (!r.tail_applicable) {
        r.tail_verdict = "n/a";
    } else {
        BigRat se2 = r.tail_freq * (BigRat(1) - r.tail_freq) / BigRat(t_big);
        BigRat gap = r.tail_freq - r.tail_threshold;
        if (gap > 0 && gap * gap > BigRat(25) * se2)
            r.tail_verdict = "fail";
        else if (gap < 0 && gap * gap > BigRat(25) * se2)
            r.tail_verdict = "clear";
        else
            r.tail_verdict = "inconclusive";
    }
    r.pass = r.mean_within_band && r.tail_verdict != "fail";
    return r;
}

RainbowRunReport rainbow_run(const FamilyTuple& tuple, std::uint64_t trials,
                             std::uint64_t seed, int threads) {
    const ProductSpace& space = tuple.space();
    if (space.part_count() < 2) throw InputError("rainbow run needs at least 2 parts");
    if (trials < 1) throw InputError("need at least 1 trial");
    require_canonical_first_part(space);

    RainbowRunReport r;
    r.s = tuple.count();
    r.trials = trials;
    r.m = floor_ratio(space, 1);
    r.threshold = BigInt(r.s - 1) * r.m;
    r.clear_count_per_family.assign(static_cast<std::size_t>(r.s), 0);

    int workers = std::max(1, threads);
    struct Partial {
        std::vector<std::uint64_t> clear;
        std::uint64_t all_clear = 0;
        std::uint64_t found = 0;
        std::uint64_t failures = 0;
        std::uint64_t best_trial = ~std::uint64_t{0};
        MatchingCertificate best_cert;
    };
    std::vector<Partial> partial(static_cast<std::size_t>(workers));
    for (auto& p : partial) p.clear.assign(static_cast<std::size_t>(r.s), 0);

    std::uint64_t threshold64 = static_cast<std::uint64_t>(r.s - 1) * static_cast<std::uint64_t>(r.m);

    for_each_trial(trials, seed, workers, [&](std::uint64_t t, Xoshiro256StarStar& rng) {
        Partial& mine = partial[static_cast<std::size_t>(t % static_cast<std::uint64_t>(workers))];
        std::vector<Edge> a = sample_matching(space, 1, 1, r.m, rng);
        std::vector<Edge> b = sample_matching(space, 2, space.part_count(), r.m, rng);
        std::vector<int> row_of(static_cast<std::size_t>(space.vertex_count()));
        std::vector<int> col_of(static_cast<std::size_t>(space.vertex_count()));
        fill_cells(a, row_of);
        fill_cells(b, col_of);

        std::vector<std::vector<BitVec>> rows(static_cast<std::size_t>(r.s));
        bool all_clear = true;
        for (int f = 0; f < r.s; ++f) {
            rows[static_cast<std::size_t>(f)].assign(a.size(), BitVec{});
            std::uint64_t x = incidence_count(tuple.at(f), row_of, col_of,
                                              &rows[static_cast<std::size_t>(f)]);
            if (x > threshold64)
                ++mine.clear[static_cast<std::size_t>(f)];
            else
                all_clear = false;
        }
        if (!all_clear) return;
        ++mine.all_clear;

        // Extract a rainbow matching: one cell per family, rows and columns
        // all distinct. Must exist on a clear trial.
        std::vector<std::pair<int, int>> picked(static_cast<std::size_t>(r.s));
        BitVec used_rows, used_cols;
        auto extract = [&](auto&& self, int f) -> bool {
            if (f == r.s) return true;
            for (int i = 0; i < r.m; ++i) {
                if (used_rows.test(i)) continue;
                bool hit = false;
                rows[static_cast<std::size_t>(f)][static_cast<std::size_t>(i)].for_each_bit(
                    [&](int j) {
                        if (hit || used_cols.test(j)) return;
                        used_rows.set(i);
                        used_cols.set(j);
                        picked[static_cast<std::size_t>(f)] = {i, j};
                        if (self(self, f + 1)) {
                            hit = true;
                            return;
                        }
                        used_rows.reset(i);
                        used_cols.reset(j);
                    });
                if (hit) return true;
            }
            return false;
        };
        if (extract(extract, 0)) {
            ++mine.found;
            if (t < mine.best_trial) {
                mine.best_trial = t;
                MatchingCertificate cert;
                for (int f = 0; f < r.s; ++f) {
                    auto [i, j] = picked[static_cast<std::size_t>(f)];
                    cert.edges.push_back(a[static_cast<std::size_t>(i)] |
                                         b[static_cast<std::size_t>(j)]);
                    cert.family_indices.push_back(f + 1);
                }
                mine.best_cert = std::move(cert);
            }
        } else {
            ++mine.failures;
        }
    });

    std::uint64_t best_trial = ~std::uint64_t{0};
    for (auto& p : partial) {
        for (int f = 0; f < r.s; ++f)
            r.clear_count_per_family[static_cast<std::size_t>(f)] +=
                p.clear[static_cast<std::size_t>(f)];
        r.all_clear_trials += p.all_clear;
        r.certificates_found += p.found;
        r.extraction_failures += p.failures;
        if (p.best_trial < best_trial) {
            best_trial = p.best_trial;
            r.sample_certificate = p.best_cert;
        }
    }
    r.pass = r.extraction_failures == 0;
    return r;
}

} // namespace prodmatch
