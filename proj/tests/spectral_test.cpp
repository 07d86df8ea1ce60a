#include <doctest.h>

#include <Eigen/Dense>

#include "prodmatch/bounds.hpp"
#include "prodmatch/errors.hpp"
#include "prodmatch/spectral.hpp"

#include "test_support.hpp"

using namespace prodmatch;
using namespace prodmatch::test;

namespace {

// Numeric oracle: eigendecomposition of the explicitly built disjointness
// adjacency, clustered into (value, multiplicity) pairs, descending.
std::vector<std::pair<double, int>> numeric_spectrum(const ProductSpace& space) {
    const auto edges = all_edges(space);
    const int size = static_cast<int>(edges.size());
    Eigen::MatrixXd adj = Eigen::MatrixXd::Zero(size, size);
    for (int i = 0; i < size; ++i)
        for (int j = i + 1; j < size; ++j)
            if (!edges[static_cast<std::size_t>(i)].intersects(edges[static_cast<std::size_t>(j)]))
                adj(i, j) = adj(j, i) = 1.0;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(adj);
    REQUIRE(solver.info() == Eigen::Success);

    std::vector<std::pair<double, int>> clusters;
    for (int i = size - 1; i >= 0; --i) {
        double v = solver.eigenvalues()(i);
        if (!clusters.empty() && std::abs(clusters.back().first - v) < 1e-6) {
            ++clusters.back().second;
        } else {
            clusters.emplace_back(v, 1);
        }
    }
    return clusters;
}

void check_formula_against_numeric(const SpectrumReport& report, const ProductSpace& space) {
    auto numeric = numeric_spectrum(space);
    REQUIRE(report.pairs.size() == numeric.size());
    for (std::size_t i = 0; i < numeric.size(); ++i) {
        CHECK(std::abs(report.pairs[i].first.convert_to<double>() - numeric[i].first) <= 1e-8);
        CHECK(report.pairs[i].second == numeric[i].second);
    }
}

void check_invariants(const SpectrumReport& report) {
    BigInt mult_sum = 0, trace = 0;
    for (const auto& [value, mult] : report.pairs) {
        mult_sum += mult;
        trace += value * mult;
    }
    CHECK(mult_sum == report.vertex_count);
    CHECK(trace == 0);
    CHECK(report.pairs.front().first == report.degree);
    CHECK(std::is_sorted(report.pairs.rbegin(), report.pairs.rend(),
                         [](const auto& a, const auto& b) { return a.first < b.first; }));
}

} // namespace

TEST_CASE("pinned spectra") {
    SpectrumReport petersen = kneser_spectrum(5, 2);
    REQUIRE(petersen.pairs.size() == 3);
    CHECK(petersen.pairs[0] == std::pair<BigInt, BigInt>{3, 1});
    CHECK(petersen.pairs[1] == std::pair<BigInt, BigInt>{1, 5});
    CHECK(petersen.pairs[2] == std::pair<BigInt, BigInt>{-2, 4});
    CHECK(petersen.lambda == 2);

    SpectrumReport k7 = kneser_spectrum(7, 1); // complete graph
    REQUIRE(k7.pairs.size() == 2);
    CHECK(k7.pairs[0] == std::pair<BigInt, BigInt>{6, 1});
    CHECK(k7.pairs[1] == std::pair<BigInt, BigInt>{-1, 6});

    // n = 2k: three disjoint edges, spectrum folds to {1:3, -1:3}
    SpectrumReport pm = kneser_spectrum(4, 2);
    REQUIRE(pm.pairs.size() == 2);
    CHECK(pm.pairs[0] == std::pair<BigInt, BigInt>{1, 3});
    CHECK(pm.pairs[1] == std::pair<BigInt, BigInt>{-1, 3});

    // n < 2k: empty graph
    SpectrumReport empty = kneser_spectrum(3, 2);
    CHECK(empty.degenerate);
    REQUIRE(empty.pairs.size() == 1);
    CHECK(empty.pairs[0] == std::pair<BigInt, BigInt>{0, 3});

    CHECK_THROWS_AS(kneser_spectrum(3, 4), InputError);
}

TEST_CASE("kneser formulas match the numeric oracle up to C(n,k) = 64") {
    for (int n = 1; n <= 12; ++n)
        for (int k = 1; k <= n; ++k) {
            if (binom(n, k) > 64) continue;
            SpectrumReport report = kneser_spectrum(n, k);
            check_invariants(report);
            check_formula_against_numeric(report, ProductSpace({n}, {k}));
        }
}

TEST_CASE("product spectra: pinned values and the lambda ratio identity") {
    SpectrumReport p = product_graph_spectrum({5, 4}, {2, 1});
    CHECK(p.degree == 9);
    CHECK(p.vertex_count == 40);
    CHECK(p.lambda == 6);
    REQUIRE(p.lambda_ratio_identity.has_value());
    CHECK(*p.lambda_ratio_identity); // 6*(5-2) == 2*9

    SpectrumReport k44 = product_graph_spectrum({4, 4}, {1, 1});
    REQUIRE(k44.pairs.size() == 3);
    CHECK(k44.pairs[0] == std::pair<BigInt, BigInt>{9, 1});
    CHECK(k44.pairs[1] == std::pair<BigInt, BigInt>{1, 9});
    CHECK(k44.pairs[2] == std::pair<BigInt, BigInt>{-3, 6});
    CHECK(k44.lambda == 3);

    // single part: identical to the kneser spectrum
    SpectrumReport one = product_graph_spectrum({6}, {2});
    SpectrumReport direct = kneser_spectrum(6, 2);
    CHECK(one.pairs == direct.pairs);
    CHECK(one.lambda == direct.lambda);

    // disconnected cube: top eigenvalue repeats, lambda = degree
    SpectrumReport cube = product_graph_spectrum({2, 2, 2}, {1, 1, 1});
    CHECK(cube.degree == 1);
    CHECK(cube.pairs.front().second == 4);
    CHECK(cube.lambda == 1);
}

TEST_CASE("product formulas match the numeric oracle up to 64 vertices") {
    const std::vector<std::pair<std::vector<int>, std::vector<int>>> cases = {
        {{5, 4}, {2, 1}}, {{4, 4}, {1, 1}}, {{3, 3, 3}, {1, 1, 1}},
        {{4, 3}, {2, 1}}, {{5, 2}, {1, 1}}, {{4, 2, 2}, {1, 1, 1}},
        {{6, 2}, {3, 1}},
    };
    for (const auto& [n, k] : cases) {
        REQUIRE(space_product(n, k) <= 64);
        SpectrumReport report = product_graph_spectrum(n, k);
        check_invariants(report);
        check_formula_against_numeric(report, ProductSpace(n, k));
    }
}

TEST_CASE("mixing inequality: equality case and exhaustive subsets") {
    ProductSpace petersen({5}, {2});

    // the independent 4-set {12,13,14,15}: both sides are exactly 12/5
    std::vector<Edge> star;
    for (int j = 2; j <= 5; ++j) star.push_back(make_edge(petersen, {{1, 1}, {1, j}}));
    MixingReport eq = mixing_audit(Family(petersen, star));
    CHECK(eq.lhs == BigRat(12, 5));
    CHECK(eq.rhs == BigRat(12, 5));
    CHECK(eq.holds);
    CHECK(eq.edges_within == 0);

    MixingReport none = mixing_audit(Family(petersen));
    CHECK(none.holds);
    CHECK(none.lhs == 0);
    CHECK(none.rhs == 0);

    MixingReport all = mixing_audit(Family(petersen, all_edges(petersen)));
    CHECK(all.holds);
    CHECK(all.lhs == 0);
    CHECK(all.rhs == 0);
}

TEST_CASE("mixing holds on random subsets, exact arithmetic") {
    const std::vector<ProductSpace> spaces = {
        ProductSpace({5}, {2}),
        ProductSpace({7}, {3}),
        ProductSpace({5, 4}, {2, 1}),
    };
    std::mt19937_64 rng(2718);
    for (const auto& space : spaces) {
        const std::size_t total = all_edges(space).size();
        for (int round = 0; round < 60; ++round) {
            Family subset = random_test_family(space, rng() % (total + 1), rng);
            MixingReport report = mixing_audit(subset);
            CHECK(report.holds);

            // recount e(G[S]) independently
            BigInt pairs = 0;
            auto edges = subset.edges();
            for (std::size_t i = 0; i < edges.size(); ++i)
                for (std::size_t j = i + 1; j < edges.size(); ++j)
                    if (!edges[i].intersects(edges[j])) ++pairs;
            CHECK(report.edges_within == pairs);
        }
    }
}

TEST_CASE("mixing respects a forced lambda and thread count") {
    ProductSpace space({5, 4}, {2, 1});
    std::mt19937_64 rng(11);
    Family subset = random_test_family(space, 20, rng);

    MixingReport one = mixing_audit(subset, std::nullopt, 1);
    MixingReport four = mixing_audit(subset, std::nullopt, 4);
    CHECK(one.edges_within == four.edges_within);
    CHECK(one.lhs == four.lhs);
    CHECK(one.holds == four.holds);

    // lambda = 0 turns the bound into |e - expectation| <= 0; the Petersen
    // star has e = 0 but a positive expectation, so it must fail
    ProductSpace petersen({5}, {2});
    std::vector<Edge> star;
    for (int j = 2; j <= 5; ++j) star.push_back(make_edge(petersen, {{1, 1}, {1, j}}));
    MixingReport forced = mixing_audit(Family(petersen, star), BigInt(0));
    CHECK(forced.lambda == 0);
    CHECK(forced.rhs == 0);
    CHECK(forced.lhs == BigRat(12, 5));
    CHECK_FALSE(forced.holds);
}
