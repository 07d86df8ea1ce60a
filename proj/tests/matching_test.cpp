#include <doctest.h>

#include "prodmatch/errors.hpp"
#include "prodmatch/matching.hpp"

#include "test_support.hpp"

using namespace prodmatch;
using namespace prodmatch::test;

namespace {

// Cover family built by direct filtering, independent of the constructions
// module.
Family cover_by_filter(const ProductSpace& space, int part, int size) {
    BitVec mask;
    for (int j = 1; j <= size; ++j) mask.set(space.bit_index({part, j}));
    std::vector<Edge> hits;
    for (const Edge& e : all_edges(space))
        if (e.intersects(mask)) hits.push_back(e);
    return Family(space, std::move(hits));
}

} // namespace

TEST_CASE("matching number on pinned instances") {
    ProductSpace s46({4, 6}, {2, 2});
    CHECK(matching_number(Family(s46)).value == 0);
    CHECK(matching_number(Family(s46, all_edges(s46))).value == 2);

    ProductSpace s55({5, 5}, {1, 1});
    CHECK(matching_number(cover_by_filter(s55, 1, 2)).value == 2);
}

TEST_CASE("matching number equals the subset oracle on random families") {
    const std::vector<ProductSpace> spaces = {
        ProductSpace({4, 3}, {2, 1}),
        ProductSpace({3, 3}, {1, 1}),
        ProductSpace({6}, {2}),
        ProductSpace({2, 2, 3}, {1, 1, 1}),
    };
    std::mt19937_64 rng(20240517);
    for (int round = 0; round < 75; ++round) {
        for (const auto& space : spaces) {
            const std::size_t count = 1 + rng() % 12;
            Family family = random_test_family(space, count, rng);
            MatchingResult result = matching_number(family);
            CHECK(result.value == nu_by_subsets(family));
            CHECK_FALSE(result.capped);
            CHECK(verify_certificate(space, result.witness));
            CHECK(static_cast<int>(result.witness.edges.size()) == result.value);
            for (const Edge& e : result.witness.edges) CHECK(family.contains(e));
        }
    }
}

TEST_CASE("capped search stops early and reports it") {
    ProductSpace space({6, 6}, {1, 1});
    Family family(space, all_edges(space)); // nu = 6
    MatchingResult capped = matching_number(family, 2);
    CHECK(capped.capped);
    CHECK(capped.value == 3);
    CHECK(capped.witness.edges.size() == 3);

    MatchingResult uncapped = matching_number(family, 10); // cap above nu: exact
    CHECK_FALSE(uncapped.capped);
    CHECK(uncapped.value == 6);
}

TEST_CASE("rainbow matching on pinned tuples") {
    ProductSpace space({3, 3}, {1, 1});
    Family star = cover_by_filter(space, 1, 1);
    Edge e = make_edge(space, {{1, 1}, {2, 1}});
    Family single(space, {e});

    CHECK(has_rainbow_matching(FamilyTuple({single})).found);
    CHECK_FALSE(has_rainbow_matching(FamilyTuple({single, single})).found);
    CHECK_FALSE(has_rainbow_matching(FamilyTuple({star, star})).found);

    RainbowResult found = has_rainbow_matching(FamilyTuple({star, cover_by_filter(space, 1, 2)}));
    CHECK(found.found);
    CHECK(found.witness.edges.size() == 2);
    CHECK(found.witness.family_indices == std::vector<int>{1, 2});
    CHECK(verify_certificate(space, found.witness));
}

TEST_CASE("rainbow matching equals the product oracle on random tuples") {
    ProductSpace space({3, 3}, {1, 1});
    std::mt19937_64 rng(99);
    for (int round = 0; round < 200; ++round) {
        std::vector<Family> tuple;
        const int s = 2 + static_cast<int>(rng() % 2);
        for (int t = 0; t < s; ++t) tuple.push_back(random_test_family(space, 1 + rng() % 5, rng));
        RainbowResult result = has_rainbow_matching(FamilyTuple(tuple));
        CHECK(result.found == rainbow_by_product(tuple));
        if (result.found) {
            CHECK(verify_certificate(space, result.witness));
            for (std::size_t t = 0; t < tuple.size(); ++t)
                CHECK(tuple[t].contains(result.witness.edges[t]));
        }
    }
}

TEST_CASE("s-overlapping lists") {
    ProductSpace s4({4}, {2});
    Family full(s4, all_edges(s4));
    Edge e12 = make_edge(s4, {{1, 1}, {1, 2}});
    Edge e34 = make_edge(s4, {{1, 3}, {1, 4}});
    Edge e13 = make_edge(s4, {{1, 1}, {1, 3}});

    // all families equal to one star: any two edges meet
    ProductSpace s5({5}, {2});
    Family star = cover_by_filter(s5, 1, 1);
    CHECK(is_s_overlapping({star, star, star}, 1).holds);

    // three pairwise disjoint singletons: (e_1, e_2) is the counterexample
    ProductSpace s6({6}, {1});
    std::vector<Family> singles;
    for (int j = 1; j <= 3; ++j)
        singles.push_back(Family(s6, {make_edge(s6, {{1, j}})}));
    OverlapResult violated = is_s_overlapping(singles, 1);
    CHECK_FALSE(violated.holds);
    REQUIRE(violated.counterexample.has_value());
    CHECK(violated.counterexample->family_indices == std::vector<int>{1, 2});
    CHECK(verify_certificate(s6, *violated.counterexample));

    // three copies of the full space on 4 points: {1,2},{3,4} disjoint
    CHECK_FALSE(is_s_overlapping({full, full, full}, 1).holds);
    CHECK(is_s_overlapping({Family(s4, {e12}), Family(s4, {e13}), Family(s4, {e12})}, 1).holds);
    CHECK_FALSE(is_s_overlapping({Family(s4, {e12}), Family(s4, {e34}), Family(s4, {e12})}, 1).holds);

    CHECK_THROWS_AS(is_s_overlapping({full, full}, 2), InputError); // needs m >= s+1
    CHECK_THROWS_AS(is_s_overlapping({full}, 0), InputError);
}

TEST_CASE("certificate verification is independent of the searches") {
    ProductSpace space({4, 4}, {1, 1});
    Edge a = make_edge(space, {{1, 1}, {2, 1}});
    Edge b = make_edge(space, {{1, 2}, {2, 2}});

    CHECK(verify_certificate(space, {{a, b}, {}}));
    CHECK(verify_certificate(space, {{a, b}, {2, 1}}));
    CHECK_FALSE(verify_certificate(space, {{a, a}, {}}));       // overlapping edges
    CHECK_FALSE(verify_certificate(space, {{a, b}, {1, 1}}));   // repeated family index
    CHECK_FALSE(verify_certificate(space, {{a, b}, {1}}));      // wrong index count

    Edge bad;
    bad.set(space.bit_index({1, 1}));
    CHECK_FALSE(verify_certificate(space, {{bad}, {}}));        // not an edge: part 2 missing
}
