#include <doctest.h>

#include "prodmatch/constructions.hpp"
#include "prodmatch/errors.hpp"
#include "prodmatch/matching.hpp"
#include "prodmatch/shifting.hpp"

#include "test_support.hpp"

using namespace prodmatch;
using namespace prodmatch::test;

TEST_CASE("cover families: count, content, shiftedness") {
    ProductSpace space({4, 3}, {2, 1});

    CHECK(build_cover_family(space, {1, 0}).empty());
    CHECK(build_cover_family(space, {1, 4}).size() == all_edges(space).size());

    Family cover = build_cover_family(space, {1, 1});
    CHECK(cover.size() == 9); // [C(4,2)-C(3,2)]*C(3,1)

    // independent filter count
    BitVec mask;
    mask.set(space.bit_index({1, 1}));
    std::size_t count = 0;
    for (const Edge& e : all_edges(space))
        if (e.intersects(mask)) ++count;
    CHECK(cover.size() == count);
    for (const Edge& e : cover.edges()) CHECK(e.intersects(mask));

    CHECK(is_shifted(cover));
    CHECK(matching_number(cover).value == 1);

    CHECK_THROWS_AS(build_cover_family(space, {3, 1}), InputError); // no part 3
    CHECK_THROWS_AS(build_cover_family(space, {1, 5}), InputError); // size > n_1
}

TEST_CASE("cover sizes match the closed form across a grid") {
    for (int n1 = 1; n1 <= 6; ++n1)
        for (int k1 = 1; k1 <= std::min(3, n1); ++k1)
            for (int n2 = 1; n2 <= 5; ++n2)
                for (int s = 0; s <= n1; ++s) {
                    ProductSpace space({n1, n2}, {k1, 1});
                    unsigned long long expected =
                        (pascal(n1, k1) - pascal(n1 - s, k1)) * pascal(n2, 1);
                    CHECK(build_cover_family(space, {1, s}).size() == expected);
                }
}

TEST_CASE("clique families") {
    ProductSpace s6({6}, {2});
    Family tri = build_clique_family(s6, 1);
    CHECK(tri.size() == 3);
    CHECK(matching_number(tri).value == 1);

    ProductSpace s52({5}, {2});
    CHECK(build_clique_family(s52, 2).size() == 10);

    ProductSpace s53({5}, {3});
    Family big = build_clique_family(s53, 1);
    CHECK(big.size() == 10);
    CHECK(matching_number(big).value == 1);

    CHECK(build_clique_family(s52, 0).empty());
    CHECK_THROWS_AS(build_clique_family(ProductSpace({4}, {2}), 2), InputError); // needs 5 points
    CHECK_THROWS_AS(build_clique_family(ProductSpace({4, 3}, {2, 1}), 1), InputError); // one part only
}

TEST_CASE("random families are sized, deterministic, in range") {
    ProductSpace space({5, 4}, {2, 1});
    const std::size_t total = 40; // C(5,2)*C(4,1)

    CHECK(random_family(space, 0, 9).empty());
    CHECK(random_family(space, total, 9).size() == total);

    Family a = random_family(space, 17, 123);
    Family b = random_family(space, 17, 123);
    Family c = random_family(space, 17, 124);
    CHECK(a == b);
    CHECK(a.size() == 17);
    CHECK_FALSE(a == c); // overwhelmingly likely, and pinned by determinism

    CHECK_THROWS_AS(random_family(space, total + 1, 9), InputError);

    // a space too large to enumerate still samples small targets by rejection
    ProductSpace huge({30, 30}, {2, 2});
    Family sparse = random_family(huge, 5, 1, 100);
    CHECK(sparse.size() == 5);
    CHECK(sparse == random_family(huge, 5, 1, 100));
    CHECK_THROWS_AS(random_family(huge, 150, 1, 100), ResourceError);
}
