#include "cosetbound/bounds.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace cosetbound;

TEST_CASE("coset count bound") {
    CHECK(coset_count_bound(2, 1) == 3);
    CHECK(coset_count_bound(2, 4) == 81);
    CHECK(coset_count_bound(3, 1) == 8);
    CHECK_THROWS_AS(coset_count_bound(1, 1), std::domain_error);
    CHECK_THROWS_AS(coset_count_bound(2, 0), std::domain_error);
}

TEST_CASE("relation set bound") {
    CHECK(relation_set_bound(2, 1) == 1);
    CHECK(relation_set_bound(3, 1) == 3);
    for (int n = 2; n <= 8; ++n)
        for (int r = 1; r <= 6; ++r)
            CHECK(relation_set_bound(n + 1, r) == coset_count_bound(n, r));
    CHECK_THROWS_AS(relation_set_bound(1, 1), std::domain_error);
}

TEST_CASE("subspace count bound") {
    CHECK(subspace_count_bound(2, 1) == 3);
    CHECK(subspace_count_bound(3, 1) == 11);
    CHECK(subspace_count_bound(2, 2) == 9);
    CHECK_THROWS_AS(subspace_count_bound(2, -1), std::domain_error);
}

TEST_CASE("degenerate index subsets") {
    const auto three = degenerate_index_subsets(3);
    REQUIRE(three.size() == 3);
    CHECK(three[0] == std::vector<int>{1, 2});
    CHECK(three[1] == std::vector<int>{1, 3});
    CHECK(three[2] == std::vector<int>{2, 3});

    CHECK(degenerate_index_subsets(2).empty());
    CHECK(degenerate_index_subsets(4).size() == 10);

    for (int n = 2; n <= 10; ++n) {
        CHECK(degenerate_subset_count(n) == mpz_class((1L << n) - n - 2));
        if (n <= 8) CHECK(mpz_class(degenerate_index_subsets(n).size()) == degenerate_subset_count(n));
    }
}

TEST_CASE("subspace bound adds exactly the degenerate subset count") {
    for (int n = 2; n <= 8; ++n)
        for (int r = 1; r <= 6; ++r)
            CHECK(subspace_count_bound(n, r) - coset_count_bound(n, r) == degenerate_subset_count(n));
}

TEST_CASE("two-variable bound is 3^r") {
    mpz_class expected = 1;
    for (int r = 1; r <= 10; ++r) {
        expected *= 3;
        CHECK(coset_count_bound(2, r) == expected);
    }
}

TEST_CASE("bounds increase strictly in r") {
    for (int n = 2; n <= 8; ++n) {
        for (int r = 1; r <= 6; ++r) {
            CHECK(coset_count_bound(n, r + 1) > coset_count_bound(n, r));
            CHECK(relation_set_bound(n + 1, r + 1) > relation_set_bound(n + 1, r));
            CHECK(subspace_count_bound(n, r + 1) > subspace_count_bound(n, r));
        }
    }
}
